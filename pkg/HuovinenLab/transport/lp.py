# -*- coding: utf-8 -*-

"""
GNU General Public License v3.0 (GPL v3)
Copyright (c) 2020-2021 WardPearce
Permission is hereby granted, free of charge, to any person obtaining a
copy of this software and associated documentation files (the "Software"),
to deal in the Software without restriction, including without limitation
the rights to use, copy, modify, merge, publish, distribute, sublicense,
and/or sell copies of the Software, and to permit persons to whom the
Software is furnished to do so, subject to the following conditions:
The above copyright notice and this permission notice shall be included in
all copies or substantial portions of the Software.
THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
DEALINGS IN THE SOFTWARE.
"""


import logging
import numpy as np

from typing import Tuple

from scipy.optimize import linprog
from scipy.sparse import coo_matrix
from scipy.spatial import cKDTree

from .models import AlphaResult, STATUS_OPTIMAL, STATUS_DEGENERATE

from ..constants import PHI_SUPPORT
from ..exceptions import AtomLimitExceeded, SolverFailure
from ..measure.models import Ball, DiscreteMeasure
from ..misc import nearest_neighbor_gap
from ..resources import Config
from ..settings import TransportSettings


logger = logging.getLogger("HuovinenLab")

# Pairs checked per block when looking for violated Lipschitz rows.
VIOLATION_BLOCK = 256
VIOLATION_TOL = 1e-9
INITIAL_NEIGHBORS = 8
MAX_ROUNDS = 60


def phi(t):
    """Test cutoff: 1 on [0, 3), 4 - t on [3, 4), 0 from 4 on.
    """

    value = np.clip(PHI_SUPPORT - np.asarray(t, dtype=float), 0.0, 1.0)
    return float(value) if np.ndim(value) == 0 else value


def phi_weights(mu: DiscreteMeasure, ball: Ball) -> np.ndarray:
    return phi(np.abs(mu.positions - ball.center) / ball.radius) \
        * mu.weights


def normalization_c(mu: DiscreteMeasure, nu: DiscreteMeasure,
                    ball: Ball) -> float:
    """Ratio of the phi-weighted masses, 0 when nu has none.
    """

    denominator = float(np.sum(phi_weights(nu, ball)))
    if denominator <= 0:
        return 0.0
    return float(np.sum(phi_weights(mu, ball))) / denominator


def quadrature_tolerance(mu: DiscreteMeasure, ball: Ball,
                         spacing: float = None) -> float:
    """Bound on how much a quadrature of step spacing moves alpha.

    Every atom stands for mass spread over about spacing, and the
    integrands phi * f are 2/r Lipschitz, so with the 1/r
    normalization the error is at most spacing * (phi-mass) / r^2.
    Without an explicit spacing the median nearest neighbour gap
    inside the window is used.
    """

    window = mu.restrict_ball(ball.scaled(PHI_SUPPORT))
    if len(window) == 0:
        return 0.0

    if spacing is None:
        spacing = nearest_neighbor_gap(window.positions)

    return float(
        spacing * np.sum(phi_weights(window, ball)) / ball.radius ** 2
    )


def _initial_pairs(points: np.ndarray) -> set:
    count = len(points)
    neighbors = min(count, INITIAL_NEIGHBORS + 1)
    tree = cKDTree(np.column_stack((points.real, points.imag)))
    _, indices = tree.query(
        np.column_stack((points.real, points.imag)), k=neighbors
    )

    pairs = set()
    for i, row in enumerate(np.atleast_2d(indices)):
        for j in row:
            if j != i and j < count:
                pairs.add((min(i, j), max(i, j)))
    return pairs


def _violations(points: np.ndarray, values: np.ndarray, radius: float,
                known: set) -> set:
    found = set()
    for start in range(0, len(points), VIOLATION_BLOCK):
        block = slice(start, start + VIOLATION_BLOCK)
        gaps = np.abs(points[block, None] - points[None, :]) / radius
        excess = np.abs(values[block, None] - values[None, :]) - gaps

        rows, columns = np.nonzero(excess > VIOLATION_TOL)
        for i, j in zip(rows + start, columns):
            if i < j and (i, j) not in known:
                found.add((int(i), int(j)))
    return found


def _pair_matrix(points: np.ndarray, pairs: list, radius: float):
    first = np.array([pair[0] for pair in pairs])
    second = np.array([pair[1] for pair in pairs])
    count = len(pairs)

    rows = np.concatenate((np.arange(count), np.arange(count),
                           count + np.arange(count),
                           count + np.arange(count)))
    columns = np.concatenate((first, second, first, second))
    data = np.concatenate((np.ones(count), -np.ones(count),
                           -np.ones(count), np.ones(count)))

    matrix = coo_matrix(
        (data, (rows, columns)), shape=(2 * count, len(points))
    ).tocsr()
    gaps = np.abs(points[first] - points[second]) / radius
    return matrix, np.concatenate((gaps, gaps))


def solve_lipschitz_lp(points: np.ndarray, gains: np.ndarray,
                       bounds: np.ndarray,
                       radius: float) -> Tuple[float, str]:
    """max sum gains * f over 1/radius-Lipschitz f with |f| <= bounds.

    Lipschitz rows are generated lazily: the program starts from
    nearest neighbour pairs and every violated pair of the current
    optimum is added until none remains, so the optimum is the one of
    the program with all pairs.

    Parameters
    ----------
    points : np.ndarray
        Distinct complex positions.
    gains : np.ndarray
    bounds : np.ndarray
        Non-negative box bounds.
    radius : float

    Returns
    -------
    Tuple[float, str]
        Optimal value and solver status.

    Raises
    ------
    SolverFailure
    """

    if len(points) == 0:
        return 0.0, STATUS_OPTIMAL

    if len(points) == 1:
        return float(abs(gains[0]) * bounds[0]), STATUS_OPTIMAL

    box = np.column_stack((-bounds, bounds))
    pairs = _initial_pairs(points)

    for round_ in range(MAX_ROUNDS):
        ordered = sorted(pairs)
        matrix, limits = _pair_matrix(points, ordered, radius)
        result = linprog(
            -gains, A_ub=matrix, b_ub=limits, bounds=box,
            method=Config.solver
        )

        if result.x is None:
            raise SolverFailure(
                "LP returned no solution: {}".format(result.message)
            )

        status = STATUS_OPTIMAL if result.status == 0 \
            else STATUS_DEGENERATE
        logger.debug("LP round {} with {} pairs: {}".format(
            round_, len(ordered), result.message
        ))

        missing = _violations(points, result.x, radius, pairs)
        if not missing:
            return max(float(-result.fun), 0.0), status

        pairs |= missing

    logger.warning(
        "Lipschitz LP still violated after {} rounds".format(MAX_ROUNDS)
    )
    return max(float(-result.fun), 0.0), STATUS_DEGENERATE


def alpha_pair(mu: DiscreteMeasure, nu: DiscreteMeasure, ball: Ball,
               settings: TransportSettings = None,
               tolerance: float = 0.0) -> AlphaResult:
    """Transportation coefficient of mu against nu on a ball.

    Every atom of mu and nu inside B(z, 4r) carries one variable. The
    feasible set is symmetric under f -> -f, so the largest signed
    objective equals the largest absolute one. Positions whose net
    gain is zero are dropped, a 1/r-Lipschitz function on the rest
    always extends to them.

    Parameters
    ----------
    mu : DiscreteMeasure
    nu : DiscreteMeasure
    ball : Ball
    settings : TransportSettings, optional
    tolerance : float, optional
        Quadrature tolerance reported with the result.

    Returns
    -------
    AlphaResult

    Raises
    ------
    AtomLimitExceeded
    SolverFailure
    """

    if settings is None:
        settings = TransportSettings()

    window = ball.scaled(PHI_SUPPORT)
    mu_in = mu.restrict_ball(window)
    nu_in = nu.restrict_ball(window)

    c = normalization_c(mu_in, nu_in, ball)

    positions = np.concatenate((mu_in.positions, nu_in.positions))
    signed = np.concatenate((mu_in.weights, -c * nu_in.weights))

    points, inverse = np.unique(positions, return_inverse=True)
    if len(points) > settings.n_max:
        raise AtomLimitExceeded(
            "{} atoms in B(z, 4r), N_max is {}".format(
                len(points), settings.n_max
            )
        )

    net = np.bincount(inverse.ravel(), weights=signed,
                      minlength=len(points))
    distances = np.abs(points - ball.center)
    gains = phi(distances / ball.radius) * net / ball.radius

    active = gains != 0
    value, status = solve_lipschitz_lp(
        points[active], gains[active],
        (PHI_SUPPORT * ball.radius - distances[active]) / ball.radius,
        ball.radius
    )

    return AlphaResult(
        value=value,
        normalization=c,
        status=status,
        tolerance=tolerance,
        ball=ball,
        atoms=len(points)
    )
