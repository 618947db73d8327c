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

from functools import lru_cache
from typing import List, Sequence, Tuple

from scipy.optimize import minimize_scalar

from .models import Ball, DiscreteMeasure, SpikeMeasure

from ..constants import (
    SPIKE_SEPARATION, LAMBDA_SEARCH_STEPS, LAMBDA_SEARCH_REACH,
    LAMBDA_TOLERANCE
)
from ..decorators import validate_kernel_order
from ..exceptions import InvalidBall, NotConverged


logger = logging.getLogger("HuovinenLab")


def density(mu: DiscreteMeasure, ball: Ball) -> Tuple[float, float]:
    """Mass of the open ball and its density mass / (2 r).

    Parameters
    ----------
    mu : DiscreteMeasure
    ball : Ball

    Returns
    -------
    Tuple[float, float]
    """

    mass = mu.mass_in(ball)
    return mass, mass / (2.0 * ball.radius)


def resolved_densities(mu: DiscreteMeasure, center: complex, radii,
                       gap: float) -> np.ndarray:
    """Densities of B(center, r) for every r, each atom spread over an
    interval of length gap along the radius.

    On a uniform quadrature of step gap of a line through the centre
    the mass is exactly 2r, where open ball counts swing by one atom.
    A non-positive gap falls back to open ball counts.

    Parameters
    ----------
    mu : DiscreteMeasure
    center : complex
    radii : np.ndarray
        Positive radii.
    gap : float
        Quadrature step, usually the median nearest neighbour gap.

    Returns
    -------
    np.ndarray
    """

    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    distances = np.abs(mu.positions - center)
    order = np.argsort(distances, kind="stable")
    distances, weights = distances[order], mu.weights[order]

    mass = np.concatenate(([0.0], np.cumsum(weights)))
    if gap <= 0:
        inside = np.searchsorted(distances, radii, side="left")
        return mass[inside] / (2.0 * radii)

    moment = np.concatenate(([0.0], np.cumsum(weights * distances)))
    full = np.searchsorted(distances, radii - gap / 2, side="right")
    partial = np.searchsorted(distances, radii + gap / 2, side="left")

    spread = (radii + gap / 2) * (mass[partial] - mass[full]) \
        - (moment[partial] - moment[full])
    return (mass[full] + spread / gap) / (2.0 * radii)


def density_profile(mu: DiscreteMeasure, x: complex,
                    scales: Sequence[float]) -> List[Tuple[float, float]]:
    """Densities of B(x, r) for every r in scales.

    Raises
    ------
    InvalidBall
        For non-positive scales.
    """

    scales = np.asarray(scales, dtype=float)
    if np.any(scales <= 0):
        raise InvalidBall("Profile scales must be positive")

    distances = np.abs(mu.positions - x)
    return [
        (float(r), float(np.sum(mu.weights[distances < r]) / (2.0 * r)))
        for r in scales
    ]


def density_ratio_spike(nu: SpikeMeasure) -> float:
    """Density ratio of an m-spike, which is m.
    """

    return float(nu.m)


def spike_density_ratio_search(nu: SpikeMeasure,
                               radii: Sequence[float],
                               offsets: Sequence[float]) -> float:
    """Sup of density quotients over support centred balls on a grid.

    Centers sit on every line at the given signed offsets from the
    vertex. Densities are exact chord lengths, no quadrature.

    Parameters
    ----------
    nu : SpikeMeasure
    radii : Sequence[float]
    offsets : Sequence[float]

    Returns
    -------
    float
    """

    densities = [
        nu.ball_density(Ball(nu.vertex + offset * line.direction, radius))
        for line in nu.lines
        for offset in offsets
        for radius in radii
    ]
    return float(max(densities) / min(densities))


def _best_radius(direction: complex, distance: float, separation: float,
                 steps: int, reach: float) -> float:
    """Largest admissible t for x = distance on the first ray.

    z = s * direction runs over one line, t(z) = min(1 - |z - x|,
    separation * |s|).
    """

    def admissible(s):
        return np.minimum(
            1.0 - np.abs(s * direction - distance),
            separation * np.abs(s)
        )

    grid = np.linspace(-(reach + 1.0), reach + 1.0, 8 * steps + 1)
    if abs(direction.imag) < 1e-15:
        grid = np.union1d(grid, [distance, -distance])

    values = admissible(grid)
    best = int(np.argmax(values))
    lower = grid[max(best - 1, 0)]
    upper = grid[min(best + 1, len(grid) - 1)]

    refined = minimize_scalar(
        lambda s: -float(admissible(s)), bounds=(lower, upper),
        method="bounded", options={"xatol": 1e-12}
    )
    return float(max(values[best], -refined.fun))


def _lambda_on_grid(m: int, steps: int, reach: float) -> float:
    if m == 1:
        # No other line to avoid, B(x, t) itself works for t -> r.
        return 1.0

    separation = np.sin(np.pi / m) / SPIKE_SEPARATION
    directions = [np.exp(1j * n * np.pi / m) for n in range(m)]

    worst = np.inf
    for distance in np.linspace(0.0, reach, steps + 1):
        best = max(
            _best_radius(direction, distance, separation, steps, reach)
            for direction in directions
        )
        worst = min(worst, best)

    return float(worst)


def lambda_constant(nu: SpikeMeasure, steps: int = LAMBDA_SEARCH_STEPS,
                    reach: float = LAMBDA_SEARCH_REACH,
                    tolerance: float = LAMBDA_TOLERANCE,
                    strict: bool = False) -> float:
    """Numeric lambda of a spike measure.

    Scale invariance reduces the search to r = 1 with x on the first
    ray at distance d in [0, reach] from the vertex.

    Parameters
    ----------
    nu : SpikeMeasure
    steps : int, optional
        Grid size for d, the line offsets use 8 times as many.
    reach : float, optional
    tolerance : float, optional
        Allowed relative change when the grid is doubled.
    strict : bool, optional
        Raise instead of logging when the check fails.

    Returns
    -------
    float
        In (0, 1].

    Raises
    ------
    NotConverged
    """

    coarse = _lambda_on_grid(nu.m, steps, reach)
    fine = _lambda_on_grid(nu.m, 2 * steps, reach)

    if abs(fine - coarse) > tolerance * fine:
        if strict:
            raise NotConverged(
                "lambda changed from {} to {} on refinement".format(
                    coarse, fine
                )
            )
        logger.warning(
            "lambda for m={} not converged: {} vs {}".format(
                nu.m, coarse, fine
            )
        )

    return fine


@lru_cache(maxsize=None)
@validate_kernel_order
def lambda_k(k: int, steps: int = LAMBDA_SEARCH_STEPS) -> float:
    """Min of lambda over the m-spikes with m dividing k, cached per
    (k, steps).
    """

    return min(
        lambda_constant(SpikeMeasure(0, 0, m, k), steps=steps)
        for m in range(1, k + 1) if k % m == 0
    )


@validate_kernel_order
def density_ratio_k(k: int) -> float:
    """Sup of the density ratio over the k-spike family.
    """

    return float(max(m for m in range(1, k + 1) if k % m == 0))


def pushforward_projection(mu: DiscreteMeasure,
                           subset=None) -> DiscreteMeasure:
    """Projection of mu restricted to subset onto the real axis.

    Parameters
    ----------
    mu : DiscreteMeasure
    subset : array-like, optional
        Boolean mask or indices, by default every atom.

    Returns
    -------
    DiscreteMeasure
        Atoms on the real axis, mass preserved.
    """

    if subset is None:
        subset = np.arange(len(mu))

    restricted = mu.restrict(subset)
    return DiscreteMeasure(
        restricted.positions.real.astype(np.complex128),
        restricted.weights
    )
