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

from typing import List, Optional, Tuple

from .models import Partition, StoppingRegion

from ..constants import RESOLUTION_FACTOR
from ..exceptions import InvalidMeasure
from ..measure.density import density
from ..measure.models import Ball, DiscreteMeasure, Line
from ..misc import nearest_neighbor_gap
from ..settings import StopParams, TransportSettings
from ..transport.search import (
    CONE, alpha_line, line_lower_bound, line_tolerance
)


logger = logging.getLogger("HuovinenLab")


def closed_ball_indices(mu: DiscreteMeasure, ball: Ball) -> np.ndarray:
    return np.nonzero(
        np.abs(mu.positions - ball.center) <= ball.radius
    )[0]


def resolution_floor(mu: DiscreteMeasure, indices: np.ndarray) -> float:
    """Smallest meaningful stopping scale for the atoms of F.

    Raises
    ------
    InvalidMeasure
        When F has fewer than two distinct atoms.
    """

    gap = nearest_neighbor_gap(mu.positions[indices])
    if gap <= 0:
        raise InvalidMeasure("F needs two distinct atoms for a floor")
    return RESOLUTION_FACTOR * gap


def in_s_total(mu: DiscreteMeasure, x: complex, t: float,
               params: StopParams,
               settings: TransportSettings = None,
               hint: float = None) -> Tuple[bool, Optional[Line]]:
    """Whether (x, t) is dense and flat in the cone around the real axis.

    Parameters
    ----------
    mu : DiscreteMeasure
    x : complex
    t : float
    params : StopParams
    settings : TransportSettings, optional
    hint : float, optional
        Angle tried first, see alpha_line.

    Returns
    -------
    Tuple[bool, Optional[Line]]
        Membership and the witness line when a member.
    """

    ball = Ball(x, t)
    _, ball_density = density(mu, ball)
    if ball_density < params.delta:
        return False, None

    stop_below = params.epsilon + line_tolerance(mu, ball, settings)
    if line_lower_bound(mu, ball, -params.alpha, params.alpha) \
            > stop_below:
        return False, None

    result = alpha_line(mu, ball, CONE, cone=(params.alpha, 0.0),
                        settings=settings, stop_below=stop_below,
                        hint=hint)

    if result.within(params.epsilon):
        return True, result.witness
    return False, None


def membership_profile(mu: DiscreteMeasure, x: complex,
                       t_grid: np.ndarray, params: StopParams,
                       settings: TransportSettings = None,
                       hint: float = None
                       ) -> Tuple[np.ndarray, List[Optional[Line]]]:
    members, witnesses = [], []
    for t in t_grid:
        member, witness = in_s_total(mu, x, t, params, settings, hint)
        members.append(member)
        witnesses.append(witness)
        if member:
            hint = witness.angle

    return np.array(members, dtype=bool), witnesses


def bisected_profile(mu: DiscreteMeasure, x: complex, t_grid: np.ndarray,
                     params: StopParams,
                     settings: TransportSettings = None,
                     hint: float = None
                     ) -> Tuple[np.ndarray, List[Optional[Line]]]:
    """membership_profile assuming the members form a top segment of
    the grid.

    Only about log2 of the grid scales are tested. The rest of the row
    follows from the order, witnesses exist for the tested members only.
    """

    witnesses: List[Optional[Line]] = [None] * len(t_grid)

    lower, upper = -1, len(t_grid)
    while upper - lower > 1:
        middle = (lower + upper) // 2
        member, witness = in_s_total(mu, x, t_grid[middle], params,
                                     settings, hint)
        if member:
            upper = middle
            witnesses[middle] = witness
            hint = witness.angle
        else:
            lower = middle

    members = np.arange(len(t_grid)) >= upper
    return members, witnesses


def height_from_profile(t_grid: np.ndarray,
                        members: np.ndarray) -> Tuple[float, bool]:
    """Grid sup of the non-member scales and whether the profile is
    monotone.

    All members means h = 0, the scale lies below the floor.
    """

    outside = np.nonzero(~members)[0]
    if len(outside) == 0:
        return 0.0, True

    last = outside[-1]
    monotone = bool(np.all(~members[:last + 1]))
    return float(t_grid[last]), monotone


def stopping_height(mu: DiscreteMeasure, x: complex, params: StopParams,
                    t_grid: np.ndarray = None,
                    settings: TransportSettings = None,
                    bisect: bool = False) -> float:
    """h(x), the largest grid scale at which (x, t) is not in S_total.

    Parameters
    ----------
    mu : DiscreteMeasure
    x : complex
    params : StopParams
    t_grid : np.ndarray, optional
        by default params.t_grid over the floor of mu.
    settings : TransportSettings, optional
    bisect : bool, optional
        Assume monotone membership and bisect the grid instead of
        sampling all of it, by default False.

    Returns
    -------
    float
        0 when every grid scale is a member.
    """

    if t_grid is None:
        t_grid = params.t_grid(
            resolution_floor(mu, np.arange(len(mu)))
        )

    if not bisect:
        members, _ = membership_profile(mu, x, t_grid, params, settings)
        height, monotone = height_from_profile(t_grid, members)
        if not monotone:
            logger.warning(
                "Non monotone membership at {}, using largest non member"
                .format(x)
            )
        return height

    members, _ = bisected_profile(mu, x, t_grid, params, settings)
    return height_from_profile(t_grid, members)[0]


def build_region(mu: DiscreteMeasure, params: StopParams,
                 F: np.ndarray = None, base: Ball = None,
                 settings: TransportSettings = None,
                 bisect: bool = True) -> StoppingRegion:
    """Samples S_total over F in the closed base ball.

    Parameters
    ----------
    mu : DiscreteMeasure
        Normalized so the base line is the real axis.
    params : StopParams
    F : np.ndarray, optional
        Atom indices, by default every atom of the closed 10 B0.
    base : Ball, optional
        by default B(0, 1)
    settings : TransportSettings, optional
    bisect : bool, optional
        Bisect every row assuming monotone membership, by default True.
        False tests every scale and reports non monotone rows.

    Returns
    -------
    StoppingRegion
    """

    if base is None:
        base = Ball(0, 1)

    if F is None:
        F = closed_ball_indices(mu, base.scaled(10))
    F = np.asarray(F, dtype=int)

    inside = np.abs(mu.positions[F] - base.center) <= base.radius
    centers = F[inside]

    t_grid = params.t_grid(resolution_floor(mu, F))
    profile = bisected_profile if bisect else membership_profile

    rows, witnesses, heights, monotone = [], [], [], []
    # Neighbouring atoms share their flat direction, so the last
    # witness starts the next search.
    hint = None
    for index in centers:
        members, lines = profile(
            mu, mu.positions[index], t_grid, params, settings, hint
        )
        height, ordered = height_from_profile(t_grid, members)

        found = [line for line in lines if line is not None]
        if found:
            hint = found[0].angle

        rows.append(members)
        witnesses.append(lines)
        heights.append(height)
        monotone.append(ordered)

    if not all(monotone):
        logger.warning("{} atoms with non monotone membership".format(
            len(monotone) - sum(monotone)
        ))

    logger.info("Sampled S_total on {} atoms over {} scales".format(
        len(centers), len(t_grid)
    ))

    return StoppingRegion(
        mu, centers, params, t_grid,
        np.array(rows, dtype=bool).reshape(len(centers), len(t_grid)),
        witnesses, np.array(heights), np.array(monotone, dtype=bool),
        base
    )


def dist_functions(region: StoppingRegion, plane_points,
                   line_points) -> Tuple[np.ndarray, np.ndarray]:
    """d on plane_points and D on line_points.
    """

    return region.d(plane_points), region.D(line_points)


def lipschitz_excess(points, values) -> float:
    """Largest |f(a) - f(b)| - |a - b| over sampled pairs.

    Non-positive for 1-Lipschitz samples.
    """

    points = np.asarray(points)
    values = np.asarray(values, dtype=float)
    if len(values) < 2:
        return 0.0

    excess = np.abs(values[:, None] - values[None, :]) \
        - np.abs(points[:, None] - points[None, :])
    return float(np.max(excess))


def partition_F(region: StoppingRegion,
                settings: TransportSettings = None) -> Partition:
    """Splits F in the closed base ball into Z, F1 and F2.

    Z has h = 0, F1 is sparse at scale h and F2 the rest. F2 atoms
    without an epsilon close line outside the alpha cone are reported
    as leaked, they stay in F2.
    """

    params = region.params
    mu = region.mu

    z, f1, f2, leaked = [], [], [], []
    for row, index in enumerate(region.centers):
        height = region.heights[row]
        if height == 0:
            z.append(index)
            continue

        x = mu.positions[index]
        ball = Ball(x, height)
        _, ball_density = density(mu, ball)
        if ball_density <= params.delta:
            f1.append(index)
            continue

        f2.append(index)

        stop_below = params.epsilon + line_tolerance(mu, ball, settings)
        if line_lower_bound(mu, ball, params.alpha, np.pi - params.alpha) \
                > stop_below:
            leaked.append(index)
            continue

        result = alpha_line(
            mu, ball, CONE,
            cone=(np.pi / 2 - params.alpha, np.pi / 2),
            settings=settings, stop_below=stop_below
        )
        if not result.within(params.epsilon):
            leaked.append(index)

    if leaked:
        logger.warning("{} F2 atoms without an off cone flat line".format(
            len(leaked)
        ))

    return Partition(mu, z, f1, f2, leaked)


def height_report(region: StoppingRegion) -> dict:
    """Largest height against the sqrt(epsilon) / alpha scale.
    """

    params = region.params
    scale = float(np.sqrt(params.epsilon) / params.alpha)
    largest = float(np.max(region.heights)) if len(region.heights) else 0.0

    return {
        "max_height": largest,
        "height_scale": scale,
        "height_ratio": largest / scale
    }
