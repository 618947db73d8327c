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

from .models import StoppingRegion, WhitneyCover, WhitneyPiece

from ..constants import (
    WHITNEY_RATIO, WHITNEY_LOWER, WHITNEY_UPPER, WHITNEY_BALL_BUDGET,
    WHITNEY_OVERLAP_MAX
)
from ..exceptions import ResolutionTooCoarse
from ..measure.models import Ball
from ..misc import smootherstep
from ..settings import TransportSettings
from ..transport.search import CONE, alpha_line, line_tolerance


logger = logging.getLogger("HuovinenLab")


def _overlap(pieces, grid: np.ndarray) -> int:
    if not pieces:
        return 0

    counts = np.zeros(len(grid), dtype=int)
    for piece in pieces:
        left, right = piece.dilated(2)
        counts += (grid >= left) & (grid < right)
    return int(np.max(counts))


def _neighbors(pieces) -> int:
    if not pieces:
        return 0

    bounds = np.array([piece.dilated(10) for piece in pieces])
    meets = (bounds[:, None, 0] < bounds[None, :, 1]) \
        & (bounds[None, :, 0] < bounds[:, None, 1])
    return int(np.max(np.sum(meets, axis=1)))


def _violations(pieces, grid: np.ndarray, values: np.ndarray,
                step: float) -> int:
    count = 0
    for piece in pieces:
        left, right = piece.dilated(10)
        inside = (grid >= left) & (grid < right)
        sampled = values[inside]
        count += int(np.sum(
            (sampled < WHITNEY_LOWER * piece.length - step)
            | (sampled > WHITNEY_UPPER * piece.length + step)
        ))
    return count


def whitney_cover(line_grid, D_values, domain: Tuple[float, float] = None,
                  levels: int = 40) -> WhitneyCover:
    """Maximal dyadic intervals with diam I <= inf_I D / 20.

    The infimum over an interval is the smallest sample in it minus the
    grid step, D being 1-Lipschitz. Points with D below 40 steps cannot
    be resolved and stay uncovered, they border pi(Z).

    Parameters
    ----------
    line_grid : np.ndarray
        Uniform, ascending.
    D_values : np.ndarray
    domain : Tuple[float, float], optional
        by default [-10, 10], the projection of 10 B0.
    levels : int, optional
        Finest dyadic level.

    Returns
    -------
    WhitneyCover

    Raises
    ------
    ResolutionTooCoarse
        When no positive sample is resolved.
    """

    if domain is None:
        domain = (-10.0, 10.0)

    line_grid = np.asarray(line_grid, dtype=float)
    D_values = np.asarray(D_values, dtype=float)

    inside = (line_grid >= domain[0]) & (line_grid <= domain[1])
    grid, values = line_grid[inside], D_values[inside]
    step = float(np.mean(np.diff(line_grid)))

    positive = values > 0
    resolved = values >= 2 * WHITNEY_RATIO * step
    if np.any(positive) and not np.any(resolved):
        raise ResolutionTooCoarse(
            "Grid step {:.3e} exceeds min positive D / 40".format(step)
        )

    unresolved = int(np.sum(positive & ~resolved))
    if unresolved:
        logger.debug("{} samples too close to pi(Z) for the grid".format(
            unresolved
        ))

    coarsest = -int(np.ceil(np.log2(domain[1] - domain[0])))
    pending = resolved.copy()
    found = {}

    for level in range(coarsest, levels + 1):
        if not np.any(pending):
            break

        length = 2.0 ** -level
        cells = np.floor(grid * 2.0 ** level).astype(np.int64)
        unique, inverse = np.unique(cells, return_inverse=True)

        lowest = np.full(len(unique), np.inf)
        np.minimum.at(lowest, inverse, values)

        fits = length <= (lowest - step) / WHITNEY_RATIO
        accepted = pending & fits[inverse]

        for cell in np.unique(cells[accepted]):
            found[(level, int(cell))] = WhitneyPiece(
                float(cell) * length, length
            )
        pending &= ~accepted

    pieces = sorted(found.values(), key=lambda piece: piece.left)

    cover = WhitneyCover(
        pieces,
        _overlap(pieces, grid),
        _neighbors(pieces),
        _violations(pieces, grid, values, step)
    )

    if cover.overlap > WHITNEY_OVERLAP_MAX:
        logger.warning("Whitney overlap {} above {}".format(
            cover.overlap, WHITNEY_OVERLAP_MAX
        ))
    if cover.violations:
        logger.warning("{} samples outside 10 diam <= D <= 60 diam".format(
            cover.violations
        ))

    return cover


def interval_ball_line(piece: WhitneyPiece, region: StoppingRegion,
                       settings: TransportSettings = None) -> WhitneyPiece:
    """Fills the ball B_i and line D_i of a Whitney interval.

    Prefers the smallest S ball with t >= diam I within the budget whose
    line is already known. Otherwise the nearest S pair is inflated to
    radius diam I and fitted with a cone line. Pieces beyond the budget
    are left without a line.
    """

    positions, scales, rows = region.pairs()
    params = region.params

    diam = piece.length
    budget = WHITNEY_BALL_BUDGET * diam
    piece.budget = budget

    if len(scales) == 0:
        return piece

    projected = positions.real
    gaps = np.maximum(np.maximum(piece.left - projected,
                                 projected - piece.right), 0.0)
    cost = gaps + scales

    known = np.nonzero((cost <= budget) & (scales >= diam))[0]
    for best in known[np.argsort(scales[known], kind="stable")]:
        line = region.witness(rows[best], scales[best])
        if line is not None:
            piece.ball = Ball(positions[best], scales[best])
            piece.line = line
            piece.flat = True
            return piece

    best = int(np.argmin(cost))
    if cost[best] > budget:
        logger.debug("Interval at {} beyond the ball budget".format(
            piece.left
        ))
        return piece

    ball = Ball(positions[best], max(scales[best], diam))
    stop_below = params.epsilon + line_tolerance(region.mu, ball, settings)
    result = alpha_line(region.mu, ball, CONE, cone=(params.alpha, 0.0),
                        settings=settings, stop_below=stop_below)

    piece.ball = ball
    piece.line = result.witness
    piece.flat = result.within(params.epsilon)
    return piece


def fit_cover(cover: WhitneyCover, region: StoppingRegion,
              settings: TransportSettings = None) -> WhitneyCover:
    for piece in cover:
        interval_ball_line(piece, region, settings)

    excluded = len(cover) - len(cover.included)
    if excluded:
        logger.warning("{} Whitney intervals excluded".format(excluded))

    return cover


def bump(piece: WhitneyPiece, points) -> np.ndarray:
    """1 on I, C2 quintic ramps down to 0 at the ends of 2I.
    """

    points = np.asarray(points, dtype=float)
    outside = np.maximum(np.maximum(piece.left - points,
                                    points - piece.right), 0.0)
    return smootherstep(1.0 - outside / (piece.length / 2))


def partition_of_unity(pieces, points) -> Tuple[np.ndarray, np.ndarray]:
    """psi_i = beta_i / sum beta_j sampled at points.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        (pieces x points) values and the covered mask.
    """

    points = np.asarray(points, dtype=float)
    if not pieces:
        return np.zeros((0, len(points))), np.zeros(len(points), dtype=bool)

    raw = np.array([bump(piece, points) for piece in pieces])
    total = np.sum(raw, axis=0)
    covered = total > 0

    psi = np.divide(raw, total, out=np.zeros_like(raw),
                    where=covered[None, :])
    return psi, covered


def partition_derivative_bound(pieces, psi: np.ndarray,
                               step: float) -> float:
    """max_i ||psi_i'|| diam I_i from finite differences.
    """

    if not pieces:
        return 0.0

    derivative = np.abs(np.gradient(psi, step, axis=1))
    lengths = np.array([piece.length for piece in pieces])
    return float(np.max(np.max(derivative, axis=1) * lengths))
