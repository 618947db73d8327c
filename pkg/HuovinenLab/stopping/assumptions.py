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

from typing import List, Tuple

from .models import Partition, StoppingRegion
from .region import closed_ball_indices, resolution_floor

from ..constants import FLATNESS_DILATION, SLOPE_PAIRS_C
from ..exceptions import DegenerateWindow
from ..measure.density import density
from ..measure.models import Ball, DiscreteMeasure
from ..operator.transforms import operator_norm_estimate, truncated_transform
from ..settings import StopParams, TransportSettings
from ..transport.models import LemmaCheck
from ..transport.modified_density import modified_density
from ..transport.search import alpha_line, alpha_spike


logger = logging.getLogger("HuovinenLab")


def normalize_measure(mu: DiscreteMeasure, base: Ball,
                      settings: TransportSettings = None
                      ) -> Tuple[DiscreteMeasure, dict]:
    """Moves B0 to B(0, 1), its best 30 B0 line to the real axis and
    rescales the weights so the density of B0 is 1.

    Raises
    ------
    DegenerateWindow
        When B0 carries no mass.
    """

    moved = mu.transformed(shift=-base.center).transformed(
        dilation=1.0 / base.radius
    )
    unit = Ball(0, 1)

    best = alpha_line(moved, unit.scaled(FLATNESS_DILATION),
                      settings=settings)
    rotation = -best.witness.angle
    moved = moved.transformed(rotation=rotation)

    _, base_density = density(moved, unit)
    if base_density == 0:
        raise DegenerateWindow("Base ball carries no mass")

    normalized = moved.scaled(1.0 / base_density)
    logger.info("Normalized measure, rotation {:.6f}, weight factor {:.6g}"
                .format(rotation, 1.0 / base_density))

    return normalized, {
        "shift": -base.center,
        "dilation": 1.0 / base.radius,
        "rotation": rotation,
        "weight_factor": 1.0 / base_density
    }


def _samples(mu: DiscreteMeasure, F: np.ndarray, count: int) -> np.ndarray:
    inside = F[np.abs(mu.positions[F]) <= 1.0]
    if len(inside) <= count:
        return mu.positions[inside]
    stride = int(np.ceil(len(inside) / count))
    return mu.positions[inside[::stride]]


def main_lemma_assumptions(mu: DiscreteMeasure, params: StopParams,
                           F: np.ndarray = None, norm_bound: float = None,
                           centers: int = 3, radii: int = 3,
                           settings: TransportSettings = None
                           ) -> List[LemmaCheck]:
    """Samples the hypotheses of the main construction on a normalized
    measure.

    Sampling uses up to centers atoms of F in the base ball and radii
    geometric scales between the floor and the largest radius of each
    hypothesis.

    Parameters
    ----------
    mu : DiscreteMeasure
        Normalized, see normalize_measure.
    params : StopParams
    F : np.ndarray, optional
        by default every atom of the closed 10 B0.
    norm_bound : float, optional
        M, the operator norm check is vacuous without it.
    centers : int, optional
    radii : int, optional
    settings : TransportSettings, optional

    Returns
    -------
    List[LemmaCheck]
    """

    base = Ball(0, 1)
    if F is None:
        F = closed_ball_indices(mu, base.scaled(10))
    F = np.asarray(F, dtype=int)

    floor = resolution_floor(mu, F)
    points = _samples(mu, F, centers)
    checks = []

    _, base_density = density(mu, base)
    checks.append(LemmaCheck("base-density", True,
                             abs(base_density - 1.0), 1e-9))

    flat = alpha_line(mu, base.scaled(FLATNESS_DILATION), settings=settings)
    checks.append(LemmaCheck("base-flatness", True,
                             flat.value - flat.tolerance, params.epsilon,
                             {"angle": flat.witness.angle}))

    outside = np.ones(len(mu), dtype=bool)
    outside[F] = False
    outside &= np.abs(mu.positions) < 10
    checks.append(LemmaCheck("mass-outside-F", True,
                             float(np.sum(mu.weights[outside])),
                             params.epsilon))

    worst_density = 0.0
    for x in points:
        for r in np.geomspace(floor, 90.0, radii):
            result = modified_density(mu, Ball(x, r), params.epsilon,
                                      params.k, settings)
            worst_density = max(worst_density, result.value)
    checks.append(LemmaCheck("modified-density", True, worst_density,
                             params.density_ceiling))

    worst_spike = 0.0
    for x in points:
        for r in np.geomspace(floor, 600.0, radii):
            result = alpha_spike(mu, Ball(x, r), params.k, settings)
            worst_spike = max(worst_spike, result.value - result.tolerance)
    checks.append(LemmaCheck("spike-flatness", True, worst_spike,
                             params.epsilon ** 2))

    if norm_bound is not None:
        estimate = operator_norm_estimate(mu, params.k)
        checks.append(LemmaCheck("operator-norm", True, estimate.value,
                                 norm_bound, estimate.api_schema))
    else:
        checks.append(LemmaCheck("operator-norm", False, 0.0, 0.0))

    scales = np.geomspace(floor, 90.0, max(radii, 2))
    worst_band = 0.0
    for x in points:
        for i, lower in enumerate(scales):
            for upper in scales[i + 1:]:
                value = truncated_transform(mu, x, lower, params.k,
                                            upper=upper)
                worst_band = max(worst_band, abs(value))
    checks.append(LemmaCheck("band", True, worst_band, params.epsilon))

    failed = [check.name for check in checks if not check.passed]
    if failed:
        logger.warning("Unmet assumptions: {}".format(", ".join(failed)))

    return checks


def slope_pairs_check(region: StoppingRegion) -> LemmaCheck:
    """Slope excess over alpha, in units of sqrt(lambda), of far apart
    atoms in S.

    Each atom enters with its smallest S scale, the weakest hypothesis.
    """

    positions, scales, rows = region.pairs()
    params = region.params
    root = float(np.sqrt(params.lam))

    if len(rows) < 2:
        return LemmaCheck("slope-pairs", False, 0.0, SLOPE_PAIRS_C)

    first = np.unique(rows, return_index=True)[1]
    points, smallest = positions[first], scales[first]

    separation = np.abs(points[:, None] - points[None, :])
    horizontal = np.abs(points.real[:, None] - points.real[None, :])
    vertical = np.abs(points.imag[:, None] - points.imag[None, :])

    far = (separation >= root * np.maximum(smallest[:, None],
                                           smallest[None, :])) \
        & (horizontal > 0)
    if not np.any(far):
        return LemmaCheck("slope-pairs", False, 0.0, SLOPE_PAIRS_C)

    excess = (vertical[far] / horizontal[far] - params.alpha) / root
    return LemmaCheck("slope-pairs", True, float(np.max(excess)),
                      SLOPE_PAIRS_C, {"pairs": int(np.sum(far)) // 2})


def z_slope_check(partition: Partition, params: StopParams) -> LemmaCheck:
    """|pi_perp(x) - pi_perp(y)| <= 2 alpha |pi(x) - pi(y)| on Z.
    """

    points = partition.mu.positions[partition.z]
    if len(points) < 2:
        return LemmaCheck("z-slope", False, 0.0, 0.0)

    horizontal = np.abs(points.real[:, None] - points.real[None, :])
    vertical = np.abs(points.imag[:, None] - points.imag[None, :])
    excess = vertical - 2 * params.alpha * horizontal

    return LemmaCheck("z-slope", True, float(np.max(excess)), 0.0,
                      {"atoms": len(points)})
