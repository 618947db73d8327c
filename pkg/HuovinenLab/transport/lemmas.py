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

from typing import List

from .lp import alpha_pair, quadrature_tolerance
from .models import LemmaCheck
from .modified_density import modified_density
from .search import alpha_line, alpha_spike, model_spacing, spike_model

from ..constants import (
    FLATNESS_DILATION, LINES_DONT_MOVE_C, SPIKE_FLATTENING_C,
    DENSITY_CAP_C, CONTINUITY_TOL, LEMMA_SUITE_COUNT, LEMMA_WEIGHT_NOISE,
    LEMMA_NOISE_ATOMS, PHI_SUPPORT, RESOLUTION_FACTOR
)
from ..measure.density import density
from ..measure.generators import discretize_model
from ..measure.models import Ball, DiscreteMeasure, Line, SpikeMeasure
from ..misc import geometric_grid, nearest_neighbor_gap
from ..settings import TransportSettings


logger = logging.getLogger("HuovinenLab")

# Float slack on exact comparisons, LP optima carry solver tolerances.
FLOAT_RTOL = 1e-7


def spike_fit(mu: DiscreteMeasure, nu: SpikeMeasure, ball: Ball,
              settings: TransportSettings = None):
    """alpha of mu against the quadrature of nu and its tolerance.

    mu is taken as it is, only the quadrature of nu is an error.

    Returns
    -------
    Tuple[AlphaResult, float]
        The result against the quadrature, which is itself a measure
        supported on supp(nu), and the tolerance to the true nu.
    """

    if settings is None:
        settings = TransportSettings()

    model = spike_model(nu, ball, settings)
    result = alpha_pair(mu, model, ball, settings)
    result.witness = nu
    return result, result.normalization * quadrature_tolerance(
        model, ball, model_spacing(ball, settings)
    )


def check_far_from_support(mu: DiscreteMeasure, nu: SpikeMeasure,
                           ball: Ball, z: complex, s: float,
                           settings: TransportSettings = None,
                           fit=None) -> LemmaCheck:
    """Density of balls far from supp(nu) is controlled by alpha.

    Holds literally for the quadrature of nu, which is supported on
    supp(nu), so gamma is alpha over the density with no tolerance.
    """

    result, _ = fit or spike_fit(mu, nu, ball, settings)
    _, base = density(mu, ball)
    _, local = density(mu, Ball(z, s))

    hypotheses = base > 0 and 0 < s < ball.radius \
        and Ball(ball.center, 3 * ball.radius).contains_ball(Ball(z, s)) \
        and float(nu.support_distance(z)) >= 2 * s

    gamma = result.value / base if base > 0 else np.inf
    rhs = gamma * (ball.radius / s) ** 2 * base
    return LemmaCheck(
        "far-from-support", bool(hypotheses), local,
        rhs * (1 + FLOAT_RTOL) + FLOAT_RTOL,
        {"gamma": gamma, "m": nu.m, "s": s}
    )


def check_move_off_support(nu: SpikeMeasure, x: complex, r: float,
                           z: complex, s: float) -> LemmaCheck:
    """delta_nu(B(x, r)) <= 3 D_nu delta_nu(B(z, s)), z on supp(nu).

    Lines drop the factor 3 D_nu. Masses are exact chord lengths.
    """

    outer = nu.ball_density(Ball(x, r))
    inner = nu.ball_density(Ball(z, s))
    factor = 1.0 if nu.m == 1 else 3.0 * nu.density_ratio

    return LemmaCheck(
        "move-off-support", float(nu.support_distance(z)) < 1e-12,
        outer, factor * inner * (1 + FLOAT_RTOL),
        {"m": nu.m, "r": r, "s": s}
    )


def check_density_comparison(mu: DiscreteMeasure, nu: SpikeMeasure,
                             ball: Ball, z: complex, s: float,
                             part: str = "upper",
                             settings: TransportSettings = None,
                             fit=None) -> LemmaCheck:
    """Two sided density comparison for mu close to a spike.

    gamma is taken as (alpha + tolerance) / delta, an upper bound for
    the coefficient against the true nu, so the hypothesis holds.

    Parameters
    ----------
    mu : DiscreteMeasure
    nu : SpikeMeasure
        Must pass through the centre of ball.
    ball : Ball
    z : complex
    s : float
    part : str, optional
        "upper" bounds delta_mu(B(z, s)) from above, "lower" from below
        and needs z on supp(nu).
    settings : TransportSettings, optional
    fit : Tuple[AlphaResult, float], optional
        Precomputed spike_fit.

    Returns
    -------
    LemmaCheck
    """

    result, tolerance = fit or spike_fit(mu, nu, ball, settings)
    _, base = density(mu, ball)
    _, local = density(mu, Ball(z, s))

    ratio = float(nu.density_ratio)
    gamma = (result.value + tolerance) / base if base > 0 else np.inf
    scale = ball.radius / s

    hypotheses = base > 0 and 0 < s <= ball.radius \
        and Ball(ball.center, 3 * ball.radius).contains_ball(Ball(z, s)) \
        and float(nu.support_distance(ball.center)) < 1e-12

    detail = {"gamma": gamma, "m": nu.m, "s": s, "part": part}

    if part == "upper":
        hypotheses = hypotheses and gamma < (1.0 / 9.0) / scale ** 2
        factor = 1.0 if nu.m == 1 else 3.0 * ratio
        rhs = factor * (1 + 8 * np.sqrt(gamma) * scale) * base
        return LemmaCheck("density-upper", bool(hypotheses), local,
                          rhs * (1 + FLOAT_RTOL), detail)

    if part == "lower":
        hypotheses = hypotheses \
            and gamma < (1.0 / (9.0 * ratio)) / scale ** 2 \
            and float(nu.support_distance(z)) < 1e-12
        lhs = (1 - 8 * np.sqrt(ratio * gamma) * scale) * base / ratio
        return LemmaCheck("density-lower", bool(hypotheses),
                          lhs * (1 - FLOAT_RTOL), local, detail)

    raise ValueError("part must be 'upper' or 'lower'")


def _chord_spread(inner_line: Line, outer_line: Line, z: complex,
                  s: float) -> float:
    # dist(y, D) is affine along D', so the max sits at a chord end.
    ends = z + np.array([-s, s]) * inner_line.direction
    return float(np.max(np.minimum(s, outer_line.distance(ends))))


def lines_dont_move_diagnostic(mu: DiscreteMeasure, outer: Ball,
                               inner: Ball,
                               settings: TransportSettings = None,
                               constant: float = LINES_DONT_MOVE_C
                               ) -> LemmaCheck:
    """Best lines of a ball and a dense sub-ball stay close.

    Reports min(s, dist(y, D)) over y on D' inside the sub-ball and
    the angle between D and D', both normalized by sqrt(gamma/delta),
    against an unpinned constant.
    """

    parent = alpha_line(mu, outer, settings=settings)
    child = alpha_line(mu, inner, settings=settings)

    _, outer_density = density(mu, outer)
    _, inner_density = density(mu, inner)

    hypotheses = outer_density > 0 and inner_density > 0 \
        and inner.radius <= outer.radius \
        and outer.scaled(2).contains_ball(inner)

    if not hypotheses:
        return LemmaCheck("lines-dont-move", False, 0.0, constant)

    gamma = max(
        (parent.value + parent.tolerance) / outer_density,
        (child.value + child.tolerance) / inner_density
    )
    delta = min(inner_density / outer_density, 1.0)
    unit = np.sqrt(gamma / delta) * outer.radius

    spread = _chord_spread(child.witness, parent.witness, inner.center,
                           inner.radius)
    angle = parent.witness.angle_to(child.witness)

    lhs = max(spread / unit, angle / (unit / inner.radius)) \
        if unit > 0 else np.inf
    return LemmaCheck(
        "lines-dont-move", True, lhs, constant,
        {"spread": spread, "angle": angle, "gamma": gamma,
         "delta": delta}
    )


def spike_flattening_diagnostic(mu: DiscreteMeasure, parent: Ball,
                                z: complex, s: float, k: int,
                                settings: TransportSettings = None,
                                constant: float = SPIKE_FLATTENING_C
                                ) -> LemmaCheck:
    """A dense ball close to spikes inside a flat parent is flat.

    Compares alpha to lines on B(z, s) with alpha to k-spikes on
    B(z, 4s), and reports the angle to the parent's best line.
    """

    _, parent_density = density(mu, parent)
    _, child_density = density(mu, Ball(z, s))

    hypotheses = parent_density > 0 and child_density > 0 \
        and s <= parent.radius / 4 \
        and parent.scaled(2).contains_ball(Ball(z, 4 * s))

    if not hypotheses:
        return LemmaCheck("spike-flattening", False, 0.0, constant)

    line = alpha_line(mu, parent, settings=settings)
    spike = alpha_spike(mu, Ball(z, 4 * s), k, settings)
    child = alpha_line(mu, Ball(z, s), settings=settings)

    gamma = max(
        (line.value + line.tolerance) / parent_density,
        np.sqrt((spike.value + spike.tolerance) / parent_density)
    )
    delta = min(child_density / parent_density, 1.0)
    lhs = (child.value / child_density) / (gamma ** 2 / delta) \
        if gamma > 0 else 0.0

    return LemmaCheck(
        "spike-flattening", True, lhs, constant,
        {"gamma": gamma, "delta": delta,
         "angle": line.witness.angle_to(child.witness),
         "spike_kind": spike.witness_kind}
    )


def density_cap_check(mu: DiscreteMeasure, ball: Ball, epsilon: float,
                      theta: float, k: int,
                      settings: TransportSettings = None,
                      constant: float = DENSITY_CAP_C,
                      per_octave: int = 2,
                      max_centers: int = 64) -> LemmaCheck:
    """Bounded modified density caps the density of flat sub-balls.

    Sub-balls of B(x, 30r) with radius at least eps^(1/4) r / 200 are
    searched, with centres on atoms of mu. Radii below the atom
    resolution are skipped since discrete densities blow up there.
    """

    dilated = ball.scaled(FLATNESS_DILATION)
    flat = alpha_line(mu, dilated, settings=settings)
    modified = modified_density(mu, ball, epsilon, k, settings,
                                max_centers=max_centers)

    hypotheses = flat.within(epsilon) \
        and modified.value <= 1 + theta

    floor = max(
        epsilon ** 0.25 * ball.radius / 200.0,
        RESOLUTION_FACTOR * nearest_neighbor_gap(
            mu.restrict_ball(dilated).positions
        )
    )

    centers = np.unique(mu.positions[dilated.contains(mu.positions)])
    if len(centers) > max_centers:
        centers = centers[::int(np.ceil(len(centers) / max_centers))]

    worst = 0.0
    if floor < dilated.radius:
        for radius in geometric_grid(floor, dilated.radius, per_octave):
            for center in centers:
                candidate = Ball(center, radius)
                if dilated.contains_ball(candidate):
                    worst = max(worst, density(mu, candidate)[1])

    return LemmaCheck(
        "density-cap", bool(hypotheses), worst,
        1 + theta + constant * epsilon ** 0.125,
        {"modified_density": modified.value, "alpha": flat.value,
         "radius_floor": floor}
    )


def continuity_profile(mu: DiscreteMeasure, ball: Ball,
                       steps: int = 8, shift: complex = 0.5 + 0.5j,
                       settings: TransportSettings = None,
                       tolerance: float = CONTINUITY_TOL
                       ) -> LemmaCheck:
    """alpha along (x_j, r_j) -> (x, r) converges to alpha at (x, r).

    x_j = x + 2^-j shift r and r_j = r (1 + 2^-j / 2).
    """

    target = alpha_line(mu, ball, settings=settings).value

    gaps = []
    for j in range(1, steps + 1):
        step = 2.0 ** -j
        moved = Ball(ball.center + step * shift * ball.radius,
                     ball.radius * (1 + step / 2))
        gaps.append(abs(alpha_line(mu, moved, settings=settings).value
                        - target))

    return LemmaCheck(
        "continuity", True, gaps[-1], tolerance,
        {"gaps": ";".join("{:.3e}".format(gap) for gap in gaps)}
    )


def _noisy_spike(rng: np.random.Generator, nu: SpikeMeasure, ball: Ball,
                 spacing: float) -> DiscreteMeasure:
    window = ball.scaled(PHI_SUPPORT)
    model = discretize_model(nu, window, spacing)
    weights = model.weights * (
        1 + LEMMA_WEIGHT_NOISE * rng.uniform(-1, 1, len(model))
    )

    radius = window.radius * np.sqrt(rng.uniform(0, 1, LEMMA_NOISE_ATOMS))
    angle = rng.uniform(0, 2 * np.pi, LEMMA_NOISE_ATOMS)
    noise = DiscreteMeasure(
        window.center + radius * np.exp(1j * angle),
        np.full(LEMMA_NOISE_ATOMS, spacing / 2)
    )
    return DiscreteMeasure(model.positions, weights) + noise


def _point_on_support(rng: np.random.Generator, nu: SpikeMeasure,
                      reach: float) -> complex:
    line = nu.lines[rng.integers(nu.m)]
    return line.base + rng.uniform(-reach, reach) * line.direction


def _point_in(rng: np.random.Generator, ball: Ball) -> complex:
    radius = ball.radius * np.sqrt(rng.uniform())
    return ball.center + radius * np.exp(2j * np.pi * rng.uniform())


def randomized_lemma_suite(count: int = LEMMA_SUITE_COUNT, seed: int = 0,
                           spacing: float = 0.005, k: int = 3,
                           settings: TransportSettings = None
                           ) -> List[LemmaCheck]:
    """Randomized instances of the explicit-constant density lemmas.

    Every instance is a line or k-spike quadrature with weight noise
    and a few stray atoms, observed on a unit ball centred on the
    support. One LP per instance serves all checks of that instance.
    Instances whose hypotheses fail pass vacuously and are counted by
    LemmaCheck.hypotheses.

    Parameters
    ----------
    count : int, optional
    seed : int, optional
    spacing : float, optional
        Quadrature step of single lines, multiplied by m for spikes so
        the atom count stays the same.
    k : int, optional
    settings : TransportSettings, optional

    Returns
    -------
    List[LemmaCheck]
        Four checks per instance.
    """

    if settings is None:
        settings = TransportSettings()

    rng = np.random.default_rng(seed)
    divisors = [m for m in range(1, k + 1) if k % m == 0]
    checks = []

    for _ in range(count):
        m = int(rng.choice(divisors))
        nu = SpikeMeasure(0.0, rng.uniform(0, np.pi), m, k)
        ball = Ball(_point_on_support(rng, nu, 1.5), 1.0)
        mu = _noisy_spike(rng, nu, ball, spacing * m)

        fit = spike_fit(mu, nu, ball, settings)

        s = rng.uniform(0.05, 0.5)
        z = _point_in(rng, Ball(ball.center, 3 - s))
        for _ in range(20):
            if float(nu.support_distance(z)) >= 2 * s:
                break
            z = _point_in(rng, Ball(ball.center, 3 - s))
        checks.append(check_far_from_support(mu, nu, ball, z, s,
                                             settings, fit))

        s = rng.uniform(0.3, 1.0)
        z = _point_in(rng, Ball(ball.center, 3 - s))
        checks.append(check_density_comparison(mu, nu, ball, z, s,
                                               "upper", settings, fit))

        s = rng.uniform(0.3, 1.0)
        z = _point_on_support(rng, nu, 1.0)
        checks.append(check_density_comparison(mu, nu, ball, z, s,
                                               "lower", settings, fit))

        checks.append(check_move_off_support(
            nu, _point_in(rng, Ball(0, 3)), rng.uniform(0.1, 3),
            _point_on_support(rng, nu, 3), rng.uniform(0.01, 3)
        ))

    failed = sum(not check.passed for check in checks)
    if failed:
        logger.warning("{} of {} lemma checks failed".format(
            failed, len(checks)
        ))

    return checks
