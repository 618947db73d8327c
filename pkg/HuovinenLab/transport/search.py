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

from typing import Callable, Dict, Tuple

from .lp import alpha_pair, normalization_c, phi, quadrature_tolerance
from .models import AlphaResult

from ..constants import LINE_BOUND_ANGLES, PHI_SUPPORT
from ..decorators import validate_kernel_order
from ..exceptions import EmptyCone
from ..measure.generators import discretize_model
from ..measure.models import Ball, DiscreteMeasure, Line, SpikeMeasure
from ..misc import golden_section, nearest_neighbor_gap, normalize_angle
from ..settings import TransportSettings


logger = logging.getLogger("HuovinenLab")

SEARCH = "search"
FIXED = "fixed"
CONE = "cone"


def model_spacing(ball: Ball, settings: TransportSettings,
                  mu: DiscreteMeasure = None) -> float:
    """Step of the model quadrature on B(z, 4r).

    With mu given the step never drops below the resolution of mu in
    the window, a finer model cannot tighten the tolerance.
    """

    spacing = settings.model_spacing_ratio * ball.radius
    if mu is not None:
        window = mu.restrict_ball(ball.scaled(PHI_SUPPORT))
        spacing = max(spacing, nearest_neighbor_gap(window.positions))
    return spacing


def line_model(line: Line, ball: Ball, settings: TransportSettings,
               spacing: float = None) -> DiscreteMeasure:
    """Unit density quadrature of a line on B(z, 4r).
    """

    if spacing is None:
        spacing = model_spacing(ball, settings)

    return discretize_model(
        SpikeMeasure(line.base, line.angle, 1, 1),
        ball.scaled(PHI_SUPPORT), spacing
    )


def spike_model(nu: SpikeMeasure, ball: Ball,
                settings: TransportSettings) -> DiscreteMeasure:
    return discretize_model(
        nu, ball.scaled(PHI_SUPPORT), model_spacing(ball, settings)
    )


def model_tolerance(mu: DiscreteMeasure, nu: DiscreteMeasure,
                    ball: Ball, settings: TransportSettings,
                    spacing: float = None) -> float:
    """Quadrature tolerance of alpha against a discretized model.

    Sums the error of the model quadrature and the resolution of mu.
    """

    if spacing is None:
        spacing = model_spacing(ball, settings)

    c = normalization_c(mu, nu, ball)
    return c * quadrature_tolerance(nu, ball, spacing) \
        + quadrature_tolerance(mu, ball)


def line_tolerance(mu: DiscreteMeasure, ball: Ball,
                   settings: TransportSettings = None) -> float:
    """Tolerance shared by every line through c(B).

    All those lines cut the same chord out of B(z, 4r).
    """

    if settings is None:
        settings = TransportSettings()

    spacing = model_spacing(ball, settings, mu)
    return model_tolerance(
        mu, line_model(Line(ball.center, 0.0), ball, settings, spacing),
        ball, settings, spacing
    )


def line_lower_bound(mu: DiscreteMeasure, ball: Ball, lower: float,
                     upper: float, samples: int = LINE_BOUND_ANGLES
                     ) -> float:
    """Lower bound of the line coefficient over every line through c(B)
    with angle in [lower, upper], without solving a program.

    For the line L the function min(dist(., L), 4r - |. - c(B)|) / r is
    a feasible test function vanishing on the line model, so its
    integral against mu bounds alpha from below. The bound moves by at
    most sum |phi w| |y - c(B)| / r^2 per radian, which covers the
    angles between samples.

    Parameters
    ----------
    mu : DiscreteMeasure
    ball : Ball
    lower : float
    upper : float
    samples : int, optional

    Returns
    -------
    float
    """

    window = mu.restrict_ball(ball.scaled(PHI_SUPPORT))
    if len(window) == 0:
        return 0.0

    offsets = window.positions - ball.center
    distances = np.abs(offsets)
    gains = phi(distances / ball.radius) * window.weights / ball.radius
    box = np.maximum(PHI_SUPPORT * ball.radius - distances, 0.0)

    angles = np.linspace(lower, upper, samples)
    heights = np.abs(
        (offsets[:, None] * np.exp(-1j * angles[None, :])).imag
    )
    values = gains @ np.minimum(heights, box[:, None]) / ball.radius

    slope = np.sum(np.abs(gains) * distances) / ball.radius
    slack = slope * (upper - lower) / (2 * (samples - 1))
    return max(float(np.min(values)) - slack, 0.0)


def _evaluate_line(mu: DiscreteMeasure, ball: Ball, angle: float,
                   settings: TransportSettings, spacing: float,
                   cache: Dict[float, AlphaResult]) -> AlphaResult:
    key = round(normalize_angle(angle), 12)
    if key not in cache:
        line = Line(ball.center, angle)
        nu = line_model(line, ball, settings, spacing)
        result = alpha_pair(mu, nu, ball, settings)
        result.witness = line
        cache[key] = result
    return cache[key]


def _refine(objective: Callable[[float], float], seeds: np.ndarray,
            values: np.ndarray, lower: float, upper: float,
            tol: float, stop_below: float = None) -> Tuple[float, float]:
    best = int(np.argmin(values))
    left = max(seeds[max(best - 1, 0)], lower)
    right = min(seeds[min(best + 1, len(seeds) - 1)], upper)

    if right - left <= tol:
        return float(seeds[best]), float(values[best])

    angle, value = golden_section(objective, left, right, tol,
                                  stop_below=stop_below)
    if value < values[best]:
        return angle, value
    return float(seeds[best]), float(values[best])


def alpha_line(mu: DiscreteMeasure, ball: Ball, mode: str = SEARCH,
               line: Line = None, cone: Tuple[float, float] = None,
               settings: TransportSettings = None,
               stop_below: float = None, hint: float = None) -> AlphaResult:
    """Transportation coefficient of mu to lines through c(B).

    Parameters
    ----------
    mu : DiscreteMeasure
    ball : Ball
    mode : str, optional
        "search" over all angles, "fixed" for one line or "cone" for
        angles within an aperture of a reference direction.
    line : Line, optional
        Required by fixed mode.
    cone : Tuple[float, float], optional
        (aperture, reference angle), required by cone mode.
    settings : TransportSettings, optional
    stop_below : float, optional
        Stop searching once a line reaches this value.
    hint : float, optional
        Angle tried before the seeds, usually the witness of a nearby
        ball. Ignored outside the cone.

    Returns
    -------
    AlphaResult
        The witness is the best line found, the tolerance covers the
        model quadrature and the resolution of mu.

    Raises
    ------
    EmptyCone
    AtomLimitExceeded
    SolverFailure
    """

    if settings is None:
        settings = TransportSettings()

    cache: Dict[float, AlphaResult] = {}
    spacing = model_spacing(ball, settings, mu)
    tolerance = line_tolerance(mu, ball, settings)

    if mode == FIXED:
        if line is None:
            raise ValueError("fixed mode needs a line")
        nu = line_model(line, ball, settings, spacing)
        result = alpha_pair(mu, nu, ball, settings)
        result.witness = line
        result.tolerance = model_tolerance(mu, nu, ball, settings, spacing)
        return result

    reference = 0.0
    if mode == CONE:
        aperture, reference = cone
        if aperture <= 0:
            raise EmptyCone()
        if aperture >= np.pi / 2:
            mode = SEARCH

    if mode == SEARCH:
        seeds = np.linspace(0.0, np.pi, settings.angle_seeds,
                            endpoint=False)
        # Periodic wrap so the refinement bracket exists at both ends.
        seeds = np.append(seeds, np.pi)
        lower, upper = -np.pi / settings.angle_seeds, \
            np.pi + np.pi / settings.angle_seeds
    elif mode == CONE:
        lower, upper = reference - aperture, reference + aperture
        count = max(3, int(np.ceil(
            settings.angle_seeds * 2 * aperture / np.pi
        )) + 1)
        seeds = np.linspace(lower, upper, count)
    else:
        raise ValueError("Unknown alpha_line mode {}".format(mode))

    def evaluate(angle: float) -> AlphaResult:
        return _evaluate_line(mu, ball, angle, settings, spacing, cache)

    def objective(angle: float) -> float:
        return evaluate(angle).value

    def finish(result: AlphaResult) -> AlphaResult:
        result.tolerance = tolerance
        return result

    hinted = None
    if hint is not None:
        if mode == SEARCH:
            hint = normalize_angle(hint)
        else:
            # Nearest representative of the line direction to the cone.
            hint = reference + normalize_angle(
                hint - reference + np.pi / 2
            ) - np.pi / 2
        if lower <= hint <= upper:
            hinted = evaluate(hint)
            if stop_below is not None and hinted.value <= stop_below:
                return finish(hinted)

    # Closest to the reference first, so early exits try it first.
    order = np.argsort(np.abs(seeds - reference))
    values = np.full(len(seeds), np.inf)
    for index in order:
        values[index] = objective(seeds[index])
        if stop_below is not None and values[index] <= stop_below:
            return finish(evaluate(seeds[index]))

    angle, _ = _refine(objective, seeds, values, lower, upper,
                       settings.angle_tol, stop_below)

    result = evaluate(angle)
    if hinted is not None and hinted.value < result.value:
        result = hinted
    return finish(result)


def _spike_candidate(center: complex, offset: float, angle: float, m: int,
                     k: int) -> SpikeMeasure:
    direction = np.exp(1j * angle)
    return SpikeMeasure(center - offset * direction, angle, m, k)


@validate_kernel_order
def alpha_spike(mu: DiscreteMeasure, ball: Ball, k: int,
                settings: TransportSettings = None) -> AlphaResult:
    """Transportation coefficient of mu to the k-spike family.

    For every m dividing k the vertex runs over c(B) - t e^{i phi}, so
    c(B) stays on the support, with t on a geometric grid up to
    vertex_reach * r plus t = 0. Further vertices look like a line on
    B(z, 4r) and are covered by the m = 1 branch.

    Parameters
    ----------
    mu : DiscreteMeasure
    ball : Ball
    k : int
        Odd kernel order.
    settings : TransportSettings, optional

    Returns
    -------
    AlphaResult
    """

    if settings is None:
        settings = TransportSettings()

    best = alpha_line(mu, ball, SEARCH, settings=settings)
    best.witness = SpikeMeasure(best.witness.base, best.witness.angle,
                                1, k)

    offsets = np.concatenate((
        [0.0],
        np.geomspace(ball.radius / 64.0,
                     settings.vertex_reach * ball.radius,
                     settings.vertex_steps - 1)
    ))

    for m in range(3, k + 1, 2):
        if k % m != 0:
            continue

        cache: Dict[Tuple[float, float], AlphaResult] = {}

        def evaluate(offset: float, angle: float) -> AlphaResult:
            period = np.pi / m if offset == 0 else 2 * np.pi
            key = (round(offset, 12), round(normalize_angle(angle, period),
                                            12))
            if key not in cache:
                nu = _spike_candidate(ball.center, offset, angle, m, k)
                result = alpha_pair(mu, spike_model(nu, ball, settings),
                                    ball, settings)
                result.witness = nu
                cache[key] = result
            return cache[key]

        grid_values = np.full(
            (len(offsets), settings.angle_seeds), np.inf
        )
        for i, offset in enumerate(offsets):
            period = np.pi / m if offset == 0 else 2 * np.pi
            for j, angle in enumerate(np.linspace(
                    0.0, period, settings.angle_seeds, endpoint=False)):
                grid_values[i, j] = evaluate(offset, angle).value

        i, j = np.unravel_index(np.argmin(grid_values), grid_values.shape)
        if i == len(offsets) - 1:
            logger.warning(
                "Spike vertex search for m={} hit the grid boundary "
                "{} r".format(m, settings.vertex_reach)
            )

        offset = float(offsets[i])
        period = np.pi / m if offset == 0 else 2 * np.pi
        step = period / settings.angle_seeds
        angle = j * step

        # Alternate angle and offset refinement.
        for _ in range(2):
            angle, _ = golden_section(
                lambda a: evaluate(offset, a).value,
                angle - step, angle + step, settings.angle_tol
            )
            if offset > 0:
                left = offsets[max(i - 1, 1)]
                right = offsets[min(i + 1, len(offsets) - 1)]
                offset, _ = golden_section(
                    lambda t: evaluate(t, angle).value,
                    left, right, settings.angle_tol * ball.radius
                )

        candidate = min(cache.values(), key=lambda item: item.value)
        if candidate.value < best.value:
            best = candidate

    best.tolerance = model_tolerance(
        mu, spike_model(best.witness, ball, settings), ball, settings
    )
    return best
