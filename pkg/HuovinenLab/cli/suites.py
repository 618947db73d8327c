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

from typing import Callable, Dict, List, Tuple

from ..analysis import (
    analyze, calibrate_lower_bound, lower_bound_check, lower_bound_ledger
)
from ..constants import LEMMA_SUITE_COUNT, LOWER_BOUND_CONSTANTS
from ..measure import (
    Ball, DiscreteMeasure, GraphProfile, cantor, generate,
    lipschitz_graph, segment
)
from ..operator import (
    FULL, NORMAL, SampledGraph, kernel, kernel_series, pv_graph_transform
)
from ..settings import GraphSettings, StopParams, TransportSettings
from ..stopping import Construction, construct, normalize_measure
from ..transport import alpha_line, modified_density, randomized_lemma_suite
from ..transport.models import LemmaCheck


logger = logging.getLogger("HuovinenLab")

SERIES_ORDERS = (1, 3, 5, 7)

PIPELINE_PARAMS = dict(delta=0.4, epsilon=1e-8, alpha=0.1, theta=0.01,
                       t_grid_size=10, t_max=2.0)
PIPELINE_SLOPE = 0.005

CANTOR_LEVEL = 5
CANTOR_GENERATIONS = 5

# (profile, amplitude, width, period); the two families are disjoint.
CALIBRATION_PROFILES = (
    ("bump", 1e-3, 1.0, 0.5),
    ("bump", 1e-2, 1.0, 0.5),
    ("saw", 2e-3, 1.0, 0.5)
)
LEDGER_PROFILES = (
    ("bump", 4e-3, 1.0, 0.5),
    ("bump", 8e-3, 1.0, 0.5),
    ("bump", 1.5e-2, 1.0, 0.5),
    ("bump", 2.5e-2, 1.0, 0.5),
    ("bump", 1e-2, 0.75, 0.5),
    ("bump", 2e-2, 1.5, 0.5),
    ("saw", 1e-3, 1.0, 0.5),
    ("saw", 3e-3, 1.0, 0.5),
    ("saw", 5e-3, 1.0, 0.5),
    ("saw", 2e-3, 1.5, 1.0)
)
LEDGER_KNOTS = np.arange(-2.0, 2.0 + 1.0 / 128, 1.0 / 64)


def _profile_graph(name: str, amplitude: float, width: float,
                   period: float) -> SampledGraph:
    return SampledGraph.from_function(
        GraphProfile(name, amplitude, width, period).value, LEDGER_KNOTS
    )


def lemmas_suite(mu: DiscreteMeasure = None, count: int = None,
                 settings: TransportSettings = None,
                 seed: int = 0) -> List[LemmaCheck]:
    return randomized_lemma_suite(
        count=count or LEMMA_SUITE_COUNT, seed=seed, settings=settings
    )


def modified_density_suite(mu: DiscreteMeasure = None, count: int = None,
                           settings: TransportSettings = None,
                           seed: int = 0) -> List[LemmaCheck]:
    """A 3-spike escapes its vertex to a single ray, a segment keeps its
    own density.
    """

    spike = generate("spike", spacing=0.001, window_radius=1.7,
                     angle=0.0, m=3, k=3)
    escape = modified_density(spike, Ball(0, 1), 1e-3, 3, settings)

    line = segment(half_length=5.0, spacing=0.02)
    same = modified_density(line, Ball(0, 0.04), 0.1, 3, settings)

    return [
        LemmaCheck("vertex-escape", escape.witness is not None,
                   abs(escape.ratio - 3.0), 0.1, escape.api_schema),
        LemmaCheck("segment-identity", same.witness is not None,
                   abs(same.value - same.base_density), 1e-9,
                   same.api_schema)
    ]


def kernel_series_suite(mu: DiscreteMeasure = None, count: int = None,
                        settings: TransportSettings = None,
                        seed: int = 0) -> List[LemmaCheck]:
    """Exact coefficients, convergence of the absolute series at 1/2,
    agreement with the kernel and the leading term along graphs.
    """

    checks = []
    s = np.linspace(-0.4, 0.4, 41)

    for k in SERIES_ORDERS:
        series = kernel_series(k)
        checks.append(LemmaCheck("c-k1", True, abs(float(series[1] - k)),
                                 0.0, {"k": k}))

        increments = np.diff(series.partial_sums(0.5))
        checks.append(LemmaCheck("tail-increment", True,
                                 float(increments[-1]), 1e-6, {"k": k}))

        error = np.max(np.abs(
            series.evaluate(1.0, s)
            - kernel(k, 1.0 + 1j * s, NORMAL)
        ))
        checks.append(LemmaCheck("series-kernel", True, float(error),
                                 1e-10, {"k": k}))

    three = kernel_series(3)
    checks.append(LemmaCheck("c-33", True, abs(float(three[3] + 7)), 0.0))
    checks.append(LemmaCheck("c-35", True, abs(float(three[5] - 11)), 0.0))

    flat = SampledGraph(LEDGER_KNOTS, np.zeros(len(LEDGER_KNOTS)))
    checks.append(LemmaCheck(
        "pv-flat", True, abs(pv_graph_transform(flat, 0.5, 3).value), 1e-12
    ))

    bump = _profile_graph("bump", 1e-3, 1.0, 0.5)
    first = pv_graph_transform(bump, 0.5, 1).value
    third = pv_graph_transform(bump, 0.5, 3).value
    checks.append(LemmaCheck("pv-leading-term", first != 0,
                             abs(third / (3 * first) - 1.0) if first else 0,
                             0.01))

    # Rotating the plane by pi turns K_k(z) into -K_k(z) for odd k.
    value = kernel(3, 0.3 + 0.7j, FULL)
    checks.append(LemmaCheck("kernel-oddness", True,
                             abs(value + kernel(3, -0.3 - 0.7j, FULL)),
                             1e-12))

    return checks


def _pipeline_corpus() -> DiscreteMeasure:
    return lipschitz_graph(GraphProfile("slope", PIPELINE_SLOPE),
                           half_length=10.0, spacing=0.02)


def pipeline_run(mu: DiscreteMeasure,
                 settings: TransportSettings = None,
                 params: StopParams = None) -> Construction:
    """Normalizes mu on B(0, 1) and constructs its graph.
    """

    if params is None:
        params = StopParams(**PIPELINE_PARAMS)

    normalized, _ = normalize_measure(mu, Ball(0, 1), settings)
    return construct(normalized, params,
                     graph_settings=GraphSettings(knot_step=1.0 / 64),
                     settings=settings)


def _base_mass(construction: Construction) -> float:
    region = construction.region
    inside = np.abs(region.positions) <= 1.0
    return float(np.sum(region.mu.weights[region.centers][inside]))


def cantor_profile(settings: TransportSettings = None
                   ) -> List[LemmaCheck]:
    """Line coefficients of the four corner set at successive generation
    scales against half of the first generation's own coefficient.
    """

    floor = alpha_line(cantor(1), Ball(0.5 + 0.5j, 0.5),
                       settings=settings).value
    mu = cantor(CANTOR_LEVEL)

    checks = []
    for generation in range(CANTOR_GENERATIONS):
        scale = 0.25 ** generation
        result = alpha_line(mu, Ball((0.5 + 0.5j) * scale, 0.5 * scale),
                            settings=settings)
        checks.append(LemmaCheck("cantor-profile", True, 0.5 * floor,
                                 result.value, {"generation": generation,
                                                "status": result.status}))

    return checks


def graph_pipeline_suite(mu: DiscreteMeasure = None, count: int = None,
                         settings: TransportSettings = None,
                         seed: int = 0) -> List[LemmaCheck]:
    """A near flat graph is mostly Z with a small Lipschitz graph close
    to it; the four corner set is mostly not.
    """

    params = StopParams(**PIPELINE_PARAMS)
    run = pipeline_run(mu if mu is not None else _pipeline_corpus(),
                       settings, params)

    checks = [
        LemmaCheck("z-mass", True, 0.95 * _base_mass(run),
                   run.partition.masses["Z"]),
        LemmaCheck("graph-lipschitz", True, run.graph.lipschitz_constant,
                   10 * params.alpha),
        LemmaCheck("graph-closeness", True, 0.99, run.report.closeness)
    ]

    if mu is None:
        contrast = pipeline_run(cantor(CANTOR_LEVEL, origin=-0.5 - 0.5j),
                                settings, params)
        checks.append(LemmaCheck(
            "unrectifiable-z-mass", True, contrast.partition.masses["Z"],
            0.2 * contrast.partition.total
        ))
        checks.extend(cantor_profile(settings))

    return checks


def analysis_suite(mu: DiscreteMeasure = None, count: int = None,
                   settings: TransportSettings = None,
                   seed: int = 0) -> List[LemmaCheck]:
    """sigma growth on the near flat pipeline run, and the frozen lower
    bound constants on the test profiles.
    """

    run = pipeline_run(mu if mu is not None else _pipeline_corpus(),
                       settings)
    report = analyze(run.region, run.partition, run.graph)

    checks = [
        LemmaCheck("sigma-growth-violations", True,
                   float(len(report.growth)), 0.0)
    ]

    calibration = [
        lower_bound_ledger(_profile_graph(*profile), 3)
        for profile in CALIBRATION_PROFILES
    ]
    ratio = calibrate_lower_bound(calibration)
    c, C = LOWER_BOUND_CONSTANTS[3]
    checks.append(LemmaCheck("calibration-ratio", True, c, ratio))

    for profile in LEDGER_PROFILES:
        check = lower_bound_check(
            lower_bound_ledger(_profile_graph(*profile), 3), (c, C)
        )
        check.detail["profile"] = "{}:{}".format(profile[0], profile[1])
        checks.append(check)

    return checks


SUITES: Dict[str, Callable[..., List[LemmaCheck]]] = {
    "lemmas-3-4": lemmas_suite,
    "modified-density": modified_density_suite,
    "kernel-series": kernel_series_suite,
    "graph-pipeline": graph_pipeline_suite,
    "analysis": analysis_suite
}

# Suites whose corpus a --measure input replaces.
MEASURE_SUITES = ("graph-pipeline", "analysis")


def run_suite(name: str, mu: DiscreteMeasure = None, count: int = None,
              settings: TransportSettings = None,
              seed: int = 0) -> Tuple[List[LemmaCheck], bool]:
    """Runs a named suite.

    An empty input measure is a no-op pass.

    Returns
    -------
    Tuple[List[LemmaCheck], bool]
        Checks and whether all passed.
    """

    if mu is not None and len(mu) == 0:
        logger.warning("Empty measure, suite {} skipped".format(name))
        return [], True

    if mu is not None and name not in MEASURE_SUITES:
        logger.info("Suite {} runs on its own corpus".format(name))
        mu = None

    checks = SUITES[name](mu, count, settings, seed)
    failed = [check for check in checks if not check.passed]
    for check in failed:
        logger.warning("Failed {}".format(check.api_schema))

    return checks, not failed
