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


import unittest
import numpy as np

from .base import TestBase
from .test_stopping import segment_construction

from ..analysis import (
    SmoothingKernel,
    smoothed_density,
    sigma_growth_check,
    g_bounds_check,
    eta_variation_check,
    band_operator_normal,
    commutator_tail,
    lower_bound_ledger,
    lower_bound_check,
    calibrate_lower_bound,
    analyze
)
from ..exceptions import DegenerateWindow, SlopeTooLarge
from ..measure import (
    DiscreteMeasure, GraphProfile, pushforward_projection, segment
)
from ..operator import SampledGraph


KNOTS = np.arange(-2.0, 2.0 + 1.0 / 128, 1.0 / 64)


def bump_graph(amplitude: float) -> SampledGraph:
    return SampledGraph.from_function(
        GraphProfile("bump", amplitude).value, KNOTS
    )


class TestAnalysis(TestBase, unittest.TestCase):
    def test_kernel(self) -> None:
        kernel = SmoothingKernel()

        self.assertEqual(kernel.profile_integral, 0.5)
        self.assertEqual(float(kernel.profile(0.0)), 1.0)
        self.assertEqual(float(kernel.profile(0.25)), 1.0)
        self.assertEqual(float(kernel.profile(0.75)), 0.0)
        self.assertTrue(np.all(np.diff(kernel.profile(
            np.linspace(0.0, 1.0, 401)
        )) <= 0), "Non increasing")

        for p in (1e-3, 0.5, 7.0):
            self.assertAlmostEqual(kernel.mass(p), 1.0, places=10)

        with self.assertRaises(DegenerateWindow):
            kernel(0.1, 0.0)

    def test_uniform_density(self) -> None:
        sigma = pushforward_projection(segment(half_length=5.0,
                                               spacing=0.01))
        ts = np.linspace(-2.0, 2.0, 41)

        g = smoothed_density(sigma, ts, np.full(41, 10.0), 0.01)
        self.assertLessEqual(float(np.max(np.abs(g - 1.0))), 0.01)

        far = DiscreteMeasure([100.0], [1.0])
        self.assertTrue(np.all(
            smoothed_density(far, ts, np.ones(41), 0.01) == 0
        ))

    def test_degenerate_density(self) -> None:
        sigma = pushforward_projection(self.coarse_segment)
        g = smoothed_density(sigma, [0.0, 0.5], [0.0, 1.0], 0.01)

        self.assertTrue(np.isnan(g[0]))
        self.assertTrue(np.isfinite(g[1]))

        with self.assertRaises(DegenerateWindow):
            smoothed_density(sigma, [0.0], [0.0], 0.01, strict=True)

    def test_sigma_growth(self) -> None:
        sigma = pushforward_projection(segment(half_length=5.0,
                                               spacing=0.01))
        ps = np.linspace(-1.0, 1.0, 5)

        self.assertEqual(
            sigma_growth_check(sigma, ps, np.ones(5), 1e-8, 0.1,
                               constant=0.0, slack=0.01),
            [], "Projected segment grows like 2r"
        )

        upright = pushforward_projection(
            segment(half_length=5.0, spacing=0.01, angle=np.pi / 2)
        )
        violations = sigma_growth_check(upright, ps, np.ones(5), 1e-8, 0.1)

        self.assertGreater(len(violations), 0)
        self.assertIn(0.0, [check.detail["p"] for check in violations])
        self.assertTrue(all("r" in check.detail for check in violations))

    def test_g_bounds(self) -> None:
        ts = np.linspace(-8.0, 8.0, 161)
        g_max, deviation = g_bounds_check(ts, np.ones(161), 0.1)

        self.assertTrue(g_max.passed)
        self.assertEqual(deviation.lhs, 0.0)

        bumped = np.ones(161)
        bumped[80] = 3.0
        g_max, _ = g_bounds_check(ts, bumped, 0.1)
        self.assertFalse(g_max.passed)

    def test_eta_variation(self) -> None:
        ts = np.linspace(-1.0, 1.0, 2001)
        lam = 2.5e-4

        check = eta_variation_check(ts, 1.0 + np.abs(ts), lam)
        self.assertTrue(check.passed)
        self.assertGreater(check.detail["pairs"], 0)
        self.assertGreater(check.lhs, 0.0, "Windows differ along D")

        exact = eta_variation_check(ts[::100], 1.0 + np.abs(ts[::100]), lam,
                                    D_function=lambda t: 1.0 + np.abs(t))
        self.assertTrue(exact.passed)
        self.assertGreater(exact.detail["pairs"], 0,
                           "Coarse centres still compare inside windows")

        flat = eta_variation_check(ts, np.ones(len(ts)), lam)
        self.assertAlmostEqual(flat.lhs, 0.0, places=12)

        vacuous = eta_variation_check(ts, np.zeros(len(ts)), lam)
        self.assertTrue(vacuous.passed)
        self.assertFalse(vacuous.hypotheses)

    def test_band_operator(self) -> None:
        self.assertEqual(
            band_operator_normal(self.cross, 0.1j, 1.0, 3), 0.0
        )
        self.assertLessEqual(
            abs(band_operator_normal(self.coarse_segment, 0, 0.1, 3)),
            1e-12
        )

    def test_commutator_tail(self) -> None:
        flat = SampledGraph(KNOTS, np.zeros(len(KNOTS)))
        self.assertTrue(np.all(commutator_tail(flat, [0.0, 0.25], 3) == 0))

        small = commutator_tail(bump_graph(0.01), [0.25], 3)[0]
        double = commutator_tail(bump_graph(0.02), [0.25], 3)[0]
        self.assertAlmostEqual(double / small, 8.0, delta=0.4,
                               msg="Cubic leading order")

        self.assertNotEqual(commutator_tail(bump_graph(0.01), [0.25],
                                            1)[0], 0.0)

        with self.assertRaises(SlopeTooLarge):
            commutator_tail(bump_graph(1.0), [0.25], 3)

    def test_lower_bound_ledger(self) -> None:
        flat = SampledGraph(KNOTS, np.zeros(len(KNOTS)))
        entry = lower_bound_ledger(flat, 3)
        self.assertEqual((entry.lhs, entry.energy, entry.sup),
                         (0.0, 0.0, 0.0))

        small = lower_bound_ledger(bump_graph(1e-3), 3)
        large = lower_bound_ledger(bump_graph(1e-2), 3)
        self.assertAlmostEqual(
            (large.lhs / 1e-4) / (small.lhs / 1e-6), 1.0, delta=0.02,
            msg="Quadratic in the amplitude"
        )

        first = lower_bound_ledger(bump_graph(1e-3), 1)
        fifth = lower_bound_ledger(bump_graph(1e-3), 5)
        self.assertAlmostEqual(small.lhs / first.lhs, 9.0, delta=0.45)
        self.assertAlmostEqual(fifth.lhs / first.lhs, 25.0, delta=1.25)

        for entry in (first, small, fifth):
            self.assertTrue(lower_bound_check(entry).passed,
                            entry.api_schema)

        self.assertGreaterEqual(
            calibrate_lower_bound([small, large]), 22.2066
        )

        with self.assertRaises(SlopeTooLarge):
            lower_bound_ledger(bump_graph(0.1), 3)

    def test_analyze_segment(self) -> None:
        construction = segment_construction()
        report = analyze(construction.region, construction.partition,
                         construction.graph)

        self.assertTrue(report.passed, [
            check.api_schema for check in report.all_checks
            if not check.passed
        ])
        self.assertEqual(report.growth, [])
        self.assertEqual(report.band_graph, 0.0, "Flat graph")
        self.assertEqual(report.ledger.lhs, 0.0)
        self.assertTrue(report.deviation.lhs >= 0)

        schema = report.api_schema
        self.assertIn("growth_violations", schema)
        self.assertTrue(all(
            np.isfinite(value) for value in schema.values()
            if isinstance(value, float)
        ))
