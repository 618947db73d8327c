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

from .. import Laboratory

from ..exceptions import (
    InvalidKernelOrder, SeriesOrderTooLarge, StepTooCoarse, ZeroPoint
)
from ..measure import DiscreteMeasure, GraphProfile, cantor
from ..operator import (
    SampledGraph,
    kernel,
    psi,
    truncated_transform,
    maximal_transform,
    psi_sandwich,
    operator_norm_estimate,
    kernel_series,
    flat_tail,
    pv_graph_profile,
    pv_graph_transform
)


def bump_graph(amplitude: float, step: float) -> SampledGraph:
    return SampledGraph.from_function(
        GraphProfile("bump", amplitude).value,
        np.arange(-2.0, 2.0 + step / 2, step)
    )


class TestOperator(TestBase, unittest.TestCase):
    def test_kernel(self) -> None:
        self.assertEqual(kernel(1, 1), 1)
        self.assertAlmostEqual(kernel(3, 1j), -1j)
        self.assertAlmostEqual(kernel(3, 1j, "normal"), -1.0)

        points = np.array([0.3 + 0.7j, -2.0 + 0.1j, 5j])
        for k in (1, 3, 5):
            self.assertTrue(np.allclose(kernel(k, -points),
                                        -kernel(k, points)), "Odd kernel")

        with self.assertRaises(ZeroPoint):
            kernel(3, 0)

        with self.assertRaises(InvalidKernelOrder):
            kernel(2, 1)

    def test_psi(self) -> None:
        self.assertEqual(psi(0.4), 0.0)
        self.assertEqual(psi(0.75), 0.5)
        self.assertEqual(psi(2.0), 1.0)

        grid = np.linspace(0.0, 1.5, 3001)
        values = psi(grid)
        self.assertTrue(np.all(np.diff(values) >= 0), "Nondecreasing")

        step = grid[1] - grid[0]
        second = np.diff(values, 2) / step ** 2
        self.assertLessEqual(float(np.max(np.abs(second))), 24.0 + 1e-6)

    def test_band_zero(self) -> None:
        for upper in (0.5, 0.3):
            self.assertEqual(
                truncated_transform(self.spike_atoms, 0.1j, 0.5, 3,
                                    upper=upper), 0
            )

    def test_symmetric_measure(self) -> None:
        z = 0.3 - 0.2j
        offsets = np.array([0.1 + 0.4j, -1.2 + 0.3j, 0.05j])
        mu = DiscreteMeasure(np.concatenate((z + offsets, z - offsets)),
                             np.tile([0.2, 1.0, 0.7], 2))

        for r in (0.01, 0.2, 1.0, 10.0):
            self.assertAlmostEqual(
                abs(truncated_transform(mu, z, r, 3)), 0.0, places=12
            )
        self.assertAlmostEqual(maximal_transform(mu, z, 3), 0.0,
                               places=12)

    def test_line_quadrature(self) -> None:
        for r in (0.1, 0.5):
            value = truncated_transform(self.coarse_segment, 0.01, r, 1)
            self.assertLessEqual(abs(value), 0.02 / r,
                                 "Cancels up to quadrature error")

    def test_psi_sandwich(self) -> None:
        mu = cantor(3)
        for r in (0.01, 0.1, 0.4):
            check = psi_sandwich(mu, 0.3 + 0.2j, r, 3)
            self.assertTrue(check.passed, check.api_schema)

    def test_maximal_single_atom(self) -> None:
        mu = DiscreteMeasure([3 + 4j], [0.5])
        self.assertAlmostEqual(maximal_transform(mu, 0, 3), 0.1,
                               places=12)

        self.assertEqual(
            maximal_transform(DiscreteMeasure.empty(), 0, 3), 0.0
        )

    def test_norm_estimate(self) -> None:
        self.assertEqual(
            operator_norm_estimate(DiscreteMeasure([1j], [1.0]), 3).value,
            0.0
        )

        mu = cantor(2)
        first = operator_norm_estimate(mu, 3)
        moved = operator_norm_estimate(
            mu.transformed(rotation=1.1, shift=2 - 1j), 3
        )

        self.assertTrue(first.converged)
        self.assertGreater(first.value, 0.0)
        self.assertAlmostEqual(first.value, moved.value, places=5,
                               msg="Rigid motions keep the norm")

    def test_series_coefficients(self) -> None:
        for k in (1, 3, 5, 7):
            series = kernel_series(k, 41)
            self.assertEqual(series[1], k)
            self.assertTrue(all(value.denominator == 1
                                for _, value in series))

        three = kernel_series(3, 41)
        self.assertEqual(three[3], -7)
        self.assertEqual(three[5], 11)
        self.assertIn((3, 3, -7, 1), list(three.rows()))

    def test_series_guard(self) -> None:
        for order in (61, 2, 1):
            with self.assertRaises(SeriesOrderTooLarge):
                kernel_series(3, order)

        with self.assertRaises(InvalidKernelOrder):
            kernel_series(4, 41)

    def test_series_cache(self) -> None:
        Laboratory(transport_settings=self.settings)
        self.assertEqual(kernel_series.cache_info().currsize, 0)

        first = kernel_series(5, 41)
        hits = kernel_series.cache_info().hits
        self.assertIs(kernel_series(5, 41), first)
        self.assertEqual(kernel_series.cache_info().hits, hits + 1)

        with self.assertRaises(InvalidKernelOrder):
            kernel_series(4, 41)
        self.assertEqual(kernel_series.cache_info().currsize, 1,
                         "Errors aren't cached")

        Laboratory(transport_settings=self.settings, clear_cache=False)
        self.assertEqual(kernel_series.cache_info().currsize, 1)

    def test_series_consistency(self) -> None:
        s = np.linspace(-0.4, 0.4, 41)
        for k in (1, 3, 5, 7):
            series = kernel_series(k, 41)
            for t in (1.0, -2.5):
                self.assertTrue(np.allclose(
                    series.evaluate(t, s * abs(t)),
                    kernel(k, t + 1j * s * abs(t), "normal"),
                    rtol=0, atol=1e-10
                ), "k={}, t={}".format(k, t))

            sums = series.partial_sums(0.5)
            self.assertTrue(np.all(np.diff(sums) >= 0))
            self.assertLess(sums[-1] - sums[-2], 1e-6)

    def test_flat_tail(self) -> None:
        self.assertAlmostEqual(float(flat_tail(1j, 0.0, 0.0, np.inf, 1)),
                               np.pi / 2, places=12)
        self.assertEqual(float(flat_tail(2.0, 0.0, -np.inf, np.inf, 3)),
                         0.0)

    def test_flat_graph(self) -> None:
        flat = SampledGraph(self.graph_settings.knots,
                            np.zeros(len(self.graph_settings.knots)))
        values, _ = pv_graph_profile(flat, flat.knots[::16], 3)

        self.assertLessEqual(float(np.max(np.abs(values))), 1e-12)

    def test_graph_oddness(self) -> None:
        graph = bump_graph(0.05, 1.0 / 64)
        ts = graph.knots[::8]

        values, _ = pv_graph_profile(graph, ts, 3)
        negated, _ = pv_graph_profile(graph.negated(), ts, 3)

        self.assertTrue(np.allclose(values, -negated, rtol=0, atol=1e-13))

    def test_graph_leading_term(self) -> None:
        graph = bump_graph(1e-3, 1.0 / 64)

        first = pv_graph_transform(graph, 0.5, 1).value
        third = pv_graph_transform(graph, 0.5, 3).value

        self.assertAlmostEqual(third / (3 * first), 1.0, delta=0.01)

    def test_graph_convergence(self) -> None:
        values = [
            pv_graph_transform(bump_graph(0.05, step), 0.25, 3).value
            for step in (1.0 / 32, 1.0 / 64, 1.0 / 128)
        ]

        coarse = abs(values[0] - values[1])
        fine = abs(values[1] - values[2])
        self.assertGreaterEqual(coarse / fine, 1.6, "Order at least 1")

    def test_graph_band(self) -> None:
        graph = bump_graph(0.05, 1.0 / 64)
        ts = graph.knots[64:-64:16]

        band, _ = pv_graph_profile(graph, ts, 3, (0.1, 0.5))
        inner, _ = pv_graph_profile(graph, ts, 3, (0.1, None))
        outer, _ = pv_graph_profile(graph, ts, 3, (0.5, None))

        self.assertTrue(np.allclose(band, inner - outer, rtol=0,
                                    atol=1e-9))

        empty, _ = pv_graph_profile(graph, ts, 3, (0.5, 0.1))
        self.assertTrue(np.all(empty == 0))

    def test_graph_tolerance(self) -> None:
        with self.assertRaises(StepTooCoarse):
            pv_graph_transform(bump_graph(0.05, 1.0 / 16), 0.25, 3,
                               tolerance=1e-15)
