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


import time
import unittest
import numpy as np

from functools import lru_cache

from .base import TestBase

from ..constants import PARTITION_DERIVATIVE_C, WHITNEY_OVERLAP_MAX
from ..exceptions import ResolutionTooCoarse
from ..measure import (
    Ball, DiscreteMeasure, GraphProfile, density, lipschitz_graph, segment
)
from ..misc import acute_angle
from ..settings import GraphSettings, StopParams
from ..stopping import (
    Partition,
    WhitneyPiece,
    in_s_total,
    membership_profile,
    bisected_profile,
    height_from_profile,
    stopping_height,
    lipschitz_excess,
    height_report,
    whitney_cover,
    partition_of_unity,
    partition_derivative_bound,
    localization,
    normalize_measure,
    slope_pairs_check,
    z_slope_check,
    construct
)


STRAY = 0.3 + 0.95j

PARAMS = StopParams(
    delta=0.8, epsilon=0.01, alpha=0.6, theta=0.35, k=3,
    t_grid_size=3, t_max=1.0
)


def segment_with_stray() -> DiscreteMeasure:
    return segment(half_length=6.0, spacing=0.05) \
        + DiscreteMeasure([STRAY], [1e-4])


@lru_cache(maxsize=None)
def segment_construction():
    from .base import laboratory

    return construct(
        segment_with_stray(), PARAMS,
        graph_settings=GraphSettings(knot_step=1.0 / 64, knot_extent=4.0),
        settings=laboratory.transport_settings
    )


class TestStopping(TestBase, unittest.TestCase):
    def test_in_s_total(self) -> None:
        member, witness = in_s_total(segment_with_stray(), 0, 1.0, PARAMS,
                                     self.settings)
        self.assertTrue(member)
        self.assertLessEqual(acute_angle(witness.angle, 0.0), PARAMS.alpha)

        member, witness = in_s_total(segment_with_stray(), STRAY, 0.1,
                                     PARAMS, self.settings)
        self.assertFalse(member, "Light isolated atom is sparse")
        self.assertIsNone(witness)

        member, _ = in_s_total(self.cross, 0, 1.0, PARAMS, self.settings)
        self.assertFalse(member, "No cone line fits a cross")

    def test_height_from_profile(self) -> None:
        grid = np.array([0.1, 0.2, 0.4, 0.8])

        self.assertEqual(
            height_from_profile(grid, np.array([False, False, True, True])),
            (0.2, True)
        )
        self.assertEqual(
            height_from_profile(grid, np.ones(4, dtype=bool)), (0.0, True)
        )
        self.assertEqual(
            height_from_profile(grid, np.array([True, False, True, True])),
            (0.2, False)
        )

    def test_stopping_height_bisect(self) -> None:
        mu = segment_with_stray()
        grid = np.array([0.2, 0.5, 1.0])

        full = stopping_height(mu, STRAY, PARAMS, grid, self.settings)
        bisected = stopping_height(mu, STRAY, PARAMS, grid, self.settings,
                                   bisect=True)

        self.assertEqual(full, 1.0)
        self.assertEqual(bisected, full)

    def test_bisected_profile(self) -> None:
        mu = segment_with_stray()
        grid = np.array([0.1, 0.2, 0.5, 1.0])

        for x in (0.0, 2.5, STRAY):
            full, _ = membership_profile(mu, x, grid, PARAMS, self.settings)
            members, witnesses = bisected_profile(mu, x, grid, PARAMS,
                                                  self.settings)

            np.testing.assert_array_equal(members, full)
            for member, witness in zip(members, witnesses):
                if witness is not None:
                    self.assertTrue(member)

        members, witnesses = bisected_profile(mu, 0.0, grid, PARAMS,
                                              self.settings)
        self.assertLess(sum(line is not None for line in witnesses),
                        len(grid), "Bisection skips scales")

    def test_near_flat_pipeline(self) -> None:
        mu = lipschitz_graph(GraphProfile("slope", 0.005),
                             half_length=10.0, spacing=0.02)
        params = self.stop_params

        start = time.perf_counter()
        normalized, _ = normalize_measure(mu, self.unit_ball, self.settings)
        construction = construct(normalized, params,
                                 graph_settings=self.graph_settings,
                                 settings=self.settings)
        elapsed = time.perf_counter() - start

        region = construction.region
        inside = np.abs(region.positions) <= 1.0
        base_mass = float(np.sum(region.mu.weights[region.centers][inside]))

        self.assertGreaterEqual(construction.partition.masses["Z"],
                                0.95 * base_mass)
        self.assertLessEqual(construction.graph.lipschitz_constant,
                             10 * params.alpha)
        self.assertGreaterEqual(construction.report.closeness, 0.99)
        self.assertLess(elapsed, 15 * 60)

    def test_segment_region(self) -> None:
        region = segment_construction().region

        stray = np.isclose(region.positions, STRAY)
        self.assertTrue(np.all(region.heights[~stray] == 0),
                        "Segment atoms are members at every scale")
        self.assertEqual(float(region.heights[stray][0]), 1.0)
        self.assertTrue(np.all(region.monotone))

        positions, scales, _ = region.pairs()
        self.assertTrue(np.all(region.d(positions) <= scales + 1e-12))
        self.assertTrue(np.all(region.d(region.positions[~stray]) == 0))

        plane = np.array([0.5 + 0.3j, -2.0 + 1.0j, 0.25, 3 - 2j, STRAY])
        self.assertTrue(np.all(region.D(plane.real) <= region.d(plane)))

        self.assertLessEqual(lipschitz_excess(plane, region.d(plane)),
                             1e-12)
        line = np.linspace(-4.0, 4.0, 81)
        self.assertLessEqual(lipschitz_excess(line, region.D(line)), 1e-12)

    def test_height_report(self) -> None:
        report = height_report(segment_construction().region)

        self.assertEqual(report["max_height"], 1.0, "The stray atom")
        self.assertAlmostEqual(report["height_scale"],
                               np.sqrt(PARAMS.epsilon) / PARAMS.alpha)
        self.assertAlmostEqual(report["height_ratio"],
                               1.0 / report["height_scale"])

    def test_segment_partition(self) -> None:
        construction = segment_construction()
        partition = construction.partition
        mu = partition.mu

        self.assertEqual(len(partition.f2), 0)
        self.assertEqual(len(partition.leaked), 0)
        self.assertEqual(list(mu.positions[partition.f1]), [STRAY])
        self.assertEqual(
            len(partition.z) + len(partition.f1),
            len(construction.region.centers)
        )

        _, stray_density = density(mu, Ball(STRAY, 1.0))
        self.assertLess(stray_density, PARAMS.delta)

        self.assertTrue(z_slope_check(partition, PARAMS).passed)
        self.assertTrue(slope_pairs_check(construction.region).passed)

    def test_segment_graph(self) -> None:
        construction = segment_construction()
        graph = construction.graph

        self.assertLessEqual(float(np.max(np.abs(graph.values))), 1e-12,
                             "Flat measure, flat graph")
        self.assertEqual(graph.lipschitz_constant, 0.0)
        self.assertEqual(len(construction.cover.included),
                         len(construction.cover),
                         "Every interval has an S ball")
        self.assertLessEqual(construction.cover.overlap,
                             WHITNEY_OVERLAP_MAX)

        for piece in construction.cover.included:
            self.assertLessEqual(abs(piece.slope), 2 * PARAMS.alpha)

        low, high = graph.support()
        self.assertGreaterEqual(low, -3.0)
        self.assertLessEqual(high, 3.0)

    def test_segment_report(self) -> None:
        construction = segment_construction()
        report = construction.report
        centers = len(construction.region.centers)

        self.assertEqual(report.derivative_l2_squared, 0.0)
        self.assertEqual(report.f2_ratio, 0.0)
        self.assertAlmostEqual(report.closeness, (centers - 1) / centers,
                               msg="All but the stray atom lie on it")
        self.assertAlmostEqual(report.masses["F1"], 1e-4)
        self.assertIn("mass_Z", report.api_schema)

    def test_whitney_constant(self) -> None:
        grid = np.linspace(0.0, 10.0, 1281)
        cover = whitney_cover(grid, np.ones(len(grid)), (0.0, 10.0))

        self.assertTrue(np.all(cover.lengths == 1.0 / 32))
        self.assertEqual(cover.violations, 0)
        self.assertLessEqual(cover.overlap, WHITNEY_OVERLAP_MAX)

        lefts = np.array([piece.left for piece in cover])
        self.assertTrue(np.all(np.diff(lefts) >= 1.0 / 32),
                        "Pairwise disjoint")

        psi, covered = partition_of_unity(cover.pieces, grid)
        self.assertTrue(np.allclose(np.sum(psi, axis=0)[covered], 1.0,
                                    rtol=0, atol=1e-12))
        self.assertLessEqual(
            partition_derivative_bound(cover.pieces, psi, grid[1] - grid[0]),
            PARTITION_DERIVATIVE_C
        )

    def test_whitney_distance(self) -> None:
        grid = np.linspace(-2.0, 2.0, 513)
        cover = whitney_cover(grid, np.abs(grid), (-2.0, 2.0))

        piece = [piece for piece in cover
                 if piece.left <= 1.0 < piece.right][0]
        self.assertEqual(piece.left, 1.0)
        self.assertEqual(piece.length, 1.0 / 32)

        with self.assertRaises(ResolutionTooCoarse):
            coarse = np.linspace(-2.0, 2.0, 9)
            whitney_cover(coarse, np.abs(coarse) * 0.01, (-2.0, 2.0))

    def test_single_interval(self) -> None:
        piece = WhitneyPiece(0.0, 1.0)
        points = np.linspace(-0.49, 1.49, 199)

        psi, covered = partition_of_unity([piece], points)
        self.assertTrue(np.all(covered))
        self.assertTrue(np.all(psi == 1.0))

    def test_localization(self) -> None:
        self.assertEqual(float(localization(0.0)), 1.0)
        self.assertEqual(float(localization(-1.5)), 1.0)
        self.assertEqual(float(localization(2.0)), 0.0)
        self.assertEqual(float(localization(3.0)), 0.0)

    def test_normalize_measure(self) -> None:
        mu = segment(half_length=5.0, spacing=0.05).transformed(
            rotation=0.4, shift=1 + 1j
        ).scaled(3.0)

        normalized, transform = normalize_measure(mu, Ball(1 + 1j, 1.0),
                                                  self.settings)

        _, base_density = density(normalized, Ball(0, 1))
        self.assertAlmostEqual(base_density, 1.0, places=9)
        self.assertLess(acute_angle(transform["rotation"], -0.4), 0.02)
        self.assertLess(float(np.max(np.abs(normalized.positions.imag))),
                        0.1)

    def test_z_slope(self) -> None:
        xs = np.linspace(-1.0, 1.0, 21)

        gentle = DiscreteMeasure(xs + 0.05j * xs, np.ones(21))
        partition = Partition(gentle, np.arange(21), [], [])
        self.assertTrue(z_slope_check(partition, PARAMS).passed)

        steep = DiscreteMeasure(xs + 1.5j * xs, np.ones(21))
        partition = Partition(steep, np.arange(21), [], [])
        self.assertFalse(z_slope_check(partition, PARAMS).passed)
