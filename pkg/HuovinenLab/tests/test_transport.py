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

from ..exceptions import AtomLimitExceeded, EmptyCone
from ..measure import (
    Ball, DiscreteMeasure, Line, SpikeMeasure, generate
)
from ..misc import acute_angle
from ..settings import TransportSettings
from ..transport import (
    phi,
    normalization_c,
    alpha_pair,
    alpha_line,
    alpha_spike,
    line_lower_bound,
    modified_density,
    spike_fit,
    check_far_from_support,
    check_move_off_support,
    check_density_comparison,
    continuity_profile,
    randomized_lemma_suite,
    lines_dont_move_diagnostic,
    spike_flattening_diagnostic,
    density_cap_check
)


class TestTransport(TestBase, unittest.TestCase):
    def test_phi(self) -> None:
        self.assertEqual(phi(0.0), 1.0)
        self.assertEqual(phi(3.5), 0.5)
        self.assertEqual(phi(4.0), 0.0)
        self.assertEqual(phi(7.0), 0.0)

    def test_normalization(self) -> None:
        mu = self.coarse_segment

        self.assertAlmostEqual(normalization_c(mu, mu, self.unit_ball), 1.0)
        self.assertAlmostEqual(
            normalization_c(mu, mu.scaled(2.0), self.unit_ball), 0.5
        )

        far = DiscreteMeasure([10.0], [1.0])
        self.assertEqual(normalization_c(mu, far, self.unit_ball), 0.0)

    def test_alpha_identity(self) -> None:
        mu = self.coarse_segment
        self.assertLessEqual(
            alpha_pair(mu, mu, self.unit_ball, self.settings).value, 1e-9
        )
        self.assertLessEqual(
            alpha_pair(mu, mu.scaled(2.0), self.unit_ball,
                       self.settings).value,
            1e-9, "c cancels global scaling"
        )

    def test_dilation_invariance(self) -> None:
        mu = self.cross.restrict_ball(Ball(0, 4.5))
        line = Line(0, 0.2)

        single = alpha_line(mu, self.unit_ball, "fixed", line=line,
                            settings=self.settings)
        double = alpha_line(mu.transformed(dilation=2.0), Ball(0, 2),
                            "fixed", line=line, settings=self.settings)

        self.assertAlmostEqual(single.value, double.value, places=6)

    def test_atom_guard(self) -> None:
        with self.assertRaises(AtomLimitExceeded):
            alpha_pair(self.coarse_segment, self.coarse_segment,
                       self.unit_ball, TransportSettings(n_max=10))

    def test_line_fixed(self) -> None:
        flat = alpha_line(self.coarse_segment, self.unit_ball, "fixed",
                          line=Line(0, 0), settings=self.settings)
        self.assertLessEqual(flat.value, 5 * 0.02, "Quadrature only")
        self.assertEqual(flat.witness_kind, "line")

        upright = alpha_line(self.coarse_segment, self.unit_ball, "fixed",
                             line=Line(0, np.pi / 2), settings=self.settings)
        self.assertGreater(upright.value, 0.2)

    def test_rotation_equivariance(self) -> None:
        mu = self.cross.restrict_ball(Ball(0, 4.5))
        rotated = mu.transformed(rotation=0.7)

        first = alpha_line(mu, self.unit_ball, "fixed", line=Line(0, 0.3),
                           settings=self.settings)
        second = alpha_line(rotated, self.unit_ball, "fixed",
                            line=Line(0, 1.0), settings=self.settings)

        self.assertAlmostEqual(first.value, second.value, places=6)

    def test_line_search(self) -> None:
        tilted = self.coarse_segment.transformed(rotation=0.4)
        result = alpha_line(tilted, self.unit_ball, settings=self.settings)

        self.assertLess(acute_angle(result.witness.angle, 0.4), 0.02)
        self.assertLessEqual(result.value, 5 * 0.02)

    def test_cone(self) -> None:
        with self.assertRaises(EmptyCone):
            alpha_line(self.coarse_segment, self.unit_ball, "cone",
                       cone=(0.0, 0.0), settings=self.settings)

        result = alpha_line(self.coarse_segment, self.unit_ball, "cone",
                            cone=(0.1, 0.05), settings=self.settings)
        self.assertLessEqual(acute_angle(result.witness.angle, 0.05), 0.1)
        self.assertLessEqual(result.value, 5 * 0.02)

    def test_cone_hint(self) -> None:
        tilted = self.coarse_segment.transformed(rotation=0.03)

        # pi + 0.03 is the same line, folded back into the cone.
        result = alpha_line(tilted, self.unit_ball, "cone",
                            cone=(0.1, 0.0), settings=self.settings,
                            stop_below=1.0, hint=np.pi + 0.03)
        self.assertAlmostEqual(result.witness.angle, 0.03, places=9)

        result = alpha_line(tilted, self.unit_ball, "cone",
                            cone=(0.1, 0.0), settings=self.settings,
                            hint=1.0)
        self.assertLessEqual(acute_angle(result.witness.angle, 0.0), 0.1)

    def test_line_lower_bound(self) -> None:
        self.assertLess(
            line_lower_bound(self.coarse_segment, self.unit_ball, -0.1, 0.1),
            1e-3
        )

        bound = line_lower_bound(self.cross, self.unit_ball, -0.1, 0.1)
        result = alpha_line(self.cross, self.unit_ball, "cone",
                            cone=(0.1, 0.0), settings=self.settings)
        self.assertGreater(bound, 1.0, "The vertical arm is far off")
        self.assertLessEqual(bound, result.value + 1e-6)

    def test_spike_at_vertex(self) -> None:
        # Off-vertex candidates do not share the lattice of the atoms.
        settings = TransportSettings(n_max=6000, angle_seeds=8,
                                     angle_tol=1e-3, vertex_steps=5,
                                     vertex_reach=4.0)
        result = alpha_spike(self.spike_atoms, self.unit_ball, 3, settings)

        self.assertEqual(result.witness_kind, "spike")
        self.assertLessEqual(result.value, 5 * 0.01)

    def test_spike_on_line(self) -> None:
        line = alpha_line(self.coarse_segment, self.unit_ball,
                          settings=self.settings)
        spike = alpha_spike(self.coarse_segment, self.unit_ball, 3,
                            self.settings)

        self.assertLessEqual(spike.value, line.value + 1e-12,
                             "Lines are 3-spikes")

    def test_modified_density_segment(self) -> None:
        result = modified_density(self.coarse_segment, Ball(0, 0.04), 0.1,
                                  3, self.settings, lambda_value=0.0072)

        self.assertIsNotNone(result.witness, "A sub-ball qualifies")
        self.assertAlmostEqual(result.base_density, 1.0)
        self.assertAlmostEqual(result.value, result.base_density)

    def test_modified_density_escapes_vertex(self) -> None:
        mu = generate("spike", spacing=0.001, window_radius=1.7, angle=0.0,
                      m=3, k=3)

        result = modified_density(mu, self.unit_ball, 1e-3, 3,
                                  self.settings, lambda_value=0.0072)

        self.assertIsNotNone(result.witness)
        self.assertAlmostEqual(result.base_density, 3.0, delta=0.01)
        self.assertAlmostEqual(result.value, 1.0, delta=0.03)
        self.assertAlmostEqual(result.ratio, 3.0, delta=0.1,
                               msg="Escapes the vertex to one ray")
        self.assertGreater(abs(result.witness.center), 0.5)

    def test_modified_density_empty(self) -> None:
        # A heavy atom at the centre leaves every candidate too sparse.
        heavy = self.coarse_segment + DiscreteMeasure([0.0], [20.0])
        result = modified_density(heavy, self.unit_ball, 1e-3, 3,
                                  self.settings, lambda_value=0.0072,
                                  centers=[0.5], radii=[0.1])

        self.assertEqual(result.value, 0.0)
        self.assertIsNone(result.witness)
        self.assertEqual(result.tested, 0)

    def test_far_from_support(self) -> None:
        line = SpikeMeasure(0, 0, 1, 1)
        mu = self.coarse_segment + DiscreteMeasure([0.5 + 0.6j], [0.05])
        check = check_far_from_support(mu, line, self.unit_ball,
                                       0.5 + 0.6j, 0.2, self.settings)

        self.assertTrue(check.hypotheses)
        self.assertTrue(check.passed, check.api_schema)

    def test_density_comparison(self) -> None:
        line = SpikeMeasure(0, 0, 1, 1)
        fit = spike_fit(self.coarse_segment, line, self.unit_ball,
                        self.settings)

        upper = check_density_comparison(self.coarse_segment, line,
                                         self.unit_ball, 0.3 + 0.2j, 0.9,
                                         "upper", self.settings, fit)
        lower = check_density_comparison(self.coarse_segment, line,
                                         self.unit_ball, 0.3, 0.9,
                                         "lower", self.settings, fit)

        self.assertTrue(upper.passed, upper.api_schema)
        self.assertTrue(lower.passed, lower.api_schema)

        with self.assertRaises(ValueError):
            check_density_comparison(self.coarse_segment, line,
                                     self.unit_ball, 0.3, 0.9, "middle",
                                     self.settings, fit)

    def test_move_off_support(self) -> None:
        check = check_move_off_support(self.spike, 2 + 1j, 0.5,
                                       self.spike.lines[1].direction, 0.1)

        self.assertTrue(check.hypotheses)
        self.assertTrue(check.passed)

    def test_randomized_suite(self) -> None:
        checks = randomized_lemma_suite(count=3, seed=1, spacing=0.02,
                                        settings=self.settings)

        self.assertEqual(len(checks), 12)
        self.assertTrue(all(check.passed for check in checks),
                        [check.api_schema for check in checks
                         if not check.passed])

    def test_continuity(self) -> None:
        check = continuity_profile(self.coarse_segment, self.unit_ball,
                                   steps=4, settings=self.settings,
                                   tolerance=5 * 0.02)
        self.assertTrue(check.passed, check.api_schema)

    def test_lines_dont_move(self) -> None:
        check = lines_dont_move_diagnostic(
            self.coarse_segment, self.unit_ball, Ball(0.3, 0.5),
            self.settings
        )

        self.assertTrue(check.hypotheses)
        self.assertLess(check.detail["angle"], 0.05)

    def test_spike_flattening(self) -> None:
        check = spike_flattening_diagnostic(
            self.coarse_segment, self.unit_ball, 0.1, 0.2, 3, self.settings
        )

        self.assertTrue(check.hypotheses)
        self.assertLess(check.detail["angle"], 0.05, "Child keeps the line")
        self.assertAlmostEqual(check.detail["delta"], 1.0, delta=0.1)

        vacuous = spike_flattening_diagnostic(
            self.coarse_segment, self.unit_ball, 0.1, 0.5, 3, self.settings
        )
        self.assertFalse(vacuous.hypotheses, "s above r / 4")
        self.assertTrue(vacuous.passed)

    def test_density_cap(self) -> None:
        check = density_cap_check(self.coarse_segment, self.unit_ball,
                                  1e-8, 0.01, 3, self.settings,
                                  max_centers=16)

        self.assertGreaterEqual(check.detail["radius_floor"], 4 * 0.02,
                                "Floored at the atom resolution")
        self.assertLessEqual(check.lhs, 1.1)
        self.assertTrue(check.passed, check.api_schema)
