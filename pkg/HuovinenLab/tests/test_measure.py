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


import os
import unittest
import tempfile
import numpy as np

from .base import TestBase

from ..exceptions import (
    GenerationTooDeep, InvalidMeasure, InvalidSpacing, MeasureFileError,
    InvalidGenerator
)
from ..measure import (
    Ball,
    Line,
    SpikeMeasure,
    DiscreteMeasure,
    GraphProfile,
    density,
    density_profile,
    resolved_densities,
    density_ratio_spike,
    spike_density_ratio_search,
    lambda_constant,
    lambda_k,
    density_ratio_k,
    pushforward_projection,
    discretize_model,
    segment,
    lipschitz_graph,
    perturbed_line,
    cantor,
    generate,
    read_measure,
    write_measure
)
from ..misc import nearest_neighbor_gap


class TestMeasure(TestBase, unittest.TestCase):
    def test_density_open_ball(self) -> None:
        mu = DiscreteMeasure([-0.5, 0.5], [0.5, 0.5])
        self.assertEqual(density(mu, self.unit_ball), (1.0, 0.5),
                         "Two half atoms")

        boundary = DiscreteMeasure([1.0], [1.0])
        self.assertEqual(density(boundary, self.unit_ball)[0], 0.0,
                         "Boundary atom excluded")

    def test_density_scale_covariance(self) -> None:
        scaled = self.coarse_segment.transformed(dilation=2.0)
        self.assertAlmostEqual(
            density(self.coarse_segment, Ball(0.01, 1.0))[1],
            density(scaled, Ball(0.02, 2.0))[1],
            places=12, msg="Dilation with weights leaves density"
        )

    def test_invalid_measure(self) -> None:
        with self.assertRaises(InvalidMeasure):
            DiscreteMeasure([0, 1], [1.0, 0.0])

        with self.assertRaises(InvalidMeasure):
            DiscreteMeasure([0, 1], [1.0])

    def test_discretize_line(self) -> None:
        line = SpikeMeasure(0, 0, 1, 1)
        atoms = discretize_model(line, self.unit_ball, 0.01)

        self.assertEqual(len(atoms), 200, "Midpoint atom count")
        self.assertAlmostEqual(atoms.total_mass, 2.0, places=12)

    def test_discretize_spike(self) -> None:
        atoms = discretize_model(SpikeMeasure(0, 0, 3, 3), self.unit_ball,
                                 0.01)
        self.assertLessEqual(abs(atoms.total_mass - 6.0), 3 * 0.01,
                             "Three diameters")

    def test_discretize_far_vertex(self) -> None:
        # Only the ray along the real axis reaches the window.
        nu = SpikeMeasure(-10, 0, 3, 3)
        atoms = discretize_model(nu, self.unit_ball, 0.01)

        self.assertTrue(np.allclose(atoms.positions.imag, 0.0))
        self.assertAlmostEqual(atoms.total_mass, 2.0, places=12)

    def test_discretize_spacing_guard(self) -> None:
        with self.assertRaises(InvalidSpacing):
            discretize_model(SpikeMeasure(0, 0, 1, 1), self.unit_ball, 0.2)

        with self.assertRaises(InvalidSpacing):
            discretize_model(SpikeMeasure(0, 0, 1, 1), self.unit_ball, 0.0)

    def test_density_ratio(self) -> None:
        for m in (1, 3, 5):
            nu = SpikeMeasure(0, 0, m, 15)
            self.assertEqual(density_ratio_spike(nu), m)
            self.assertAlmostEqual(
                spike_density_ratio_search(nu, [0.01, 1.0, 100.0],
                                           [0.0, 50.0]),
                m, places=9, msg="Grid sup matches m"
            )

        self.assertEqual(density_ratio_k(3), 3)
        self.assertLessEqual(density_ratio_k(15), 15)

    def test_move_off_support_exact(self) -> None:
        nu = SpikeMeasure(0, 0.4, 3, 3)
        rng = np.random.default_rng(3)

        for _ in range(50):
            x = complex(*rng.uniform(-2, 2, 2))
            line = nu.lines[rng.integers(3)]
            z = line.base + rng.uniform(-2, 2) * line.direction
            r, s = rng.uniform(0.05, 3, 2)

            self.assertLessEqual(
                nu.ball_density(Ball(x, r)),
                3 * nu.density_ratio * nu.ball_density(Ball(z, s)) + 1e-12
            )

        line = SpikeMeasure(0, 0.4, 1, 1)
        for _ in range(50):
            x = complex(*rng.uniform(-2, 2, 2))
            z = rng.uniform(-2, 2) * line.lines[0].direction
            r, s = rng.uniform(0.05, 3, 2)

            self.assertLessEqual(
                line.ball_density(Ball(x, r)),
                line.ball_density(Ball(z, s)) + 1e-12, "Line sharpening"
            )

    def test_lambda(self) -> None:
        self.assertEqual(lambda_constant(SpikeMeasure(0, 0, 1, 1)), 1.0)

        three = lambda_constant(SpikeMeasure(0, 0, 3, 3), steps=100)
        expected = np.sin(np.pi / 3) / (120 + np.sin(np.pi / 3))
        self.assertAlmostEqual(three, expected, places=4)

        self.assertLessEqual(lambda_k(3, steps=100), 1.0)
        self.assertAlmostEqual(lambda_k(3, steps=100), three, places=6,
                               msg="m = 3 is the worst divisor")

        hits = lambda_k.cache_info().hits
        lambda_k(3, steps=100)
        self.assertEqual(lambda_k.cache_info().hits, hits + 1,
                         "Cached per k and steps")

    def test_pushforward(self) -> None:
        vertical = segment(half_length=1.0, spacing=0.1, angle=np.pi / 2)
        sigma = pushforward_projection(vertical)

        self.assertTrue(np.allclose(sigma.positions, 0.0))
        self.assertAlmostEqual(sigma.total_mass, vertical.total_mass,
                               places=12)

        flat = pushforward_projection(self.coarse_segment)
        self.assertTrue(np.array_equal(flat.positions,
                                       self.coarse_segment.positions))

        subset = np.arange(10)
        self.assertAlmostEqual(
            pushforward_projection(self.coarse_segment, subset).total_mass,
            float(np.sum(self.coarse_segment.weights[subset])), places=12
        )

    def test_cantor(self) -> None:
        first = cantor(1)
        expected = np.array([0, 0.75, 0.75j, 0.75 + 0.75j]) + 0.125 + 0.125j

        self.assertEqual(len(first), 4)
        self.assertTrue(np.allclose(np.sort_complex(first.positions),
                                    np.sort_complex(expected)))
        self.assertAlmostEqual(first.total_mass, np.sqrt(2), places=12)

        self.assertEqual(len(cantor(4)), 256)

        with self.assertRaises(GenerationTooDeep):
            cantor(13)

    def test_graph_identities(self) -> None:
        flat = lipschitz_graph(GraphProfile("zero", 0.0), half_length=1.0,
                               spacing=0.01)
        reference = segment(half_length=1.0, spacing=0.01)

        self.assertTrue(np.array_equal(flat.positions, reference.positions))
        self.assertTrue(np.allclose(flat.weights, reference.weights))

        still = perturbed_line(amplitude=0.0, spacing=0.01)
        self.assertTrue(np.array_equal(still.positions, reference.positions))

    def test_profiles(self) -> None:
        bump = GraphProfile("bump", 0.1)
        self.assertAlmostEqual(float(bump.value(0.0)), 0.1)
        self.assertEqual(float(bump.value(1.5)), 0.0)

        saw = GraphProfile("saw", 0.05, width=1.0, period=0.5)
        self.assertLessEqual(float(np.max(np.abs(saw.value(
            np.linspace(-2, 2, 101))))), 0.05 + 1e-12)

        with self.assertRaises(InvalidGenerator):
            GraphProfile("wave", 1.0)

    def test_generate_deterministic(self) -> None:
        first = generate("perturbed-line", seed=7, amplitude=1e-2,
                         spacing=0.01)
        second = generate("perturbed-line", seed=7, amplitude=1e-2,
                          spacing=0.01)

        self.assertTrue(np.array_equal(first.positions, second.positions))
        self.assertEqual(len(generate("segment", spacing=1e-3)), 2001)

        with self.assertRaises(InvalidGenerator):
            generate("spiral")

        with self.assertRaises(InvalidGenerator):
            generate("segment", colour="red")

    def test_density_profile(self) -> None:
        profile = density_profile(self.coarse_segment, 0.0,
                                  [0.5, 0.25, 0.1])
        for r, value in profile:
            self.assertLessEqual(abs(value - 1.0), 0.02 / r,
                                 "Segment profile is flat")

        spike = density_profile(self.spike_atoms, 0.0, [1.0, 0.5])
        for _, value in spike:
            self.assertAlmostEqual(value, 3.0, delta=0.05)

    def test_resolved_densities(self) -> None:
        ball = Ball(0, 0.04)
        self.assertAlmostEqual(density(self.coarse_segment, ball)[1], 0.75,
                               msg="Open balls drop the boundary atoms")

        radii = [0.01, 0.03, 0.04, 0.057, 0.5]
        for center in (0.0, 0.01, 1.3):
            values = resolved_densities(self.coarse_segment, center, radii,
                                        0.02)
            np.testing.assert_allclose(values, 1.0, atol=1e-9)

        spike = resolved_densities(self.spike_atoms, 0.0, [0.5, 1.0],
                                   nearest_neighbor_gap(
                                       self.spike_atoms.positions
                                   ))
        np.testing.assert_allclose(spike, 3.0, atol=0.01)

        np.testing.assert_allclose(
            resolved_densities(self.coarse_segment, 0.0, [0.04], 0.0),
            0.75
        )

    def test_line_geometry(self) -> None:
        first = Line(0, 0.1)
        second = Line(1j, np.pi - 0.1)

        self.assertAlmostEqual(first.angle_to(second), 0.2)
        self.assertAlmostEqual(float(Line(0, np.pi / 2).distance(3 + 1j)),
                               3.0)

    def test_measure_file(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            pathway = os.path.join(directory, "cantor.txt")
            write_measure(cantor(2), pathway, comment="cantor 2")

            loaded = read_measure(pathway)
            self.assertTrue(np.array_equal(loaded.positions,
                                           cantor(2).positions))

            broken = os.path.join(directory, "broken.txt")
            with open(broken, "w") as file:
                file.write("x y w\n0 0 1\n0 0\n")

            with self.assertRaises(MeasureFileError) as context:
                read_measure(broken)
            self.assertEqual(context.exception.line, 3)
