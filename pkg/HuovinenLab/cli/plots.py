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


import numpy as np

from typing import Iterable, List, Sequence, Tuple

from ..measure.models import Ball, DiscreteMeasure, Line, SpikeMeasure
from ..operator.models import SampledGraph
from ..templates import render


SIZE = 800
# Atoms beyond this many per group are thinned by a stride.
ATOM_LIMIT = 5000

ATOM_COLOR = "#555555"
BALL_COLOR = "#1f77b4"
WITNESS_COLOR = "#d62728"
PARTITION_COLORS = {
    "Z": "#2ca02c",
    "F1": "#ff7f0e",
    "F2": "#9467bd"
}


class Overlay:
    def __init__(self, view: Ball, title: str = "") -> None:
        """SVG overlay of atoms, balls, lines and a graph in a square
        view around a ball.

        SVG y runs downwards, so every point is mirrored.
        """

        self.view = view
        self.title = title
        self.atoms: List[dict] = []
        self.balls: List[dict] = []
        self.lines: List[dict] = []
        self.graph: List[Tuple[float, float]] = []

    def add_atoms(self, mu: DiscreteMeasure, indices=None,
                  color: str = ATOM_COLOR) -> None:
        positions = mu.positions if indices is None \
            else mu.positions[np.asarray(indices, dtype=int)]
        positions = positions[np.abs(positions - self.view.center)
                              <= self.view.radius]

        stride = max(int(np.ceil(len(positions) / ATOM_LIMIT)), 1)
        self.atoms.append({
            "color": color,
            "points": [(float(z.real), float(-z.imag))
                       for z in positions[::stride]]
        })

    def add_ball(self, ball: Ball, color: str = BALL_COLOR) -> None:
        self.balls.append({
            "x": ball.center.real,
            "y": -ball.center.imag,
            "r": ball.radius,
            "color": color
        })

    def add_line(self, line: Line, color: str = WITNESS_COLOR) -> None:
        reach = 2.0 * self.view.radius + abs(line.base - self.view.center)
        first = line.base - reach * line.direction
        second = line.base + reach * line.direction
        self.lines.append({
            "x1": first.real, "y1": -first.imag,
            "x2": second.real, "y2": -second.imag,
            "color": color
        })

    def add_witness(self, witness) -> None:
        if isinstance(witness, SpikeMeasure):
            for line in witness.lines:
                self.add_line(line)
        elif isinstance(witness, Line):
            self.add_line(witness)

    def add_graph(self, graph: SampledGraph) -> None:
        inside = np.abs(graph.knots - self.view.center.real) \
            <= self.view.radius
        self.graph = [(float(t), float(-a)) for t, a in
                      zip(graph.knots[inside], graph.values[inside])]

    @property
    def params(self) -> dict:
        r = self.view.radius
        return {
            "title": self.title,
            "size": SIZE,
            "view": (self.view.center.real - r, -self.view.center.imag - r,
                     2 * r, 2 * r),
            "stroke": r / 400.0,
            "dot": r / 300.0,
            "atoms": self.atoms,
            "balls": self.balls,
            "lines": self.lines,
            "graph": self.graph
        }

    def write(self, pathway: str) -> None:
        with open(pathway, "w") as file:
            file.write(render("overlay.svg", self.params))


def alpha_overlay(mu: DiscreteMeasure, balls: Sequence[Ball],
                  witnesses: Iterable, title: str = "") -> Overlay:
    """Measure with every swept ball and its witness, viewed on the
    largest ball's phi support.
    """

    largest = max(balls, key=lambda ball: ball.radius)
    overlay = Overlay(largest.scaled(1.5), title)
    overlay.add_atoms(mu)

    for ball in balls:
        overlay.add_ball(ball)
    for witness in witnesses:
        overlay.add_witness(witness)

    return overlay
