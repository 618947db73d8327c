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

from typing import List, Sequence

from ..exceptions import InvalidBall, InvalidMeasure, InvalidKernelOrder
from ..misc import normalize_angle


class Ball:
    def __init__(self, center: complex, radius: float) -> None:
        """Open planar ball.

        Parameters
        ----------
        center : complex
        radius : float

        Raises
        ------
        InvalidBall
        """

        if not np.isfinite(radius) or radius <= 0:
            raise InvalidBall()

        self.center = complex(center)
        self.radius = float(radius)

    def scaled(self, factor: float) -> "Ball":
        return Ball(self.center, self.radius * factor)

    def contains(self, points: np.ndarray) -> np.ndarray:
        return np.abs(np.asarray(points) - self.center) < self.radius

    def contains_ball(self, other: "Ball") -> bool:
        return abs(other.center - self.center) + other.radius \
            <= self.radius

    @property
    def api_schema(self) -> dict:
        return {
            "x": self.center.real,
            "y": self.center.imag,
            "r": self.radius
        }


class Line:
    def __init__(self, base: complex, angle: float) -> None:
        """Affine line through base with direction angle in [0, pi).
        """

        self.base = complex(base)
        self.angle = normalize_angle(angle)

    @property
    def direction(self) -> complex:
        return complex(np.exp(1j * self.angle))

    def angle_to(self, other: "Line") -> float:
        difference = abs(self.angle - other.angle)
        return float(min(difference, np.pi - difference))

    def coordinates(self, points: np.ndarray) -> np.ndarray:
        """Positions in the frame where the line is the real axis.
        """

        return (np.asarray(points) - self.base) * np.conj(self.direction)

    def distance(self, points: np.ndarray) -> np.ndarray:
        return np.abs(self.coordinates(points).imag)

    def slope(self) -> float:
        return float(np.tan(self.angle))

    @property
    def api_schema(self) -> dict:
        return {
            "x": self.base.real,
            "y": self.base.imag,
            "angle": self.angle
        }


class SpikeMeasure:
    def __init__(self, vertex: complex, base_angle: float, m: int,
                 k: int, density: float = 1.0) -> None:
        """Arclength measure on m lines through vertex, rotated by pi/m.

        Parameters
        ----------
        vertex : complex
        base_angle : float
            Reduced modulo pi/m.
        m : int
            Ray count, must divide k.
        k : int
            Odd kernel order.
        density : float, optional
            Linear density c, by default 1.0

        Raises
        ------
        InvalidKernelOrder
        InvalidMeasure
        """

        if k < 1 or k % 2 == 0:
            raise InvalidKernelOrder()

        if m < 1 or k % m != 0:
            raise InvalidMeasure("Ray count must divide k")

        if not np.isfinite(density) or density <= 0:
            raise InvalidMeasure("Linear density must be positive")

        self.vertex = complex(vertex)
        self.m = int(m)
        self.k = int(k)
        self.base_angle = normalize_angle(base_angle, np.pi / self.m)
        self.density = float(density)

    @property
    def lines(self) -> List[Line]:
        return [
            Line(self.vertex, self.base_angle + n * np.pi / self.m)
            for n in range(self.m)
        ]

    @property
    def density_ratio(self) -> float:
        return float(self.m)

    def support_distance(self, points: np.ndarray) -> np.ndarray:
        return np.min(
            [line.distance(points) for line in self.lines], axis=0
        )

    def ball_mass(self, ball: Ball) -> float:
        """Exact mass of the open ball.
        """

        mass = 0.0
        for line in self.lines:
            gap = float(line.distance(ball.center))
            if gap < ball.radius:
                mass += 2.0 * np.sqrt(ball.radius ** 2 - gap ** 2)
        return self.density * mass

    def ball_density(self, ball: Ball) -> float:
        return self.ball_mass(ball) / (2.0 * ball.radius)

    @property
    def api_schema(self) -> dict:
        return {
            "x": self.vertex.real,
            "y": self.vertex.imag,
            "angle": self.base_angle,
            "m": self.m,
            "k": self.k,
            "c": self.density
        }


class ScalePoint:
    def __init__(self, location: complex, scale: float) -> None:
        if not scale > 0:
            raise InvalidBall("Scale must be positive")

        self.location = complex(location)
        self.scale = float(scale)

    @property
    def ball(self) -> Ball:
        return Ball(self.location, self.scale)

    @property
    def api_schema(self) -> dict:
        return {
            "x": self.location.real,
            "y": self.location.imag,
            "t": self.scale
        }


class DiscreteMeasure:
    def __init__(self, positions: Sequence[complex],
                 weights: Sequence[float]) -> None:
        """Finite weighted atom set in the plane.

        Parameters
        ----------
        positions : Sequence[complex]
            Duplicates are allowed and their weights add.
        weights : Sequence[float]
            Strictly positive and finite.

        Raises
        ------
        InvalidMeasure
        """

        positions = np.asarray(positions, dtype=np.complex128).ravel()
        weights = np.asarray(weights, dtype=np.float64).ravel()

        if positions.shape != weights.shape:
            raise InvalidMeasure("Positions and weights differ in length")

        if not np.all(np.isfinite(positions)):
            raise InvalidMeasure("Atom positions must be finite")

        if not np.all(np.isfinite(weights)) or np.any(weights <= 0):
            raise InvalidMeasure(
                "Atom weights must be strictly positive and finite"
            )

        positions.setflags(write=False)
        weights.setflags(write=False)

        self.positions = positions
        self.weights = weights

    @classmethod
    def empty(cls) -> "DiscreteMeasure":
        return cls([], [])

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.weights))

    def mass_in(self, ball: Ball) -> float:
        return float(np.sum(self.weights[ball.contains(self.positions)]))

    def restrict(self, selection) -> "DiscreteMeasure":
        """Sub-measure from a boolean mask or index array.
        """

        return DiscreteMeasure(
            self.positions[selection], self.weights[selection]
        )

    def restrict_ball(self, ball: Ball) -> "DiscreteMeasure":
        return self.restrict(ball.contains(self.positions))

    def scaled(self, factor: float) -> "DiscreteMeasure":
        return DiscreteMeasure(self.positions, self.weights * factor)

    def transformed(self, rotation: float = 0.0, shift: complex = 0.0,
                    dilation: float = 1.0) -> "DiscreteMeasure":
        """Image under z -> dilation * e^{i rotation} z + shift.

        Weights are multiplied by dilation so densities are unchanged.
        """

        return DiscreteMeasure(
            dilation * np.exp(1j * rotation) * self.positions + shift,
            self.weights * dilation
        )

    def __add__(self, other: "DiscreteMeasure") -> "DiscreteMeasure":
        return DiscreteMeasure(
            np.concatenate((self.positions, other.positions)),
            np.concatenate((self.weights, other.weights))
        )

    @property
    def api_schema(self) -> dict:
        return {
            "atoms": len(self),
            "mass": self.total_mass
        }
