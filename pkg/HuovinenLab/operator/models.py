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

from fractions import Fraction
from typing import Dict, Iterator, Tuple

from ..exceptions import InvalidSpacing
from ..misc import trapezoid


class KernelSeries:
    def __init__(self, k: int, order: int,
                 coefficients: Dict[int, Fraction]) -> None:
        """Odd-power expansion of K_k normal part in s/t.

        Parameters
        ----------
        k : int
        order : int
            Largest odd power kept.
        coefficients : Dict[int, Fraction]
            c_{k, l} for odd l <= order.
        """

        self.k = k
        self.order = order
        self.coefficients = coefficients

    def __getitem__(self, power: int) -> Fraction:
        return self.coefficients[power]

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(sorted(self.coefficients.items()))

    def absolute_sum(self, ratio: float = 0.5) -> float:
        return float(sum(
            abs(value) * Fraction(ratio) ** power
            for power, value in self
        ))

    def partial_sums(self, ratio: float = 0.5) -> np.ndarray:
        """Running sums of |c_{k, l}| ratio^l in increasing l.
        """

        return np.cumsum([
            float(abs(value)) * ratio ** power for power, value in self
        ])

    def evaluate(self, t, s):
        """Sum of c_{k, l} s^l / t^(l + 1), valid for |s| < |t|.
        """

        t = np.asarray(t, dtype=float)
        s = np.asarray(s, dtype=float)

        total = np.zeros(np.broadcast(t, s).shape)
        for power, value in self:
            total = total + float(value) * s ** power / t ** (power + 1)

        return total

    def rows(self) -> Iterator[Tuple[int, int, int, int]]:
        for power, value in self:
            yield self.k, power, value.numerator, value.denominator

    @property
    def api_schema(self) -> dict:
        return {
            "k": self.k,
            "order": self.order,
            "absolute_sum": self.absolute_sum()
        }


class SampledGraph:
    def __init__(self, knots: np.ndarray, values: np.ndarray) -> None:
        """A function sampled on a uniform knot grid.

        Outside the knots the graph continues flat at the end values.

        Parameters
        ----------
        knots : np.ndarray
            Uniform, ascending.
        values : np.ndarray

        Raises
        ------
        InvalidSpacing
        """

        self.knots = np.asarray(knots, dtype=float)
        self.values = np.asarray(values, dtype=float)

        if len(self.knots) < 3 or len(self.knots) != len(self.values):
            raise InvalidSpacing("Need at least 3 knots with values")

        steps = np.diff(self.knots)
        self.step = float(np.mean(steps))
        if self.step <= 0 or not np.allclose(steps, self.step,
                                             rtol=1e-9, atol=0):
            raise InvalidSpacing("Knots must be uniform and ascending")

        self.derivative = np.gradient(self.values, self.step)

    @classmethod
    def from_function(cls, func, knots: np.ndarray) -> "SampledGraph":
        knots = np.asarray(knots, dtype=float)
        return cls(knots, func(knots))

    def value_at(self, points) -> np.ndarray:
        return np.interp(points, self.knots, self.values)

    def derivative_at(self, points) -> np.ndarray:
        return np.interp(points, self.knots, self.derivative,
                         left=0.0, right=0.0)

    def embed(self, points) -> np.ndarray:
        """t -> t + i A(t).
        """

        return np.asarray(points, dtype=float) + 1j * self.value_at(points)

    def jacobian(self, points) -> np.ndarray:
        return np.sqrt(1.0 + self.derivative_at(points) ** 2)

    def negated(self) -> "SampledGraph":
        return SampledGraph(self.knots, -self.values)

    @property
    def lipschitz_constant(self) -> float:
        return float(np.max(np.abs(self.derivative)))

    @property
    def derivative_l2_squared(self) -> float:
        return trapezoid(self.derivative ** 2, self.step)

    @property
    def api_schema(self) -> dict:
        return {
            "knots": len(self.knots),
            "step": self.step,
            "lipschitz": self.lipschitz_constant,
            "derivative_l2_squared": self.derivative_l2_squared
        }


class NormEstimate:
    def __init__(self, value: float, radius: float = None,
                 converged: bool = True, iterations: int = 0) -> None:
        """Largest spectral norm over the radius grid.

        A lower bound for the maximal operator norm, never an upper one.
        """

        self.value = value
        self.radius = radius
        self.converged = converged
        self.iterations = iterations

    @property
    def api_schema(self) -> dict:
        return {
            "value": self.value,
            "radius": self.radius,
            "converged": self.converged,
            "iterations": self.iterations,
            "bound": "lower"
        }


class GraphTransform:
    def __init__(self, value: float, error: float) -> None:
        self.value = value
        self.error = error

    @property
    def api_schema(self) -> dict:
        return {
            "value": self.value,
            "error": self.error
        }
