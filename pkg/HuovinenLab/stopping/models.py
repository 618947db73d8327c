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

from typing import Dict, List, Optional, Tuple

from ..measure.models import Ball, DiscreteMeasure, Line
from ..operator.models import SampledGraph
from ..settings import StopParams


class StoppingRegion:
    def __init__(self, mu: DiscreteMeasure, centers: np.ndarray,
                 params: StopParams, t_grid: np.ndarray,
                 members: np.ndarray, witnesses: List[List[Optional[Line]]],
                 heights: np.ndarray, monotone: np.ndarray,
                 base: Ball = None) -> None:
        """Sampled stopping time region over the atoms of F in the
        closed base ball.

        The base line is the real axis, see normalize_measure.

        Parameters
        ----------
        mu : DiscreteMeasure
        centers : np.ndarray
            Atom indices of F in the closed base ball.
        params : StopParams
        t_grid : np.ndarray
            Ascending stopping scales.
        members : np.ndarray
            members[i, j] is (x_i, t_j) in S_total.
        witnesses : List[List[Optional[Line]]]
            Cone lines of the members.
        heights : np.ndarray
            h(x_i), 0 below the grid floor.
        monotone : np.ndarray
            False where membership is not monotone in t.
        base : Ball, optional
            by default B(0, 1)
        """

        self.mu = mu
        self.centers = np.asarray(centers, dtype=int)
        self.params = params
        self.t_grid = np.asarray(t_grid, dtype=float)
        self.members = np.asarray(members, dtype=bool)
        self.witnesses = witnesses
        self.heights = np.asarray(heights, dtype=float)
        self.monotone = np.asarray(monotone, dtype=bool)
        self.base = base if base is not None else Ball(0, 1)
        self.base_line = Line(0, 0)

        self._pairs = None

    @property
    def t_min(self) -> float:
        return float(self.t_grid[0])

    @property
    def positions(self) -> np.ndarray:
        return self.mu.positions[self.centers]

    def pairs(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Sampled S as (positions, scales, row) arrays.

        Members at or above h(x) belong to S. Atoms with h = 0 also
        enter at scale 0, the limit of their members.
        """

        if self._pairs is None:
            positions, scales, rows = [], [], []
            for row, height in enumerate(self.heights):
                columns = np.nonzero(
                    self.members[row] & (self.t_grid >= height)
                )[0]

                if height == 0:
                    positions.append(self.positions[row])
                    scales.append(0.0)
                    rows.append(row)

                for column in columns:
                    positions.append(self.positions[row])
                    scales.append(self.t_grid[column])
                    rows.append(row)

            self._pairs = (
                np.asarray(positions, dtype=np.complex128),
                np.asarray(scales, dtype=float),
                np.asarray(rows, dtype=int)
            )

        return self._pairs

    def witness(self, row: int, scale: float) -> Optional[Line]:
        columns = np.nonzero(np.isclose(self.t_grid, scale))[0]
        if len(columns) == 0:
            return None
        return self.witnesses[row][columns[0]]

    def d(self, points) -> np.ndarray:
        """inf over S of |X - y| + t.
        """

        positions, scales, _ = self.pairs()
        points = np.atleast_1d(np.asarray(points, dtype=np.complex128))
        if len(scales) == 0:
            return np.full(len(points), np.inf)

        return np.min(
            np.abs(points[:, None] - positions[None, :]) + scales[None, :],
            axis=1
        )

    def D(self, line_points) -> np.ndarray:
        """inf over S of |pi(X) - p| + t.
        """

        positions, scales, _ = self.pairs()
        line_points = np.atleast_1d(np.asarray(line_points, dtype=float))
        if len(scales) == 0:
            return np.full(len(line_points), np.inf)

        return np.min(
            np.abs(line_points[:, None] - positions.real[None, :])
            + scales[None, :],
            axis=1
        )

    def D_infimum(self, left: float, right: float) -> float:
        """Exact inf of D over [left, right].
        """

        positions, scales, _ = self.pairs()
        if len(scales) == 0:
            return np.inf

        projected = positions.real
        gaps = np.maximum(np.maximum(left - projected, projected - right),
                          0.0)
        return float(np.min(gaps + scales))

    @property
    def api_schema(self) -> dict:
        return {
            "centers": len(self.centers),
            "t_min": self.t_min,
            "t_max": float(self.t_grid[-1]),
            "max_height": float(np.max(self.heights))
            if len(self.heights) else 0.0,
            "non_monotone": int(np.sum(~self.monotone)),
            "pairs": len(self.pairs()[1])
        }


class Partition:
    def __init__(self, mu: DiscreteMeasure, z: np.ndarray, f1: np.ndarray,
                 f2: np.ndarray, leaked: np.ndarray = None) -> None:
        """Z, F1 and F2 as atom indices of mu.

        leaked are F2 atoms for which no off-cone flat line was found.
        """

        self.mu = mu
        self.z = np.asarray(z, dtype=int)
        self.f1 = np.asarray(f1, dtype=int)
        self.f2 = np.asarray(f2, dtype=int)
        self.leaked = np.asarray(leaked if leaked is not None else [],
                                 dtype=int)

    def mass(self, indices: np.ndarray) -> float:
        return float(np.sum(self.mu.weights[indices]))

    @property
    def masses(self) -> Dict[str, float]:
        return {
            "Z": self.mass(self.z),
            "F1": self.mass(self.f1),
            "F2": self.mass(self.f2)
        }

    @property
    def total(self) -> float:
        return sum(self.masses.values())

    @property
    def api_schema(self) -> dict:
        return {
            "mass_Z": self.mass(self.z),
            "mass_F1": self.mass(self.f1),
            "mass_F2": self.mass(self.f2),
            "count_Z": len(self.z),
            "count_F1": len(self.f1),
            "count_F2": len(self.f2),
            "leaked": len(self.leaked)
        }


class WhitneyPiece:
    def __init__(self, left: float, length: float, ball: Ball = None,
                 line: Line = None, flat: bool = False,
                 budget: float = None) -> None:
        """One maximal dyadic interval with its ball, line and affine map.

        Pieces without a ball are excluded from the assembly.
        """

        self.left = left
        self.length = length
        self.ball = ball
        self.line = line
        self.flat = flat
        self.budget = budget

    @property
    def right(self) -> float:
        return self.left + self.length

    @property
    def center(self) -> float:
        return self.left + self.length / 2

    def dilated(self, factor: float) -> Tuple[float, float]:
        half = factor * self.length / 2
        return self.center - half, self.center + half

    @property
    def excluded(self) -> bool:
        return self.line is None

    @property
    def slope(self) -> float:
        return float(np.tan(self.line.angle))

    def affine(self, points) -> np.ndarray:
        """A_i, the map whose graph is the line D_i.
        """

        points = np.asarray(points, dtype=float)
        base = self.line.base
        return base.imag + self.slope * (points - base.real)

    @property
    def api_schema(self) -> dict:
        return {
            "left": self.left,
            "length": self.length,
            "ball_x": self.ball.center.real if self.ball else None,
            "ball_y": self.ball.center.imag if self.ball else None,
            "ball_r": self.ball.radius if self.ball else None,
            "angle": self.line.angle if self.line else None,
            "flat": self.flat,
            "excluded": self.excluded
        }


class WhitneyCover:
    def __init__(self, pieces: List[WhitneyPiece], overlap: int,
                 neighbors: int, violations: int) -> None:
        """Maximal dyadic intervals of the Whitney decomposition.

        Parameters
        ----------
        pieces : List[WhitneyPiece]
        overlap : int
            Most doubled intervals sharing a sampled point.
        neighbors : int
            Most intervals whose 10-fold dilations meet one 10-fold
            dilation.
        violations : int
            Sampled points of 10 I_j breaking 10 diam <= D <= 60 diam.
        """

        self.pieces = pieces
        self.overlap = overlap
        self.neighbors = neighbors
        self.violations = violations

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    @property
    def lengths(self) -> np.ndarray:
        return np.array([piece.length for piece in self.pieces])

    @property
    def included(self) -> List[WhitneyPiece]:
        return [piece for piece in self.pieces if not piece.excluded]

    @property
    def api_schema(self) -> dict:
        return {
            "intervals": len(self.pieces),
            "excluded": len(self.pieces) - len(self.included),
            "overlap": self.overlap,
            "neighbors": self.neighbors,
            "violations": self.violations
        }


class LipschitzGraph(SampledGraph):
    def __init__(self, knots: np.ndarray, values: np.ndarray,
                 raw: np.ndarray = None,
                 provenance: List[Tuple[int, ...]] = None,
                 certificates: Dict[str, float] = None) -> None:
        """Localized graph on the knot grid.

        Parameters
        ----------
        knots : np.ndarray
        values : np.ndarray
            Localized values.
        raw : np.ndarray, optional
            Values before localization.
        provenance : List[Tuple[int, ...]], optional
            Pieces contributing at every knot, empty for Z cells.
        certificates : Dict[str, float], optional
        """

        super().__init__(knots, values)

        self.raw = raw if raw is not None else self.values
        self.provenance = provenance or [() for _ in self.knots]
        self.certificates = certificates or {}

    @property
    def second_derivative(self) -> np.ndarray:
        return np.gradient(self.derivative, self.step)

    def support(self) -> Tuple[float, float]:
        nonzero = np.nonzero(self.values)[0]
        if len(nonzero) == 0:
            return 0.0, 0.0
        return float(self.knots[nonzero[0]]), float(self.knots[nonzero[-1]])

    @property
    def api_schema(self) -> dict:
        return {
            **super().api_schema,
            **self.certificates
        }


class GraphReport:
    def __init__(self, masses: Dict[str, float], closeness: float,
                 derivative_l2_squared: float, f2_ratio: float,
                 extra: Dict[str, float] = None) -> None:
        self.masses = masses
        self.closeness = closeness
        self.derivative_l2_squared = derivative_l2_squared
        self.f2_ratio = f2_ratio
        self.extra = extra or {}

    @property
    def api_schema(self) -> dict:
        return {
            **{"mass_" + key: value for key, value in self.masses.items()},
            "closeness_fraction": self.closeness,
            "derivative_l2_squared": self.derivative_l2_squared,
            "f2_ratio": self.f2_ratio,
            **self.extra
        }
