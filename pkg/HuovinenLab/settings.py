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

from os import path, makedirs

from .exceptions import (
    InvalidParameterHierarchy, InvalidKernelOrder, InvalidSpacing,
    InvalidConfig
)
from .resources import Config


# Slack for the float comparisons of the parameter hierarchy.
HIERARCHY_RTOL = 1e-9


class TransportSettings:
    def __init__(self,
                 n_max: int = None,
                 angle_seeds: int = None,
                 angle_tol: float = None,
                 model_spacing_ratio: float = None,
                 vertex_steps: int = None,
                 vertex_reach: float = None) -> None:
        """Linear program and search settings for transport coefficients.

        Parameters
        ----------
        n_max : int, optional
            Atom guard for a single LP, by default Config.n_max
        angle_seeds : int, optional
            Uniform seeds over [0, pi) before golden section refinement.
        angle_tol : float, optional
            Golden section stopping width in radians.
        model_spacing_ratio : float, optional
            Quadrature spacing of line and spike models relative to r.
        vertex_steps : int, optional
            Geometric grid size for spike vertex offsets.
        vertex_reach : float, optional
            Vertex offsets beyond vertex_reach * r are treated as lines.

        Raises
        ------
        InvalidSpacing
        """

        self.n_max = int(n_max if n_max is not None else Config.n_max)
        self.angle_seeds = int(
            angle_seeds if angle_seeds is not None else Config.angle_seeds
        )
        self.angle_tol = float(
            angle_tol if angle_tol is not None else Config.angle_tol
        )
        self.model_spacing_ratio = float(
            model_spacing_ratio if model_spacing_ratio is not None
            else Config.model_spacing_ratio
        )
        self.vertex_steps = int(
            vertex_steps if vertex_steps is not None
            else Config.vertex_steps
        )
        self.vertex_reach = float(
            vertex_reach if vertex_reach is not None
            else Config.vertex_reach
        )

        if not 0 < self.model_spacing_ratio < 0.1:
            raise InvalidSpacing(
                "model_spacing_ratio must lie in (0, 0.1)"
            )

        if self.angle_seeds < 2 or self.vertex_steps < 2:
            raise InvalidConfig("Need at least 2 angle and vertex seeds")

    @property
    def api_schema(self) -> dict:
        return {
            "n_max": self.n_max,
            "angle_seeds": self.angle_seeds,
            "angle_tol": self.angle_tol,
            "model_spacing_ratio": self.model_spacing_ratio,
            "vertex_steps": self.vertex_steps,
            "vertex_reach": self.vertex_reach
        }


class StopParams:
    def __init__(self,
                 delta: float,
                 epsilon: float,
                 alpha: float,
                 theta: float,
                 k: int = 3,
                 t_grid_size: int = 48,
                 t_max: float = 12.0,
                 t_min: float = None,
                 density_threshold: str = "theta2") -> None:
        """Parameters of the stopping time region.

        Parameters
        ----------
        delta : float
        epsilon : float
        alpha : float
            Cone aperture around the base line.
        theta : float
        k : int, optional
            Odd kernel order, by default 3
        t_grid_size : int, optional
            Number of geometric scales in [t_min, t_max].
        t_max : float, optional
            Largest stopping scale, by default 12.
        t_min : float, optional
            Resolution floor, by default derived from the atoms.
        density_threshold : str, optional
            "theta2" compares the modified density with 1 + theta**2,
            "theta" with 1 + theta.

        Raises
        ------
        InvalidParameterHierarchy
        InvalidKernelOrder
        InvalidConfig
        """

        for name, value in (("delta", delta), ("epsilon", epsilon),
                            ("alpha", alpha), ("theta", theta)):
            if not 0 < value < 1:
                raise InvalidParameterHierarchy(
                    "{} must lie in (0, 1)".format(name)
                )

        chain = (epsilon, theta ** 4, alpha ** 8, delta ** 16)
        for lower, upper in zip(chain, chain[1:]):
            if lower > upper * (1 + HIERARCHY_RTOL):
                raise InvalidParameterHierarchy(
                    "Need eps <= theta^4 <= alpha^8 <= delta^16, got {}"
                    .format(chain)
                )

        if k < 1 or k % 2 == 0:
            raise InvalidKernelOrder()

        if density_threshold not in ("theta2", "theta"):
            raise InvalidConfig(
                "density_threshold must be 'theta2' or 'theta'"
            )

        if t_grid_size < 2 or t_max <= 0 or (t_min is not None and
                                             not 0 < t_min < t_max):
            raise InvalidConfig("Invalid stopping scale grid")

        self.delta = delta
        self.epsilon = epsilon
        self.alpha = alpha
        self.theta = theta
        self.k = k
        self.t_grid_size = t_grid_size
        self.t_max = t_max
        self.t_min = t_min
        self.density_threshold = density_threshold

    @property
    def lam(self) -> float:
        """sqrt(epsilon) / delta.
        """

        return float(np.sqrt(self.epsilon) / self.delta)

    @property
    def density_ceiling(self) -> float:
        if self.density_threshold == "theta":
            return 1.0 + self.theta
        return 1.0 + self.theta ** 2

    def t_grid(self, t_min: float = None) -> np.ndarray:
        """Ascending geometric grid of stopping scales.

        Parameters
        ----------
        t_min : float, optional
            Used when the params carry no explicit floor.

        Returns
        -------
        np.ndarray
        """

        floor = self.t_min if self.t_min is not None else t_min
        if floor is None or not 0 < floor < self.t_max:
            raise InvalidConfig("Stopping scale floor undefined")

        return np.geomspace(floor, self.t_max, self.t_grid_size)

    @property
    def api_schema(self) -> dict:
        return {
            "delta": self.delta,
            "epsilon": self.epsilon,
            "alpha": self.alpha,
            "theta": self.theta,
            "k": self.k,
            "t_grid_size": self.t_grid_size,
            "t_max": self.t_max,
            "t_min": self.t_min,
            "density_threshold": self.density_threshold
        }


class GraphSettings:
    def __init__(self,
                 knot_step: float = 1.0 / 128,
                 knot_extent: float = 4.0,
                 whitney_levels: int = 40,
                 closeness_constant: float = 10.0,
                 lipschitz_constant: float = 10.0) -> None:
        """Knot grid and Whitney settings for the graph construction.

        Parameters
        ----------
        knot_step : float, optional
        knot_extent : float, optional
            Knots cover [-knot_extent, knot_extent].
        whitney_levels : int, optional
            Deepest dyadic level tried.
        closeness_constant : float, optional
            C in |A(pi(x)) - x| <= C lambda D(pi(x)).
        lipschitz_constant : float, optional
            C in Lip(A) <= C alpha.

        Raises
        ------
        InvalidSpacing
        """

        if knot_step <= 0 or knot_extent <= 3 * knot_step:
            raise InvalidSpacing("Invalid knot grid")

        self.knot_step = knot_step
        self.knot_extent = knot_extent
        self.whitney_levels = whitney_levels
        self.closeness_constant = closeness_constant
        self.lipschitz_constant = lipschitz_constant

    @property
    def knots(self) -> np.ndarray:
        count = int(round(2 * self.knot_extent / self.knot_step)) + 1
        return np.linspace(-self.knot_extent, self.knot_extent, count)

    @property
    def api_schema(self) -> dict:
        return {
            "knot_step": self.knot_step,
            "knot_extent": self.knot_extent,
            "whitney_levels": self.whitney_levels,
            "closeness_constant": self.closeness_constant,
            "lipschitz_constant": self.lipschitz_constant
        }


class OutputSettings:
    def __init__(self, directory: str, emit_svg: bool = True) -> None:
        """Where run artefacts are written.

        Parameters
        ----------
        directory : str
            Created if missing.
        emit_svg : bool, optional
            by default True
        """

        self.directory = directory
        self.emit_svg = emit_svg

        if not path.exists(directory):
            makedirs(directory)

        Config.output_dir = directory
        Config.emit_svg = emit_svg
