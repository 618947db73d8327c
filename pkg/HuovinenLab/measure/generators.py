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

from .models import Ball, DiscreteMeasure, SpikeMeasure

from ..constants import CANTOR_MAX_GENERATION, GRAPH_PROFILES
from ..decorators import validate_spacing
from ..exceptions import (
    InvalidSpacing, InvalidGenerator, GenerationTooDeep
)


class GraphProfile:
    def __init__(self, name: str, amplitude: float, width: float = 1.0,
                 period: float = 0.5) -> None:
        """Named Lipschitz profile t -> A(t) with its derivative.

        Parameters
        ----------
        name : str
            zero, bump, saw or slope.
        amplitude : float
            Height for bump and saw, slope for slope.
        width : float, optional
            Half width of the support of bump and saw.
        period : float, optional
            Period of saw. 2 * width / period should be an integer so
            the wave ends at 0.

        Raises
        ------
        InvalidGenerator
        """

        if name not in GRAPH_PROFILES:
            raise InvalidGenerator("Unknown graph profile {}".format(name))

        if width <= 0 or period <= 0:
            raise InvalidGenerator("Profile width and period must be > 0")

        self.name = name
        self.amplitude = float(amplitude)
        self.width = float(width)
        self.period = float(period)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        inside = np.abs(t) < self.width

        if self.name == "bump":
            u = np.where(inside, t / self.width, 0.0)
            return np.where(inside, self.amplitude * (1 - u ** 2) ** 3, 0.0)

        if self.name == "saw":
            wave = (2.0 / np.pi) * np.arcsin(
                np.sin(2.0 * np.pi * t / self.period)
            )
            return np.where(inside, self.amplitude * wave, 0.0)

        if self.name == "slope":
            return self.amplitude * t

        return np.zeros_like(t)

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        inside = np.abs(t) < self.width

        if self.name == "bump":
            u = np.where(inside, t / self.width, 0.0)
            return np.where(
                inside,
                -6.0 * self.amplitude * u * (1 - u ** 2) ** 2 / self.width,
                0.0
            )

        if self.name == "saw":
            slope = 4.0 * self.amplitude / self.period
            return np.where(
                inside,
                slope * np.sign(np.cos(2.0 * np.pi * t / self.period)),
                0.0
            )

        if self.name == "slope":
            return np.full_like(t, self.amplitude)

        return np.zeros_like(t)

    @property
    def max_slope(self) -> float:
        if self.name == "bump":
            # max of 6u(1-u^2)^2 sits at u = 1/sqrt(5)
            return 6.0 / np.sqrt(5.0) * (0.8 ** 2) * abs(self.amplitude) \
                / self.width
        if self.name == "saw":
            return 4.0 * abs(self.amplitude) / self.period
        if self.name == "slope":
            return abs(self.amplitude)
        return 0.0

    @property
    def api_schema(self) -> dict:
        return {
            "name": self.name,
            "amplitude": self.amplitude,
            "width": self.width,
            "period": self.period
        }


@validate_spacing
def discretize_model(nu: SpikeMeasure, window: Ball,
                     spacing: float) -> DiscreteMeasure:
    """Midpoint quadrature of a spike measure inside a window.

    Every line meeting the window contributes a centred progression of
    step spacing along its chord, each atom of weight c * spacing.

    Parameters
    ----------
    nu : SpikeMeasure
    window : Ball
    spacing : float
        Must be below window.radius / 10.

    Returns
    -------
    DiscreteMeasure

    Raises
    ------
    InvalidSpacing
    """

    if spacing >= window.radius / 10.0:
        raise InvalidSpacing(
            "Spacing must be below a tenth of the window radius"
        )

    positions = []
    for line in nu.lines:
        local = line.coordinates(window.center)
        offset = abs(local.imag)
        if offset >= window.radius:
            continue

        half_chord = np.sqrt(window.radius ** 2 - offset ** 2)
        # Float slack so exact multiples of spacing aren't lost.
        count = int(np.floor(2.0 * half_chord / spacing + 1e-9))
        if count < 1:
            continue

        steps = (np.arange(count) - (count - 1) / 2.0) * spacing
        positions.append(
            line.base + (local.real + steps) * line.direction
        )

    if not positions:
        return DiscreteMeasure.empty()

    positions = np.concatenate(positions)
    return DiscreteMeasure(
        positions, np.full(len(positions), nu.density * spacing)
    )


def _segment_nodes(half_length: float, spacing: float):
    intervals = max(int(round(2.0 * half_length / spacing)), 1)
    nodes = np.linspace(-half_length, half_length, intervals + 1)
    step = 2.0 * half_length / intervals

    weights = np.full(len(nodes), step)
    weights[0] = weights[-1] = step / 2.0
    return nodes, weights


@validate_spacing
def segment(half_length: float = 1.0, spacing: float = 1e-3,
            angle: float = 0.0, center: complex = 0.0,
            density: float = 1.0) -> DiscreteMeasure:
    """Trapezoid quadrature of a segment, end points included.

    The step is adjusted so both end points are nodes.
    """

    if half_length <= 0:
        raise InvalidGenerator("Segment half length must be positive")

    nodes, weights = _segment_nodes(half_length, spacing)
    return DiscreteMeasure(
        center + nodes * np.exp(1j * angle), density * weights
    )


@validate_spacing
def lipschitz_graph(profile: GraphProfile, half_length: float = 2.0,
                    spacing: float = 1e-2) -> DiscreteMeasure:
    """Arclength quadrature of t -> (t, A(t)) on [-half_length, half_length].
    """

    if half_length <= 0:
        raise InvalidGenerator("Graph half length must be positive")

    nodes, weights = _segment_nodes(half_length, spacing)
    jacobian = np.sqrt(1.0 + profile.derivative(nodes) ** 2)
    return DiscreteMeasure(
        nodes + 1j * profile.value(nodes), weights * jacobian
    )


@validate_spacing
def perturbed_line(amplitude: float = 1e-3, half_length: float = 1.0,
                   spacing: float = 1e-3, modes: int = 8,
                   seed: int = 0) -> DiscreteMeasure:
    """Segment whose atoms are moved vertically by a smooth random field.

    The field is a random sine series scaled to sup norm amplitude.
    """

    if amplitude < 0:
        raise InvalidGenerator("Perturbation amplitude must be >= 0")

    nodes, weights = _segment_nodes(half_length, spacing)

    rng = np.random.default_rng(seed)
    coefficients = rng.normal(size=modes) / np.arange(1, modes + 1)
    phases = rng.uniform(0.0, 2.0 * np.pi, size=modes)

    field = np.zeros_like(nodes)
    for n in range(modes):
        field += coefficients[n] * np.sin(
            (n + 1) * np.pi * (nodes + half_length) / (2 * half_length)
            + phases[n]
        )

    peak = np.max(np.abs(field))
    if amplitude == 0 or peak == 0:
        field = np.zeros_like(nodes)
    else:
        field *= amplitude / peak

    return DiscreteMeasure(nodes + 1j * field, weights)


def cantor(level: int, side: float = 1.0,
           origin: complex = 0.0) -> DiscreteMeasure:
    """Four corner Cantor set of the given generation.

    The 4^level atoms sit at the centres of the generation cells of the
    square with lower left corner origin. Total mass equals the set's
    diameter sqrt(2) * side, so densities are of order one.

    Raises
    ------
    GenerationTooDeep
    InvalidGenerator
    """

    if level > CANTOR_MAX_GENERATION:
        raise GenerationTooDeep()

    if level < 0 or side <= 0:
        raise InvalidGenerator("Cantor level must be >= 0, side > 0")

    corners = np.array([complex(origin)])
    cell = float(side)
    for _ in range(level):
        shifts = 0.75 * cell * np.array([0, 1, 1j, 1 + 1j])
        corners = (corners[:, None] + shifts[None, :]).ravel()
        cell /= 4.0

    positions = corners + cell * (0.5 + 0.5j)
    return DiscreteMeasure(
        positions, np.full(len(positions), np.sqrt(2.0) * side / 4 ** level)
    )


def generate(kind: str, seed: int = 0, **parameters) -> DiscreteMeasure:
    """Builds a test corpus measure.

    Parameters
    ----------
    kind : str
        segment, spike, cantor, lipschitz-graph or perturbed-line.
    seed : int, optional
        Used by the randomized kinds.
    **parameters
        Passed to the generator of that kind.

    Returns
    -------
    DiscreteMeasure

    Raises
    ------
    InvalidGenerator
    GenerationTooDeep
    InvalidSpacing
    """

    try:
        if kind == "segment":
            return segment(**parameters)

        if kind == "spike":
            spacing = parameters.pop("spacing", 1e-2)
            window = Ball(
                complex(parameters.pop("window_x", 0.0),
                        parameters.pop("window_y", 0.0)),
                parameters.pop("window_radius", 1.0)
            )
            nu = SpikeMeasure(
                vertex=complex(parameters.pop("x", 0.0),
                               parameters.pop("y", 0.0)),
                base_angle=parameters.pop("angle", 0.0),
                m=parameters.pop("m", 3),
                k=parameters.pop("k", 3),
                density=parameters.pop("density", 1.0)
            )
            if parameters:
                raise TypeError(
                    "unexpected parameters {}".format(sorted(parameters))
                )
            return discretize_model(nu, window, spacing)

        if kind == "cantor":
            return cantor(**parameters)

        if kind == "lipschitz-graph":
            profile = GraphProfile(
                parameters.pop("profile", "bump"),
                parameters.pop("amplitude", 0.0),
                width=parameters.pop("width", 1.0),
                period=parameters.pop("period", 0.5)
            )
            return lipschitz_graph(profile, **parameters)

        if kind == "perturbed-line":
            return perturbed_line(seed=seed, **parameters)
    except TypeError as error:
        raise InvalidGenerator(
            "Bad parameters for {}: {}".format(kind, error)
        )

    raise InvalidGenerator("Unknown generator kind {}".format(kind))
