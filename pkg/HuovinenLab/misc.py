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

from typing import Callable, Tuple

from scipy.spatial import cKDTree

from .constants import GOLDEN_RATIO


def smoothstep(u):
    """C1 cubic ramp, 0 for u <= 0 and 1 for u >= 1.

    Parameters
    ----------
    u : float or np.ndarray

    Returns
    -------
    float or np.ndarray
    """

    u = np.clip(u, 0.0, 1.0)
    return u * u * (3.0 - 2.0 * u)


def smootherstep(u):
    """C2 quintic ramp, 0 for u <= 0 and 1 for u >= 1.
    """

    u = np.clip(u, 0.0, 1.0)
    return u * u * u * (u * (6.0 * u - 15.0) + 10.0)


def normalize_angle(angle: float, period: float = np.pi) -> float:
    return float(np.mod(angle, period))


def acute_angle(first: float, second: float) -> float:
    """Acute angle between two line directions, in [0, pi/2].
    """

    difference = abs(normalize_angle(first) - normalize_angle(second))
    return float(min(difference, np.pi - difference))


def geometric_grid(lower: float, upper: float,
                   per_octave: int) -> np.ndarray:
    """Ascending geometric grid with both endpoints included.
    """

    octaves = max(np.log2(upper / lower), 0.0)
    count = max(int(np.ceil(octaves * per_octave)) + 1, 2)
    return np.geomspace(lower, upper, count)


def nearest_neighbor_gap(points: np.ndarray) -> float:
    """Median nearest-neighbour distance among distinct points.

    Stray isolated atoms don't move the median, so this is the step of
    whatever quadrature the points come from.

    Parameters
    ----------
    points : np.ndarray
        Complex positions.

    Returns
    -------
    float
        0 for fewer than two distinct points.
    """

    unique = np.unique(points)
    if len(unique) < 2:
        return 0.0

    tree = cKDTree(np.column_stack((unique.real, unique.imag)))
    distances, _ = tree.query(
        np.column_stack((unique.real, unique.imag)), k=2
    )
    return float(np.median(distances[:, 1]))


def golden_section(func: Callable[[float], float], lower: float,
                   upper: float, tol: float,
                   stop_below: float = None) -> Tuple[float, float]:
    """Minimizes a unimodal function on [lower, upper].

    Parameters
    ----------
    func : Callable[[float], float]
    lower : float
    upper : float
    tol : float
        Final bracket width.
    stop_below : float, optional
        Returns as soon as a value at or below this is seen.

    Returns
    -------
    Tuple[float, float]
        Argument and value of the best evaluation.
    """

    a, b = lower, upper
    c = b - GOLDEN_RATIO * (b - a)
    d = a + GOLDEN_RATIO * (b - a)
    fc, fd = func(c), func(d)
    best = (c, fc) if fc <= fd else (d, fd)

    while b - a > tol:
        if stop_below is not None and best[1] <= stop_below:
            break

        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN_RATIO * (b - a)
            fc = func(c)
            if fc < best[1]:
                best = (c, fc)
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN_RATIO * (b - a)
            fd = func(d)
            if fd < best[1]:
                best = (d, fd)

    return best


def trapezoid(values: np.ndarray, step: float) -> float:
    """Trapezoid rule on a uniform grid.
    """

    if len(values) < 2:
        return 0.0
    return float(step * (np.sum(values) - 0.5 * (values[0] + values[-1])))
