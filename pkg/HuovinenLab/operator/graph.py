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

from typing import Tuple, Union

from .kernels import NORMAL, kernel_values, psi
from .models import GraphTransform, SampledGraph

from ..decorators import validate_kernel_order
from ..exceptions import StepTooCoarse


Truncation = Tuple[Union[float, np.ndarray], Union[float, None]]


def flat_primitive(angle, k: int):
    """theta + sum of sin(2j theta) / j for j up to (k - 1) / 2.
    """

    angle = np.asarray(angle, dtype=float)
    total = angle.copy()
    for j in range(1, (k - 1) // 2 + 1):
        total = total + np.sin(2 * j * angle) / j
    return total


def flat_tail(z, height: float, start, stop, k: int):
    """Integral of K_k normal part of z - (s + i height) over s in
    [start, stop], either end possibly infinite.

    Along a horizontal line the integrand is sin(k theta) / rho, whose
    primitive in the polar angle is flat_primitive.
    """

    z = np.asarray(z, dtype=np.complex128)
    offset = z.imag - height

    def angle(s):
        return np.arctan2(offset, z.real - s)

    value = flat_primitive(angle(stop), k) - flat_primitive(angle(start), k)
    return np.where(offset == 0, 0.0, value)


def _band(distances: np.ndarray, truncation: Truncation,
          rows: int) -> np.ndarray:
    lower, upper = truncation
    lower = np.broadcast_to(np.asarray(lower, dtype=float), (rows,))
    weights = psi(distances / lower[:, None])

    if upper is None:
        return weights

    return np.where(lower[:, None] < upper,
                    weights - psi(distances / upper), 0.0)


def _pair_quadrature(graph: SampledGraph, ts: np.ndarray, k: int,
                     truncation: Truncation, stride: int) -> np.ndarray:
    step = graph.step * stride
    reach = np.max(np.maximum(ts - graph.knots[0], graph.knots[-1] - ts))

    if truncation is not None:
        lower, upper = truncation
        if upper is not None:
            reach = float(upper)
        else:
            reach = max(reach, float(np.max(lower)))

    count = int(np.ceil(reach / step)) + 1
    offsets = step * np.arange(1, count + 1)

    centers = graph.embed(ts)
    total = np.zeros(len(ts))
    for sign in (1.0, -1.0):
        samples = ts[:, None] + sign * offsets[None, :]
        differences = centers[:, None] - graph.embed(samples)
        values = kernel_values(k, differences, NORMAL) \
            * graph.jacobian(samples)

        if truncation is not None:
            values = values * _band(np.abs(differences), truncation,
                                    len(ts))

        total += step * np.sum(values, axis=1)

    if truncation is None or truncation[1] is None:
        edge = (count + 0.5) * step
        total += flat_tail(centers, graph.values[-1], ts + edge, np.inf, k)
        total += flat_tail(centers, graph.values[0], -np.inf, ts - edge, k)

    return total


@validate_kernel_order
def pv_graph_profile(graph: SampledGraph, ts, k: int,
                     truncation: Truncation = None,
                     tolerance: float = None
                     ) -> Tuple[np.ndarray, np.ndarray]:
    """Principal value of the normal kernel along a Lipschitz graph.

    P.V. of K_k normal part of A~(t) - A~(s) against J(s) ds, paired at
    s = t + u and s = t - u on a uniform u-grid whose cells start at
    h/2, so odd parts cancel exactly. Beyond the knots the graph is flat
    and the tails are closed form. Truncations multiply by the Psi
    factors of the band between lower and upper radius, upper None for
    the one-sided truncation.

    Parameters
    ----------
    graph : SampledGraph
    ts : np.ndarray
        Evaluation parameters, ideally knots.
    k : int
    truncation : Tuple, optional
        (lower, upper), lower may vary with t. None for the principal
        value.
    tolerance : float, optional
        Largest accepted error estimate.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        Values and error estimates from doubling the u-step.

    Raises
    ------
    StepTooCoarse
    """

    ts = np.atleast_1d(np.asarray(ts, dtype=float))

    fine = _pair_quadrature(graph, ts, k, truncation, 1)
    coarse = _pair_quadrature(graph, ts, k, truncation, 2)
    errors = np.abs(fine - coarse)

    if tolerance is not None and np.max(errors) > tolerance:
        raise StepTooCoarse(
            "Error estimate {:.3e} exceeds {:.3e}".format(
                float(np.max(errors)), tolerance
            )
        )

    return fine, errors


def pv_graph_transform(graph: SampledGraph, t: float, k: int,
                       truncation: Truncation = None,
                       tolerance: float = None) -> GraphTransform:
    values, errors = pv_graph_profile(graph, [t], k, truncation, tolerance)
    return GraphTransform(float(values[0]), float(errors[0]))
