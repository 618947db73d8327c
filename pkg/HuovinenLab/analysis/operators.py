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


import logging
import numpy as np

from typing import Iterable, Tuple

from .models import LedgerEntry

from ..constants import (
    TAIL_SLOPE_GUARD, LEDGER_SLOPE_GUARD, LOWER_BOUND_CONSTANTS,
    LOCALIZATION_C, BAND_LOWER_BOUND, SERIES_DEFAULT_ORDER
)
from ..decorators import validate_kernel_order
from ..exceptions import SlopeTooLarge
from ..measure.models import DiscreteMeasure
from ..misc import trapezoid
from ..operator.graph import pv_graph_profile
from ..operator.kernels import NORMAL
from ..operator.models import SampledGraph
from ..operator.series import kernel_series
from ..operator.transforms import truncated_transform
from ..transport.models import LemmaCheck


logger = logging.getLogger("HuovinenLab")

# 4 I0, where the band norms are taken.
BAND_WINDOW = 4.0


def ell(D_values, floor: float = 0.0) -> np.ndarray:
    """l = D / 10, raised to floor where it would vanish.
    """

    return np.maximum(np.asarray(D_values, dtype=float) / 10.0, floor)


@validate_kernel_order
def band_operator_normal(mu: DiscreteMeasure, x: complex, radius: float,
                         k: int) -> float:
    """Normal band transform of mu at x between radius and 1.

    0 once radius >= 1.
    """

    if radius >= 1.0:
        return 0.0
    return truncated_transform(mu, x, radius, k, NORMAL, upper=1.0)


def band_norm_measure(mu: DiscreteMeasure, indices: np.ndarray,
                      radii: np.ndarray, k: int) -> Tuple[float, float]:
    """L2(mu) norm of the band transform over the given atoms in 4 I0,
    with the largest value seen.
    """

    indices = np.asarray(indices, dtype=int)
    radii = np.asarray(radii, dtype=float)

    inside = np.abs(mu.positions[indices].real) <= BAND_WINDOW
    indices, radii = indices[inside], radii[inside]

    values = np.array([
        band_operator_normal(mu, mu.positions[index], radius, k)
        for index, radius in zip(indices, radii)
    ])
    if len(values) == 0:
        return 0.0, 0.0

    norm = float(np.sqrt(np.sum(mu.weights[indices] * values ** 2)))
    return norm, float(np.max(np.abs(values)))


def _graph_l2(graph: SampledGraph, ts: np.ndarray,
              values: np.ndarray) -> float:
    return float(np.sqrt(trapezoid(values ** 2 * graph.jacobian(ts),
                                   graph.step)))


def band_norm_graph(graph: SampledGraph, radii: np.ndarray, k: int) -> float:
    """L2 norm over the graph above 4 I0 of the band between l and 1.
    """

    inside = np.abs(graph.knots) <= BAND_WINDOW
    ts = graph.knots[inside]
    radii = np.asarray(radii, dtype=float)[inside]

    values, _ = pv_graph_profile(graph, ts, k, (radii, 1.0))
    return _graph_l2(graph, ts, values)


def graph_pv_norm(graph: SampledGraph, k: int) -> float:
    """L2 norm over the graph of its principal value.
    """

    values, _ = pv_graph_profile(graph, graph.knots, k)
    return _graph_l2(graph, graph.knots, values)


@validate_kernel_order
def commutator_tail(graph: SampledGraph, ts, k: int,
                    order: int = SERIES_DEFAULT_ORDER) -> np.ndarray:
    """PV of the series tail, odd powers 3 and up of the kernel expansion,
    along the graph.

    Pairs s = t +- jh as in pv_graph_profile. Beyond the knots the graph
    is flat and each power integrates in closed form.

    Raises
    ------
    SlopeTooLarge
        When sup |A'| leaves the series domain.
    """

    if graph.lipschitz_constant > TAIL_SLOPE_GUARD:
        raise SlopeTooLarge(
            "sup |A'| = {:.3f} above {}".format(graph.lipschitz_constant,
                                                TAIL_SLOPE_GUARD)
        )

    series = kernel_series(k, order)
    terms = [(power, float(value)) for power, value in series
             if power >= 3]

    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    step = graph.step
    reach = np.max(np.maximum(ts - graph.knots[0], graph.knots[-1] - ts))
    count = int(np.ceil(reach / step)) + 1
    offsets = step * np.arange(1, count + 1)

    heights = graph.value_at(ts)
    total = np.zeros(len(ts))
    for sign in (1.0, -1.0):
        samples = ts[:, None] + sign * offsets[None, :]
        rise = heights[:, None] - graph.value_at(samples)
        run = -sign * offsets[None, :]

        kernel = np.zeros_like(rise)
        for power, value in terms:
            kernel = kernel + value * rise ** power / run ** (power + 1)
        total += step * np.sum(kernel, axis=1)

    edge = (count + 0.5) * step
    for end in (graph.values[-1], graph.values[0]):
        rise = heights - end
        for power, value in terms:
            total += value * rise ** power / (power * edge ** power)

    return total


@validate_kernel_order
def lower_bound_ledger(graph: SampledGraph, k: int,
                       guard: float = LEDGER_SLOPE_GUARD) -> LedgerEntry:
    """||PV||^2 over the graph with ||A'||_2^2 and ||A'||_inf.

    Raises
    ------
    SlopeTooLarge
    """

    sup = graph.lipschitz_constant
    if sup > guard:
        raise SlopeTooLarge(
            "sup |A'| = {:.3f} above {}".format(sup, guard)
        )

    return LedgerEntry(k, graph_pv_norm(graph, k) ** 2,
                       graph.derivative_l2_squared, sup)


def lower_bound_check(entry: LedgerEntry,
                      constants: Tuple[float, float] = None) -> LemmaCheck:
    """c ||A'||^2 - C ||A'||_inf^4 <= ||PV||^2 with frozen (c, C).
    """

    if constants is None:
        constants = LOWER_BOUND_CONSTANTS[entry.k]

    c, C = constants
    return LemmaCheck("lower-bound", True, entry.bound(c, C), entry.lhs,
                      {"k": entry.k, "c": c, "C": C})


def calibrate_lower_bound(entries: Iterable[LedgerEntry]) -> float:
    """Smallest ||PV||^2 / ||A'||^2 over a calibration corpus.

    Frozen constants use a generous fraction of it.
    """

    ratios = [entry.lhs / entry.energy for entry in entries
              if entry.energy > 0]
    if not ratios:
        return 0.0
    return float(min(ratios))


def localization_gap_check(graph: SampledGraph, radii: np.ndarray, k: int,
                           alpha: float,
                           constant: float = LOCALIZATION_C) -> LemmaCheck:
    """Full PV norm against the band norm over 4 I0, within C alpha^2.
    """

    gap = abs(graph_pv_norm(graph, k) - band_norm_graph(graph, radii, k))
    return LemmaCheck("localization-gap", True, gap,
                      constant * alpha ** 2)


def band_lower_bound_check(band_norm: float, derivative_l2: float,
                           alpha: float,
                           constants: Tuple[float, float] = BAND_LOWER_BOUND
                           ) -> LemmaCheck:
    """c ||A'||_2 - C alpha^2 <= band norm over mu on F.
    """

    c, C = constants
    return LemmaCheck("band-lower-bound", True,
                      c * derivative_l2 - C * alpha ** 2, band_norm,
                      {"c": c, "C": C})
