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

from typing import Dict, List, Tuple

from .models import (
    GraphReport, LipschitzGraph, Partition, StoppingRegion, WhitneyCover
)
from .whitney import partition_derivative_bound, partition_of_unity

from ..constants import (
    LOCALIZATION_PLATEAU, LOCALIZATION_SUPPORT, GRAPH_SUPPORT
)
from ..misc import smootherstep
from ..settings import GraphSettings
from ..transport.models import LemmaCheck


logger = logging.getLogger("HuovinenLab")


def localization(points) -> np.ndarray:
    """C2 cutoff, 1 on (3/2) I0 and 0 off 2 I0.
    """

    points = np.abs(np.asarray(points, dtype=float))
    return smootherstep(
        (LOCALIZATION_SUPPORT - points)
        / (LOCALIZATION_SUPPORT - LOCALIZATION_PLATEAU)
    )


def z_cells(partition: Partition, knots: np.ndarray, step: float,
            alpha: float) -> Tuple[Dict[int, float], List[int]]:
    """Weighted mean heights of Z atoms per nearest knot.

    Cells whose heights spread more than 2 alpha step are conflicts.
    """

    mu = partition.mu
    positions = mu.positions[partition.z]
    weights = mu.weights[partition.z]

    cells = np.rint((positions.real - knots[0]) / step).astype(int)
    valid = (cells >= 0) & (cells < len(knots))

    values, conflicts = {}, []
    for cell in np.unique(cells[valid]):
        selected = cells == cell
        heights = positions.imag[selected]

        if np.ptp(heights) > 2 * alpha * step:
            conflicts.append(int(cell))
            continue

        values[int(cell)] = float(np.average(heights,
                                             weights=weights[selected]))

    if conflicts:
        logger.warning("{} Z cells with conflicting heights excluded"
                       .format(len(conflicts)))

    return values, conflicts


def assemble_graph(cover: WhitneyCover, region: StoppingRegion,
                   partition: Partition,
                   settings: GraphSettings = None) -> LipschitzGraph:
    """A = sum psi_i A_i off pi(Z), the Z heights on pi(Z), localized.

    Knots reached by neither are interpolated from the rest.

    Parameters
    ----------
    cover : WhitneyCover
        With balls and lines filled in.
    region : StoppingRegion
    partition : Partition
    settings : GraphSettings, optional

    Returns
    -------
    LipschitzGraph
    """

    if settings is None:
        settings = GraphSettings()

    params = region.params
    knots = settings.knots
    step = float(knots[1] - knots[0])

    pieces = cover.included
    psi, covered = partition_of_unity(pieces, knots)

    raw = np.zeros(len(knots))
    known = np.zeros(len(knots), dtype=bool)

    if pieces:
        affine = np.array([piece.affine(knots) for piece in pieces])
        raw[covered] = np.sum(psi * affine, axis=0)[covered]
        known |= covered

    heights, _ = z_cells(partition, knots, step, params.alpha)
    for cell, value in heights.items():
        raw[cell] = value
        known[cell] = True

    if np.any(known) and not np.all(known):
        raw[~known] = np.interp(knots[~known], knots[known], raw[known])

    provenance = [
        () if index in heights
        else tuple(int(i) for i in np.nonzero(psi[:, index] > 0)[0])
        for index in range(len(knots))
    ] if pieces else None

    values = localization(knots) * raw

    graph = LipschitzGraph(knots, values, raw, provenance)
    graph.certificates = graph_certificates(graph, region, settings)
    graph.certificates["partition_derivative"] = \
        partition_derivative_bound(pieces, psi, step)

    logger.info("Assembled graph from {} intervals and {} Z cells".format(
        len(pieces), len(heights)
    ))

    return graph


def graph_certificates(graph: LipschitzGraph, region: StoppingRegion,
                       settings: GraphSettings) -> Dict[str, float]:
    """Lipschitz, curvature and distance to the real axis, each in
    units of alpha or lambda.
    """

    params = region.params
    lam = params.lam

    D = region.D(graph.knots)
    interior = (np.abs(graph.knots) < LOCALIZATION_SUPPORT) & (D > 0)
    interior[[0, -1]] = False

    curvature = np.abs(graph.second_derivative) * D
    curvature_ratio = float(np.max(curvature[interior]) / lam) \
        if np.any(interior) else 0.0

    inside = np.abs(graph.knots) <= GRAPH_SUPPORT
    outside = ~inside

    return {
        "lipschitz": graph.lipschitz_constant,
        "lipschitz_ratio": graph.lipschitz_constant / params.alpha,
        "lipschitz_bound": settings.lipschitz_constant,
        "curvature_ratio": curvature_ratio,
        "axis_distance_ratio": float(
            np.max(np.abs(graph.values[inside])) / lam
        ),
        "support_leak": float(np.max(np.abs(graph.values[outside])))
        if np.any(outside) else 0.0,
        "witness_distance_ratio": witness_distance_ratio(graph, region)
    }


def witness_distance_ratio(graph: LipschitzGraph, region: StoppingRegion,
                           samples: int = 9) -> float:
    """max dist((p, A(p)), D) / (lambda t) over S balls B(X, t) with
    witness D and p in pi(B(X, t)) on the localization plateau.
    """

    positions, scales, rows = region.pairs()
    lam = region.params.lam

    worst = 0.0
    for position, scale, row in zip(positions, scales, rows):
        if scale == 0:
            continue

        line = region.witness(row, scale)
        if line is None:
            continue

        ps = position.real + scale * np.linspace(-1.0, 1.0, samples)
        ps = ps[np.abs(ps) <= LOCALIZATION_PLATEAU]
        if len(ps) == 0:
            continue

        distance = np.max(line.distance(graph.embed(ps)))
        worst = max(worst, float(distance / (lam * scale)))

    return worst


def closeness_fraction(graph: LipschitzGraph, region: StoppingRegion,
                       settings: GraphSettings = None) -> float:
    """Fraction of F atoms in the base ball within C lambda D(pi(x))
    of the graph, up to the cell tolerance.
    """

    if settings is None:
        settings = GraphSettings()

    positions = region.positions
    if len(positions) == 0:
        return 1.0

    params = region.params
    tolerance = settings.closeness_constant * params.lam \
        * region.D(positions.real) + 2 * params.alpha * graph.step

    distance = np.abs(graph.value_at(positions.real) - positions.imag)
    return float(np.mean(distance <= tolerance))


def graph_report(graph: LipschitzGraph, partition: Partition,
                 region: StoppingRegion, settings: GraphSettings = None,
                 growth: LemmaCheck = None) -> GraphReport:
    """Masses of Z, F1 and F2 with the closeness and L2 summaries.

    Parameters
    ----------
    graph : LipschitzGraph
    partition : Partition
    region : StoppingRegion
    settings : GraphSettings, optional
    growth : LemmaCheck, optional
        Growth check of sigma, computed by the analysis stage.

    Returns
    -------
    GraphReport
    """

    params = region.params

    energy = graph.derivative_l2_squared
    f2_mass = partition.mass(partition.f2)
    if f2_mass == 0:
        f2_ratio = 0.0
    elif energy == 0:
        f2_ratio = float("inf")
    else:
        f2_ratio = f2_mass * params.alpha ** 2 / energy

    F_mass = partition.total
    extra = {
        "mass_F": F_mass,
        "z_fraction": partition.mass(partition.z) / F_mass
        if F_mass > 0 else 0.0,
        "leaked": float(len(partition.leaked)),
        **graph.certificates
    }

    if growth is not None:
        extra["growth_lhs"] = growth.lhs
        extra["growth_rhs"] = growth.rhs
        extra["growth_passed"] = float(growth.passed)

    return GraphReport(
        partition.masses,
        closeness_fraction(graph, region, settings),
        energy,
        f2_ratio,
        extra
    )
