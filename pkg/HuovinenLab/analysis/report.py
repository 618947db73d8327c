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

from .models import AnalysisReport, SmoothingKernel
from .operators import (
    band_lower_bound_check, band_norm_graph, band_norm_measure, ell,
    localization_gap_check, lower_bound_check, lower_bound_ledger
)
from .smoothing import (
    eta_variation_check, g_bounds_check, sigma_growth_check,
    smoothed_density
)

from ..constants import RESOLUTION_FACTOR, SIGMA_GROWTH_FLOOR
from ..exceptions import SlopeTooLarge
from ..measure.density import pushforward_projection
from ..misc import nearest_neighbor_gap
from ..stopping.models import LipschitzGraph, Partition, StoppingRegion


logger = logging.getLogger("HuovinenLab")


def analyze(region: StoppingRegion, partition: Partition,
            graph: LipschitzGraph, window: float = 8.0,
            kernel: SmoothingKernel = None) -> AnalysisReport:
    """Comparison quantities between mu on F and the constructed graph.

    Parameters
    ----------
    region : StoppingRegion
    partition : Partition
    graph : LipschitzGraph
    window : float, optional
        g is sampled on [-window, window] at the knot step.
    kernel : SmoothingKernel, optional

    Returns
    -------
    AnalysisReport
    """

    params = region.params
    mu = region.mu

    F = np.concatenate((partition.z, partition.f1, partition.f2))
    sigma = pushforward_projection(mu, F)

    grid = np.arange(-window, window + graph.step / 2, graph.step)
    D_grid = region.D(grid)
    g = smoothed_density(sigma, grid, D_grid, params.lam, kernel)

    # Radii below a few atom gaps of sigma only see single atoms.
    smallest = max(
        RESOLUTION_FACTOR * nearest_neighbor_gap(sigma.positions),
        SIGMA_GROWTH_FLOOR
    )
    slack = float(np.max(sigma.weights)) if len(sigma) else 0.0
    growth = sigma_growth_check(sigma, grid[::8], D_grid[::8],
                                params.epsilon, params.alpha,
                                floor=smallest, slack=slack)
    g_max, deviation = g_bounds_check(grid, g, params.alpha,
                                      (-window, window))

    floor = graph.step
    band_measure, band_largest = band_norm_measure(
        mu, F, ell(region.D(mu.positions[F].real), floor), params.k
    )
    radii = ell(region.D(graph.knots), floor)
    band_graph = band_norm_graph(graph, radii, params.k)

    checks = [
        eta_variation_check(grid[::8], D_grid[::8], params.lam, kernel,
                            D_function=region.D),
        localization_gap_check(graph, radii, params.k, params.alpha),
        band_lower_bound_check(band_measure,
                               np.sqrt(graph.derivative_l2_squared),
                               params.alpha)
    ]
    checks[-1].detail["largest"] = band_largest

    ledger = None
    try:
        ledger = lower_bound_ledger(graph, params.k)
    except SlopeTooLarge as error:
        logger.warning("Lower bound ledger skipped, {}".format(error))
    else:
        checks.append(lower_bound_check(ledger))

    logger.info("Analysis with {} growth violations".format(len(growth)))

    return AnalysisReport(grid, g, growth, g_max, deviation, band_measure,
                          band_graph, ledger, checks)
