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

from contextlib import nullcontext
from typing import Callable, ContextManager

from .graph import assemble_graph, graph_report
from .models import GraphReport, LipschitzGraph, Partition, StoppingRegion
from .region import build_region, partition_F
from .whitney import fit_cover, whitney_cover

from ..measure.models import DiscreteMeasure
from ..settings import GraphSettings, StopParams, TransportSettings


logger = logging.getLogger("HuovinenLab")


def _no_stage(name: str) -> ContextManager:
    return nullcontext()


class Construction:
    def __init__(self, region: StoppingRegion, partition: Partition,
                 cover, graph: LipschitzGraph,
                 report: GraphReport) -> None:
        self.region = region
        self.partition = partition
        self.cover = cover
        self.graph = graph
        self.report = report


def construct(mu: DiscreteMeasure, params: StopParams,
              F: np.ndarray = None,
              graph_settings: GraphSettings = None,
              settings: TransportSettings = None,
              domain: tuple = None,
              stage: Callable[[str], ContextManager] = None
              ) -> Construction:
    """Region, partition, Whitney cover and graph of a normalized
    measure.

    D is sampled on the knot grid extended over the domain, by default
    the projection of 10 B0.

    Parameters
    ----------
    mu : DiscreteMeasure
    params : StopParams
    F : np.ndarray, optional
    graph_settings : GraphSettings, optional
    settings : TransportSettings, optional
    domain : tuple, optional
    stage : Callable[[str], ContextManager], optional
        Wraps every step under its name, see RunManifest.stage.

    Returns
    -------
    Construction
    """

    if graph_settings is None:
        graph_settings = GraphSettings()
    if domain is None:
        domain = (-10.0, 10.0)
    if stage is None:
        stage = _no_stage

    with stage("region"):
        region = build_region(mu, params, F, settings=settings)

    with stage("partition"):
        partition = partition_F(region, settings)

    with stage("whitney"):
        step = graph_settings.knot_step
        line_grid = np.arange(domain[0], domain[1] + step / 2, step)
        cover = whitney_cover(line_grid, region.D(line_grid), domain,
                              graph_settings.whitney_levels)
        fit_cover(cover, region, settings)

    with stage("graph"):
        graph = assemble_graph(cover, region, partition, graph_settings)
        report = graph_report(graph, partition, region, graph_settings)

    logger.info("Constructed graph, Lipschitz {:.4g}".format(
        graph.lipschitz_constant
    ))

    return Construction(region, partition, cover, graph, report)
