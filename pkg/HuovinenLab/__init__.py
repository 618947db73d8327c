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

from .measure.density import lambda_k
from .operator.series import kernel_series
from .resources import Config
from .settings import (
    TransportSettings,
    GraphSettings,
    OutputSettings
)


__version__ = "0.1.0"
__url__ = "https://github.com/WardPearce/HuovinenLab"
__description__ = "HuovinenLab, transport coefficients & stopping graphs."
__author__ = "WardPearce"
__author_email__ = "wardpearce@protonmail.com"
__license__ = "GPL v3"


logger = logging.getLogger("HuovinenLab")


class Laboratory:
    def __init__(self,
                 transport_settings: TransportSettings = None,
                 graph_settings: GraphSettings = None,
                 output_settings: OutputSettings = None,
                 solver: str = "highs",
                 float_format: str = "%.17g",
                 clear_cache: bool = True) -> None:
        """Process wide numerical settings.

        Parameters
        ----------
        transport_settings : TransportSettings, optional
            by default TransportSettings()
        graph_settings : GraphSettings, optional
            by default GraphSettings()
        output_settings : OutputSettings, optional
            by default None, nothing is written.
        solver : str, optional
            scipy.optimize.linprog method, by default "highs"
        float_format : str, optional
            by default "%.17g"
        clear_cache : bool, optional
            Drops cached lambda_k values and kernel series.
        """

        if transport_settings is None:
            transport_settings = TransportSettings()

        if graph_settings is None:
            graph_settings = GraphSettings()

        Config.n_max = transport_settings.n_max
        Config.angle_seeds = transport_settings.angle_seeds
        Config.angle_tol = transport_settings.angle_tol
        Config.model_spacing_ratio = transport_settings.model_spacing_ratio
        Config.vertex_steps = transport_settings.vertex_steps
        Config.vertex_reach = transport_settings.vertex_reach

        Config.solver = solver
        Config.float_format = float_format

        if output_settings:
            Config.output_dir = output_settings.directory
            Config.emit_svg = output_settings.emit_svg

        self.transport_settings = transport_settings
        self.graph_settings = graph_settings
        self.output_settings = output_settings

        if clear_cache:
            lambda_k.cache_clear()
            kernel_series.cache_clear()
            logger.debug("Cache cleared")
