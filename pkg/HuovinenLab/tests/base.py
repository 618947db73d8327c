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

from .. import Laboratory
from ..measure import Ball, SpikeMeasure, generate, segment
from ..settings import TransportSettings, StopParams, GraphSettings


laboratory = Laboratory(
    transport_settings=TransportSettings(
        n_max=4000,
        angle_seeds=8,
        angle_tol=1e-3,
        vertex_steps=5,
        vertex_reach=4.0
    )
)


class TestBase:
    def setUp(self) -> None:
        self.settings = laboratory.transport_settings

        self.unit_ball = Ball(0, 1)
        self.coarse_segment = segment(half_length=5.0, spacing=0.02)

        self.spike = SpikeMeasure(0, 0.3, 3, 3)
        self.spike_atoms = generate(
            "spike", spacing=0.01, window_radius=4.0, angle=0.3, m=3, k=3
        )

        self.cross = segment(half_length=5.0, spacing=0.02) + segment(
            half_length=5.0, spacing=0.02, angle=np.pi / 2
        )

        self.stop_params = StopParams(
            delta=0.4, epsilon=1e-8, alpha=0.1, theta=0.01, k=3,
            t_grid_size=10, t_max=2.0
        )
        self.graph_settings = GraphSettings(
            knot_step=1.0 / 64, knot_extent=4.0
        )
