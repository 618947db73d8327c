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


import math


# Test cutoff phi: 1 on [0, 3), linear ramp to 0 on [3, 4).
PHI_PLATEAU = 3.0
PHI_SUPPORT = 4.0

# A ball B is flat when alpha(30B) is small, so the line model must be
# alone within the phi-support of 30B.
FLATNESS_DILATION = 30.0
SPIKE_SEPARATION = PHI_SUPPORT * FLATNESS_DILATION

# Angles sampled by the LP free lower bound of the line coefficient.
LINE_BOUND_ANGLES = 256

# Lower bound of the modified density candidate radii is lambda_k * r / 2.
MODIFIED_DENSITY_RADIUS_FACTOR = 0.5
MODIFIED_DENSITY_RADII_PER_OCTAVE = 16
DENSITY_TIE_DECIMALS = 9

PSI_SECOND_DERIVATIVE_MAX = 24.0

ETA_PLATEAU = 0.25
# Cubic C1 tail from ETA_PLATEAU to ETA_TAIL_END integrates to 1/4,
# making the integral of eta over [0, inf) exactly 1/2.
ETA_TAIL_END = 0.75

SERIES_ORDER_GUARD = 60
SERIES_DEFAULT_ORDER = 41

CANTOR_MAX_GENERATION = 12

TAIL_SLOPE_GUARD = 0.4
LEDGER_SLOPE_GUARD = 0.05

# Stopping scales below this many nearest neighbour gaps are meaningless.
RESOLUTION_FACTOR = 4.0

WHITNEY_RATIO = 20.0
WHITNEY_LOWER = 10.0
WHITNEY_UPPER = 60.0
WHITNEY_BALL_BUDGET = 120.0
WHITNEY_OVERLAP_MAX = 16

SIGMA_GROWTH_C = 10.0
SIGMA_GROWTH_FLOOR = 1e-3
G_UPPER_C = 10.0
G_DEVIATION_C = 10.0
ETA_VARIATION_C = 8.0
LOCALIZATION_C = 50.0
BAND_LOWER_BOUND = (0.5, 50.0)

# Frozen (c, C) of ||PV||^2 >= c ||A'||^2 - C ||A'||_inf^4, calibrated
# on the bump/saw calibration family with generous margin.
LOWER_BOUND_CONSTANTS = {
    1: (2.4674, 100.0),
    3: (22.2066, 900.0),
    5: (61.685, 2500.0),
    7: (120.9027, 4900.0),
}

GOLDEN_RATIO = (math.sqrt(5.0) - 1.0) / 2.0

LAMBDA_SEARCH_STEPS = 400
LAMBDA_SEARCH_REACH = 2.0
LAMBDA_TOLERANCE = 1e-3

MAXIMAL_SCALES_PER_OCTAVE = 8

POWER_ITERATION_RTOL = 1e-6

VERIFY_SUITES = (
    "lemmas-3-4",
    "modified-density",
    "kernel-series",
    "graph-pipeline",
    "analysis"
)

GENERATOR_KINDS = (
    "segment",
    "spike",
    "cantor",
    "lipschitz-graph",
    "perturbed-line"
)

GRAPH_PROFILES = (
    "zero",
    "bump",
    "saw",
    "slope"
)

# Constants the lemmas leave unspecified, reported against these.
LINES_DONT_MOVE_C = 20.0
SPIKE_FLATTENING_C = 50.0
DENSITY_CAP_C = 10.0

CONTINUITY_TOL = 1e-3
LEMMA_SUITE_COUNT = 200
LEMMA_WEIGHT_NOISE = 0.05
LEMMA_NOISE_ATOMS = 3

# Slope excess of far apart S pairs, in units of sqrt(lambda).
SLOPE_PAIRS_C = 10.0

# Localization cutoff of the graph: 1 on (3/2) I0, 0 off 2 I0.
LOCALIZATION_PLATEAU = 1.5
LOCALIZATION_SUPPORT = 2.0
GRAPH_SUPPORT = 3.0

PARTITION_DERIVATIVE_C = 8.0
