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

from typing import Callable, List, Tuple

from .models import SmoothingKernel

from ..constants import (
    SIGMA_GROWTH_C, SIGMA_GROWTH_FLOOR, G_UPPER_C, G_DEVIATION_C,
    ETA_VARIATION_C
)
from ..exceptions import DegenerateWindow
from ..measure.models import DiscreteMeasure
from ..misc import trapezoid
from ..transport.models import LemmaCheck


logger = logging.getLogger("HuovinenLab")


def smoothed_density(sigma: DiscreteMeasure, ts, D_values, lam: float,
                     kernel: SmoothingKernel = None,
                     strict: bool = False) -> np.ndarray:
    """g(t), sigma smoothed by eta at window sqrt(lambda) D(t).

    Parameters
    ----------
    sigma : DiscreteMeasure
        Atoms on the real axis.
    ts : np.ndarray
    D_values : np.ndarray
        D at ts.
    lam : float
    kernel : SmoothingKernel, optional
    strict : bool, optional
        Raise on D(t) = 0 instead of returning nan there.

    Returns
    -------
    np.ndarray

    Raises
    ------
    DegenerateWindow
    """

    if kernel is None:
        kernel = SmoothingKernel()

    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    windows = np.sqrt(lam) * np.atleast_1d(np.asarray(D_values,
                                                      dtype=float))

    degenerate = windows <= 0
    if np.any(degenerate):
        if strict:
            raise DegenerateWindow()
        logger.warning("g undefined at {} points with D = 0".format(
            int(np.sum(degenerate))
        ))

    safe = np.where(degenerate, 1.0, windows)
    offsets = ts[:, None] - sigma.positions.real[None, :]
    values = kernel.profile(offsets / safe[:, None]) / safe[:, None]

    g = np.sum(values * sigma.weights[None, :], axis=1)
    return np.where(degenerate, np.nan, g)


def sigma_growth_check(sigma: DiscreteMeasure, ps, D_values,
                       epsilon: float, alpha: float,
                       constant: float = SIGMA_GROWTH_C,
                       radii: int = 8, floor: float = SIGMA_GROWTH_FLOOR,
                       slack: float = 0.0) -> List[LemmaCheck]:
    """Violations of sigma(B(p, r)) <= (1 + C alpha^2) 2r.

    r runs geometrically over (epsilon^(1/4) D(p), 1), floored at floor.
    """

    positions = sigma.positions.real
    factor = 1.0 + constant * alpha ** 2
    violations = []

    for p, D in zip(np.atleast_1d(ps), np.atleast_1d(D_values)):
        lower = max(epsilon ** 0.25 * D, floor)
        if lower >= 1.0:
            continue

        for r in np.geomspace(lower, 1.0, radii):
            mass = float(np.sum(sigma.weights[np.abs(positions - p) < r]))
            check = LemmaCheck("sigma-growth", True, mass,
                               factor * 2 * r + slack,
                               {"p": float(p), "r": float(r)})
            if not check.passed:
                violations.append(check)

    if violations:
        logger.warning("{} sigma growth violations".format(len(violations)))

    return violations


def g_bounds_check(ts, g, alpha: float,
                   window: Tuple[float, float] = (-8.0, 8.0),
                   upper_constant: float = G_UPPER_C,
                   deviation_constant: float = G_DEVIATION_C
                   ) -> Tuple[LemmaCheck, LemmaCheck]:
    """max g against 1 + C alpha^2 and ||chi (g - 1)||_2 against C alpha
    over the window.

    ts must be uniform. Degenerate samples are left out.
    """

    ts = np.asarray(ts, dtype=float)
    g = np.asarray(g, dtype=float)
    inside = (ts >= window[0]) & (ts <= window[1]) & np.isfinite(g)

    largest = float(np.max(g[inside])) if np.any(inside) else 0.0
    step = float(ts[1] - ts[0]) if len(ts) > 1 else 0.0
    deviation = np.where(inside, g - 1.0, 0.0)
    l2 = float(np.sqrt(trapezoid(deviation ** 2, step)))

    return (
        LemmaCheck("g-max", True, largest,
                   1.0 + upper_constant * alpha ** 2),
        LemmaCheck("g-deviation", True, l2, deviation_constant * alpha)
    )


def eta_variation_check(ts, D_values, lam: float,
                        kernel: SmoothingKernel = None,
                        constant: float = ETA_VARIATION_C,
                        D_function: Callable = None,
                        samples: int = 33) -> LemmaCheck:
    """|eta_{sqrt(lambda) D(t)}(t - s) - eta_{sqrt(lambda) D(s)}(t - s)|
    in units of 1 / D(s), over |t - s| < sqrt(lambda) D(s).

    Every s of ts with D(s) > 0 gets its own grid of t inside that
    window, so windows much finer than ts are still compared.

    Parameters
    ----------
    ts : np.ndarray
        Ascending centres s.
    D_values : np.ndarray
        D at ts.
    lam : float
    kernel : SmoothingKernel, optional
    constant : float, optional
    D_function : Callable, optional
        D at arbitrary points, by default interpolated from D_values.
    samples : int, optional
        t per window, ends excluded.

    Returns
    -------
    LemmaCheck
        Vacuous without a positive D.
    """

    if kernel is None:
        kernel = SmoothingKernel()

    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    D = np.atleast_1d(np.asarray(D_values, dtype=float))
    if D_function is None:
        def D_function(points):
            return np.interp(points, ts, D)

    positive = D > 0
    if not np.any(positive):
        return LemmaCheck("eta-variation", False, 0.0, constant)

    centers, D_centers = ts[positive], D[positive]
    root = np.sqrt(lam)
    windows = root * D_centers

    fractions = np.linspace(-1.0, 1.0, samples + 2)[1:-1]
    offsets = windows[:, None] * fractions[None, :]
    D_local = np.asarray(
        D_function((centers[:, None] + offsets).ravel()), dtype=float
    ).reshape(offsets.shape)

    local = root * D_local
    valid = local > 0
    safe = np.where(valid, local, 1.0)

    difference = np.abs(
        kernel.profile(offsets / safe) / safe
        - kernel.profile(offsets / windows[:, None]) / windows[:, None]
    )
    ratio = np.where(valid, difference * D_centers[:, None], 0.0)

    largest = float(np.max(ratio))
    return LemmaCheck("eta-variation", True, largest, constant, {
        "pairs": int(np.sum(valid & (offsets != 0))),
        "sqrt_lambda_units": largest / root
    })
