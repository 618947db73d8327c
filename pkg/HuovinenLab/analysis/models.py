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

from typing import Dict, List

from scipy.integrate import quad

from ..constants import ETA_PLATEAU, ETA_TAIL_END
from ..exceptions import DegenerateWindow
from ..misc import smoothstep
from ..transport.models import LemmaCheck


class SmoothingKernel:
    def __init__(self, plateau: float = ETA_PLATEAU,
                 tail_end: float = ETA_TAIL_END) -> None:
        """Non-increasing profile, 1 on [0, plateau], 0 from tail_end on.

        The C1 cubic tail integrates to (tail_end - plateau) / 2, so the
        defaults give a profile integral of exactly 1/2 over [0, inf)
        and eta_p has unit mass for every p.

        Parameters
        ----------
        plateau : float, optional
        tail_end : float, optional
            In (plateau, 1].
        """

        if not 0 < plateau < tail_end <= 1:
            raise ValueError("Need 0 < plateau < tail_end <= 1")

        self.plateau = plateau
        self.tail_end = tail_end

    @property
    def profile_integral(self) -> float:
        return self.plateau + (self.tail_end - self.plateau) / 2

    def profile(self, u):
        u = np.abs(np.asarray(u, dtype=float))
        return 1.0 - smoothstep(
            (u - self.plateau) / (self.tail_end - self.plateau)
        )

    def __call__(self, t, p: float):
        """eta_p(t) = profile(|t| / p) / p.

        Raises
        ------
        DegenerateWindow
        """

        if not p > 0:
            raise DegenerateWindow()

        return self.profile(np.asarray(t, dtype=float) / p) / p

    def mass(self, p: float) -> float:
        """Mass of eta_p by adaptive quadrature over its pieces.
        """

        breaks = [self.plateau * p, self.tail_end * p]
        value, _ = quad(lambda t: float(self(t, p)), 0.0, breaks[-1],
                        points=breaks[:1], epsabs=1e-13, epsrel=1e-13)
        return 2.0 * value

    @property
    def api_schema(self) -> dict:
        return {
            "plateau": self.plateau,
            "tail_end": self.tail_end,
            "profile_integral": self.profile_integral
        }


class LedgerEntry:
    def __init__(self, k: int, lhs: float, energy: float,
                 sup: float) -> None:
        """||PV||^2 with the L2 and sup norms of A'.
        """

        self.k = k
        self.lhs = lhs
        self.energy = energy
        self.sup = sup

    def bound(self, c: float, C: float) -> float:
        return c * self.energy - C * self.sup ** 4

    @property
    def api_schema(self) -> dict:
        return {
            "k": self.k,
            "lhs": self.lhs,
            "energy": self.energy,
            "sup": self.sup
        }


class AnalysisReport:
    def __init__(self, grid: np.ndarray, g: np.ndarray,
                 growth: List[LemmaCheck], g_max: LemmaCheck,
                 deviation: LemmaCheck, band_measure: float,
                 band_graph: float, ledger: LedgerEntry = None,
                 checks: List[LemmaCheck] = None) -> None:
        """Comparison quantities of a constructed graph.

        Parameters
        ----------
        grid : np.ndarray
        g : np.ndarray
            nan where D vanishes.
        growth : List[LemmaCheck]
            Growth violations with their (p, r).
        g_max : LemmaCheck
        deviation : LemmaCheck
        band_measure : float
            Band operator norm in L2 of mu on F over 4 I0.
        band_graph : float
            Band operator norm in L2 of the graph over 4 I0.
        ledger : LedgerEntry, optional
            None when the slope is beyond the series guard.
        checks : List[LemmaCheck], optional
        """

        self.grid = grid
        self.g = g
        self.growth = growth
        self.g_max = g_max
        self.deviation = deviation
        self.band_measure = band_measure
        self.band_graph = band_graph
        self.ledger = ledger
        self.checks = checks or []

    @property
    def all_checks(self) -> List[LemmaCheck]:
        return [self.g_max, self.deviation] + self.growth + self.checks

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.all_checks)

    @property
    def api_schema(self) -> Dict[str, float]:
        finite = self.g[np.isfinite(self.g)]

        schema = {
            "g_samples": len(self.g),
            "g_degenerate": int(np.sum(~np.isfinite(self.g))),
            "g_mean": float(np.mean(finite)) if len(finite) else 0.0,
            "g_max": self.g_max.lhs,
            "g_deviation_l2": self.deviation.lhs,
            "growth_violations": len(self.growth),
            "band_norm_measure": self.band_measure,
            "band_norm_graph": self.band_graph
        }

        if self.ledger is not None:
            schema.update({
                "ledger_" + key: value
                for key, value in self.ledger.api_schema.items()
            })

        for check in self.checks:
            schema[check.name + "_lhs"] = check.lhs
            schema[check.name + "_rhs"] = check.rhs
            schema[check.name + "_passed"] = check.passed

        return schema
