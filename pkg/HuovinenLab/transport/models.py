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


from typing import Any, Dict, Union

from ..measure.models import Ball, Line, SpikeMeasure


STATUS_OPTIMAL = "optimal"
STATUS_DEGENERATE = "degenerate"
STATUS_GUARD = "infeasible-guard"


class AlphaResult:
    def __init__(self, value: float,
                 witness: Union[Line, SpikeMeasure] = None,
                 normalization: float = 0.0,
                 status: str = STATUS_OPTIMAL,
                 tolerance: float = 0.0,
                 ball: Ball = None,
                 atoms: int = 0) -> None:
        self.value = value
        self.witness = witness
        self.normalization = normalization
        self.status = status
        self.tolerance = tolerance
        self.ball = ball
        self.atoms = atoms

    @property
    def witness_kind(self) -> str:
        if isinstance(self.witness, SpikeMeasure):
            return "spike" if self.witness.m > 1 else "line"
        if isinstance(self.witness, Line):
            return "line"
        return "none"

    @property
    def witness_params(self) -> str:
        if self.witness is None:
            return ""
        return ";".join(
            "{}={}".format(key, value)
            for key, value in self.witness.api_schema.items()
        )

    def within(self, threshold: float) -> bool:
        """Whether value <= threshold up to the quadrature tolerance.
        """

        return self.value <= threshold + self.tolerance

    @property
    def api_schema(self) -> dict:
        return {
            "value": self.value,
            "witness_kind": self.witness_kind,
            "witness_params": self.witness_params,
            "c": self.normalization,
            "status": self.status,
            "tolerance": self.tolerance
        }


class ModifiedDensityResult:
    def __init__(self, value: float, witness: Ball = None,
                 base_density: float = 0.0, lambda_k: float = 0.0,
                 tested: int = 0) -> None:
        self.value = value
        self.witness = witness
        self.base_density = base_density
        self.lambda_k = lambda_k
        self.tested = tested

    @property
    def ratio(self) -> float:
        return self.base_density / self.value if self.value > 0 else 0.0

    @property
    def api_schema(self) -> dict:
        return {
            "value": self.value,
            "base_density": self.base_density,
            "lambda_k": self.lambda_k,
            "tested": self.tested,
            "witness": self.witness.api_schema if self.witness else None
        }


class LemmaCheck:
    def __init__(self, name: str, hypotheses: bool, lhs: float,
                 rhs: float, detail: Dict[str, Any] = None) -> None:
        """Outcome of one inequality on one instance.

        Instances whose hypotheses fail pass vacuously.
        """

        self.name = name
        self.hypotheses = hypotheses
        self.lhs = lhs
        self.rhs = rhs
        self.detail = detail or {}

    @property
    def passed(self) -> bool:
        return (not self.hypotheses) or self.lhs <= self.rhs

    @property
    def api_schema(self) -> dict:
        return {
            "name": self.name,
            "hypotheses": self.hypotheses,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
            **self.detail
        }
