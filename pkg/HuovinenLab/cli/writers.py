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


import csv
import numpy as np

from typing import Any, Dict, Iterable, List, Sequence, Tuple

from ..operator.models import KernelSeries, SampledGraph
from ..resources import Config
from ..stopping.models import LipschitzGraph
from ..transport.models import AlphaResult, LemmaCheck


ALPHA_HEADER = ("x", "y", "r", "value", "witness_kind", "witness_params",
                "c", "status", "tolerance", "atoms")
TRANSFORM_HEADER = ("x", "y", "r", "re", "im")
SERIES_HEADER = ("k", "l", "numerator", "denominator")
CHECK_HEADER = ("name", "hypotheses", "lhs", "rhs", "passed", "detail")
GRAPH_HEADER = ("t", "a", "raw", "pieces")


def format_value(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (float, np.floating)):
        return Config.float_format % value
    if isinstance(value, (complex, np.complexfloating)):
        return "{}{}{}j".format(Config.float_format % value.real,
                                "-" if value.imag < 0 else "+",
                                Config.float_format % abs(value.imag))
    if value is None:
        return ""
    return str(value)


def write_csv(pathway: str, header: Sequence[str],
              rows: Iterable[Sequence[Any]]) -> int:
    """Writes a header row then one row per record.

    Returns
    -------
    int
        Rows written.
    """

    count = 0
    with open(pathway, "w", newline="") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(value) for value in row])
            count += 1

    return count


def read_csv(pathway: str) -> Tuple[List[str], List[List[str]]]:
    with open(pathway, "r", newline="") as file:
        reader = csv.reader(file)
        header = next(reader)
        return header, [row for row in reader]


def alpha_row(result: AlphaResult) -> tuple:
    ball = result.ball
    return (
        ball.center.real if ball else None,
        ball.center.imag if ball else None,
        ball.radius if ball else None,
        float(result.value),
        result.witness_kind,
        result.witness_params,
        float(result.normalization),
        result.status,
        float(result.tolerance),
        result.atoms
    )


def transform_row(point: complex, radius: float, value: complex) -> tuple:
    return (point.real, point.imag, radius, value.real, value.imag)


def series_rows(series: KernelSeries) -> Iterable[tuple]:
    return series.rows()


def check_row(check: LemmaCheck) -> tuple:
    return (
        check.name,
        check.hypotheses,
        float(check.lhs),
        float(check.rhs),
        check.passed,
        ";".join("{}={}".format(key, format_value(value))
                 for key, value in sorted(check.detail.items()))
    )


def write_checks(pathway: str, checks: Iterable[LemmaCheck]) -> int:
    return write_csv(pathway, CHECK_HEADER,
                     (check_row(check) for check in checks))


def write_graph(pathway: str, graph: SampledGraph) -> int:
    """Knot/value table. LipschitzGraph adds raw values and the Whitney
    pieces contributing at each knot.
    """

    if isinstance(graph, LipschitzGraph):
        rows = (
            (t, a, raw, " ".join(str(piece) for piece in pieces))
            for t, a, raw, pieces in zip(graph.knots, graph.values,
                                         graph.raw, graph.provenance)
        )
    else:
        rows = ((t, a, a, "") for t, a in zip(graph.knots, graph.values))

    return write_csv(pathway, GRAPH_HEADER, rows)


def read_graph(pathway: str) -> SampledGraph:
    _, rows = read_csv(pathway)
    return SampledGraph(np.array([float(row[0]) for row in rows]),
                        np.array([float(row[1]) for row in rows]))


def write_report(pathway: str, values: Dict[str, Any]) -> None:
    """key = value lines, in insertion order.
    """

    with open(pathway, "w") as file:
        for key, value in values.items():
            file.write("{} = {}\n".format(key, format_value(value)))


def read_report(pathway: str) -> Dict[str, str]:
    values = {}
    with open(pathway, "r") as file:
        for line in file:
            if " = " not in line:
                continue
            key, value = line.rstrip("\n").split(" = ", 1)
            values[key] = value
    return values
