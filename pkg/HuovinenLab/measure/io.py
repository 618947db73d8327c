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

from .models import DiscreteMeasure

from ..exceptions import MeasureFileError, InvalidMeasure
from ..resources import Config


HEADER = "x y w"


def write_measure(mu: DiscreteMeasure, pathway: str,
                  comment: str = None) -> None:
    """Writes one atom per line under an `x y w` header.

    Parameters
    ----------
    mu : DiscreteMeasure
    pathway : str
    comment : str, optional
        Emitted as a leading # line.
    """

    with open(pathway, "w") as file:
        if comment:
            file.write("# {}\n".format(comment))
        file.write(HEADER + "\n")

        for position, weight in zip(mu.positions, mu.weights):
            file.write(" ".join(
                Config.float_format % value
                for value in (position.real, position.imag, weight)
            ) + "\n")


def read_measure(pathway: str) -> DiscreteMeasure:
    """Parses a measure file.

    Parameters
    ----------
    pathway : str

    Returns
    -------
    DiscreteMeasure

    Raises
    ------
    MeasureFileError
    """

    positions = []
    weights = []
    header_seen = False

    try:
        file = open(pathway, "r")
    except OSError as error:
        raise MeasureFileError("Can't open measure file: {}".format(error))

    with file:
        for number, raw in enumerate(file, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue

            if not header_seen:
                if line.split() != HEADER.split():
                    raise MeasureFileError(
                        "Expected header '{}'".format(HEADER), line=number
                    )
                header_seen = True
                continue

            fields = line.split()
            if len(fields) != 3:
                raise MeasureFileError("Expected 3 columns", line=number)

            try:
                x, y, w = (float(field) for field in fields)
            except ValueError:
                raise MeasureFileError("Non-numeric field", line=number)

            if not (np.isfinite(w) and w > 0):
                raise MeasureFileError(
                    "Weight must be positive and finite", line=number
                )

            positions.append(complex(x, y))
            weights.append(w)

    if not header_seen:
        raise MeasureFileError("Missing header '{}'".format(HEADER))

    try:
        return DiscreteMeasure(positions, weights)
    except InvalidMeasure as error:
        raise MeasureFileError(str(error))
