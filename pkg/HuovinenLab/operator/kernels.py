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

from ..decorators import validate_kernel_order
from ..exceptions import ZeroPoint
from ..misc import smoothstep


FULL = "full"
NORMAL = "normal"


def kernel_values(k: int, points, part: str = FULL) -> np.ndarray:
    """K_k or its normal part, 0 wherever points vanish.
    """

    points = np.asarray(points, dtype=np.complex128)
    radius = np.abs(points)
    safe = np.where(radius > 0, radius, 1.0)

    unit = points / safe
    # Repeated products keep real points exactly real.
    power = unit
    for _ in range(k - 1):
        power = power * unit

    values = np.where(radius > 0, power / safe, 0.0)
    if part == NORMAL:
        return values.imag
    if part == FULL:
        return values

    raise ValueError("part must be '{}' or '{}'".format(FULL, NORMAL))


@validate_kernel_order
def kernel(k: int, z, part: str = FULL):
    """K_k(z) = z^k / |z|^(k + 1), or its imaginary part.

    Parameters
    ----------
    k : int
        Odd and positive.
    z : complex or np.ndarray
    part : str, optional
        "full" or "normal", by default "full"

    Returns
    -------
    complex, float or np.ndarray

    Raises
    ------
    ZeroPoint
    InvalidKernelOrder
    """

    if np.any(np.asarray(z) == 0):
        raise ZeroPoint()

    values = kernel_values(k, z, part)
    if np.ndim(values) == 0:
        return complex(values) if part == FULL else float(values)
    return values


def psi(t):
    """Smooth truncation, 0 on [0, 1/2], 1 on [1, inf).

    Cubic smoothstep of 2t - 1, its second derivative is bounded by 24.
    """

    value = smoothstep(2.0 * np.asarray(t, dtype=float) - 1.0)
    return float(value) if np.ndim(value) == 0 else value
