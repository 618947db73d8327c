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


from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List

from .models import KernelSeries

from ..constants import SERIES_DEFAULT_ORDER, SERIES_ORDER_GUARD
from ..decorators import validate_kernel_order
from ..exceptions import SeriesOrderTooLarge


def _multiply(first: List[Fraction], second: List[Fraction],
              degree: int) -> List[Fraction]:
    product = [Fraction(0)] * (degree + 1)
    for i, a in enumerate(first):
        if a == 0 or i > degree:
            continue
        for j, b in enumerate(second[:degree - i + 1]):
            product[i + j] += a * b
    return product


@lru_cache(maxsize=None)
@validate_kernel_order
def kernel_series(k: int, order: int = SERIES_DEFAULT_ORDER) -> KernelSeries:
    """Exact coefficients c_{k, l} of the normal kernel expansion.

    Im((1 + iw)^k) is multiplied by the binomial series of
    (1 + w^2)^(-(k + 1)/2) truncated at degree order, and the odd
    coefficients are read off.

    Parameters
    ----------
    k : int
    order : int, optional
        Odd, at least k and at most 60.

    Returns
    -------
    KernelSeries

    Raises
    ------
    SeriesOrderTooLarge
    InvalidKernelOrder
    """

    if order % 2 == 0 or order < k or order > SERIES_ORDER_GUARD:
        raise SeriesOrderTooLarge(
            "Order must be odd and within [{}, {}]".format(
                k, SERIES_ORDER_GUARD
            )
        )

    # Im((1 + iw)^k) = sum over odd j of C(k, j) i^(j - 1) w^j.
    numerator = [Fraction(0)] * (k + 1)
    for j in range(1, k + 1, 2):
        numerator[j] = Fraction(comb(k, j) * (-1) ** ((j - 1) // 2))

    # (1 + x)^(-m) = sum of (-1)^n C(m + n - 1, n) x^n with x = w^2.
    m = (k + 1) // 2
    denominator = [Fraction(0)] * (order + 1)
    for n in range(order // 2 + 1):
        denominator[2 * n] = Fraction((-1) ** n * comb(m + n - 1, n))

    product = _multiply(numerator, denominator, order)
    return KernelSeries(k, order, {
        power: product[power] for power in range(1, order + 1, 2)
    })
