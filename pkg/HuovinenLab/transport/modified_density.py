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

from typing import Sequence

from .models import ModifiedDensityResult
from .search import alpha_line, line_tolerance

from ..constants import (
    DENSITY_TIE_DECIMALS, FLATNESS_DILATION, MODIFIED_DENSITY_RADIUS_FACTOR,
    MODIFIED_DENSITY_RADII_PER_OCTAVE
)
from ..decorators import validate_kernel_order
from ..exceptions import AtomLimitExceeded
from ..measure.density import density_ratio_k, lambda_k, resolved_densities
from ..measure.models import Ball, DiscreteMeasure
from ..misc import geometric_grid, nearest_neighbor_gap
from ..settings import TransportSettings


logger = logging.getLogger("HuovinenLab")


def flat_ball(mu: DiscreteMeasure, ball: Ball, epsilon: float,
              ball_density: float,
              settings: TransportSettings = None) -> bool:
    """Whether alpha_mu(30B) <= epsilon * density, up to tolerance.
    """

    dilated = ball.scaled(FLATNESS_DILATION)
    threshold = epsilon * ball_density + line_tolerance(
        mu, dilated, settings
    )
    result = alpha_line(mu, dilated, settings=settings,
                        stop_below=threshold)
    return result.value <= threshold


@validate_kernel_order
def modified_density(mu: DiscreteMeasure, ball: Ball, epsilon: float,
                     k: int, settings: TransportSettings = None,
                     lambda_value: float = None,
                     centers: Sequence[complex] = None,
                     radii: Sequence[float] = None,
                     max_centers: int = None) -> ModifiedDensityResult:
    """Infimum of densities over dense, flat, not too small sub-balls.

    Candidate balls are centred on atoms of mu inside B(x, r) with radii
    16 per octave in [lambda_k r / 2, r]. They are tried by increasing
    density, so the first member found is the infimum. Ties go to
    centres farther from x.

    Densities, the base one included, are resolved densities with the
    median atom gap inside B(x, r), see resolved_densities.

    Parameters
    ----------
    mu : DiscreteMeasure
    ball : Ball
        B(x, r).
    epsilon : float
    k : int
    settings : TransportSettings, optional
    lambda_value : float, optional
        Overrides lambda_k(k).
    centers : Sequence[complex], optional
        Overrides the atom centre grid.
    radii : Sequence[float], optional
        Overrides the radius grid.
    max_centers : int, optional
        Thins the centre grid by a stride.

    Returns
    -------
    ModifiedDensityResult
        value 0 and no witness when nothing qualifies.
    """

    if settings is None:
        settings = TransportSettings()

    lam = lambda_value if lambda_value is not None else lambda_k(k)
    ratio = density_ratio_k(k)

    inside = mu.positions[ball.contains(mu.positions)]
    gap = nearest_neighbor_gap(inside)
    nearby = mu.restrict_ball(Ball(ball.center, ball.radius + gap))
    base = float(resolved_densities(nearby, ball.center, ball.radius,
                                    gap)[0])

    if centers is None:
        centers = np.unique(inside)
        if max_centers and len(centers) > max_centers:
            stride = int(np.ceil(len(centers) / max_centers))
            centers = centers[::stride]
    centers = np.asarray(centers, dtype=np.complex128)

    if radii is None:
        radii = geometric_grid(
            MODIFIED_DENSITY_RADIUS_FACTOR * lam * ball.radius,
            ball.radius, MODIFIED_DENSITY_RADII_PER_OCTAVE
        )
    radii = np.asarray(radii, dtype=float)

    values, offsets, sizes, owners = [], [], [], []
    for index, center in enumerate(centers):
        offset = abs(center - ball.center)
        admissible = radii[offset + radii <= ball.radius]
        if len(admissible) == 0:
            continue

        dense = resolved_densities(nearby, center, admissible, gap)
        keep = dense >= base / (2.0 * ratio)
        values.append(dense[keep])
        sizes.append(admissible[keep])
        offsets.append(np.full(int(np.sum(keep)), offset))
        owners.append(np.full(int(np.sum(keep)), index))

    if not values:
        return ModifiedDensityResult(0.0, None, base, lam, 0)

    values = np.concatenate(values)
    offsets, sizes = np.concatenate(offsets), np.concatenate(sizes)
    owners = np.concatenate(owners)

    # Densities equal up to summation noise count as ties.
    order = np.lexsort((-offsets, np.round(values, DENSITY_TIE_DECIMALS)))

    tested = 0
    for position in order:
        tested += 1
        value = float(values[position])
        candidate = Ball(centers[owners[position]], float(sizes[position]))
        try:
            if flat_ball(mu, candidate, epsilon, value, settings):
                return ModifiedDensityResult(
                    value, candidate, base, lam, tested
                )
        except AtomLimitExceeded as error:
            logger.warning(
                "Skipping candidate {}: {}".format(
                    candidate.api_schema, error
                )
            )

    return ModifiedDensityResult(0.0, None, base, lam, tested)
