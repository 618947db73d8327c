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

from typing import Iterator, Sequence, Tuple

from .kernels import FULL, kernel_values, psi
from .models import NormEstimate

from ..constants import MAXIMAL_SCALES_PER_OCTAVE, POWER_ITERATION_RTOL
from ..decorators import validate_kernel_order
from ..exceptions import AtomLimitExceeded, InvalidBall, NotConverged
from ..measure.models import DiscreteMeasure
from ..misc import geometric_grid
from ..resources import Config
from ..transport.models import LemmaCheck


logger = logging.getLogger("HuovinenLab")


def _cutoff(distances: np.ndarray, r: float, smooth: bool) -> np.ndarray:
    if smooth:
        return psi(distances / r)
    return (distances > r).astype(float)


def _band_weights(distances: np.ndarray, r: float, upper: float,
                  smooth: bool) -> np.ndarray:
    weights = _cutoff(distances, r, smooth)
    if upper is None:
        return weights
    if upper <= r:
        return np.zeros_like(distances)
    return weights - _cutoff(distances, upper, smooth)


@validate_kernel_order
def truncated_transform(mu: DiscreteMeasure, z, r: float, k: int,
                        part: str = FULL, upper: float = None,
                        smooth: bool = True):
    """Truncated transform of mu at z, or the band between r and upper.

    The smooth truncation weighs atoms by Psi(|z - w| / r), the hard one
    keeps atoms with |z - w| > r. A band with upper <= r is 0.

    Parameters
    ----------
    mu : DiscreteMeasure
    z : complex or np.ndarray
        One or many evaluation points.
    r : float
    k : int
    part : str, optional
        "full" or "normal".
    upper : float, optional
        Outer radius of the band.
    smooth : bool, optional
        by default True

    Returns
    -------
    complex, float or np.ndarray

    Raises
    ------
    InvalidBall
    """

    if not r > 0:
        raise InvalidBall("Truncation radius must be positive")

    points = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    differences = points[:, None] - mu.positions[None, :]
    weights = _band_weights(np.abs(differences), r, upper, smooth)

    values = np.sum(
        weights * kernel_values(k, differences, part) * mu.weights[None, :],
        axis=1
    )

    if np.ndim(z) == 0:
        return complex(values[0]) if part == FULL else float(values[0])
    return values


def default_radii(mu: DiscreteMeasure, z=None,
                  per_octave: int = MAXIMAL_SCALES_PER_OCTAVE
                  ) -> np.ndarray:
    """Geometric grid from a quarter of the smallest gap to twice the
    diameter, gaps and diameter measured with z included.
    """

    points = np.unique(mu.positions)
    if z is not None:
        points = np.unique(np.append(points, z))

    if len(points) < 2:
        return np.array([1.0])

    gaps = np.abs(points[:, None] - points[None, :])
    positive = gaps[gaps > 0]
    return geometric_grid(np.min(positive) / 4.0, 2.0 * np.max(gaps),
                          per_octave)


@validate_kernel_order
def maximal_transform(mu: DiscreteMeasure, z: complex, k: int,
                      radii: Sequence[float] = None,
                      part: str = FULL) -> float:
    """Largest |truncated transform| at z over a radius grid.
    """

    if len(mu) == 0:
        logger.warning("Maximal transform of an empty measure")
        return 0.0

    if radii is None:
        radii = default_radii(mu, z)

    return float(max(
        abs(truncated_transform(mu, z, radius, k, part))
        for radius in radii
    ))


def transform_sweep(mu: DiscreteMeasure, points: Sequence[complex],
                    radii: Sequence[float], k: int,
                    upper: float = None, smooth: bool = True
                    ) -> Iterator[Tuple[complex, float, complex]]:
    """Yields (z, r, value) for every point and radius.
    """

    points = np.asarray(points, dtype=np.complex128)
    for radius in radii:
        values = truncated_transform(mu, points, radius, k, FULL, upper,
                                     smooth)
        for point, value in zip(points, values):
            yield complex(point), float(radius), complex(value)


def psi_sandwich(mu: DiscreteMeasure, z: complex, r: float,
                 k: int) -> LemmaCheck:
    """Hard against smooth truncation at one radius.

    They differ only on the annulus r/2 <= |z - w| <= r, so the gap is
    at most its mass times the largest |K_k| there.
    """

    rough = truncated_transform(mu, z, r, k, smooth=False)
    smooth = truncated_transform(mu, z, r, k, smooth=True)

    distances = np.abs(z - mu.positions)
    annulus = (distances >= r / 2) & (distances <= r)

    if np.any(annulus):
        bound = float(np.sum(mu.weights[annulus])) \
            / float(np.min(distances[annulus]))
    else:
        bound = 0.0

    return LemmaCheck("psi-sandwich", True, abs(rough - smooth),
                      bound * (1 + 1e-12) + 1e-15,
                      {"r": r, "k": k})


def _power_iteration(matrix: np.ndarray, iterations: int, rtol: float,
                     rng: np.random.Generator) -> Tuple[float, bool, int]:
    vector = rng.normal(size=matrix.shape[1]) \
        + 1j * rng.normal(size=matrix.shape[1])
    vector /= np.linalg.norm(vector)

    estimate = 0.0
    for step in range(1, iterations + 1):
        image = matrix @ vector
        norm = float(np.linalg.norm(image))
        if norm == 0:
            return 0.0, True, step

        vector = matrix.conj().T @ image
        vector /= np.linalg.norm(vector)

        if abs(norm - estimate) <= rtol * norm:
            return norm, True, step
        estimate = norm

    return estimate, False, iterations


@validate_kernel_order
def operator_norm_estimate(mu: DiscreteMeasure, k: int,
                           radii: Sequence[float] = None,
                           iterations: int = 500, seed: int = 0,
                           rtol: float = POWER_ITERATION_RTOL,
                           strict: bool = False) -> NormEstimate:
    """Spectral norm of the smoothly truncated transform on L2(mu).

    For every radius the matrix Psi(|x_i - x_j| / r) K_k(x_i - x_j)
    sqrt(w_i w_j) is formed and its norm estimated by power iteration
    on M*M. The largest value over the grid is returned, a lower bound
    on the norm of the maximal operator.

    Parameters
    ----------
    mu : DiscreteMeasure
    k : int
    radii : Sequence[float], optional
        by default default_radii(mu)
    iterations : int, optional
    seed : int, optional
        Start vector seed.
    rtol : float, optional
    strict : bool, optional
        Raise NotConverged instead of flagging.

    Returns
    -------
    NormEstimate

    Raises
    ------
    AtomLimitExceeded
    NotConverged
    """

    if len(mu) < 2:
        return NormEstimate(0.0)

    if len(mu) > Config.n_max:
        raise AtomLimitExceeded(
            "{} atoms, N_max is {}".format(len(mu), Config.n_max)
        )

    if radii is None:
        radii = default_radii(mu)

    differences = mu.positions[:, None] - mu.positions[None, :]
    distances = np.abs(differences)
    kernels = kernel_values(k, differences) \
        * np.sqrt(np.outer(mu.weights, mu.weights))

    rng = np.random.default_rng(seed)
    best = NormEstimate(0.0)
    for radius in radii:
        value, converged, steps = _power_iteration(
            psi(distances / radius) * kernels, iterations, rtol, rng
        )

        if not converged:
            logger.warning(
                "Power iteration at r={} stopped after {} steps".format(
                    radius, steps
                )
            )
            if strict:
                raise NotConverged(
                    "Power iteration at r={} did not converge".format(
                        radius
                    )
                )

        if value > best.value:
            best = NormEstimate(value, float(radius), converged, steps)

    return best
