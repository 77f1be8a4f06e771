# This code is part of wcentropy.
#
# (C) Copyright the wcentropy developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Adaptive quadrature over the half line."""

import logging
import math
import warnings
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from wcentropy.exceptions import DivergenceError

LOG = logging.getLogger(__name__)


def _quad(func: Callable[[float], float], lower: float, upper: float, abs_tol: float) -> float:
    with warnings.catch_warnings(record=True) as caught, np.errstate(all="ignore"):
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, error = integrate.quad(
            func, lower, upper, epsabs=abs_tol * 1e-4, epsrel=1e-12, limit=200
        )
    for warning in caught:
        LOG.debug(
            "quad on [%g, %g] (estimated error %.3g): %s", lower, upper, error, warning.message
        )
    return value


def integrate_half_line(
    func: Callable[[float], float],
    scale: float,
    sf: Optional[Callable[[float], float]] = None,
    abs_tol: float = 1e-10,
    tail_threshold: float = 1e-16,
    quiet_intervals: int = 2,
    max_doublings: int = 64,
) -> float:
    r"""Integrate ``func`` over :math:`[0, \infty)`.

    The integral is accumulated over :math:`[0, T_0]` and then over the doubling
    intervals :math:`[T_0 2^k, T_0 2^{k+1}]`. The truncation stops once the
    survival function ``sf`` of the underlying population has dropped below
    ``tail_threshold`` and ``quiet_intervals`` consecutive intervals each contributed
    no more than ``abs_tol``.

    Args:
        func: The scalar integrand.
        scale: The first truncation point :math:`T_0`, typically the mean of the
            population.
        sf: Optional survival function of the population the integrand refers to.
        abs_tol: The absolute tolerance of the result.
        tail_threshold: Survival probability below which the tail may be truncated.
        quiet_intervals: Number of consecutive negligible intervals needed to stop.
        max_doublings: Number of doublings after which the integral is declared divergent.

    Returns:
        The value of the integral.

    Raises:
        DivergenceError: If a contribution is not finite or the truncation does not
            stabilise within ``max_doublings`` doublings.
    """
    if not np.isfinite(scale) or scale <= 0:
        raise DivergenceError(f"The truncation scale must be positive and finite, got {scale}.")

    pieces = [_quad(func, 0.0, scale, abs_tol)]
    if not math.isfinite(pieces[0]):
        raise DivergenceError(f"Integral over [0, {scale:g}] is not finite.")

    quiet = 0
    lower = scale
    for doubling in range(max_doublings):
        # An integrand cut to zero by an underflowed survival function has not decayed
        with np.errstate(all="ignore"):
            cut = sf is not None and sf(lower) == 0 and func(lower) == 0
        if cut and abs(pieces[-1]) > abs_tol:
            raise DivergenceError(
                f"Integrand has not decayed at x={lower:g} where the survival function "
                f"underflows (last contribution {pieces[-1]:.6g})."
            )
        upper = 2 * lower
        piece = _quad(func, lower, upper, abs_tol)
        if not math.isfinite(piece):
            raise DivergenceError(f"Integral over [{lower:g}, {upper:g}] is not finite.")
        pieces.append(piece)
        LOG.debug("Doubling %d: [%g, %g] contributes %.6g", doubling, lower, upper, piece)

        quiet = quiet + 1 if abs(piece) <= abs_tol else 0
        tail_done = sf is None or sf(upper) <= tail_threshold
        if tail_done and quiet >= quiet_intervals:
            return math.fsum(pieces)
        lower = upper

    raise DivergenceError(
        f"Integral did not stabilise after {max_doublings} doublings of the truncation point "
        f"(last contribution {pieces[-1]:.6g} over [{lower / 2:g}, {lower:g}])."
    )
