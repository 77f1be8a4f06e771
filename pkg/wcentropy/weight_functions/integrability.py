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

r"""Integrability condition for the almost sure convergence of the empirical WCRE.

For :math:`X \in L^p` with :math:`p > 1` the empirical WCRE converges to the WCRE
whenever, for some :math:`0 < a < \infty`,

.. math::

    \int_0^a \phi(x) dx < \infty \quad {\rm and} \quad
    \int_a^\infty \phi(x) x^{-p} dx < \infty.
"""

import logging
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from wcentropy.exceptions import IntegrabilityError
from wcentropy.weight_functions.base_weight_function import WeightFunction

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValidityVerdict:
    """Outcome of an integrability check."""

    # True if both integrals of the condition are finite
    valid: bool

    # Human readable explanation
    reason: str

    # Moment exponent and split point the verdict was computed for
    p: float = 2.0
    a: float = 1.0

    # "analytic" or "numerical"
    method: str = "analytic"

    def __bool__(self):
        return self.valid

    def __str__(self):
        status = "Valid" if self.valid else "Invalid"
        return f"{status} (p={self.p:g}, a={self.a:g}, {self.method}): {self.reason}"


def _check_gate_arguments(p: float, a: float):
    if not np.isfinite(p) or p <= 1:
        raise IntegrabilityError(f"The moment exponent must satisfy p > 1, got p={p}.")
    if not np.isfinite(a) or a <= 0:
        raise IntegrabilityError(f"The split point must satisfy 0 < a < inf, got a={a}.")


def check_integrability(wf: WeightFunction, p: float = 2.0, a: float = 1.0) -> ValidityVerdict:
    r"""Decide whether ``wf`` satisfies the integrability condition for exponent ``p``.

    The decision is analytic for the catalog families: polynomial weights of degree
    :math:`d` (including constant and identity weights) are valid iff :math:`p > d + 1`,
    Gaussian weights are always valid and exponential tilts are valid iff
    :math:`t \le 0`. Weight functions without an analytic rule are classified with
    :func:`estimate_tail_integrability`.

    Args:
        wf: The weight function.
        p: The moment exponent, :math:`p > 1`.
        a: The split point, :math:`0 < a < \infty`.

    Returns:
        The verdict with a reason string.

    Raises:
        IntegrabilityError: If ``p <= 1`` or ``a`` is not a positive finite number.
    """
    _check_gate_arguments(p, a)

    head = wf.antiderivative(a)
    if not np.isfinite(head):
        return ValidityVerdict(False, f"integral of the weight over [0, {a:g}] is infinite", p, a)

    rule = wf._tail_integrable(p)  # pylint: disable=protected-access
    if rule is None:
        LOG.debug("No analytic integrability rule for %s, estimating numerically.", wf)
        return estimate_tail_integrability(wf, p, a)

    valid, reason = rule
    return ValidityVerdict(valid, reason, p, a)


def estimate_tail_integrability(
    wf: WeightFunction,
    p: float = 2.0,
    a: float = 1.0,
    doublings: int = 40,
    ratio_threshold: float = 0.99,
) -> ValidityVerdict:
    r"""Classify :math:`\int_a^\infty \phi(x) x^{-p} dx` as finite or divergent numerically.

    The tail integral is split over the doubling intervals :math:`[a 2^k, a 2^{k+1}]`.
    Its contributions shrink geometrically when the integral is finite and stay level
    or grow when it diverges. The integral is classified as finite if the last
    contribution vanishes or is smaller than ``ratio_threshold`` times the one before.

    Args:
        wf: The weight function.
        p: The moment exponent, :math:`p > 1`.
        a: The split point, :math:`0 < a < \infty`.
        doublings: Number of doubling intervals to integrate.
        ratio_threshold: Largest ratio of successive contributions still considered
            a geometric decay. Exponents within a few percent of the boundary
            :math:`p = d + 1` cannot be told apart from divergence.

    Returns:
        The numerical verdict.

    Raises:
        IntegrabilityError: If ``p <= 1`` or ``a`` is not a positive finite number.
    """
    _check_gate_arguments(p, a)

    def integrand(x):
        return wf.evaluate(x) * x ** (-p)

    contributions = []
    lower = a
    with np.errstate(over="ignore", invalid="ignore"), warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        head, _ = integrate.quad(wf.evaluate, 0.0, a, limit=200)
        if not np.isfinite(head):
            return ValidityVerdict(
                False, f"integral of the weight over [0, {a:g}] is infinite", p, a, "numerical"
            )
        for _ in range(doublings):
            upper = 2 * lower
            piece, _ = integrate.quad(integrand, lower, upper, limit=200)
            if not np.isfinite(piece):
                return ValidityVerdict(
                    False,
                    f"tail integrand overflows on [{lower:g}, {upper:g}]",
                    p,
                    a,
                    "numerical",
                )
            contributions.append(piece)
            lower = upper

    last, previous = contributions[-1], contributions[-2]
    if last == 0.0:
        return ValidityVerdict(
            True, f"tail contributions vanish beyond x={lower:g}", p, a, "numerical"
        )
    ratio = last / previous if previous > 0 else np.inf
    if ratio < ratio_threshold:
        return ValidityVerdict(
            True,
            f"tail contributions decay geometrically (ratio {ratio:.4g})",
            p,
            a,
            "numerical",
        )
    return ValidityVerdict(
        False,
        f"tail contributions do not decay (ratio {ratio:.4g})",
        p,
        a,
        "numerical",
    )
