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

r"""Closed forms of the WCRE of exponential populations.

For :math:`X \sim {\rm Exp}(\lambda)` the survival function is :math:`e^{-\lambda x}`
and :math:`-\bar F \log \bar F = \lambda x e^{-\lambda x}`, hence

.. math::

    \mathcal{E}^w(X) = \frac{1}{\lambda} E[\phi(Z)], \qquad
    Z \sim \Gamma(2, 1/\lambda).

The expectation has a closed form for every weight function of the catalog.
"""

import logging
import math

import numpy as np
from scipy import special, stats

from wcentropy.closed_form.quadrature import integrate_half_line
from wcentropy.exceptions import DivergenceError, DomainError, EntropyError
from wcentropy.weight_functions import ExponentialTilt, Gaussian, Polynomial, WeightFunction

LOG = logging.getLogger(__name__)

METHODS = ("auto", "quadrature")


def _check_rate(rate: float) -> float:
    rate = float(rate)
    if not np.isfinite(rate) or rate <= 0:
        raise DomainError(f"The exponential rate must be positive and finite, got {rate}.")
    return rate


def _factorial_over_power(k: int, rate: float) -> float:
    """Return :math:`k! / \\lambda^k`."""
    if k <= 21:
        return math.factorial(k) / rate**k
    return float(np.prod(np.arange(1, k + 1) / rate))


def polynomial_gamma_moment(rate: float, wf: Polynomial) -> float:
    r"""Return :math:`\sum_i a_i (i + 1)! / \lambda^{i + 1}` for a polynomial weight."""
    rate = _check_rate(rate)
    return math.fsum(
        a * _factorial_over_power(i + 1, rate) for i, a in enumerate(wf.coefficients) if a
    )


def _closed_form(rate: float, wf: WeightFunction):
    if isinstance(wf, Polynomial):
        return polynomial_gamma_moment(rate, wf)
    if isinstance(wf, ExponentialTilt):
        if wf.t >= rate:
            raise DivergenceError(
                f"E[exp(t Z)] diverges for Z ~ Gamma(2, 1/{rate:g}) since t={wf.t:g} >= {rate:g}."
            )
        return rate / (rate - wf.t) ** 2
    if isinstance(wf, Gaussian):
        scaled = rate * wf.sigma
        return (
            rate
            * wf.sigma**2
            * (1.0 - scaled * np.sqrt(np.pi / 2) * special.erfcx(scaled / np.sqrt(2)))
        )
    return None


def gamma_quadrature(rate: float, wf: WeightFunction, **options) -> float:
    r"""Evaluate :math:`E[\phi(Z)] / \lambda` by quadrature of the Gamma density."""
    rate = _check_rate(rate)
    gamma = stats.gamma(2, scale=1.0 / rate)

    def integrand(z):
        if z == 0:
            return 0.0
        return np.exp(wf.log_evaluate(z) + np.log(rate * z) - rate * z)

    return integrate_half_line(integrand, 2.0 / rate, sf=gamma.sf, **options)


def wcre_exponential_gamma(
    rate: float, wf: WeightFunction, method: str = "auto", **options
) -> float:
    """Compute the WCRE of an exponential population from its Gamma moment representation.

    Args:
        rate: The rate :math:`\\lambda > 0` of the population.
        wf: The weight function.
        method: ``"auto"`` uses the closed form of the weight function family and
            falls back to quadrature for other weight functions, ``"quadrature"``
            always integrates numerically.
        options: Keyword arguments passed to :func:`integrate_half_line` when
            integrating numerically.

    Returns:
        The WCRE of :math:`{\\rm Exp}(\\lambda)`.

    Raises:
        DomainError: If the rate is not positive.
        DivergenceError: If the Gamma moment diverges.
        EntropyError: If the method is unknown.
    """
    rate = _check_rate(rate)
    if method not in METHODS:
        raise EntropyError(f"Unknown method '{method}', expected one of {METHODS}.")
    if method == "auto":
        value = _closed_form(rate, wf)
        if value is not None:
            return float(value)
        LOG.debug("No closed form for %s, integrating the Gamma moment.", wf)
    return gamma_quadrature(rate, wf, **options)
