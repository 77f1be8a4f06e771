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

r"""Population WCRE, WCE and related integrals by quadrature.

.. math::

    \mathcal{E}^w(X) = -\int_0^\infty \phi(x) \bar F(x) \log \bar F(x) dx,
    \qquad
    \mathcal{CE}^w(X) = -\int_0^\infty \phi(x) F(x) \log F(x) dx

Integrands follow the convention :math:`0 \log 0 = 0`. Products of the weight and
the survival function are formed as :math:`\exp(\log\phi + \log\bar F)`, so a
growing weight times a decaying tail stays finite where either factor alone would
overflow or underflow. The distribution side uses
:math:`-\log F = -\log(1 - \bar F)` through ``log1p``.
"""

from typing import Callable

import numpy as np

from wcentropy.closed_form.populations import Population
from wcentropy.closed_form.quadrature import integrate_half_line
from wcentropy.weight_functions import WeightFunction


def integrate_population(
    pop: Population, integrand: Callable[[float], float], **options
) -> float:
    """Integrate a scalar integrand over the support of a population."""
    return integrate_half_line(integrand, pop.mean, sf=pop.sf, **options)


def log_weighted_survival(pop: Population, wf: WeightFunction, x: float) -> float:
    r"""Return :math:`\log \phi(x) + \log \bar F(x)`, ``-inf`` where either factor vanishes."""
    log_weight = wf.log_evaluate(x)
    log_survival = pop.logsf(x)
    if log_weight == -np.inf or log_survival == -np.inf:
        return -np.inf
    return log_weight + log_survival


def _neg_log_cdf_ratio(survival: float) -> float:
    # -log(1 - s) / s, which tends to 1 as s underflows
    if survival == 0:
        return 1.0
    return -np.log1p(-survival) / survival


def wcre_quadrature(pop: Population, wf: WeightFunction, **options) -> float:
    """Compute the WCRE of a population by adaptive quadrature.

    Args:
        pop: The population.
        wf: The weight function.
        options: Keyword arguments passed to :func:`integrate_half_line`.

    Returns:
        The WCRE.

    Raises:
        DivergenceError: If the integral does not converge.
    """

    def integrand(x):
        log_product = log_weighted_survival(pop, wf, x)
        if log_product == -np.inf:
            return 0.0
        return -np.exp(log_product) * pop.logsf(x)

    return integrate_population(pop, integrand, **options)


def wce_quadrature(pop: Population, wf: WeightFunction, **options) -> float:
    """Compute the WCE of a population by adaptive quadrature.

    Args:
        pop: The population.
        wf: The weight function.
        options: Keyword arguments passed to :func:`integrate_half_line`.

    Returns:
        The WCE.

    Raises:
        DivergenceError: If the integral does not converge.
    """

    def integrand(x):
        log_product = log_weighted_survival(pop, wf, x)
        if log_product == -np.inf:
            return 0.0
        survival = pop.sf(x)
        cdf = 1.0 - survival
        if cdf == 0:
            return 0.0
        return np.exp(log_product) * cdf * _neg_log_cdf_ratio(survival)

    return integrate_population(pop, integrand, **options)


def weighted_survival_integral(pop: Population, wf: WeightFunction, **options) -> float:
    r"""Compute :math:`\int_0^\infty \phi(x) \bar F(x) dx`."""

    def integrand(x):
        return np.exp(log_weighted_survival(pop, wf, x))

    return integrate_population(pop, integrand, **options)


def equilibrium_entropy(pop: Population, wf: WeightFunction, **options) -> float:
    r"""Compute the weighted differential entropy of the equilibrium distribution.

    .. math::

        h^w(X_e) = -\int_0^\infty \phi(x) f_e(x) \log f_e(x) dx,
        \qquad f_e(x) = \bar F(x) / E[X]
    """
    log_mean = np.log(pop.mean)

    def integrand(x):
        log_product = log_weighted_survival(pop, wf, x)
        if log_product == -np.inf:
            return 0.0
        log_density = pop.logsf(x) - log_mean
        return -np.exp(log_product - log_mean) * log_density

    return integrate_population(pop, integrand, **options)
