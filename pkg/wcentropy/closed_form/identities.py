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

r"""Numerical checks of identities satisfied by the WCRE.

Kullback-Leibler form, with the unnormalized divergence
:math:`D(g \| h) = \int g \log(g / h)`:

.. math::

    \mathcal{E}^w(X) = -D(\phi \bar F \| \phi)
        = \mathcal{H}(\phi \bar F) + D(\phi \bar F \| \bar F),
    \qquad \mathcal{H}(g) = -\int g \log g.

Equilibrium form, with :math:`f_e = \bar F / E[X]`:

.. math::

    E[X] h^w(X_e) = \mathcal{E}^w(X) + \log E[X] \int \phi \bar F.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

import numpy as np
from scipy import special

from wcentropy.closed_form.functionals import (
    equilibrium_entropy,
    integrate_population,
    log_weighted_survival,
    wcre_quadrature,
    weighted_survival_integral,
)
from wcentropy.closed_form.populations import Population
from wcentropy.exceptions import DivergenceError
from wcentropy.weight_functions import WeightFunction

LOG = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-8


@dataclass
class IdentityReport:
    """Both sides of a numerically checked identity."""

    # Name of the identity
    name: str

    # Population and weight function specifications
    population: str
    wf: str

    # Left and right hand sides, None if an integral diverges
    lhs: Optional[float] = None
    rhs: Optional[float] = None

    tolerance: float = DEFAULT_TOLERANCE

    # True if a component integral diverges
    divergent: bool = False

    # Informational values that are not part of the pass/fail decision
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def abs_discrepancy(self) -> Optional[float]:
        """Return :math:`|lhs - rhs|` or None for divergent integrals."""
        if self.divergent:
            return None
        return abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        """Return True if the sides agree within the tolerance."""
        return not self.divergent and self.abs_discrepancy <= self.tolerance

    @property
    def status(self) -> str:
        """Return ``"pass"``, ``"fail"`` or ``"divergent"``."""
        if self.divergent:
            return "divergent"
        return "pass" if self.passed else "fail"

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON serializable dictionary of the report."""
        return {
            "identity": self.name,
            "population": self.population,
            "wf": self.wf,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_discrepancy": self.abs_discrepancy,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "status": self.status,
            "extras": dict(self.extras),
        }


def _optional_integral(compute: Callable[[], float]) -> Optional[float]:
    try:
        return compute()
    except DivergenceError as ex:
        LOG.debug("Informational integral diverges: %s", ex)
        return None


def check_kl_identity(
    pop: Population, wf: WeightFunction, tolerance: float = DEFAULT_TOLERANCE
) -> IdentityReport:
    r"""Check that the WCRE equals :math:`-D(\phi \bar F \| \phi)`.

    Both sides are integrated independently, the right hand side with the
    generalized divergence integrand :math:`g \log(g / h)`. The report extras hold
    the residual of the second form
    :math:`\mathcal{H}(\phi \bar F) + D(\phi \bar F \| \bar F)` and, for comparison,
    of the variant with :math:`\mathcal{H}(\phi F)` in place of
    :math:`\mathcal{H}(\phi \bar F)`; the latter is None when its integral diverges.
    Neither residual enters the pass/fail decision.

    Args:
        pop: The population.
        wf: The weight function.
        tolerance: The largest accepted absolute discrepancy.

    Returns:
        The identity report. Divergent component integrals are reported with
        ``divergent=True`` rather than raised.
    """
    report = IdentityReport("kl", pop.spec, wf.spec, tolerance=tolerance)

    # g = phi * sf is formed in log space; g log(g / h) vanishes where g does
    def relative(log_h, sign=1.0):
        def integrand(x):
            log_g = log_weighted_survival(pop, wf, x)
            if log_g == -np.inf:
                return 0.0
            return sign * np.exp(log_g) * (log_g - log_h(x))

        return integrand

    neg_divergence = relative(wf.log_evaluate, sign=-1.0)
    entropy_survival = relative(lambda x: 0.0, sign=-1.0)
    divergence_survival = relative(pop.logsf)

    def entropy_cdf(x):
        return special.entr(wf.evaluate(x) * pop.cdf(x))

    try:
        report.lhs = wcre_quadrature(pop, wf)
        report.rhs = integrate_population(pop, neg_divergence)
    except DivergenceError as ex:
        LOG.info("KL identity for %s and %s is divergent: %s", pop.spec, wf.spec, ex)
        report.divergent = True
        return report

    divergence = _optional_integral(lambda: integrate_population(pop, divergence_survival))
    second = _optional_integral(lambda: integrate_population(pop, entropy_survival))
    cdf_entropy = _optional_integral(lambda: integrate_population(pop, entropy_cdf))
    if divergence is not None and second is not None:
        report.extras["second_form"] = second + divergence
        report.extras["second_form_residual"] = abs(report.lhs - second - divergence)
    else:
        report.extras["second_form"] = None
        report.extras["second_form_residual"] = None
    if divergence is not None and cdf_entropy is not None:
        report.extras["cdf_form_residual"] = abs(report.lhs - cdf_entropy - divergence)
    else:
        report.extras["cdf_form_residual"] = None
    return report


def check_equilibrium_identity(
    pop: Population, wf: WeightFunction, tolerance: float = DEFAULT_TOLERANCE
) -> IdentityReport:
    r"""Check :math:`E[X] h^w(X_e) = \mathcal{E}^w(X) + \log E[X] \int \phi \bar F`.

    Args:
        pop: The population.
        wf: The weight function.
        tolerance: The largest accepted absolute discrepancy.

    Returns:
        The identity report. Divergent component integrals are reported with
        ``divergent=True`` rather than raised.
    """
    report = IdentityReport("equilibrium", pop.spec, wf.spec, tolerance=tolerance)
    mean = pop.mean
    try:
        entropy = equilibrium_entropy(pop, wf)
        wcre = wcre_quadrature(pop, wf)
        survival_integral = weighted_survival_integral(pop, wf)
    except DivergenceError as ex:
        LOG.info("Equilibrium identity for %s and %s is divergent: %s", pop.spec, wf.spec, ex)
        report.divergent = True
        return report

    report.lhs = mean * entropy
    report.rhs = wcre + np.log(mean) * survival_integral
    report.extras["equilibrium_entropy"] = entropy
    report.extras["weighted_survival_integral"] = survival_integral
    return report
