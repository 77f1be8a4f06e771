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
"""
===================================================
Ground Truth (:mod:`wcentropy.closed_form`)
===================================================

.. currentmodule:: wcentropy.closed_form

Population WCRE and WCE by quadrature, closed forms for exponential populations
and numerical checks of the identities relating the WCRE to divergences and to the
equilibrium distribution.

Populations
===========
.. autosummary::
    :toctree: ../stubs/

    Population
    Exponential

Functionals
===========
.. autosummary::
    :toctree: ../stubs/

    integrate_half_line
    wcre_quadrature
    wce_quadrature
    wcre_exponential_gamma
    gamma_quadrature
    polynomial_gamma_moment

Identities
==========
.. autosummary::
    :toctree: ../stubs/

    IdentityReport
    check_kl_identity
    check_equilibrium_identity
"""

from .populations import Exponential, Population
from .quadrature import integrate_half_line
from .functionals import (
    equilibrium_entropy,
    integrate_population,
    wce_quadrature,
    wcre_quadrature,
    weighted_survival_integral,
)
from .exponential import gamma_quadrature, polynomial_gamma_moment, wcre_exponential_gamma
from .identities import IdentityReport, check_equilibrium_identity, check_kl_identity
