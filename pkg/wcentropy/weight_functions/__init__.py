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
================================================================
Weight Functions (:mod:`wcentropy.weight_functions`)
================================================================

.. currentmodule:: wcentropy.weight_functions

A weight function :math:`\\phi \\ge 0` emphasises regions of the support when
computing weighted cumulative (residual) entropies. Each weight function carries its
exact antiderivative :math:`\\psi(x) = \\int_0^x \\phi(t) dt`, which is the only way
it enters the order-statistics estimators.

Classes
=======
.. autosummary::
    :toctree: ../stubs/

    WeightFunction
    ValidityVerdict


Weight Function Catalog
=======================
.. autosummary::
    :toctree: ../stubs/

    Constant
    Identity
    Polynomial
    Gaussian
    ExponentialTilt


Functions
=========
.. autosummary::
    :toctree: ../stubs/

    check_integrability
    estimate_tail_integrability
    parse_weight_function
"""

from .base_weight_function import WeightFunction
from .library import Constant, ExponentialTilt, Gaussian, Identity, Polynomial
from .integrability import ValidityVerdict, check_integrability, estimate_tail_integrability
from .parsing import parse_weight_function
