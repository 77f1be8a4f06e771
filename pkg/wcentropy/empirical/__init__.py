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
==================================================
Empirical Estimators (:mod:`wcentropy.empirical`)
==================================================

.. currentmodule:: wcentropy.empirical

Empirical WCRE and WCE of a nonnegative sample, computed from its order
statistics.

Data Classes
============
.. autosummary::
    :toctree: ../stubs/

    OrderedSample
    EntropyEstimate
    EntropyKind
    EstimatorMethod
    CurvePoint
    PrefixOrder

Estimators
==========
.. autosummary::
    :toctree: ../stubs/

    wcre_orderstats
    wce_orderstats
    wcre_piecewise
    wce_piecewise

Prefix Curves
=============
.. autosummary::
    :toctree: ../stubs/

    prefix_curves
    column_major
    arrange
"""

from .ordered_sample import OrderedSample
from .estimators import (
    EntropyEstimate,
    EntropyKind,
    EstimatorMethod,
    wce_orderstats,
    wce_piecewise,
    wcre_orderstats,
    wcre_piecewise,
)
from .curves import CurvePoint, PrefixOrder, arrange, column_major, prefix_curves
