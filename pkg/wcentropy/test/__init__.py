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

"""Reference oracles for testing and documentation."""

from .trapezoid_oracle import (
    population_wce_trapezoid,
    population_wcre_trapezoid,
    sample_wce_trapezoid,
    sample_wcre_trapezoid,
)
