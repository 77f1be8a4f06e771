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

"""Datasets bundled with wcentropy."""

import os

DATA_DIR = os.path.dirname(os.path.abspath(__file__))

# Fifty exponential lifetimes with mean 2, laid out as five rows of ten values
EXAMPLE1_PATH = os.path.join(DATA_DIR, "example1.csv")
