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
=======================================
Command Line (:mod:`wcentropy.cli`)
=======================================

.. currentmodule:: wcentropy.cli

The ``wcentropy`` command line tool::

    wcentropy <estimate|curves|convergence|identities> [--input PATH] [--wf SPEC]...
        [--n-min K] [--lambda R]... [--sizes LIST] [--reps K] [--seed U64]
        [--out PATH] [--format csv|json] [--p R]
        [--prefix-order row-major|column-major|sorted] [--workers K] [--tolerance R] [-v]

Exit statuses are 0 on success, 1 for usage and input errors and divergent
integrals, 2 when a weight function violates the integrability condition of the
convergence experiment and 3 when a numerical self-check fails or an estimate
overflows.

.. autosummary::
    :toctree: ../stubs/

    main
    RunConfig
    parse_sample_file
    read_sample_grid
    cmd_estimate
    cmd_curves
    cmd_convergence
    cmd_identities
"""

from .config import RunConfig
from .sample_file import parse_sample_file, read_sample_grid
from .commands import cmd_convergence, cmd_curves, cmd_estimate, cmd_identities
from .main import build_parser, main, parse_config
