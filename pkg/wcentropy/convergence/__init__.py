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
========================================================
Convergence Experiments (:mod:`wcentropy.convergence`)
========================================================

.. currentmodule:: wcentropy.convergence

Monte Carlo experiments measuring how fast the empirical WCRE and WCE of
exponential samples approach the population values.

Experiments
===========
.. autosummary::
    :toctree: ../stubs/

    ConvergenceExperiment

Analysis
========
.. autosummary::
    :toctree: ../stubs/

    ConvergenceAnalysis
    ConvergenceReport
    ConvergenceRow

Functions
=========
.. autosummary::
    :toctree: ../stubs/

    run_convergence
    sample_exponential
    replication_seed
"""

from .sampling import replication_seed, sample_exponential
from .report import ConvergenceReport, ConvergenceRow
from .convergence_analysis import ConvergenceAnalysis
from .convergence_experiment import ConvergenceExperiment
from .runner import run_convergence
