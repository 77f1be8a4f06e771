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

"""Functional entry point to the convergence experiment."""

from typing import Sequence, Union

from wcentropy.convergence.convergence_experiment import ConvergenceExperiment
from wcentropy.convergence.report import ConvergenceReport
from wcentropy.exceptions import AnalysisError
from wcentropy.weight_functions import WeightFunction


def run_convergence(
    rate: float,
    wf: Union[WeightFunction, str],
    sizes: Sequence[int] = (100, 1000, 10000, 100000),
    reps: int = 20,
    seed: int = 0,
    p: float = 2.0,
    a: float = 1.0,
    max_workers: int = 1,
) -> ConvergenceReport:
    """Run a convergence experiment and return its report.

    Args:
        rate: The rate of the exponential population.
        wf: The weight function or its specification string.
        sizes: The nondecreasing sample sizes.
        reps: The number of replications per size.
        seed: The root seed.
        p: The moment exponent of the integrability condition.
        a: The split point of the integrability condition.
        max_workers: The number of worker processes.

    Returns:
        The convergence report. It is identical for identical arguments, whatever
        the number of workers.

    Raises:
        IntegrabilityError: If the weight function violates the integrability condition.
        DivergenceError: If a truth value diverges.
        AnalysisError: If the analysis fails.
    """
    experiment = ConvergenceExperiment(wf, rate=rate)
    experiment.set_experiment_options(sizes=tuple(sizes), replications=reps, seed=seed, p=p, a=a)
    experiment_data = experiment.run(max_workers=max_workers)
    result = experiment_data.analysis_result(-1)
    if not result["success"]:
        raise AnalysisError(f"Convergence analysis failed: {result['error_message']}")
    return result["value"]
