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
Monte Carlo convergence experiment for the empirical WCRE and WCE.
"""

import logging
from multiprocessing import Pool
from typing import Any, Dict, List, Tuple, Union

import numpy as np
from qiskit.providers.options import Options

from wcentropy.base_experiment import BaseExperiment
from wcentropy.convergence.convergence_analysis import ConvergenceAnalysis
from wcentropy.convergence.sampling import replication_seed, sample_exponential
from wcentropy.empirical import wce_orderstats, wcre_orderstats
from wcentropy.exceptions import DomainError, IntegrabilityError, SampleError
from wcentropy.weight_functions import WeightFunction, check_integrability, parse_weight_function

LOG = logging.getLogger(__name__)


def _replicate(task: Tuple[WeightFunction, float, int, int, int, int]) -> Dict[str, Any]:
    """Draw one sample and estimate both entropies."""
    wf, rate, n, seed, size_index, replication = task
    sample = sample_exponential(rate, n, replication_seed(seed, size_index, replication))
    return {
        "wcre": wcre_orderstats(sample, wf).value,
        "wce": wce_orderstats(sample, wf).value,
        "metadata": {"n": n, "size_index": size_index, "replication": replication},
    }


class ConvergenceExperiment(BaseExperiment):
    r"""Monte Carlo convergence experiment on exponential populations.

    Overview
        For each sample size ``n`` in ``sizes`` and each replication, ``n`` values
        are drawn from :math:`{\rm Exp}(\lambda)` and the empirical WCRE and WCE are
        computed. The analysis compares them with the population values.

        The empirical WCRE converges almost surely to the WCRE when the weight
        function satisfies, for some :math:`p > 1` and :math:`0 < a < \infty`,

        .. math::

            \int_0^a \phi(x) dx < \infty, \qquad \int_a^\infty \phi(x) x^{-p} dx < \infty.

        The experiment refuses to run weight functions violating this condition.

    Analysis Class
        :class:`~wcentropy.convergence.ConvergenceAnalysis`

    Experiment Options
        - **rate** (``float``): Rate :math:`\lambda` of the population (Default: 0.5).
        - **sizes** (``Tuple[int]``): Nondecreasing sample sizes, each at least 2.
        - **replications** (``int``): Number of samples drawn per size (Default: 20).
        - **seed** (``int``): Root seed of the random streams (Default: 0).
        - **p** (``float``): Moment exponent of the integrability condition (Default: 2).
        - **a** (``float``): Split point of the integrability condition (Default: 1).

    Run Options
        - **max_workers** (``int``): Number of worker processes (Default: 1).
          Replication ``r`` at the ``k``-th sample size draws from the seed sequence
          ``SeedSequence(seed, spawn_key=(k, r))``, so the records do not depend
          on the number of workers.
    """

    __analysis_class__ = ConvergenceAnalysis

    @classmethod
    def _default_experiment_options(cls) -> Options:
        return Options(
            rate=0.5,
            sizes=(100, 1000, 10000, 100000),
            replications=20,
            seed=0,
            p=2.0,
            a=1.0,
        )

    @classmethod
    def _default_run_options(cls) -> Options:
        return Options(max_workers=1)

    def __init__(self, wf: Union[WeightFunction, str], rate: float = 0.5):
        """Initialize the convergence experiment.

        Args:
            wf: The weight function or its specification string.
            rate: The rate of the exponential population.
        """
        super().__init__(experiment_type="convergence")
        self._wf = parse_weight_function(wf)
        self.set_experiment_options(rate=rate)

    @property
    def wf(self) -> WeightFunction:
        """Return the weight function of the experiment."""
        return self._wf

    def _validate(self):
        """Check the options and the integrability condition.

        Raises:
            DomainError: If the rate is not positive.
            SampleError: If the sizes, replications or seed are invalid.
            IntegrabilityError: If the weight function violates the integrability
                condition for the configured ``p`` and ``a``.
        """
        options = self.experiment_options
        if not np.isfinite(options.rate) or options.rate <= 0:
            raise DomainError(f"The exponential rate must be positive, got {options.rate}.")
        sizes = list(options.sizes)
        if not sizes or any(int(n) != n or n < 2 for n in sizes):
            raise SampleError(f"Sample sizes must be integers of at least 2, got {sizes}.")
        if any(later < earlier for earlier, later in zip(sizes, sizes[1:])):
            raise SampleError(f"Sample sizes must be nondecreasing, got {sizes}.")
        if int(options.replications) != options.replications or options.replications < 1:
            raise SampleError(f"At least one replication is needed, got {options.replications}.")
        if int(options.seed) != options.seed or options.seed < 0:
            raise SampleError(f"The seed must be a nonnegative integer, got {options.seed}.")

        verdict = check_integrability(self._wf, options.p, options.a)
        if not verdict:
            raise IntegrabilityError(
                f"Refusing to run {self._wf.spec}: the integrability condition fails ({verdict})."
            )
        LOG.debug("Integrability of %s: %s", self._wf.spec, verdict)

    def _tasks(self) -> List[Tuple[WeightFunction, float, int, int, int, int]]:
        options = self.experiment_options
        return [
            (self._wf, float(options.rate), int(n), int(options.seed), size_index, replication)
            for size_index, n in enumerate(options.sizes)
            for replication in range(int(options.replications))
        ]

    def _generate_data(self, max_workers: int = 1) -> List[Dict[str, Any]]:
        tasks = self._tasks()
        if max_workers and max_workers > 1:
            LOG.info("Running %d replications on %d workers.", len(tasks), max_workers)
            with Pool(processes=max_workers) as pool:
                return pool.map(_replicate, tasks)

        records = []
        for size_index, n in enumerate(self.experiment_options.sizes):
            size_tasks = [task for task in tasks if task[4] == size_index]
            records.extend(_replicate(task) for task in size_tasks)
            LOG.info("Finished %d replications at n=%d.", len(size_tasks), n)
        return records

    def _additional_metadata(self) -> Dict[str, Any]:
        return {"wf": self._wf.spec, "label": self._wf.label}
