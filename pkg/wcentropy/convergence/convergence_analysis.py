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
Convergence analysis class.
"""

import logging
from typing import List

import numpy as np
from qiskit.providers.options import Options

from wcentropy.base_analysis import BaseAnalysis
from wcentropy.closed_form import Exponential, wce_quadrature, wcre_exponential_gamma
from wcentropy.convergence.report import ConvergenceReport, ConvergenceRow
from wcentropy.exceptions import AnalysisError
from wcentropy.experiment_data import AnalysisResult, ExperimentData

LOG = logging.getLogger(__name__)


class ConvergenceAnalysis(BaseAnalysis):
    r"""Compare empirical estimates of a convergence experiment with the population values.

    Truth values
        - WCRE: :math:`\frac{1}{\lambda} E[\phi(Z)]` with :math:`Z \sim \Gamma(2, 1/\lambda)`,
          in closed form where the weight function family has one.
        - WCE: quadrature of :math:`-\phi F \log F`.

    Statistics per sample size and estimator
        - mean and maximum absolute error over the replications
        - standard deviation of the estimates over the replications

    Quality
        ``computer_good`` if the WCRE mean absolute error strictly decreases along
        the sample sizes, ``computer_bad`` otherwise. The WCE rows are reported as an
        empirical observation and do not enter the quality.
    """

    @classmethod
    def _default_options(cls):
        return Options(truth_method="auto")

    # pylint: disable=arguments-differ
    def _run_analysis(
        self, experiment_data: ExperimentData, truth_method: str = "auto"
    ) -> List[AnalysisResult]:
        """Aggregate the replications into a convergence report.

        Args:
            experiment_data: the experiment data to analyze.
            truth_method: ``"auto"`` or ``"quadrature"``, see
                :func:`~wcentropy.closed_form.wcre_exponential_gamma`.

        Returns:
            A single analysis result whose value is the :class:`ConvergenceReport`.

        Raises:
            AnalysisError: if the experiment data holds no records.
            DivergenceError: if a truth value diverges.
        """
        data = experiment_data.data()
        if not data:
            raise AnalysisError("No convergence records to analyze.")

        experiment = experiment_data.experiment
        wf = experiment.wf
        options = experiment.experiment_options
        rate = options.rate

        truth = {
            "wcre": wcre_exponential_gamma(rate, wf, method=truth_method),
            "wce": wce_quadrature(Exponential(rate), wf),
        }
        LOG.debug("Truth for %s at rate %g: %s", wf, rate, truth)

        sizes = {datum["metadata"]["size_index"]: datum["metadata"]["n"] for datum in data}
        rows = []
        for estimator in ("wcre", "wce"):
            for size_index, n in sorted(sizes.items()):
                estimates = np.array(
                    [
                        datum[estimator]
                        for datum in data
                        if datum["metadata"]["size_index"] == size_index
                    ]
                )
                errors = np.abs(estimates - truth[estimator])
                stddev = float(np.std(estimates, ddof=1)) if estimates.size > 1 else 0.0
                rows.append(
                    ConvergenceRow(
                        estimator=estimator,
                        n=int(n),
                        mean_abs_err=float(np.mean(errors)),
                        max_abs_err=float(np.max(errors)),
                        stddev=stddev,
                        truth=float(truth[estimator]),
                    )
                )

        report = ConvergenceReport(
            wf=wf.spec,
            label=wf.label,
            rate=rate,
            sample_sizes=tuple(int(n) for n in options.sizes),
            replications=int(options.replications),
            seed=int(options.seed),
            p=float(options.p),
            rows=rows,
        )
        report.quality = "computer_good" if report.is_decreasing("wcre") else "computer_bad"
        if report.quality == "computer_bad":
            LOG.warning(
                "WCRE mean absolute error of %s does not decrease along the sizes: %s",
                wf.spec,
                report.mean_abs_errors("wcre"),
            )

        analysis_result = AnalysisResult(
            {
                "value": report,
                "label": "convergence",
                "wf": wf.spec,
                "truth": truth,
                "mean_abs_err": {
                    "wcre": report.mean_abs_errors("wcre").tolist(),
                    "wce": report.mean_abs_errors("wce").tolist(),
                },
                "quality": report.quality,
            }
        )
        return [analysis_result]
