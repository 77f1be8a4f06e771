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
Base analysis class.
"""

import logging
from abc import ABC, abstractmethod
from typing import List

from qiskit.providers.options import Options

from wcentropy.exceptions import AnalysisError, EntropyError
from wcentropy.experiment_data import AnalysisResult, ExperimentData

LOG = logging.getLogger(__name__)


class BaseAnalysis(ABC):
    """Base Analysis class for analyzing Experiment data.

    The records produced by experiments (i.e. subclasses of BaseExperiment)
    are analyzed with subclasses of BaseAnalysis, typically right after the
    experiment has generated them.

    When designing Analysis subclasses default values for any kwarg
    analysis options of the `run` method should be set by overriding
    the `_default_options` class method. When calling `run` these
    default values will be combined with all other option kwargs in the
    run method and passed to the `_run_analysis` function.
    """

    # Expected experiment data container for analysis
    __experiment_data__ = ExperimentData

    @classmethod
    def _default_options(cls) -> Options:
        return Options()

    def run(self, experiment_data: ExperimentData, **options) -> List[AnalysisResult]:
        """Run analysis and save the analysis results to the ExperimentData.

        Args:
            experiment_data: the experiment data to analyze.
            options: additional analysis options. See class documentation for
                     supported options.

        Returns:
            The analysis results. A failed analysis yields a single result with
            ``success=False`` and the error message.

        Raises:
            EntropyError: if experiment_data container is not valid for analysis.
        """
        if not isinstance(experiment_data, self.__experiment_data__):
            raise EntropyError(
                f"Invalid experiment data type, expected {self.__experiment_data__.__name__}"
                f" but received {type(experiment_data).__name__}"
            )
        # Get analysis options
        analysis_options = self._default_options()
        analysis_options.update_options(**options)
        analysis_options = analysis_options.__dict__

        # Run analysis
        try:
            analysis_results = self._run_analysis(experiment_data, **analysis_options)
            for res in analysis_results:
                if "success" not in res:
                    res["success"] = True
        except AnalysisError as ex:
            LOG.error("Analysis of %s failed: %s", experiment_data.experiment_type, ex)
            analysis_results = [AnalysisResult(success=False, error_message=ex)]

        for res in analysis_results:
            experiment_data.add_analysis_result(res)
        return analysis_results

    @abstractmethod
    def _run_analysis(self, experiment_data: ExperimentData, **options) -> List[AnalysisResult]:
        """Run analysis on experiment records.

        Args:
            experiment_data: the experiment data to analyze.
            options: additional options for analysis. By default the fields and
                     values in :meth:`options` are used and any provided values
                     can override these.

        Returns:
            A list of AnalysisResult objects.

        Raises:
            AnalysisError: if the analysis fails.
        """
        pass
