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
Experiment Data class
"""
import logging
from typing import Dict, List, Optional, Union

from wcentropy.exceptions import EntropyError

LOG = logging.getLogger(__name__)


class AnalysisResult(dict):
    """Dictionary of analysis outputs."""


class ExperimentData:
    """Container for the raw records of an experiment and their analysis results."""

    def __init__(self, experiment=None):
        """Initialize experiment data.

        Args:
            experiment (BaseExperiment): Optional, experiment object that generated the data.
        """
        self._experiment = experiment
        self._metadata = experiment._metadata() if experiment else {}
        self._type = experiment._type if experiment is not None else None
        self._data = []
        self._analysis_results = []

    @property
    def experiment(self):
        """Return Experiment object.

        Returns:
            BaseExperiment: the experiment object.
        """
        return self._experiment

    @property
    def experiment_type(self) -> str:
        """Return the experiment type."""
        return self._type

    def metadata(self) -> Dict:
        """Return experiment metadata."""
        return self._metadata

    def add_data(self, data: Union[Dict, List[Dict]]):
        """Add experiment data.

        Args:
            data: A record dictionary or a list of record dictionaries.

        Raises:
            EntropyError: if data format is invalid.
        """
        if isinstance(data, dict):
            self._data.append(data)
        elif isinstance(data, list):
            for dat in data:
                self.add_data(dat)
        else:
            raise EntropyError(f"Invalid data type {type(data)}.")

    def data(self, index: Optional[Union[int, slice]] = None) -> Union[Dict, List[Dict]]:
        """Return the experiment data at the specified index.

        Args:
            index: Index of the data to be returned. None returns all records.

        Returns:
            Experiment data.

        Raises:
            EntropyError: if index is invalid.
        """
        if index is None:
            return self._data
        if isinstance(index, (int, slice)):
            return self._data[index]
        raise EntropyError(f"Invalid index type {type(index)}.")

    def add_analysis_result(self, result: AnalysisResult) -> None:
        """Save the analysis result.

        Args:
            result: Analysis result to be saved.
        """
        self._analysis_results.append(result)

    def analysis_result(
        self, index: Optional[Union[int, slice]]
    ) -> Union[AnalysisResult, List[AnalysisResult]]:
        """Return analysis results associated with this experiment.

        Args:
            index: Index of the analysis result to be returned. None returns all results.

        Returns:
            Analysis results for this experiment.

        Raises:
            EntropyError: if index is invalid.
        """
        if index is None:
            return self._analysis_results
        if isinstance(index, (int, slice)):
            return self._analysis_results[index]
        raise EntropyError(f"Invalid index type {type(index)}.")

    def status(self) -> str:
        """Return the data processing status."""
        if not self._data:
            return "EMPTY"
        if not self._analysis_results:
            return "DATA"
        return "DONE"
