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
Base Experiment class.
"""

import copy
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from qiskit.providers.options import Options

from wcentropy.exceptions import EntropyError
from wcentropy.experiment_data import ExperimentData

LOG = logging.getLogger(__name__)


class BaseExperiment(ABC):
    """Base Experiment class

    An experiment generates raw records into an :class:`ExperimentData` container
    and hands them to its analysis class, which turns them into analysis results.

    Class Attributes:

        __analysis_class__: Optional, the default Analysis class to use for
                            data analysis. If None no data analysis will be
                            done on experiment data (Default: None).
        __experiment_data__: ExperimentData class that is produced by the
                             experiment (Default: ExperimentData).
    """

    # Analysis class for experiment
    __analysis_class__ = None

    # ExperimentData class for experiment
    __experiment_data__ = ExperimentData

    def __init__(self, experiment_type: Optional[str] = None):
        """Initialize the experiment object.

        Args:
            experiment_type: Optional, the experiment type string.
        """
        # Experiment identification metadata
        self._type = experiment_type if experiment_type else type(self).__name__

        # Experiment options
        self._experiment_options = self._default_experiment_options()
        self._run_options = self._default_run_options()

    def run(self, **run_options) -> ExperimentData:
        """Run an experiment and perform analysis.

        Args:
            run_options: runtime options used for data generation. Any values set
                         here override the value from :meth:`run_options` for the
                         current run.

        Returns:
            The experiment data object, analyzed if the experiment has an
            analysis class.
        """
        experiment_data = self.__experiment_data__(experiment=self)

        # Run options
        run_opts = copy.copy(self.run_options)
        run_opts.update_options(**run_options)
        LOG.debug("Running %s with %s", self._type, run_opts)

        self._validate()
        experiment_data.add_data(self._generate_data(**run_opts.__dict__))

        if self.__analysis_class__ is not None:
            self.run_analysis(experiment_data)

        return experiment_data

    def run_analysis(self, experiment_data: ExperimentData) -> ExperimentData:
        """Run analysis and update ExperimentData with analysis result.

        Args:
            experiment_data: the experiment data to analyze.

        Returns:
            The updated experiment data containing the analysis results.
        """
        self.analysis().run(experiment_data)
        return experiment_data

    @classmethod
    def analysis(cls):
        """Return the default Analysis class for the experiment."""
        if cls.__analysis_class__ is None:
            raise EntropyError(f"Experiment {cls.__name__} does not have a default Analysis class")
        # pylint: disable = not-callable
        return cls.__analysis_class__()

    def _validate(self):
        """Check the experiment options before any data is generated.

        Subclasses override this method to refuse configurations the experiment
        cannot run with.
        """
        pass

    @abstractmethod
    def _generate_data(self, **run_options) -> List[Dict[str, Any]]:
        """Return the raw records of the experiment.

        Args:
            run_options: The run options of the current run.

        Returns:
            A list of record dictionaries. Each record carries a ``metadata``
            dictionary identifying the experiment point it belongs to.
        """
        # NOTE: Subclasses should override this method using the `options`
        # values for any explicit experiment options that affect data generation

    @classmethod
    def _default_experiment_options(cls) -> Options:
        """Default kwarg options for experiment"""
        # Experiment subclasses should override this method to return
        # an `Options` object containing all the supported options for
        # that experiment and their default values. Only options listed
        # here can be modified later by the different methods for
        # setting options.
        return Options()

    @property
    def experiment_options(self) -> Options:
        """Return the options for the experiment."""
        return self._experiment_options

    def set_experiment_options(self, **fields):
        """Set the experiment options.

        Args:
            fields: The fields to update the options

        Raises:
            AttributeError: If the field passed in is not a supported options
        """
        for field in fields:
            if not hasattr(self._experiment_options, field):
                raise AttributeError(
                    f"Options field {field} is not valid for {type(self).__name__}"
                )
        self._experiment_options.update_options(**fields)

    @classmethod
    def _default_run_options(cls) -> Options:
        """Default options values for the experiment :meth:`run` method."""
        return Options()

    @property
    def run_options(self) -> Options:
        """Return options values for the experiment :meth:`run` method."""
        return self._run_options

    def _metadata(self) -> Dict[str, Any]:
        """Return experiment metadata for ExperimentData."""
        metadata = {"experiment_type": self._type}
        # Add additional metadata if subclasses specify it
        metadata.update(self._additional_metadata())
        return metadata

    def _additional_metadata(self) -> Dict[str, Any]:
        """Add additional subclass experiment metadata.

        Subclasses can override this method if it is necessary to store
        additional experiment metadata in ExperimentData.
        """
        return {}
