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

"""Data class for command line run configurations."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

import numpy as np

from wcentropy.data import EXAMPLE1_PATH
from wcentropy.empirical import PrefixOrder
from wcentropy.exceptions import UsageError
from wcentropy.weight_functions import WeightFunction, parse_weight_function

COMMANDS = ("estimate", "curves", "convergence", "identities")
FORMATS = ("csv", "json")

DEFAULT_WF = "constant:1"
DEFAULT_RATE = 0.5
DEFAULT_SIZES = (100, 1000, 10000, 100000)
IDENTITY_WFS = ("constant:1", "gaussian:1", "exptilt:-0.5")
IDENTITY_RATES = (0.25, 0.5, 1.0, 2.0, 5.0)


@dataclass
class RunConfig:
    """Configuration of one command line run."""

    # One of COMMANDS
    command: str

    # Sample file, the bundled 50-value dataset if None
    input_path: Optional[str] = None

    # Weight function specifications, a command specific default if empty
    wf_specs: List[str] = field(default_factory=list)

    # Smallest prefix length of the curves command
    n_min: int = 2

    # Population rates of the convergence and identities commands
    rates: List[float] = field(default_factory=list)

    sizes: Union[str, Sequence[int]] = DEFAULT_SIZES
    reps: int = 20
    seed: int = 0

    # Output file, standard output if None
    output_path: Optional[str] = None

    format: str = "csv"

    # Moment exponent and split point of the integrability condition
    p: float = 2.0
    a: float = 1.0

    prefix_order: str = PrefixOrder.ROW_MAJOR.value

    # Worker processes of the convergence command
    max_workers: int = 1

    # Absolute tolerance of the identities command
    tolerance: float = 1e-8

    def __post_init__(self):
        """Fill in command specific defaults and check the values.

        Raises:
            UsageError: If a value is invalid.
            WeightFunctionError: If a weight function specification cannot be parsed.
        """
        if self.command not in COMMANDS:
            raise UsageError(f"Unknown command '{self.command}', expected one of {COMMANDS}.")
        if self.format not in FORMATS:
            raise UsageError(f"Unknown format '{self.format}', expected one of {FORMATS}.")
        try:
            self.prefix_order = PrefixOrder(self.prefix_order).value
        except ValueError as ex:
            raise UsageError(f"Unknown prefix order '{self.prefix_order}'.") from ex

        if not self.wf_specs:
            self.wf_specs = list(IDENTITY_WFS if self.command == "identities" else [DEFAULT_WF])
        self.wf_specs = [parse_weight_function(spec).spec for spec in self.wf_specs]

        if not self.rates:
            self.rates = list(IDENTITY_RATES if self.command == "identities" else [DEFAULT_RATE])
        self.rates = [float(rate) for rate in self.rates]
        if any(not np.isfinite(rate) or rate <= 0 for rate in self.rates):
            raise UsageError(f"Rates must be positive, got {self.rates}.")

        if isinstance(self.sizes, str):
            self.sizes = self._parse_sizes(self.sizes)
        self.sizes = tuple(int(n) for n in self.sizes)
        if not self.sizes or min(self.sizes) < 2:
            raise UsageError(f"Sample sizes must be at least 2, got {self.sizes}.")
        if any(later < earlier for earlier, later in zip(self.sizes, self.sizes[1:])):
            raise UsageError(f"Sample sizes must be nondecreasing, got {self.sizes}.")

        if self.n_min < 2:
            raise UsageError(f"--n-min must be at least 2, got {self.n_min}.")
        if self.reps < 1:
            raise UsageError(f"--reps must be at least 1, got {self.reps}.")
        if self.seed < 0:
            raise UsageError(f"--seed must be nonnegative, got {self.seed}.")
        if not 1 < self.p < np.inf:
            raise UsageError(f"--p must be a finite number larger than 1, got {self.p}.")
        if not 0 < self.a < np.inf:
            raise UsageError(f"The split point must be positive and finite, got {self.a}.")
        if self.max_workers < 1:
            raise UsageError(f"--workers must be at least 1, got {self.max_workers}.")

    @staticmethod
    def _parse_sizes(text: str) -> List[int]:
        sizes = []
        for token in text.replace(",", " ").split():
            try:
                value = float(token)
            except ValueError as ex:
                raise UsageError(f"Sample size '{token}' is not a number.") from ex
            if value != int(value):
                raise UsageError(f"Sample size '{token}' is not an integer.")
            sizes.append(int(value))
        return sizes

    @property
    def source(self) -> str:
        """Return the sample file to read."""
        return self.input_path or EXAMPLE1_PATH

    @property
    def wf_spec(self) -> str:
        """Return the first weight function specification."""
        return self.wf_specs[0]

    @property
    def weight_functions(self) -> List[WeightFunction]:
        """Return the parsed weight functions."""
        return [parse_weight_function(spec) for spec in self.wf_specs]
