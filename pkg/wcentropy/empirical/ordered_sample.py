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

"""Data class for validated order statistics."""

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from wcentropy.exceptions import SampleError


@dataclass(frozen=True)
class OrderedSample:
    """The order statistics :math:`x_{(1)} \\le \\dots \\le x_{(n)}` of a nonnegative sample.

    The values given at construction may be in any order; they are sorted once and
    stored as a read-only array.
    """

    # Sorted, read-only sample values
    values: Union[Sequence[float], np.ndarray]

    def __post_init__(self):
        """Sort the values and check they form a usable sample.

        Raises:
            SampleError: If the sample has fewer than two values or contains a
                negative or non-finite value.
        """
        try:
            values = np.array(self.values, dtype=float).ravel()
        except (TypeError, ValueError) as ex:
            raise SampleError(f"Sample values must be real numbers: {ex}") from ex

        if values.size < 2:
            raise SampleError(
                f"The estimators need at least two sample values, got {values.size}."
            )
        bad = ~np.isfinite(values)
        if np.any(bad):
            index = int(np.flatnonzero(bad)[0])
            raise SampleError(f"Sample value #{index + 1} is not finite: {values[index]}.")
        negative = values < 0
        if np.any(negative):
            index = int(np.flatnonzero(negative)[0])
            raise SampleError(
                f"Sample values must be nonnegative, value #{index + 1} is {values[index]}."
            )

        values.sort(kind="stable")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_sorted(cls, values: np.ndarray) -> "OrderedSample":
        """Wrap values that are already sorted, finite and nonnegative.

        The values are not checked, which saves a sort on the hot paths of the
        convergence experiment where samples are generated sorted.
        """
        values = np.array(values, dtype=float)
        values.setflags(write=False)
        sample = object.__new__(cls)
        object.__setattr__(sample, "values", values)
        return sample

    @property
    def n(self) -> int:
        """Return the sample size."""
        return self.values.size

    @property
    def minimum(self) -> float:
        """Return the smallest order statistic."""
        return float(self.values[0])

    @property
    def maximum(self) -> float:
        """Return the largest order statistic."""
        return float(self.values[-1])

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        return isinstance(other, OrderedSample) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())
