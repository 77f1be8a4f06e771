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

"""Estimates along the prefixes of a sample in listed order."""

from dataclasses import astuple, dataclass
from enum import Enum
from typing import List, Sequence

import numpy as np

from wcentropy.empirical.estimators import wce_orderstats, wcre_orderstats
from wcentropy.empirical.ordered_sample import OrderedSample
from wcentropy.exceptions import SampleError
from wcentropy.weight_functions import WeightFunction


@dataclass(frozen=True)
class CurvePoint:
    """Empirical WCRE and WCE of the first ``n`` sample values."""

    n: int
    wcre: float
    wce: float

    def to_row(self) -> tuple:
        """Return the point as an ``(n, wcre, wce)`` row."""
        return astuple(self)


class PrefixOrder(Enum):
    """Reading order of a rectangular sample grid, or the sorted order of its values."""

    ROW_MAJOR = "row-major"
    COLUMN_MAJOR = "column-major"

    # Prefixes are the n smallest values of the whole sample
    SORTED = "sorted"


def column_major(rows: Sequence[Sequence[float]]) -> List[float]:
    """Read a rectangular grid of values column by column.

    Args:
        rows: The rows of the grid, all of the same length.

    Returns:
        The values of the first column top to bottom, then the second column, and so on.

    Raises:
        SampleError: If the rows have different lengths.
    """
    lengths = {len(row) for row in rows}
    if len(lengths) > 1:
        raise SampleError(
            f"Column-major reading needs a rectangular grid, got row lengths {sorted(lengths)}."
        )
    if not rows:
        return []
    return np.asarray(rows, dtype=float).T.ravel().tolist()


def arrange(rows: Sequence[Sequence[float]], order: PrefixOrder) -> List[float]:
    """Flatten a sample grid in the given reading order."""
    order = PrefixOrder(order)
    if order is PrefixOrder.COLUMN_MAJOR:
        return column_major(rows)
    values = [value for row in rows for value in row]
    if order is PrefixOrder.SORTED:
        return sorted(values)
    return values


def prefix_curves(raw: Sequence[float], wf: WeightFunction, n_min: int = 2) -> List[CurvePoint]:
    """Compute the empirical WCRE and WCE of every prefix of a sample.

    For each ``n`` from ``n_min`` to ``len(raw)`` the first ``n`` values of ``raw``
    are sorted and both estimates are computed. The prefixes follow the listed
    order of ``raw``, not the sorted order.

    Args:
        raw: The sample values in listed order.
        wf: The weight function.
        n_min: The smallest prefix length, at least two.

    Returns:
        One curve point per prefix length, in increasing ``n``.

    Raises:
        SampleError: If ``n_min < 2``, ``n_min`` exceeds the sample size, or the
            sample contains a negative or non-finite value.
        NumericalError: If an estimate overflows.
    """
    raw = np.asarray(raw, dtype=float).ravel()
    if n_min < 2:
        raise SampleError(f"Prefix curves start at n_min >= 2, got n_min={n_min}.")
    if n_min > raw.size:
        raise SampleError(
            f"Prefix curves need at least n_min={n_min} values, the sample has {raw.size}."
        )
    # Validates the whole sample once
    OrderedSample(raw)

    points = []
    for n in range(n_min, raw.size + 1):
        sample = OrderedSample.from_sorted(np.sort(raw[:n]))
        points.append(
            CurvePoint(n, wcre_orderstats(sample, wf).value, wce_orderstats(sample, wf).value)
        )
    return points
