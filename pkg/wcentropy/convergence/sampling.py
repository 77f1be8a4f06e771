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

"""Seeded sampling of exponential populations."""

from typing import Optional, Union

import numpy as np

from wcentropy.empirical import OrderedSample
from wcentropy.exceptions import DomainError, SampleError

SeedLike = Union[None, int, np.random.SeedSequence, np.random.Generator]


def replication_seed(seed: int, size_index: int, replication: int) -> np.random.SeedSequence:
    """Return the seed sequence of one replication at one sample size.

    The sequences are derived from ``seed`` through the spawn key
    ``(size_index, replication)``, so each stream only depends on its own indices.
    """
    return np.random.SeedSequence(seed, spawn_key=(size_index, replication))


def _generator(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def sample_exponential(rate: float, n: int, seed: Optional[SeedLike] = None) -> OrderedSample:
    """Draw an exponential sample by inversion of the distribution function.

    Uniform variates :math:`U` from a PCG64 generator are mapped to
    :math:`-\\log(1 - U) / \\lambda`.

    Args:
        rate: The rate :math:`\\lambda > 0`.
        n: The sample size, at least two.
        seed: An integer seed, a :class:`numpy.random.SeedSequence` or a
            :class:`numpy.random.Generator` to draw from.

    Returns:
        The sorted sample.

    Raises:
        DomainError: If the rate is not positive.
        SampleError: If ``n < 2``.
    """
    rate = float(rate)
    if not np.isfinite(rate) or rate <= 0:
        raise DomainError(f"The exponential rate must be positive and finite, got {rate}.")
    if n < 2:
        raise SampleError(f"The sample size must be at least 2, got {n}.")

    uniforms = _generator(seed).random(int(n))
    values = -np.log1p(-uniforms) / rate
    values.sort()
    return OrderedSample.from_sorted(values)
