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

"""Nonnegative populations for ground truth evaluation."""

from abc import ABC, abstractmethod
from typing import Union

import numpy as np
from scipy import stats

from wcentropy.exceptions import DomainError

ArrayLike = Union[float, np.ndarray]


class Population(ABC):
    """A nonnegative absolutely continuous distribution with finite mean.

    Subclasses wrap a frozen :mod:`scipy.stats` distribution supported on
    :math:`[0, \\infty)` and return it from :meth:`_distribution`. All other
    methods of this contract delegate to it.
    """

    def __init__(self):
        self._dist = self._distribution()

    @abstractmethod
    def _distribution(self) -> "stats.rv_continuous":
        """Return the frozen scipy distribution of the population."""

    @property
    @abstractmethod
    def spec(self) -> str:
        """Return a ``family:params`` description of the population."""

    @property
    def mean(self) -> float:
        """Return :math:`E[X]`."""
        return float(self._dist.mean())

    def pdf(self, x: ArrayLike) -> ArrayLike:
        """Return the density :math:`f(x)`."""
        return self._dist.pdf(x)

    def cdf(self, x: ArrayLike) -> ArrayLike:
        """Return the distribution function :math:`F(x)`."""
        return self._dist.cdf(x)

    def sf(self, x: ArrayLike) -> ArrayLike:
        """Return the survival function :math:`\\bar F(x) = 1 - F(x)`."""
        return self._dist.sf(x)

    def logsf(self, x: ArrayLike) -> ArrayLike:
        """Return :math:`\\log \\bar F(x)` without cancellation in the tail."""
        return self._dist.logsf(x)

    def ppf(self, q: ArrayLike) -> ArrayLike:
        """Return the quantile function :math:`F^{-1}(q)`."""
        return self._dist.ppf(q)

    def isf(self, q: ArrayLike) -> ArrayLike:
        """Return the inverse survival function :math:`\\bar F^{-1}(q)`."""
        return self._dist.isf(q)

    def equilibrium_pdf(self, x: ArrayLike) -> ArrayLike:
        """Return the density :math:`\\bar F(x) / E[X]` of the equilibrium distribution."""
        return self.sf(x) / self.mean

    def __repr__(self):
        return f"{type(self).__name__}({self.spec!r})"


class Exponential(Population):
    r"""Exponential population with rate :math:`\lambda` and mean :math:`1/\lambda`."""

    def __init__(self, rate: float = 1.0):
        """Create an exponential population.

        Args:
            rate: The positive rate :math:`\\lambda`.

        Raises:
            DomainError: If the rate is not a positive finite number.
        """
        rate = float(rate)
        if not np.isfinite(rate) or rate <= 0:
            raise DomainError(f"The exponential rate must be positive and finite, got {rate}.")
        self._rate = rate
        super().__init__()

    def _distribution(self):
        return stats.expon(scale=1.0 / self._rate)

    @property
    def rate(self) -> float:
        """Return the rate :math:`\\lambda`."""
        return self._rate

    @property
    def spec(self) -> str:
        return f"exponential:{np.format_float_positional(self._rate, trim='-')}"

    def __eq__(self, other):
        return isinstance(other, Exponential) and self._rate == other.rate

    def __hash__(self):
        return hash((type(self).__name__, self._rate))
