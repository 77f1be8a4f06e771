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

r"""Empirical weighted cumulative (residual) entropies.

The empirical survival function of a sample of size :math:`n` is constant with
value :math:`(n - i)/n` between consecutive order statistics, so the empirical
WCRE and WCE reduce to weighted sums of the gaps
:math:`\Delta_i = \psi(x_{(i+1)}) - \psi(x_{(i)})` of the antiderivative
:math:`\psi` of the weight function:

.. math::

    \hat{\mathcal{E}}^w = -\sum_{i=1}^{n-1} \frac{n-i}{n}\log\frac{n-i}{n}\,\Delta_i,
    \qquad
    \hat{\mathcal{CE}}^w = -\sum_{i=1}^{n-1} \frac{i}{n}\log\frac{i}{n}\,\Delta_i.

The ``*_piecewise`` functions evaluate these sums directly. The ``*_orderstats``
functions use the telescoped forms

.. math::

    \hat{\mathcal{E}}^w = (\bar\psi - \psi(x_{(1)}))\log n
        - \frac{1}{n}\sum_{i=1}^{n-1} (n-i)\Delta_i \log(n-i),
    \qquad
    \hat{\mathcal{CE}}^w = (\psi(x_{(n)}) - \bar\psi)\log n
        - \frac{1}{n}\sum_{i=1}^{n-1} i\Delta_i \log i,

where :math:`\bar\psi` is the sample mean of :math:`\psi(x_{(i)})`.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Sequence, Union

import numpy as np
from scipy import special

from wcentropy.empirical.ordered_sample import OrderedSample
from wcentropy.exceptions import NumericalError
from wcentropy.weight_functions import WeightFunction

LOG = logging.getLogger(__name__)


class EntropyKind(Enum):
    """The information measure an estimate refers to."""

    WCRE = "wcre"
    WCE = "wce"


class EstimatorMethod(Enum):
    """The algorithm that produced an estimate."""

    ORDER_STATS = "orderstats"
    PIECEWISE = "piecewise"


@dataclass(frozen=True)
class EntropyEstimate:
    """An empirical WCRE or WCE value with its provenance."""

    kind: EntropyKind

    # Value of the estimate
    value: float

    # Sample size
    n: int

    # Weight function the estimate was computed with
    wf: WeightFunction

    method: EstimatorMethod = EstimatorMethod.ORDER_STATS

    def __float__(self):
        return self.value

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON serializable dictionary of the estimate."""
        return {
            "kind": self.kind.value,
            "value": self.value,
            "n": self.n,
            "wf": self.wf.spec,
            "label": self.wf.label,
            "method": self.method.value,
        }


SampleLike = Union[OrderedSample, Sequence[float], np.ndarray]


def _as_sample(sample: SampleLike) -> OrderedSample:
    if isinstance(sample, OrderedSample):
        return sample
    return OrderedSample(sample)


def _psi_relative(sample: OrderedSample, wf: WeightFunction) -> np.ndarray:
    """Return :math:`\\psi(x_{(i)}) - \\psi(x_{(1)})` for all order statistics.

    Offsetting by the first value leaves every gap unchanged and makes the
    estimates of a constant sample exactly zero.

    Raises:
        NumericalError: If the antiderivative overflows on the sample.
    """
    with np.errstate(over="ignore", invalid="ignore"):
        psi = wf.antiderivative(sample.values)
        psi = psi - psi[0]
    finite = np.isfinite(psi)
    if not np.all(finite):
        x = float(sample.values[np.argmin(finite)])
        LOG.error("Antiderivative of %s overflows at x = %g.", wf.spec, x)
        raise NumericalError(
            f"The antiderivative of {wf.spec} at the sample value {x:g} is not a finite "
            "floating point number."
        )
    return psi


def _fsum(terms: np.ndarray) -> float:
    # all terms are nonnegative
    try:
        return math.fsum(terms)
    except OverflowError:
        return math.inf


def _finite_estimate(
    kind: EntropyKind, value: float, n: int, wf: WeightFunction, method: EstimatorMethod
) -> EntropyEstimate:
    if not math.isfinite(value):
        LOG.error("%s of %s with n=%d is %s.", kind.value, wf.spec, n, value)
        raise NumericalError(
            f"The {kind.value} of {wf.spec} overflows on a sample of size {n}, got {value}."
        )
    return EntropyEstimate(kind, value, n, wf, method)


def wce_orderstats(sample: SampleLike, wf: WeightFunction) -> EntropyEstimate:
    """Compute the empirical WCE with the telescoped order-statistics formula.

    Args:
        sample: The sample, either an :class:`OrderedSample` or values in any order.
        wf: The weight function.

    Returns:
        The WCE estimate.

    Raises:
        SampleError: If the sample has fewer than two values or invalid values.
        NumericalError: If the estimate overflows.
    """
    sample = _as_sample(sample)
    n = sample.n
    psi = _psi_relative(sample, wf)
    psi_mean = _fsum(psi) / n
    i = np.arange(1, n)
    with np.errstate(over="ignore", invalid="ignore"):
        zeta = i * np.diff(psi)
        value = float(psi[-1] - psi_mean) * math.log(n) - _fsum(zeta * np.log(i)) / n
    return _finite_estimate(EntropyKind.WCE, value, n, wf, EstimatorMethod.ORDER_STATS)


def wcre_orderstats(sample: SampleLike, wf: WeightFunction) -> EntropyEstimate:
    """Compute the empirical WCRE with the telescoped order-statistics formula.

    Args:
        sample: The sample, either an :class:`OrderedSample` or values in any order.
        wf: The weight function.

    Returns:
        The WCRE estimate.

    Raises:
        SampleError: If the sample has fewer than two values or invalid values.
        NumericalError: If the estimate overflows.
    """
    sample = _as_sample(sample)
    n = sample.n
    psi = _psi_relative(sample, wf)
    psi_mean = _fsum(psi) / n
    rest = n - np.arange(1, n)
    with np.errstate(over="ignore", invalid="ignore"):
        tau = rest * np.diff(psi)
        value = psi_mean * math.log(n) - _fsum(tau * np.log(rest)) / n
    return _finite_estimate(EntropyKind.WCRE, value, n, wf, EstimatorMethod.ORDER_STATS)


def wce_piecewise(sample: SampleLike, wf: WeightFunction) -> EntropyEstimate:
    """Compute the empirical WCE by integrating the piecewise constant empirical CDF.

    Args:
        sample: The sample, either an :class:`OrderedSample` or values in any order.
        wf: The weight function.

    Returns:
        The WCE estimate.
    """
    sample = _as_sample(sample)
    n = sample.n
    gaps = np.diff(_psi_relative(sample, wf))
    value = _fsum(special.entr(np.arange(1, n) / n) * gaps)
    return _finite_estimate(EntropyKind.WCE, value, n, wf, EstimatorMethod.PIECEWISE)


def wcre_piecewise(sample: SampleLike, wf: WeightFunction) -> EntropyEstimate:
    """Compute the empirical WCRE by integrating the empirical survival function.

    Args:
        sample: The sample, either an :class:`OrderedSample` or values in any order.
        wf: The weight function.

    Returns:
        The WCRE estimate.
    """
    sample = _as_sample(sample)
    n = sample.n
    gaps = np.diff(_psi_relative(sample, wf))
    value = _fsum(special.entr((n - np.arange(1, n)) / n) * gaps)
    return _finite_estimate(EntropyKind.WCRE, value, n, wf, EstimatorMethod.PIECEWISE)
