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

"""Base class for weight functions."""

from abc import ABCMeta, abstractmethod
from typing import Optional, Tuple, Union

import numpy as np

from wcentropy.exceptions import DomainError, WeightFunctionError

ArrayLike = Union[float, np.ndarray]


class WeightFunction(metaclass=ABCMeta):
    r"""A nonnegative weight function :math:`\phi` on :math:`[0, \infty)`.

    Subclasses define :math:`\phi` through :meth:`_evaluate` and its antiderivative
    :math:`\psi(x) = \int_0^x \phi(t) dt` through :meth:`_antiderivative`. The estimators
    only ever need :math:`\psi`, so any subclass honouring this contract can be used with
    them without further changes.

    Parameters are validated once at construction. The public :meth:`evaluate` and
    :meth:`antiderivative` methods only check that the evaluation points lie in the
    domain; this check can be switched off with ``validate=False`` for hot loops on
    data that is already known to be nonnegative.
    """

    # Keyword of the family in ``family:params`` specification strings.
    __family__ = None

    def __init__(self, validate: bool = True):
        """
        Args:
            validate: If set to False evaluation points are not checked to be in [0, inf).
        """
        self._validate = validate

    @property
    def family(self) -> str:
        """Return the family keyword of this weight function."""
        return self.__family__ or type(self).__name__.lower()

    @property
    @abstractmethod
    def params(self) -> Tuple[float, ...]:
        """Return the real parameters of the weight function."""

    @abstractmethod
    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        """Evaluate the weight function on validated points."""

    @abstractmethod
    def _antiderivative(self, x: np.ndarray) -> np.ndarray:
        """Evaluate the antiderivative on validated points."""

    def _log_evaluate(self, x: np.ndarray) -> np.ndarray:
        """Evaluate the logarithm of the weight function on validated points."""
        with np.errstate(divide="ignore"):
            return np.log(self._evaluate(x))

    def _tail_integrable(self, p: float) -> Optional[Tuple[bool, str]]:
        r"""Decide analytically whether :math:`\int_a^\infty \phi(x) x^{-p} dx` is finite.

        Args:
            p: The moment exponent, larger than one.

        Returns:
            A pair ``(valid, reason)`` or None if the family has no analytic rule, in
            which case the integrability check falls back to a numerical estimate.
        """
        return None

    def _format_data(self, x: ArrayLike) -> np.ndarray:
        """Convert the evaluation points to a float array and check the domain.

        Raises:
            DomainError: If a point is negative or not finite.
        """
        x = np.asarray(x, dtype=float)
        if self._validate:
            if not np.all(np.isfinite(x)):
                raise DomainError(f"{self!r} cannot be evaluated at non-finite points.")
            if np.any(x < 0):
                raise DomainError(
                    f"{self!r} is defined on [0, inf) but was evaluated at {np.min(x)}."
                )
        return x

    @staticmethod
    def _format_output(x: np.ndarray, values: np.ndarray) -> ArrayLike:
        if x.ndim == 0:
            return float(values)
        return values

    def evaluate(self, x: ArrayLike) -> ArrayLike:
        r"""Evaluate :math:`\phi(x)`.

        Args:
            x: A nonnegative point or array of points.

        Returns:
            The weight at ``x``, a float for scalar input.

        Raises:
            DomainError: If ``x`` is negative or not finite.
        """
        x = self._format_data(x)
        with np.errstate(over="ignore"):
            return self._format_output(x, self._evaluate(x))

    def log_evaluate(self, x: ArrayLike) -> ArrayLike:
        r"""Evaluate :math:`\log \phi(x)`.

        Families whose weight overflows for large ``x`` return the logarithm without
        forming the weight, so that products with a small survival function can be
        taken in log space. A vanishing weight gives ``-inf``.

        Raises:
            DomainError: If ``x`` is negative or not finite.
        """
        x = self._format_data(x)
        return self._format_output(x, self._log_evaluate(x))

    def antiderivative(self, x: ArrayLike) -> ArrayLike:
        r"""Evaluate :math:`\psi(x) = \int_0^x \phi(t) dt`.

        Args:
            x: A nonnegative point or array of points.

        Returns:
            The antiderivative at ``x``, a float for scalar input.

        Raises:
            DomainError: If ``x`` is negative or not finite.
        """
        x = self._format_data(x)
        with np.errstate(over="ignore"):
            return self._format_output(x, self._antiderivative(x))

    def __call__(self, x: ArrayLike) -> ArrayLike:
        return self.evaluate(x)

    @property
    def spec(self) -> str:
        """Return the ``family:param[,param...]`` string describing this weight function."""
        if not self.params:
            return self.family
        values = ",".join(np.format_float_positional(p, trim="-") for p in self.params)
        return f"{self.family}:{values}"

    @property
    def label(self) -> str:
        """Return a short legend label for plots and manifests."""
        return self.spec

    @staticmethod
    def _checked_parameter(name: str, value: float, positive: bool = False) -> float:
        """Return ``value`` as a float after checking it is finite (and positive).

        Raises:
            WeightFunctionError: If the value is invalid.
        """
        try:
            value = float(value)
        except (TypeError, ValueError) as ex:
            raise WeightFunctionError(f"Parameter {name}={value!r} is not a number.") from ex
        if not np.isfinite(value):
            raise WeightFunctionError(f"Parameter {name}={value} must be finite.")
        if positive and value <= 0:
            raise WeightFunctionError(f"Parameter {name}={value} must be positive.")
        return value

    def __eq__(self, other):
        return type(self) is type(other) and self.params == other.params

    def __hash__(self):
        return hash((type(self).__name__, self.params))

    def __repr__(self):
        return f"{type(self).__name__}({self.spec!r})"
