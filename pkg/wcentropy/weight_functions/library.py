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

"""The catalog of parametric weight functions."""

from typing import Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as poly
from scipy import special

from wcentropy.exceptions import WeightFunctionError
from wcentropy.weight_functions.base_weight_function import WeightFunction


class Polynomial(WeightFunction):
    r"""Polynomial weight with nonnegative coefficients.

    .. math::

        \phi(x) = \sum_{i=0}^{d} a_i x^i, \qquad
        \psi(x) = \sum_{i=0}^{d} \frac{a_i}{i + 1} x^{i + 1}
    """

    __family__ = "poly"

    def __init__(self, coefficients: Sequence[float], validate: bool = True):
        """Create a polynomial weight function.

        Args:
            coefficients: The coefficients :math:`a_0, \\dots, a_d` in increasing order.
            validate: If set to False evaluation points are not checked.

        Raises:
            WeightFunctionError: If there are no coefficients or one is negative.
        """
        super().__init__(validate)
        coefficients = np.atleast_1d(coefficients)
        if coefficients.ndim != 1 or coefficients.size == 0:
            raise WeightFunctionError("A polynomial weight needs at least one coefficient.")
        self._coefficients = tuple(
            self._checked_parameter(f"a{i}", value) for i, value in enumerate(coefficients)
        )
        negative = [f"a{i}={a}" for i, a in enumerate(self._coefficients) if a < 0]
        if negative:
            raise WeightFunctionError(
                f"Polynomial weight coefficients must be nonnegative: {', '.join(negative)}."
            )
        self._antiderivative_coefficients = poly.polyint(self._coefficients)

    @property
    def params(self) -> Tuple[float, ...]:
        return self._coefficients

    @property
    def coefficients(self) -> Tuple[float, ...]:
        """Return the coefficients :math:`a_0, \\dots, a_d`."""
        return self._coefficients

    @property
    def degree(self) -> int:
        """Return the index of the highest nonzero coefficient (0 for the zero polynomial)."""
        nonzero = np.flatnonzero(self._coefficients)
        return int(nonzero[-1]) if nonzero.size else 0

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return poly.polyval(x, self._coefficients)

    def _antiderivative(self, x: np.ndarray) -> np.ndarray:
        return poly.polyval(x, self._antiderivative_coefficients)

    def _tail_integrable(self, p: float):
        degree = self.degree
        if p > degree + 1:
            return True, f"tail integral of x^({degree} - p) converges since p={p:g} > {degree + 1}"
        return False, f"tail integral of x^({degree} - p) diverges since p={p:g} <= {degree + 1}"

    @property
    def label(self) -> str:
        return "a=(" + ", ".join(f"{a:g}" for a in self._coefficients) + ")"


class Constant(Polynomial):
    r"""Constant weight :math:`\phi(x) = c`, which gives the unweighted entropies for c = 1."""

    __family__ = "constant"

    def __init__(self, c: float = 1.0, validate: bool = True):
        """Create a constant weight function.

        Args:
            c: The nonnegative constant.
            validate: If set to False evaluation points are not checked.

        Raises:
            WeightFunctionError: If ``c`` is negative.
        """
        try:
            super().__init__([c], validate=validate)
        except WeightFunctionError as ex:
            raise WeightFunctionError(f"Constant weight needs c >= 0, got {c}.") from ex

    @property
    def c(self) -> float:
        """Return the constant."""
        return self._coefficients[0]

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.full_like(x, self.c)

    def _log_evaluate(self, x: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.full_like(x, np.log(self.c))

    def _antiderivative(self, x: np.ndarray) -> np.ndarray:
        return self.c * x

    @property
    def label(self) -> str:
        return f"c={self.c:g}"


class Identity(Polynomial):
    r"""Identity weight :math:`\phi(x) = x`."""

    __family__ = "identity"

    def __init__(self, validate: bool = True):
        super().__init__([0.0, 1.0], validate=validate)

    @property
    def params(self) -> Tuple[float, ...]:
        return ()

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return x.copy()

    def _antiderivative(self, x: np.ndarray) -> np.ndarray:
        return 0.5 * x * x

    @property
    def label(self) -> str:
        return "φ(x)=x"


class Gaussian(WeightFunction):
    r"""Gaussian bump centred at the origin.

    .. math::

        \phi(x) = \exp\left(-\frac{x^2}{2\sigma^2}\right), \qquad
        \psi(x) = \sigma \sqrt{\pi / 2}\, {\rm erf}\left(\frac{x}{\sigma\sqrt{2}}\right)
    """

    __family__ = "gaussian"

    def __init__(self, sigma: float = 1.0, validate: bool = True):
        """Create a Gaussian weight function.

        Args:
            sigma: The positive width.
            validate: If set to False evaluation points are not checked.

        Raises:
            WeightFunctionError: If ``sigma`` is not positive.
        """
        super().__init__(validate)
        self._sigma = self._checked_parameter("sigma", sigma, positive=True)

    @property
    def params(self) -> Tuple[float, ...]:
        return (self._sigma,)

    @property
    def sigma(self) -> float:
        """Return the width."""
        return self._sigma

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.exp(-0.5 * (x / self._sigma) ** 2)

    def _log_evaluate(self, x: np.ndarray) -> np.ndarray:
        return -0.5 * (x / self._sigma) ** 2

    def _antiderivative(self, x: np.ndarray) -> np.ndarray:
        return self._sigma * np.sqrt(np.pi / 2) * special.erf(x / (self._sigma * np.sqrt(2)))

    def _tail_integrable(self, p: float):
        return True, "Gaussian weight is bounded and decays faster than any power"

    @property
    def label(self) -> str:
        return f"σ={self._sigma:g}"


class ExponentialTilt(WeightFunction):
    r"""Exponential tilt :math:`\phi(x) = e^{t x}`.

    The antiderivative is :math:`\psi(x) = (e^{t x} - 1) / t`, with the limit
    :math:`\psi(x) = x` at :math:`t = 0`.
    """

    __family__ = "exptilt"

    def __init__(self, t: float = 0.0, validate: bool = True):
        """Create an exponential tilt weight function.

        Args:
            t: The real tilt rate.
            validate: If set to False evaluation points are not checked.

        Raises:
            WeightFunctionError: If ``t`` is not finite.
        """
        super().__init__(validate)
        self._t = self._checked_parameter("t", t)

    @property
    def params(self) -> Tuple[float, ...]:
        return (self._t,)

    @property
    def t(self) -> float:
        """Return the tilt rate."""
        return self._t

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.exp(self._t * x)

    def _log_evaluate(self, x: np.ndarray) -> np.ndarray:
        return self._t * x

    def _antiderivative(self, x: np.ndarray) -> np.ndarray:
        if self._t == 0:
            return x.copy()
        return np.expm1(self._t * x) / self._t

    def _tail_integrable(self, p: float):
        if self._t <= 0:
            return True, f"exponential tilt t={self._t:g} is non-positive"
        return False, f"exponential tilt t={self._t:g} grows faster than any power of x"

    @property
    def label(self) -> str:
        return f"t={self._t:g}"
