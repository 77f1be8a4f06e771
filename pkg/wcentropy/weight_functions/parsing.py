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

"""Parse ``family:param[,param...]`` weight function specifications."""

from typing import Callable, Dict, List

from wcentropy.exceptions import WeightFunctionError
from wcentropy.weight_functions.base_weight_function import WeightFunction
from wcentropy.weight_functions.library import (
    Constant,
    ExponentialTilt,
    Gaussian,
    Identity,
    Polynomial,
)


def _single(family: str, factory: Callable[[float], WeightFunction], default=None):
    def build(values: List[float]) -> WeightFunction:
        if not values and default is not None:
            return factory(default)
        if len(values) != 1:
            raise WeightFunctionError(
                f"Weight function '{family}' takes exactly one parameter, got {len(values)}."
            )
        return factory(values[0])

    return build


def _identity(values: List[float]) -> WeightFunction:
    if values:
        raise WeightFunctionError("Weight function 'identity' takes no parameters.")
    return Identity()


def _polynomial(values: List[float]) -> WeightFunction:
    if not values:
        raise WeightFunctionError("Weight function 'poly' needs at least one coefficient.")
    return Polynomial(values)


_FAMILIES: Dict[str, Callable[[List[float]], WeightFunction]] = {
    "constant": _single("constant", Constant, default=1.0),
    "identity": _identity,
    "poly": _polynomial,
    "polynomial": _polynomial,
    "gaussian": _single("gaussian", Gaussian),
    "normal": _single("normal", Gaussian),
    "exptilt": _single("exptilt", ExponentialTilt),
    "exponential": _single("exponential", ExponentialTilt),
}


def parse_weight_function(spec: str) -> WeightFunction:
    """Build a weight function from its specification string.

    Examples of accepted strings are ``gaussian:0.5``, ``exptilt:-0.2``,
    ``poly:1,2,0.5``, ``constant:1`` and ``identity``. Family names are case
    insensitive; ``normal``, ``polynomial`` and ``exponential`` are accepted as
    aliases of ``gaussian``, ``poly`` and ``exptilt``.

    Args:
        spec: The specification string.

    Returns:
        The weight function. Its :attr:`~WeightFunction.spec` reproduces the
        canonical form of ``spec``.

    Raises:
        WeightFunctionError: If the family is unknown, a parameter is not a number,
            or the parameters are invalid for the family.
    """
    if isinstance(spec, WeightFunction):
        return spec
    family, _, params = str(spec).strip().partition(":")
    family = family.strip().lower()
    if family not in _FAMILIES:
        raise WeightFunctionError(
            f"Unknown weight function family '{family}' in '{spec}'. "
            f"Supported families are {sorted(_FAMILIES)}."
        )
    values = []
    if params.strip():
        for token in params.split(","):
            try:
                values.append(float(token))
            except ValueError as ex:
                raise WeightFunctionError(
                    f"Parameter '{token.strip()}' of weight function '{spec}' is not a number."
                ) from ex
    return _FAMILIES[family](values)
