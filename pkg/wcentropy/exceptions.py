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

"""Exceptions for errors raised by wcentropy."""

from qiskit.exceptions import QiskitError


class EntropyError(QiskitError):
    """Base class for errors raised by wcentropy."""


class WeightFunctionError(EntropyError):
    """Errors raised for invalid weight function parameters or specifications."""


class DomainError(EntropyError):
    """Errors raised when a function is evaluated outside of [0, inf)."""


class SampleError(EntropyError):
    """Errors raised for samples that cannot be used by the estimators."""


class SampleFileError(SampleError):
    """Errors raised while parsing a sample file."""

    def __init__(self, message: str, path: str = None, line: int = None, column: int = None):
        location = ""
        if path is not None:
            location = f"{path}:"
        if line is not None:
            location += f"{line}:{column or 1}:"
        if location:
            location += " "
        super().__init__(location + message)
        self.path = path
        self.line = line
        self.column = column


class IntegrabilityError(EntropyError):
    """Errors raised when a weight function violates the integrability condition."""


class DivergenceError(EntropyError):
    """Errors raised when an integral does not converge numerically."""


class NumericalError(EntropyError):
    """Errors raised when a result is not a finite floating point number."""


class SelfCheckError(NumericalError):
    """Errors raised when two independent evaluations of a quantity disagree."""


class AnalysisError(EntropyError):
    """Class for errors raised by experiment analysis."""


class UsageError(EntropyError):
    """Errors raised for invalid command line arguments or run configurations."""
