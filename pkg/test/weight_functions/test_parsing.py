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

"""Test parsing of weight function specifications."""

from test.base import WCEntropyTestCase

from ddt import ddt, data, unpack

from wcentropy.exceptions import WeightFunctionError
from wcentropy.weight_functions import (
    Constant,
    ExponentialTilt,
    Gaussian,
    Identity,
    Polynomial,
    parse_weight_function,
)


@ddt
class TestParseWeightFunction(WCEntropyTestCase):
    """Test parse_weight_function."""

    @data(
        ["gaussian:0.5", Gaussian(0.5)],
        ["GAUSSIAN:0.5", Gaussian(0.5)],
        ["normal:2", Gaussian(2.0)],
        ["exptilt:-0.2", ExponentialTilt(-0.2)],
        ["exponential:-1", ExponentialTilt(-1.0)],
        ["poly:1,2,0.5", Polynomial([1.0, 2.0, 0.5])],
        ["polynomial: 1, 2", Polynomial([1.0, 2.0])],
        ["constant:1", Constant(1.0)],
        ["constant", Constant(1.0)],
        ["constant:2.5", Constant(2.5)],
        ["identity", Identity()],
        ["  identity  ", Identity()],
    )
    @unpack
    def test_parse(self, spec, expected):
        """Test a valid specification string."""
        self.assertEqual(parse_weight_function(spec), expected)

    @data("gaussian:0.5", "exptilt:-0.2", "poly:1,2,0.5", "constant:1", "identity")
    def test_canonical_round_trip(self, spec):
        """Test canonical specification strings are reproduced."""
        self.assertEqual(parse_weight_function(spec).spec, spec)

    @data(
        "unknown:1",
        "gaussian",
        "gaussian:",
        "gaussian:abc",
        "gaussian:-1",
        "gaussian:0",
        "identity:1",
        "poly",
        "poly:1,-2",
        "poly:1,,2",
        "exptilt:1,2",
        "constant:-1",
        "",
    )
    def test_invalid(self, spec):
        """Test invalid specification strings raise."""
        with self.assertRaises(WeightFunctionError):
            parse_weight_function(spec)

    def test_instance_passes_through(self):
        """Test a weight function instance is returned unchanged."""
        wf = Gaussian(1.0)
        self.assertIs(parse_weight_function(wf), wf)
