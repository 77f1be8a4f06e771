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

"""Test the weight function catalog."""

from test.base import WCEntropyTestCase

import numpy as np
from ddt import ddt, data, unpack
from scipy import integrate

from wcentropy.exceptions import DomainError, WeightFunctionError
from wcentropy.weight_functions import (
    Constant,
    ExponentialTilt,
    Gaussian,
    Identity,
    Polynomial,
)

CATALOG = [
    Constant(1.0),
    Constant(2.5),
    Identity(),
    Polynomial([1.0, 2.0, 0.5]),
    Gaussian(0.5),
    Gaussian(2.0),
    ExponentialTilt(-1.0),
    ExponentialTilt(0.0),
    ExponentialTilt(0.3),
]


@ddt
class TestEvaluate(WCEntropyTestCase):
    """Test evaluation of weight functions."""

    @data(
        [Gaussian(1.0), 0.0, 1.0],
        [ExponentialTilt(-1.0), 0.0, 1.0],
        [Polynomial([1.0, 2.0]), 3.0, 7.0],
        [Constant(3.0), 12.0, 3.0],
        [Identity(), 2.5, 2.5],
        [Gaussian(2.0), 2.0, np.exp(-0.5)],
    )
    @unpack
    def test_values(self, wf, x, expected):
        """Test the weight at a point."""
        value = wf.evaluate(x)
        self.assertIsInstance(value, float)
        self.assertAlmostEqual(value, expected, places=14)

    @data(*CATALOG)
    def test_nonnegative(self, wf):
        """Test the weight is nonnegative and finite on a grid."""
        values = wf.evaluate(np.linspace(0.0, 20.0, 201))
        self.assertEqual(values.shape, (201,))
        self.assertTrue(np.all(values >= 0))
        self.assertTrue(np.all(np.isfinite(values)))

    @data(*CATALOG)
    def test_negative_point_rejected(self, wf):
        """Test evaluation outside of [0, inf) raises."""
        with self.assertRaises(DomainError):
            wf.evaluate(-0.1)
        with self.assertRaises(DomainError):
            wf.antiderivative([1.0, -2.0])
        with self.assertRaises(DomainError):
            wf.evaluate(np.inf)

    def test_unvalidated_evaluation(self):
        """Test the domain check can be switched off."""
        wf = Identity(validate=False)
        self.assertEqual(wf.evaluate(-2.0), -2.0)

    def test_call(self):
        """Test calling a weight function evaluates it."""
        wf = Polynomial([0.0, 0.0, 1.0])
        self.assertEqual(wf(3.0), 9.0)

    @data(*CATALOG)
    def test_log_evaluate(self, wf):
        """Test the log weight is the logarithm of the weight."""
        x = np.linspace(0.0, 20.0, 41)
        np.testing.assert_allclose(np.exp(wf.log_evaluate(x)), wf.evaluate(x), rtol=1e-12)

    def test_log_evaluate_beyond_overflow(self):
        """Test the log weight stays finite where the weight overflows."""
        wf = ExponentialTilt(1.0)
        self.assertEqual(wf.evaluate(1000.0), np.inf)
        self.assertEqual(wf.log_evaluate(1000.0), 1000.0)
        self.assertEqual(Gaussian(1.0).log_evaluate(100.0), -5000.0)
        self.assertEqual(Constant(0.0).log_evaluate(1.0), -np.inf)
        with self.assertRaises(DomainError):
            wf.log_evaluate(-1.0)


@ddt
class TestAntiderivative(WCEntropyTestCase):
    """Test the exact antiderivatives."""

    @data(*CATALOG)
    def test_zero_at_origin(self, wf):
        """Test the antiderivative vanishes at the origin."""
        self.assertEqual(wf.antiderivative(0.0), 0.0)

    @data(*CATALOG)
    def test_nondecreasing(self, wf):
        """Test the antiderivative never decreases."""
        self.assertAllNondecreasing(wf.antiderivative(np.linspace(0.0, 30.0, 3001)))

    def test_exponential_tilt_value(self):
        """Test the antiderivative of exp(-x) at one."""
        self.assertAlmostEqual(ExponentialTilt(-1.0).antiderivative(1.0), 0.6321206, places=7)

    def test_exponential_tilt_zero_rate(self):
        """Test the zero tilt is the constant weight."""
        x = np.array([0.0, 0.5, 3.0, 17.0])
        np.testing.assert_array_equal(ExponentialTilt(0.0).antiderivative(x), x)
        np.testing.assert_array_equal(ExponentialTilt(0.0).evaluate(x), np.ones(4))

    def test_exponential_tilt_small_rate(self):
        """Test the antiderivative keeps its precision for tiny tilts."""
        wf = ExponentialTilt(-1e-12)
        self.assertAlmostEqual(wf.antiderivative(2.0), 2.0 - 2e-12, places=13)

    def test_gaussian_limit(self):
        """Test the Gaussian antiderivative tends to sqrt(pi/2)."""
        self.assertAlmostEqual(Gaussian(1.0).antiderivative(50.0), np.sqrt(np.pi / 2), places=12)
        self.assertAlmostEqual(Gaussian(1.0).antiderivative(50.0), 1.2533141, places=7)

    def test_polynomial(self):
        """Test the polynomial antiderivative."""
        wf = Polynomial([1.0, 2.0, 3.0])
        self.assertAlmostEqual(wf.antiderivative(2.0), 2.0 + 4.0 + 8.0, places=12)

    def test_identity(self):
        """Test the identity antiderivative."""
        self.assertEqual(Identity().antiderivative(3.0), 4.5)

    @data("constant", "polynomial", "gaussian", "exptilt")
    def test_matches_quadrature(self, family):
        """Test the antiderivative against adaptive quadrature on random draws."""
        rng = np.random.default_rng(1234)
        for _ in range(200):
            if family == "constant":
                wf = Constant(rng.uniform(0.0, 5.0))
            elif family == "polynomial":
                wf = Polynomial(rng.uniform(0.0, 2.0, size=rng.integers(1, 7)))
            elif family == "gaussian":
                wf = Gaussian(rng.uniform(0.25, 5.0))
            else:
                wf = ExponentialTilt(rng.uniform(-3.0, 2.0))
            x = rng.uniform(0.0, 10.0)
            expected, _ = integrate.quad(wf.evaluate, 0.0, x, epsabs=1e-13, epsrel=1e-13, limit=200)
            self.assertRelativeClose(wf.antiderivative(x), expected, 1e-10, msg=f"{wf} at {x}")


@ddt
class TestParameters(WCEntropyTestCase):
    """Test parameter validation at construction."""

    @data(
        lambda: Gaussian(0.0),
        lambda: Gaussian(-1.0),
        lambda: Gaussian(np.nan),
        lambda: Polynomial([1.0, -2.0]),
        lambda: Polynomial([]),
        lambda: Constant(-1.0),
        lambda: ExponentialTilt(np.inf),
        lambda: Gaussian("wide"),
    )
    def test_invalid(self, factory):
        """Test invalid parameters raise."""
        with self.assertRaises(WeightFunctionError):
            factory()

    def test_polynomial_degree(self):
        """Test the degree ignores trailing zero coefficients."""
        self.assertEqual(Polynomial([1.0, 0.0, 0.0]).degree, 0)
        self.assertEqual(Polynomial([0.0, 0.0, 4.0]).degree, 2)
        self.assertEqual(Identity().degree, 1)


@ddt
class TestDescription(WCEntropyTestCase):
    """Test the specification strings and labels."""

    @data(
        [Gaussian(0.5), "gaussian:0.5", "σ=0.5"],
        [ExponentialTilt(-0.2), "exptilt:-0.2", "t=-0.2"],
        [Constant(), "constant:1", "c=1"],
        [Identity(), "identity", "φ(x)=x"],
        [Polynomial([1.0, 2.0, 0.5]), "poly:1,2,0.5", "a=(1, 2, 0.5)"],
        [ExponentialTilt(-0.0001), "exptilt:-0.0001", "t=-0.0001"],
    )
    @unpack
    def test_spec_and_label(self, wf, spec, label):
        """Test the specification string and the legend label."""
        self.assertEqual(wf.spec, spec)
        self.assertEqual(wf.label, label)

    def test_equality(self):
        """Test weight functions compare by type and parameters."""
        self.assertEqual(Gaussian(1), Gaussian(1.0))
        self.assertEqual(hash(Gaussian(1)), hash(Gaussian(1.0)))
        self.assertNotEqual(Gaussian(1.0), Gaussian(2.0))
        self.assertNotEqual(Constant(1.0), Polynomial([1.0]))
        self.assertEqual(len({Identity(), Identity(), Constant()}), 2)
