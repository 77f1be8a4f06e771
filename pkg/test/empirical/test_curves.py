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

"""Test prefix curves of the bundled dataset."""

from test.base import WCEntropyTestCase

import numpy as np
from ddt import ddt, data, unpack

from wcentropy.empirical import (
    CurvePoint,
    PrefixOrder,
    arrange,
    column_major,
    prefix_curves,
    wce_orderstats,
    wcre_orderstats,
)
from wcentropy.exceptions import SampleError
from wcentropy.weight_functions import Constant, ExponentialTilt, Gaussian


def _grid(values, columns=10):
    return [values[i : i + columns] for i in range(0, len(values), columns)]


@ddt
class TestPrefixCurves(WCEntropyTestCase):
    """Test prefix_curves."""

    def setUp(self):
        super().setUp()
        self.values = self.example_values()

    def test_points(self):
        """Test one point per prefix length in increasing order."""
        points = prefix_curves(self.values, Gaussian(1.0), n_min=5)
        self.assertEqual([point.n for point in points], list(range(5, 51)))
        self.assertIsInstance(points[0], CurvePoint)

    def test_prefix_follows_listed_order(self):
        """Test each point estimates the first n listed values."""
        wf = Gaussian(1.0)
        for point in prefix_curves(self.values, wf, n_min=2):
            prefix = self.values[: point.n]
            self.assertEqual(point.wcre, wcre_orderstats(prefix, wf).value)
            self.assertEqual(point.wce, wce_orderstats(prefix, wf).value)

    @data(
        [0.5, 35, 0.099115, 0.169003],
        [0.5, 40, 0.109391, 0.180020],
        [1.0, 35, 0.287600, 0.378991],
        [1.0, 40, 0.299890, 0.390877],
        [2.0, 35, 0.707332, 0.706157],
        [2.0, 40, 0.712870, 0.707492],
    )
    @unpack
    def test_row_major_values(self, sigma, n, wcre, wce):
        """Test the row-major prefix values of the bundled dataset."""
        point = prefix_curves(self.values, Gaussian(sigma), n_min=n)[0]
        self.assertEqual(point.n, n)
        self.assertAlmostEqual(point.wcre, wcre, delta=1e-5)
        self.assertAlmostEqual(point.wce, wce, delta=1e-5)

    @data(
        [0.5, 35, 0.103351, 0.172158],
        [0.5, 40, 0.100694, 0.167967],
        [1.0, 35, 0.293874, 0.380959],
        [1.0, 40, 0.291331, 0.376278],
        [2.0, 35, 0.705767, 0.692367],
        [2.0, 40, 0.693751, 0.675703],
    )
    @unpack
    def test_column_major_values(self, sigma, n, wcre, wce):
        """Test the column-major prefix values of the bundled dataset."""
        raw = arrange(_grid(self.values), PrefixOrder.COLUMN_MAJOR)
        point = prefix_curves(raw, Gaussian(sigma), n_min=n)[0]
        self.assertAlmostEqual(point.wcre, wcre, delta=1e-5)
        self.assertAlmostEqual(point.wce, wce, delta=1e-5)

    @data(
        [0.5, 35, 0.138681, 0.187374],
        [0.5, 40, 0.126678, 0.184939],
        [1.0, 35, 0.329842, 0.353938],
        [1.0, 40, 0.327087, 0.374913],
        [2.0, 35, 0.510204, 0.478642],
        [2.0, 40, 0.602545, 0.563141],
    )
    @unpack
    def test_sorted_values(self, sigma, n, wcre, wce):
        """Test the prefix values of the n smallest values of the bundled dataset."""
        raw = arrange(_grid(self.values), PrefixOrder.SORTED)
        point = prefix_curves(raw, Gaussian(sigma), n_min=n)[0]
        self.assertAlmostEqual(point.wcre, wcre, delta=1e-5)
        self.assertAlmostEqual(point.wce, wce, delta=1e-5)

    def test_sorted_reference_values(self):
        """Test the smallest-values prefixes reproduce the reference values to four digits."""
        raw = arrange(_grid(self.values), PrefixOrder.SORTED)
        narrow = {point.n: point for point in prefix_curves(raw, Gaussian(0.5), n_min=35)}
        unit = {point.n: point for point in prefix_curves(raw, Gaussian(1.0), n_min=35)}
        self.assertAlmostEqual(narrow[35].wce, 0.1872, delta=5e-4)
        self.assertAlmostEqual(narrow[40].wce, 0.1847, delta=5e-4)
        self.assertAlmostEqual(unit[35].wcre, 0.3299, delta=5e-4)
        self.assertAlmostEqual(unit[40].wcre, 0.3270, delta=5e-4)

    def test_column_major_drops(self):
        """Test the column-major curves drop from n=35 to n=40."""
        raw = column_major(_grid(self.values))
        narrow = {point.n: point for point in prefix_curves(raw, Gaussian(0.5), n_min=35)}
        unit = {point.n: point for point in prefix_curves(raw, Gaussian(1.0), n_min=35)}
        self.assertGreater(narrow[35].wcre, narrow[40].wcre)
        self.assertGreater(unit[35].wce, unit[40].wce)

    def test_narrow_gaussian_not_monotone(self):
        """Test the narrow Gaussian WCRE curve is not monotone in n."""
        points = prefix_curves(self.values, Gaussian(0.5))
        wcre = np.array([point.wcre for point in points])
        self.assertTrue(np.any(np.diff(wcre) < 0))
        by_n = {point.n: point.wcre for point in points}
        self.assertGreater(by_n[34], by_n[35])

    def test_full_sample(self):
        """Test the last point is the estimate of the full sample."""
        point = prefix_curves(self.values, Gaussian(1.0))[-1]
        self.assertEqual(point.n, 50)
        self.assertAlmostEqual(point.wcre, 0.29760371, places=6)
        self.assertAlmostEqual(point.wce, 0.38879983, places=6)

    @data(*PrefixOrder)
    def test_increasing_in_sigma(self, order):
        """Test the estimates grow with the Gaussian width at every prefix."""
        raw = arrange(_grid(self.values), order)
        curves = [prefix_curves(raw, Gaussian(sigma)) for sigma in (0.5, 1.0, 2.0)]
        for points in zip(*curves):
            self.assertAllNondecreasing([point.wcre for point in points])
            self.assertAllNondecreasing([point.wce for point in points])

    @data(*PrefixOrder)
    def test_increasing_in_tilt(self, order):
        """Test the estimates grow with the exponential tilt at every prefix."""
        raw = arrange(_grid(self.values), order)
        curves = [prefix_curves(raw, ExponentialTilt(t)) for t in (-1.0, -0.2, -0.0001)]
        for points in zip(*curves):
            self.assertAllNondecreasing([point.wcre for point in points])
            self.assertAllNondecreasing([point.wce for point in points])

    def test_constant_dataset(self):
        """Test a constant dataset gives flat zero curves."""
        for point in prefix_curves([2.0] * 12, Gaussian(1.0)):
            self.assertEqual(point.to_row(), (point.n, 0.0, 0.0))

    @data(1, 51, 0)
    def test_invalid_range(self, n_min):
        """Test prefix lengths outside [2, len] raise."""
        with self.assertRaises(SampleError):
            prefix_curves(self.values, Constant(1.0), n_min=n_min)

    def test_invalid_values(self):
        """Test negative values raise even beyond the first prefix."""
        with self.assertRaises(SampleError):
            prefix_curves([1.0, 2.0, 3.0, -1.0], Constant(1.0))


class TestPrefixOrder(WCEntropyTestCase):
    """Test the reading orders of a sample grid."""

    def test_column_major(self):
        """Test reading a grid column by column."""
        self.assertEqual(column_major([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]]), [1, 3, 5, 2, 4, 6])

    def test_ragged_grid(self):
        """Test a ragged grid cannot be read column by column."""
        with self.assertRaises(SampleError):
            column_major([[1.0, 2.0], [3.0]])

    def test_arrange(self):
        """Test flattening in every order."""
        rows = [[1.0, 2.0], [3.0, 4.0]]
        self.assertEqual(arrange(rows, "row-major"), [1.0, 2.0, 3.0, 4.0])
        self.assertEqual(arrange(rows, PrefixOrder.COLUMN_MAJOR), [1.0, 3.0, 2.0, 4.0])
        self.assertEqual(arrange(rows[::-1], "sorted"), [1.0, 2.0, 3.0, 4.0])

    def test_sorted_ragged_grid(self):
        """Test the sorted order accepts a ragged grid."""
        self.assertEqual(arrange([[5.0, 2.0], [1.0]], PrefixOrder.SORTED), [1.0, 2.0, 5.0])
