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

"""Test the Monte Carlo convergence experiment."""

from test.base import WCEntropyTestCase

import numpy as np
from ddt import ddt, data, unpack

from wcentropy.convergence import (
    ConvergenceAnalysis,
    ConvergenceExperiment,
    ConvergenceReport,
    ConvergenceRow,
    run_convergence,
)
from wcentropy.exceptions import DomainError, IntegrabilityError, SampleError
from wcentropy.experiment_data import ExperimentData
from wcentropy.weight_functions import Gaussian, Identity


@ddt
class TestConvergence(WCEntropyTestCase):
    """Test convergence of the empirical estimators on exponential samples."""

    @data(
        ["constant:1", 2.0],
        ["gaussian:1", 0.2809],
        ["exptilt:-0.2", 0.5 / 0.49],
    )
    @unpack
    def test_error_decreases(self, spec, truth):
        """Test the WCRE error decreases with the sample size."""
        report = run_convergence(0.5, spec, sizes=(100, 1000, 10000, 100000), reps=20, seed=0)
        wcre = report.rows_for("wcre")
        self.assertEqual([row.n for row in wcre], [100, 1000, 10000, 100000])
        self.assertAlmostEqual(wcre[0].truth, truth, delta=1e-4)
        self.assertTrue(report.is_decreasing("wcre"), msg=report.mean_abs_errors("wcre"))
        self.assertEqual(report.quality, "computer_good")
        self.assertLessEqual(wcre[-1].mean_abs_err, 0.02 * truth)
        for row in report.rows:
            self.assertGreaterEqual(row.max_abs_err, row.mean_abs_err)
            self.assertGreaterEqual(row.stddev, 0.0)

    @data(["exptilt:1", 2.0], ["identity", 2.0], ["poly:1,1,1", 3.0])
    @unpack
    def test_refusal(self, spec, p):
        """Test weight functions violating the integrability condition are refused."""
        with self.assertRaises(IntegrabilityError):
            run_convergence(0.5, spec, sizes=(10,), reps=1, p=p)

    def test_larger_exponent_accepted(self):
        """Test the identity weight runs once the moment exponent exceeds two."""
        report = run_convergence(2.0, Identity(), sizes=(50,), reps=2, p=3.0)
        self.assertEqual(report.p, 3.0)
        self.assertAlmostEqual(report.rows_for("wcre")[0].truth, 0.5, places=12)

    def test_single_replication(self):
        """Test one replication at the smallest size."""
        report = run_convergence(1.0, "constant:1", sizes=(2,), reps=1)
        self.assertEqual(len(report.rows), 2)
        self.assertEqual([row.estimator for row in report.rows], ["wcre", "wce"])
        for row in report.rows:
            self.assertEqual(row.n, 2)
            self.assertEqual(row.stddev, 0.0)
            self.assertEqual(row.mean_abs_err, row.max_abs_err)
        self.assertAlmostEqual(report.rows[1].truth, np.pi**2 / 6 - 1, places=8)

    def test_deterministic(self):
        """Test equal configurations give identical reports."""
        first = run_convergence(0.5, "gaussian:0.5", sizes=(10, 100), reps=5, seed=3)
        second = run_convergence(0.5, "gaussian:0.5", sizes=(10, 100), reps=5, seed=3)
        self.assertEqual(first.to_csv(), second.to_csv())
        self.assertNotEqual(
            first.to_csv(),
            run_convergence(0.5, "gaussian:0.5", sizes=(10, 100), reps=5, seed=4).to_csv(),
        )

    def test_workers(self):
        """Test the report does not depend on the number of worker processes."""
        serial = run_convergence(1.0, "exptilt:-0.5", sizes=(20, 200), reps=4, seed=9)
        parallel = run_convergence(
            1.0, "exptilt:-0.5", sizes=(20, 200), reps=4, seed=9, max_workers=2
        )
        self.assertEqual(serial.to_csv(), parallel.to_csv())

    def test_prefix_of_sizes(self):
        """Test the streams of a size do not depend on the other sizes."""
        short = run_convergence(0.5, "constant:1", sizes=(30,), reps=3, seed=1)
        longer = run_convergence(0.5, "constant:1", sizes=(30, 60), reps=3, seed=1)
        self.assertEqual(short.rows_for("wcre")[0], longer.rows_for("wcre")[0])


@ddt
class TestConvergenceExperiment(WCEntropyTestCase):
    """Test the experiment class."""

    def test_options(self):
        """Test the experiment options."""
        experiment = ConvergenceExperiment(Gaussian(1.0), rate=2.0)
        self.assertEqual(experiment.experiment_options.rate, 2.0)
        self.assertEqual(experiment.experiment_options.replications, 20)
        self.assertEqual(tuple(experiment.experiment_options.sizes), (100, 1000, 10000, 100000))
        self.assertEqual(experiment.wf, Gaussian(1.0))
        with self.assertRaises(AttributeError):
            experiment.set_experiment_options(repetitions=3)

    def test_experiment_data(self):
        """Test the records and the analysis result of a run."""
        experiment = ConvergenceExperiment("gaussian:2", rate=1.0)
        experiment.set_experiment_options(sizes=(5, 10), replications=3, seed=2)
        experiment_data = experiment.run()
        self.assertEqual(len(experiment_data.data()), 6)
        self.assertEqual(experiment_data.data(0)["metadata"]["n"], 5)
        self.assertEqual(experiment_data.metadata()["wf"], "gaussian:2")
        self.assertEqual(experiment_data.status(), "DONE")
        result = experiment_data.analysis_result(-1)
        self.assertTrue(result["success"])
        self.assertIsInstance(result["value"], ConvergenceReport)
        self.assertEqual(result["quality"], result["value"].quality)

    def test_reanalysis(self):
        """Test analyzing the records again with quadrature truth values."""
        experiment = ConvergenceExperiment("gaussian:2", rate=1.0)
        experiment.set_experiment_options(sizes=(5, 10), replications=3, seed=2)
        experiment_data = experiment.run()
        ConvergenceAnalysis().run(experiment_data, truth_method="quadrature")
        first, second = (result["value"] for result in experiment_data.analysis_result(None))
        self.assertEqual(len(first.rows), len(second.rows))
        for row, other in zip(first.rows, second.rows):
            self.assertAlmostEqual(row.truth, other.truth, places=7)
            self.assertAlmostEqual(row.mean_abs_err, other.mean_abs_err, places=7)

    def test_empty_data(self):
        """Test analyzing a container without records gives a failed result."""
        experiment_data = ExperimentData(ConvergenceExperiment("constant:1"))
        with self.assertLogs("wcentropy", level="ERROR"):
            (result,) = ConvergenceAnalysis().run(experiment_data)
        self.assertFalse(result["success"])
        self.assertIn("No convergence records", str(result["error_message"]))
        self.assertEqual(experiment_data.status(), "EMPTY")

    @data(
        [{"sizes": (1,)}, SampleError],
        [{"sizes": (100, 10)}, SampleError],
        [{"sizes": ()}, SampleError],
        [{"replications": 0}, SampleError],
        [{"seed": -1}, SampleError],
        [{"rate": 0.0}, DomainError],
    )
    @unpack
    def test_invalid_options(self, options, error):
        """Test invalid options raise before any sample is drawn."""
        experiment = ConvergenceExperiment("constant:1")
        experiment.set_experiment_options(**options)
        with self.assertRaises(error):
            experiment.run()


class TestConvergenceReport(WCEntropyTestCase):
    """Test the report container."""

    def setUp(self):
        super().setUp()
        self.report = ConvergenceReport(
            wf="gaussian:1",
            label="σ=1",
            rate=0.5,
            sample_sizes=(10, 100),
            replications=2,
            seed=0,
            rows=[
                ConvergenceRow("wcre", 10, 0.2, 0.3, 0.1, 0.28),
                ConvergenceRow("wcre", 100, 0.05, 0.07, 0.02, 0.28),
                ConvergenceRow("wce", 10, 0.1, 0.2, 0.1, 0.4),
                ConvergenceRow("wce", 100, 0.2, 0.3, 0.02, 0.4),
            ],
        )

    def test_decreasing(self):
        """Test the decrease check of each estimator."""
        self.assertTrue(self.report.is_decreasing("wcre"))
        self.assertFalse(self.report.is_decreasing("wce"))
        np.testing.assert_array_equal(self.report.mean_abs_errors(), [0.2, 0.05])

    def test_csv(self):
        """Test the CSV layout."""
        lines = self.report.to_csv().splitlines()
        self.assertIn("# wf=gaussian:1", lines)
        self.assertIn("# reps=2", lines)
        self.assertIn("# quality=computer_bad", lines)
        self.assertTrue(any(line.startswith("# wce: empirical observation") for line in lines))
        header = lines.index("estimator,n,mean_abs_err,max_abs_err,stddev,truth")
        self.assertEqual(len(lines) - header - 1, 4)
        self.assertEqual(lines[header + 1].split(",")[:2], ["wcre", "10"])
        self.assertEqual(float(lines[header + 2].split(",")[2]), 0.05)

    def test_empty_csv(self):
        """Test a report without rows still writes its header."""
        self.report.rows = []
        header = "estimator,n,mean_abs_err,max_abs_err,stddev,truth\n"
        self.assertTrue(self.report.to_csv().endswith(header))

    def test_to_dict(self):
        """Test the serialized report."""
        serialized = self.report.to_dict()
        self.assertEqual(serialized["sizes"], [10, 100])
        self.assertEqual(serialized["label"], "σ=1")
        self.assertEqual(len(serialized["rows"]), 4)
        self.assertEqual(serialized["rows"][0]["estimator"], "wcre")
        self.assertIn("wce", serialized["notes"])
