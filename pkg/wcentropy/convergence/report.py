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

"""Monte Carlo convergence reports."""

import io
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Tuple

import numpy as np

CSV_COLUMNS = ("estimator", "n", "mean_abs_err", "max_abs_err", "stddev", "truth")

# Notes attached to the estimators of a report
ESTIMATOR_NOTES = {
    "wcre": "almost sure convergence under the integrability condition",
    "wce": "empirical observation, not covered by the almost sure convergence theorem",
}


@dataclass(frozen=True)
class ConvergenceRow:
    """Error statistics of one estimator at one sample size."""

    # "wcre" or "wce"
    estimator: str

    n: int
    mean_abs_err: float
    max_abs_err: float

    # Standard deviation of the estimates across replications
    stddev: float

    truth: float


@dataclass
class ConvergenceReport:
    """Summary of the absolute errors of the empirical estimators across sample sizes."""

    # Weight function specification and legend label
    wf: str
    label: str

    rate: float
    sample_sizes: Tuple[int, ...]
    replications: int
    seed: int

    # Moment exponent of the integrability condition the run was gated on
    p: float = 2.0

    # WCRE rows sorted by n, followed by the WCE rows sorted by n
    rows: List[ConvergenceRow] = field(default_factory=list)

    # "computer_good" if the WCRE mean absolute error strictly decreases with n
    quality: str = "computer_bad"

    def rows_for(self, estimator: str) -> List[ConvergenceRow]:
        """Return the rows of one estimator in increasing n."""
        return [row for row in self.rows if row.estimator == estimator]

    def mean_abs_errors(self, estimator: str = "wcre") -> np.ndarray:
        """Return the mean absolute errors of one estimator in increasing n."""
        return np.array([row.mean_abs_err for row in self.rows_for(estimator)])

    def is_decreasing(self, estimator: str = "wcre") -> bool:
        """Return True if the mean absolute error strictly decreases along the sizes."""
        return bool(np.all(np.diff(self.mean_abs_errors(estimator)) < 0))

    def config(self) -> Dict[str, Any]:
        """Return the configuration the report was produced with."""
        return {
            "wf": self.wf,
            "rate": self.rate,
            "sizes": list(self.sample_sizes),
            "reps": self.replications,
            "seed": self.seed,
            "p": self.p,
        }

    def header_lines(self) -> List[str]:
        """Return the comment lines echoing the configuration."""
        lines = [f"# {key}={value}" for key, value in self.config().items()]
        lines.append(f"# quality={self.quality}")
        lines.extend(f"# {name}: {note}" for name, note in ESTIMATOR_NOTES.items())
        return lines

    def to_csv(self) -> str:
        """Return the report as CSV text with a commented configuration header."""
        table = np.array(
            [[getattr(row, col) for col in CSV_COLUMNS] for row in self.rows], dtype=object
        )
        buffer = io.StringIO()
        header = "\n".join(self.header_lines() + [",".join(CSV_COLUMNS)])
        if table.size:
            np.savetxt(
                buffer,
                table,
                fmt=["%s", "%d", "%.17g", "%.17g", "%.17g", "%.17g"],
                delimiter=",",
                header=header,
                comments="",
            )
        else:
            buffer.write(header + "\n")
        return buffer.getvalue()

    def to_dict(self) -> Dict[str, Any]:
        """Return a JSON serializable dictionary of the report."""
        out = self.config()
        out["label"] = self.label
        out["quality"] = self.quality
        out["notes"] = dict(ESTIMATOR_NOTES)
        out["rows"] = [asdict(row) for row in self.rows]
        return out
