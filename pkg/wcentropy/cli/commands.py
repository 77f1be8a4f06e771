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

"""The commands of the ``wcentropy`` command line tool.

Every command takes a :class:`RunConfig`, writes its output and returns the
process exit status. Errors are raised and mapped to exit statuses by
:func:`wcentropy.cli.main`.
"""

import logging
from typing import List

import numpy as np

from wcentropy.cli.config import RunConfig
from wcentropy.cli.output import format_json, format_table, manifest_path, write_text
from wcentropy.cli.sample_file import parse_sample_file, read_sample_grid
from wcentropy.closed_form import Exponential, check_equilibrium_identity, check_kl_identity
from wcentropy.convergence import run_convergence
from wcentropy.empirical import (
    OrderedSample,
    arrange,
    prefix_curves,
    wce_orderstats,
    wce_piecewise,
    wcre_orderstats,
    wcre_piecewise,
)
from wcentropy.exceptions import IntegrabilityError, SelfCheckError
from wcentropy.weight_functions import check_integrability

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUSED = 2
EXIT_NUMERICAL = 3

# Largest accepted disagreement between the order-statistics and piecewise estimates
SELF_CHECK_TOLERANCE = 1e-8


def _load_values(cfg: RunConfig) -> List[float]:
    if cfg.prefix_order == "row-major":
        return parse_sample_file(cfg.source)
    return arrange(read_sample_grid(cfg.source), cfg.prefix_order)


def cmd_estimate(cfg: RunConfig) -> int:
    """Estimate the WCRE and WCE of the whole sample for each weight function.

    The order-statistics estimates are cross-checked against the piecewise integral
    of the empirical survival function and distribution function. Weight functions
    violating the integrability condition are reported with a warning; the estimate
    of a finite sample exists regardless.

    Raises:
        SelfCheckError: If the two evaluations disagree by more than 1e-8.
        NumericalError: If an estimate is not finite.
    """
    sample = OrderedSample(parse_sample_file(cfg.source))
    results = []
    for wf in cfg.weight_functions:
        verdict = check_integrability(wf, cfg.p, cfg.a)
        if not verdict:
            LOG.warning(
                "%s violates the integrability condition (%s); the empirical value is "
                "computed but convergence to the population value is not guaranteed.",
                wf.spec,
                verdict.reason,
            )
        estimates = []
        for fast, oracle in ((wcre_orderstats, wcre_piecewise), (wce_orderstats, wce_piecewise)):
            estimate = fast(sample, wf)
            reference = oracle(sample, wf)
            discrepancy = abs(estimate.value - reference.value)
            if not discrepancy <= SELF_CHECK_TOLERANCE:
                LOG.error(
                    "Self-check failed for %s %s: %.17g vs %.17g",
                    estimate.kind.value,
                    wf.spec,
                    estimate.value,
                    reference.value,
                )
                raise SelfCheckError(
                    f"{estimate.kind.value} of {wf.spec}: order statistics and piecewise "
                    f"estimates differ by {discrepancy:.3g}."
                )
            estimates.append(estimate)
        results.append(
            {
                "wf": wf.spec,
                "label": wf.label,
                "n": sample.n,
                "integrability": {"valid": verdict.valid, "reason": verdict.reason, "p": cfg.p},
                "estimates": estimates,
            }
        )

    if cfg.format == "json":
        text = format_json({"input": cfg.source, "results": results})
    else:
        lines = ["wf,n,wcre,wce,valid"]
        for result in results:
            wcre, wce = result["estimates"]
            lines.append(
                f"{result['wf']},{result['n']},{wcre.value:.17g},{wce.value:.17g},"
                f"{str(result['integrability']['valid']).lower()}"
            )
        text = "\n".join(lines) + "\n"
    write_text(text, cfg.output_path)
    return EXIT_OK


def cmd_curves(cfg: RunConfig) -> int:
    """Write the prefix curves of the sample for each weight function.

    With a single weight function the CSV columns are ``n,wcre,wce``. With several,
    each weight function contributes a ``wcre[spec]`` and a ``wce[spec]`` column. A
    JSON manifest naming the series is written next to CSV output files.
    """
    raw = _load_values(cfg)
    wfs = cfg.weight_functions
    curves = [prefix_curves(raw, wf, cfg.n_min) for wf in wfs]

    if cfg.format == "json":
        series = [
            {"wf": wf.spec, "label": wf.label, "points": [point.to_row() for point in points]}
            for wf, points in zip(wfs, curves)
        ]
        payload = {
            "input": cfg.source,
            "prefix_order": cfg.prefix_order,
            "columns": ["n", "wcre", "wce"],
            "series": series,
        }
        write_text(format_json(payload), cfg.output_path)
        return EXIT_OK

    columns = ["n"]
    manifest = []
    for wf in wfs:
        for estimator in ("wcre", "wce"):
            column = estimator
            if len(wfs) > 1:
                column = f"{estimator}[{wf.spec.replace(',', ';')}]"
            columns.append(column)
            manifest.append(
                {"wf": wf.spec, "label": wf.label, "estimator": estimator, "column": column}
            )
    table = np.column_stack(
        [[point.n for point in curves[0]]]
        + [
            [getattr(point, estimator) for point in points]
            for points in curves
            for estimator in ("wcre", "wce")
        ]
    )
    fmt = ["%d"] + ["%.17g"] * (len(columns) - 1)
    write_text(format_table(columns, table, fmt), cfg.output_path)

    if cfg.output_path is not None:
        write_text(
            format_json(
                {
                    "data": cfg.output_path,
                    "input": cfg.source,
                    "prefix_order": cfg.prefix_order,
                    "n_min": cfg.n_min,
                    "series": manifest,
                }
            ),
            manifest_path(cfg.output_path),
        )
    return EXIT_OK


def cmd_convergence(cfg: RunConfig) -> int:
    """Run the convergence experiment for each weight function and rate.

    Every weight function is checked against the integrability condition before
    any experiment runs, so a refusal leaves no partial output.

    Raises:
        IntegrabilityError: If a weight function violates the integrability condition.
    """
    for wf in cfg.weight_functions:
        verdict = check_integrability(wf, cfg.p, cfg.a)
        if not verdict:
            LOG.error("Refusing %s: %s", wf.spec, verdict)
            raise IntegrabilityError(
                f"{wf.spec} violates the integrability condition for p={cfg.p:g}: {verdict.reason}"
            )

    reports = [
        run_convergence(
            rate,
            wf,
            sizes=cfg.sizes,
            reps=cfg.reps,
            seed=cfg.seed,
            p=cfg.p,
            a=cfg.a,
            max_workers=cfg.max_workers,
        )
        for wf in cfg.weight_functions
        for rate in cfg.rates
    ]

    if cfg.format == "json":
        text = format_json(reports if len(reports) > 1 else reports[0])
    else:
        text = "".join(report.to_csv() for report in reports)
    write_text(text, cfg.output_path)
    return EXIT_OK


def cmd_identities(cfg: RunConfig) -> int:
    """Check the divergence and equilibrium identities over the weight function and rate grid.

    Returns:
        0 if every non-divergent check passes, 3 otherwise. Divergent checks are
        reported and excluded from the decision.
    """
    reports = []
    for wf in cfg.weight_functions:
        for rate in cfg.rates:
            pop = Exponential(rate)
            for check in (check_kl_identity, check_equilibrium_identity):
                report = check(pop, wf, tolerance=cfg.tolerance)
                if report.status == "fail":
                    LOG.error(
                        "%s identity fails for %s and %s: discrepancy %.3g",
                        report.name,
                        pop.spec,
                        wf.spec,
                        report.abs_discrepancy,
                    )
                reports.append(report)

    if cfg.format == "json":
        text = format_json(reports)
    else:
        lines = ["identity,population,wf,lhs,rhs,abs_discrepancy,tolerance,status"]
        for report in reports:
            values = [report.lhs, report.rhs, report.abs_discrepancy]
            fields = ["" if value is None else f"{value:.17g}" for value in values]
            lines.append(
                ",".join(
                    [report.name, report.population, report.wf]
                    + fields
                    + [f"{report.tolerance:g}", report.status]
                )
            )
        text = "\n".join(lines) + "\n"
    write_text(text, cfg.output_path)

    if any(report.status == "fail" for report in reports):
        return EXIT_NUMERICAL
    return EXIT_OK
