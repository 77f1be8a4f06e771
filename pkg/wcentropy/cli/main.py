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

"""Argument parsing and dispatch of the ``wcentropy`` command line tool."""

import argparse
import logging
import sys
from typing import List, Optional

from wcentropy.cli import commands
from wcentropy.cli.config import COMMANDS, FORMATS, RunConfig
from wcentropy.empirical import PrefixOrder
from wcentropy.exceptions import (
    EntropyError,
    IntegrabilityError,
    NumericalError,
    SelfCheckError,
    UsageError,
)
from wcentropy.version import __version__

LOG = logging.getLogger(__name__)

_DISPATCH = {
    "estimate": commands.cmd_estimate,
    "curves": commands.cmd_curves,
    "convergence": commands.cmd_convergence,
    "identities": commands.cmd_identities,
}


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising :class:`UsageError` instead of exiting."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the command line tool."""
    parser = _ArgumentParser(
        prog="wcentropy",
        description="Weighted cumulative (residual) entropy estimation and checks.",
    )
    parser.add_argument("command", choices=COMMANDS, help="Command to run.")
    parser.add_argument("--input", dest="input_path", help="Sample file (default: bundled data).")
    parser.add_argument(
        "--wf",
        dest="wf_specs",
        action="append",
        default=[],
        metavar="SPEC",
        help="Weight function as family:param[,param...]; repeat for several.",
    )
    parser.add_argument("--n-min", type=int, default=2, help="Smallest prefix length.")
    parser.add_argument(
        "--lambda",
        dest="rates",
        type=float,
        action="append",
        default=[],
        metavar="RATE",
        help="Exponential rate; repeat for several.",
    )
    parser.add_argument(
        "--sizes", default="100,1000,10000,100000", help="Comma separated sample sizes."
    )
    parser.add_argument("--reps", type=int, default=20, help="Replications per sample size.")
    parser.add_argument("--seed", type=int, default=0, help="Root seed of the random streams.")
    parser.add_argument("--out", dest="output_path", help="Output file (default: stdout).")
    parser.add_argument("--format", choices=FORMATS, default="csv", help="Output format.")
    parser.add_argument(
        "--p", type=float, default=2.0, help="Moment exponent of the integrability condition."
    )
    parser.add_argument(
        "--prefix-order",
        choices=[order.value for order in PrefixOrder],
        default=PrefixOrder.ROW_MAJOR.value,
        help="Reading order of the sample grid for prefix curves; sorted takes the n smallest.",
    )
    parser.add_argument(
        "--workers", dest="max_workers", type=int, default=1, help="Worker processes."
    )
    parser.add_argument(
        "--tolerance", type=float, default=1e-8, help="Tolerance of the identity checks."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    """Parse command line arguments into a :class:`RunConfig`.

    Raises:
        UsageError: If the arguments are invalid.
        WeightFunctionError: If a weight function specification cannot be parsed.
    """
    args = vars(build_parser().parse_args(argv))
    args.pop("verbose")
    return RunConfig(**args)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line tool.

    Args:
        argv: The arguments without the program name, ``sys.argv[1:]`` if None.

    Returns:
        The exit status: 0 on success, 1 for usage and input errors and divergent
        integrals, 2 when a weight function is refused for violating the
        integrability condition, 3 when a numerical self-check fails or a result is not finite.
    """
    argv = sys.argv[1:] if argv is None else argv
    verbose = "-v" in argv or "--verbose" in argv
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        cfg = parse_config(argv)
        LOG.debug("Run configuration: %s", cfg)
        return _DISPATCH[cfg.command](cfg)
    except IntegrabilityError as ex:
        print(f"wcentropy: refused: {ex}", file=sys.stderr)
        return commands.EXIT_REFUSED
    except SelfCheckError as ex:
        print(f"wcentropy: self-check failed: {ex}", file=sys.stderr)
        return commands.EXIT_NUMERICAL
    except NumericalError as ex:
        print(f"wcentropy: numerical error: {ex}", file=sys.stderr)
        return commands.EXIT_NUMERICAL
    except (EntropyError, OSError) as ex:
        print(f"wcentropy: error: {ex}", file=sys.stderr)
        return commands.EXIT_USAGE
