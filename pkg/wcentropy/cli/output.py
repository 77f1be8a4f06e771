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

"""Writing command outputs."""

import io
import logging
import sys
from typing import Any, Optional, Sequence

import numpy as np

from wcentropy import json

LOG = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def manifest_path(output_path: str) -> str:
    """Return the path of the manifest written next to a CSV output."""
    return output_path + ".manifest.json"


def write_text(text: str, path: Optional[str] = None):
    """Write text to a file with LF line endings, or to standard output if ``path`` is None."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(text)
    LOG.info("Wrote %s", path)


def format_table(columns: Sequence[str], table: np.ndarray, fmt: Any = FLOAT_FORMAT) -> str:
    """Return a CSV table with a header row and 17 significant digit decimals."""
    buffer = io.StringIO()
    np.savetxt(
        buffer,
        np.atleast_2d(table),
        fmt=fmt,
        delimiter=",",
        header=",".join(columns),
        comments="",
    )
    return buffer.getvalue()


def format_json(obj: Any) -> str:
    """Return ``obj`` as indented JSON followed by a newline."""
    return json.dumps(obj) + "\n"
