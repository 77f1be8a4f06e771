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

"""Reading sample files.

A sample file is UTF-8 text holding decimal numbers separated by commas and/or
whitespace. Everything from a ``#`` to the end of the line is a comment. Each
non-empty line is one row of the sample grid.
"""

import logging
import math
import re
from typing import List

from wcentropy.exceptions import SampleFileError

LOG = logging.getLogger(__name__)

_TOKEN = re.compile(r"[^,\s]+")
_EMPTY_FIELD = re.compile(r",\s*(?=,)")


def read_sample_grid(path: str) -> List[List[float]]:
    """Read the rows of a sample file.

    Args:
        path: The file path.

    Returns:
        One list of values per line holding data, in file order.

    Raises:
        SampleFileError: If the file cannot be read, a token is not a number, a
            value is negative or not finite, or the file holds no values. The message
            carries the path, line and column of the offending token.
    """
    try:
        with open(path, "r", encoding="utf-8") as file:
            lines = file.read().splitlines()
    except (OSError, UnicodeDecodeError) as ex:
        raise SampleFileError(f"cannot read sample file: {ex}", path=path) from ex

    rows = []
    for line_number, line in enumerate(lines, start=1):
        content = line.split("#", 1)[0]
        empty = _EMPTY_FIELD.search(content)
        if empty:
            raise SampleFileError("empty field", path, line_number, empty.start() + 1)
        row = []
        for match in _TOKEN.finditer(content):
            token = match.group()
            column = match.start() + 1
            try:
                value = float(token)
            except ValueError as ex:
                raise SampleFileError(
                    f"'{token}' is not a decimal number", path, line_number, column
                ) from ex
            if not math.isfinite(value):
                raise SampleFileError(f"value {token} is not finite", path, line_number, column)
            if value < 0:
                raise SampleFileError(
                    f"negative value {token}, samples must be nonnegative",
                    path,
                    line_number,
                    column,
                )
            row.append(value)
        if row:
            rows.append(row)

    if not rows:
        raise SampleFileError("sample file holds no values", path=path)
    LOG.debug("Read %d values in %d rows from %s", sum(map(len, rows)), len(rows), path)
    return rows


def parse_sample_file(path: str) -> List[float]:
    """Read the values of a sample file in file order.

    Args:
        path: The file path.

    Returns:
        The values in the order they appear in the file.

    Raises:
        SampleFileError: See :func:`read_sample_grid`.
    """
    return [value for row in read_sample_grid(path) for value in row]
