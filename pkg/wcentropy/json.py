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
# pylint: disable=method-hidden

"""Result serialization methods."""

import dataclasses
import enum
import json
from typing import Any

import numpy as np


class NumpyEncoder(json.JSONEncoder):
    """JSON Encoder for numpy values, enums and result dataclasses.

    Objects exposing a ``to_dict`` method are serialized through it, so the
    result containers of this package control their own JSON layout.
    """

    def default(self, obj: Any) -> Any:  # pylint: disable=arguments-differ
        if hasattr(obj, "to_dict"):
            return obj.to_dict()
        if dataclasses.is_dataclass(obj):
            return dataclasses.asdict(obj)
        if isinstance(obj, enum.Enum):
            return obj.value
        if isinstance(obj, np.generic):
            return obj.item()
        if hasattr(obj, "tolist"):
            return obj.tolist()
        return super().default(obj)


def dumps(obj: Any, **kwargs) -> str:
    """Serialize ``obj`` to a JSON string with :class:`NumpyEncoder`.

    Floats are written with ``repr`` precision, which round-trips doubles exactly.
    """
    kwargs.setdefault("indent", 2)
    kwargs.setdefault("ensure_ascii", False)
    return json.dumps(obj, cls=NumpyEncoder, **kwargs)
