"""Central difference sets in Suzuki p-groups A_p(m, theta).

Thin wrappers over the C++ core; every call returns parsed JSON in the same
schema as the suzuki-ds command line tool.
"""

import json

from . import _core
from ._core import SuzukiError

__version__ = "1.0.0"
__all__ = ["SuzukiError", "field_info", "construct", "verify", "search", "validate_table"]


def field_info(field):
    return json.loads(_core.field_info(field))


def construct(kind, field, t=1, z=0, variants="all-ker", seed=None):
    if seed is None:
        return json.loads(_core.construct(kind, field, t, z, variants))
    return json.loads(_core.construct(kind, field, t, z, variants, seed))


def verify(kind, set_json, method="both"):
    text = set_json if isinstance(set_json, str) else json.dumps(set_json)
    return json.loads(_core.verify(kind, text, method))


def search(kind, field, params):
    return json.loads(_core.search(kind, field, list(params)))


def validate_table(field):
    return json.loads(_core.validate_table(field))
