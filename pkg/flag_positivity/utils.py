# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Various utility functions"""

import json
from fractions import Fraction
from typing import Any


def canonical_json(data: Any) -> str:
    """Compact JSON with the insertion order of the dicts kept (used for digests)."""
    return json.dumps(data, separators=(",", ":"), ensure_ascii=True)


def dump_json(data: Any, indent: int = 2) -> str:
    """JSON document as printed by the CLI; re-dumping its parse gives the same text."""
    return json.dumps(data, indent=indent, ensure_ascii=True) + "\n"


def fraction_to_dict(value: Fraction) -> dict:
    """Exact rational as {numerator, denominator}"""
    value = Fraction(value)
    return {"numerator": value.numerator, "denominator": value.denominator}
