# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

from fractions import Fraction

import flag_positivity.utils as test_module


def test_canonical_json():
    assert test_module.canonical_json({"b": [1, 2], "a": None}) == '{"b":[1,2],"a":null}'


def test_dump_json():
    text = test_module.dump_json({"status": "ample", "global_min": 1})
    assert text == '{\n  "status": "ample",\n  "global_min": 1\n}\n'


def test_fraction_to_dict():
    assert test_module.fraction_to_dict(Fraction(3, 6)) == {"numerator": 1, "denominator": 2}
    assert test_module.fraction_to_dict(2) == {"numerator": 2, "denominator": 1}
    assert test_module.fraction_to_dict(Fraction(-1)) == {"numerator": -1, "denominator": 1}
