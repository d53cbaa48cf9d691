# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

import json

from flag_positivity import utils
import flag_positivity.flag_variety.export as test_module


def test_gkm_to_dict__p1(p1):
    assert test_module.gkm_to_dict(p1) == {
        "cartan_type": "A1",
        "omitted": [1],
        "nodes": [{"id": 0, "word": [], "length": 0}, {"id": 1, "word": [1], "length": 1}],
        "edges": [{"id": 0, "source": 0, "target": 1, "root": [1]}],
    }


def test_gkm_to_dict__field_order(gr24):
    data = test_module.gkm_to_dict(gr24)
    assert list(data) == ["cartan_type", "omitted", "nodes", "edges"]
    assert list(data["nodes"][0]) == ["id", "word", "length"]
    assert list(data["edges"][0]) == ["id", "source", "target", "root"]
    assert len(data["nodes"]) == 6
    assert len(data["edges"]) == 12


def test_gkm_to_dict__json_round_trip(gr24):
    text = utils.dump_json(test_module.gkm_to_dict(gr24))
    assert utils.dump_json(json.loads(text)) == text


def test_gkm_to_dot__p1(p1):
    assert test_module.gkm_to_dot(p1) == (
        'graph "A1/P(omit 1)" {\n'
        "  rankdir=BT;\n"
        '  0 [label="e"];\n'
        '  1 [label="s1"];\n'
        "  { rank=same; 0 }\n"
        "  { rank=same; 1 }\n"
        '  0 -- 1 [label="1"];\n'
        "}\n"
    )


def test_gkm_to_dot__a2(a2_flag):
    dot = test_module.gkm_to_dot(a2_flag)
    assert dot.count(" -- ") == 9
    assert "{ rank=same; 1 2 }" in dot
    assert '5 [label="s1s2s1"]' in dot
    assert '[label="1,1"]' in dot
