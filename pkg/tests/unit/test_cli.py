# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

import json
import logging
import re

import click
import pytest

from flag_positivity import __version__, profiler
from flag_positivity.bundles import TautQuot
from flag_positivity.root_system import CartanType
import flag_positivity.cli as test_module

from utils import grassmannian


def _run(capsys, argv):
    code = test_module.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_args__describe():
    query = test_module.parse_args(["--type", "A3", "--omit", "2", "describe"])
    assert query.cartan == CartanType("A", 3)
    assert query.parabolic == grassmannian(2, 4)
    assert query.command == "describe"
    assert query.output == "table"
    assert query.bundle is None
    assert query.options == test_module.Options()


def test_parse_args__seshadri_all():
    argv = "--type A3 --omit 2 seshadri --bundle Q --point all --json".split()
    query = test_module.parse_args(argv)
    assert query.command == "seshadri"
    assert query.bundle == TautQuot()
    assert query.bundle_text == "Q"
    assert query.point == "all"
    assert query.output == "json"


def test_parse_args__defaults_to_full_flag():
    query = test_module.parse_args(["--type", "A2", "curves", "--dot"])
    assert query.parabolic.levi_set == frozenset()
    assert query.output == "dot"


def test_parse_args__options():
    argv = (
        "--type A3 --omit 1,3 --max-cosets 100 --parallel --splits 4 -a n_workers=2 --profile "
        "nef --bundle L[1,0,1]"
    ).split()
    query = test_module.parse_args(argv)
    assert query.parabolic.omitted == (1, 3)
    assert query.options == test_module.Options(
        max_cosets=100, parallel=True, splits=4, executor_args=("n_workers=2",), profile=True
    )
    assert query.options.table_kwargs == {
        "parallel": True,
        "splits": 4,
        "executor_args": ("n_workers=2",),
    }


@pytest.mark.parametrize(
    "argv, flag",
    [
        ("--type H2 describe", "--type"),
        ("--type E9 describe", "--type"),
        ("--type A2xA1 describe", "--type"),
        ("--type A3 --omit 5 describe", "--omit"),
        ("--type A3 --omit a,b describe", "--omit"),
        ("--type A3 --omit 2 nef --bundle Q+", "--bundle"),
        ("--type A3 --omit 2 seshadri --bundle Q --point x", "--point"),
        ("--type A3 --omit 2 seshadri --bundle Q --point -1", "--point"),
        ("--type A3 --omit 2 seshadri --bundle Q", "--point"),
        ("--type A3 --omit 2 nef", "--bundle"),
        ("--type A3 --max-cosets 0 describe", "--max-cosets"),
    ],
)
def test_parse_args__usage_errors(argv, flag):
    with pytest.raises(click.ClickException) as e:
        test_module.parse_args(argv.split())
    assert e.value.exit_code == 2
    assert flag in e.value.format_message() or flag in str(getattr(e.value, "param_hint", ""))


@pytest.mark.parametrize(
    "argv",
    [
        "--type A3 describe --bundle Q",
        "--type A3 export-gkm --json",
        "--type A3 curves --json --dot",
        "--type A3 --omit 2",
        "describe",
    ],
)
def test_main__usage_exit_code(capsys, argv):
    code, out, err = _run(capsys, argv.split())
    assert code == 2
    assert out == ""
    assert "Error" in err


def test_main__help(capsys):
    code, out, _ = _run(capsys, ["--help"])
    assert code == 0
    assert "Exit codes" in out
    assert "3  |W/W_P| exceeds --max-cosets" in out


def test_describe(capsys):
    code, out, _ = _run(capsys, "--type A3 --omit 2 describe".split())
    assert code == 0
    assert out.startswith("6 fixed points, 12 invariant curves\n")
    assert "dim 4" in out
    assert "|W| = 24, |W_P| = 4" in out


def test_describe__json(capsys):
    code, out, _ = _run(capsys, "--type E6 --omit 1 describe --json".split())
    assert code == 0
    assert json.loads(out) == {
        "cartan_type": "E6",
        "omitted": [1],
        "dimension": 16,
        "weyl_order": 51840,
        "levi_weyl_order": 1920,
        "fixed_points": 27,
        "invariant_curves": 216,
    }


def test_curves(capsys):
    code, out, _ = _run(capsys, "--type A2 curves".split())
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "A2/P(omit 1,2): 6 fixed points, 9 invariant curves"
    assert len(lines) == 10
    assert lines[1] == "curve 0: x0 (e) -- x2 (s2), root (0,1)"

    code, out, _ = _run(capsys, "--type A2 curves --json".split())
    edges = json.loads(out)
    assert len(edges) == 9
    assert edges[0] == {"id": 0, "source": 0, "target": 2, "root": [0, 1]}


def test_ample__quotient(capsys):
    code, out, _ = _run(capsys, "--type A3 --omit 2 ample --bundle Q --json".split())
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["status", "global_min", "witness", "table_digest"]
    assert data["status"] == "nef-not-ample"
    assert data["witness"]["entry"] == 0

    code, out, _ = _run(capsys, "--type A3 --omit 2 ample --bundle Q".split())
    assert code == 0
    assert "Q on A3/P(omit 2): nef-not-ample" in out
    assert out.strip().endswith("ample: no")


def test_nef__table_and_json_agree(capsys):
    argv = "--type A3 --omit 2 nef --bundle dual(S)*det(Q)".split()
    _, table_out, _ = _run(capsys, argv)
    _, json_out, _ = _run(capsys, argv + ["--json"])
    data = json.loads(json_out)
    match = re.search(r"global min (-?\d+) \(witness: curve (\d+), entry (-?\d+)\)", table_out)
    assert match is not None
    assert int(match.group(1)) == data["global_min"] == 1
    assert int(match.group(2)) == data["witness"]["curve"]
    assert int(match.group(3)) == data["witness"]["entry"]
    assert f"table digest {data['table_digest']}" in table_out
    assert table_out.strip().endswith("nef: yes")


def test_restrict(capsys):
    code, out, _ = _run(capsys, "--type A3 --omit 2 restrict --bundle T --json".split())
    assert code == 0
    assert json.loads(out) == {str(i): [2, 1, 1, 0] for i in range(12)}

    code, out, _ = _run(capsys, "--type A3 --omit 2 restrict --bundle T".split())
    assert code == 0
    assert out.startswith("A3/P(omit 2): 6 fixed points, 12 invariant curves\n")
    assert "[2, 1, 1, 0]" in out


def test_seshadri(capsys):
    code, out, _ = _run(capsys, "--type A3 --omit 3 seshadri --bundle Q --point 0 --json".split())
    assert code == 0
    data = json.loads(out)
    assert data["point"] == 0
    assert data["value"] == {"numerator": 1, "denominator": 1}

    code, out, _ = _run(capsys, "--type A3 --omit 2 seshadri --bundle Q --point all --json".split())
    assert code == 0
    data = json.loads(out)
    assert [p["point"] for p in data["points"]] == list(range(6))
    assert all(p["value"] == {"numerator": 0, "denominator": 1} for p in data["points"])
    assert data["minimum"] == {"numerator": 0, "denominator": 1}

    code, out, _ = _run(capsys, "--type A1 --omit 1 seshadri --bundle L[3] --point all".split())
    assert code == 0
    assert out.split("\n")[:3] == [
        "x0: epsilon = 3 (curves 0)",
        "x1: epsilon = 3 (curves 0)",
        "min over fixed points: 3",
    ]


def test_seshadri__not_nef(capsys):
    code, out, err = _run(capsys, "--type A1 --omit 1 seshadri --bundle L[-1] --point 0".split())
    assert code == 1
    assert out == ""
    assert "requires a nef bundle" in err
    assert "witness: curve 0, entry -1" in err


def test_seshadri__unknown_point(capsys):
    code, _, err = _run(capsys, "--type A3 --omit 2 seshadri --bundle Q --point 6".split())
    assert code == 2
    assert "Unknown fixed point 6" in err


def test_bundle_outside_grassmannian(capsys):
    code, _, err = _run(capsys, "--type B3 --omit 1 nef --bundle Q".split())
    assert code == 2
    assert "only defined on Grassmannians" in err


def test_line_not_a_character(capsys):
    code, _, err = _run(capsys, "--type A3 --omit 2 nef --bundle L[1,0,0]".split())
    assert code == 2
    assert "Levi node(s) [1]" in err


def test_enumeration_cap(capsys):
    code, out, err = _run(capsys, "--type E8 describe".split())
    assert code == 3
    assert out == ""
    assert "696729600" in err

    code, _, err = _run(capsys, "--type A3 --max-cosets 5 describe".split())
    assert code == 3
    assert "|W/W_P| = 24" in err


def test_export_gkm(capsys):
    code, out, _ = _run(capsys, "--type A3 --omit 2 export-gkm".split())
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["cartan_type", "omitted", "nodes", "edges"]
    assert len(data["nodes"]) == 6
    assert len(data["edges"]) == 12

    code, out, _ = _run(capsys, "--type A3 --omit 2 export-gkm --dot".split())
    assert code == 0
    assert out.startswith('graph "A3/P(omit 2)" {\n')
    assert out.count(" -- ") == 12


@pytest.mark.parametrize(
    "argv",
    [
        "--type A3 --omit 2 export-gkm",
        "--type A3 --omit 2 nef --bundle T --json",
        "--type A3 --omit 2 restrict --bundle sym(2,Q)+S --json",
        "--type A3 --omit 3 seshadri --bundle Q --point all --json",
        "--type A2 describe --json",
    ],
)
def test_json_deterministic_and_round_trips(capsys, argv):
    _, first, _ = _run(capsys, argv.split())
    _, second, _ = _run(capsys, argv.split())
    assert first == second
    assert json.dumps(json.loads(first), indent=2) + "\n" == first


def test_verbose_sets_log_level(capsys):
    _run(capsys, "-vv --type A1 describe".split())
    assert logging.getLogger().level == logging.DEBUG
    _run(capsys, "-v --type A1 describe".split())
    assert logging.getLogger().level == logging.INFO


def test_profile(capsys):
    code, out, err = _run(capsys, "--profile --type A3 --omit 2 nef --bundle Q".split())
    assert code == 0
    labels = set(profiler.ProfilerManager.perf_table["label"])
    assert {"invariant_curves", "restriction_table", "positivity"} <= labels
    assert "PROFILER STATS" in err
    assert "PROFILER STATS" not in out
    assert logging.getLogger().level == logging.INFO


def test_version(capsys):
    code, out, _ = _run(capsys, ["--version"])
    assert code == 0
    assert out.strip() == f"flag-positivity, version {__version__}"


def test_large_weights_stay_exact(capsys):
    big = 2**62
    code, out, _ = _run(capsys, ["--type", "A2", "nef", "--bundle", f"L[{big},{big}]", "--json"])
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "ample"
    assert data["global_min"] == big

    code, out, _ = _run(capsys, ["--type", "A1", "restrict", "--bundle", f"L[-{3**60}]", "--json"])
    assert code == 0
    assert json.loads(out) == {"0": [-(3**60)]}
