# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

import logging

import pytest

import flag_positivity.profiler as test_module


def _work():
    return sum(range(1000))


def test_profileit_disabled():
    with test_module.profileit("outer"):
        _work()
    assert test_module.ProfilerManager.perf_table.empty


def test_profileit_records_nesting():
    test_module.ProfilerManager.set_enabled(True)

    @test_module.profileit(name="inner")
    def inner():
        return _work()

    with test_module.profileit("outer"):
        inner()
        inner()

    table = test_module.ProfilerManager.perf_table
    assert list(table.columns) == ["label", "time", "memory", "parent_labels"]
    assert list(table["label"]) == ["inner", "inner", "outer"]
    assert list(table["parent_labels"]) == ["outer", "outer", ""]
    assert (table["time"] >= 0).all()


def test_stop_out_of_order():
    manager = test_module.ProfilerManager
    outer = manager.start("outer")
    manager.start("inner")
    with pytest.raises(KeyError, match="outer is not the innermost"):
        manager.stop("outer", outer)


def test_show_stats(caplog):
    test_module.ProfilerManager.set_enabled(True)
    with test_module.profileit("gkm"):
        _work()

    with caplog.at_level(logging.INFO, logger=test_module.__name__):
        test_module.ProfilerManager.show_stats()

    text = caplog.text
    assert "PROFILER STATS" in text
    assert "| gkm" in text


def test_show_stats_disabled(caplog):
    with caplog.at_level(logging.INFO, logger=test_module.__name__):
        test_module.ProfilerManager.show_stats()
    assert caplog.text == ""
