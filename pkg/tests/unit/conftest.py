# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Testing helpers"""

import logging

import pytest

from flag_positivity import profiler
from flag_positivity.flag_variety import gkm_graph

from utils import full_flag, grassmannian


@pytest.fixture
def gr24():
    return gkm_graph(grassmannian(2, 4))


@pytest.fixture
def p1():
    return gkm_graph(grassmannian(1, 2))


@pytest.fixture
def a2_flag():
    return gkm_graph(full_flag("A", 2))


@pytest.fixture(autouse=True)
def _root_logger_restored():
    handlers, level = logging.root.handlers[:], logging.root.level
    yield
    logging.root.handlers[:] = handlers
    logging.root.setLevel(level)


@pytest.fixture(autouse=True)
def _profiler_disabled():
    profiler.ProfilerManager.set_enabled(False)
    profiler.ProfilerManager.reset()
    yield
    profiler.ProfilerManager.set_enabled(False)
    profiler.ProfilerManager.reset()
