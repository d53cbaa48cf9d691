# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Customized profiling"""

import logging
import resource
import time
from contextlib import ContextDecorator

import pandas as pd

logger_profiling = logging.getLogger(__name__)

_COLUMNS = ["label", "time", "memory", "parent_labels"]


class _ResourceProfiler:
    """CPU/Memory profiling of a single labelled section"""

    def __init__(self, enabled=False):
        """Class initialization."""
        self._enabled = enabled
        self._start_mem = None
        self._start_time = None
        self.diff_mem = None
        self.diff_time = None

    def start(self):
        """Start profiling."""
        if not self._enabled:
            return
        self._start_mem = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024**2
        self._start_time = time.perf_counter()

    def stop(self):
        """Stop profiling."""
        if not self._enabled:
            return
        self.diff_time = time.perf_counter() - self._start_time
        end_mem = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024**2
        self.diff_mem = end_mem - self._start_mem
        self._start_time = self._start_mem = None


class _ProfilerManager:
    """Collects the timings of all profiled sections of a run"""

    def __init__(self):
        """Start disabled and empty"""
        self._enable = False
        self._records = []
        self._parent_labels = []

    @property
    def perf_table(self):
        """Performance records as a DataFrame"""
        return pd.DataFrame(self._records, columns=_COLUMNS)

    def set_enabled(self, enable):
        """Enables profiling"""
        self._enable = enable

    def reset(self):
        """Drop all records"""
        self._records = []
        self._parent_labels = []

    def start(self, name):
        """Starts profiling a section, returning its profiler"""
        self._parent_labels.append(name)
        pinfo = _ResourceProfiler(enabled=self._enable)
        pinfo.start()
        return pinfo

    def stop(self, name, pinfo):
        """Stops profiling a section"""
        if not self._parent_labels or self._parent_labels[-1] != name:
            raise KeyError(f"{name} is not the innermost profiled section")
        pinfo.stop()
        self._parent_labels.pop()
        if self._enable:
            self._records.append(
                [name, pinfo.diff_time, pinfo.diff_mem, ":".join(self._parent_labels)]
            )

    def show_stats(self):
        """Logs profiling stats"""
        if not self._enable or not self._records:
            return
        stats = self.perf_table.groupby("label", sort=False).agg(
            {"time": ["min", "mean", "max", "count"], "memory": ["max"]}
        )
        logger_profiling.info("+{:=^86s}+".format(" PROFILER STATS "))
        logger_profiling.info(
            "|{:^40s}|{:^10s}|{:^10s}|{:^10s}|{:^6s}|{:^6s}|".format(
                "Event Label", "Min.Time", "Avg.Time", "Max.Time", "Calls", "Mem"
            )
        )
        for label, row in stats.iterrows():
            logger_profiling.info(
                "| {:<38s} | {:8.3f} | {:8.3f} | {:8.3f} | {:4d} | {:4.0f} |".format(
                    label,
                    row[("time", "min")],
                    row[("time", "mean")],
                    row[("time", "max")],
                    int(row[("time", "count")]),
                    row[("memory", "max")],
                )
            )
        logger_profiling.info("+{:-^86s}+".format("-"))


ProfilerManager = _ProfilerManager()  # singleton


class profileit(ContextDecorator):
    """Context manager or decorator for profiling"""

    def __init__(self, name):
        """Initialization"""
        self._name = name
        self._pinfo = []

    def __enter__(self):
        """Enter the context and start profiling"""
        self._pinfo.append(ProfilerManager.start(self._name))

    def __exit__(self, exc_type, exc, exc_tb):
        """Leave the context and stop profiling"""
        ProfilerManager.stop(self._name, self._pinfo.pop())
