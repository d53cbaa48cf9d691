# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""A module implementing several executor wrappers"""

from contextlib import contextmanager

from . import log
from .exceptions import UsageError


class DaskExecutor:
    """An executor wrapper for Dask"""

    def __init__(self, client, result_hook=None) -> None:
        """Initializes the executor wrapper"""
        self._client = client
        self._result_hook = result_hook
        self._jobs = []

    def submit(self, func, args, extra_data):
        """Submits a new routine to be run by the distributed framework"""
        job = self._client.submit(func, *args, pure=False)
        job.extra_data = extra_data
        self._jobs.append(job)

    def process_jobs(self):
        """Wait for all submitted jobs and hand their results to the hook"""
        from distributed import as_completed  # pylint: disable=import-outside-toplevel

        for job in as_completed(self._jobs):
            if self._result_hook:
                self._result_hook(job.result(), job.extra_data)
            job.release()
        self._jobs = []


class SerialExecutor:
    """The serial executor wrapper, which immediately runs the user function"""

    def __init__(self, result_hook) -> None:
        """Initializes the serial executor wrapper"""
        self._result_hook = result_hook

    def submit(self, func, args, extra_data):
        """Submits a new routine (which is run immediately)"""
        result = func(*args)  # Run it inplace
        if self._result_hook:
            self._result_hook(result, extra_data)
        return result


@contextmanager
def serial_ctx(result_hook):
    """A plain serial executor, basically no-op"""
    yield SerialExecutor(result_hook)


def parse_executor_args(executor_args):
    """Turn key=value strings into Client keyword arguments (numbers as native types)"""
    params = {}
    for item in executor_args:
        if "=" not in item:
            raise UsageError(f'Executor argument "{item}" is not of the form key=value')
        key, val = item.split("=", 1)
        if val.isdecimal():
            params[key] = int(val)
        elif val.lower() in ("true", "false"):
            params[key] = val.lower() == "true"
        else:
            try:
                params[key] = float(val)
            except ValueError:
                params[key] = val
    return params


@contextmanager
def dask_ctx(result_hook, executor_params: dict):
    """An executor using the Dask system"""
    from dask.distributed import Client  # pylint: disable=import-outside-toplevel

    with Client(**executor_params) as client:
        executor_wrapper = DaskExecutor(client, result_hook)

        yield executor_wrapper

        log.info("Jobs submitted to DASK")
        executor_wrapper.process_jobs()
        log.info("DASK jobs finished")


def in_context(parallel, params, result_hook=None):
    """An auto-selector of the executor context manager"""
    log.debug(f"Starting {'Dask' if parallel else 'serial'} execution context")
    if parallel:
        return dask_ctx(result_hook, params)
    return serial_ctx(result_hook)
