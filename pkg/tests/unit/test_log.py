# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

import logging
import sys

import pytest
from mock import patch

import flag_positivity.log as test_module


def test_log_assert():
    msg = "failing_assert_message"
    with patch("logging.log") as patched:
        with pytest.raises(AssertionError, match=msg):
            test_module.log_assert(False, msg)

        patched.assert_called_once_with(logging.ERROR, msg)
        patched.reset_mock()

        test_module.log_assert(True, msg)
        patched.assert_not_called()


@pytest.mark.parametrize(
    "log_level, expected",
    [
        (test_module.LogLevel.ERROR_ONLY, logging.WARNING),
        (test_module.LogLevel.DEFAULT, logging.INFO),
        (test_module.LogLevel.DEBUG, logging.DEBUG),
        (5, logging.DEBUG),
    ],
)
def test_setup_logging(log_level, expected):
    test_module.setup_logging(log_level)

    assert logging.getLogger().getEffectiveLevel() == expected
    assert len(logging.root.handlers) == 1
    handler = logging.root.handlers[0]
    assert handler.level == expected
    assert handler.stream is sys.stderr


def test_setup_logging_replaces_handlers():
    test_module.setup_logging(test_module.LogLevel.DEFAULT)
    test_module.setup_logging(test_module.LogLevel.DEFAULT)
    assert len(logging.root.handlers) == 1


def test_setup_logging_rejects_non_int():
    with pytest.raises(AssertionError):
        test_module.setup_logging("DEBUG")


def test_records_go_to_stderr(capsys):
    test_module.setup_logging(test_module.LogLevel.DEFAULT)
    test_module.info("enumerating %d cosets", 6)
    test_module.debug("hidden")
    out, err = capsys.readouterr()
    assert out == ""
    assert "[INFO] enumerating 6 cosets" in err
    assert "hidden" not in err
