# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Error hierarchy shared by the library and the command line.

Each error class carries the exit code the CLI reports for it.
"""


class FlagPositivityError(Exception):
    """Base class of all errors raised by flag_positivity"""

    exit_code = 1


class UsageError(FlagPositivityError, ValueError):
    """Inputs that do not fit together (ambient mismatch, unknown point, bad degree k, ...)"""

    exit_code = 2


class ConfigurationError(UsageError):
    """Invalid Cartan type, rank or parabolic"""


class DslSyntaxError(UsageError):
    """Malformed bundle expression"""

    def __init__(self, text, offset, reason):
        """Keep the offending text and offset for reporting"""
        self.text = text
        self.offset = offset
        self.reason = reason
        super().__init__(f'Malformed bundle expression "{text}" at offset {offset}: {reason}')


class PreconditionError(FlagPositivityError):
    """A mathematical hypothesis of the requested computation does not hold"""

    exit_code = 1


class NefHypothesisError(PreconditionError):
    """Seshadri constants are only defined here for nef bundles"""

    def __init__(self, verdict):
        """Keep the verdict so that callers can report its witness"""
        self.verdict = verdict
        witness = verdict.witness
        super().__init__(
            "Seshadri constant requires a nef bundle, but the bundle is not nef: "
            f"curve {witness.curve} has splitting entry {witness.entry}"
        )


class EnumerationCapError(FlagPositivityError, RuntimeError):
    """The number of T-fixed points exceeds the configured cap"""

    exit_code = 3

    def __init__(self, order, cap):
        """Keep the computed order of W/W_P"""
        self.order = order
        self.cap = cap
        super().__init__(f"|W/W_P| = {order} exceeds the enumeration cap of {cap}")
