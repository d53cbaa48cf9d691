# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Package version."""

VERSION = "0.1.0.dev0"
__version__ = VERSION
