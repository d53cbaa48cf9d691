# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""flag_positivity."""

from flag_positivity.version import __version__
