# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Positivity verdicts and Seshadri constants"""

from flag_positivity.positivity.verdicts import (
    PositivityVerdict,
    SeshadriResult,
    Status,
    Witness,
    dominance_status,
    line_positivity,
    positivity,
    seshadri,
    seshadri_all,
    verdict_from_table,
)
