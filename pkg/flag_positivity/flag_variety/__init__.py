# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Combinatorial model of G/P: T-fixed points and T-invariant curves"""

from flag_positivity.flag_variety.export import gkm_to_dict, gkm_to_dot
from flag_positivity.flag_variety.gkm import (
    DEFAULT_MAX_COSETS,
    FixedPoint,
    GkmGraph,
    InvariantCurve,
    coset_min_rep,
    curves_through,
    fixed_points,
    gkm_graph,
    invariant_curves,
)
from flag_positivity.flag_variety.parabolic import Parabolic
