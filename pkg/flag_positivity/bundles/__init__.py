# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""T-equivariant bundle expressions and their splitting on invariant curves"""

from flag_positivity.bundles.base import BundleExpr, MetaBundle, SplittingType
from flag_positivity.bundles.degrees import line_degree, signed_pairing
from flag_positivity.bundles.dsl import parse_bundle
from flag_positivity.bundles.expressions import (
    Det,
    Dual,
    Hom,
    Line,
    Sum,
    Sym,
    Tangent,
    TautQuot,
    TautSub,
    Tensor,
    Trivial,
    Wedge,
)
from flag_positivity.bundles.restriction import (
    RestrictionTable,
    rank,
    restrict,
    restriction_table,
)
