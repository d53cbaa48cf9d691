# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Simple root systems, weights and Weyl group actions"""

from flag_positivity.root_system.cartan import CartanType, cartan_matrix
from flag_positivity.root_system.roots import (
    Root,
    RootSystem,
    Weight,
    build_root_system,
    pair,
    reflect,
)
from flag_positivity.root_system.weyl import (
    WeylElement,
    descent_word,
    dominant_orbit,
    weyl_act,
    weyl_group,
)
