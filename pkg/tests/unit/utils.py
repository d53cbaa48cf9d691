# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

from flag_positivity.flag_variety import Parabolic
from flag_positivity.root_system import CartanType, Weight

# all simple types of rank <= 4
SMALL_TYPES = [
    CartanType(f, r)
    for f, r in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4)]
    + [("C", 3), ("C", 4), ("D", 4), ("F", 4), ("G", 2)]
]


def grassmannian(d, n):
    """Parabolic of Gr(d, n)"""
    return Parabolic.from_omitted(CartanType("A", n - 1), [d])


def full_flag(family, rank):
    """Parabolic P = B"""
    return Parabolic.borel(CartanType(family, rank))


def random_weight(rng, cartan, low=-3, high=4):
    """Random integral weight"""
    return Weight(cartan, rng.integers(low, high, size=cartan.rank))


def random_character(rng, parabolic, low=-3, high=4):
    """Random weight vanishing on the Levi nodes of a parabolic"""
    coeffs = rng.integers(low, high, size=parabolic.cartan.rank)
    for i in parabolic.levi_set:
        coeffs[i - 1] = 0
    return Weight(parabolic.cartan, coeffs)


def random_parabolic(rng, cartan):
    """Random parabolic with at least one omitted node"""
    mask = rng.integers(0, 2, size=cartan.rank).astype(bool)
    mask[rng.integers(cartan.rank)] = True
    return Parabolic.from_omitted(cartan, [i + 1 for i in range(cartan.rank) if mask[i]])
