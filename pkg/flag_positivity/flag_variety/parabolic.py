# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Parabolic subgroups P containing B, given by the simple roots of their Levi factor."""

from dataclasses import dataclass

from flag_positivity.exceptions import ConfigurationError
from flag_positivity.root_system import CartanType, Weight, build_root_system


@dataclass(frozen=True)
class Parabolic:
    """Parabolic subgroup P with Levi simple roots `levi_set` (1-based nodes)"""

    cartan: CartanType
    levi_set: frozenset

    def __post_init__(self):
        """Check node range; P = G is rejected"""
        object.__setattr__(self, "levi_set", frozenset(int(i) for i in self.levi_set))
        bad = sorted(i for i in self.levi_set if not 1 <= i <= self.cartan.rank)
        if bad:
            raise ConfigurationError(
                f"Levi nodes {bad} are outside 1..{self.cartan.rank} for {self.cartan}"
            )
        if len(self.levi_set) == self.cartan.rank:
            raise ConfigurationError(
                f"P = G (no omitted node) gives a point; omit at least one node of {self.cartan}"
            )

    @classmethod
    def from_omitted(cls, cartan, omitted):
        """P from its omitted nodes, e.g. omitting node d of A_{n-1} gives Gr(d, n)"""
        omitted = {int(i) for i in omitted}
        bad = sorted(i for i in omitted if not 1 <= i <= cartan.rank)
        if bad:
            raise ConfigurationError(
                f"Omitted nodes {bad} are outside 1..{cartan.rank} for {cartan}"
            )
        return cls(cartan, frozenset(range(1, cartan.rank + 1)) - omitted)

    @classmethod
    def borel(cls, cartan):
        """P = B, the full flag variety"""
        return cls(cartan, frozenset())

    @property
    def omitted(self):
        """Omitted nodes, sorted"""
        return tuple(i for i in range(1, self.cartan.rank + 1) if i not in self.levi_set)

    @property
    def root_system(self):
        """Ambient root system"""
        return build_root_system(self.cartan)

    @property
    def dominant_weight(self):
        """Sum of the omitted fundamental weights; its stabilizer in W is W_P"""
        return Weight(
            self.cartan, tuple(int(i not in self.levi_set) for i in range(1, self.cartan.rank + 1))
        )

    def is_character(self, weight):
        """Whether a weight vanishes on every Levi coroot, i.e. defines a line bundle on G/P"""
        return all(weight.coefficients[i - 1] == 0 for i in self.levi_set)

    @property
    def coset_count(self):
        """|W/W_P| from the height product formula"""
        rs = self.root_system
        return rs.weyl_group_order() // rs.weyl_group_order(self.levi_set)

    @property
    def dimension(self):
        """dim G/P = number of positive roots outside the Levi"""
        rs = self.root_system
        return sum(
            1
            for root in rs.positive_roots
            if any(c and (i + 1) not in self.levi_set for i, c in enumerate(root.coefficients))
        )

    @property
    def grassmannian(self):
        """(n, d) if G/P is Gr(d, n), i.e. type A_{n-1} with one omitted node d; else None"""
        if self.cartan.family != "A" or len(self.omitted) != 1:
            return None
        return self.cartan.rank + 1, self.omitted[0]

    def __str__(self):
        """E.g. A3/P(omit 2)"""
        return f"{self.cartan}/P(omit {','.join(str(i) for i in self.omitted)})"
