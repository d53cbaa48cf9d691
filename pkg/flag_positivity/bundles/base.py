# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Bundle expression base module.

Description: This module contains the BundleExpr abstract base class of which all bundle
constructors (leaves and functorial operations) must inherit, and the SplittingType value
holding the Grothendieck splitting of a bundle on an invariant curve.
"""

from abc import ABCMeta, abstractmethod
from dataclasses import dataclass
import inspect

from flag_positivity.exceptions import UsageError

# Guards for explicit Sym/Wedge enumeration
MAX_POWER = 20
MAX_POWER_RANK = 64


class MetaBundle(ABCMeta):
    """Meta class to manage bundle constructor classes.

    Registers every concrete constructor under its DSL keyword, so that the parser can
    look up a class from the name written in a bundle expression.
    """

    __constructors = {}

    def __init__(cls, name, bases, attrs) -> None:
        """Register the implementing class (if concrete) under its keyword"""
        if not inspect.isabstract(cls) and attrs.get("keyword"):
            cls.__constructors[attrs["keyword"]] = cls
        ABCMeta.__init__(cls, name, bases, attrs)

    @classmethod
    def get(mcs, keyword):
        """Returns the constructor class registered under a DSL keyword"""
        if keyword not in mcs.__constructors:
            raise UsageError(f'Unknown bundle constructor "{keyword}"')
        return mcs.__constructors[keyword]

    @classmethod
    def keywords(mcs):
        """All registered DSL keywords"""
        return sorted(mcs.__constructors)


class BundleExpr(metaclass=MetaBundle):
    """T-equivariant vector bundle on G/P, as an expression tree

    Concrete constructors implement `rank` (validating the expression against a
    parabolic) and `exponents` (the unsorted splitting on an invariant curve).
    """

    keyword = None

    @abstractmethod
    def rank(self, parabolic):
        """Rank of the bundle on G/P; raises UsageError if invalid there"""

    @abstractmethod
    def exponents(self, curve):
        """Splitting exponents a_i of the restriction to a curve, in any order"""

    @abstractmethod
    def __str__(self):
        """The expression in bundle DSL syntax"""

    def __add__(self, other):
        """Direct sum"""
        return MetaBundle.get("+")(self, other)

    def __mul__(self, other):
        """Tensor product"""
        return MetaBundle.get("*")(self, other)


def check_power(k, inner_rank, name):
    """Validate the degree of a Sym/Wedge power against the enumeration guards"""
    if k < 0:
        raise UsageError(f"{name} power must be >= 0, got {k}")
    if k > MAX_POWER:
        raise UsageError(f"{name} power {k} exceeds the limit of {MAX_POWER}")
    if inner_rank > MAX_POWER_RANK:
        raise UsageError(
            f"{name} of a rank {inner_rank} bundle exceeds the limit of {MAX_POWER_RANK}"
        )


@dataclass(frozen=True)
class SplittingType:
    """Multiset of splitting exponents, sorted descending"""

    exponents: tuple

    @classmethod
    def from_exponents(cls, values):
        """Canonical (descending) splitting type"""
        return cls(tuple(sorted((int(v) for v in values), reverse=True)))

    @property
    def rank(self):
        """Number of summands"""
        return len(self.exponents)

    @property
    def minimum(self):
        """Smallest exponent"""
        return self.exponents[-1]

    @property
    def degree(self):
        """Sum of the exponents"""
        return sum(self.exponents)

    def __len__(self):
        """Rank"""
        return len(self.exponents)

    def __iter__(self):
        """Exponents, descending"""
        return iter(self.exponents)

    def __str__(self):
        """E.g. O(1)+O(0)^2"""
        parts = []
        for value in sorted(set(self.exponents), reverse=True):
            count = self.exponents.count(value)
            parts.append(f"O({value})" + (f"^{count}" if count > 1 else ""))
        return "+".join(parts)
