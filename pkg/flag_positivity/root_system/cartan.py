# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Cartan types and Cartan matrices (Bourbaki numbering of the simple roots)."""

import re
from dataclasses import dataclass

import numpy as np

from flag_positivity.exceptions import ConfigurationError

# (min rank, max rank); None means unbounded
RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_TYPE_PATTERN = re.compile(r"^\s*([A-Za-z])\s*(\d+)\s*$")


def positive_root_count(family, rank):
    """Classical number of positive roots of a simple type."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family in ("B", "C"):
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(family, rank)]


@dataclass(frozen=True, order=True)
class CartanType:
    """A simple Cartan type such as A3 or E6."""

    family: str
    rank: int

    def __post_init__(self):
        """Check the family and its rank bounds"""
        if self.family not in RANK_BOUNDS:
            raise ConfigurationError(
                f'Unknown Cartan family "{self.family}" (supported: {", ".join(RANK_BOUNDS)})'
            )
        if not isinstance(self.rank, (int, np.integer)) or isinstance(self.rank, bool):
            raise ConfigurationError(f"Rank must be an integer, got {self.rank!r}")
        lo, hi = RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            bound = f">= {lo}" if hi is None else (f"= {lo}" if lo == hi else f"in {lo}..{hi}")
            raise ConfigurationError(
                f"Type {self.family} requires rank {bound}, got {self.family}{self.rank}"
            )

    @classmethod
    def from_string(cls, text):
        """Parse a type string such as "A3" or "e6"."""
        if any(sep in text for sep in ("x", "X", "*", "+", "×")):
            raise ConfigurationError(
                f'Semisimple products are not supported, got "{text}"; use a single simple type'
            )
        match = _TYPE_PATTERN.match(text)
        if match is None:
            raise ConfigurationError(f'Cannot parse Cartan type "{text}" (expected e.g. A3, E6)')
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def is_simply_laced(self):
        """Whether all roots have the same length"""
        return self.family in ("A", "D", "E")

    def __str__(self):
        """Type string, e.g. A3"""
        return f"{self.family}{self.rank}"


def _edges(ct):
    """Bonds of the Dynkin diagram as 1-based node pairs"""
    n = ct.rank
    if ct.family in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(1, n)]
    if ct.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E: 1-3-4-5-...-n with 2 attached to 4
    return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]


def cartan_matrix(ct):
    """Integer Cartan matrix with entries M[i, j] = <alpha_i, alpha_j^vee>.

    Row i holds the simple root alpha_i in the fundamental weight basis.
    """
    n = ct.rank
    matrix = 2 * np.eye(n, dtype=np.int64)
    for i, j in _edges(ct):
        matrix[i - 1, j - 1] = matrix[j - 1, i - 1] = -1

    # Non-simply-laced bonds; the long root pairs to -2 (-3) with the short coroot
    if ct.family == "B":
        matrix[n - 2, n - 1] = -2
    elif ct.family == "C":
        matrix[n - 1, n - 2] = -2
    elif ct.family == "F":
        matrix[1, 2] = -2
    elif ct.family == "G":
        matrix[1, 0] = -3
    matrix.setflags(write=False)
    return matrix
