# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Weyl group elements and orbit enumeration.

An element is stored as a word in the simple reflections (1-based, Bourbaki
numbering); w = s_{i1} s_{i2} ... s_{ik} acts on weights right to left. Two words
are the same group element iff they move rho to the same weight.
"""

from functools import cached_property

import numpy as np

from flag_positivity import log
from flag_positivity.exceptions import EnumerationCapError, UsageError
from flag_positivity.root_system.roots import Root, Weight, build_root_system


def _simple_reflect(coeffs, i, rows):
    """s_i (0-based i) on fundamental-weight coefficients; exact for any int size"""
    k = coeffs[i]
    return [c - k * r for c, r in zip(coeffs, rows[i])]


class WeylElement:
    """An element of the Weyl group, given by a word in the simple reflections"""

    def __init__(self, root_system, word=()):
        """Check that every letter names a simple reflection"""
        word = tuple(int(i) for i in word)
        bad = [i for i in word if not 1 <= i <= root_system.rank]
        if bad:
            raise UsageError(f"Word letters {bad} are not nodes of {root_system.cartan}")
        self.root_system = root_system
        self.word = word

    @classmethod
    def identity(cls, root_system):
        """The identity element"""
        return cls(root_system, ())

    @classmethod
    def longest(cls, root_system):
        """The longest element, sending rho to -rho"""
        return cls(root_system, descent_word(root_system, -Weight.rho(root_system.cartan)))

    def _act_array(self, coeffs):
        rows = self.root_system.cartan_rows
        coeffs = [int(c) for c in coeffs]
        for i in reversed(self.word):
            coeffs = _simple_reflect(coeffs, i - 1, rows)
        return coeffs

    def act(self, weight):
        """w(lambda)"""
        if not isinstance(weight, Weight) or weight.cartan != self.root_system.cartan:
            raise UsageError(f"Weight {weight!r} does not belong to {self.root_system.cartan}")
        return Weight(weight.cartan, self._act_array(weight.coefficients))

    @cached_property
    def rho_image(self):
        """w(rho) as a coefficient tuple; determines w"""
        return tuple(int(c) for c in self._act_array([1] * self.root_system.rank))

    @cached_property
    def root_permutation(self):
        """Index of w(beta) in root_system.roots for every root beta"""
        rs = self.root_system
        coeffs = np.array([r.coefficients for r in rs.roots], dtype=np.int64)
        for i in reversed(self.word):
            coeffs[:, i - 1] -= coeffs @ rs.cartan_matrix[:, i - 1]
        return np.array([rs.index_of(Root(rs.cartan, tuple(row))) for row in coeffs.tolist()])

    def act_root(self, root):
        """w(alpha) via the cached root permutation"""
        rs = self.root_system
        return rs.roots[self.root_permutation[rs.index_of(root)]]

    @cached_property
    def length(self):
        """Number of positive roots sent to negative roots"""
        m = self.root_system.num_positive_roots
        return int(np.count_nonzero(self.root_permutation[:m] >= m))

    @property
    def is_reduced(self):
        """Whether the stored word is a reduced word"""
        return len(self.word) == self.length

    def canonical(self):
        """Same element with its lexicographically least reduced word"""
        rs = self.root_system
        return WeylElement(rs, descent_word(rs, Weight(rs.cartan, self.rho_image)))

    def inverse(self):
        """w^{-1}"""
        return WeylElement(self.root_system, reversed(self.word))

    def __mul__(self, other):
        """Group product (word concatenation)"""
        if not isinstance(other, WeylElement) or other.root_system is not self.root_system:
            raise UsageError("Cannot multiply Weyl elements of different root systems")
        return WeylElement(self.root_system, self.word + other.word)

    def __eq__(self, other):
        """Equality as group elements"""
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (
            self.root_system.cartan == other.root_system.cartan
            and self.rho_image == other.rho_image
        )

    def __hash__(self):
        """Hash as a group element"""
        return hash((self.root_system.cartan, self.rho_image))

    def __repr__(self):
        """Word representation, e.g. s1s2s1"""
        return "".join(f"s{i}" for i in self.word) if self.word else "e"

    def __reduce__(self):
        return WeylElement, (self.root_system, self.word)


def weyl_act(w, weight):
    """Action of a Weyl group element on a weight"""
    return w.act(weight)


def descent_word(root_system, weight):
    """Lexicographically least word w with w(dominant) = weight, for weight in a dominant orbit.

    Repeatedly applies the smallest s_i with <mu, alpha_i^vee> < 0; each step lowers the
    length, and the first letters chosen are the smallest possible left descents.
    """
    coeffs = [int(c) for c in weight.coefficients]
    rows = root_system.cartan_rows
    word = []
    while True:
        i = next((k for k, c in enumerate(coeffs) if c < 0), None)
        if i is None:
            return tuple(word)
        word.append(i + 1)
        coeffs = _simple_reflect(coeffs, i, rows)


def dominant_orbit(root_system, dominant):
    """W-orbit of a dominant weight, graded by the length of minimal representatives.

    Returns a list of (weight coefficients, lexicographically least reduced word) sorted
    by (length, word). The words are the minimal-length coset representatives of W/W_J,
    J = nodes on which the weight vanishes.
    """
    log.log_assert(
        all(c >= 0 for c in dominant.coefficients), f"{dominant} is not dominant"
    )
    matrix = root_system.cartan_matrix
    start = tuple(dominant.coefficients)
    words = {start: ()}
    level = [start]
    result = [(start, ())]
    while level:
        next_level = set()
        for mu in level:
            mu_arr = np.asarray(mu, dtype=np.int64)
            for i in np.flatnonzero(mu_arr > 0):
                nu = tuple((mu_arr - mu_arr[i] * matrix[i]).tolist())
                next_level.add(nu)
        entries = []
        for nu in next_level:
            # the smallest left descent of nu and the (already known) word below it
            j = next(k for k, c in enumerate(nu) if c < 0)
            below = tuple((np.asarray(nu, dtype=np.int64) - nu[j] * matrix[j]).tolist())
            words[nu] = (j + 1,) + words[below]
            entries.append((nu, words[nu]))
        entries.sort(key=lambda e: e[1])
        result.extend(entries)
        level = [e[0] for e in entries]
    return result


def weyl_group(root_system, cap=None):
    """All Weyl group elements with canonical words, ordered by (length, word)"""
    order = root_system.weyl_group_order()
    if cap is not None and order > cap:
        raise EnumerationCapError(order, cap)
    orbit = dominant_orbit(root_system, Weight.rho(root_system.cartan))
    return [WeylElement(root_system, word) for _, word in orbit]


def simple_reflections(cartan):
    """Simple reflections s_1, ..., s_r of a Cartan type"""
    rs = build_root_system(cartan)
    return [WeylElement(rs, (i,)) for i in range(1, rs.rank + 1)]
