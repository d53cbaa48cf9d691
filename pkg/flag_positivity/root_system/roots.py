# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Root systems with exact weight/coroot arithmetic.

Roots are stored on the simple-root basis, coroots on the simple-coroot basis and
weights on the fundamental-weight basis, so that <lambda, beta^vee> is the plain dot
product of the weight coefficients with the coroot coefficients.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from flag_positivity import log
from flag_positivity.exceptions import UsageError
from flag_positivity.root_system.cartan import CartanType, cartan_matrix, positive_root_count


def _as_tuple(values):
    return tuple(int(v) for v in values)


@dataclass(frozen=True)
class Root:
    """A root on the simple-root basis"""

    cartan: CartanType
    coefficients: tuple

    def __post_init__(self):
        """Roots are either all-nonnegative or all-nonpositive"""
        log.log_assert(
            all(c >= 0 for c in self.coefficients) or all(c <= 0 for c in self.coefficients),
            f"Mixed signs in root coefficients {self.coefficients}",
        )

    @property
    def is_positive(self):
        """Positivity flag"""
        return any(c > 0 for c in self.coefficients)

    @property
    def height(self):
        """Sum of the coefficients (negative for negative roots)"""
        return sum(self.coefficients)

    def __neg__(self):
        """The opposite root"""
        return Root(self.cartan, tuple(-c for c in self.coefficients))

    def __str__(self):
        """Coefficient string such as (1,1,0)"""
        return "(" + ",".join(str(c) for c in self.coefficients) + ")"


@dataclass(frozen=True)
class Weight:
    """An integral weight on the fundamental-weight basis"""

    cartan: CartanType
    coefficients: tuple

    def __post_init__(self):
        """Normalize to a tuple of ints and check the length"""
        object.__setattr__(self, "coefficients", _as_tuple(self.coefficients))
        if len(self.coefficients) != self.cartan.rank:
            raise UsageError(
                f"Weight {self.coefficients} has length {len(self.coefficients)}, "
                f"but {self.cartan} has rank {self.cartan.rank}"
            )

    @classmethod
    def zero(cls, cartan):
        """The zero weight"""
        return cls(cartan, (0,) * cartan.rank)

    @classmethod
    def fundamental(cls, cartan, i):
        """Fundamental weight omega_i (1-based)"""
        if not 1 <= i <= cartan.rank:
            raise UsageError(f"No fundamental weight omega_{i} in {cartan}")
        return cls(cartan, tuple(int(j == i) for j in range(1, cartan.rank + 1)))

    @classmethod
    def rho(cls, cartan):
        """Sum of the fundamental weights"""
        return cls(cartan, (1,) * cartan.rank)

    def _check(self, other):
        if not isinstance(other, Weight) or other.cartan != self.cartan:
            raise UsageError(f"Cannot combine weights of {self.cartan} and {other!r}")

    def __add__(self, other):
        """Sum of weights"""
        self._check(other)
        return Weight(
            self.cartan, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other):
        """Difference of weights"""
        return self + (-other)

    def __neg__(self):
        """Negated weight"""
        return Weight(self.cartan, tuple(-a for a in self.coefficients))

    def __mul__(self, k):
        """Integer multiple"""
        return Weight(self.cartan, tuple(int(k) * a for a in self.coefficients))

    __rmul__ = __mul__

    def __str__(self):
        """DSL form L[c1,...,cr]"""
        return "L[" + ",".join(str(c) for c in self.coefficients) + "]"


class RootSystem:
    """Roots, coroots and pairing tables of a simple Cartan type.

    Instances are immutable; use `build_root_system` to obtain a shared instance.
    """

    def __init__(self, cartan, matrix, positive_roots, positive_coroots):
        """Store the closure computed by `build_root_system`"""
        self.cartan = cartan
        self.rank = cartan.rank
        self.cartan_matrix = matrix
        # Python-int rows for exact arithmetic on user weights
        self.cartan_rows = tuple(tuple(int(a) for a in row) for row in matrix.tolist())
        self.positive_roots = [Root(cartan, c) for c in positive_roots]
        self.roots = self.positive_roots + [-r for r in self.positive_roots]
        self._coroots = dict(zip(positive_roots, positive_coroots))
        self._root_index = {r.coefficients: k for k, r in enumerate(self.roots)}

        # columns: coroots of positive roots; rows: positive roots on the weight basis
        self.coroot_matrix = np.array(positive_coroots, dtype=np.int64).T.copy()
        self.root_weights = np.array(positive_roots, dtype=np.int64) @ matrix
        for arr in (self.coroot_matrix, self.root_weights):
            arr.setflags(write=False)

    @property
    def num_positive_roots(self):
        """Number of positive roots"""
        return len(self.positive_roots)

    @property
    def simple_roots(self):
        """Simple roots alpha_1, ..., alpha_r"""
        return [self.root(tuple(int(j == i) for j in range(self.rank))) for i in range(self.rank)]

    @property
    def highest_root(self):
        """The unique root of maximal height"""
        return self.positive_roots[-1]

    def root(self, coefficients):
        """Look up a root by its simple-root coefficients"""
        coefficients = _as_tuple(coefficients)
        if coefficients not in self._root_index:
            raise UsageError(f"{coefficients} is not a root of {self.cartan}")
        return self.roots[self._root_index[coefficients]]

    def index_of(self, root):
        """Position of a root in `roots` (positives first, then their negatives)"""
        self._check_root(root)
        return self._root_index[root.coefficients]

    def coroot(self, root):
        """Coroot of a root on the simple-coroot basis"""
        self._check_root(root)
        if root.is_positive:
            return self._coroots[root.coefficients]
        return tuple(-c for c in self._coroots[(-root).coefficients])

    def root_as_weight(self, root):
        """A root re-expressed on the fundamental-weight basis"""
        self._check_root(root)
        coefficients = np.asarray(root.coefficients, dtype=np.int64)
        return Weight(self.cartan, coefficients @ self.cartan_matrix)

    def _check_root(self, root):
        if not isinstance(root, Root) or root.cartan != self.cartan:
            raise UsageError(f"Root {root!r} does not belong to {self.cartan}")
        if root.coefficients not in self._root_index:
            raise UsageError(f"{root.coefficients} is not a root of {self.cartan}")

    def _check_weight(self, weight):
        if not isinstance(weight, Weight) or weight.cartan != self.cartan:
            raise UsageError(f"Weight {weight!r} does not belong to {self.cartan}")

    def pair(self, weight, root):
        """<lambda, alpha^vee>"""
        self._check_weight(weight)
        return sum(a * b for a, b in zip(weight.coefficients, self.coroot(root)))

    def pairings(self, weights):
        """Pairings of an (N, rank) weight array with all positive coroots, shape (N, m)"""
        return np.asarray(weights, dtype=np.int64) @ self.coroot_matrix

    def reflect(self, weight, root):
        """s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha"""
        k = self.pair(weight, root)
        return weight - k * self.root_as_weight(root)

    def simple_reflection(self, i, weight):
        """s_i(lambda) for a 1-based node i"""
        self._check_weight(weight)
        k = weight.coefficients[i - 1]
        return Weight(
            self.cartan,
            tuple(c - k * a for c, a in zip(weight.coefficients, self.cartan_rows[i - 1])),
        )

    def weyl_group_order(self, nodes=None):
        """Order of the Weyl group generated by the given nodes (all by default).

        Uses |W| = prod over positive roots of (ht + 1) / ht, which also holds for the
        reducible subsystem spanned by any subset of nodes.
        """
        nodes = set(range(1, self.rank + 1)) if nodes is None else set(nodes)
        order = Fraction(1)
        for root in self.positive_roots:
            support = {i + 1 for i, c in enumerate(root.coefficients) if c}
            if support <= nodes:
                order *= Fraction(root.height + 1, root.height)
        log.log_assert(order.denominator == 1, f"Non-integral Weyl group order {order}")
        return order.numerator

    def __repr__(self):
        """Short representation"""
        return f"RootSystem({self.cartan})"

    def __reduce__(self):
        """Pickle by Cartan type so that workers share the cached instance"""
        return build_root_system, (self.cartan,)


def _closure(matrix):
    """All roots with their coroots, from simple roots under simple reflections"""
    rank = len(matrix)
    eye = np.eye(rank, dtype=np.int64)
    found = {}
    queue = deque()
    for i in range(rank):
        key = _as_tuple(eye[i])
        found[key] = key
        queue.append((eye[i], eye[i]))

    while queue:
        root, coroot = queue.popleft()
        root_pairings = root @ matrix  # <beta, alpha_i^vee>
        coroot_pairings = matrix @ coroot  # <alpha_i, beta^vee>
        for i in range(rank):
            new_root = root - root_pairings[i] * eye[i]
            key = _as_tuple(new_root)
            if key not in found:
                new_coroot = coroot - coroot_pairings[i] * eye[i]
                found[key] = _as_tuple(new_coroot)
                queue.append((new_root, new_coroot))
    return found


@lru_cache(maxsize=None)
def _build(ct):
    matrix = cartan_matrix(ct)
    found = _closure(matrix)
    positive = sorted((r for r in found if any(c > 0 for c in r)), key=lambda r: (sum(r), r))

    log.log_assert(
        len(found) == 2 * len(positive),
        f"Root closure of {ct} is not symmetric under negation",
    )
    log.log_assert(
        len(positive) == positive_root_count(ct.family, ct.rank),
        f"{ct}: found {len(positive)} positive roots, expected "
        f"{positive_root_count(ct.family, ct.rank)}",
    )
    log.debug(f"Built root system {ct} with {len(positive)} positive roots")
    return RootSystem(ct, matrix, positive, [found[r] for r in positive])


def build_root_system(ct):
    """Build (or fetch the cached) root system of a Cartan type or type string."""
    if isinstance(ct, str):
        ct = CartanType.from_string(ct)
    return _build(ct)


def pair(weight, root):
    """<lambda, alpha^vee> in the root system of alpha"""
    return build_root_system(root.cartan).pair(weight, root)


def reflect(weight, root):
    """Reflection of a weight in the hyperplane of a root"""
    return build_root_system(root.cartan).reflect(weight, root)
