# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Bundle constructors: line bundles, tautological bundles and functorial operations.

On a Grassmannian Gr(d, n) every invariant curve C is a line in the Pluecker embedding,
and the universal sequence 0 -> S -> O^n -> Q -> 0 restricts to
Q|_C = O(1) + O^(n-d-1) and S|_C = O^(d-1) + O(-1); the latter because S|_C is a
rank d subbundle of a trivial bundle (all a_i <= 0) of degree -deg Q|_C = -1.
"""

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from scipy.special import comb

from flag_positivity.bundles.base import BundleExpr, check_power
from flag_positivity.bundles.degrees import line_degree
from flag_positivity.exceptions import UsageError
from flag_positivity.root_system import Weight


def _grassmannian(parabolic, name):
    data = parabolic.grassmannian
    if data is None:
        raise UsageError(
            f"{name} is only defined on Grassmannians (type A with one omitted node), "
            f"not on {parabolic}"
        )
    return data


def _parabolic(curve):
    return curve.source.parabolic


@dataclass(frozen=True)
class Line(BundleExpr):
    """Line bundle L(lambda) of a character lambda of P"""

    keyword = "L"
    weight: Weight

    def rank(self, parabolic):
        """Always 1, once lambda is checked to be a character of P"""
        if self.weight.cartan != parabolic.cartan:
            raise UsageError(
                f"{self.weight} is a weight of {self.weight.cartan}, not {parabolic.cartan}"
            )
        if not parabolic.is_character(self.weight):
            nodes = sorted(i for i in parabolic.levi_set if self.weight.coefficients[i - 1])
            raise UsageError(
                f"{self.weight} does not define a line bundle on {parabolic}: "
                f"nonzero coefficient on Levi node(s) {nodes}"
            )
        return 1

    def exponents(self, curve):
        """[degree of L(lambda) on the curve]"""
        return [line_degree(self.weight, curve)]

    def __str__(self):
        """L[c1,...,cr]"""
        return str(self.weight)


@dataclass(frozen=True)
class Trivial(BundleExpr):
    """Trivial bundle of rank r"""

    keyword = "triv"
    r: int

    def rank(self, parabolic):
        """r"""
        if self.r < 1:
            raise UsageError(f"Trivial bundle rank must be positive, got {self.r}")
        return self.r

    def exponents(self, curve):
        """r zeros"""
        return [0] * self.r

    def __str__(self):
        """triv(r)"""
        return f"triv({self.r})"


@dataclass(frozen=True)
class TautSub(BundleExpr):
    """Tautological subbundle S of Gr(d, n)"""

    keyword = "S"

    def rank(self, parabolic):
        """d"""
        return _grassmannian(parabolic, "S")[1]

    def exponents(self, curve):
        """O^(d-1) + O(-1)"""
        _, d = _grassmannian(_parabolic(curve), "S")
        return [0] * (d - 1) + [-1]

    def __str__(self):
        """S"""
        return "S"


@dataclass(frozen=True)
class TautQuot(BundleExpr):
    """Tautological quotient bundle Q of Gr(d, n)"""

    keyword = "Q"

    def rank(self, parabolic):
        """n - d"""
        n, d = _grassmannian(parabolic, "Q")
        return n - d

    def exponents(self, curve):
        """O(1) + O^(n-d-1)"""
        n, d = _grassmannian(_parabolic(curve), "Q")
        return [1] + [0] * (n - d - 1)

    def __str__(self):
        """Q"""
        return "Q"


@dataclass(frozen=True)
class Tangent(BundleExpr):
    """Tangent bundle of Gr(d, n), Hom(S, Q)"""

    keyword = "T"

    def rank(self, parabolic):
        """d (n - d)"""
        n, d = _grassmannian(parabolic, "T")
        return d * (n - d)

    def exponents(self, curve):
        """Splitting of S^vee (x) Q"""
        return Tensor(Dual(TautSub()), TautQuot()).exponents(curve)

    def __str__(self):
        """T"""
        return "T"


@dataclass(frozen=True)
class Dual(BundleExpr):
    """Dual bundle"""

    keyword = "dual"
    inner: BundleExpr

    def rank(self, parabolic):
        """Same rank"""
        return self.inner.rank(parabolic)

    def exponents(self, curve):
        """Negated exponents"""
        return [-a for a in self.inner.exponents(curve)]

    def __str__(self):
        """dual(e)"""
        return f"dual({self.inner})"


@dataclass(frozen=True)
class Sum(BundleExpr):
    """Direct sum"""

    keyword = "+"
    left: BundleExpr
    right: BundleExpr

    def rank(self, parabolic):
        """Ranks add"""
        return self.left.rank(parabolic) + self.right.rank(parabolic)

    def exponents(self, curve):
        """Multiset union"""
        return self.left.exponents(curve) + self.right.exponents(curve)

    def __str__(self):
        """e1+e2"""
        return f"{self.left}+{self.right}"


def _factor_str(expr):
    return f"({expr})" if isinstance(expr, Sum) else str(expr)


@dataclass(frozen=True)
class Tensor(BundleExpr):
    """Tensor product"""

    keyword = "*"
    left: BundleExpr
    right: BundleExpr

    def rank(self, parabolic):
        """Ranks multiply"""
        return self.left.rank(parabolic) * self.right.rank(parabolic)

    def exponents(self, curve):
        """All pairwise sums"""
        right = self.right.exponents(curve)
        return [a + b for a in self.left.exponents(curve) for b in right]

    def __str__(self):
        """e1*e2"""
        return f"{_factor_str(self.left)}*{_factor_str(self.right)}"


@dataclass(frozen=True)
class Hom(BundleExpr):
    """Hom(e1, e2) = dual(e1) (x) e2"""

    keyword = "hom"
    source: BundleExpr
    target: BundleExpr

    def rank(self, parabolic):
        """rank(e1) rank(e2)"""
        return self.source.rank(parabolic) * self.target.rank(parabolic)

    def exponents(self, curve):
        """Splitting of dual(e1) (x) e2"""
        return Tensor(Dual(self.source), self.target).exponents(curve)

    def __str__(self):
        """hom(e1,e2)"""
        return f"hom({self.source},{self.target})"


@dataclass(frozen=True)
class Sym(BundleExpr):
    """k-th symmetric power"""

    keyword = "sym"
    k: int
    inner: BundleExpr

    def rank(self, parabolic):
        """C(rank + k - 1, k)"""
        inner_rank = self.inner.rank(parabolic)
        check_power(self.k, inner_rank, "sym")
        return int(comb(inner_rank + self.k - 1, self.k, exact=True))

    def exponents(self, curve):
        """Sums over size-k multisets of summands"""
        values = self.inner.exponents(curve)
        check_power(self.k, len(values), "sym")
        return [sum(c) for c in combinations_with_replacement(values, self.k)]

    def __str__(self):
        """sym(k,e)"""
        return f"sym({self.k},{self.inner})"


@dataclass(frozen=True)
class Wedge(BundleExpr):
    """k-th exterior power"""

    keyword = "wedge"
    k: int
    inner: BundleExpr

    def rank(self, parabolic):
        """C(rank, k), requiring k <= rank"""
        inner_rank = self.inner.rank(parabolic)
        check_power(self.k, inner_rank, "wedge")
        if self.k > inner_rank:
            raise UsageError(f"wedge power {self.k} exceeds the rank {inner_rank} of {self.inner}")
        return int(comb(inner_rank, self.k, exact=True))

    def exponents(self, curve):
        """Sums over size-k subsets of summands"""
        values = self.inner.exponents(curve)
        check_power(self.k, len(values), "wedge")
        if self.k > len(values):
            raise UsageError(f"wedge power {self.k} exceeds the rank {len(values)} of {self.inner}")
        return [sum(c) for c in combinations(values, self.k)]

    def __str__(self):
        """wedge(k,e)"""
        return f"wedge({self.k},{self.inner})"


@dataclass(frozen=True)
class Det(BundleExpr):
    """Determinant line bundle"""

    keyword = "det"
    inner: BundleExpr

    def rank(self, parabolic):
        """1"""
        self.inner.rank(parabolic)
        return 1

    def exponents(self, curve):
        """[total degree]"""
        return [sum(self.inner.exponents(curve))]

    def __str__(self):
        """det(e)"""
        return f"det({self.inner})"
