# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

import pytest

from flag_positivity.bundles import Sum, TautQuot, TautSub, Tensor
from flag_positivity.exceptions import UsageError
import flag_positivity.bundles.base as test_module


def test_splitting_type():
    splitting = test_module.SplittingType.from_exponents([0, 1, -1, 0])
    assert splitting.exponents == (1, 0, 0, -1)
    assert splitting.rank == len(splitting) == 4
    assert splitting.minimum == -1
    assert splitting.degree == 0
    assert list(splitting) == [1, 0, 0, -1]
    assert str(splitting) == "O(1)+O(0)^2+O(-1)"
    assert splitting == test_module.SplittingType((1, 0, 0, -1))


def test_meta_bundle_registry():
    assert test_module.MetaBundle.get("Q") is TautQuot
    assert test_module.MetaBundle.keywords() == [
        "*",
        "+",
        "L",
        "Q",
        "S",
        "T",
        "det",
        "dual",
        "hom",
        "sym",
        "triv",
        "wedge",
    ]
    with pytest.raises(UsageError, match='Unknown bundle constructor "foo"'):
        test_module.MetaBundle.get("foo")


def test_operator_sugar():
    assert TautQuot() + TautSub() == Sum(TautQuot(), TautSub())
    assert TautQuot() * TautSub() == Tensor(TautQuot(), TautSub())


def test_abstract_base():
    with pytest.raises(TypeError):
        test_module.BundleExpr()


@pytest.mark.parametrize(
    "k, rank, match",
    [(-1, 3, "must be >= 0"), (21, 3, "exceeds the limit of 20"), (2, 65, "rank 65 bundle")],
)
def test_check_power__raises(k, rank, match):
    with pytest.raises(UsageError, match=match):
        test_module.check_power(k, rank, "sym")


def test_check_power():
    test_module.check_power(0, 1, "wedge")
    test_module.check_power(20, 64, "sym")
