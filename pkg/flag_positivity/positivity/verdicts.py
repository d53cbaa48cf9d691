# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Nef/ample verdicts and Seshadri constants at T-fixed points.

A T-equivariant bundle on G/P is nef (ample) iff its splitting exponents on every
T-invariant curve are >= 0 (> 0). Positive exponents on all invariant curves already
certify ampleness, so there is no separate strictly-nef status. At a T-fixed point x
the Seshadri constant of a nef bundle is the smallest exponent over the invariant
curves through x.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from flag_positivity import log, profiler, utils
from flag_positivity.bundles import Line, restriction_table
from flag_positivity.exceptions import NefHypothesisError, UsageError


class Status(str, Enum):
    """Positivity status"""

    AMPLE = "ample"
    NEF = "nef-not-ample"
    NOT_NEF = "not-nef"

    @classmethod
    def from_minimum(cls, minimum):
        """Status from the smallest splitting exponent"""
        if minimum > 0:
            return cls.AMPLE
        if minimum == 0:
            return cls.NEF
        return cls.NOT_NEF


@dataclass(frozen=True)
class Witness:
    """A curve together with one of its splitting exponents"""

    curve: int
    entry: int

    def to_dict(self):
        """JSON-ready dict"""
        return {"curve": self.curve, "entry": self.entry}


@dataclass(frozen=True)
class PositivityVerdict:
    """Verdict of the invariant-curve criterion"""

    status: Status
    global_min: int
    witness: Optional[Witness]
    table_digest: str
    line_degree_min: Optional[int] = None

    @property
    def is_nef(self):
        """Nef (possibly ample)"""
        return self.status != Status.NOT_NEF

    @property
    def is_ample(self):
        """Ample"""
        return self.status == Status.AMPLE

    def to_dict(self):
        """JSON-ready dict with fixed field order"""
        data = {
            "status": self.status.value,
            "global_min": self.global_min,
            "witness": self.witness.to_dict() if self.witness else None,
            "table_digest": self.table_digest,
        }
        if self.line_degree_min is not None:
            data["line_degree_min"] = self.line_degree_min
        return data


@dataclass(frozen=True)
class SeshadriResult:
    """Seshadri constant at a fixed point, with the curves attaining it"""

    point: int
    value: Fraction
    attaining: tuple = field(default=())

    def to_dict(self):
        """JSON-ready dict; the value is an exact rational"""
        return {
            "point": self.point,
            "value": utils.fraction_to_dict(self.value),
            "attaining": [w.to_dict() for w in self.attaining],
        }


def verdict_from_table(table, line_degree_min=None):
    """Verdict from a full restriction table"""
    minima = table.minima()
    first = int(np.argmin(minima))  # first curve attaining the minimum
    global_min = int(minima[first])
    verdict = PositivityVerdict(
        Status.from_minimum(global_min),
        global_min,
        Witness(table.graph.curves[first].index, global_min),
        table.digest(),
        line_degree_min,
    )
    log.info(f"{table.bundle}: {verdict.status.value} (global min {global_min}, curve {first})")
    return verdict


@profiler.profileit(name="positivity")
def positivity(bundle, graph, table=None, **table_kwargs):
    """Nef/ample verdict of a bundle by restriction to all invariant curves"""
    table = restriction_table(bundle, graph, **table_kwargs) if table is None else table
    return verdict_from_table(table)


def line_positivity(weight, graph, **table_kwargs):
    """Verdict for the line bundle L(lambda), reporting the smallest curve degree"""
    table = restriction_table(Line(weight), graph, **table_kwargs)
    return verdict_from_table(table, line_degree_min=int(table.minima().min()))


def dominance_status(weight, parabolic):
    """Closed-form status of L(lambda): nef iff <lambda, alpha_i^vee> >= 0 on omitted nodes

    The nef cone of G/P is spanned by the omitted fundamental weights, and ample means
    strictly positive on each of them.
    """
    if weight.cartan != parabolic.cartan or not parabolic.is_character(weight):
        raise UsageError(f"{weight} does not define a line bundle on {parabolic}")
    return Status.from_minimum(min(weight.coefficients[i - 1] for i in parabolic.omitted))


@profiler.profileit(name="seshadri")
def seshadri(bundle, graph, point, table=None, verdict=None):
    """Seshadri constant of a nef bundle at a T-fixed point"""
    x = graph.point(point)
    table = restriction_table(bundle, graph) if table is None else table
    verdict = verdict_from_table(table) if verdict is None else verdict
    if not verdict.is_nef:
        raise NefHypothesisError(verdict)

    through = graph.curves_through(x)
    value = min(table[c.index].minimum for c in through)
    attaining = tuple(
        Witness(c.index, value) for c in sorted(through, key=lambda c: c.index)
        if table[c.index].minimum == value
    )
    return SeshadriResult(x.index, Fraction(value), attaining)


def seshadri_all(bundle, graph, table=None):
    """Seshadri constants at every fixed point, in fixed point order"""
    table = restriction_table(bundle, graph) if table is None else table
    verdict = verdict_from_table(table)
    return [seshadri(bundle, graph, x, table, verdict) for x in graph.fixed_points]
