# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Grothendieck splitting of bundle expressions on T-invariant curves"""

from dataclasses import dataclass
import hashlib

import numpy as np
import pandas as pd

from flag_positivity import executors, log, profiler, utils
from flag_positivity.bundles.base import SplittingType
from flag_positivity.exceptions import UsageError


def rank(bundle, parabolic):
    """Rank of a bundle expression on G/P (validates the expression there)"""
    return bundle.rank(parabolic)


def restrict(bundle, curve):
    """Splitting type of the restriction of a bundle to an invariant curve"""
    splitting = SplittingType.from_exponents(bundle.exponents(curve))
    log.log_assert(
        splitting.rank == bundle.rank(curve.source.parabolic),
        f"Splitting {splitting} of {bundle} does not match its rank",
    )
    return splitting


@dataclass(frozen=True)
class RestrictionTable:
    """Splitting type of a bundle on every curve of a GKM graph, keyed by curve id"""

    bundle: object
    graph: object
    entries: dict

    def __post_init__(self):
        """The table must be total over the graph's curves"""
        log.log_assert(
            list(self.entries) == [c.index for c in self.graph.curves],
            "Restriction table must have one entry per curve, in curve order",
        )

    def __getitem__(self, curve_id):
        """Splitting type on a curve"""
        return self.entries[curve_id]

    def __len__(self):
        """Number of curves"""
        return len(self.entries)

    def items(self):
        """(curve id, splitting type) pairs in curve order"""
        return self.entries.items()

    def minima(self):
        """Smallest exponent per curve, as an array of Python ints indexed by curve id"""
        return np.array([s.minimum for s in self.entries.values()], dtype=object)

    def to_dict(self):
        """{curve id: [a_1 >= ... >= a_r]} with string keys, ready for JSON"""
        return {str(k): list(s.exponents) for k, s in self.entries.items()}

    def digest(self):
        """Stable SHA-256 of the table contents"""
        payload = utils.canonical_json({"bundle": str(self.bundle), "table": self.to_dict()})
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def to_frame(self):
        """Table as a DataFrame, one row per curve"""
        curves = self.graph.curves
        return pd.DataFrame(
            {
                "curve": [c.index for c in curves],
                "source": [c.source.index for c in curves],
                "target": [c.target.index for c in curves],
                "root": [str(c.root) for c in curves],
                "splitting": [list(self.entries[c.index].exponents) for c in curves],
                "min": [self.entries[c.index].minimum for c in curves],
            }
        ).set_index("curve")


def _restrict_chunk(bundle, graph, curve_ids):
    return {i: restrict(bundle, graph.curves[i]) for i in curve_ids}


@profiler.profileit(name="restriction_table")
def restriction_table(bundle, graph, parallel=False, splits=1, executor_args=()):
    """Restrict a bundle to every invariant curve of a GKM graph.

    The curves are split into `splits` chunks, each evaluated as one job; the merged
    table is ordered by curve id whatever the completion order.
    """
    if splits < 1:
        raise UsageError(f"Number of splits must be positive, got {splits}")
    bundle_rank = rank(bundle, graph.parabolic)
    log.info(f"Restricting {bundle} (rank {bundle_rank}) to {len(graph.curves)} curves")

    results = {}

    def _hook(result, info):
        results.update(result)
        log.debug(f"Split {info['split'] + 1}/{info['total']} done ({len(result)} curves)")

    chunks = [c for c in np.array_split(np.arange(len(graph.curves)), splits) if len(c)]
    params = executors.parse_executor_args(executor_args) if parallel else {}
    with executors.in_context(parallel, params, _hook) as executor:
        for idx, chunk in enumerate(chunks):
            executor.submit(
                _restrict_chunk,
                (bundle, graph, chunk.tolist()),
                {"split": idx, "total": len(chunks)},
            )
    return RestrictionTable(bundle, graph, {i: results[i] for i in sorted(results)})
