# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""T-fixed points and T-invariant curves of G/P (the GKM graph).

The fixed points are the cosets wW_P, enumerated as the W-orbit of the dominant
weight lambda_P = sum of the omitted fundamental weights: w W_P <-> w(lambda_P).
The curve through wP in the direction of a positive root alpha joins wP and
s_alpha wP; it is a genuine curve iff <w(lambda_P), alpha^vee> != 0.
"""

from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from flag_positivity import log, profiler
from flag_positivity.exceptions import EnumerationCapError, UsageError
from flag_positivity.root_system import Root, WeylElement, descent_word, dominant_orbit

DEFAULT_MAX_COSETS = 10_000_000


@dataclass(frozen=True)
class FixedPoint:
    """T-fixed point wP; identified by the coset, i.e. by w(lambda_P)"""

    parabolic: object
    weight: tuple
    rep: WeylElement = field(compare=False)
    index: int = field(default=None, compare=False)

    @property
    def word(self):
        """Lexicographically least reduced word of the minimal representative"""
        return self.rep.word

    @property
    def length(self):
        """Length of the minimal representative"""
        return len(self.rep.word)

    def __str__(self):
        """E.g. x3 = s2s1"""
        return f"x{self.index} = {self.rep!r}"


@dataclass(frozen=True)
class InvariantCurve:
    """T-invariant curve joining `source` and `target = s_alpha source`.

    The source is the endpoint of smaller length (ties broken by word), and
    `pairing` = <w_source(lambda_P), alpha^vee> is positive.
    """

    index: int
    source: FixedPoint
    target: FixedPoint
    root: Root
    pairing: int

    @property
    def endpoints(self):
        """The two fixed points on the curve"""
        return self.source, self.target

    def other(self, point):
        """The endpoint that is not `point`"""
        if point == self.source:
            return self.target
        if point == self.target:
            return self.source
        raise UsageError(f"{point} is not an endpoint of curve {self.index}")


def coset_min_rep(w, parabolic):
    """Minimal-length representative of w W_P, as a fixed point (without ordinal id)"""
    if w.root_system.cartan != parabolic.cartan:
        raise UsageError(f"{w!r} is not an element of W({parabolic.cartan})")
    mu = w.act(parabolic.dominant_weight)
    rep = WeylElement(w.root_system, descent_word(w.root_system, mu))
    return FixedPoint(parabolic, mu.coefficients, rep)


def _check_cap(parabolic, max_cosets):
    order = parabolic.coset_count
    log.info(f"{parabolic}: |W/W_P| = {order}")
    if max_cosets is not None and order > max_cosets:
        raise EnumerationCapError(order, max_cosets)
    return order


def fixed_points(root_system, parabolic, max_cosets=DEFAULT_MAX_COSETS):
    """All T-fixed points of G/P, ordered by (length, word), with ordinal ids"""
    if root_system.cartan != parabolic.cartan:
        raise UsageError(f"{parabolic} does not live in {root_system.cartan}")
    order = _check_cap(parabolic, max_cosets)
    orbit = dominant_orbit(root_system, parabolic.dominant_weight)
    log.log_assert(
        len(orbit) == order, f"Enumerated {len(orbit)} cosets, product formula gives {order}"
    )
    return [
        FixedPoint(parabolic, mu, WeylElement(root_system, word), index)
        for index, (mu, word) in enumerate(orbit)
    ]


class GkmGraph:
    """Fixed points, invariant curves and their incidence; immutable after construction"""

    def __init__(self, root_system, parabolic, points, curves):
        """Index the curves by endpoint"""
        self.root_system = root_system
        self.parabolic = parabolic
        self.fixed_points = tuple(points)
        self.curves = tuple(curves)
        self._by_weight = {p.weight: p for p in self.fixed_points}
        adjacency = {p.index: [] for p in self.fixed_points}
        for curve in self.curves:
            adjacency[curve.source.index].append(curve)
            adjacency[curve.target.index].append(curve)
        self.adjacency = {k: tuple(v) for k, v in adjacency.items()}

    @property
    def cartan(self):
        """Ambient Cartan type"""
        return self.root_system.cartan

    def point(self, selector):
        """Resolve a fixed point given by ordinal id or as a FixedPoint"""
        if isinstance(selector, FixedPoint):
            if selector.parabolic != self.parabolic or selector.weight not in self._by_weight:
                raise UsageError(f"{selector.rep!r} is not a fixed point of {self.parabolic}")
            return self._by_weight[selector.weight]
        if isinstance(selector, (int, np.integer)) and not isinstance(selector, bool):
            if 0 <= selector < len(self.fixed_points):
                return self.fixed_points[selector]
        raise UsageError(
            f"Unknown fixed point {selector!r}; "
            f"{self.parabolic} has ids 0..{len(self.fixed_points) - 1}"
        )

    def curve(self, index):
        """Invariant curve by ordinal id"""
        if not 0 <= index < len(self.curves):
            raise UsageError(f"Unknown curve {index}; ids are 0..{len(self.curves) - 1}")
        return self.curves[index]

    def curves_through(self, selector):
        """Curves having the given fixed point as an endpoint"""
        return list(self.adjacency[self.point(selector).index])

    def to_networkx(self):
        """Undirected networkx graph on fixed point ids, edges carry curve id and root"""
        graph = nx.Graph()
        graph.add_nodes_from(p.index for p in self.fixed_points)
        for c in self.curves:
            graph.add_edge(c.source.index, c.target.index, curve=c.index, root=c.root.coefficients)
        return graph

    def is_connected(self):
        """Whether the GKM graph is connected"""
        return nx.is_connected(self.to_networkx())

    def __repr__(self):
        """Summary"""
        return (
            f"GkmGraph({self.parabolic}: {len(self.fixed_points)} fixed points, "
            f"{len(self.curves)} invariant curves)"
        )


@profiler.profileit(name="invariant_curves")
def invariant_curves(root_system, parabolic, max_cosets=DEFAULT_MAX_COSETS):
    """Enumerate the GKM graph of G/P.

    For every fixed point w(lambda_P) and positive root alpha with nonzero pairing, the
    curve towards s_alpha w(lambda_P) is emitted once, from its lower endpoint.
    """
    points = fixed_points(root_system, parabolic, max_cosets)
    index = {p.weight: p.index for p in points}
    mus = np.array([p.weight for p in points], dtype=np.int64).reshape(len(points), -1)
    pairings = root_system.pairings(mus)  # (N, m)
    # s_alpha(mu) = mu - <mu, alpha^vee> alpha, for every (point, positive root)
    targets = mus[:, None, :] - pairings[:, :, None] * root_system.root_weights[None, :, :]

    curves = []
    for i, a in zip(*np.nonzero(pairings)):
        j = index[tuple(targets[i, a].tolist())]
        if j > i:
            log.log_assert(pairings[i, a] > 0, "Lower endpoint must pair positively")
            curves.append(
                InvariantCurve(
                    len(curves),
                    points[i],
                    points[j],
                    root_system.positive_roots[a],
                    int(pairings[i, a]),
                )
            )
    graph = GkmGraph(root_system, parabolic, points, curves)
    log.info(f"Enumerated {graph!r}")
    return graph


def curves_through(graph, point):
    """Curves of the GKM graph passing through a fixed point"""
    return graph.curves_through(point)


def gkm_graph(parabolic, max_cosets=DEFAULT_MAX_COSETS):
    """GKM graph of G/P from the parabolic alone"""
    return invariant_curves(parabolic.root_system, parabolic, max_cosets)

