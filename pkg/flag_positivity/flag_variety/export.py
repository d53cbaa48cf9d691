# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""JSON and DOT renderings of a GKM graph (fixed field order, integers only)."""


def gkm_to_dict(graph):
    """GKM graph as a JSON-ready dict"""
    return {
        "cartan_type": str(graph.cartan),
        "omitted": list(graph.parabolic.omitted),
        "nodes": [
            {"id": p.index, "word": list(p.word), "length": p.length} for p in graph.fixed_points
        ],
        "edges": [
            {
                "id": c.index,
                "source": c.source.index,
                "target": c.target.index,
                "root": list(c.root.coefficients),
            }
            for c in graph.curves
        ],
    }


def _word_label(word):
    return "".join(f"s{i}" for i in word) if word else "e"


def gkm_to_dot(graph):
    """GKM graph in Graphviz DOT syntax; nodes ranked by length"""
    lines = [f'graph "{graph.parabolic}" {{', "  rankdir=BT;"]
    for p in graph.fixed_points:
        lines.append(f'  {p.index} [label="{_word_label(p.word)}"];')
    for length in sorted({p.length for p in graph.fixed_points}):
        same = " ".join(str(p.index) for p in graph.fixed_points if p.length == length)
        lines.append(f"  {{ rank=same; {same} }}")
    for c in graph.curves:
        label = ",".join(str(k) for k in c.root.coefficients)
        lines.append(f'  {c.source.index} -- {c.target.index} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
