"""DOT Hasse diagrams and JSON reports."""
from __future__ import annotations

import json
from typing import Callable, Sequence

from .complex import FinitePoset
from .coxeter import GroupElement, one_line

SCHEMA_VERSION = 1


def element_label(w: GroupElement) -> str:
    """One-line notation in type A, otherwise the canonical word."""
    if w.system.is_type_a():
        return "".join(map(str, one_line(w)))
    return str(w)


def facet_label(f: Sequence[int]) -> str:
    sep = "" if all(v < 10 for v in f) else ","
    return sep.join(map(str, f))


def hasse_dot(poset: FinitePoset, label: Callable[[object], str], rank: Callable[[object], int],
              name: str = "hasse") -> str:
    """Undirected DOT graph of the cover relation, nodes grouped by rank (bottom to top)."""
    lines = ["graph %s {" % name, "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, item in enumerate(poset.labels):
        lines.append('  n%d [label="%s"];' % (i, label(item)))
    by_rank: dict[int, list[int]] = {}
    for i, item in enumerate(poset.labels):
        by_rank.setdefault(rank(item), []).append(i)
    for r in sorted(by_rank):
        lines.append("  { rank=same; %s }" % " ".join("n%d;" % i for i in by_rank[r]))
    for a, b in poset.covers:
        lines.append("  n%d -- n%d;" % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2, sort_keys=True) + "\n"
