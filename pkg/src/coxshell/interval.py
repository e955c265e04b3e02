"""Right weak order intervals and the descending-reflection formula on them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .coxeter import GroupElement, parabolic_projection, weak_leq
from .errors import NonTerminating, NotComparable

__all__ = [
    "WeakInterval",
    "enumerate_interval",
    "interval_descent_set",
    "check_reflection_formula",
    "check_cover_criterion",
    "coxeter_facet",
]

DEFAULT_ELEMENT_CAP = 10**6


@dataclass(frozen=True)
class WeakInterval:
    """The interval ``[u, v]_R`` with its covers ``(i, j, s)`` meaning ``elements[j] = elements[i] * s``."""

    u: GroupElement
    v: GroupElement
    elements: tuple[GroupElement, ...]
    covers: tuple[tuple[int, int, int], ...]
    index: dict = field(compare=False, repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w):
        return w.word in self.index

    def position(self, w: GroupElement) -> int:
        return self.index[w.word]


def _require_leq(u: GroupElement, v: GroupElement):
    u.system.check_same(v)
    if not weak_leq(u, v):
        raise NotComparable("%s is not below %s in the right weak order" % (u, v))


def enumerate_interval(u: GroupElement, v: GroupElement, cap: int = DEFAULT_ELEMENT_CAP) -> WeakInterval:
    """Breadth-first search from ``u`` through right covers staying below ``v``.

    Elements come out sorted by length, then canonical word.
    """
    _require_leq(u, v)
    rank = u.system.rank
    seen = {u.word: u}
    queue = deque([u])
    edges = []
    while queue:
        w = queue.popleft()
        for s in range(rank):
            if s in w.right_descents():
                continue
            ws = w.mul_gen(s)
            if ws.length > v.length or not weak_leq(ws, v):
                continue
            edges.append((w, ws, s))
            if ws.word not in seen:
                seen[ws.word] = ws
                if len(seen) > cap:
                    raise NonTerminating("interval has more than %d elements" % cap)
                queue.append(ws)
    elements = tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))
    index = {w.word: i for i, w in enumerate(elements)}
    covers = tuple(sorted((index[a.word], index[b.word], s) for a, b, s in edges))
    return WeakInterval(u, v, elements, covers, index)


def interval_descent_set(u: GroupElement, v: GroupElement) -> frozenset[int]:
    """``D_R(u, v) = {s in D_R(v) : u <=_R vs}``, checked against ``D_R(u^-1 v)``."""
    _require_leq(u, v)
    des = frozenset(s for s in v.right_descents() if weak_leq(u, v.mul_gen(s)))
    assert des == (u.inverse() * v).right_descents(), "interval descent set differs from D_R(u^-1 v)"
    return des


def reflection_formula_sides(u: GroupElement, v: GroupElement):
    """Both sides of ``T_L(v) = T_L(u) ∪ ⋃_{s ∈ D_R(u^-1 v)} T_L(P^{(s)}(v))`` as root sets."""
    _require_leq(u, v)
    lhs = v.left_inversion_roots()
    rhs = set(u.left_inversion_roots())
    for s in sorted((u.inverse() * v).right_descents()):
        rhs |= parabolic_projection(v, s).left_inversion_roots()
    return lhs, frozenset(rhs)


def check_reflection_formula(u: GroupElement, v: GroupElement):
    """Returns ``(True, None)`` or ``(False, root)`` with a root in exactly one side."""
    lhs, rhs = reflection_formula_sides(u, v)
    diff = lhs ^ rhs
    if diff:
        return False, sorted(diff, key=lambda r: tuple(float(c) for c in r))[0]
    return True, None


def coxeter_facet(w: GroupElement) -> frozenset[tuple[tuple[int, ...], int]]:
    """``P(w)`` as a set of ``(canonical word of P^{(s)}(w), s)`` pairs."""
    return frozenset((parabolic_projection(w, s).word, s) for s in range(w.system.rank))


def check_cover_criterion(u: GroupElement, v: GroupElement) -> bool:
    """True when ``|P(u) ∩ P(v)| = |S|-1`` holds exactly when ``u, v`` differ by a right generator."""
    u.system.check_same(v)
    rank = u.system.rank
    shared = len(coxeter_facet(u) & coxeter_facet(v))
    adjacent = abs(u.length - v.length) == 1 and (u.inverse() * v).length == 1
    return (shared == rank - 1) == adjacent
