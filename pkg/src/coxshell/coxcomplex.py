"""The Coxeter complex ``C(u, v)`` of a right weak interval and its linear shelling labeling."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, NamedTuple, Sequence

from .complex import FinitePoset, IntPolynomial, PureComplex, gale_leq, is_shelling
from .coxeter import GroupElement, bruhat_leq, parabolic_projection
from .errors import InvalidComplex, NotLinearExtension
from .interval import WeakInterval, enumerate_interval

__all__ = [
    "CoxVertex",
    "CoxComplex",
    "facet_of",
    "supports",
    "default_support_order",
    "labeling_L",
    "build_complex",
    "weak_poset",
    "bruhat_interval_poset",
    "preceq_poset",
    "check_order_embeddings",
    "shelling_from_weak_extension",
    "h_by_descent_formula",
    "classify_thin",
]


class CoxVertex(NamedTuple):
    quotient: GroupElement  # an element of W^{S - {gen}}
    gen: int


def facet_of(w: GroupElement) -> frozenset[CoxVertex]:
    """``P(w) = {(P^{(s)}(w), s) : s in S}``."""
    out = []
    for s in range(w.system.rank):
        q = parabolic_projection(w, s)
        assert q.right_descents() <= {s}
        out.append(CoxVertex(q, s))
    return frozenset(out)


def supports(u: GroupElement, v: GroupElement, interval: WeakInterval | None = None) -> dict[int, frozenset]:
    """``supp_s [u, v]_R = {P^{(s)}(y)}`` for every generator ``s``."""
    if interval is None:
        interval = enumerate_interval(u, v)
    return {
        s: frozenset(parabolic_projection(w, s) for w in interval)
        for s in range(u.system.rank)
    }


def default_support_order(supp: Mapping[int, frozenset]) -> dict[int, list[GroupElement]]:
    # length-compatible, hence a linear extension of the Bruhat order
    return {s: sorted(elems, key=lambda w: (w.length, w.word)) for s, elems in supp.items()}


def _validate_orders(supp, orders, gen_order):
    rank = len(supp)
    if sorted(gen_order) != list(range(rank)):
        raise NotLinearExtension("gen_order %r is not an ordering of the generators" % (gen_order,))
    for s in range(rank):
        lst = list(orders.get(s, ()))
        if len(lst) != len(supp[s]) or set(lst) != set(supp[s]):
            raise NotLinearExtension("order for generator %d does not list its support" % s)
        for i, j in combinations(range(len(lst)), 2):
            if bruhat_leq(lst[j], lst[i]):
                raise NotLinearExtension(
                    "support order for generator %d puts %s before %s" % (s, lst[i], lst[j]))


@dataclass(frozen=True)
class CoxComplex:
    interval: WeakInterval
    facets: dict            # canonical word of w -> P(w)
    vertex_index: dict      # CoxVertex -> label in 1..n
    labels: dict            # canonical word of w -> L_{u,v}(w)
    orders: dict            # generator -> support list
    gen_order: tuple

    @property
    def n(self) -> int:
        return len(self.vertex_index)

    @property
    def k(self) -> int:
        return len(self.gen_order)

    def L(self, w: GroupElement) -> tuple[int, ...]:
        return self.labels[w.word]

    def tuples(self) -> list[tuple[int, ...]]:
        """``L_{u,v}(w)`` for the interval elements, in interval order."""
        return [self.labels[w.word] for w in self.interval]

    def as_pure_complex(self) -> PureComplex:
        return PureComplex.from_facets(self.tuples(), self.n)


def build_complex(u: GroupElement, v: GroupElement, orders: Mapping[int, Sequence[GroupElement]] | None = None,
                  gen_order: Sequence[int] | None = None) -> CoxComplex:
    """Facets ``P(w)`` of ``C(u, v)`` and the labeling ``L_{u,v}`` built from the support orders."""
    interval = enumerate_interval(u, v)
    rank = u.system.rank
    gen_order = tuple(range(rank)) if gen_order is None else tuple(gen_order)
    supp = supports(u, v, interval)
    orders = default_support_order(supp) if orders is None else {s: list(o) for s, o in orders.items()}
    _validate_orders(supp, orders, gen_order)

    vertex_index = {}
    for s in gen_order:
        for q in orders[s]:
            vertex_index[CoxVertex(q, s)] = len(vertex_index) + 1

    facets = {}
    labels = {}
    for w in interval:
        pw = facet_of(w)
        facets[w.word] = pw
        labels[w.word] = tuple(sorted(vertex_index[x] for x in pw))
    if len(set(map(frozenset, facets.values()))) != len(facets):
        raise InvalidComplex("facet map is not injective on the interval")
    return CoxComplex(interval, facets, vertex_index, labels, orders, gen_order)


def labeling_L(u: GroupElement, v: GroupElement, orders=None, gen_order=None) -> dict[GroupElement, tuple]:
    c = build_complex(u, v, orders, gen_order)
    return {w: c.L(w) for w in c.interval}


def weak_poset(interval: WeakInterval) -> FinitePoset:
    return FinitePoset(len(interval), [(a, b) for a, b, _ in interval.covers], interval.elements)


def bruhat_interval_poset(interval: WeakInterval) -> FinitePoset:
    return FinitePoset.from_relation(interval.elements, bruhat_leq)


def preceq_poset(u: GroupElement, v: GroupElement, complex_: CoxComplex | None = None) -> FinitePoset:
    """The order ``x ≼ y  ⇔  L(x) ≤ L(y)`` (Gale order) on the interval."""
    c = complex_ or build_complex(u, v)
    tuples = c.tuples()
    assert len(set(tuples)) == len(tuples), "L is not injective"
    idx = FinitePoset.from_relation(tuples, gale_leq)
    return FinitePoset(idx.size, idx.covers, c.interval.elements)


def _relation(p: FinitePoset) -> set[tuple[int, int]]:
    return {(a, b) for a in range(p.size) for b in range(p.size) if p.less(a, b)}


def check_order_embeddings(u: GroupElement, v: GroupElement) -> bool:
    """``x ≤_R y ⇒ x ≤ y ⇒ x ≼ y`` on every pair of the interval."""
    c = build_complex(u, v)
    weak = _relation(weak_poset(c.interval))
    bruhat = _relation(bruhat_interval_poset(c.interval))
    pre = _relation(preceq_poset(u, v, c))
    return weak <= bruhat <= pre


def shelling_from_weak_extension(u: GroupElement, v: GroupElement, ext: Sequence[GroupElement],
                                 complex_: CoxComplex | None = None) -> list[tuple[int, ...]]:
    """The ``L``-tuples of ``P(w_1), ..., P(w_p)`` for a linear extension of the weak order."""
    c = complex_ or build_complex(u, v)
    interval = c.interval
    try:
        order = [interval.position(w) for w in ext]
    except KeyError:
        raise NotLinearExtension("sequence leaves the interval") from None
    if not weak_poset(interval).is_linear_extension(order):
        raise NotLinearExtension("sequence is not a linear extension of the weak order")
    seq = [c.L(w) for w in ext]
    assert is_shelling(seq), "weak-order extension did not give a shelling order"
    return seq


def h_by_descent_formula(u: GroupElement, v: GroupElement) -> IntPolynomial:
    """``sum over z in [u, v]_R of q^{|D_R(u^-1 z)|}``."""
    interval = enumerate_interval(u, v)
    uinv = u.inverse()
    counts = [0] * (u.system.rank + 1)
    for z in interval:
        counts[len((uinv * z).right_descents())] += 1
    return IntPolynomial(counts)


def classify_thin(u: GroupElement, v: GroupElement) -> tuple[str, dict]:
    """``"thin"`` if every ridge lies in exactly two facets, else ``"subthin"``.

    Also returns the ridge -> facet-count table (ridges as label tuples).
    """
    c = build_complex(u, v)
    table: Counter = Counter()
    for t in c.tuples():
        for i in range(len(t)):
            table[t[:i] + t[i + 1:]] += 1
    worst = max(table.values())
    assert worst <= 2, "a ridge lies in %d facets" % worst
    kind = "thin" if all(n == 2 for n in table.values()) else "subthin"
    return kind, dict(sorted(table.items()))
