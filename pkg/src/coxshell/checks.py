"""Exhaustive and sampled checks of the structural statements about Coxeter groups.

Each function returns the list of counterexamples it finds (empty when the
statement holds on the given elements).
"""
from __future__ import annotations

import random
from typing import Callable, Iterable, Sequence

from .coxeter import (
    CoxeterSystem,
    GroupElement,
    bruhat_leq,
    parabolic_projection,
    project_left,
    project_right,
    weak_leq,
)
from .interval import check_cover_criterion, check_reflection_formula

Leq = Callable[[GroupElement, GroupElement], bool]


def reflection_formula_counterexamples(pairs: Iterable[tuple[GroupElement, GroupElement]]):
    bad = []
    for u, v in pairs:
        if weak_leq(u, v):
            ok, root = check_reflection_formula(u, v)
            if not ok:
                bad.append((u, v, root))
    return bad


def weak_pairs(elements: Sequence[GroupElement]):
    return [(u, v) for u in elements for v in elements if weak_leq(u, v)]


def random_pairs(system: CoxeterSystem, count: int, max_length: int, seed: int):
    """``count`` weakly comparable pairs ``u <=_R v`` with ``l(v) <= max_length``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        v = system.element(rng.randrange(system.rank) for _ in range(rng.randint(0, max_length)))
        # a prefix of a reduced word of v lies below v in the right weak order
        u = system.element(v.word[: rng.randint(0, v.length)])
        out.append((u, v))
    return out


def deodhar_counterexamples(elements: Sequence[GroupElement], leq: Leq = bruhat_leq):
    """``u <= v`` iff ``P^{(s)}(u) <= P^{(s)}(v)`` for all ``s`` (and for all ``s`` in ``D_R(u)``)."""
    rank = elements[0].system.rank if elements else 0
    proj = {w.word: [parabolic_projection(w, s) for s in range(rank)] for w in elements}
    bad = []
    for u in elements:
        for v in elements:
            lhs = leq(u, v)
            all_s = all(leq(proj[u.word][s], proj[v.word][s]) for s in range(rank))
            des_s = all(leq(proj[u.word][s], proj[v.word][s]) for s in u.right_descents())
            if lhs != all_s:
                bad.append(("all generators", u, v))
            if lhs != des_s:
                bad.append(("right descents", u, v))
    return bad


def cover_criterion_counterexamples(elements: Sequence[GroupElement]):
    return [(u, v) for u in elements for v in elements if not check_cover_criterion(u, v)]


def _is_simple_root(root) -> bool:
    nonzero = [c for c in root if c]
    return len(nonzero) == 1 and nonzero[0] == 1


def _reflect(system: CoxeterSystem, r: int, root):
    # sigma_r(x) = x - 2(alpha_r|x) alpha_r, then normalised to the positive root
    out = list(root)
    for t, c in enumerate(root):
        if c and system.gram[r][t]:
            out[r] = out[r] - 2 * system.gram[r][t] * c
    if any(c.sign() < 0 for c in out):
        out = [-c for c in out]
    return tuple(out)


def reflection_lemma_counterexamples(elements: Sequence[GroupElement]):
    """``t in T_R(w)``, ``r not in D_R(w)``, ``w r w^-1 in S``  imply  ``r t r in T_R(w)``."""
    bad = []
    for w in elements:
        system = w.system
        right_roots = w.inverse().left_inversion_roots()
        for r in range(system.rank):
            if r in w.right_descents() or not _is_simple_root(w.action[r]):
                continue
            for root in right_roots:
                if _reflect(system, r, root) not in right_roots:
                    bad.append((w, r, root))
    return bad


def reflection_corollary_counterexamples(elements: Sequence[GroupElement]):
    """``u <=_R v, w`` and ``P^{(s)}(v) = P^{(s)}(w)`` for ``s in D_R(u^-1 v)`` imply ``v <=_R w``."""
    bad = []
    for u in elements:
        above = [x for x in elements if weak_leq(u, x)]
        for v in above:
            des = (u.inverse() * v).right_descents()
            for w in above:
                if all(parabolic_projection(v, s) == parabolic_projection(w, s) for s in des):
                    if not weak_leq(v, w):
                        bad.append((u, v, w))
    return bad


def quotient_cases_counterexamples(elements: Sequence[GroupElement], J: Iterable[int]):
    """For ``w in W^J`` and ``s in S`` exactly one of the three cases holds (with unique ``r``)."""
    J = frozenset(J)
    bad = []
    for w in elements:
        if w.right_descents() & J:
            continue
        system = w.system
        for s in range(system.rank):
            sw = system.generators[s] * w
            in_quot = not (sw.right_descents() & J)
            c1 = s in w.left_descents()
            c2 = not c1 and in_quot
            c3 = not c1 and not in_quot
            if c1 and not in_quot:
                bad.append(("case 1", w, s))
            if c1 + c2 + c3 != 1:
                bad.append(("not exclusive", w, s))
            if c3:
                rs = [r for r in J if w * system.generators[r] == sw]
                if len(rs) != 1:
                    bad.append(("case 3", w, s))
    return bad


def projection_commutation_counterexamples(elements: Sequence[GroupElement]):
    """``P^{(s)}(Q^{{r}}(w)) = Q^{{r}}(P^{(s)}(w))`` for all generators ``r, s``."""
    bad = []
    for w in elements:
        rank = w.system.rank
        for r in range(rank):
            for s in range(rank):
                J = set(range(rank)) - {s}
                lhs = project_right(project_left(w, {r})[1], J)[0]
                rhs = project_left(project_right(w, J)[0], {r})[1]
                if lhs != rhs:
                    bad.append((w, r, s))
    return bad
