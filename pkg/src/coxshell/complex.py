"""Pure simplicial complexes as subsets of ``[n]^k_<`` and their shelling orders.

Facets are strictly increasing tuples of positive integers.  Checkers work on
bitmasks internally (vertex ``v`` is bit ``v``), which keeps the exhaustive
labeling search over ``n!`` relabelings affordable at desk scale.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    InvalidComplex,
    NotBijective,
    PreconditionFailed,
    SizeMismatch,
    TooLarge,
    TooMany,
)

__all__ = [
    "Facet",
    "PureComplex",
    "FinitePoset",
    "IntPolynomial",
    "Verdict",
    "gale_leq",
    "is_shelling",
    "is_strong_shelling",
    "check_order",
    "tail_swap",
    "bruhat_poset",
    "linear_extensions",
    "count_linear_extensions",
    "all_extensions_shelling",
    "decide_linear_shellability",
    "find_shelling_order",
    "f_polynomial",
    "h_polynomial",
    "relabel",
    "restriction_sizes",
    "lex_order",
    "revlex_order",
    "parse_facets",
    "format_facets",
]

Facet = tuple  # strictly increasing tuple of ints in [1..n]

MODES = ("shelling", "strong")
DEFAULT_LABELING_CAP = 9


def make_facet(verts: Iterable[int]) -> Facet:
    f = tuple(int(v) for v in verts)
    if any(v < 1 for v in f):
        raise InvalidComplex("vertices must be positive integers: %r" % (f,))
    if any(a >= b for a, b in zip(f, f[1:])):
        raise InvalidComplex("facet %r is not strictly increasing" % (f,))
    return f


@dataclass(frozen=True)
class PureComplex:
    """A pure complex by its facets (stored in lexicographic order)."""

    n: int
    k: int
    facets: tuple[Facet, ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], n: int | None = None) -> PureComplex:
        fs = sorted({make_facet(f) for f in facets})
        if not fs:
            raise InvalidComplex("a complex needs at least one facet")
        k = len(fs[0])
        if any(len(f) != k for f in fs):
            raise InvalidComplex("facets of different sizes: the complex is not pure")
        top = max(f[-1] for f in fs) if k else 0
        if n is None:
            n = top
        if top > n:
            raise InvalidComplex("vertex %d exceeds n=%d" % (top, n))
        return cls(n, k, tuple(fs))

    def __len__(self):
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dim(self) -> int:
        return self.k - 1


class Verdict(NamedTuple):
    """Outcome of a shelling check; ``witness`` is the first failing ``(i, j)`` (0-based)."""

    ok: bool
    witness: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


def gale_leq(x: Facet, y: Facet) -> bool:
    """Componentwise (Gale / Bruhat) order on ``[n]^k_<``."""
    if len(x) != len(y):
        raise SizeMismatch("facets of different sizes: %r, %r" % (x, y))
    return all(a <= b for a, b in zip(x, y))


def lex_order(facets: Iterable[Facet]) -> list[Facet]:
    return sorted(facets)


def revlex_order(facets: Iterable[Facet]) -> list[Facet]:
    return sorted(facets, key=lambda f: f[::-1])


def _mask(f: Iterable[int]) -> int:
    m = 0
    for v in f:
        m |= 1 << v
    return m


def _violation(masks: Sequence[int], k: int, strong: bool) -> tuple[int, int] | None:
    ridge = k - 1
    for j in range(1, len(masks)):
        fj = masks[j]
        if strong:
            swaps = []
            for r in range(j):
                fr = masks[r]
                if (fj & fr).bit_count() == ridge:
                    swaps.append((fj & ~fr, fr & ~fj))
            for i in range(j):
                fi = masks[i]
                if not any(a & ~fi and b & fi for a, b in swaps):
                    return i, j
        else:
            # vertices a of C_j with C_j - a contained in some earlier facet
            removable = 0
            for r in range(j):
                fr = masks[r]
                if (fj & fr).bit_count() == ridge:
                    removable |= fj & ~fr
            for i in range(j):
                if not (fj & ~masks[i] & removable):
                    return i, j
    return None


def _sizes(seq: Sequence[Facet]) -> int:
    if not seq:
        raise InvalidComplex("empty facet sequence")
    k = len(seq[0])
    if any(len(f) != k for f in seq):
        raise SizeMismatch("facet sequence is not pure")
    return k


def is_shelling(seq: Sequence[Facet]) -> Verdict:
    """Every pair ``i < j`` admits ``r < j`` with ``C_r = C_j + {a, b}``, ``a ∈ C_j - C_i``."""
    k = _sizes(seq)
    bad = _violation([_mask(f) for f in seq], k, strong=False)
    return Verdict(bad is None, bad)


def is_strong_shelling(seq: Sequence[Facet]) -> Verdict:
    """As :func:`is_shelling` with the extra demand ``b ∈ C_i``."""
    k = _sizes(seq)
    bad = _violation([_mask(f) for f in seq], k, strong=True)
    return Verdict(bad is None, bad)


def check_order(seq: Sequence[Facet], mode: str = "shelling") -> Verdict:
    if mode == "shelling":
        return is_shelling(seq)
    if mode == "strong":
        return is_strong_shelling(seq)
    raise ValueError("mode must be one of %s" % (MODES,))


def tail_swap(seq: Sequence[Facet], strong: bool = False) -> list[Facet]:
    """Exchange the last two facets of a (strong) shelling order whose overlap is below a ridge."""
    seq = list(seq)
    if len(seq) < 3:
        raise PreconditionFailed("tail swap needs at least 3 facets")
    k = _sizes(seq)
    overlap = len(set(seq[-2]) & set(seq[-1]))
    if overlap >= k - 1:
        raise PreconditionFailed("last two facets share %d >= k-1 = %d vertices" % (overlap, k - 1))
    mode = "strong" if strong else "shelling"
    if not check_order(seq, mode):
        raise PreconditionFailed("input is not a %s order" % mode)
    out = seq[:-2] + [seq[-1], seq[-2]]
    assert check_order(out, mode), "tail swap produced a non-%s order" % mode
    return out


def restriction_sizes(seq: Sequence[Facet]) -> list[int]:
    """Size of the restriction face of each facet along a shelling order."""
    k = _sizes(seq)
    masks = [_mask(f) for f in seq]
    out = []
    for j, fj in enumerate(masks):
        removable = 0
        for fr in masks[:j]:
            if (fj & fr).bit_count() == k - 1:
                removable |= fj & ~fr
        out.append(removable.bit_count())
    return out


# -- posets -----------------------------------------------------------------

class FinitePoset:
    """A poset on ``range(size)`` given by its cover relation."""

    def __init__(self, size: int, covers: Iterable[tuple[int, int]], labels: Sequence | None = None):
        self.size = size
        self.covers = tuple(sorted(set(covers)))
        self.labels = tuple(labels) if labels is not None else tuple(range(size))
        self.below = [[] for _ in range(size)]  # lower covers
        self.above = [[] for _ in range(size)]
        for a, b in self.covers:
            if not (0 <= a < size and 0 <= b < size) or a == b:
                raise InvalidComplex("bad cover (%r, %r)" % (a, b))
            self.below[b].append(a)
            self.above[a].append(b)
        self._order = self._topological()
        self.down = self._downsets()
        for a, b in self.covers:
            if any(c != a and self.down[c] >> a & 1 for c in self.below[b]):
                raise InvalidComplex("cover (%d, %d) is implied by other covers" % (a, b))

    @classmethod
    def from_relation(cls, items: Sequence, leq) -> FinitePoset:
        """The poset induced on ``items`` by ``leq``; covers by transitive reduction."""
        h = len(items)
        less = [[i != j and leq(items[i], items[j]) for j in range(h)] for i in range(h)]
        covers = []
        for i in range(h):
            for j in range(h):
                if less[i][j] and not any(less[i][m] and less[m][j] for m in range(h)):
                    covers.append((i, j))
        return cls(h, covers, items)

    def _topological(self):
        indeg = [len(b) for b in self.below]
        ready = [i for i in range(self.size) if not indeg[i]]
        order = []
        while ready:
            i = ready.pop()
            order.append(i)
            for j in self.above[i]:
                indeg[j] -= 1
                if not indeg[j]:
                    ready.append(j)
        if len(order) != self.size:
            raise InvalidComplex("cover relation has a cycle")
        return order

    def _downsets(self):
        down = [0] * self.size  # bitmask of strictly smaller elements
        for i in self._order:
            m = 0
            for a in self.below[i]:
                m |= down[a] | (1 << a)
            down[i] = m
        return down

    def less(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def leq(self, a: int, b: int) -> bool:
        return a == b or self.less(a, b)

    def is_linear_extension(self, order: Sequence[int]) -> bool:
        if sorted(order) != list(range(self.size)):
            return False
        pos = {x: i for i, x in enumerate(order)}
        return all(pos[a] < pos[b] for a, b in self.covers)

    def __repr__(self):
        return "FinitePoset(size=%d, covers=%d)" % (self.size, len(self.covers))


def bruhat_poset(x: PureComplex) -> FinitePoset:
    """Gale order induced on the facets; element ``i`` is ``x.facets[i]``."""
    return FinitePoset.from_relation(x.facets, gale_leq)


def linear_extensions(p: FinitePoset, cap: int = 10**5) -> list[tuple[int, ...]]:
    """All linear extensions, in lexicographic order, by backtracking."""
    h = p.size
    need = [len(b) for b in p.below]
    placed = []
    out = []

    def extend():
        if len(placed) == h:
            out.append(tuple(placed))
            if len(out) > cap:
                raise TooMany("more than %d linear extensions" % cap)
            return
        for x in range(h):
            if need[x] == 0:
                need[x] = -1
                placed.append(x)
                for y in p.above[x]:
                    need[y] -= 1
                extend()
                for y in p.above[x]:
                    need[y] += 1
                placed.pop()
                need[x] = 0

    extend()
    return out


def count_linear_extensions(p: FinitePoset) -> int:
    """Number of linear extensions by dynamic programming over order ideals."""
    full = (1 << p.size) - 1
    ways = {0: 1}
    for _ in range(p.size):
        nxt: dict[int, int] = {}
        for ideal, cnt in ways.items():
            for x in range(p.size):
                if not ideal >> x & 1 and p.down[x] & ~ideal == 0:
                    key = ideal | 1 << x
                    nxt[key] = nxt.get(key, 0) + cnt
        ways = nxt
    return ways.get(full, 0)


def all_extensions_shelling(x: PureComplex, mode: str = "shelling", exhaustive: bool = False,
                            cap: int = 10**5) -> bool:
    """Whether the linear extensions of the facet poset are (strong) shelling orders.

    Only the lexicographic order is examined unless ``exhaustive``; then every
    extension is checked and must agree with the lexicographic verdict.
    """
    verdict = bool(check_order(x.facets, mode))
    if exhaustive:
        p = bruhat_poset(x)
        for ext in linear_extensions(p, cap):
            got = bool(check_order([x.facets[i] for i in ext], mode))
            assert got == verdict, "extension %r disagrees with the lexicographic order" % (ext,)
    return verdict


# -- labelings ----------------------------------------------------------------

def relabel(x: PureComplex, labeling: Sequence[int]) -> PureComplex:
    """Apply ``v -> labeling[v-1]`` to every vertex; ``labeling`` is a permutation of ``1..n``."""
    labeling = tuple(labeling)
    if sorted(labeling) != list(range(1, x.n + 1)):
        raise NotBijective("%r is not a permutation of 1..%d" % (labeling, x.n))
    return PureComplex.from_facets((sorted(labeling[v - 1] for v in f) for f in x.facets), x.n)


def _search_block(args):
    facets, verts, k, strong, first = args
    m = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    cols = [[index[v] for v in f] for f in facets]
    labels = [lab for lab in range(1, m + 1) if lab != first]
    top = m + 1
    for rest in itertools.permutations(labels):
        perm = (first,) + rest if first is not None else rest
        # bit (top - label): descending masks list facets in lexicographic order
        masks = sorted((sum(1 << (top - perm[c]) for c in f) for f in cols), reverse=True)
        if _violation(masks, k, strong) is None:
            return perm
    return None


def decide_linear_shellability(x: PureComplex, mode: str = "shelling", cap: int = DEFAULT_LABELING_CAP,
                               workers: int = 1):
    """A vertex labeling under which lex order is a (strong) shelling order, or ``None``.

    The labeling is returned as a dict ``vertex -> label`` over the vertices of
    ``x``; labelings are tried in lexicographic order of the label sequence and
    the first success is reported (also with ``workers > 1``).
    """
    if mode not in MODES:
        raise ValueError("mode must be one of %s" % (MODES,))
    verts = x.vertices
    m = len(verts)
    if m > cap:
        raise TooLarge("%d vertices exceed the labeling cap %d (%d! labelings)" % (m, cap, m))
    strong = mode == "strong"
    if m == 0:
        return {}
    if workers <= 1:
        found = _search_block((x.facets, verts, x.k, strong, None))
    else:
        # one block per label of the first vertex; blocks are in lexicographic order
        blocks = [(x.facets, verts, x.k, strong, first) for first in range(1, m + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            found = next((r for r in pool.map(_search_block, blocks) if r is not None), None)
    if found is None:
        return None
    return dict(zip(verts, found))


def labelings_searched(x: PureComplex) -> int:
    return math.factorial(len(x.vertices))


def find_shelling_order(x: PureComplex, mode: str = "shelling") -> list[Facet] | None:
    """Some (strong) shelling order of ``x``, by greedy depth-first search with backtracking."""
    strong = mode == "strong"
    facets = list(x.facets)
    masks = [_mask(f) for f in facets]
    h = len(masks)
    dead: set[int] = set()
    order: list[int] = []

    def ok_next(j):
        return _violation([masks[i] for i in order] + [masks[j]], x.k, strong) is None

    def grow(used):
        if len(order) == h:
            return True
        if used in dead:
            return False
        for j in range(h):
            if not used >> j & 1 and ok_next(j):
                order.append(j)
                if grow(used | 1 << j):
                    return True
                order.pop()
        dead.add(used)
        return False

    if grow(0):
        return [facets[i] for i in order]
    return None


# -- face counts ----------------------------------------------------------------

class IntPolynomial:
    """Integer polynomial in ``q``; ``coeffs[i]`` multiplies ``q**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, q):
        return sum(c * q**i for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return "IntPolynomial(%s)" % (list(self.coeffs),)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else "q" if i == 1 else "q^%d" % i
            if i and abs(c) == 1:
                term = ("-" if c < 0 else "") + mono
            else:
                term = str(c) + mono
            terms.append(term)
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")


def f_polynomial(x: PureComplex) -> IntPolynomial:
    """Faces counted by size; the constant term is the empty face."""
    faces = set()
    for f in x.facets:
        for r in range(len(f) + 1):
            faces.update(itertools.combinations(f, r))
    counts = [0] * (x.k + 1)
    for face in faces:
        counts[len(face)] += 1
    return IntPolynomial(counts)


def h_polynomial(x: PureComplex) -> IntPolynomial:
    """``h(q) = sum_i f_{i-1} q^i (1-q)^(k-i)``."""
    f = f_polynomial(x).coeffs
    k = x.k
    h = [0] * (k + 1)
    for i, fi in enumerate(f):
        # expand (1-q)^(k-i)
        for j in range(k - i + 1):
            h[i + j] += fi * math.comb(k - i, j) * (-1) ** j
    return IntPolynomial(h)


# -- facet files ----------------------------------------------------------------

def parse_facets(text: str) -> list[Facet]:
    """One facet per line, space separated; ``#`` comments and blank lines are ignored."""
    out = []
    for lineno, line in enumerate(text.split("\n"), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(make_facet(int(tok) for tok in line.split()))
        except (ValueError, InvalidComplex) as exc:
            raise InvalidComplex("line %d: %s" % (lineno, exc)) from None
    return out


def format_facets(facets: Iterable[Facet]) -> str:
    return "".join(" ".join(map(str, f)) + "\n" for f in facets)
