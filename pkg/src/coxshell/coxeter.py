"""Coxeter systems of finite rank through the standard geometric representation.

An element ``w`` is stored as the exact matrix of ``sigma_w`` acting on the simple
roots (column ``t`` holds ``sigma_w(alpha_t)``) together with a canonical reduced
word.  Generators are 0-based indices into the Coxeter matrix; ``names`` gives the
printable labels (``s1, s2, ...`` for type A, ``s0, s1, ...`` for type B).
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import InvalidMatrix, NonTerminating, NotTypeA, SystemMismatch, UnsupportedOrder
from .exactnum import INFINITY, ONE, ZERO, AlgebraicNumber, bilinear_entry

__all__ = [
    "CoxeterSystem",
    "GroupElement",
    "new_system",
    "multiply",
    "inverse",
    "right_descents",
    "left_descents",
    "left_inversion_roots",
    "weak_leq",
    "bruhat_leq",
    "project_right",
    "project_left",
    "parabolic_projection",
    "one_line",
]

Root = tuple  # tuple of AlgebraicNumber over the simple-root basis

# words longer than this signal a corrupted action matrix
DEFAULT_WORD_BOUND = 10_000


def root_sign(root: Root) -> int:
    """+1 for a positive root, -1 for a negative one.

    Raises ``AssertionError`` on a mixed-sign vector, which cannot be a root.
    """
    pos = neg = False
    for c in root:
        sg = c.sign()
        if sg > 0:
            pos = True
        elif sg < 0:
            neg = True
    assert pos != neg, "vector %s is neither positive nor negative" % (root,)
    return 1 if pos else -1


class CoxeterSystem:
    """A Coxeter system given by its Coxeter matrix (``0`` encodes ``∞``)."""

    def __init__(self, matrix: Sequence[Sequence[int]], names: Sequence[str] | None = None,
                 type_name: str | None = None, word_bound: int = DEFAULT_WORD_BOUND):
        matrix = _validate_matrix(matrix)
        self.matrix = matrix
        self.rank = len(matrix)
        self.type_name = type_name
        self.names = tuple(names) if names is not None else tuple("s%d" % (i + 1) for i in range(self.rank))
        if len(self.names) != self.rank:
            raise InvalidMatrix("need %d generator names" % self.rank)
        self.word_bound = word_bound
        self.gram = tuple(tuple(bilinear_entry(m) for m in row) for row in matrix)
        # sigma_s(alpha_t) = alpha_t - 2(alpha_s|alpha_t) alpha_s
        self._twob = tuple(tuple(2 * b for b in row) for row in self.gram)
        self.gen_actions = tuple(self._generator_action(s) for s in range(self.rank))
        self._check_generators()
        self._cache: dict[tuple, GroupElement] = {}
        self._by_action: dict[tuple, GroupElement] = {}
        self.identity = self._make(self._identity_action(), ())
        self.generators = tuple(self.element([s]) for s in range(self.rank))

    # -- construction ---------------------------------------------------

    @classmethod
    def from_type(cls, name: str) -> CoxeterSystem:
        """Build ``A<n>``, ``B<n>`` or ``I2(m)``."""
        name = name.strip()
        if m := re.fullmatch(r"A(\d+)", name):
            n = int(m.group(1))
            if n < 1:
                raise InvalidMatrix("rank must be positive")
            mat = [[1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(n)] for i in range(n)]
            return cls(mat, ["s%d" % (i + 1) for i in range(n)], type_name=name)
        if m := re.fullmatch(r"B(\d+)", name):
            n = int(m.group(1))
            if n < 2:
                raise InvalidMatrix("type B needs rank >= 2")
            mat = [[1 if i == j else 3 if abs(i - j) == 1 else 2 for j in range(n)] for i in range(n)]
            mat[0][1] = mat[1][0] = 4
            return cls(mat, ["s%d" % i for i in range(n)], type_name=name)
        if m := re.fullmatch(r"I2\((\d+|inf|∞)\)", name):
            k = m.group(1)
            k = INFINITY if k in ("inf", "∞") else int(k)
            if k == 1:
                raise InvalidMatrix("dihedral order must be >= 2")
            return cls([[1, k], [k, 1]], ["s1", "s2"], type_name=name)
        raise InvalidMatrix("unknown Coxeter type %r (use A<n>, B<n>, I2(m) or an explicit matrix)" % name)

    @classmethod
    def from_json(cls, obj: dict) -> CoxeterSystem:
        if "type" in obj:
            return cls.from_type(obj["type"])
        if "matrix" in obj:
            return cls(obj["matrix"], obj.get("names"))
        raise InvalidMatrix('expected {"type": ...} or {"matrix": ...}')

    def _identity_action(self):
        n = self.rank
        return tuple(tuple(ONE if i == j else ZERO for i in range(n)) for j in range(n))

    def _generator_action(self, s: int):
        cols = []
        for t in range(self.rank):
            col = [ZERO] * self.rank
            col[t] = ONE
            col[s] = col[s] - self._twob[s][t]
            cols.append(tuple(col))
        return tuple(cols)

    def _check_generators(self):
        ident = self._identity_action()
        for s, act in enumerate(self.gen_actions):
            if _matmul(act, act) != ident:
                raise InvalidMatrix("sigma_%d is not an involution" % s)
            # (sigma alpha_i | sigma alpha_j) = (alpha_i | alpha_j)
            for i in range(self.rank):
                for j in range(self.rank):
                    if self.form(act[i], act[j]) != self.gram[i][j]:
                        raise InvalidMatrix("sigma_%d does not preserve the bilinear form" % s)

    def form(self, x: Root, y: Root) -> AlgebraicNumber:
        total = ZERO
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj and self.gram[i][j]:
                    total = total + xi * yj * self.gram[i][j]
        return total

    # -- elements -------------------------------------------------------

    def _make(self, action, word) -> GroupElement:
        word = tuple(word)
        el = self._cache.get(word)
        if el is None:
            el = GroupElement(self, action, word)
            self._cache[word] = el
            self._by_action[action] = el
        return el

    def from_action(self, action) -> GroupElement:
        known = self._by_action.get(action)
        if known is not None:
            return known
        word, _ = self.canonicalize(action)
        return self._make(action, word)

    def element(self, word: Iterable[int]) -> GroupElement:
        """The element represented by ``word`` (0-based generator indices; need not be reduced)."""
        word = tuple(word)
        for s in word:
            if not (isinstance(s, int) and 0 <= s < self.rank):
                raise InvalidMatrix("generator index %r out of range 0..%d" % (s, self.rank - 1))
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        action = self._identity_action()
        for s in word:
            action = self._right_mul_action(action, s)
        return self.from_action(action)

    def parse_word(self, text: str) -> GroupElement:
        """Parse names like ``s1s2s3`` or ``s0 s2`` (per ``names``); ``e`` is the identity."""
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        by_name = sorted(self.names, key=len, reverse=True)
        word = []
        rest = text.replace(" ", "")
        while rest:
            for nm in by_name:
                if rest.startswith(nm):
                    word.append(self.names.index(nm))
                    rest = rest[len(nm):]
                    break
            else:
                raise InvalidMatrix("cannot parse word %r" % text)
        return self.element(word)

    def _right_mul_action(self, action, s: int):
        # (sigma_w sigma_s)(alpha_t) = sigma_w(alpha_t) - 2(alpha_s|alpha_t) sigma_w(alpha_s)
        col_s = action[s]
        twob = self._twob[s]
        cols = list(action)
        for t in range(self.rank):
            if t == s:
                cols[t] = tuple(-c for c in col_s)
            elif twob[t]:
                k = twob[t]
                cols[t] = tuple(a - k * b for a, b in zip(action[t], col_s))
        return tuple(cols)

    def canonicalize(self, action) -> tuple[tuple[int, ...], int]:
        """Canonical reduced word and length of the element with the given action.

        Strips the smallest right descent until the identity is reached; the
        stripped generators, reversed, spell the word.
        """
        stripped = []
        cur = action
        while True:
            known = self._by_action.get(cur)
            if known is not None:
                # known elements already carry their canonical word
                word = known.word + tuple(reversed(stripped))
                return word, len(word)
            descents = [s for s in range(self.rank) if root_sign(cur[s]) < 0]
            if not descents:
                break
            s = descents[0]
            stripped.append(s)
            if len(stripped) > self.word_bound:
                raise NonTerminating("word exceeds %d letters; corrupted action matrix?" % self.word_bound)
            cur = self._right_mul_action(cur, s)
        if cur != self._identity_action():
            raise NonTerminating("matrix is not the action of a group element")
        stripped.reverse()
        return tuple(stripped), len(stripped)

    def check_same(self, *elements: GroupElement):
        for el in elements:
            if el.system is not self:
                raise SystemMismatch("elements belong to different Coxeter systems")

    # -- misc -----------------------------------------------------------

    def is_type_a(self) -> bool:
        n = self.rank
        return all(
            self.matrix[i][j] == (1 if i == j else 3 if abs(i - j) == 1 else 2)
            for i in range(n) for j in range(n)
        )

    def is_finite_type(self) -> bool:
        return self.type_name is not None and all(INFINITY not in row for row in self.matrix)

    def longest(self) -> GroupElement:
        """The longest element, by greedy ascent (finite type shorthands only)."""
        if not self.is_finite_type():
            raise InvalidMatrix("'longest' needs a finite type shorthand")
        w = self.identity
        while True:
            asc = [s for s in range(self.rank) if s not in w.right_descents()]
            if not asc:
                return w
            w = w.mul_gen(asc[0])

    def elements(self, cap: int = 10**6) -> list[GroupElement]:
        """All elements by BFS over right multiplication (finite groups)."""
        seen = {self.identity.word: self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in range(self.rank):
                    if s in w.right_descents():
                        continue
                    ws = w.mul_gen(s)
                    if ws.word not in seen:
                        seen[ws.word] = ws
                        nxt.append(ws)
                        if len(seen) > cap:
                            raise NonTerminating("more than %d elements" % cap)
            frontier = nxt
        return sorted(seen.values(), key=lambda w: (w.length, w.word))

    def word_str(self, word: Sequence[int]) -> str:
        return "".join(self.names[s] for s in word) or "e"

    def __repr__(self):
        if self.type_name:
            return "CoxeterSystem(%r)" % self.type_name
        return "CoxeterSystem(%r)" % (self.matrix,)


def _validate_matrix(matrix) -> tuple[tuple[int, ...], ...]:
    try:
        rows = [list(r) for r in matrix]
    except TypeError:
        raise InvalidMatrix("Coxeter matrix must be a list of rows")
    n = len(rows)
    if n == 0:
        raise InvalidMatrix("Coxeter matrix must be nonempty")
    out = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidMatrix("Coxeter matrix must be square")
        clean = []
        for j, m in enumerate(row):
            if m in ("inf", "∞", None) or m == float("inf"):
                m = INFINITY
            if not isinstance(m, int) or isinstance(m, bool):
                raise InvalidMatrix("entry (%d,%d)=%r is not an integer" % (i, j, m))
            clean.append(m)
        out.append(tuple(clean))
    for i in range(n):
        if out[i][i] != 1:
            raise InvalidMatrix("diagonal entry (%d,%d) must be 1" % (i, i))
        for j in range(n):
            if out[i][j] != out[j][i]:
                raise InvalidMatrix("matrix is not symmetric at (%d,%d)" % (i, j))
            m = out[i][j]
            if i != j:
                if m == 1 or m < 0:
                    raise InvalidMatrix("off-diagonal entry (%d,%d)=%d must be >= 2 or ∞" % (i, j, m))
                if m not in (2, 3, 4, 5, 6, INFINITY):
                    raise UnsupportedOrder("entry (%d,%d)=%d is not in {2,...,6,∞}" % (i, j, m))
    return tuple(out)


def _matmul(a, b):
    # column convention: (ab)[t] = sum_r b[t][r] * a[r]
    n = len(a)
    cols = []
    for t in range(n):
        col = [ZERO] * n
        for r, c in enumerate(b[t]):
            if c:
                for i in range(n):
                    if a[r][i]:
                        col[i] = col[i] + c * a[r][i]
        cols.append(tuple(col))
    return tuple(cols)


class GroupElement:
    """An element of a Coxeter group: exact action, canonical reduced word, length."""

    __slots__ = ("system", "action", "word", "length", "_inv", "_rdes", "_roots", "_mul")

    def __init__(self, system: CoxeterSystem, action, word: tuple[int, ...]):
        self.system = system
        self.action = action
        self.word = word
        self.length = len(word)
        self._inv = None
        self._rdes = None
        self._roots = None
        self._mul = {}

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.system is other.system and self.action == other.action

    def __hash__(self):
        return hash(self.word)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    def __repr__(self):
        return "<%s>" % self.system.word_str(self.word)

    def __str__(self):
        return self.system.word_str(self.word)

    def mul_gen(self, s: int) -> GroupElement:
        """``w * s`` for a generator index ``s``."""
        res = self._mul.get(s)
        if res is None:
            res = self.system.from_action(self.system._right_mul_action(self.action, s))
            self._mul[s] = res
        return res

    def right_descents(self) -> frozenset[int]:
        if self._rdes is None:
            self._rdes = frozenset(s for s in range(self.system.rank) if root_sign(self.action[s]) < 0)
        return self._rdes

    def inverse(self) -> GroupElement:
        if self._inv is None:
            self._inv = self.system.element(reversed(self.word))
            self._inv._inv = self
        return self._inv

    def left_descents(self) -> frozenset[int]:
        return self.inverse().right_descents()

    def left_inversion_roots(self) -> frozenset[Root]:
        if self._roots is None:
            sysm = self.system
            prefix = sysm._identity_action()
            roots = []
            for s in self.word:
                root = prefix[s]
                assert root_sign(root) > 0
                roots.append(root)
                prefix = sysm._right_mul_action(prefix, s)
            self._roots = frozenset(roots)
            assert len(self._roots) == self.length
        return self._roots


# -- module-level operations ----------------------------------------------

def new_system(spec) -> CoxeterSystem:
    """A system from a type shorthand string, a JSON-style dict or a matrix."""
    if isinstance(spec, str):
        return CoxeterSystem.from_type(spec)
    if isinstance(spec, dict):
        return CoxeterSystem.from_json(spec)
    return CoxeterSystem(spec)


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    u.system.check_same(v)
    if not v.length:
        return u
    if not u.length:
        return v
    return u.system.from_action(_matmul(u.action, v.action))


def inverse(w: GroupElement) -> GroupElement:
    return w.inverse()


def right_descents(w: GroupElement) -> frozenset[int]:
    return w.right_descents()


def left_descents(w: GroupElement) -> frozenset[int]:
    return w.left_descents()


def left_inversion_roots(w: GroupElement) -> frozenset[Root]:
    """Positive roots of the reflections in ``T_L(w)``."""
    return w.left_inversion_roots()


def reflection_root(w: GroupElement, s: int) -> Root:
    """The positive root of the reflection ``w s w^-1``."""
    root = w.action[s]
    return root if root_sign(root) > 0 else tuple(-c for c in root)


def weak_leq(u: GroupElement, v: GroupElement) -> bool:
    """Right weak order: ``T_L(u) ⊆ T_L(v)``."""
    u.system.check_same(v)
    if u.length > v.length:
        return False
    return u.left_inversion_roots() <= v.left_inversion_roots()


def bruhat_leq(u: GroupElement, v: GroupElement) -> bool:
    u.system.check_same(v)
    while True:
        if u == v:
            return True
        if u.length >= v.length:
            return False
        s = min(v.right_descents())
        v = v.mul_gen(s)
        if s in u.right_descents():
            u = u.mul_gen(s)


def project_right(w: GroupElement, J: Iterable[int]) -> tuple[GroupElement, GroupElement]:
    """The factorisation ``w = w^J w_J``; returns ``(w^J, w_J)``."""
    J = frozenset(J)
    stripped = []
    cur = w
    while True:
        des = J & cur.right_descents()
        if not des:
            break
        s = min(des)
        stripped.append(s)
        cur = cur.mul_gen(s)
    parabolic = w.system.element(reversed(stripped))
    assert cur.length + parabolic.length == w.length
    return cur, parabolic


def project_left(w: GroupElement, J: Iterable[int]) -> tuple[GroupElement, GroupElement]:
    """The factorisation ``w = w'_J ^J w``; returns ``(w'_J, ^J w)``."""
    quotient, parabolic = project_right(w.inverse(), J)
    return parabolic.inverse(), quotient.inverse()


def parabolic_projection(w: GroupElement, s: int) -> GroupElement:
    """``P^{(s)}(w)``: the minimal representative of ``w W_{S - {s}}``."""
    return project_right(w, set(range(w.system.rank)) - {s})[0]


def one_line(w: GroupElement) -> tuple[int, ...]:
    """One-line notation of a type-A element."""
    if not w.system.is_type_a():
        raise NotTypeA("one-line notation needs a type A system")
    perm = list(range(1, w.system.rank + 2))
    for s in w.word:
        perm[s], perm[s + 1] = perm[s + 1], perm[s]
    return tuple(perm)


def from_one_line(system: CoxeterSystem, perm: Sequence[int]) -> GroupElement:
    """Inverse of :func:`one_line`, by bubble-sorting the permutation."""
    if not system.is_type_a():
        raise NotTypeA("one-line notation needs a type A system")
    perm = list(perm)
    if sorted(perm) != list(range(1, system.rank + 2)):
        raise InvalidMatrix("%r is not a permutation of 1..%d" % (perm, system.rank + 1))
    word = []
    # sort by right multiplication; the recorded swaps, reversed, spell w
    changed = True
    while changed:
        changed = False
        for i in range(len(perm) - 1):
            if perm[i] > perm[i + 1]:
                perm[i], perm[i + 1] = perm[i + 1], perm[i]
                word.append(i)
                changed = True
    return system.element(reversed(word))
