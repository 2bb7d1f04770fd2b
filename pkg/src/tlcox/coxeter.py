"""Coxeter graphs and the word problem.

A Coxeter graph is a symmetric matrix of bond labels m(s,t) with m(s,s) = 1
and off-diagonal entries in {2, 3, ...} or infinity.  Group elements are kept
in a canonical form: the ShortLex-least reduced word over the closure of the
word under braid moves (two words represent the same element iff they are
connected by braid moves, and a word is non-reduced iff some sequence of
braid moves exposes an adjacent equal pair).  The closure sets double as the
sets of all reduced words, which is what the descent, full-commutativity and
string machinery reads off.

Generators are 0-based internally and rendered 1-based; the identity renders
as `e`.  All canonical forms, closures and derived data are memoized on the
graph instance, so equal queries are cheap and elements can be compared and
hashed like values.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf

DEFAULT_CLOSURE_CAP = 1_000_000

FULLY_COMMUTATIVE = "fully_commutative"
WEAKLY_COMPLEX = "weakly_complex"
COMPLEX_OTHER = "complex_other"


class GraphError(ValueError):
    """Malformed graph description or preset name."""


class ClosureCapExceeded(RuntimeError):
    """A braid-move closure grew past the configured cap."""


class CoxeterGraph:
    """A Coxeter graph with memoized word-problem machinery."""

    __slots__ = (
        "bonds", "name", "closure_cap",
        "_canon", "_closure", "_elements", "_identity", "_lmul", "_rmul",
        "_inverse", "_ldesc", "_rdesc", "_fc", "_bruhat", "_levels",
        "_level_complete",
    )

    def __init__(self, bonds: Sequence[Sequence[int | float]], name: str | None = None,
                 closure_cap: int = DEFAULT_CLOSURE_CAP):
        bonds = tuple(tuple(row) for row in bonds)
        n = len(bonds)
        for i, row in enumerate(bonds):
            if len(row) != n:
                raise GraphError("bond matrix must be square")
            if row[i] != 1:
                raise GraphError("diagonal bond labels must be 1")
            for j in range(n):
                m = row[j]
                if i != j:
                    if m != INFINITE and (not isinstance(m, int) or m < 2):
                        raise GraphError(f"bond label m({i + 1},{j + 1}) = {m!r} invalid")
                    if m != bonds[j][i]:
                        raise GraphError("bond matrix must be symmetric")
        self.bonds = bonds
        self.name = name
        self.closure_cap = closure_cap
        self._canon: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._closure: dict[tuple[int, ...], frozenset[tuple[int, ...]]] = {}
        self._elements: dict[tuple[int, ...], GroupElement] = {}
        self._identity: GroupElement | None = None
        self._lmul: dict[tuple[int, tuple[int, ...]], GroupElement] = {}
        self._rmul: dict[tuple[tuple[int, ...], int], GroupElement] = {}
        self._inverse: dict[tuple[int, ...], GroupElement] = {}
        self._ldesc: dict[tuple[int, ...], frozenset[int]] = {}
        self._rdesc: dict[tuple[int, ...], frozenset[int]] = {}
        self._fc: dict[tuple[int, ...], bool] = {}
        self._bruhat: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
        self._levels: list[list[GroupElement]] = []
        self._level_complete = False

    # -- structure ----------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.bonds)

    def m(self, s: int, t: int) -> int | float:
        return self.bonds[s][t]

    def generators(self) -> range:
        return range(self.rank)

    def noncommuting_pairs(self) -> list[tuple[int, int]]:
        return [(s, t) for s in self.generators() for t in range(s + 1, self.rank)
                if self.bonds[s][t] >= 3]

    def describe(self) -> str:
        if self.name:
            return self.name
        edges = ",".join(
            f"{s + 1}-{t + 1}:{'inf' if self.bonds[s][t] == INFINITE else self.bonds[s][t]}"
            for s, t in self.noncommuting_pairs()
        )
        return f"rank{self.rank}[{edges}]" if edges else f"rank{self.rank}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CoxeterGraph) and self.bonds == other.bonds

    def __hash__(self) -> int:
        return hash(self.bonds)

    def __repr__(self) -> str:
        return f"CoxeterGraph({self.describe()})"

    # -- canonical words ------------------------------------------------------

    def _braid_variants(self, word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        bonds = self.bonds
        n = len(word)
        for i in range(n - 1):
            s, t = word[i], word[i + 1]
            if s == t:
                continue
            m = bonds[s][t]
            if m == INFINITE or i + m > n:
                continue
            for k in range(2, m):
                if word[i + k] != (s if k % 2 == 0 else t):
                    break
            else:
                repl = tuple(t if k % 2 == 0 else s for k in range(m))
                yield word[:i] + repl + word[i + m:]

    def _scan(self, start: tuple[int, ...]):
        """BFS over braid moves; returns (reduced?, all words seen, shorter word)."""
        seen = {start}
        queue = deque([start])
        cap = self.closure_cap
        while queue:
            u = queue.popleft()
            for i in range(len(u) - 1):
                if u[i] == u[i + 1]:
                    return False, seen, u[:i] + u[i + 2:]
            for var in self._braid_variants(u):
                if var not in seen:
                    seen.add(var)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(
                            f"braid closure of a word of length {len(start)} exceeded "
                            f"{cap} words; raise the cap to proceed")
                    queue.append(var)
        return True, seen, None

    def normal_form_word(self, word: Iterable[int]) -> tuple[int, ...]:
        word = tuple(word)
        for s in word:
            if not 0 <= s < self.rank:
                raise ValueError(f"generator index {s} out of range for rank {self.rank}")
        cached = self._canon.get(word)
        if cached is not None:
            return cached
        pending: list[set[tuple[int, ...]]] = []
        current = word
        while True:
            cached = self._canon.get(current)
            if cached is not None:
                canon = cached
                break
            reduced, seen, shorter = self._scan(current)
            pending.append(seen)
            if reduced:
                canon = min(seen)
                self._closure.setdefault(canon, frozenset(seen))
                break
            current = shorter
        for seen in pending:
            for u in seen:
                self._canon[u] = canon
        return canon

    def element(self, word: Iterable[int] = ()) -> GroupElement:
        canon = self.normal_form_word(word)
        el = self._elements.get(canon)
        if el is None:
            el = GroupElement(self, canon)
            self._elements[canon] = el
        return el

    @property
    def identity(self) -> GroupElement:
        if self._identity is None:
            self._identity = self.element(())
        return self._identity

    def reduced_words(self, w: "GroupElement") -> frozenset[tuple[int, ...]]:
        """All reduced words for w (the braid-move closure of its canonical word)."""
        got = self._closure.get(w.word)
        if got is None:
            reduced, seen, _ = self._scan(w.word)
            assert reduced
            got = frozenset(seen)
            self._closure[w.word] = got
        return got

    # -- multiplication ---------------------------------------------------------

    def lmul(self, s: int, w: "GroupElement") -> "GroupElement":
        """The product s*w (length goes up or down by one)."""
        key = (s, w.word)
        got = self._lmul.get(key)
        if got is None:
            if s in self.left_descents(w):
                word = min(u[1:] for u in self.reduced_words(w) if u[0] == s)
                got = self.element(word)
            else:
                got = self.element((s,) + w.word)
            self._lmul[key] = got
        return got

    def rmul(self, w: "GroupElement", s: int) -> "GroupElement":
        key = (w.word, s)
        got = self._rmul.get(key)
        if got is None:
            if s in self.right_descents(w):
                word = min(u[:-1] for u in self.reduced_words(w) if u[-1] == s)
                got = self.element(word)
            else:
                got = self.element(w.word + (s,))
            self._rmul[key] = got
        return got

    def mul(self, a: "GroupElement", b: "GroupElement") -> "GroupElement":
        out = a
        for s in b.word:
            out = self.rmul(out, s)
        return out

    def inverse(self, w: "GroupElement") -> "GroupElement":
        got = self._inverse.get(w.word)
        if got is None:
            got = self.element(tuple(reversed(w.word)))
            self._inverse[w.word] = got
        return got

    # -- descents and order -------------------------------------------------------

    def left_descents(self, w: "GroupElement") -> frozenset[int]:
        got = self._ldesc.get(w.word)
        if got is None:
            got = frozenset(u[0] for u in self.reduced_words(w)) if w.word else frozenset()
            self._ldesc[w.word] = got
        return got

    def right_descents(self, w: "GroupElement") -> frozenset[int]:
        got = self._rdesc.get(w.word)
        if got is None:
            got = frozenset(u[-1] for u in self.reduced_words(w)) if w.word else frozenset()
            self._rdesc[w.word] = got
        return got

    def bruhat_leq(self, x: "GroupElement", w: "GroupElement") -> bool:
        """Bruhat order, decided by the descent-lifting recursion.

        For a left descent s of w: x <= w iff sx <= sw when sx < x, and
        x <= sw otherwise.  Equivalent to the subword characterization.
        """
        if x.graph is not self and x.graph != self:
            raise ValueError("elements from different graphs")
        key = (x.word, w.word)
        got = self._bruhat.get(key)
        if got is not None:
            return got
        if len(x.word) > len(w.word):
            got = False
        elif x.word == w.word:
            got = True
        elif not x.word:
            got = True
        else:
            s = w.word[0]
            sw = self.lmul(s, w)
            if s in self.left_descents(x):
                got = self.bruhat_leq(self.lmul(s, x), sw)
            else:
                got = self.bruhat_leq(x, sw)
        self._bruhat[key] = got
        return got

    # -- full commutativity --------------------------------------------------------

    def is_fully_commutative(self, w: "GroupElement") -> bool:
        """True iff no reduced word of w contains a full alternating braid factor."""
        got = self._fc.get(w.word)
        if got is None:
            bonds = self.bonds
            got = True
            for u in self.reduced_words(w):
                n = len(u)
                for i in range(n - 1):
                    s, t = u[i], u[i + 1]
                    m = bonds[s][t]
                    if m == 2 or m == INFINITE or i + m > n:
                        continue
                    for k in range(2, m):
                        if u[i + k] != (s if k % 2 == 0 else t):
                            break
                    else:
                        got = False
                        break
                if not got:
                    break
            self._fc[w.word] = got
        return got

    # -- enumeration ------------------------------------------------------------

    def levels_to(self, bound: int) -> list[list["GroupElement"]]:
        """Lists of all elements of each length 0..bound, ShortLex-sorted."""
        if not self._levels:
            self._levels.append([self.identity])
        while len(self._levels) <= bound and not self._level_complete:
            frontier = self._levels[-1]
            nxt = set()
            for w in frontier:
                for s in self.generators():
                    if s not in self.left_descents(w):
                        nxt.add(self.lmul(s, w))
            if not nxt:
                self._level_complete = True
                break
            self._levels.append(sorted(nxt, key=lambda e: e.word))
        return self._levels[: bound + 1]


class GroupElement:
    """A group element held as its ShortLex-least reduced word.

    Instances are interned per graph (create them via ``graph.element``), so
    equality checks in hot paths are usually identity checks.
    """

    __slots__ = ("graph", "word", "_hash")

    def __init__(self, graph: CoxeterGraph, word: tuple[int, ...]):
        self.graph = graph
        self.word = word
        self._hash = hash(word)

    @property
    def length(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (isinstance(other, GroupElement) and self.word == other.word
                and self.graph == other.graph)

    def __lt__(self, other: "GroupElement") -> bool:
        return (len(self.word), self.word) < (len(other.word), other.word)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        """Length-then-ShortLex sort key."""
        return (len(self.word), self.word)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.graph.mul(self, other)

    def inverse(self) -> "GroupElement":
        return self.graph.inverse(self)

    def left_descents(self) -> frozenset[int]:
        return self.graph.left_descents(self)

    def right_descents(self) -> frozenset[int]:
        return self.graph.right_descents(self)

    def descents(self, side: str) -> frozenset[int]:
        if side == "left":
            return self.left_descents()
        if side == "right":
            return self.right_descents()
        raise ValueError("side must be 'left' or 'right'")

    def is_fully_commutative(self) -> bool:
        return self.graph.is_fully_commutative(self)

    def format(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"<{self.format()}>"


# -- element text -----------------------------------------------------------------


def format_element(w: GroupElement) -> str:
    """Space-separated 1-based generator indices; the identity is `e`."""
    return " ".join(str(s + 1) for s in w.word) if w.word else "e"


def parse_element(graph: CoxeterGraph, text: str) -> GroupElement:
    text = text.strip()
    if text == "e":
        return graph.identity
    try:
        word = tuple(int(tok) - 1 for tok in text.split())
    except ValueError as exc:
        raise ValueError(f"malformed element text: {text!r}") from exc
    if any(s < 0 or s >= graph.rank for s in word):
        raise ValueError(f"generator index out of range in {text!r}")
    return graph.element(word)


# -- derived operations --------------------------------------------------------------


def normal_form(graph: CoxeterGraph, word: Iterable[int]) -> GroupElement:
    """Canonical element of an arbitrary word in the generators."""
    return graph.element(word)


def bruhat_leq(x: GroupElement, w: GroupElement) -> bool:
    return x.graph.bruhat_leq(x, w)


def is_commuting_product(w: GroupElement) -> bool:
    """True iff w is a product of distinct pairwise-commuting generators."""
    word = w.word
    bonds = w.graph.bonds
    if len(set(word)) != len(word):
        return False
    return all(bonds[a][b] == 2 for i, a in enumerate(word) for b in word[i + 1:])


def classify(w: GroupElement) -> str:
    """Sort w into fully commutative / weakly complex / other complex.

    Weakly complex means complex with some length-(l-1) fully commutative
    element reachable by stripping one left generator.
    """
    if w.is_fully_commutative():
        return FULLY_COMMUTATIVE
    g = w.graph
    for s in sorted(g.left_descents(w)):
        if g.lmul(s, w).is_fully_commutative():
            return WEAKLY_COMPLEX
    return COMPLEX_OTHER


def enumerate_elements(graph: CoxeterGraph, length_bound: int,
                       fc_only: bool = False) -> Iterator[GroupElement]:
    """All elements (or all fully commutative ones) of length <= bound,
    each exactly once, in length-then-ShortLex order."""
    if length_bound < 0:
        raise ValueError("length bound must be nonnegative")
    for level in graph.levels_to(length_bound):
        for w in level:
            if not fc_only or w.is_fully_commutative():
                yield w


def _component_order(graph: CoxeterGraph, nodes: list[int]) -> tuple[int, int] | None:
    """(order, longest length) of the parabolic on a connected component, or
    None when it is infinite.  Decided against the classification of the
    finite families, so no enumeration happens."""
    import math as _math

    n = len(nodes)
    if n == 1:
        return 2, 1
    if n == 2:
        m = graph.m(nodes[0], nodes[1])
        return None if m == INFINITE else (2 * m, m)
    adj = {a: [b for b in nodes if b != a and graph.m(a, b) >= 3] for a in nodes}
    if any(graph.m(a, b) == INFINITE for a in nodes for b in adj[a]):
        return None
    degrees = sorted(len(adj[a]) for a in nodes)
    edge_count = sum(degrees) // 2
    if edge_count != n - 1:
        return None  # a cycle (or worse): affine or indefinite
    labels = sorted(graph.m(a, b) for a in nodes for b in adj[a] if a < b)
    branch = [a for a in nodes if len(adj[a]) == 3]
    if degrees[-1] > 3 or len(branch) > 1:
        return None
    if branch:
        if any(m != 3 for m in labels):
            return None
        hub = branch[0]
        arms = []
        for first in adj[hub]:
            length, prev, cur = 1, hub, first
            while True:
                nxt = [b for b in adj[cur] if b != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == arms[1] == 1:
            return 2 ** (n - 1) * _math.factorial(n), n * (n - 1)
        if arms == [1, 2, 2]:
            return 51840, 36
        if arms == [1, 2, 3]:
            return 2903040, 63
        if arms == [1, 2, 4]:
            return 696729600, 120
        return None
    # a path: read the labels end to end
    ends = [a for a in nodes if len(adj[a]) == 1]
    prev, cur = None, min(ends)
    seq = []
    while True:
        nxt = [b for b in adj[cur] if b != prev]
        if not nxt:
            break
        seq.append(graph.m(cur, nxt[0]))
        prev, cur = cur, nxt[0]
    if all(m == 3 for m in seq):
        return _math.factorial(n + 1), n * (n + 1) // 2
    big = [m for m in seq if m != 3]
    if big == [4] and (seq[0] == 4 or seq[-1] == 4):
        return 2 ** n * _math.factorial(n), n * n
    if seq in ([3, 4, 3],):
        return 1152, 24
    if big == [5] and (seq[0] == 5 or seq[-1] == 5):
        if n == 3:
            return 120, 15
        if n == 4:
            return 14400, 60
    return None


def group_order(graph: CoxeterGraph, cap: int) -> tuple[int, int] | None:
    """(order, longest length) for a finite group of at most cap elements,
    else None.  Uses the classification of the finite families, so infinite
    graphs are rejected without enumeration."""
    remaining = set(graph.generators())
    order, longest = 1, 0
    while remaining:
        root = min(remaining)
        component = {root}
        frontier = [root]
        while frontier:
            a = frontier.pop()
            for b in graph.generators():
                if b not in component and b != a and graph.m(a, b) >= 3:
                    component.add(b)
                    frontier.append(b)
        got = _component_order(graph, sorted(component))
        if got is None:
            return None
        order *= got[0]
        longest += got[1]
        if order > cap:
            return None
        remaining -= component
    return order, longest


@dataclass(frozen=True)
class CosetDecomposition:
    """Factorization of w across a rank-2 parabolic: w = part_I * rest (left)
    or rest * part_I (right), with additive lengths; rest has no descent in I
    on the relevant side."""

    part_I: GroupElement
    rest: GroupElement
    side: str
    pair: tuple[int, int]

    def recombine(self) -> GroupElement:
        if self.side == "left":
            return self.part_I * self.rest
        return self.rest * self.part_I

    def case(self) -> int:
        """The four-way position of w in its coset: 1 shortest, 2 longest,
        3/4 inside a string (split by the boundary letter, smaller index first)."""
        s, t = self.pair
        a = self.part_I.length
        m = self.part_I.graph.m(s, t)
        if a == 0:
            return 1
        if m != INFINITE and a == m:
            return 2
        edge = self.part_I.word[-1] if self.side == "left" else self.part_I.word[0]
        return 3 if edge == s else 4


def coset_decompose(w: GroupElement, pair: tuple[int, int], side: str) -> CosetDecomposition:
    """Unique length-additive factorization across the parabolic on {s, t}."""
    g = w.graph
    s, t = pair
    if s == t or g.m(s, t) < 3:
        raise ValueError("pair must be noncommuting (bond label >= 3)")
    pair = (min(s, t), max(s, t))
    members = frozenset(pair)
    letters: list[int] = []
    rest = w
    if side == "left":
        while True:
            d = g.left_descents(rest) & members
            if not d:
                break
            r = min(d)
            letters.append(r)
            rest = g.lmul(r, rest)
        part = g.element(tuple(letters))
    elif side == "right":
        while True:
            d = g.right_descents(rest) & members
            if not d:
                break
            r = min(d)
            letters.append(r)
            rest = g.rmul(rest, r)
        part = g.element(tuple(reversed(letters)))
    else:
        raise ValueError("side must be 'left' or 'right'")
    return CosetDecomposition(part, rest, side, pair)


def decompose_fc_prefix(w: GroupElement, s: int):
    """For fully commutative w with s*w longer and not fully commutative,
    split w = w1 * w2 * w3 where every letter of w1 commutes with (and
    differs from) s and w2 alternates t,s,t,... with m(s,t)-1 letters.

    Returns (w1, w2, w3, t).
    """
    g = w.graph
    if not w.is_fully_commutative():
        raise ValueError("w must be fully commutative")
    if s in g.left_descents(w):
        raise ValueError("s*w must be longer than w")
    sw = g.lmul(s, w)
    if sw.is_fully_commutative():
        raise ValueError("s*w must not be fully commutative")
    bonds = g.bonds
    for u in sorted(g.reduced_words(w)):
        n = len(u)
        for i in range(n):
            t = u[i]
            m = bonds[s][t]
            if m >= 3 and m != INFINITE and i + (m - 1) <= n:
                if all(u[i + k] == (t if k % 2 == 0 else s) for k in range(m - 1)):
                    w1 = g.element(u[:i])
                    w2 = g.element(u[i:i + m - 1])
                    w3 = g.element(u[i + m - 1:])
                    return w1, w2, w3, t
            if bonds[t][s] != 2:
                break  # u[i] cannot belong to the commuting prefix
    raise ValueError("no alternating-prefix factorization found")  # pragma: no cover


# -- graph text format and presets --------------------------------------------------


def parse_graph(text: str) -> CoxeterGraph:
    """Read a graph description: `rank N`, `edge i j m` (m >= 3 or `inf`),
    or a single `preset NAME`; `#` starts a comment."""
    rank: int | None = None
    edges: dict[tuple[int, int], int | float] = {}
    preset_name: str | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "rank" and len(parts) == 2:
            if preset_name is not None:
                raise GraphError(f"line {lineno}: preset and rank/edge are mutually exclusive")
            if rank is not None:
                raise GraphError(f"line {lineno}: duplicate rank statement")
            try:
                rank = int(parts[1])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed rank") from None
            if rank < 1:
                raise GraphError(f"line {lineno}: rank must be positive")
        elif parts[0] == "edge" and len(parts) == 4:
            if preset_name is not None:
                raise GraphError(f"line {lineno}: preset and rank/edge are mutually exclusive")
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed edge indices") from None
            m: int | float
            if parts[3] == "inf":
                m = INFINITE
            else:
                try:
                    m = int(parts[3])
                except ValueError:
                    raise GraphError(f"line {lineno}: malformed edge label") from None
                if m < 3:
                    raise GraphError(f"line {lineno}: explicit edge label must be >= 3")
            if i == j:
                raise GraphError(f"line {lineno}: loops are not allowed")
            key = (min(i, j), max(i, j))
            if key in edges:
                raise GraphError(f"line {lineno}: duplicate edge {key}")
            edges[key] = m
        elif parts[0] == "preset" and len(parts) == 2:
            if rank is not None or edges:
                raise GraphError(f"line {lineno}: preset and rank/edge are mutually exclusive")
            if preset_name is not None:
                raise GraphError(f"line {lineno}: duplicate preset statement")
            preset_name = parts[1]
        else:
            raise GraphError(f"line {lineno}: malformed statement: {line!r}")
    if preset_name is not None:
        return preset(preset_name)
    if rank is None:
        raise GraphError("missing rank statement")
    for (i, j) in edges:
        if not (1 <= i <= rank and 1 <= j <= rank):
            raise GraphError(f"edge {i} {j} out of range for rank {rank}")
    bonds = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for (i, j), m in edges.items():
        bonds[i - 1][j - 1] = bonds[j - 1][i - 1] = m
    return CoxeterGraph(bonds)


def _path(labels: Sequence[int | float]) -> list[list[int | float]]:
    n = len(labels) + 1
    bonds: list[list[int | float]] = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, m in enumerate(labels):
        bonds[i][i + 1] = bonds[i + 1][i] = m
    return bonds


_PRESET_RE = re.compile(r"^(?P<aff>~)?(?P<fam>[A-H])(?P<n>\d+)$")
_I2_RE = re.compile(r"^I2\((?P<m>\d+|inf)\)$")

_PRESET_CACHE: dict[str, CoxeterGraph] = {}


def preset(name: str) -> CoxeterGraph:
    """Standard graphs: A/B/C/D/E/F/H families, I2(m), affine ~A and ~C.

    Instances are shared per name, so memoized word-problem state accumulates
    across callers.
    """
    name = name.strip()
    cached = _PRESET_CACHE.get(name)
    if cached is not None:
        return cached
    graph = _build_preset(name)
    _PRESET_CACHE[name] = graph
    return graph


def _build_preset(name: str) -> CoxeterGraph:
    m2 = _I2_RE.match(name)
    if m2:
        m: int | float = INFINITE if m2.group("m") == "inf" else int(m2.group("m"))
        if m != INFINITE and m < 3:
            raise GraphError("I2(m) requires m >= 3 or inf")
        return CoxeterGraph(_path([m]), name=name)
    mo = _PRESET_RE.match(name)
    if not mo:
        raise GraphError(f"unknown preset {name!r}")
    fam, n, affine = mo.group("fam"), int(mo.group("n")), bool(mo.group("aff"))
    if affine:
        if fam == "A":
            if n == 1:
                return CoxeterGraph(_path([INFINITE]), name=name)
            if n < 2:
                raise GraphError("~A requires n >= 1")
            k = n + 1
            bonds: list[list[int | float]] = [[1 if i == j else 2 for j in range(k)] for i in range(k)]
            for i in range(k):
                j = (i + 1) % k
                bonds[i][j] = bonds[j][i] = 3
            return CoxeterGraph(bonds, name=name)
        if fam == "C":
            if n < 2:
                raise GraphError("~C requires n >= 2")
            return CoxeterGraph(_path([4] + [3] * (n - 2) + [4]), name=name)
        raise GraphError(f"unknown affine preset {name!r}")
    if fam == "A":
        if n < 1:
            raise GraphError("A requires n >= 1")
        return CoxeterGraph(_path([3] * (n - 1)), name=name)
    if fam in ("B", "C"):
        if n < 2:
            raise GraphError("B requires n >= 2")
        return CoxeterGraph(_path([4] + [3] * (n - 2)), name=name)
    if fam == "D":
        if n < 4:
            raise GraphError("D requires n >= 4")
        # generator 2 is the branch node (so the rank-4 witness text is stable)
        bonds = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for a, b in [(0, 1), (2, 1), (3, 1)] + [(i, i + 1) for i in range(3, n - 1)]:
            bonds[a][b] = bonds[b][a] = 3
        return CoxeterGraph(bonds, name=name)
    if fam == "E":
        if n < 6:
            raise GraphError("E requires n >= 6")
        bonds = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for a, b in [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]:
            bonds[a][b] = bonds[b][a] = 3
        return CoxeterGraph(bonds, name=name)
    if fam == "F":
        if n != 4:
            raise GraphError("only F4 is provided")
        return CoxeterGraph(_path([3, 4, 3]), name=name)
    if fam == "H":
        if n < 3:
            raise GraphError("H requires n >= 3")
        return CoxeterGraph(_path([5] + [3] * (n - 2)), name=name)
    raise GraphError(f"unknown preset {name!r}")
