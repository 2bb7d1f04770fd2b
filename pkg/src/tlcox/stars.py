"""Star operations on strings, reducibility searches, and descent statistics.

An element sitting strictly inside the ladder of a rank-2 coset (neither the
shortest nor the longest member) can be moved one rung up or down by
multiplying with the appropriate generator; these are the star operations.
A star-down step always shortens by one letter, so the star-down graph below
any element is a finite DAG, and the two combinatorial checks here (every
fully commutative element reaches a product of commuting generators; every
complex element reaches one with a noncommuting descent pair) are memoized
depth-first searches over it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import (
    INFINITE,
    CoxeterGraph,
    GroupElement,
    coset_decompose,
    enumerate_elements,
    format_element,
    is_commuting_product,
)


def star(w: GroupElement, pair: tuple[int, int], side: str, direction: str) -> GroupElement | None:
    """One step along the {s,t}-string through w; None when not defined.

    `direction` is "up" (longer neighbor) or "down" (shorter neighbor); the
    result is None when w is not strictly inside a string or the step would
    leave it.
    """
    g = w.graph
    dec = coset_decompose(w, pair, side)
    s, t = dec.pair
    m = g.m(s, t)
    a = dec.part_I.length
    if a == 0 or (m != INFINITE and a == m):
        return None
    wi = dec.part_I.word
    if direction == "down":
        if a == 1:
            return None
        new = wi[1:] if side == "left" else wi[:-1]
    elif direction == "up":
        if m != INFINITE and a + 1 > m - 1:
            return None
        if side == "left":
            other = t if wi[0] == s else s
            new = (other,) + wi
        else:
            other = t if wi[-1] == s else s
            new = wi + (other,)
    else:
        raise ValueError("direction must be 'up' or 'down'")
    if side == "left":
        return g.element(new + dec.rest.word)
    return g.element(dec.rest.word + new)


def star_reduction_paths(w: GroupElement) -> set[GroupElement]:
    """All elements one star-down step below w, over every noncommuting pair
    and both sides."""
    out: set[GroupElement] = set()
    for pair in w.graph.noncommuting_pairs():
        for side in ("left", "right"):
            x = star(w, pair, side, "down")
            if x is not None:
                out.add(x)
    return out


def _star_reaches(w: GroupElement, predicate, memo: dict) -> bool:
    got = memo.get(w)
    if got is not None:
        return got
    ok = predicate(w) or any(
        _star_reaches(x, predicate, memo) for x in sorted(star_reduction_paths(w))
    )
    memo[w] = ok
    return ok


@dataclass
class PropertyReport:
    """Outcome of one property check at one bound; failures are witnesses in
    length-then-ShortLex order."""

    property_name: str
    graph: CoxeterGraph
    bound: int
    failures: list[GroupElement] = field(default_factory=list)
    extra_lines: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [
            f"# property={self.property_name} graph={self.graph.describe()} bound={self.bound}"
        ]
        lines.extend(self.extra_lines)
        if self.holds:
            lines.append("HOLDS")
        else:
            lines.append(f"FAILS witness={format_element(self.failures[0])}")
            for w in self.failures:
                lines.append(f"witness={format_element(w)}")
        return "\n".join(lines) + "\n"


def check_property_F(graph: CoxeterGraph, length_bound: int) -> PropertyReport:
    """Is every fully commutative element of length <= bound star reducible to
    a product of pairwise-commuting generators?"""
    memo: dict[GroupElement, bool] = {}
    report = PropertyReport("F", graph, length_bound)
    for w in enumerate_elements(graph, length_bound, fc_only=True):
        if not _star_reaches(w, is_commuting_product, memo):
            report.failures.append(w)
    return report


def _has_noncommuting_descent_pair(w: GroupElement) -> bool:
    g = w.graph
    for desc in (g.left_descents(w), g.right_descents(w)):
        ds = sorted(desc)
        for i, a in enumerate(ds):
            for b in ds[i + 1:]:
                if g.m(a, b) >= 3:
                    return True
    return False


def check_property_S(graph: CoxeterGraph, length_bound: int) -> PropertyReport:
    """Is every complex element of length <= bound star reducible to one whose
    left or right descent set contains a noncommuting pair?"""
    memo: dict[GroupElement, bool] = {}
    report = PropertyReport("S", graph, length_bound)
    for w in enumerate_elements(graph, length_bound):
        if w.is_fully_commutative():
            continue
        if not _star_reaches(w, _has_noncommuting_descent_pair, memo):
            report.failures.append(w)
    return report


def n_stat(w: GroupElement) -> int:
    """The largest k such that some reduced word of w has a contiguous factor
    of k distinct pairwise-commuting generators."""
    if not w.is_fully_commutative():
        raise ValueError("n_stat is defined for fully commutative elements only")
    g = w.graph
    bonds = g.bonds
    best = 0
    for u in g.reduced_words(w):
        n = len(u)
        for i in range(n):
            window: list[int] = []
            for j in range(i, n):
                c = u[j]
                if c in window or any(bonds[c][d] != 2 for d in window):
                    break
                window.append(c)
            if len(window) > best:
                best = len(window)
    return best


@dataclass(frozen=True)
class Coloring:
    """A proper 2-coloring of the underlying graph (adjacent = noncommuting)."""

    eps: tuple[int, ...]

    def color(self, s: int) -> int:
        return self.eps[s]


def bipartite_coloring(graph: CoxeterGraph) -> Coloring | None:
    """BFS 2-coloring, color 0 at the lowest-index node of each component;
    None when some cycle is odd."""
    eps: list[int | None] = [None] * graph.rank
    for root in graph.generators():
        if eps[root] is not None:
            continue
        eps[root] = 0
        queue = [root]
        while queue:
            a = queue.pop(0)
            for b in graph.generators():
                if a == b or graph.m(a, b) < 3:
                    continue
                if eps[b] is None:
                    eps[b] = 1 - eps[a]
                    queue.append(b)
                elif eps[b] == eps[a]:
                    return None
    return Coloring(tuple(eps))  # type: ignore[arg-type]


def k_epsilon(w: GroupElement, coloring: Coloring) -> int:
    """Sign statistic: product over both descent sets of (-1)^(# color-0 members)."""
    if not w.is_fully_commutative():
        raise ValueError("k_epsilon is defined for fully commutative elements only")
    left = sum(1 for s in w.left_descents() if coloring.eps[s] == 0)
    right = sum(1 for s in w.right_descents() if coloring.eps[s] == 0)
    return -1 if (left + right) % 2 else 1
