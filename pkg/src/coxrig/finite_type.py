"""Recognition of finite Coxeter groups by diagram shape, and the maximal
spherical / maximal independent subset families.

Finiteness is decided purely combinatorially against the classification
list, so all arithmetic stays in the integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod
from typing import Iterable, Optional

from .matrix import INF, CoxeterMatrix, induced_submatrix

FAMILIES = ("A", "B", "D", "E", "F", "H", "I2")

_EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("H", 3): 120,
    ("H", 4): 14400,
}


@dataclass(frozen=True, order=True)
class FiniteTypeLabel:
    family: str
    parameter: int
    order: int = field(compare=False)

    @classmethod
    def make(cls, family: str, parameter: int) -> "FiniteTypeLabel":
        if family == "I2" and parameter in (3, 4):
            family, parameter = ("A", 2) if parameter == 3 else ("B", 2)
        return cls(family, parameter, family_order(family, parameter))

    def sort_key(self) -> tuple:
        return FAMILIES.index(self.family), self.parameter

    def __str__(self) -> str:
        if self.family == "I2":
            return f"I2({self.parameter})"
        return f"{self.family}{self.parameter}"


def family_order(family: str, n: int) -> int:
    if family == "A":
        return factorial(n + 1)
    if family == "B":
        return 2 ** n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    if family == "I2":
        return 2 * n
    return _EXCEPTIONAL_ORDERS[(family, n)]


def diagram_components(matrix: CoxeterMatrix, subset: Optional[Iterable[int]] = None) -> list:
    """Connected components of the Coxeter diagram (edges where m >= 3, INF included)."""
    verts = sorted(subset) if subset is not None else list(range(matrix.rank))
    seen = set()
    comps = []
    for v in verts:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in verts:
                if y not in seen and matrix(x, y) >= 3:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _classify_component(matrix: CoxeterMatrix, comp: list) -> Optional[FiniteTypeLabel]:
    n = len(comp)
    if n == 1:
        return FiniteTypeLabel.make("A", 1)
    adj = {v: [u for u in comp if u != v and matrix(u, v) >= 3] for v in comp}
    edges = [(u, v, matrix(u, v)) for u in comp for v in adj[u] if u < v]
    if any(m == INF for _, _, m in edges):
        return None
    if len(edges) != n - 1:  # connected, so a tree iff |E| = |V| - 1
        return None
    degrees = sorted(len(adj[v]) for v in comp)
    labels = sorted(m for _, _, m in edges)

    if degrees[-1] <= 2:
        # a path: read labels from one end
        start = next(v for v in comp if len(adj[v]) == 1)
        walk, prev = [start], None
        while len(walk) < n:
            nxt = next(u for u in adj[walk[-1]] if u != prev)
            prev = walk[-1]
            walk.append(nxt)
        seq = [matrix(walk[k], walk[k + 1]) for k in range(n - 1)]
        if n == 2:
            return FiniteTypeLabel.make("I2", seq[0])
        if all(m == 3 for m in seq):
            return FiniteTypeLabel.make("A", n)
        if labels == [3] * (n - 2) + [4] and 4 in (seq[0], seq[-1]):
            return FiniteTypeLabel.make("B", n)
        if labels == [3] * (n - 2) + [5] and 5 in (seq[0], seq[-1]) and n in (3, 4):
            return FiniteTypeLabel.make("H", n)
        if n == 4 and seq == [3, 4, 3]:
            return FiniteTypeLabel.make("F", 4)
        return None

    # one branch point of degree 3, simply laced
    if degrees[-1] != 3 or degrees[-2] == 3 or labels != [3] * (n - 1):
        return None
    centre = next(v for v in comp if len(adj[v]) == 3)
    arms = []
    for first in adj[centre]:
        length, prev, cur = 1, centre, first
        while len(adj[cur]) == 2:
            prev, cur = cur, next(u for u in adj[cur] if u != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return FiniteTypeLabel.make("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return FiniteTypeLabel.make("E", n)
    return None


def classify_finite_type(matrix: CoxeterMatrix) -> Optional[list]:
    """Labels of the irreducible components, sorted, or None if the group is infinite."""
    result = []
    for comp in diagram_components(matrix):
        label = _classify_component(matrix, comp)
        if label is None:
            return None
        result.append(label)
    return sorted(result, key=FiniteTypeLabel.sort_key)


def coxeter_order(matrix: CoxeterMatrix):
    """Exact group order, or INF."""
    labels = classify_finite_type(matrix)
    if labels is None:
        return INF
    return prod(label.order for label in labels)


def is_spherical(matrix: CoxeterMatrix, subset: Iterable[int]) -> bool:
    subset = sorted(set(subset))
    if not subset:
        return True
    return classify_finite_type(induced_submatrix(matrix, subset)) is not None


def spherical_subsets(matrix: CoxeterMatrix) -> list:
    """All spherical subsets as sorted tuples, the empty set included.

    Depth-first over increasing index extensions; sound because sphericity is
    closed under taking subsets. Exponential in rank.
    """
    n = matrix.rank
    found = []

    def grow(current: tuple):
        found.append(current)
        start = current[-1] + 1 if current else 0
        for v in range(start, n):
            if any(matrix(u, v) == INF for u in current):
                continue
            cand = current + (v,)
            if is_spherical(matrix, cand):
                grow(cand)

    grow(())
    return found


def maximal_spherical_subsets(matrix: CoxeterMatrix) -> list:
    """The family of inclusion-maximal spherical subsets, lexicographically sorted."""
    sph = set(spherical_subsets(matrix))
    maximal = [
        T for T in sph
        if not any(tuple(sorted(T + (v,))) in sph for v in range(matrix.rank) if v not in T)
    ]
    return sorted(maximal)


def maximal_independent_subsets(matrix: CoxeterMatrix, within: Iterable[int]) -> list:
    """Maximal subsets of ``within`` whose elements pairwise commute (m = 2).

    Bron-Kerbosch without pivoting; the commuting graph is tiny.
    """
    verts = sorted(set(within))
    nbrs = {v: {u for u in verts if u != v and matrix(u, v) == 2} for v in verts}
    cliques = []

    def bk(r: set, p: set, x: set):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        for v in sorted(p):
            bk(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(verts), set())
    return sorted(cliques)
