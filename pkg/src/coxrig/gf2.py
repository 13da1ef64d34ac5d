"""Symbolic abelianization of Coxeter groups over GF(2).

W^ab is elementary abelian of rank k, the number of connected components of
the odd graph (edges where m(s, t) is odd); all generators of one component
are conjugate and map to the same basis vector.  Vectors are int bitsets,
bit c standing for component c.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .matrix import CoxeterMatrix


@dataclass(frozen=True)
class OddComponents:
    component_of: tuple
    count: int

    def members(self, c: int) -> tuple:
        return tuple(v for v, cc in enumerate(self.component_of) if cc == c)

    def partition(self) -> list:
        return [self.members(c) for c in range(self.count)]


def odd_components(matrix: CoxeterMatrix) -> OddComponents:
    parent = list(range(matrix.rank))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in matrix.odd_pairs():
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)
    ids: dict = {}
    comp = []
    for v in range(matrix.rank):  # ids in order of smallest member
        comp.append(ids.setdefault(find(v), len(ids)))
    return OddComponents(tuple(comp), len(ids))


def row_reduce(rows: Iterable[int]) -> tuple:
    """Reduced echelon basis of the span; pivot = lowest set bit, pivots increasing."""
    basis: list = []
    for v in rows:
        for b in basis:
            if v & (b & -b):
                v ^= b
        if v:
            low = v & -v
            basis = [b ^ v if b & low else b for b in basis]
            basis.append(v)
    return tuple(sorted(basis, key=lambda b: b & -b))


@dataclass(frozen=True)
class GF2Subspace:
    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[int]) -> "GF2Subspace":
        vectors = list(vectors)
        if any(v >> ambient_dim for v in vectors):
            raise ValueError("vector outside the ambient space")
        return cls(ambient_dim, row_reduce(vectors))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v: int) -> bool:
        for b in self.basis:
            if v & (b & -b):
                v ^= b
        return v == 0

    def __le__(self, other: "GF2Subspace") -> bool:
        _check_dims(self, other)
        return all(other.contains_vector(b) for b in self.basis)

    def vectors(self) -> list:
        out = []
        for mask in range(1 << self.dim):
            v = 0
            for k, b in enumerate(self.basis):
                if mask >> k & 1:
                    v ^= b
            out.append(v)
        return sorted(out)


def _check_dims(a: GF2Subspace, b: GF2Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")


def subspace_equal(a: GF2Subspace, b: GF2Subspace) -> bool:
    _check_dims(a, b)
    return a.basis == b.basis


def subspace_dim(a: GF2Subspace) -> int:
    return a.dim


def subspace_intersection(a: GF2Subspace, b: GF2Subspace) -> GF2Subspace:
    """Zassenhaus-style: reduce the stacked rows (u | u) and (v | 0); rows whose
    left half vanishes carry a basis of the intersection in their right half."""
    _check_dims(a, b)
    n = a.ambient_dim
    stacked = [(u << n) | u for u in a.basis] + [v << n for v in b.basis]
    inter = [r for r in _full_reduce_high(stacked, n) if not r >> n]
    return GF2Subspace(n, row_reduce(inter))


def _full_reduce_high(rows: Sequence[int], n: int) -> list:
    """Gaussian elimination pivoting only on bits >= n; returns all rows."""
    rows = list(rows)
    out = []
    for bit in range(n, 2 * n):
        piv = next((r for r in rows if r >> bit & 1), None)
        if piv is None:
            continue
        rows.remove(piv)
        rows = [r ^ piv if r >> bit & 1 else r for r in rows]
        out.append(piv)
    return out + rows


def pi_image(matrix: CoxeterMatrix, subset: Iterable[int], comps: OddComponents = None) -> GF2Subspace:
    """Image of the parabolic subgroup generated by ``subset`` in W^ab."""
    if comps is None:
        comps = odd_components(matrix)
    return GF2Subspace.span(comps.count, (1 << comps.component_of[a] for a in subset))


def core_images_distinct(matrix: CoxeterMatrix, s_bar: Iterable[int]) -> bool:
    """Whether distinct subsets of ``s_bar`` have distinct abelian images.

    Equivalent to the core generators lying in pairwise different odd components.
    """
    comps = odd_components(matrix)
    hit = [comps.component_of[a] for a in s_bar]
    return len(hit) == len(set(hit))


def core_images_distinct_brute(matrix: CoxeterMatrix, s_bar: Sequence[int]) -> bool:
    """Brute-force version of :func:`core_images_distinct` over all subset pairs."""
    comps = odd_components(matrix)
    subsets = [c for r in range(len(s_bar) + 1) for c in combinations(s_bar, r)]
    images = {}
    for A in subsets:
        img = pi_image(matrix, A, comps)
        if img in images and images[img] != A:
            return False
        images[img] = A
    return True
