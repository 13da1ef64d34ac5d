"""Concrete finite Coxeter groups via Todd-Coxeter coset enumeration.

Enumerating cosets of the trivial subgroup gives the right regular action:
element ``g`` is identified with the coset ``1 . w_g`` and generator ``s``
acts by right multiplication.  Generators are involutions, so a single
table column per generator serves as its own inverse column.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .matrix import INF, CoxeterMatrix

DEFAULT_MAX_COSETS = 100_000


class CapExceeded(RuntimeError):
    def __init__(self, max_cosets: int):
        self.max_cosets = max_cosets
        super().__init__(
            f"coset enumeration exceeded {max_cosets} cosets "
            "(group infinite or cap too small)")


def coxeter_relators(matrix: CoxeterMatrix) -> list:
    """Words (s_i s_j)^m for finite m; s_i^2 is built into the table."""
    return [[i, j] * m for i, j, m in matrix.pairs() if m != INF]


class _CosetTable:
    def __init__(self, ngens: int, max_cosets: int):
        self.ngens = ngens
        self.max_cosets = max_cosets
        self.table = [[-1] * ngens]
        self.parent = [0]

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def find(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, s: int):
        d = len(self.table)
        if d >= self.max_cosets:
            raise CapExceeded(self.max_cosets)
        self.table.append([-1] * self.ngens)
        self.parent.append(d)
        self.table[c][s] = d
        self.table[d][s] = c

    def _union(self, a: int, b: int, queue: deque):
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        queue.append(b)

    def coincidence(self, a: int, b: int):
        table = self.table
        queue: deque = deque()
        self._union(a, b, queue)
        while queue:
            dead = queue.popleft()
            for s in range(self.ngens):
                d = table[dead][s]
                if d < 0:
                    continue
                table[dead][s] = -1
                if table[d][s] == dead:
                    table[d][s] = -1
                c1, d1 = self.find(dead), self.find(d)
                if table[c1][s] >= 0:
                    self._union(d1, table[c1][s], queue)
                elif table[d1][s] >= 0:
                    self._union(c1, table[d1][s], queue)
                else:
                    table[c1][s] = d1
                    table[d1][s] = c1

    def scan_and_fill(self, c: int, rel: list):
        table = self.table
        while True:
            f, i = c, 0
            b, j = c, len(rel) - 1
            while i <= j and table[f][rel[i]] >= 0:
                f = table[f][rel[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and table[b][rel[j]] >= 0:
                b = table[b][rel[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][rel[i]] = b
                table[b][rel[i]] = f
                return
            self.define(f, rel[i])

    def run(self, relators: list):
        c = 0
        while c < len(self.table):
            for rel in relators:
                if not self.alive(c):
                    break
                self.scan_and_fill(c, rel)
            if self.alive(c):
                for s in range(self.ngens):
                    if self.table[c][s] < 0:
                        self.define(c, s)
            c += 1

    def standardized(self) -> tuple:
        """Renumber live cosets in breadth-first order from coset 0."""
        start = self.find(0)
        index = {start: 0}
        order = [start]
        for c in order:
            for s in range(self.ngens):
                d = self.find(self.table[c][s])
                if d not in index:
                    index[d] = len(order)
                    order.append(d)
        return tuple(
            tuple(index[self.find(self.table[c][s])] for c in order)
            for s in range(self.ngens)
        )


def todd_coxeter(matrix: CoxeterMatrix, max_cosets: int = DEFAULT_MAX_COSETS) -> "RegularRealization":
    """Enumerate the cosets of the trivial subgroup (HLT strategy, deterministic)."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    ct = _CosetTable(matrix.rank, max_cosets)
    ct.run(coxeter_relators(matrix))
    return RegularRealization(ct.standardized())


@dataclass(eq=False)
class RegularRealization:
    """A finite group as permutations of its own elements (0 is the identity).

    ``gen_perms[s][g]`` is the index of ``g * s``.
    """

    gen_perms: tuple
    _words: list = field(default=None, init=False, repr=False)
    _right: dict = field(default_factory=dict, init=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.gen_perms[0])

    @property
    def ngens(self) -> int:
        return len(self.gen_perms)

    identity_index = 0

    def generator(self, s: int) -> int:
        return self.gen_perms[s][0]

    def generators(self) -> tuple:
        return tuple(self.generator(s) for s in range(self.ngens))

    def word(self, g: int) -> tuple:
        """A word in the generators representing ``g`` (BFS tree, so shortest)."""
        if self._words is None:
            words = [None] * self.order
            words[0] = ()
            queue = deque([0])
            while queue:
                x = queue.popleft()
                for s, perm in enumerate(self.gen_perms):
                    y = perm[x]
                    if words[y] is None:
                        words[y] = words[x] + (s,)
                        queue.append(y)
            self._words = words
        return self._words[g]

    def right_perm(self, h: int) -> tuple:
        """Permutation g -> g * h."""
        perm = self._right.get(h)
        if perm is None:
            perm = tuple(range(self.order))
            for s in self.word(h):
                gp = self.gen_perms[s]
                perm = tuple(gp[x] for x in perm)
            self._right[h] = perm
        return perm

    def mul(self, g: int, h: int) -> int:
        x = g
        for s in self.word(h):
            x = self.gen_perms[s][x]
        return x

    def inverse(self, g: int) -> int:
        x = 0
        for s in reversed(self.word(g)):
            x = self.gen_perms[s][x]
        return x

    def conjugate(self, w: int, g: int) -> int:
        """w g w^-1."""
        return self.mul(self.mul(w, g), self.inverse(w))

    def relators_hold(self, matrix: CoxeterMatrix) -> bool:
        for rel in coxeter_relators(matrix) + [[s, s] for s in range(matrix.rank)]:
            for g in range(self.order):
                x = g
                for s in rel:
                    x = self.gen_perms[s][x]
                if x != g:
                    return False
        return True

    def dump(self) -> str:
        """One line per element: its images under each generator."""
        return "\n".join(
            f"{g}: " + " ".join(str(p[g]) for p in self.gen_perms)
            for g in range(self.order))


def element_order(real: RegularRealization, g: int) -> int:
    n, x = 1, g
    while x != 0:
        x = real.mul(x, g)
        n += 1
    return n


def involutions(real: RegularRealization) -> tuple:
    return tuple(g for g in range(1, real.order) if real.mul(g, g) == 0)


def subgroup_closure(real: RegularRealization, gens: Iterable[int]) -> tuple:
    gens = sorted(set(gens))
    perms = [real.right_perm(h) for h in gens]
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for p in perms:
            y = p[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return tuple(sorted(seen))


def is_generating(real: RegularRealization, gens: Iterable[int]) -> bool:
    return len(subgroup_closure(real, gens)) == real.order


def subgroup_conjugate_witness(real: RegularRealization, h_gens: Iterable[int],
                               k_gens: Iterable[int]) -> Optional[int]:
    """Smallest w with w <h_gens> w^-1 = <k_gens>, or None."""
    h_gens = sorted(set(h_gens))
    H = subgroup_closure(real, h_gens)
    K = set(subgroup_closure(real, k_gens))
    if len(H) != len(K):
        return None
    for w in range(real.order):
        # equal orders, so w H w^-1 <= K suffices
        if all(real.conjugate(w, h) in K for h in h_gens):
            return w
    return None


def elements_conjugate(real: RegularRealization, a: int, b: int) -> bool:
    return any(real.conjugate(w, a) == b for w in range(real.order))


def commutator_subgroup(real: RegularRealization, gens: Iterable[int] = None) -> tuple:
    """Normal closure of the commutators of the given generators (default: standard ones)."""
    gens = list(real.generators() if gens is None else gens)
    comm = set()
    for a in gens:
        for b in gens:
            c = real.mul(real.mul(a, b), real.mul(real.inverse(a), real.inverse(b)))
            if c != 0:
                comm.add(c)
    normal_gens = sorted(comm)
    N = set(subgroup_closure(real, normal_gens))
    changed = True
    while changed:
        changed = False
        for s in gens:
            s_inv = real.inverse(s)
            for x in list(normal_gens):
                y = real.mul(real.mul(s, x), s_inv)
                if y not in N:
                    normal_gens.append(y)
                    N = set(subgroup_closure(real, normal_gens))
                    changed = True
    return tuple(sorted(N))


def abelianization_labels(real: RegularRealization, commutator: tuple = None) -> list:
    """``labels[g]`` = index of the coset g[W, W] in W^ab."""
    if commutator is None:
        commutator = commutator_subgroup(real)
    labels = [-1] * real.order
    nxt = 0
    for g in range(real.order):
        if labels[g] < 0:
            for n in commutator:
                labels[real.mul(g, n)] = nxt
            nxt += 1
    return labels
