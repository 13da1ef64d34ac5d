"""Coxeter matrices: the value type, the ``.cox`` text format, presets,
direct sums, induced subsystems and labeled-diagram isomorphism.

Generators are 0-indexed in memory and 1-indexed in files.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

INF = math.inf

Order = Union[int, float]  # an int >= 1, or INF
Subset = tuple  # sorted tuple of generator indices


class CoxeterParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


def is_odd(m: Order) -> bool:
    return m != INF and m % 2 == 1


def is_even(m: Order) -> bool:
    return m != INF and m % 2 == 0


def is_strong_even_label(m: Order) -> bool:
    """True for 2, multiples of 4 and INF (no relation)."""
    return m == INF or m == 2 or m % 4 == 0


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple
    names: Optional[tuple] = None

    def __post_init__(self):
        rows = tuple(tuple(_normalize_order(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if n < 1:
            raise ValueError("rank must be positive")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            if row[i] != 1:
                raise ValueError(f"diagonal entry ({i},{i}) must be 1")
            for j in range(n):
                if row[j] != rows[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
                if i != j and row[j] < 2:
                    raise ValueError(f"off-diagonal entry ({i},{j}) must be >= 2")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("names must be rank distinct labels")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_pairs(cls, rank: int, pairs: dict, names=None) -> "CoxeterMatrix":
        """Build from ``{(i, j): m}`` with 0-based indices; missing pairs are INF."""
        rows = [[1 if i == j else INF for j in range(rank)] for i in range(rank)]
        for (i, j), m in pairs.items():
            rows[i][j] = rows[j][i] = m
        return cls(tuple(map(tuple, rows)), names)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __call__(self, i: int, j: int) -> Order:
        return self.entries[i][j]

    def pairs(self) -> Iterator[tuple]:
        """Yield ``(i, j, m)`` for i < j."""
        n = self.rank
        for i in range(n):
            for j in range(i + 1, n):
                yield i, j, self.entries[i][j]

    def odd_pairs(self) -> list:
        return [(i, j) for i, j, m in self.pairs() if is_odd(m)]

    def relabel(self, perm: Sequence[int]) -> "CoxeterMatrix":
        """Matrix M' with M'(perm[i], perm[j]) = M(i, j)."""
        n = self.rank
        rows = [[1] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rows[perm[i]][perm[j]] = self.entries[i][j]
        return CoxeterMatrix(tuple(map(tuple, rows)))

    def label(self, i: int) -> str:
        return self.names[i] if self.names else f"s{i + 1}"

    def to_json(self) -> list:
        return [[_fmt(v) for v in row] for row in self.entries]

    def __str__(self) -> str:
        return serialize(self)


def _normalize_order(v) -> Order:
    if v == INF or v == "inf":
        return INF
    if isinstance(v, float):
        if not v.is_integer():
            raise ValueError(f"non-integer order {v!r}")
        return int(v)
    if not isinstance(v, int):
        raise ValueError(f"bad order {v!r}")
    return v


def _fmt(v: Order) -> Union[int, str]:
    return "inf" if v == INF else v


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\S+")


def parse_coxeter_file(text: str) -> CoxeterMatrix:
    """Parse the line-oriented ``.cox`` format.

    ::

        rank 3
        names a b c        # optional
        m 1 2 5
        m 1 3 4            # pair (2,3) omitted, so m = inf
    """
    rank = None
    names = None
    pairs: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        head, col = tokens[0]
        if rank is None:
            if head != "rank":
                raise CoxeterParseError(f"expected 'rank', got {head!r}", lineno, col)
            if len(tokens) != 2:
                raise CoxeterParseError("'rank' takes exactly one integer", lineno, col)
            rank = _parse_int(tokens[1], lineno)
            if rank < 1:
                raise CoxeterParseError("rank must be positive", lineno, tokens[1][1])
        elif head == "names":
            if names is not None or pairs:
                raise CoxeterParseError("'names' must directly follow 'rank'", lineno, col)
            if len(tokens) - 1 != rank:
                raise CoxeterParseError(
                    f"rank mismatch: {len(tokens) - 1} names for rank {rank}", lineno, col)
            names = tuple(t for t, _ in tokens[1:])
            if len(set(names)) != rank:
                raise CoxeterParseError("duplicate generator name", lineno, col)
        elif head == "m":
            if len(tokens) != 4:
                raise CoxeterParseError("expected 'm i j value'", lineno, col)
            i = _parse_int(tokens[1], lineno)
            j = _parse_int(tokens[2], lineno)
            for idx, tok in ((i, tokens[1]), (j, tokens[2])):
                if not 1 <= idx <= rank:
                    raise CoxeterParseError(
                        f"index {idx} out of range 1..{rank}", lineno, tok[1])
            if i == j:
                raise CoxeterParseError("diagonal entries are fixed to 1", lineno, col)
            if tokens[3][0] == "inf":
                value: Order = INF
            else:
                value = _parse_int(tokens[3], lineno)
                if value < 2:
                    raise CoxeterParseError(f"order {value} < 2", lineno, tokens[3][1])
            key = (min(i, j) - 1, max(i, j) - 1)
            if key in pairs and pairs[key] != value:
                raise CoxeterParseError(
                    f"conflicting values for pair ({i},{j}): "
                    f"{_fmt(pairs[key])} vs {_fmt(value)}", lineno, col)
            pairs[key] = value
        else:
            raise CoxeterParseError(f"unknown directive {head!r}", lineno, col)
    if rank is None:
        raise CoxeterParseError("missing 'rank' line", 1, 1)
    return CoxeterMatrix.from_pairs(rank, pairs, names)


def _parse_int(token: tuple, lineno: int) -> int:
    text, col = token
    if not text.isdigit():
        raise CoxeterParseError(f"expected integer, got {text!r}", lineno, col)
    return int(text)


def serialize(matrix: CoxeterMatrix) -> str:
    lines = [f"rank {matrix.rank}"]
    if matrix.names:
        lines.append("names " + " ".join(matrix.names))
    for i, j, m in matrix.pairs():
        if m != INF:
            lines.append(f"m {i + 1} {j + 1} {m}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# presets

def _path(labels: Sequence[int]) -> CoxeterMatrix:
    n = len(labels) + 1
    pairs = {(i, j): 2 for i in range(n) for j in range(i + 1, n)}
    for i, m in enumerate(labels):
        pairs[(i, i + 1)] = m
    return CoxeterMatrix.from_pairs(n, pairs)


def type_a(n: int) -> CoxeterMatrix:
    if n < 1:
        raise ValueError("A(n) needs n >= 1")
    return _path([3] * (n - 1))


def type_b(n: int) -> CoxeterMatrix:
    if n < 2:
        raise ValueError("B(n) needs n >= 2")
    return _path([3] * (n - 2) + [4])


def type_d(n: int) -> CoxeterMatrix:
    if n < 4:
        raise ValueError("D(n) needs n >= 4")
    pairs = {(i, j): 2 for i in range(n) for j in range(i + 1, n)}
    for i in range(n - 2):
        pairs[(i, i + 1)] = 3
    pairs[(n - 3, n - 1)] = 3
    return CoxeterMatrix.from_pairs(n, pairs)


def type_e(n: int) -> CoxeterMatrix:
    # Bourbaki labels: 1-3-4-5-..., with 2 attached to 4
    if n not in (6, 7, 8):
        raise ValueError("E(n) needs n in 6, 7, 8")
    pairs = {(i, j): 2 for i in range(n) for j in range(i + 1, n)}
    pairs[(0, 2)] = 3
    pairs[(1, 3)] = 3
    for i in range(2, n - 1):
        pairs[(i, i + 1)] = 3
    return CoxeterMatrix.from_pairs(n, pairs)


def type_i2(m: int) -> CoxeterMatrix:
    if m < 3:
        raise ValueError("I2(m) needs m >= 3")
    return _path([m])


PRESET_NAMES = ("A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4", "I2")

_PRESET_RE = re.compile(r"^(A|B|D|E|F|H|I2)\(?(\d+)\)?$")


def preset(name: str) -> CoxeterMatrix:
    """Standard Coxeter matrix by type name: ``A3``, ``A(3)``, ``I2(6)``, ``F4``..."""
    match = _PRESET_RE.match(name.replace(" ", ""))
    if not match:
        raise ValueError(f"unknown preset {name!r}")
    family, n = match.group(1), int(match.group(2))
    if family == "A":
        return type_a(n)
    if family == "B":
        return type_b(n)
    if family == "D":
        return type_d(n)
    if family == "E":
        return type_e(n)
    if family == "F":
        if n != 4:
            raise ValueError("only F4 exists")
        return _path([3, 4, 3])
    if family == "H":
        if n == 3:
            return _path([5, 3])
        if n == 4:
            return _path([5, 3, 3])
        raise ValueError("only H3 and H4 exist")
    return type_i2(n)


def direct_sum(*matrices: CoxeterMatrix) -> CoxeterMatrix:
    """Block matrix with commuting factors (cross entries 2)."""
    n = sum(m.rank for m in matrices)
    rows = [[2] * n for _ in range(n)]
    offset = 0
    for mat in matrices:
        for i in range(mat.rank):
            for j in range(mat.rank):
                rows[offset + i][offset + j] = mat(i, j)
        offset += mat.rank
    for i in range(n):
        rows[i][i] = 1
    return CoxeterMatrix(tuple(map(tuple, rows)))


def induced_submatrix(matrix: CoxeterMatrix, subset: Iterable[int]) -> CoxeterMatrix:
    idx = sorted(set(subset))
    names = tuple(matrix.names[i] for i in idx) if matrix.names else None
    return CoxeterMatrix(tuple(tuple(matrix(i, j) for j in idx) for i in idx), names)


# ---------------------------------------------------------------------------
# diagram isomorphism

def _vertex_key(matrix: CoxeterMatrix, v: int) -> tuple:
    row = [matrix(v, u) for u in range(matrix.rank) if u != v]
    degree = sum(1 for m in row if m >= 3)
    finite = tuple(sorted(m for m in row if m != INF))
    return degree, finite, sum(1 for m in row if m == INF)


def diagram_isomorphic(m1: CoxeterMatrix, m2: CoxeterMatrix) -> Optional[tuple]:
    """Return ``psi`` (tuple, ``psi[i]`` = image of generator i) with
    ``m1(s, t) == m2(psi[s], psi[t])`` for all s, t, or None.

    Vertices of ``m1`` are matched in order of their invariant key, then index;
    candidates in ``m2`` are tried in index order, so the answer is deterministic.
    """
    if m1.rank != m2.rank:
        return None
    n = m1.rank
    keys1 = [_vertex_key(m1, v) for v in range(n)]
    keys2 = [_vertex_key(m2, v) for v in range(n)]
    if sorted(keys1) != sorted(keys2):
        return None
    order = sorted(range(n), key=lambda v: (keys1[v], v))
    psi = [-1] * n
    used = [False] * n

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for w in range(n):
            if used[w] or keys2[w] != keys1[v]:
                continue
            if all(m1(v, order[d]) == m2(w, psi[order[d]]) for d in range(depth)):
                psi[v] = w
                used[w] = True
                if extend(depth + 1):
                    return True
                used[w] = False
        psi[v] = -1
        return False

    return tuple(psi) if extend(0) else None
