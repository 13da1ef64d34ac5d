"""Membership test for the rigid class defined by conditions (0)-(3):

(0) finite even labels lie in {2} u 4N;
(1) every odd pair {s, t} is a maximal spherical subset;
(2) no generator is the middle point of two odd edges;
(3) every odd pair meets at most two maximal spherical subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .finite_type import maximal_spherical_subsets
from .matrix import INF, CoxeterMatrix, is_even, is_odd, is_strong_even_label

STRONG_EVEN = "strong-even"
EVEN = "even-not-strong"
NOT_EVEN = "not-even"


class StructureViolation(RuntimeError):
    """An in-class matrix broke the odd-partner structure; indicates a bug."""


@dataclass(frozen=True)
class ClassReport:
    in_class: bool
    conditions: tuple  # verdicts for (0), (1), (2), (3)
    witnesses: dict  # condition number -> 0-based witness tuple
    evenness: str
    s_bar: tuple
    odd_pairs: tuple
    maximal_sphericals: tuple = field(default=(), repr=False)

    def to_json(self) -> dict:
        # 1-based indices, like the file format
        def one(x):
            return x + 1

        witnesses = {}
        for cond, w in sorted(self.witnesses.items()):
            if cond == 0:
                i, j, m = w
                witnesses[str(cond)] = {"pair": [one(i), one(j)], "value": m}
            elif cond == 1:
                witnesses[str(cond)] = {"pair": [one(w[0]), one(w[1])]}
            elif cond == 2:
                witnesses[str(cond)] = {"triple": [one(x) for x in w]}
            else:
                i, j, count = w
                witnesses[str(cond)] = {"pair": [one(i), one(j)], "count": count}
        return {
            "in_class": self.in_class,
            "conditions": {str(k): v for k, v in enumerate(self.conditions)},
            "witnesses": witnesses,
            "evenness": self.evenness,
            "s_bar": [one(x) for x in self.s_bar],
            "s_bar_authoritative": self.in_class,
            "odd_pairs": [[one(i), one(j)] for i, j in self.odd_pairs],
        }


def evenness(matrix: CoxeterMatrix) -> str:
    """INF counts as even (and strong even): it imposes no odd relation."""
    labels = [m for _, _, m in matrix.pairs()]
    if all(is_strong_even_label(m) for m in labels):
        return STRONG_EVEN
    if all(m == INF or is_even(m) for m in labels):
        return EVEN
    return NOT_EVEN


def strong_even_core(matrix: CoxeterMatrix, family: Optional[list] = None) -> tuple:
    """Union of the maximal spherical subsets whose subsystem is strong even."""
    if family is None:
        family = maximal_spherical_subsets(matrix)
    core = set()
    for T in family:
        if all(is_strong_even_label(matrix(a, b)) for a in T for b in T if a < b):
            core.update(T)
    return tuple(sorted(core))


def check_class_membership(matrix: CoxeterMatrix) -> ClassReport:
    n = matrix.rank
    family = maximal_spherical_subsets(matrix)
    family_set = set(family)
    odd = matrix.odd_pairs()
    witnesses = {}

    for i, j, m in matrix.pairs():
        if is_even(m) and not is_strong_even_label(m):
            witnesses[0] = (i, j, m)
            break

    for pair in odd:
        if pair not in family_set:
            witnesses[1] = pair
            break

    for t in range(n):
        partners = [u for u in range(n) if u != t and is_odd(matrix(t, u))]
        if len(partners) >= 2:
            witnesses[2] = (partners[0], t, partners[1])
            break

    for s, t in odd:
        count = sum(1 for T in family if s in T or t in T)
        if count > 2:
            witnesses[3] = (s, t, count)
            break

    conditions = tuple(k not in witnesses for k in range(4))
    return ClassReport(
        in_class=all(conditions),
        conditions=conditions,
        witnesses=witnesses,
        evenness=evenness(matrix),
        s_bar=strong_even_core(matrix, family),
        odd_pairs=tuple(odd),
        maximal_sphericals=tuple(family),
    )


def odd_partner_structure(matrix: CoxeterMatrix, report: ClassReport) -> dict:
    """Map each generator outside the strong-even core to its unique odd partner.

    For in-class matrices the partner is unique and every other label at that
    generator is INF; anything else raises StructureViolation.
    """
    if not report.in_class:
        raise ValueError("odd partner structure is only defined for in-class matrices")
    core = set(report.s_bar)
    partner = {}
    for s in range(matrix.rank):
        if s in core:
            continue
        odd = [t for t in range(matrix.rank) if t != s and is_odd(matrix(s, t))]
        if len(odd) != 1:
            raise StructureViolation(
                f"generator {s + 1} outside the core has odd partners "
                f"{[t + 1 for t in odd]}; matrix:\n{matrix}")
        t = odd[0]
        bad = [u for u in range(matrix.rank) if u not in (s, t) and matrix(s, u) != INF]
        if bad:
            raise StructureViolation(
                f"generator {s + 1} (partner {t + 1}) has finite labels to "
                f"{[u + 1 for u in bad]}; matrix:\n{matrix}")
        partner[s] = t
    return partner
