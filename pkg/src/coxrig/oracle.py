"""Brute-force rigidity verification for small finite Coxeter groups.

The group is realized once; every Coxeter generating set of it is found by
exhaustive search over subsets of involutions and certified by an order
comparison.  Two systems on the same realization stand for two Coxeter
systems related by the isomorphism phi = identity, which lets the matching
of maximal spherical subsets, the tau relation and the construction of the
diagram bijection psi be carried out on concrete elements.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from typing import Optional

from .finite_type import classify_finite_type, coxeter_order, maximal_independent_subsets, \
    maximal_spherical_subsets
from .group_engine import DEFAULT_MAX_COSETS, RegularRealization, abelianization_labels, \
    element_order, elements_conjugate, involutions, is_generating, subgroup_closure, \
    subgroup_conjugate_witness, todd_coxeter
from .matrix import INF, CoxeterMatrix, diagram_isomorphic, is_odd
from .rigidity_class import check_class_membership, odd_partner_structure


class LimitExceeded(RuntimeError):
    pass


class InfiniteGroup(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    """A structural property of Coxeter systems failed on concrete data; indicates a bug."""

    def __init__(self, message: str, **state):
        self.state = state
        dump = "\n".join(f"  {k}: {v}" for k, v in state.items())
        super().__init__(f"{message}\n{dump}" if dump else message)


@dataclass(frozen=True)
class Limits:
    max_order: int = 200
    max_gens: int = 6
    max_cosets: int = DEFAULT_MAX_COSETS
    max_subsets: int = 2_000_000

    def __post_init__(self):
        for name in ("max_order", "max_gens", "max_cosets", "max_subsets"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")

    def to_json(self) -> dict:
        return {"max_order": self.max_order, "max_gens": self.max_gens,
                "max_cosets": self.max_cosets, "max_subsets": self.max_subsets}


@dataclass(frozen=True)
class CandidateSystem:
    generators: tuple  # element indices, sorted
    matrix: CoxeterMatrix
    certified: bool = False

    @property
    def rank(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class DiagramClass:
    matrix: CoxeterMatrix
    representative: tuple
    labels: tuple
    members: int = 1


@dataclass(frozen=True)
class RigidityVerdict:
    base_matrix: CoxeterMatrix
    limits: Limits
    order: int
    classes: tuple
    exhausted: bool
    candidates: tuple = field(default=(), repr=False)

    @property
    def rigid(self) -> bool:
        return len(self.classes) == 1

    def to_json(self) -> dict:
        return {
            "rigid": self.rigid,
            "exhausted": self.exhausted,
            "order": self.order,
            "classes": [
                {"matrix": c.matrix.to_json(),
                 "type": " x ".join(c.labels),
                 "representative_generators": list(c.representative),
                 "systems_found": c.members}
                for c in self.classes
            ],
            "limits": self.limits.to_json(),
        }


def product_matrix(real: RegularRealization, gens) -> CoxeterMatrix:
    """Matrix of the orders of pairwise products."""
    gens = list(gens)
    n = len(gens)
    rows = [[1] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = element_order(real, real.mul(gens[i], gens[j]))
    return CoxeterMatrix(tuple(map(tuple, rows)))


def certify_coxeter_system(real: RegularRealization, gens) -> Optional[CoxeterMatrix]:
    """The Coxeter matrix of ``gens`` if they form a Coxeter generating set, else None.

    Sound because the abstract Coxeter group on the product-order matrix maps
    onto the group generated by ``gens``; when it is finite of the same order
    as W that surjection is an isomorphism.
    """
    gens = sorted(gens)
    if any(g == 0 or real.mul(g, g) != 0 for g in gens):
        raise ValueError("certification needs involutions")
    if not is_generating(real, gens):
        return None
    m = product_matrix(real, gens)
    if coxeter_order(m) != real.order:
        return None
    return m


def _max_rank(order: int) -> int:
    # a chain of standard parabolics W_{s1} < W_{s1,s2} < ... has index >= 2
    # at every step, so a Coxeter generating set has at most log2|W| elements
    return order.bit_length() - 1


def enumerate_coxeter_generating_sets(real: RegularRealization, base: CoxeterMatrix,
                                      limits: Limits = Limits()) -> list:
    """All certified Coxeter generating sets, in (size, lexicographic) order.

    Depth-first over increasing involution indices with two sound prunes:

    * a generating set is never extended: no proper subset of a Coxeter
      generating set S generates W, since the quotient killing every generator
      but s sends W_{S - s} to the identity and s to a nontrivial element;
    * a partial set must already be a Coxeter generating set of the subgroup
      it generates, because every subset of a Coxeter generating set spans a
      standard parabolic subgroup, itself a Coxeter system on that subset.
    """
    if real.order > limits.max_order:
        raise LimitExceeded(f"|W| = {real.order} exceeds max_order {limits.max_order}")
    invs = involutions(real)
    top = min(limits.max_gens, _max_rank(real.order))
    found = []
    visited = 0

    def extend(current: tuple, start: int):
        nonlocal visited
        if len(current) == top:
            return
        for k in range(start, len(invs)):
            visited += 1
            if visited > limits.max_subsets:
                raise LimitExceeded(f"search visited more than {limits.max_subsets} subsets")
            cand = current + (invs[k],)
            size = len(subgroup_closure(real, cand))
            m = product_matrix(real, cand)
            if coxeter_order(m) != size:
                continue
            if size == real.order:
                found.append(CandidateSystem(cand, m, certified=True))
            else:
                extend(cand, k + 1)

    extend((), 0)
    found.sort(key=lambda c: (c.rank, c.generators))
    return found


def standard_system(real: RegularRealization, matrix: CoxeterMatrix) -> CandidateSystem:
    """The defining generators, in their original order."""
    return CandidateSystem(real.generators(), matrix, certified=True)


def rigidity_verdict(matrix: CoxeterMatrix, limits: Limits = Limits()) -> RigidityVerdict:
    order = coxeter_order(matrix)
    if order == INF:
        raise InfiniteGroup("the Coxeter group is infinite; no finite search is possible")
    if order > limits.max_order:
        raise LimitExceeded(f"|W| = {order} exceeds max_order {limits.max_order}")
    real = todd_coxeter(matrix, limits.max_cosets)
    candidates = enumerate_coxeter_generating_sets(real, matrix, limits)

    reps: list = []  # [matrix, representative, count]
    for cand in [standard_system(real, matrix)] + candidates:
        for entry in reps:
            if diagram_isomorphic(cand.matrix, entry[0]) is not None:
                entry[2] += 1
                break
        else:
            reps.append([cand.matrix, cand.generators, 1])
    reps[0][2] -= 1  # the standard set is also among the candidates
    classes = tuple(
        DiagramClass(m, gens, tuple(str(lab) for lab in classify_finite_type(m)), count)
        for m, gens, count in reps)
    return RigidityVerdict(
        base_matrix=matrix,
        limits=limits,
        order=real.order,
        classes=classes,
        exhausted=limits.max_gens >= _max_rank(real.order),
        candidates=tuple(candidates),
    )


# ---------------------------------------------------------------------------
# the correspondence between two Coxeter systems of one realized group

def _parabolic_gens(sys: CandidateSystem, T) -> list:
    return [sys.generators[i] for i in T]


def match_maximal_sphericals(real: RegularRealization, sysA: CandidateSystem,
                             sysB: CandidateSystem) -> list:
    """For each maximal spherical T of ``sysA``, the unique maximal spherical T'
    of ``sysB`` whose parabolic is conjugate to W_T, with the smallest conjugator.

    Returns ``[(T, T', w)]`` with ``w W_T w^-1 = W'_T'``.
    """
    famA = maximal_spherical_subsets(sysA.matrix)
    famB = maximal_spherical_subsets(sysB.matrix)
    out = []
    for T in famA:
        H = _parabolic_gens(sysA, T)
        hits = []
        for Tp in famB:
            w = subgroup_conjugate_witness(real, H, _parabolic_gens(sysB, Tp))
            if w is not None:
                hits.append((Tp, w))
        if len(hits) != 1:
            raise InternalInconsistency(
                f"maximal spherical {T} has {len(hits)} conjugate matches",
                A_generators=sysA.generators, B_generators=sysB.generators,
                parabolic=subgroup_closure(real, H),
                matches=[(Tp, subgroup_closure(real, _parabolic_gens(sysB, Tp))) for Tp, _ in hits])
        out.append((T, hits[0][0], hits[0][1]))
    return out


_AB_CACHE: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def _ab_labels(real: RegularRealization) -> list:
    labels = _AB_CACHE.get(real)
    if labels is None:
        labels = _AB_CACHE[real] = abelianization_labels(real)
    return labels


def abelian_image(real: RegularRealization, gens) -> frozenset:
    """Image in W^ab of the subgroup generated by ``gens`` (as coset labels)."""
    labels = _ab_labels(real)
    return frozenset(labels[g] for g in subgroup_closure(real, gens))


def tau_relation(real: RegularRealization, sysA: CandidateSystem, A, sysB: CandidateSystem, Ap) -> bool:
    """Whether W_A and W'_A' have the same image in the abelianization."""
    return abelian_image(real, _parabolic_gens(sysA, A)) == abelian_image(real, _parabolic_gens(sysB, Ap))


def _core_families(sys: CandidateSystem, core: tuple) -> list:
    core_set = set(core)
    fams = [T for T in maximal_spherical_subsets(sys.matrix) if set(T) <= core_set]
    for T in maximal_independent_subsets(sys.matrix, core):
        if T not in fams:
            fams.append(T)
    return fams


def construct_psi(real: RegularRealization, sysA: CandidateSystem, sysB: CandidateSystem,
                  strict: bool = True) -> Optional[tuple]:
    """Diagram isomorphism ``psi`` from ``sysA`` to ``sysB`` built from group data.

    On the strong-even core psi is read off from which matched maximal
    spherical / maximal independent subsets contain each generator; off the
    core each generator follows its odd partner's matched pair.  The result is
    verified entrywise.  Failure raises InternalInconsistency when ``strict``,
    otherwise returns None.
    """
    repA = check_class_membership(sysA.matrix)
    if not repA.in_class:
        raise ValueError("construct_psi needs the first system in class")
    repB = check_class_membership(sysB.matrix)

    def fail(msg, **extra):
        if strict:
            raise InternalInconsistency(
                msg, A_generators=sysA.generators, A_matrix=sysA.matrix.to_json(),
                B_generators=sysB.generators, B_matrix=sysB.matrix.to_json(), **extra)
        return None

    n = sysA.rank
    if sysB.rank != n:
        return fail("ranks differ")
    coreA, coreB = repA.s_bar, repB.s_bar
    if len(coreA) != len(coreB):
        return fail("strong-even cores differ in size", coreA=coreA, coreB=coreB)

    try:
        sph_match = {T: Tp for T, Tp, _ in match_maximal_sphericals(real, sysA, sysB)}
    except InternalInconsistency:
        if strict:
            raise
        return None

    # tau-matched families inside the cores
    famA = _core_families(sysA, coreA)
    famB = _core_families(sysB, coreB)
    matched = []
    for T in famA:
        if T in sph_match:
            Tp = sph_match[T]
        else:
            hits = [Tp for Tp in famB if tau_relation(real, sysA, T, sysB, Tp)]
            if len(hits) != 1:
                return fail(f"independent subset {T} has {len(hits)} tau partners")
            Tp = hits[0]
        if not set(Tp) <= set(coreB):
            return fail(f"{T} matched outside the core: {Tp}")
        matched.append((T, Tp))

    sigA = {s: frozenset(k for k, (T, _) in enumerate(matched) if s in T) for s in coreA}
    sigB = {s: frozenset(k for k, (_, Tp) in enumerate(matched) if s in Tp) for s in coreB}
    singleton = {}
    for s in coreA:
        hits = [sp for sp in coreB if tau_relation(real, sysA, (s,), sysB, (sp,))]
        if len(hits) > 1:
            return fail(f"generator {s} has several singleton tau partners {hits}")
        if hits:
            singleton[s] = hits[0]

    psi = [-1] * n
    used = set()

    def assign(k: int) -> bool:
        if k == len(coreA):
            return True
        s = coreA[k]
        options = [singleton[s]] if s in singleton else coreB
        for sp in options:
            if sp in used or sigB[sp] != sigA[s]:
                continue
            if all(sysA.matrix(s, u) == sysB.matrix(sp, psi[u]) for u in coreA[:k]):
                psi[s] = sp
                used.add(sp)
                if assign(k + 1):
                    return True
                used.discard(sp)
        psi[s] = -1
        return False

    if not assign(0):
        return fail("no incidence-preserving bijection between the cores",
                    matched=matched, singleton=singleton)

    # off the core: follow the odd partner
    partner = odd_partner_structure(sysA.matrix, repA)
    core_set = set(coreA)
    for s in sorted(partner):
        if psi[s] >= 0:
            continue
        t = partner[s]
        pair = (min(s, t), max(s, t))
        pair_img = sph_match.get(pair)
        if pair_img is None or len(pair_img) != 2:
            return fail(f"odd pair {pair} not matched to a pair", sph_match=sph_match)
        if t not in core_set:
            psi[pair[0]], psi[pair[1]] = pair_img
            continue
        owners = [T for T in sph_match if t in T and set(T) <= core_set]
        if len(owners) != 1:
            return fail(f"core generator {t} lies in {len(owners)} core maximal sphericals")
        Tp = sph_match[owners[0]]
        image_t = sysA.generators[t]
        conj = [x for x in pair_img if elements_conjugate(real, image_t, sysB.generators[x])]
        if not conj:
            return fail(f"image of {t} conjugate to neither element of {pair_img}")
        conj.sort(key=lambda x: (x not in Tp, x))
        tp = conj[0]
        if psi[t] != tp:
            return fail(f"core bijection sends {t} to {psi[t]}, expected {tp}")
        psi[s] = next(x for x in pair_img if x != tp)

    if sorted(psi) != list(range(n)):
        return fail("psi is not a bijection", psi=psi)
    if any(sysA.matrix(i, j) != sysB.matrix(psi[i], psi[j]) for i in range(n) for j in range(n)):
        return fail("psi does not preserve labels", psi=psi)
    return tuple(psi)


def odd_pair_conjugacy(real: RegularRealization, sys: CandidateSystem) -> bool:
    """Generators joined by an odd edge are conjugate (sanity check on the realization)."""
    return all(elements_conjugate(real, sys.generators[i], sys.generators[j])
               for i, j, m in sys.matrix.pairs() if is_odd(m))
