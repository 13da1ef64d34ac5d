import itertools

import pytest

from oracles import closure, dihedral_group, perm_mul
from coxrig import corpus
from coxrig.finite_type import coxeter_order
from coxrig.group_engine import (CapExceeded, commutator_subgroup, element_order,
                                 elements_conjugate, involutions, is_generating,
                                 subgroup_closure, subgroup_conjugate_witness, todd_coxeter)
from coxrig.matrix import CoxeterMatrix, direct_sum, preset


def test_a2_order_matches_s3():
    s3 = closure([(1, 0, 2), (0, 2, 1)], perm_mul, (0, 1, 2))
    assert todd_coxeter(preset("A2")).order == len(s3) == 6


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 12])
def test_dihedral_orders(m):
    elems, mul = dihedral_group(m)
    refl = [(0, 1), (1, 1)]
    assert len(closure(refl, mul, (0, 0))) == 2 * m
    assert todd_coxeter(preset(f"I2({m})")).order == 2 * m


def test_infinite_dihedral_caps():
    with pytest.raises(CapExceeded):
        todd_coxeter(CoxeterMatrix.from_pairs(2, {}), 1000)


def test_deterministic_tables():
    assert todd_coxeter(preset("B3")).gen_perms == todd_coxeter(preset("B3")).gen_perms


def test_realization_invariants():
    for name, m in corpus.FINITE.items():
        order = coxeter_order(m)
        if order > 1152:
            continue
        real = todd_coxeter(m)
        assert real.order == order, name
        assert real.relators_hold(m), name
        for p in real.gen_perms:
            assert all(p[p[x]] == x for x in range(real.order))
        assert is_generating(real, real.generators())


def test_element_orders():
    real = todd_coxeter(preset("I2(4)"))
    s, t = real.generators()
    assert element_order(real, 0) == 1
    assert element_order(real, s) == element_order(real, t) == 2
    assert element_order(real, real.mul(s, t)) == 4
    # I2(4) has 5 involutions: 4 reflections and the central rotation
    assert len(involutions(real)) == 5


def test_multiplication_is_associative_and_inverse():
    real = todd_coxeter(preset("A3"))
    for g, h, k in itertools.product(range(0, 24, 5), range(0, 24, 3), range(0, 24, 7)):
        assert real.mul(real.mul(g, h), k) == real.mul(g, real.mul(h, k))
    for g in range(24):
        assert real.mul(g, real.inverse(g)) == 0 == real.mul(real.inverse(g), g)


def test_subgroup_closure():
    real = todd_coxeter(direct_sum(preset("A1"), preset("A2")))
    assert subgroup_closure(real, []) == (0,)
    gens = real.generators()
    assert len(subgroup_closure(real, gens[1:])) == 6
    assert is_generating(real, gens)
    assert not is_generating(real, gens[1:])


def test_conjugate_witness():
    real = todd_coxeter(preset("I2(5)"))
    s, t = real.generators()
    assert subgroup_conjugate_witness(real, [s], [s]) == 0
    tst = real.mul(real.mul(t, s), t)
    w = subgroup_conjugate_witness(real, [s], [tst])
    assert w is not None and real.conjugate(w, s) == tst
    real4 = todd_coxeter(preset("I2(4)"))
    s4, t4 = real4.generators()
    assert subgroup_conjugate_witness(real4, [s4], [t4]) is None


def _brute_witness(real, h_gens, k_gens):
    H = subgroup_closure(real, h_gens)
    K = set(subgroup_closure(real, k_gens))
    for w in range(real.order):
        if {real.conjugate(w, h) for h in H} == K:
            return w
    return None


@pytest.mark.parametrize("name", ["I2(4)", "I2(6)", "A3", "B3", "A1+B2", "A1+A1+A1"])
def test_conjugate_witness_matches_full_scan(name):
    real = todd_coxeter(corpus.FINITE[name])
    assert real.order <= 48
    invs = involutions(real)
    for a, b in itertools.combinations(invs, 2):
        assert subgroup_conjugate_witness(real, [a], [b]) == _brute_witness(real, [a], [b])
        assert elements_conjugate(real, a, b) == (_brute_witness(real, [a], [b]) is not None)
    pairs = list(itertools.combinations(invs, 2))[:12]
    for p, q in itertools.product(pairs, repeat=2):
        assert subgroup_conjugate_witness(real, p, q) == _brute_witness(real, p, q)


def test_commutator_subgroup():
    assert commutator_subgroup(todd_coxeter(direct_sum(preset("A1"), preset("A1")))) == (0,)
    assert len(commutator_subgroup(todd_coxeter(preset("A2")))) == 3
    real = todd_coxeter(preset("I2(4)"))
    assert len(commutator_subgroup(real)) == 2 and real.order // 2 == 4


def test_commutator_subgroup_is_normal():
    real = todd_coxeter(preset("B3"))
    N = set(commutator_subgroup(real))
    for g in range(real.order):
        assert {real.conjugate(g, n) for n in N} == N
    assert (real.order // len(N)) & (real.order // len(N) - 1) == 0


def test_dump():
    dump = todd_coxeter(preset("A1")).dump()
    assert dump == "0: 1\n1: 0"
