import itertools

import pytest
from hypothesis import given, settings

from conftest import all_matrices, coxeter_matrices
from oracles import naive_finite
from coxrig import corpus
from coxrig.finite_type import (FiniteTypeLabel, classify_finite_type, coxeter_order, is_spherical,
                                maximal_independent_subsets, maximal_spherical_subsets,
                                spherical_subsets)
from coxrig.group_engine import CapExceeded, todd_coxeter
from coxrig.matrix import INF, CoxeterMatrix, direct_sum, preset

EXAMPLE = corpus.INFINITE["odd_pair_and_even"]  # m12=5, m13=4, m23=inf


def labels(m):
    return [str(x) for x in classify_finite_type(m)]


def test_f4():
    (lab,) = classify_finite_type(preset("F4"))
    assert str(lab) == "F4" and lab.order == 1152
    assert todd_coxeter(preset("F4")).order == 1152


@pytest.mark.parametrize("name, expected", [
    ("A1", "A1"), ("A4", "A4"), ("B2", "B2"), ("B4", "B4"), ("D4", "D4"), ("D6", "D6"),
    ("E6", "E6"), ("E7", "E7"), ("E8", "E8"), ("H3", "H3"), ("H4", "H4"),
    ("I2(3)", "A2"), ("I2(4)", "B2"), ("I2(6)", "I2(6)"), ("I2(11)", "I2(11)"),
])
def test_classify_presets(name, expected):
    assert labels(preset(name)) == [expected]


def test_relabeled_presets_classify_the_same():
    for name in ["B4", "D5", "E7", "F4", "H4"]:
        m = preset(name)
        perm = list(range(m.rank))[::-1]
        assert labels(m.relabel(perm)) == labels(m)


def test_reducible():
    m = direct_sum(preset("B3"), preset("A1"), preset("A2"))
    assert labels(m) == ["A1", "A2", "B3"]
    assert coxeter_order(m) == 48 * 2 * 6


def test_infinite_cases():
    assert classify_finite_type(CoxeterMatrix.from_pairs(2, {})) is None
    path_5_4 = corpus.INFINITE["path_5_4"]
    assert classify_finite_type(path_5_4) is None
    with pytest.raises(CapExceeded):
        todd_coxeter(path_5_4, 20000)
    for name in ["affine_A2", "affine_B2", "affine_G2", "hyperbolic_3_7"]:
        assert classify_finite_type(corpus.INFINITE[name]) is None
    # affine D4 (star with four arms), affine E6 and a cycle
    star = CoxeterMatrix.from_pairs(5, {(0, j): 3 for j in range(1, 5)} |
                                    {(i, j): 2 for i in range(1, 5) for j in range(i + 1, 5)})
    assert classify_finite_type(star) is None
    # a 4 in the middle is F4 at rank 4 and infinite at rank 5; two 4s are infinite
    mid4 = CoxeterMatrix.from_pairs(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3, (0, 2): 2, (0, 3): 2, (1, 3): 2})
    assert labels(mid4) == ["F4"]
    mid4_5 = CoxeterMatrix.from_pairs(5, {(0, 1): 3, (1, 2): 4, (2, 3): 3, (3, 4): 3} |
                                      {(i, j): 2 for i in range(5) for j in range(i + 2, 5)})
    assert classify_finite_type(mid4_5) is None
    double4 = CoxeterMatrix.from_pairs(3, {(0, 1): 4, (1, 2): 4, (0, 2): 2})
    assert classify_finite_type(double4) is None


def test_coxeter_order():
    assert coxeter_order(direct_sum(preset("A1"), preset("A2"))) == 12
    assert coxeter_order(preset("I2(6)")) == 12
    assert coxeter_order(preset("A1")) == 2
    assert coxeter_order(CoxeterMatrix.from_pairs(2, {})) == INF


def test_label_normalization():
    assert FiniteTypeLabel.make("I2", 3) == FiniteTypeLabel.make("A", 2)
    assert str(FiniteTypeLabel.make("I2", 4)) == "B2"


def test_is_spherical():
    assert is_spherical(EXAMPLE, [])
    assert is_spherical(EXAMPLE, [0, 1])
    assert not is_spherical(EXAMPLE, [0, 1, 2])


def test_maximal_spherical_examples():
    assert maximal_spherical_subsets(EXAMPLE) == [(0, 1), (0, 2)]
    assert maximal_spherical_subsets(preset("E6")) == [tuple(range(6))]
    assert maximal_spherical_subsets(CoxeterMatrix.from_pairs(3, {})) == [(0,), (1,), (2,)]


def test_maximal_spherical_example_exhaustive():
    subsets = [frozenset(c) for r in range(4) for c in itertools.combinations(range(3), r)]
    sph = [T for T in subsets if naive_finite(EXAMPLE, T)]
    maximal = sorted(tuple(sorted(T)) for T in sph if not any(T < U for U in sph))
    assert maximal == maximal_spherical_subsets(EXAMPLE)


def test_maximal_independent():
    assert maximal_independent_subsets(preset("B2"), [0, 1]) == [(0,), (1,)]
    a3 = direct_sum(preset("A1"), preset("A1"), preset("A1"))
    assert maximal_independent_subsets(a3, [0, 1, 2]) == [(0, 1, 2)]
    assert maximal_independent_subsets(EXAMPLE, [0, 2]) == [(0,), (2,)]
    pent = corpus.INFINITE["right_angled_pentagon"]
    assert maximal_independent_subsets(pent, range(5)) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


@pytest.mark.parametrize("rank", [2, 3])
def test_sphericity_agrees_with_triangle_criterion(rank):
    for m in all_matrices(rank):
        assert is_spherical(m, range(rank)) == naive_finite(m, range(rank))


@given(coxeter_matrices())
@settings(max_examples=150)
def test_downward_closure_and_cover(m):
    sph = set(spherical_subsets(m))
    for T in sph:
        for r in range(len(T)):
            for sub in itertools.combinations(T, r):
                assert sub in sph
    fam = maximal_spherical_subsets(m)
    for T in sph:
        assert any(set(T) <= set(U) for U in fam)
    for a, b in itertools.permutations(fam, 2):
        assert not set(a) <= set(b)
    for T in fam:
        assert is_spherical(m, T)


def test_downward_closure_on_corpus():
    for name, m in corpus.ALL.items():
        if m.rank > 5:
            continue
        sph = {T for r in range(m.rank + 1) for T in itertools.combinations(range(m.rank), r)
               if is_spherical(m, T)}
        assert sph == set(spherical_subsets(m)), name
        for T in sph:
            if T:
                assert all(sub in sph for sub in itertools.combinations(T, len(T) - 1)), name


@given(coxeter_matrices())
@settings(max_examples=100)
def test_independent_family_properties(m):
    fam = maximal_independent_subsets(m, range(m.rank))
    for T in fam:
        assert all(m(a, b) == 2 for a, b in itertools.combinations(T, 2))
        for v in set(range(m.rank)) - set(T):
            assert any(m(v, a) != 2 for a in T)
    for a, b in itertools.permutations(fam, 2):
        assert not set(a) <= set(b)


def test_finite_corpus_orders_match_enumeration():
    for name, m in corpus.FINITE.items():
        order = coxeter_order(m)
        if order <= 1152:
            assert todd_coxeter(m).order == order, name
