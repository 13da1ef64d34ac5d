import pytest
from hypothesis import given, settings

from conftest import coxeter_matrices
from coxrig import corpus
from coxrig.matrix import (INF, CoxeterMatrix, CoxeterParseError, diagram_isomorphic, direct_sum,
                           induced_submatrix, parse_coxeter_file, preset, serialize)


def test_parse_basic():
    m = parse_coxeter_file("rank 2\nm 1 2 4")
    assert m.rank == 2 and m(0, 1) == 4 and m(1, 0) == 4 and m(0, 0) == 1


def test_parse_defaults_to_inf():
    assert parse_coxeter_file("rank 2")(0, 1) == INF
    m = parse_coxeter_file("rank 3\nm 1 2 5\nm 1 3 4")
    assert (m(0, 1), m(0, 2), m(1, 2)) == (5, 4, INF)


def test_parse_comments_names_and_inf():
    text = "# header\nrank 3  # three\nnames a b c\n\nm 2 1 3\nm 1 3 inf\nm 1 2 3\n"
    m = parse_coxeter_file(text)
    assert m.names == ("a", "b", "c")
    assert m(0, 1) == 3 and m(0, 2) == INF and m(1, 2) == INF


@pytest.mark.parametrize("text, line", [
    ("m 1 2 3", 1),
    ("rank 2\nm 1 2 1", 2),
    ("rank 2\nm 1 3 4", 2),
    ("rank 2\nm 1 2 4\nm 2 1 6", 3),
    ("rank 2\nnames a", 2),
    ("rank 2\nm 1 1 3", 2),
    ("rank 2\nm 1 2 x", 2),
    ("rank 2\nq 1 2", 2),
    ("rank 0", 1),
    ("", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(CoxeterParseError) as err:
        parse_coxeter_file(text)
    assert err.value.line == line


def test_parse_error_column():
    with pytest.raises(CoxeterParseError) as err:
        parse_coxeter_file("rank 2\nm 1 2 1")
    assert err.value.column == 7


def test_duplicate_equal_lines_accepted():
    assert parse_coxeter_file("rank 2\nm 1 2 4\nm 2 1 4")(0, 1) == 4


def test_invalid_matrices_rejected():
    with pytest.raises(ValueError):
        CoxeterMatrix(((1, 3), (4, 1)))
    with pytest.raises(ValueError):
        CoxeterMatrix(((2, 3), (3, 1)))
    with pytest.raises(ValueError):
        CoxeterMatrix(((1, 1), (1, 1)))


def test_serialize():
    assert serialize(CoxeterMatrix.from_pairs(2, {(0, 1): 4})) == "rank 2\nm 1 2 4"
    assert serialize(CoxeterMatrix.from_pairs(3, {})) == "rank 3"


@pytest.mark.parametrize("name", sorted(corpus.ALL))
def test_round_trip_corpus(name):
    m = corpus.ALL[name]
    assert parse_coxeter_file(serialize(m)) == m


@given(coxeter_matrices())
def test_round_trip_property(m):
    assert parse_coxeter_file(serialize(m)) == m


def test_round_trip_names():
    m = CoxeterMatrix.from_pairs(2, {(0, 1): 3}, names=("x", "y"))
    assert parse_coxeter_file(serialize(m)) == m


def test_presets():
    assert preset("A(2)")(0, 1) == 3
    assert preset("I2(6)")(0, 1) == 6
    f4 = preset("F4")
    assert [f4(i, i + 1) for i in range(3)] == [3, 4, 3]
    assert f4(0, 2) == 2 and f4(0, 3) == 2
    assert preset("B3")(1, 2) == 4 and preset("B3")(0, 1) == 3
    d4 = preset("D4")
    assert sorted(d4(1, j) for j in (0, 2, 3)) == [3, 3, 3]
    e6 = preset("E6")
    assert e6(0, 2) == 3 and e6(1, 3) == 3 and e6(2, 3) == 3 and e6(1, 2) == 2


@pytest.mark.parametrize("name", ["X3", "A0", "B1", "D3", "E5", "F3", "H2", "I2(2)", "E9"])
def test_bad_presets(name):
    with pytest.raises(ValueError):
        preset(name)


def test_direct_sum():
    a1 = preset("A1")
    assert direct_sum(a1, a1)(0, 1) == 2
    s = direct_sum(a1, preset("A2"))
    assert (s.rank, s(0, 1), s(0, 2), s(1, 2)) == (3, 2, 2, 3)


def test_direct_sum_associative_up_to_relabeling():
    a, b, c = preset("A2"), preset("B2"), preset("I2(5)")
    left = direct_sum(direct_sum(a, b), c)
    right = direct_sum(a, direct_sum(b, c))
    assert left == right
    assert diagram_isomorphic(direct_sum(c, a, b), left) is not None


def test_induced_submatrix():
    assert induced_submatrix(preset("F4"), [0, 1])(0, 1) == 3
    assert induced_submatrix(preset("B3"), [1, 2])(0, 1) == 4
    assert induced_submatrix(preset("F4"), [2]).rank == 1


@given(coxeter_matrices())
def test_induced_full_is_identity(m):
    assert induced_submatrix(m, range(m.rank)) == m


def test_diagram_isomorphic_examples():
    a1a2 = direct_sum(preset("A1"), preset("A2"))
    assert diagram_isomorphic(preset("I2(6)"), a1a2) is None
    relabeled = a1a2.relabel((2, 0, 1))
    psi = diagram_isomorphic(a1a2, relabeled)
    assert psi is not None
    assert diagram_isomorphic(preset("I2(4)"), preset("I2(5)")) is None


def test_diagram_isomorphic_is_deterministic():
    m = corpus.ALL["right_angled_pentagon"]
    assert diagram_isomorphic(m, m) == diagram_isomorphic(m, m) == (0, 1, 2, 3, 4)


def _preserves(m1, m2, psi):
    return all(m1(s, t) == m2(psi[s], psi[t]) for s in range(m1.rank) for t in range(m1.rank))


@given(coxeter_matrices(), coxeter_matrices(min_rank=5, max_rank=5))
@settings(max_examples=60)
def test_isomorphism_equivalence_laws(m, other):
    perm = list(range(m.rank))[::-1]
    m2 = m.relabel(perm)
    assert _preserves(m, m, diagram_isomorphic(m, m))
    psi = diagram_isomorphic(m, m2)
    assert psi is not None and _preserves(m, m2, psi)
    back = diagram_isomorphic(m2, m)
    assert back is not None and _preserves(m2, m, back)
    # symmetry on arbitrary pairs
    assert (diagram_isomorphic(m, other) is None) == (diagram_isomorphic(other, m) is None)
    # transitivity through a second relabeling
    m3 = m2.relabel([(i + 1) % m.rank for i in range(m.rank)])
    assert diagram_isomorphic(m, m3) is not None


def test_isomorphism_matches_brute_force_on_small_ranks():
    import itertools
    from conftest import all_matrices
    mats = list(all_matrices(3, (2, 3, INF)))
    for a in mats[::3]:
        for b in mats:
            brute = any(_preserves(a, b, p) for p in itertools.permutations(range(3)))
            psi = diagram_isomorphic(a, b)
            assert brute == (psi is not None)
            if psi is not None:
                assert _preserves(a, b, psi)
