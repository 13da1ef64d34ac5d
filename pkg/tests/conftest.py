import itertools

from hypothesis import strategies as st

from coxrig.matrix import INF, CoxeterMatrix

LABELS = [2, 3, 4, 5, 6, 8, INF]


@st.composite
def coxeter_matrices(draw, min_rank=1, max_rank=5, labels=LABELS):
    n = draw(st.integers(min_rank, max_rank))
    pairs = {(i, j): draw(st.sampled_from(labels))
             for i, j in itertools.combinations(range(n), 2)}
    return CoxeterMatrix.from_pairs(n, pairs)


def all_matrices(rank, labels=(2, 3, 4, 5, 6, INF)):
    pairs = list(itertools.combinations(range(rank), 2))
    for values in itertools.product(labels, repeat=len(pairs)):
        yield CoxeterMatrix.from_pairs(rank, dict(zip(pairs, values)))


# one line per acceptance criterion, printed after the run
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
