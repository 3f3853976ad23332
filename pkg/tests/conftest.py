import itertools

from hypothesis import strategies as st

from degedit.graph import OPS, DegreeSequence, ExtendedInstance, Graph, Instance


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(1, n + 1), [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def sequences(draw, min_len=0, max_len=6, max_degree=4):
    return DegreeSequence(draw(st.lists(st.integers(0, max_degree), min_size=min_len, max_size=max_len)))


@st.composite
def instances(draw, max_n=5, max_k=2):
    g = draw(graphs(max_n=max_n))
    sigma = draw(sequences(min_len=max(0, g.n - max_k), max_len=g.n))
    ops = draw(st.sets(st.sampled_from(OPS), min_size=1))
    return Instance(g, sigma, frozenset(ops), draw(st.integers(0, max_k)))


@st.composite
def extended_instances(draw, max_n=5, max_k=2):
    g = draw(graphs(max_n=max_n))
    kvd, ked, kea = (draw(st.integers(0, max_k)) for _ in range(3))
    sigma = draw(sequences(min_len=max(0, g.n - kvd), max_len=g.n))
    return ExtendedInstance(g, sigma, kvd, ked, kea)


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
