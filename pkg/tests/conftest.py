import itertools

from hypothesis import strategies as st

from coverreg.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=6, min_edges=0):
    n = draw(st.integers(max(min_n, 2 if min_edges else 0), max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)))) if pairs else []
    return Graph.from_edges(n, chosen)


def subsets(n):
    return range(1 << n)


# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
