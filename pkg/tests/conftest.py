import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from qmain.graph import from_edges  # noqa: E402

# sympy/networkx oracles have slow first calls
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """Random connected simple graph: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [(u, v) for v in range(n) for u in range(v) if (u, v) not in edges]
    if others:
        extra = draw(st.lists(st.sampled_from(others), unique=True, max_size=len(others)))
        edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return from_edges(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def any_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, chosen)


@pytest.fixture(scope="session")
def trees_by_n():
    from qmain.enumeration import graphs_of

    return {n: graphs_of("trees", n) for n in range(1, 13)}


@pytest.fixture(scope="session")
def unicyclic_by_n():
    from qmain.enumeration import graphs_of

    return {n: graphs_of("unicyclic", n) for n in range(3, 12)}
