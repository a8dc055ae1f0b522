import random

import pytest
from hypothesis import strategies as st

from webskein.corpus import random_cubic_multigraph


@st.composite
def cubic_webs(draw, max_edges=15, min_vertices=0):
    """Random cubic multigraphs (configuration model) with at most ``max_edges`` edges."""
    max_v = (2 * max_edges) // 3
    max_v -= max_v % 2
    n = draw(st.integers(min_value=min_vertices // 2, max_value=max_v // 2)) * 2
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    loops = draw(st.integers(min_value=0, max_value=2))
    return random_cubic_multigraph(n, random.Random(seed), free_loops=loops)


@pytest.fixture
def rng():
    return random.Random(20240101)
