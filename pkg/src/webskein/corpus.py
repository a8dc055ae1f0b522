"""Named webs, the shipped corpus files, and random cubic multigraphs."""

from __future__ import annotations

import random
from importlib import resources
from pathlib import Path

from .web import Edge, Web, parse_web

CORPUS_NAMES = ("circle", "theta", "dumbbell", "k4", "prism", "dodecahedron")


def circle(n: int = 1) -> Web:
    return Web(frozenset(), (), n)


def _from_pairs(pairs, prefix: str = "v") -> Web:
    edges = tuple(Edge(f"e{i + 1}", f"{prefix}{a}", f"{prefix}{b}") for i, (a, b) in enumerate(pairs))
    verts = frozenset(x for e in edges for x in (e.u, e.v))
    return Web(verts, edges, 0)


def theta() -> Web:
    return Web(frozenset({"u", "v"}), (Edge("e1", "u", "v"), Edge("e2", "u", "v"), Edge("e3", "u", "v")))


def dumbbell() -> Web:
    return Web(
        frozenset({"u", "v"}),
        (Edge("e1", "u", "u"), Edge("e2", "u", "v"), Edge("e3", "v", "v")),
    )


def k4() -> Web:
    return _from_pairs([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def prism() -> Web:
    # two triangles joined by three rungs
    return _from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


def dodecahedron() -> Web:
    """The dodecahedral graph as the generalized Petersen graph GP(10, 2)."""
    pairs = []
    for i in range(10):
        pairs.append((i, (i + 1) % 10))
    for i in range(10):
        pairs.append((i, 10 + i))
    for i in range(10):
        pairs.append((10 + i, 10 + (i + 2) % 10))
    return _from_pairs(pairs)


BUILDERS = {
    "circle": circle,
    "theta": theta,
    "dumbbell": dumbbell,
    "k4": k4,
    "prism": prism,
    "dodecahedron": dodecahedron,
}


def data_path(name: str):
    return resources.files("webskein").joinpath("data", name)


def load_corpus(name: str) -> Web:
    """Load a shipped corpus web by name (``theta`` or ``theta.web``)."""
    stem = name[:-4] if name.endswith(".web") else name
    if stem not in CORPUS_NAMES:
        raise KeyError(f"no corpus web named {name!r}")
    return parse_web(data_path(f"{stem}.web").read_text(encoding="utf-8"))


def read_web_file(path: str) -> Web:
    """Read a web from ``path``; bare corpus names resolve to the shipped files."""
    p = Path(path)
    if p.exists():
        return parse_web(p.read_text(encoding="utf-8"))
    return load_corpus(p.name)


def random_cubic_multigraph(n_vertices: int, rng: random.Random, free_loops: int = 0) -> Web:
    """Configuration-model cubic multigraph; self-loops and parallel edges allowed."""
    if n_vertices % 2:
        raise ValueError("a cubic graph needs an even number of vertices")
    points = [v for v in range(n_vertices) for _ in range(3)]
    rng.shuffle(points)
    pairs = [(points[i], points[i + 1]) for i in range(0, len(points), 2)]
    web = _from_pairs(pairs) if pairs else Web(frozenset(), (), 0)
    return Web(web.vertices, web.edges, free_loops)
