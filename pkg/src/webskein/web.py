"""Trivalent webs: data model, text format, connectivity, and skein-site surgery.

A web is an abstract trivalent multigraph together with a count of vertexless
circle components.  Edges may be parallel or self-loops.  An edge endpoint of
``None`` is a *stub*: a dangling half-edge, which only appears in the host of a
:class:`SkeinSite`.
"""

from __future__ import annotations

import enum
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "Edge",
    "Web",
    "SkeinSite",
    "Picture",
    "StubLabel",
    "WebError",
    "WebFormatError",
    "TrivalenceError",
    "DuplicateIdError",
    "parse_web",
    "parse_site",
    "format_web",
    "format_site",
    "components",
    "find_bridges",
    "has_bridge",
    "self_loops",
    "disjoint_union",
    "excise_edge_site",
    "apply_picture",
    "is_isomorphic",
    "id_key",
]

HalfEdge = tuple  # (edge id, end index 0|1)


class WebError(ValueError):
    """Base class for invalid webs and sites."""


class WebFormatError(WebError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class TrivalenceError(WebError):
    def __init__(self, vertex: str, degree: int):
        super().__init__(f"vertex {vertex!r} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class DuplicateIdError(WebError):
    def __init__(self, kind: str, ident: str):
        super().__init__(f"duplicate {kind} id {ident!r}")
        self.kind = kind
        self.ident = ident


def id_key(ident: str) -> tuple:
    """Natural sort key, so that ``e2`` sorts before ``e10``."""
    parts = re.split(r"(\d+)", ident)
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p != "")


@dataclass(frozen=True)
class Edge:
    id: str
    u: str | None
    v: str | None

    @property
    def ends(self) -> tuple[str | None, str | None]:
        return (self.u, self.v)

    @property
    def is_self_loop(self) -> bool:
        return self.u is not None and self.u == self.v


@dataclass(frozen=True)
class Web:
    vertices: frozenset[str]
    edges: tuple[Edge, ...]
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.free_loops < 0:
            raise WebError(f"free_loops must be nonnegative, got {self.free_loops}")
        seen: set[str] = set()
        degree: dict[str, int] = {v: 0 for v in self.vertices}
        for e in self.edges:
            if e.id in seen:
                raise DuplicateIdError("edge", e.id)
            seen.add(e.id)
            for end in e.ends:
                if end is None:
                    continue
                if end not in degree:
                    raise WebError(f"edge {e.id!r} references unknown vertex {end!r}")
                degree[end] += 1
        for v in sorted(degree, key=id_key):
            if degree[v] != 3:
                raise TrivalenceError(v, degree[v])

    @property
    def stubs(self) -> tuple[HalfEdge, ...]:
        return tuple(
            (e.id, i) for e in self.edges for i, end in enumerate(e.ends) if end is None
        )

    @property
    def is_closed(self) -> bool:
        return not self.stubs

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def incidence(self) -> dict[str, list[HalfEdge]]:
        """Half-edges at each vertex, ordered by ascending edge id then end index."""
        inc: dict[str, list[HalfEdge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            for i, end in enumerate(e.ends):
                if end is not None:
                    inc[end].append((e.id, i))
        for v in inc:
            inc[v].sort(key=lambda h: (id_key(h[0]), h[1]))
        return inc

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: id_key(e.id))

    def __str__(self) -> str:
        return format_web(self)


class StubLabel(str, enum.Enum):
    NW = "NW"
    NE = "NE"
    SW = "SW"
    SE = "SE"


LABELS = (StubLabel.NW, StubLabel.NE, StubLabel.SW, StubLabel.SE)


class Picture(str, enum.Enum):
    """Local pictures glued into a skein site.

    ``K2abstract`` is the crossing smoothing treated as a bare reconnection; the
    crossing sign is not represented.
    """

    K0 = "K0"
    K1 = "K1"
    K2abstract = "K2abstract"
    L0 = "L0"
    L1 = "L1"


@dataclass(frozen=True)
class SkeinSite:
    host: Web
    stub_labels: Mapping[StubLabel, HalfEdge]
    # names used for the bar edge and its two vertices when an L picture is glued in
    bar: tuple[str, str, str] = ("bar", "bar_u", "bar_v")

    def __post_init__(self):
        labels = {StubLabel(k): tuple(v) for k, v in dict(self.stub_labels).items()}
        object.__setattr__(self, "stub_labels", labels)
        stubs = set(self.host.stubs)
        if len(stubs) != 4:
            raise WebError(f"a skein site needs exactly 4 stubs, host has {len(stubs)}")
        if set(labels) != set(LABELS) or set(labels.values()) != stubs:
            raise WebError("stub labels must be a bijection {NW, NE, SW, SE} -> stubs")
        edge_ids = {e.id for e in self.host.edges}
        bar_edge, bu, bv = self.bar
        if bar_edge in edge_ids or bu in self.host.vertices or bv in self.host.vertices or bu == bv:
            raise WebError(f"bar names {self.bar!r} collide with host ids")

    def swapped(self) -> "SkeinSite":
        """The same site with the NW and NE labels exchanged."""
        labels = dict(self.stub_labels)
        labels[StubLabel.NW], labels[StubLabel.NE] = labels[StubLabel.NE], labels[StubLabel.NW]
        return SkeinSite(self.host, labels, self.bar)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def _tokens(line: str) -> list[tuple[str, int]]:
    line = line.split("#", 1)[0]
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(line)]


def _parse(text: str, allow_stubs: bool):
    vertices: list[str] = []
    vertex_set: set[str] = set()
    edges: list[Edge] = []
    edge_ids: set[str] = set()
    loops = 0
    stub_lines: list[tuple[str, str, int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        head, col = toks[0]
        args = toks[1:]
        if head == "v":
            if len(args) != 1:
                raise WebFormatError("expected 'v <id>'", lineno, col)
            vid, vcol = args[0]
            if vid == "-":
                raise WebFormatError("'-' is not a valid vertex id", lineno, vcol)
            if vid in vertex_set:
                raise DuplicateIdError("vertex", vid)
            vertices.append(vid)
            vertex_set.add(vid)
        elif head == "e":
            if len(args) != 3:
                raise WebFormatError("expected 'e <id> <vid|-> <vid|->'", lineno, col)
            (eid, _), (a, acol), (b, bcol) = args
            if eid in edge_ids:
                raise DuplicateIdError("edge", eid)
            ends = []
            for tok, tcol in ((a, acol), (b, bcol)):
                if tok == "-":
                    if not allow_stubs:
                        raise WebFormatError("stub end '-' only allowed in site files", lineno, tcol)
                    ends.append(None)
                else:
                    ends.append(tok)
            edges.append(Edge(eid, ends[0], ends[1]))
            edge_ids.add(eid)
        elif head == "loop":
            if len(args) != 1:
                raise WebFormatError("expected 'loop <count>'", lineno, col)
            tok, tcol = args[0]
            if not tok.isdigit():
                raise WebFormatError(f"loop count must be a nonnegative integer, got {tok!r}", lineno, tcol)
            loops += int(tok)
        elif head == "stub" and allow_stubs:
            if len(args) != 3:
                raise WebFormatError("expected 'stub <NW|NE|SW|SE> <edge id> <0|1>'", lineno, col)
            (label, lcol), (eid, _), (end, ecol) = args
            if label not in StubLabel.__members__:
                raise WebFormatError(f"unknown stub label {label!r}", lineno, lcol)
            if end not in ("0", "1"):
                raise WebFormatError("stub end index must be 0 or 1", lineno, ecol)
            stub_lines.append((label, eid, int(end), lineno, lcol))
        else:
            raise WebFormatError(f"unknown directive {head!r}", lineno, col)
    for e in edges:
        for end in e.ends:
            if end is not None and end not in vertex_set:
                raise WebError(f"edge {e.id!r} references undeclared vertex {end!r}")
    web = Web(frozenset(vertices), tuple(edges), loops)
    return web, stub_lines


def parse_web(text: str) -> Web:
    """Parse a closed web from the line-oriented text format.

    Directives are ``v <id>``, ``e <id> <vid> <vid>``, ``loop <count>``; ``#``
    starts a comment.
    """
    web, _ = _parse(text, allow_stubs=False)
    return web


def parse_site(text: str) -> SkeinSite:
    """Parse a site file: a web with exactly four ``-`` stub ends.

    Labels come from optional ``stub <label> <edge id> <end>`` lines; otherwise
    stubs are labeled NW, NE, SW, SE in order of appearance.
    """
    web, stub_lines = _parse(text, allow_stubs=True)
    if stub_lines:
        labels = {}
        for label, eid, end, lineno, col in stub_lines:
            if label in labels:
                raise WebFormatError(f"stub label {label} given twice", lineno, col)
            labels[label] = (eid, end)
    else:
        labels = dict(zip((l.value for l in LABELS), web.stubs))
    return SkeinSite(web, labels)


def format_web(web: Web) -> str:
    lines = [f"v {v}" for v in sorted(web.vertices, key=id_key)]
    for e in web.sorted_edges():
        lines.append(f"e {e.id} {e.u if e.u is not None else '-'} {e.v if e.v is not None else '-'}")
    if web.free_loops:
        lines.append(f"loop {web.free_loops}")
    return "\n".join(lines) + "\n"


def format_site(site: SkeinSite) -> str:
    text = format_web(site.host)
    for label in LABELS:
        eid, end = site.stub_labels[label]
        text += f"stub {label.value} {eid} {end}\n"
    return text


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def _require_closed(web: Web) -> None:
    if not web.is_closed:
        raise WebError("operation requires a closed web (no stubs)")


def components(web: Web) -> list[Web]:
    """Connected components; each free loop is its own component."""
    _require_closed(web)
    parent = {v: v for v in web.vertices}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in web.edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[str, set[str]] = defaultdict(set)
    for v in web.vertices:
        groups[find(v)].add(v)
    result = []
    for members in sorted(groups.values(), key=lambda g: min(id_key(v) for v in g)):
        es = tuple(e for e in web.edges if e.u in members)
        result.append(Web(frozenset(members), es, 0))
    result.extend(Web(frozenset(), (), 1) for _ in range(web.free_loops))
    return result


def self_loops(web: Web) -> list[str]:
    return [e.id for e in web.sorted_edges() if e.is_self_loop]


def find_bridges(web: Web) -> list[str]:
    """Ids of non-loop edges whose removal disconnects their component.

    Iterative low-link DFS; parallel edges are told apart by edge id, so a
    doubled edge is never a bridge.
    """
    _require_closed(web)
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in web.vertices}
    for e in web.edges:
        if e.is_self_loop:
            continue
        adj[e.u].append((e.v, e.id))
        adj[e.v].append((e.u, e.id))
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    bridges: list[str] = []
    counter = 0
    for root in sorted(web.vertices, key=id_key):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, eid in it:
                if eid == via:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.append(via)
    return sorted(bridges, key=id_key)


def has_bridge(web: Web) -> bool:
    return bool(find_bridges(web))


def disjoint_union(*webs: Web, prefixes: Iterable[str] | None = None) -> Web:
    """Disjoint union, renaming ids with per-operand prefixes (``a0.``, ``a1.``, ...)."""
    prefixes = list(prefixes) if prefixes is not None else [f"a{i}." for i in range(len(webs))]
    vertices: list[str] = []
    edges: list[Edge] = []
    loops = 0
    for web, p in zip(webs, prefixes):
        vertices.extend(p + v for v in web.vertices)
        for e in web.edges:
            edges.append(Edge(p + e.id,
                              None if e.u is None else p + e.u,
                              None if e.v is None else p + e.v))
        loops += web.free_loops
    return Web(frozenset(vertices), tuple(edges), loops)


# ---------------------------------------------------------------------------
# skein-site surgery
# ---------------------------------------------------------------------------

def _fresh(base: str, taken: set[str]) -> str:
    name, k = base, 1
    while name in taken:
        name = f"{base}{k}"
        k += 1
    return name


def excise_edge_site(web: Web, edge_id: str) -> SkeinSite:
    """Remove edge ``edge_id`` and its two endpoints, exposing four labeled stubs.

    The half-edges formerly at ``u`` (the edge's first endpoint) become NW, NE
    and those at ``v`` become SW, SE, each pair in ascending edge id order.
    """
    e = web.edge(edge_id)
    if e.u is None or e.v is None:
        raise WebError(f"edge {edge_id!r} has a stub endpoint")
    if e.is_self_loop:
        raise WebError(f"edge {edge_id!r} is a self-loop")
    inc = web.incidence()
    at_u = [h for h in inc[e.u] if h[0] != edge_id]
    at_v = [h for h in inc[e.v] if h[0] != edge_id]
    gone = {e.u, e.v}
    edges = []
    for f in web.edges:
        if f.id == edge_id:
            continue
        edges.append(Edge(f.id,
                          None if f.u in gone else f.u,
                          None if f.v in gone else f.v))
    host = Web(web.vertices - gone, tuple(edges), web.free_loops)
    labels = {
        StubLabel.NW: at_u[0], StubLabel.NE: at_u[1],
        StubLabel.SW: at_v[0], StubLabel.SE: at_v[1],
    }
    return SkeinSite(host, labels, bar=(edge_id, e.u, e.v))


_JOINS = {
    Picture.K0: ((StubLabel.NW, StubLabel.NE), (StubLabel.SW, StubLabel.SE)),
    Picture.K1: ((StubLabel.NW, StubLabel.SW), (StubLabel.NE, StubLabel.SE)),
    Picture.K2abstract: ((StubLabel.NW, StubLabel.SE), (StubLabel.NE, StubLabel.SW)),
}

_BARS = {
    Picture.L0: ((StubLabel.NW, StubLabel.NE), (StubLabel.SW, StubLabel.SE)),
    Picture.L1: ((StubLabel.NW, StubLabel.SW), (StubLabel.NE, StubLabel.SE)),
}


def apply_picture(site: SkeinSite, picture: Picture | str) -> Web:
    """Glue a local picture into the site and return the resulting closed web."""
    picture = Picture(picture)
    host = site.host
    lab = site.stub_labels
    if picture in _BARS:
        bar_edge, bu, bv = site.bar
        attach: dict[HalfEdge, str] = {}
        for vertex, pair in zip((bu, bv), _BARS[picture]):
            for label in pair:
                attach[lab[label]] = vertex
        edges = []
        for e in host.edges:
            ends = [attach.get((e.id, i), end) for i, end in enumerate(e.ends)]
            edges.append(Edge(e.id, ends[0], ends[1]))
        edges.append(Edge(bar_edge, bu, bv))
        return Web(host.vertices | {bu, bv}, tuple(edges), host.free_loops)

    partner: dict[HalfEdge, HalfEdge] = {}
    for a, b in _JOINS[picture]:
        partner[lab[a]] = lab[b]
        partner[lab[b]] = lab[a]
    by_id = {e.id: e for e in host.edges}
    visited: set[str] = set()
    new_edges: list[Edge] = []

    def walk(eid: str, enter: int) -> str | None:
        # follow joined edges until a vertex is reached (None: the chain closed up)
        while True:
            visited.add(eid)
            out = 1 - enter
            end = by_id[eid].ends[out]
            if end is not None:
                return end
            eid, enter = partner[(eid, out)]
            if eid in visited:
                return None

    for e in host.sorted_edges():
        if e.id in visited:
            continue
        touched = any(end is None for end in e.ends)
        if not touched:
            new_edges.append(e)
            visited.add(e.id)
            continue
        if e.u is None and e.v is None:
            continue  # interior of a chain; handled from a vertex end or as a cycle
        start = 0 if e.u is not None else 1
        far = walk(e.id, start)
        new_edges.append(Edge(e.id, e.ends[start], far))
    loops = host.free_loops
    for e in host.sorted_edges():
        if e.id not in visited:
            # a chain with no vertex at either end closes up into a circle
            walk(e.id, 0)
            loops += 1
    return Web(host.vertices, tuple(new_edges), loops)


# ---------------------------------------------------------------------------
# isomorphism (desk-scale, for verification)
# ---------------------------------------------------------------------------

def _to_nx(web: Web):
    import networkx as nx

    g = nx.MultiGraph()
    g.add_nodes_from(web.vertices)
    for e in web.edges:
        g.add_edge(e.u, e.v)
    return g


def is_isomorphic(a: Web, b: Web) -> bool:
    """Isomorphism of closed webs as abstract multigraphs plus free-loop count."""
    import networkx as nx

    _require_closed(a)
    _require_closed(b)
    if a.free_loops != b.free_loops or len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return False
    return nx.is_isomorphic(_to_nx(a), _to_nx(b))
