"""Exact Tait-coloring counts of webs and the Tutte skein relation.

A Tait coloring assigns one of three colors to every edge so that the three
half-edges at each vertex carry distinct colors; every free loop contributes a
factor of 3.  Counts are plain Python integers (arbitrary precision).
"""

from __future__ import annotations

from itertools import permutations

from .web import Picture, Web, apply_picture, components, excise_edge_site, id_key

__all__ = [
    "DEFAULT_STATE_CAP",
    "BRUTE_EDGE_LIMIT",
    "ResourceLimitError",
    "tait_brute",
    "tait_count",
    "elimination_order",
    "tutte_terms",
    "verify_tutte",
    "local_tutte_residual",
]

DEFAULT_STATE_CAP = 3**14
BRUTE_EDGE_LIMIT = 18
COLORS = (1, 2, 3)


class ResourceLimitError(RuntimeError):
    """A size guard was exceeded; no count is produced."""


def _require_closed(web: Web) -> None:
    if not web.is_closed:
        raise ValueError("Tait counts are defined for closed webs only")


def tait_brute(web: Web) -> int:
    """Count Tait colorings by enumerating edge colorings edge by edge.

    A partial assignment is abandoned as soon as some vertex has all three
    half-edges colored and two of them agree, so only valid colorings reach
    the leaves.  Guarded to webs with at most ``BRUTE_EDGE_LIMIT`` edges.
    """
    _require_closed(web)
    edges = web.sorted_edges()
    if len(edges) > BRUTE_EDGE_LIMIT:
        raise ResourceLimitError(
            f"brute force limited to {BRUTE_EDGE_LIMIT} edges, web has {len(edges)}"
        )
    inc = web.incidence()
    pos = {e.id: i for i, e in enumerate(edges)}
    # vertex checks become possible once the last of its edges is colored
    checks: list[list[tuple[int, int, int]]] = [[] for _ in edges]
    for v, halves in inc.items():
        idx = [pos[eid] for eid, _ in halves]
        checks[max(idx)].append(tuple(idx))

    coloring = [0] * len(edges)

    def extend(k: int) -> int:
        if k == len(edges):
            return 1
        total = 0
        for c in COLORS:
            coloring[k] = c
            if all(
                coloring[a] != coloring[b] and coloring[a] != coloring[d] and coloring[b] != coloring[d]
                for a, b, d in checks[k]
            ):
                total += extend(k + 1)
        return total

    return extend(0) * 3**web.free_loops


def elimination_order(web: Web, max_starts: int = 64) -> tuple[list[str], int]:
    """Greedy vertex order keeping the cut (frontier) small.

    From each candidate start vertex, repeatedly take the unprocessed vertex
    whose addition grows the frontier least (ties by id).  Returns the best order
    found and its maximum frontier width.
    """
    verts = sorted(web.vertices, key=id_key)
    if not verts:
        return [], 0
    nbrs: dict[str, list[str]] = {v: [] for v in verts}
    for e in web.edges:
        if e.is_self_loop:
            continue
        nbrs[e.u].append(e.v)
        nbrs[e.v].append(e.u)
    best: tuple[list[str], int] | None = None
    for start in verts[:max_starts]:
        done = {start}
        order = [start]
        # to_done[w]: number of edges from w into the processed set
        to_done = {v: 0 for v in verts}
        for w in nbrs[start]:
            to_done[w] += 1
        width = len(nbrs[start])
        frontier = width
        while len(order) < len(verts):
            cand = min(
                (v for v in verts if v not in done),
                key=lambda v: (len(nbrs[v]) - 2 * to_done[v], -to_done[v], id_key(v)),
            )
            frontier += len(nbrs[cand]) - 2 * to_done[cand]
            done.add(cand)
            order.append(cand)
            for w in nbrs[cand]:
                to_done[w] += 1
            width = max(width, frontier)
        if best is None or width < best[1]:
            best = (order, width)
    return best


def _count_connected(web: Web, state_cap: int) -> int:
    if any(e.is_self_loop for e in web.edges):
        return 0
    order, _ = elimination_order(web)
    rank = {v: i for i, v in enumerate(order)}
    inc = web.incidence()
    by_id = {e.id: e for e in web.edges}

    frontier: list[str] = []
    states: dict[tuple[int, ...], int] = {(): 1}
    for v in order:
        closing, opening = [], []
        for eid, end in inc[v]:
            e = by_id[eid]
            other = e.ends[1 - end]
            (closing if rank[other] < rank[v] else opening).append(eid)
        keep = [eid for eid in frontier if eid not in closing]
        new_frontier = keep + opening
        keep_pos = [frontier.index(eid) for eid in keep]
        close_pos = [frontier.index(eid) for eid in closing]
        nxt: dict[tuple[int, ...], int] = {}
        for key, count in states.items():
            used = [key[i] for i in close_pos]
            if len(set(used)) != len(used):
                continue
            free = [c for c in COLORS if c not in used]
            base = tuple(key[i] for i in keep_pos)
            for assign in permutations(free, len(opening)):
                k = base + assign
                nxt[k] = nxt.get(k, 0) + count
        if len(nxt) > state_cap:
            raise ResourceLimitError(
                f"DP state count {len(nxt)} exceeds cap {state_cap} "
                f"(frontier width {len(new_frontier)})"
            )
        frontier, states = new_frontier, nxt
    return states.get((), 0)


def tait_count(web: Web, state_cap: int = DEFAULT_STATE_CAP) -> int:
    """Exact Tait count by frontier dynamic programming, component by component.

    The DP state is the coloring of the edges cut by the current prefix of the
    elimination order.  Exceeding ``state_cap`` raises
    :class:`ResourceLimitError`; the result is never approximate.
    """
    _require_closed(web)
    total = 1
    for comp in components(web):
        if not comp.vertices:
            total *= 3**comp.free_loops
            continue
        total *= _count_connected(comp, state_cap)
        if total == 0:
            return 0
    return total


def tutte_terms(web: Web, edge_id: str, *, swap: bool = False, brute: bool = False,
                state_cap: int = DEFAULT_STATE_CAP) -> dict[str, int]:
    """Tait counts of the K0, K1, L0, L1 webs at the site around ``edge_id``."""
    site = excise_edge_site(web, edge_id)
    if swap:
        site = site.swapped()
    count = tait_brute if brute else (lambda w: tait_count(w, state_cap))
    return {p.value: count(apply_picture(site, p)) for p in (Picture.K0, Picture.K1, Picture.L0, Picture.L1)}


def verify_tutte(web: Web, edge_id: str, *, swap: bool = False,
                 state_cap: int = DEFAULT_STATE_CAP) -> int:
    """Residual tau(K0) - tau(K1) + tau(L0) - tau(L1); zero for every web."""
    if not web.is_closed:
        raise ValueError("verify_tutte requires a closed web")
    t = tutte_terms(web, edge_id, swap=swap, state_cap=state_cap)
    return t["K0"] - t["K1"] + t["L0"] - t["L1"]


def local_tutte_residual(a: int, b: int, c: int, d: int) -> int:
    """Contribution of one boundary coloring (NW, NE, SW, SE) to the residual.

    Each picture's weight is the number of ways to color its interior given the
    boundary colors; the alternating sum vanishes for every boundary coloring,
    which is why the relation holds for all abstract webs.
    """
    k0 = int(a == b and c == d)
    k1 = int(a == c and b == d)
    l0 = int(a != b and c != d and {a, b} == {c, d})
    l1 = int(a != c and b != d and {a, c} == {b, d})
    return k0 - k1 + l0 - l1
