import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import cubic_webs
from webskein.corpus import BUILDERS, CORPUS_NAMES, load_corpus, random_cubic_multigraph
from webskein.web import (
    DuplicateIdError, Edge, Picture, SkeinSite, StubLabel, TrivalenceError, Web, WebError,
    WebFormatError, apply_picture, components, disjoint_union, excise_edge_site, find_bridges,
    format_site, format_web, has_bridge, is_isomorphic, parse_site, parse_web, self_loops,
)


def test_parse_theta():
    w = parse_web("v u\nv v\ne e1 u v\ne e2 u v  # parallel\ne e3 u v\n")
    assert w.vertices == {"u", "v"}
    assert [e.id for e in w.sorted_edges()] == ["e1", "e2", "e3"]
    assert w.free_loops == 0 and w.is_closed


def test_parse_free_loops_only():
    w = parse_web("loop 2\n")
    assert not w.vertices and not w.edges and w.free_loops == 2


@pytest.mark.parametrize("text, exc", [
    ("v a\ne x a a\n", TrivalenceError),
    ("v a\nv a\n", DuplicateIdError),
    ("v a\nv b\ne x a b\ne x a b\ne y a b\n", DuplicateIdError),
    ("v a\ne x a zz\n", WebError),
    ("bogus 1\n", WebFormatError),
    ("loop -1\n", WebFormatError),
    ("v a\nv b\ne x a -\n", WebFormatError),
    ("e x\n", WebFormatError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_web(text)


def test_format_error_has_position():
    with pytest.raises(WebFormatError) as info:
        parse_web("v a\n  wat\n")
    assert info.value.line == 2 and info.value.column == 3


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_corpus_round_trip(name):
    w = load_corpus(name)
    assert is_isomorphic(parse_web(format_web(w)), w)
    assert parse_web(format_web(w)) == w
    assert is_isomorphic(w, BUILDERS[name]())


@given(cubic_webs(max_edges=30))
@settings(max_examples=80, deadline=None)
def test_round_trip_random(web):
    assert parse_web(format_web(web)) == web


def test_self_loop_counts_twice():
    w = parse_web("v a\nv b\ne l a a\ne m a b\ne n b b\n")
    assert self_loops(w) == ["l", "n"]
    assert find_bridges(w) == ["m"]


def test_parallel_edges_are_not_bridges():
    assert not has_bridge(load_corpus("theta"))
    assert has_bridge(load_corpus("dumbbell"))


def _nx_graph(web):
    g = nx.MultiGraph()
    g.add_nodes_from(web.vertices)
    for e in web.edges:
        g.add_edge(e.u, e.v, key=e.id)
    return g


def _brute_bridges(web):
    # an edge is a bridge iff deleting it raises the component count
    g = _nx_graph(web)
    base = nx.number_connected_components(g)
    out = []
    for e in web.edges:
        h = g.copy()
        h.remove_edge(e.u, e.v, key=e.id)
        if nx.number_connected_components(h) > base:
            out.append(e.id)
    return sorted(out)


@given(cubic_webs(max_edges=40))
@settings(max_examples=100, deadline=None)
def test_components_and_bridges_match_brute(web):
    assert sorted(find_bridges(web)) == _brute_bridges(web)
    comps = components(web)
    expected = nx.number_connected_components(_nx_graph(web)) + web.free_loops
    assert len(comps) == expected
    assert sum(len(c.edges) for c in comps) == len(web.edges)


def test_disjoint_union_renames():
    t = load_corpus("theta")
    u = disjoint_union(t, t)
    assert len(u.vertices) == 4 and len(components(u)) == 2
    assert is_isomorphic(u, disjoint_union(t, t, prefixes=["x", "y"]))


def test_theta_site_pictures():
    site = excise_edge_site(load_corpus("theta"), "e2")
    assert len(site.host.stubs) == 4
    assert apply_picture(site, Picture.K0) == Web(frozenset(), (), 1)
    assert apply_picture(site, Picture.K1).free_loops == 2
    assert is_isomorphic(apply_picture(site, Picture.L0), load_corpus("theta"))
    assert is_isomorphic(apply_picture(site, Picture.L1), load_corpus("dumbbell"))


def test_dodecahedron_site_host_size():
    site = excise_edge_site(load_corpus("dodecahedron"), "e1")
    assert len(site.host.vertices) == 18
    assert len(site.host.edges) == 29


def test_excise_rejects_self_loop():
    with pytest.raises(WebError):
        excise_edge_site(load_corpus("dumbbell"), "e1")


def test_site_needs_four_distinct_stubs():
    host = excise_edge_site(load_corpus("k4"), "e1").host
    labels = {l: host.stubs[0] for l in StubLabel}
    with pytest.raises(WebError):
        SkeinSite(host, labels)


def test_site_text_round_trip():
    site = excise_edge_site(load_corpus("prism"), "e4")
    back = parse_site(format_site(site))
    assert back.host == site.host
    assert dict(back.stub_labels) == dict(site.stub_labels)


def test_site_file_default_labels():
    site = parse_site("v a\nv b\ne x a b\ne y a -\ne z b -\ne p a -\ne q b -\n")
    assert site.stub_labels[StubLabel.NW] == ("y", 1)
    assert site.stub_labels[StubLabel.SE] == ("q", 1)


def _sites(web):
    return [e.id for e in web.edges if not e.is_self_loop]


@given(cubic_webs(max_edges=24, min_vertices=2), st.data())
@settings(max_examples=80, deadline=None)
def test_l0_restores_the_web(web, data):
    ids = _sites(web)
    if not ids:
        return
    eid = data.draw(st.sampled_from(ids))
    site = excise_edge_site(web, eid)
    assert is_isomorphic(apply_picture(site, Picture.L0), web)
    for p in Picture:
        w = apply_picture(site, p)
        assert w.is_closed
        # every picture keeps trivalence; K pictures lose the two site vertices
        assert len(w.vertices) == len(web.vertices) - (2 if p.name.startswith("K") else 0)


def test_swapped_exchanges_nw_ne():
    site = excise_edge_site(load_corpus("k4"), "e1")
    sw = site.swapped()
    assert sw.stub_labels[StubLabel.NW] == site.stub_labels[StubLabel.NE]
    assert sw.swapped().stub_labels == site.stub_labels


def test_random_cubic_rejects_odd():
    with pytest.raises(ValueError):
        random_cubic_multigraph(3, random.Random(0))


def test_edge_properties():
    e = Edge("x", "a", "a")
    assert e.is_self_loop and e.ends == ("a", "a")
