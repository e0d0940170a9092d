import pytest
from hypothesis import given, settings, strategies as st

from mcgraphs import (
    CirculantGraph, Graph, Routing, build_mc, edge_loads, figure3_fixture, loads, pi_bounds,
    rho_closed, translation_invariant_loads, translation_invariant_routing, validate_routing,
    vertex_loads,
)
from mcgraphs.errors import DomainError, RoutingError, SizeLimitError
from mcgraphs.routing import FIGURE3_R1, FIGURE3_R2, LoadProfile, routing_from_paths

from oracles import count_inner


class TestFigure3:
    def test_graph(self):
        g, r1, r2 = figure3_fixture()
        assert g.n == 6 and len(g.edges) == 8
        used = {tuple(sorted(e)) for p in FIGURE3_R1 + FIGURE3_R2 for e in zip(p, p[1:])}
        assert used == set(g.edges)
        assert r1[(5, 3)] == (5, 6, 3)
        assert r2[(3, 5)] == (3, 4, 1, 2, 5)
        assert len(r1) == len(r2) == 30

    def test_validation(self):
        g, r1, r2 = figure3_fixture()
        rep1, rep2 = validate_routing(g, r1), validate_routing(g, r2)
        assert rep1.valid and rep1.minimal
        assert rep2.valid and not rep2.minimal
        assert r1.minimal is True and r2.minimal is False

    def test_vertex_loads(self):
        g, r1, r2 = figure3_fixture()
        p1, p2 = vertex_loads(g, r1), vertex_loads(g, r2)
        assert p1.xi_of_R == 4 and p1.vertex_load[3] == 4
        assert p2.xi_of_R == 9 and p2.vertex_load[3] == 9
        # recount straight from the path tuples
        for prof, paths in ((p1, FIGURE3_R1), (p2, FIGURE3_R2)):
            expected = count_inner(paths)
            assert prof.vertex_load == {v: expected.get(v, 0) for v in range(1, 7)}

    def test_vertex_one_load_is_bounded(self):
        # neighbours of 1 are 2, 3, 4; only 2 and 3 are non-adjacent, so a
        # minimal routing sends at most two paths through 1
        g, r1, _ = figure3_fixture()
        nb = g.neighbors(1)
        through = sum(1 for a in nb for b in nb if a != b and not g.adjacent(a, b))
        assert through == 2
        assert vertex_loads(g, r1).vertex_load[1] <= through

    def test_edge_loads(self):
        g, r1, _ = figure3_fixture()
        prof = edge_loads(g, r1)
        two_hop = sum(1 for p in FIGURE3_R1 if len(p) == 3)
        assert sum(prof.edge_load.values()) == 30 + two_hop == 44

    def test_missing_pair(self):
        g, r1, _ = figure3_fixture()
        broken = Routing({k: v for k, v in r1.paths.items() if k != (1, 5)})
        rep = validate_routing(g, broken)
        assert not rep.valid
        assert rep.violations == ["missing path for (1, 5)"]
        with pytest.raises(RoutingError):
            vertex_loads(g, broken)

    @pytest.mark.parametrize("pair,path,fragment", [
        ((1, 5), (1, 5), "non-edge"),
        ((1, 5), (1, 2, 1, 2, 5), "repeats"),
        ((1, 5), (2, 5), "does not run"),
    ])
    def test_bad_paths(self, pair, path, fragment):
        g, r1, _ = figure3_fixture()
        paths = dict(r1.paths)
        paths[pair] = path
        rep = validate_routing(g, Routing(paths))
        assert not rep.valid and fragment in rep.violations[0]

    def test_duplicate_pair(self):
        with pytest.raises(DomainError):
            routing_from_paths([(1, 2), (1, 3, 2)])


class TestCirculantRouting:
    def test_k4_direct_routing(self):
        g = build_mc(2, 2)
        G = Graph.from_circulant(g)
        r = Routing({(x, y): (x, y) for x in range(4) for y in range(4) if x != y})
        prof = loads(G, r)
        assert set(prof.edge_load.values()) == {2}
        assert set(prof.vertex_load.values()) == {0}

    def test_k2(self):
        g = build_mc(2, 1)
        prof = loads(Graph.from_circulant(g), translation_invariant_routing(g))
        assert prof.vertex_load == {0: 0, 1: 0}
        assert prof.edge_load == {(0, 1): 2}

    @pytest.mark.parametrize("m,h,load", [(2, 3, 2), (2, 1, 0), (3, 2, 4)])
    def test_uniform_loads(self, m, h, load):
        g = build_mc(m, h)
        G = Graph.from_circulant(g)
        r = translation_invariant_routing(g)
        assert validate_routing(G, r).minimal
        prof = loads(G, r)
        assert set(prof.vertex_load.values()) == {load}

    def test_mc8_edge_load_in_bounds(self):
        g = build_mc(2, 3)
        prof = loads(Graph.from_circulant(g), translation_invariant_routing(g))
        lower, upper = pi_bounds(2, 3)
        assert lower <= prof.pi_of_R <= upper

    @pytest.mark.parametrize("m,h", [(2, 4), (2, 6), (3, 3), (3, 4)])
    def test_accumulation_matches_table(self, m, h):
        g = build_mc(m, h)
        table = loads(Graph.from_circulant(g), translation_invariant_routing(g))
        streamed = translation_invariant_loads(g)
        assert table == streamed
        n = g.n
        assert sum(streamed.vertex_load.values()) == n * (rho_closed(m, h) - (n - 1))
        assert sum(streamed.edge_load.values()) == n * rho_closed(m, h)
        assert streamed.pi_of_R * g.edge_count() >= n * rho_closed(m, h)

    def test_sharded_merge(self):
        g = build_mc(3, 3)
        full = translation_invariant_loads(g)
        parts = [translation_invariant_loads(g, sources=range(s, g.n, 4)) for s in range(4)]
        merged = LoadProfile()
        for p in parts:
            merged = merged.merge(p)
        assert merged == full
        G = Graph.from_circulant(g)
        r = translation_invariant_routing(g)
        table = LoadProfile()
        for s in range(3):
            table = table.merge(loads(G, r, sources=range(s, g.n, 3)))
        assert table == full

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            translation_invariant_routing(build_mc(2, 11))
        prof = translation_invariant_loads(build_mc(2, 11))
        assert set(prof.vertex_load.values()) == {rho_closed(2, 11) - 2047}

    def test_csv(self):
        prof = translation_invariant_loads(build_mc(2, 2))
        assert prof.vertex_csv() == "vertex,load\n0,0\n1,0\n2,0\n3,0\n"
        assert prof.edge_csv().splitlines()[:2] == ["u,v,load", "0,1,2"]

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(2, 30), data=st.data())
    def test_conservation_random_circulants(self, n, data):
        jumps = data.draw(st.lists(st.integers(1, n // 2), min_size=1, max_size=3, unique=True))
        g = CirculantGraph(n, tuple(jumps + [1]))
        G = Graph.from_circulant(g)
        r = translation_invariant_routing(g)
        rep = validate_routing(G, r)
        assert rep.valid and rep.minimal
        prof = loads(G, r)
        assert sum(prof.vertex_load.values()) == sum(len(p) - 2 for p in r.paths.values())
        assert sum(prof.edge_load.values()) == sum(len(p) - 1 for p in r.paths.values())
        assert len(set(prof.vertex_load.values())) == 1


def test_graph_rejects_loops_and_unknown_vertices():
    with pytest.raises(DomainError):
        Graph.from_edges([(1, 1)])
    with pytest.raises(DomainError):
        Graph((1, 2), frozenset({(1, 3)}))


@pytest.mark.parametrize("m,h", [(4, 2), (4, 3), (5, 2), (6, 2), (7, 2)])
def test_witness_other_bases(m, h):
    from oracles import mc_row

    g = build_mc(m, h)
    prof = loads(Graph.from_circulant(g), translation_invariant_routing(g))
    assert set(prof.vertex_load.values()) == {sum(mc_row(m, h)) - (g.n - 1)}
