import dataclasses

import numpy as np
import pytest

from swarmnet.core import SwarmConfig, Vec3
from swarmnet.topology import build_graph, is_connected, neighbors, refresh

from oracles import brute_force_edges, union_find_components


def _pts(*rows):
    return [Vec3(*r) for r in rows]


def test_edge_at_exact_range():
    g = build_graph(_pts((0, 0, 0), (55, 0, 0)), 55.0)
    assert g.edges() == [(0, 1)]


def test_no_edge_just_beyond_range():
    g = build_graph(_pts((0, 0, 0), (55.001, 0, 0)), 55.0)
    assert g.edges() == []


def test_eight_close_nodes_form_complete_graph():
    rng = np.random.default_rng(3)
    pts = [Vec3.of(p) for p in 25 + rng.uniform(-5, 5, size=(8, 3))]
    assert len(brute_force_edges(pts, 55.0)) == 28
    g = build_graph(pts, 55.0)
    assert g.edge_count == 28
    assert set(g.edges()) == brute_force_edges(pts, 55.0)


def test_neighbors():
    iso = build_graph(_pts((0, 0, 0), (100, 0, 0)), 55.0)
    assert neighbors(iso, 0) == []
    tri = build_graph(_pts((0, 0, 0), (1, 0, 0), (0, 1, 0)), 55.0)
    assert neighbors(tri, 1) == [0, 2]
    path = _pts((0, 0, 0), (50, 0, 0), (100, 0, 0))
    assert brute_force_edges(path, 55.0) == {(0, 1), (1, 2)}
    assert neighbors(build_graph(path, 55.0), 0) == [1]


def test_neighbors_out_of_range_id():
    g = build_graph(_pts((0, 0, 0)), 55.0)
    with pytest.raises(IndexError):
        neighbors(g, 1)


def test_is_connected_examples():
    assert is_connected(build_graph(_pts((0, 0, 0)), 55.0))
    assert is_connected(build_graph(_pts((0, 0, 0), (50, 0, 0), (100, 0, 0)), 55.0))
    a = [(0, 0, 0), (10, 0, 0), (0, 10, 0), (0, 0, 10)]
    b = [(x + 200, y, z) for x, y, z in a]
    pts = _pts(*a, *b)
    assert union_find_components(8, brute_force_edges(pts, 55.0)) == 2
    assert not is_connected(build_graph(pts, 55.0))


def test_random_instances_match_brute_force():
    rng = np.random.default_rng(20240601)
    for _ in range(200):
        n = int(rng.integers(1, 51))
        r = float(rng.uniform(0, 200)) or 1.0
        pts = [Vec3.of(p) for p in rng.uniform(0, 200, size=(n, 3))]
        g = build_graph(pts, r)
        expected = brute_force_edges(pts, r)
        assert set(g.edges()) == expected
        for u in range(n):
            assert u not in g.adjacency[u]
            assert list(g.adjacency[u]) == sorted(g.adjacency[u])
            for v in g.adjacency[u]:
                assert u in g.adjacency[v]
        assert is_connected(g) == (union_find_components(n, expected) == 1)


class TestRefresh:
    pts = _pts((0, 0, 0), (10, 0, 0), (20, 0, 0))
    apart = _pts((0, 0, 0), (100, 0, 0), (200, 0, 0))

    def test_default_cadence_always_rebuilds(self):
        cfg = SwarmConfig(n=3)
        g = build_graph(self.pts, 55.0)
        for t in range(5):
            assert refresh(g, self.apart, t, cfg).edges() == []

    def test_off_cadence_keeps_graph(self):
        cfg = SwarmConfig(n=3, f_refresh_ticks=5)
        g = build_graph(self.pts, 55.0)
        assert refresh(g, self.apart, 3, cfg) is g

    def test_on_cadence_matches_fresh_build(self):
        cfg = SwarmConfig(n=3, f_refresh_ticks=5)
        g = build_graph(self.pts, 55.0)
        out = refresh(g, self.apart, 10, cfg)
        assert set(out.edges()) == brute_force_edges(self.apart, 55.0) == set()
        assert out.range_used == g.range_used

    def test_length_mismatch(self):
        g = build_graph(self.pts, 55.0)
        with pytest.raises(ValueError):
            refresh(g, self.pts[:2], 0, dataclasses.replace(SwarmConfig(), n=3))
