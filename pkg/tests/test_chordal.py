import itertools
import random

from maxenum import brute_force_maximal, enumerate_exp, make_instance
from maxenum.graphs import Graph

from conftest import complete, cycle, random_graph, triangle


def test_is_solution_examples():
    assert make_instance("chordal-induced", graph=triangle()).is_solution(range(3))
    c4 = make_instance("chordal-induced", graph=cycle(4))
    assert not c4.is_solution(range(4))
    assert c4.is_solution((0, 1, 2))


def test_cliques_at_examples():
    c4 = make_instance("chordal-induced", graph=cycle(4))
    assert c4.cliques_at((0, 1, 2), 3) == [(0, 3), (2, 3)]

    k4 = make_instance("chordal-induced", graph=complete(4))
    assert k4.cliques_at((0, 1, 2), 3) == [(0, 1, 2, 3)]

    g = Graph(4, [(0, 1), (1, 2)])
    inst = make_instance("chordal-induced", graph=g)
    assert inst.cliques_at((0, 1, 2), 3) == [(3,)]


def _brute_max_cliques(g, cand):
    out = []
    cand = sorted(cand)
    for size in range(len(cand), 0, -1):
        for sub in itertools.combinations(cand, size):
            if all(v in g.und_adj[u] for u, v in itertools.combinations(sub, 2)):
                if not any(set(sub) < set(c) for c in out):
                    out.append(sub)
    return sorted(out)


def test_cliques_at_are_maximal_cliques():
    rng = random.Random(53)
    for _ in range(20):
        g = random_graph(rng, 6, 0.6)
        inst = make_instance("chordal-induced", graph=g)
        s = inst.comp(())
        for v in range(g.n):
            if v in s:
                continue
            got = inst.cliques_at(s, v)
            expect = _brute_max_cliques(g, set(s) | {v})
            expect = sorted(c for c in expect if v in c)
            assert sorted(got) == expect
            assert len(got) <= len([u for u in g.und_adj[v] if u in s]) + 1


def test_neighbors_c4_replay():
    inst = make_instance("chordal-induced", graph=cycle(4))
    nb = inst.neighbors((0, 1, 2))
    assert (0, 1, 3) in nb and (1, 2, 3) in nb


def test_k4_single_solution():
    inst = make_instance("chordal-induced", graph=complete(4))
    sols = []
    enumerate_exp(inst, emit=sols.append)
    assert sols == [(0, 1, 2, 3)]
    assert set(inst.neighbors((0, 1, 2, 3))) <= {(0, 1, 2, 3)}


def test_c5_paths_and_counts():
    inst = make_instance("chordal-induced", graph=cycle(5))
    sols = []
    enumerate_exp(inst, emit=sols.append)
    assert sorted(sols) == brute_force_maximal(inst)
    assert all(len(s) == 4 for s in sols)


def test_edge_comp_examples():
    c4 = make_instance("chordal-edge", graph=cycle(4))
    assert c4.comp((0, 1, 2)) == (0, 1, 2)  # fourth edge closes a hole

    tri = make_instance("chordal-edge", graph=triangle())
    assert tri.comp(()) == (0, 1, 2)


def test_edge_comp_rescans():
    # edges: 0:0-1, 1:1-2, 2:2-3, 3:0-3, 4:0-2 — edge 3 alone closes a
    # chordless square, but becomes addible once the chord 4 is present
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    inst = make_instance("chordal-edge", graph=g)
    assert not inst.is_solution((0, 1, 2, 3))
    assert inst.comp((0, 1, 2)) == (0, 1, 2, 3, 4)


def test_reverse_elimination_clique_property():
    rng = random.Random(59)
    for _ in range(10):
        g = random_graph(rng, 6, 0.5)
        for variant in ("chordal-induced", "chordal-induced-connected"):
            inst = make_instance(variant, graph=g)
            sols = []
            enumerate_exp(inst, emit=sols.append)
            for s in sols:
                order = inst.canonical_order(s)
                for i, v in enumerate(order):
                    before = [u for u in order[:i] if u in g.und_adj[v]]
                    assert all(b in g.und_adj[a]
                               for a, b in itertools.combinations(before, 2))


def test_connected_variant_oracle():
    rng = random.Random(61)
    for _ in range(8):
        g = random_graph(rng, 6, 0.4)
        inst = make_instance("chordal-induced-connected", graph=g)
        sols = []
        enumerate_exp(inst, emit=sols.append)
        assert sorted(sols) == brute_force_maximal(inst)


def test_edge_variant_oracle():
    rng = random.Random(67)
    for _ in range(8):
        g = random_graph(rng, 5, 0.7, max_m=9)
        inst = make_instance("chordal-edge", graph=g)
        sols = []
        enumerate_exp(inst, emit=sols.append)
        assert sorted(sols) == brute_force_maximal(inst)
