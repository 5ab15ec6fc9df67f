import random

from maxenum import (Graph, brute_force_maximal, enumerate_exp,
                     enumerate_pspace, make_instance)

from conftest import complete, cycle, path, random_graph, star, triangle


def test_is_solution_examples():
    assert make_instance("trees", graph=path(3)).is_solution(range(3))
    assert not make_instance("trees", graph=triangle()).is_solution(range(3))
    c4 = make_instance("trees", graph=cycle(4))
    assert c4.is_solution((0, 1, 2))


def test_neighbors_k4():
    inst = make_instance("trees", graph=complete(4))
    nb = inst.neighbors((0, 1))
    assert (0, 2) in nb and (1, 2) in nb


def test_neighbors_c4():
    inst = make_instance("trees", graph=cycle(4))
    nb = inst.neighbors((0, 1, 2))
    assert (1, 2, 3) in nb and (0, 1, 3) in nb


def test_star_single_tree():
    inst = make_instance("trees", graph=star(3))
    sols = []
    enumerate_exp(inst, emit=sols.append)
    assert sols == [(0, 1, 2, 3)]
    assert set(inst.neighbors((0, 1, 2, 3))) <= {(0, 1, 2, 3)}


def test_counts_k4_and_c4():
    for variant in ("trees", "forests"):
        inst = make_instance(variant, graph=complete(4))
        sols = []
        enumerate_exp(inst, emit=sols.append)
        assert len(sols) == 6
    inst = make_instance("forests", graph=cycle(4))
    sols = []
    enumerate_exp(inst, emit=sols.append)
    assert len(sols) == 4


def test_single_preceding_neighbor_in_canonical_order():
    rng = random.Random(113)
    for _ in range(15):
        g = random_graph(rng, rng.randint(4, 8), 0.5)
        inst = make_instance("trees", graph=g)
        sols = []
        enumerate_exp(inst, emit=sols.append)
        for s in sols:
            order = inst.canonical_order(s)
            for i, v in enumerate(order[1:], start=1):
                assert sum(1 for u in order[:i] if u in g.und_adj[v]) == 1


def test_canonical_order_examples():
    p3 = make_instance("trees", graph=path(3))
    assert p3.canonical_order((0, 1, 2)) == [0, 1, 2]
    c4 = make_instance("trees", graph=cycle(4))
    assert c4.canonical_order((0, 1, 3)) == [0, 1, 3]
    two_comp = make_instance("forests", graph=Graph(4, [(0, 1), (2, 3)]))
    assert two_comp.canonical_order((0, 1, 2, 3)) == [0, 1, 2, 3]


def test_forest_absorbs_isolated_vertices():
    g = Graph(5, [(0, 1), (1, 2), (0, 2)])  # 3,4 isolated
    inst = make_instance("forests", graph=g)
    sols = []
    enumerate_exp(inst, emit=sols.append)
    assert all({3, 4} <= set(s) for s in sols)
    assert sorted(sols) == brute_force_maximal(inst)


def test_isolated_vertices_are_own_trees():
    g = Graph(5, [(0, 1), (1, 2), (0, 2)])
    inst = make_instance("trees", graph=g)
    sols = []
    enumerate_exp(inst, emit=sols.append)
    assert (3,) in sols and (4,) in sols
    assert sorted(sols) == brute_force_maximal(inst)


def test_disconnected_graph_reaches_all_components():
    g = Graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (5, 6)])
    inst = make_instance("trees", graph=g)
    sols = []
    enumerate_exp(inst, emit=sols.append)
    assert sorted(sols) == brute_force_maximal(inst)


def test_both_engines_agree():
    rng = random.Random(127)
    for variant in ("trees", "forests"):
        for _ in range(8):
            g = random_graph(rng, rng.randint(4, 7), 0.45)
            s1, s2 = [], []
            enumerate_exp(make_instance(variant, graph=g), emit=s1.append)
            enumerate_pspace(make_instance(variant, graph=g), emit=s2.append)
            assert sorted(s1) == sorted(s2) == brute_force_maximal(
                make_instance(variant, graph=g))
