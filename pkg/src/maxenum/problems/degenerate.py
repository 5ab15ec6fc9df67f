"""Maximal k-degenerate subgraph plugins: induced and edge (exp engine only).

Candidate generation tries, for each incoming element, every way of keeping
at most k (induced) or k-1 (edge, per endpoint) of its neighbors; kept sets
are enumerated in lexicographic order of their sorted member ids.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from ..graphs import Graph, bits, components, mask_of
from .base import Problem, tuple_of


def _peel_ok_vertices(adj, mask: int, k: int) -> bool:
    """True iff repeatedly deleting vertices of degree <= k empties the set."""
    left = mask
    while left:
        removed = 0
        for u in bits(left):
            if (adj[u] & left).bit_count() <= k:
                removed |= 1 << u
        if not removed:
            return False
        left &= ~removed
    return True


class KDegenerateInduced(Problem):
    variant = "kdeg-induced"
    ground_kind = "v"

    def __init__(self, g: Graph, k: int):
        if g.directed:
            raise ValueError(f"{self.variant} expects an undirected graph")
        if k < 0:
            raise ValueError("k must be non-negative")
        super().__init__(g.n)
        self.g = g
        self.k = k

    def _solution_mask(self, mask: int) -> bool:
        return _peel_ok_vertices(self.g.und_mask, mask, self.k)

    def _comp_mask(self, mask: int) -> int:
        return self._comp_hereditary(mask)

    def _neighbor_masks(self, smask: int):
        for v in range(self.g.n):
            if (smask >> v) & 1:
                continue
            nb = tuple_of(self.g.und_mask[v] & smask)
            base = (smask & ~mask_of(nb)) | (1 << v)
            for size in range(min(self.k, len(nb)) + 1):
                for kept in combinations(nb, size):
                    yield self.comp_mask(base | mask_of(kept))

    def comp_budget(self) -> int:
        n = self.ground_size
        return n * sum(comb(n, i) for i in range(self.k + 1))

    def canonical_order(self, solution) -> list[int]:
        from ..graphs import degeneracy_order

        order: list[int] = []
        for comp in components(self.g, solution):
            removal, _ = degeneracy_order(self.g, comp)
            order.extend(reversed(removal))
        return order


class KDegenerateEdge(Problem):
    variant = "kdeg-edge"
    ground_kind = "e"

    def __init__(self, g: Graph, k: int):
        if g.directed:
            raise ValueError(f"{self.variant} expects an undirected graph")
        if k < 1:
            raise ValueError("the edge variant needs k >= 1")
        super().__init__(g.m)
        self.g = g
        self.k = k

    def _edge_adjacency(self, emask: int) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for e in bits(emask):
            u, v = self.g.edges[e]
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return adj

    def _solution_mask(self, emask: int) -> bool:
        adj = self._edge_adjacency(emask)
        left = set(adj)
        while left:
            removed = [u for u in left
                       if sum(1 for w in adj[u] if w in left) <= self.k]
            if not removed:
                return False
            for u in removed:
                left.discard(u)
        return True

    def _comp_mask(self, emask: int) -> int:
        return self._comp_hereditary(emask)

    def _neighbor_masks(self, emask: int):
        for e in range(self.g.m):
            if (emask >> e) & 1:
                continue
            a, b = self.g.edges[e]
            for w in (a, b):
                inc = tuple_of(self.g.edge_mask_at[w] & emask)
                base = (emask & ~self.g.edge_mask_at[w]) | (1 << e)
                for size in range(min(self.k - 1, len(inc)) + 1):
                    for kept in combinations(inc, size):
                        yield self.comp_mask(base | mask_of(kept))

    def comp_budget(self) -> int:
        m = self.ground_size
        return 2 * m * sum(comb(m, i) for i in range(self.k))

    def canonical_order(self, solution) -> list[int]:
        elist = sorted(solution)
        adj = self._edge_adjacency(mask_of(elist))
        pos: dict[int, int] = {}
        left = set(adj)
        while left:
            # component of the smallest spanned vertex, peeled by min degree
            root = min(left)
            comp = {root}
            stack = [root]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w in left and w not in comp:
                        comp.add(w)
                        stack.append(w)
            peel = []
            remaining = set(comp)
            while remaining:
                u = min(remaining,
                        key=lambda x: (sum(1 for w in adj[x] if w in remaining), x))
                peel.append(u)
                remaining.discard(u)
            for u in reversed(peel):
                pos[u] = len(pos)
            left -= comp

        def key(e):
            u, v = self.g.edges[e]
            pu, pv = pos[u], pos[v]
            return (max(pu, pv), min(pu, pv))

        return sorted(elist, key=key)
