"""Problem contract shared by every maximal-subgraph plugin.

A plugin owns three things: a membership predicate over ground-element
bitmasks, a completion routine extending any solution to a maximal one,
and a neighboring function producing maximal solutions from a given one.
Solutions cross the API as sorted tuples of element ids; all hot paths
run on bitmasks with per-instance memoization of the predicate.
"""

from __future__ import annotations

from typing import Iterable

from ..graphs import bits, mask_of


def tuple_of(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class Problem:
    variant: str = ""
    ground_kind: str = "v"  # "v": vertex ids, "e": edge ids

    def __init__(self, ground_size: int):
        self.ground_size = ground_size
        self.comp_calls = 0
        self._sol_cache: dict[int, bool] = {}

    # -- membership ---------------------------------------------------
    def _solution_mask(self, mask: int) -> bool:
        raise NotImplementedError

    def sol(self, mask: int) -> bool:
        cache = self._sol_cache
        hit = cache.get(mask)
        if hit is None:
            hit = self._solution_mask(mask)
            cache[mask] = hit
        return hit

    def is_solution(self, elems: Iterable[int]) -> bool:
        return self.sol(mask_of(elems))

    def is_maximal_solution(self, elems: Iterable[int]) -> bool:
        # single-element extensions suffice: every family here is strongly
        # accessible, so a larger solution implies an addable element
        mask = mask_of(elems)
        if not self.sol(mask):
            return False
        for e in range(self.ground_size):
            b = 1 << e
            if not (mask & b) and self.sol(mask | b):
                return False
        return True

    # -- completion ----------------------------------------------------
    def _comp_mask(self, mask: int) -> int:
        raise NotImplementedError

    def comp_mask(self, mask: int) -> int:
        if not self.sol(mask):
            raise ValueError("completion requires a solution as input")
        self.comp_calls += 1
        return self._comp_mask(mask)

    def comp(self, elems: Iterable[int]) -> tuple[int, ...]:
        return tuple_of(self.comp_mask(mask_of(elems)))

    def first_solution(self) -> tuple[int, ...]:
        return tuple_of(self.comp_mask(0))

    def _comp_hereditary(self, mask: int) -> int:
        # ascending single pass; a failed element can never become addable
        for e in range(self.ground_size):
            b = 1 << e
            if not (mask & b) and self.sol(mask | b):
                mask |= b
        return mask

    def _adjacent_mask(self, mask: int) -> int:
        """Candidate elements adjacent to the current set (connected comp)."""
        raise NotImplementedError

    def _comp_connected(self, mask: int) -> int:
        if mask == 0:
            for e in range(self.ground_size):
                if self.sol(1 << e):
                    mask = 1 << e
                    break
            else:
                return 0
        rejected = 0
        while True:
            cands = self._adjacent_mask(mask) & ~mask & ~rejected
            added = False
            for e in bits(cands):
                b = 1 << e
                if self.sol(mask | b):
                    mask |= b
                    added = True
                    break  # rescan: smaller ids may have become adjacent
                rejected |= b
            if not added:
                return mask

    # -- neighboring ----------------------------------------------------
    def _neighbor_masks(self, smask: int) -> Iterable[int]:
        raise NotImplementedError

    def neighbors(self, solution: Iterable[int]) -> list[tuple[int, ...]]:
        """Maximal solutions adjacent to ``solution`` in the solution graph.

        Deterministic order; duplicates collapsed to first occurrence.
        """
        smask = mask_of(solution)
        out: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for m in self._neighbor_masks(smask):
            if m not in seen:
                seen.add(m)
                out.append(tuple_of(m))
        return out

    # -- instrumentation / test surface ---------------------------------
    def comp_budget(self) -> int:
        """Upper bound on comp calls in a single neighbors() invocation."""
        raise NotImplementedError

    def canonical_order(self, solution: Iterable[int]) -> list[int]:
        raise NotImplementedError

    def prefix_overlap(self, elems: Iterable[int], target: Iterable[int]) -> int:
        """Length of the longest prefix of target's canonical order inside elems."""
        have = set(elems)
        k = 0
        for e in self.canonical_order(target):
            if e not in have:
                break
            k += 1
        return k


class PspaceProblem(Problem):
    """Contract addition for the dictionary-free parent-forest traversal.

    The four families supported here are vertex problems on an undirected
    graph where every single vertex is a solution, ordered by BFS either
    from a root (connected-hereditary) or per component leader
    (hereditary).
    """

    order_hereditary = False  # per-component leader keys when True

    def __init__(self, ground_size: int, adj_masks):
        super().__init__(ground_size)
        self._order_adj = adj_masks

    def singleton(self, e: int) -> bool:
        return True

    def addable(self, xmask: int) -> list[int]:
        out = []
        for e in range(self.ground_size):
            b = 1 << e
            if not (xmask & b) and self.sol(xmask | b):
                out.append(e)
        return out

    def order_keys(self, xmask: int, v: int, elems: Iterable[int]) -> dict[int, tuple]:
        """Sort keys for elements of X and X+ under the BFS order rooted at v.

        Extensions are keyed by the values they take in G[X + {e}].  Keys are
        (component-leader slot, distance from leader, id); the leader slot is
        0 for v's own component and leader id + 1 otherwise, so the root
        component always sorts first.
        """
        from ..graphs import mask_components, mask_dists

        adj = self._order_adj
        keys: dict[int, tuple] = {}
        if not (xmask >> v) & 1:
            raise ValueError(f"order root {v} is not in the set")
        if not self.order_hereditary:
            dist = mask_dists(adj, xmask, v)
            for e in elems:
                if (xmask >> e) & 1:
                    keys[e] = (0, dist[e], e)
                else:
                    nb = [dist[u] for u in bits(adj[e] & xmask) if u in dist]
                    if not nb:
                        raise ValueError(f"element {e} not attached to the set")
                    keys[e] = (0, 1 + min(nb), e)
            return keys

        comps = mask_components(adj, xmask)
        info: dict[int, tuple[int, int]] = {}
        comp_data = []
        for comp in comps:
            if (comp >> v) & 1:
                leader, slot = v, 0
            else:
                leader = (comp & -comp).bit_length() - 1
                slot = leader + 1
            dl = mask_dists(adj, comp, leader)
            comp_data.append((comp, leader, slot, dl))
            for u in bits(comp):
                info[u] = (slot, dl[u])
        for e in elems:
            if (xmask >> e) & 1:
                slot, d = info[e]
                keys[e] = (slot, d, e)
                continue
            touched = [cd for cd in comp_data if adj[e] & cd[0]]
            members = [e] + [u for cd in touched for u in (cd[1],)]
            if any((cd[0] >> v) & 1 for cd in touched):
                leader, slot = v, 0
            else:
                leader = min(members)
                slot = leader + 1
            if leader == e:
                keys[e] = (slot, 0, e)
            else:
                home = next(cd for cd in touched if (cd[0] >> leader) & 1)
                d = 1 + min(home[3][u] for u in bits(adj[e] & home[0]))
                keys[e] = (slot, d, e)
        return keys

    def order_key(self, xmask: int, v: int, e: int) -> tuple:
        return self.order_keys(xmask, v, [e])[e]

    def neighbors_at(self, solution: Iterable[int], w: int) -> list[tuple[int, ...]]:
        """Canonical-reconstruction candidates for extender w (lex completion)."""
        raise NotImplementedError
