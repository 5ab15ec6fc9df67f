"""Immutable adjacency-list graphs and the shared combinatorial primitives.

Everything downstream (problem plugins, engines, oracle) works on dense
0-based vertex ids and stable 0-based edge ids, so all tie-breaking rules
reduce to "smallest id first".
"""

from __future__ import annotations

from typing import Iterable, Optional


class GraphFormatError(ValueError):
    """Raised for malformed edge-list input; message names the line."""


class ContractViolation(ValueError):
    """An operation was called outside its stated precondition."""


def mask_of(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def bits(mask: int):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple graph with sorted neighbor lists and stable edge ids.

    Undirected graphs store each edge in both endpoint lists.  Directed
    graphs keep separate out- and in-neighbor lists; ``und_adj`` always
    holds the underlying undirected adjacency used for reachability.
    Instances are immutable after construction and safe to share.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], directed: bool = False):
        self.n = n
        self.directed = directed
        seen: set[tuple[int, int]] = set()
        elist: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add(key)
            elist.append((u, v))
        self.edges: tuple[tuple[int, int], ...] = tuple(elist)
        self.m = len(elist)

        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        und: list[set[int]] = [set() for _ in range(n)]
        edge_at: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(elist):
            out[u].append(v)
            inc[v].append(u)
            und[u].add(v)
            und[v].add(u)
            edge_at[u].append(i)
            edge_at[v].append(i)
        self.out_adj = tuple(tuple(sorted(a)) for a in out)
        self.in_adj = tuple(tuple(sorted(a)) for a in inc)
        self.und_adj = tuple(tuple(sorted(a)) for a in und)
        if not directed:
            self.adj = self.und_adj
        else:
            self.adj = self.out_adj
        # bitmask mirrors of the adjacency, used by the hot predicates
        self.und_mask = tuple(mask_of(a) for a in self.und_adj)
        self.out_mask = tuple(mask_of(a) for a in self.out_adj)
        self.in_mask = tuple(mask_of(a) for a in self.in_adj)
        self.edge_mask_at = tuple(mask_of(e) for e in edge_at)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.und_adj[v]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.und_adj[v]]

    def edge_id(self, u: int, v: int) -> Optional[int]:
        for i, (a, b) in enumerate(self.edges):
            if (a, b) == (u, v) or (not self.directed and (b, a) == (u, v)):
                return i
        return None

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def load_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m [directed]", then m lines "u v".

    Comment lines start with '#'.  Duplicate edges are dropped (ids follow
    first occurrence); malformed lines, out-of-range ids and self-loops
    raise GraphFormatError naming the offending line number.
    """
    header = None
    header_line = 0
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line
            header_line = lineno
        else:
            rows.append((lineno, line))
    if header is None:
        raise GraphFormatError("line 0: missing header line 'n m [directed]'")
    parts = header.split()
    directed = False
    if len(parts) == 3 and parts[2] == "directed":
        directed = True
        parts = parts[:2]
    if len(parts) != 2:
        raise GraphFormatError(f"line {header_line}: bad header {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"line {header_line}: bad header {header!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {header_line}: negative count in header")
    if len(rows) != m:
        raise GraphFormatError(
            f"line {header_line}: header declares {m} edges, found {len(rows)}")

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in rows:
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range in {line!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            continue
        seen.add(key)
        edges.append((u, v))
    return Graph(n, edges, directed=directed)


class DisjointSets:
    """Union-find with rank, path halving and a parity bit per element.

    The parity bit records the side of an element relative to its root,
    which is what the bipartite completion routines need for two-coloring.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.par = [0] * n  # parity relative to parent
        self.count = n

    def find(self, x: int) -> int:
        p = 0
        root = x
        while self.parent[root] != root:
            p ^= self.par[root]
            root = self.parent[root]
        # path compression, keeping parities consistent
        while self.parent[x] != root:
            nxt = self.parent[x]
            nxtp = self.par[x]
            self.parent[x] = root
            self.par[x] = p
            p ^= nxtp
            x = nxt
        return root

    def parity(self, x: int) -> int:
        self.find(x)
        return self.par[x] if self.parent[x] != x else 0

    def union(self, a: int, b: int, rel: int = 0) -> bool:
        """Merge the sets of a and b with parity(a) ^ parity(b) == rel.

        Returns False when a and b are already joined with the opposite
        parity (a two-coloring conflict); True otherwise.
        """
        ra, rb = self.find(a), self.find(b)
        pa = self.par[a] if self.parent[a] != a else 0
        pb = self.par[b] if self.parent[b] != b else 0
        if ra == rb:
            return (pa ^ pb) == rel
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
            pa, pb = pb, pa
        self.parent[rb] = ra
        self.par[rb] = pa ^ pb ^ rel
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.count -= 1
        return True


def connected_component(g: Graph, s: Iterable[int], v: int) -> set[int]:
    """Vertices of s reachable from v inside the induced subgraph G[s].

    Directed graphs are treated as undirected for reachability.
    """
    sset = set(s)
    if v not in sset:
        raise ContractViolation(f"vertex {v} not in the candidate set")
    comp = {v}
    frontier = [v]
    while frontier:
        u = frontier.pop()
        for w in g.und_adj[u]:
            if w in sset and w not in comp:
                comp.add(w)
                frontier.append(w)
    return comp


def components(g: Graph, s: Iterable[int]) -> list[set[int]]:
    """Connected components of G[s], ordered by smallest contained vertex."""
    left = set(s)
    out = []
    while left:
        v = min(left)
        comp = connected_component(g, left, v)
        out.append(comp)
        left -= comp
    return out


def bfs_distances(g: Graph, s: Iterable[int], root: int) -> dict[int, int]:
    sset = set(s)
    if root not in sset:
        raise ContractViolation(f"root {root} not in the candidate set")
    dist = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.und_adj[u]:
                if w in sset and w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def bfs_canonical_order(g: Graph, s: Iterable[int], root: int) -> list[int]:
    """Order G[s] by (distance from root, vertex id); G[s] must be connected."""
    sset = set(s)
    dist = bfs_distances(g, sset, root)
    if len(dist) != len(sset):
        raise ContractViolation("candidate set does not induce a connected subgraph")
    return sorted(sset, key=lambda u: (dist[u], u))


def degeneracy_order(g: Graph, s: Iterable[int]) -> tuple[list[int], int]:
    """Smallest-degree removal order of G[s] (ties to smallest id).

    Returns the order and the maximum degree seen at removal time, which
    is the degeneracy of G[s].
    """
    left = set(s)
    deg = {u: sum(1 for w in g.und_adj[u] if w in left) for u in left}
    order = []
    degeneracy = 0
    while left:
        u = min(left, key=lambda x: (deg[x], x))
        degeneracy = max(degeneracy, deg[u])
        order.append(u)
        left.remove(u)
        for w in g.und_adj[u]:
            if w in left:
                deg[w] -= 1
    return order, degeneracy


def peo_of_adjacency(adj: dict[int, set[int]]) -> Optional[list[int]]:
    """Perfect elimination order by repeated smallest-id simplicial removal.

    Works on an explicit adjacency dict so edge-induced subgraphs can reuse
    it.  Returns None when the graph is not chordal.
    """
    adj = {u: set(nb) for u, nb in adj.items()}
    order = []
    while adj:
        pick = None
        for u in sorted(adj):
            nb = adj[u]
            if all(nb - {w} <= adj[w] for w in nb):
                pick = u
                break
        if pick is None:
            return None
        for w in adj[pick]:
            adj[w].discard(pick)
        del adj[pick]
        order.append(pick)
    return order


def perfect_elimination_order(g: Graph, s: Iterable[int]) -> Optional[list[int]]:
    """PEO of G[s] if chordal (doubles as the chordality test), else None."""
    sset = set(s)
    adj = {u: {w for w in g.und_adj[u] if w in sset} for u in sset}
    return peo_of_adjacency(adj)


# ---------------------------------------------------------------------------
# Bitmask BFS helpers used by the hot paths of the problem plugins.

def mask_cc(adj_masks, mask: int, v: int) -> int:
    """Component mask of v inside the vertex set given as a bitmask."""
    comp = 1 << v
    frontier = comp
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= adj_masks[u]
        frontier = grow & mask & ~comp
        comp |= frontier
    return comp


def mask_components(adj_masks, mask: int) -> list[int]:
    out = []
    left = mask
    while left:
        v = (left & -left).bit_length() - 1
        comp = mask_cc(adj_masks, left, v)
        out.append(comp)
        left &= ~comp
    return out


def mask_dists(adj_masks, mask: int, src: int) -> dict[int, int]:
    """BFS distances from src within the masked vertex set."""
    dist = {src: 0}
    frontier = 1 << src
    seen = frontier
    d = 0
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= adj_masks[u]
        frontier = grow & mask & ~seen
        seen |= frontier
        d += 1
        for u in bits(frontier):
            dist[u] = d
    return dist
