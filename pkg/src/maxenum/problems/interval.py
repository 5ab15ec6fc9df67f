"""Maximal proper interval subgraph plugins: connected induced and induced.

A vertex set is a solution when every component admits a unit-interval
arrangement: an ordering in which each vertex's earlier neighbors form a
clique occupying a suffix of the order.  Candidate generation inserts the
incoming vertex into an exact rational realization of that arrangement at
the finitely many combinatorially distinct positions, then repairs the
arrangement by deleting the vertices that contradict it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..graphs import Graph, bits, mask_cc, mask_components, mask_of
from .base import Problem, tuple_of


class _ProperIntervalBase(Problem):
    ground_kind = "v"
    connected = False

    def __init__(self, g: Graph):
        if g.directed:
            raise ValueError(f"{self.variant} expects an undirected graph")
        super().__init__(g.n)
        self.g = g
        self._layout_cache: dict[int, Optional[tuple[int, ...]]] = {}

    # -- recognition -----------------------------------------------------
    def component_layout(self, cmask: int) -> Optional[tuple[int, ...]]:
        """Lexicographically smallest unit-interval order of a connected
        vertex set, or None when there is none.

        Placement rule: each added vertex must see its neighbors among the
        placed ones as a clique forming a suffix of the partial order.
        """
        hit = self._layout_cache.get(cmask, "miss")
        if hit != "miss":
            return hit
        und = self.g.und_mask
        verts = tuple_of(cmask)
        order: list[int] = []
        placed = 0

        def fits(x: int) -> bool:
            nb = und[x] & placed
            if order and not nb:
                return False
            cnt = nb.bit_count()
            suffix = order[len(order) - cnt:]
            for w in suffix:
                if not (nb >> w) & 1:
                    return False
            for i, u in enumerate(suffix):
                for w in suffix[i + 1:]:
                    if not (und[u] >> w) & 1:
                        return False
            return True

        def search() -> bool:
            nonlocal placed
            if len(order) == len(verts):
                return True
            for x in verts:
                b = 1 << x
                if placed & b or not fits(x):
                    continue
                order.append(x)
                placed |= b
                if search():
                    return True
                order.pop()
                placed &= ~b
            return False

        result = tuple(order) if search() else None
        self._layout_cache[cmask] = result
        return result

    def _solution_mask(self, mask: int) -> bool:
        comps = mask_components(self.g.und_mask, mask)
        if self.connected and len(comps) > 1:
            return False
        return all(self.component_layout(c) is not None for c in comps)

    def layouts(self, solution) -> list[tuple[int, ...]]:
        """Unit-interval arrangement(s) of a solution.

        Connected solutions have exactly two (the canonical one and its
        reverse); a single vertex has one.  Disconnected solutions get the
        concatenation of per-component canonical layouts.
        """
        smask = mask_of(solution)
        if not self.sol(smask):
            raise ValueError("not a solution of this variant")
        comps = mask_components(self.g.und_mask, smask)
        if len(comps) > 1:
            order: list[int] = []
            for c in sorted(comps, key=lambda c: c & -c):
                order.extend(self.component_layout(c))
            return [tuple(order)]
        lay = self.component_layout(smask)
        rev = tuple(reversed(lay))
        return [lay] if rev == lay else [lay, rev]

    # -- realization and insertion ----------------------------------------
    def _realize(self, order) -> list[Fraction]:
        """Exact unit-interval start positions for a component arrangement.

        Starts strictly increase and overlap holds exactly for graph edges
        (|difference| < 1); midpoint choices leave slack around every
        non-forced boundary.
        """
        und = self.g.und_mask
        starts: list[Fraction] = []
        placed = 0
        for t, x in enumerate(order):
            if t == 0:
                starts.append(Fraction(0))
                placed |= 1 << x
                continue
            cnt = (und[x] & placed).bit_count()
            a = t - cnt
            base = starts[t - 1]
            if a > 0:
                base = max(base, starts[a - 1] + 1)
            hi = starts[a] + 1
            starts.append((base + hi) / 2)
            placed |= 1 << x
        return starts

    @staticmethod
    def _epsilon(starts) -> Fraction:
        crit = set()
        for s in starts:
            crit.update((s - 1, s, s + 1))
        gaps = [b - a for a, b in zip(sorted(crit), sorted(crit)[1:]) if b > a]
        return min(gaps, default=Fraction(1)) / 2

    def _insert_positions(self, starts) -> list[Fraction]:
        """Candidate start positions of a new unit interval: for every
        existing interval, just before/after its start is reached by the
        new right end, exactly aligned, and just before/after its end is
        passed by the new left end."""
        eps = self._epsilon(starts)
        out = []
        for s in starts:
            out.extend((s - 1 - eps, s - 1 + eps, s, s + 1 - eps, s + 1 + eps))
        return out

    # -- repairs -----------------------------------------------------------
    def _repair_connected(self, smask: int, order, starts, v: int, sv) -> int:
        """Drop the vertices contradicting v's inserted interval: everything
        after v, neighbors that miss it, and overlapping non-neighbors."""
        nmask = self.g.und_mask[v]
        removed = 0
        for w, sw in zip(order, starts):
            after = sw > sv
            overlap = abs(sv - sw) < 1
            is_nb = (nmask >> w) & 1
            if after or (is_nb and not overlap) or (overlap and not is_nb):
                removed |= 1 << w
        return (smask & ~removed) | (1 << v)

    def _repair_induced(self, cimask: int, order, starts, v: int, sv,
                        t_prev: int) -> int:
        """Component repair when a previous interval t_prev is pinned: drop
        the order positions between t_prev and v, later intervals touching
        v or t_prev, and v's overlap contradictions."""
        nmask = self.g.und_mask[v]
        pmask = self.g.und_mask[t_prev]
        stp = starts[order.index(t_prev)]
        removed = 0
        for w, sw in zip(order, starts):
            b = 1 << w
            overlap = abs(sv - sw) < 1
            is_nb = (nmask >> w) & 1
            if stp < sw < sv:
                removed |= b
            elif sw > sv and ((nmask >> w) & 1 or (pmask >> w) & 1):
                removed |= b
            elif is_nb and not overlap:
                removed |= b
            elif overlap and not is_nb:
                removed |= b
        return (cimask & ~removed) | (1 << v)

    # -- neighboring ---------------------------------------------------------
    def _hosts(self, smask: int, v: int) -> list[int]:
        """Host sets to insert v into: the solution itself, the solution with
        v's neighbors cut down to one maximal clique, the solution minus any
        one vertex, and for each pair (a adjacent to v, b not) the solution
        minus everything that distinguishes a from b.

        Inserting into the solution's own arrangement can be impossible when
        that arrangement pins vertices that the target solution treats as
        interchangeable; a distinguisher of such a pair can never belong to
        the surviving prefix, so deleting all of them first both releases
        the tie and keeps the prefix intact.
        """
        from .chordal import _maximal_cliques_chordal

        und = self.g.und_mask
        hosts = [smask]
        core = und[v] & smask
        if core:
            adj = {u: set(bits(und[u] & core)) for u in bits(core)}
            for q in _maximal_cliques_chordal(adj):
                hosts.append(smask & ~(core & ~mask_of(q)))
        for z in bits(smask):
            hosts.append(smask & ~(1 << z))
        for a in bits(core):
            for b in bits(smask & ~und[v]):
                if b == a:
                    continue
                diff = (und[a] ^ und[b]) & smask & ~(1 << a) & ~(1 << b)
                if diff:
                    hosts.append(smask & ~diff)
        return list(dict.fromkeys(hosts))

    def _twin_classes(self, cmask: int) -> dict[int, int]:
        """Map each vertex of the component to its true-twin class mask."""
        und = self.g.und_mask
        out = {}
        for u in bits(cmask):
            closed = (und[u] & cmask) | (1 << u)
            cls = 0
            for w in bits(cmask):
                if ((und[w] & cmask) | (1 << w)) == closed:
                    cls |= 1 << w
            out[u] = cls
        return out

    def _reps(self, cmask: int, v: int):
        """Arrangements of a host component worth trying for extender v:
        the canonical one, its reverse, and both with every run of mutually
        interchangeable vertices reordered to put v's non-neighbors first."""
        lay = self.component_layout(cmask)
        rev = tuple(reversed(lay))
        out = [lay, rev]
        classes = self._twin_classes(cmask)
        nmask = self.g.und_mask[v]

        def split(order):
            res = []
            i = 0
            while i < len(order):
                cls = classes[order[i]]
                j = i
                while j < len(order) and classes[order[j]] == cls:
                    j += 1
                run = order[i:j]
                res.extend(sorted(run, key=lambda u: ((nmask >> u) & 1, u)))
                i = j
            return tuple(res)

        out.append(split(lay))
        out.append(split(rev))
        return list(dict.fromkeys(out))

    def _neighbor_masks(self, smask: int):
        und = self.g.und_mask
        for v in range(self.g.n):
            if (smask >> v) & 1:
                continue
            seen: set[int] = set()
            if self.connected:
                if not smask:
                    yield self.comp_mask(1 << v)
                    continue
                arrangements = []
                for host in self._hosts(smask, v):
                    for cmask in mask_components(und, host):
                        arrangements.extend(self._reps(cmask, v))
                for order in dict.fromkeys(arrangements):
                    cmask = mask_of(order)
                    starts = self._realize(order)
                    for sv in self._insert_positions(starts):
                        cand = self._repair_connected(cmask, order, starts,
                                                      v, sv)
                        cand = mask_cc(und, cand, v)
                        if cand not in seen:
                            seen.add(cand)
                            yield self.comp_mask(cand)
                continue
            # the incoming vertex may start a new component: drop all its
            # neighbors and keep the rest of the solution untouched
            cand = (smask & ~und[v]) | (1 << v)
            seen.add(cand)
            yield self.comp_mask(cand)
            tried: set[tuple] = set()
            for host in self._hosts(smask, v):
                comps = mask_components(und, host)
                for t_prev in bits(und[v] & host):
                    ci = next(c for c in comps if (c >> t_prev) & 1)
                    keep = host & ~ci & ~und[v]
                    for order in self._reps(ci, v):
                        key = (order, keep, t_prev)
                        if key in tried:
                            continue
                        tried.add(key)
                        starts = self._realize(order)
                        stp = starts[order.index(t_prev)]
                        for sv in self._insert_positions(starts):
                            if sv <= stp or sv - stp >= 1:
                                continue  # pinned interval precedes and overlaps v
                            part = self._repair_induced(ci, order, starts, v,
                                                        sv, t_prev)
                            cand = keep | part
                            if cand not in seen:
                                seen.add(cand)
                                yield self.comp_mask(cand)

    def comp_budget(self) -> int:
        # hosts per extender: the solution, the clique prunings, the single
        # deletions and the pair-unifying deletions; each host contributes at
        # most four arrangements per component with 5 insertion points per
        # member; actual calls stay far below this because candidates repeat
        n = self.ground_size
        hosts = (n * n) // 4 + 2 * n + 2
        if self.connected:
            return 20 * n * n * hosts + n
        return 40 * self.g.m * n * hosts + n

    def canonical_order(self, solution) -> list[int]:
        smask = mask_of(solution)
        order: list[int] = []
        for c in sorted(mask_components(self.g.und_mask, smask),
                        key=lambda c: c & -c):
            lay = self.component_layout(c)
            if lay is None:
                raise ValueError("not a proper interval vertex set")
            order.extend(lay)
        return order

    def _comp_mask(self, mask: int) -> int:
        if self.connected:
            return self._comp_connected(mask)
        return self._comp_hereditary(mask)

    def _adjacent_mask(self, mask: int) -> int:
        m = 0
        for u in bits(mask):
            m |= self.g.und_mask[u]
        return m


class ProperIntervalInduced(_ProperIntervalBase):
    variant = "pinterval-induced"
    connected = False


class ProperIntervalConnected(_ProperIntervalBase):
    variant = "pinterval-induced-connected"
    connected = True
