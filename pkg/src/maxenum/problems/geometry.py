"""Maximal obstacle-free convex hull plugins over integer point sets.

Solutions are subsets of the interest points whose closed convex hull
contains no obstacle (boundary counts as containment); the connected
variant additionally carries a graph on the interest points and demands
connectivity.  All predicates are exact integer arithmetic: containment
is tested through segments and non-degenerate triangles of the candidate
set, never through floating point.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from ..graphs import Graph, bits, mask_cc, mask_components, mask_of
from .base import Problem

COORD_LIMIT = 10 ** 6

Point = tuple[int, int]


class PointFormatError(ValueError):
    """Raised for malformed point-set input; message names the line."""


def orient(a: Point, b: Point, c: Point) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def on_segment(p: Point, a: Point, b: Point) -> bool:
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def point_in_hull(p: Point, pts: list[Point]) -> bool:
    """Closed-hull containment: p lies on a segment or inside a triangle
    spanned by pts (Caratheodory suffices in the plane)."""
    for a in pts:
        if a == p:
            return True
    for a, b in combinations(pts, 2):
        if on_segment(p, a, b):
            return True
    for a, b, c in combinations(pts, 3):
        if orient(a, b, c) == 0:
            continue
        o1, o2, o3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
        if (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0):
            return True
    return False


class PointSetInstance:
    """Interest points, obstacles, and an optional graph for connectivity."""

    def __init__(self, interest: list[Point], obstacles: list[Point],
                 graph: Optional[Graph] = None):
        for x, y in list(interest) + list(obstacles):
            if abs(x) > COORD_LIMIT or abs(y) > COORD_LIMIT:
                raise ValueError(f"coordinate out of range: ({x},{y})")
        seen = set()
        for p in list(interest) + list(obstacles):
            if p in seen:
                raise ValueError(f"duplicate point {p}")
            seen.add(p)
        if graph is not None and graph.n != len(interest):
            raise ValueError("graph order must match the interest point count")
        self.interest = list(interest)
        self.obstacles = list(obstacles)
        self.graph = graph


def load_points(text: str) -> PointSetInstance:
    """Parse "j h [connected]", then j interest and h obstacle lines "x y",
    then edge lines "u v" when the connected marker is present."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line))
    if not rows:
        raise PointFormatError("line 0: missing header line 'j h [connected]'")
    hline, header = rows[0]
    parts = header.split()
    connected = False
    if len(parts) == 3 and parts[2] == "connected":
        connected = True
        parts = parts[:2]
    if len(parts) != 2:
        raise PointFormatError(f"line {hline}: bad header {header!r}")
    try:
        j, h = int(parts[0]), int(parts[1])
    except ValueError:
        raise PointFormatError(f"line {hline}: bad header {header!r}") from None

    body = rows[1:]
    if len(body) < j + h:
        raise PointFormatError(f"line {hline}: expected {j + h} point lines")

    def parse_point(lineno, line):
        fields = line.split()
        if len(fields) != 2:
            raise PointFormatError(f"line {lineno}: expected 'x y', got {line!r}")
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise PointFormatError(
                f"line {lineno}: expected 'x y', got {line!r}") from None

    interest = [parse_point(*row) for row in body[:j]]
    obstacles = [parse_point(*row) for row in body[j:j + h]]
    graph = None
    if connected:
        edges = []
        for lineno, line in body[j + h:]:
            fields = line.split()
            if len(fields) != 2:
                raise PointFormatError(
                    f"line {lineno}: expected edge 'u v', got {line!r}")
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise PointFormatError(
                    f"line {lineno}: expected edge 'u v', got {line!r}") from None
            if not (0 <= u < j and 0 <= v < j):
                raise PointFormatError(
                    f"line {lineno}: vertex id out of range in {line!r}")
            edges.append((u, v))
        graph = Graph(j, edges)
    elif len(body) > j + h:
        lineno = body[j + h][0]
        raise PointFormatError(f"line {lineno}: unexpected trailing line")
    try:
        return PointSetInstance(interest, obstacles, graph)
    except ValueError as exc:
        raise PointFormatError(str(exc)) from None


class Hulls(Problem):
    variant = "hulls"
    ground_kind = "v"

    def __init__(self, inst: PointSetInstance):
        super().__init__(len(inst.interest))
        self.inst = inst
        self._inside_cache: dict[int, tuple[int, ...]] = {}

    def obstacles_inside(self, mask: int) -> tuple[int, ...]:
        """Indices of obstacles inside the closed hull of the masked points."""
        hit = self._inside_cache.get(mask)
        if hit is None:
            pts = [self.inst.interest[i] for i in bits(mask)]
            hit = tuple(i for i, p in enumerate(self.inst.obstacles)
                        if point_in_hull(p, pts))
            self._inside_cache[mask] = hit
        return hit

    def _solution_mask(self, mask: int) -> bool:
        return not self.obstacles_inside(mask)

    def _comp_mask(self, mask: int) -> int:
        return self._comp_hereditary(mask)

    def shadows(self, solution, v: int) -> list[tuple[int, ...]]:
        """Obstacle-free split pieces of the solution as seen when adding v.

        The smallest-index obstacle inside the current hull splits the piece
        by the line through v and the obstacle; points on the line are
        discarded; both sides recurse until obstacle-free.
        """
        smask = mask_of(solution)
        vb = 1 << v
        pv = self.inst.interest[v]
        out: list[int] = []

        def rec(part: int):
            inside = self.obstacles_inside(part | vb)
            if not inside:
                out.append(part)
                return
            ob = self.inst.obstacles[inside[0]]
            above = below = 0
            for w in bits(part):
                o = orient(pv, ob, self.inst.interest[w])
                if o > 0:
                    above |= 1 << w
                elif o < 0:
                    below |= 1 << w
            rec(above)
            rec(below)

        rec(smask)
        uniq = list(dict.fromkeys(out))
        return [tuple(bits(m)) for m in uniq]

    def _candidate(self, part_mask: int, v: int) -> int:
        return part_mask | (1 << v)

    def _neighbor_masks(self, smask: int):
        stuple = tuple(bits(smask))
        for v in range(self.ground_size):
            if (smask >> v) & 1:
                continue
            for piece in self.shadows(stuple, v):
                yield self.comp_mask(self._candidate(mask_of(piece), v))

    def comp_budget(self) -> int:
        return self.ground_size * (len(self.inst.obstacles) + 1)

    # these plugins rank closeness by raw intersection, not order prefixes
    def prefix_overlap(self, elems, target) -> int:
        return len(set(elems) & set(target))

    def canonical_order(self, solution):
        raise NotImplementedError("hull solutions carry no canonical order")


class HullsConnected(Hulls):
    variant = "hulls-connected"

    def __init__(self, inst: PointSetInstance):
        if inst.graph is None:
            raise ValueError(f"{self.variant} needs a graph on the points")
        super().__init__(inst)
        self.g = inst.graph

    def _solution_mask(self, mask: int) -> bool:
        if len(mask_components(self.g.und_mask, mask)) > 1:
            return False
        return not self.obstacles_inside(mask)

    def _adjacent_mask(self, mask: int) -> int:
        m = 0
        for u in bits(mask):
            m |= self.g.und_mask[u]
        return m

    def _comp_mask(self, mask: int) -> int:
        return self._comp_connected(mask)

    def _candidate(self, part_mask: int, v: int) -> int:
        return mask_cc(self.g.und_mask, part_mask | (1 << v), v)

    def prefix_overlap(self, elems, target) -> int:
        # closeness is the largest connected piece of the intersection
        inter = mask_of(set(elems) & set(target))
        if not inter:
            return 0
        return max(c.bit_count()
                   for c in mask_components(self.g.und_mask, inter))
