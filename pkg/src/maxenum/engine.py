"""Generic solution-graph traversal with a visited-solution dictionary.

The engine knows nothing about graphs: a problem exposes a ground set, a
``first_solution`` starter, and a ``neighbors`` function returning maximal
solutions.  The traversal is an iterative DFS (explicit stack, so deep
solution graphs cannot overflow recursion) that emits each solution exactly
once, in pre-order at even depth and post-order at odd depth to keep the
gap between consecutive outputs bounded by a constant number of
``neighbors`` calls.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Callable, Optional


class PartialOutputError(RuntimeError):
    """The emission sink failed mid-run; ``emitted`` solutions got out."""

    def __init__(self, emitted: int, cause: BaseException):
        super().__init__(f"solution sink failed after {emitted} emissions: {cause!r}")
        self.emitted = emitted


@dataclass
class Counters:
    """Run instrumentation; every field is monotone during a run."""

    solutions_emitted: int = 0
    neighbors_calls: int = 0
    comp_calls: int = 0
    dict_operations: int = 0
    max_comp_gap: int = 0        # most comp calls between consecutive emissions
    roots_found: int = 0         # parent-forest traversal only
    child_checks_passed: int = 0  # parent-forest traversal only
    _last_mark: Optional[int] = field(default=None, repr=False)

    def note_emission(self, comp_now: int) -> None:
        if self._last_mark is not None:
            self.max_comp_gap = max(self.max_comp_gap, comp_now - self._last_mark)
        self._last_mark = comp_now


class _Node:
    __slots__ = ("keys", "kids", "terminal")

    def __init__(self):
        self.keys: list[int] = []
        self.kids: list[_Node] = []
        self.terminal = False


class SolutionDict:
    """Trie over sorted element-id sequences with binary-searched children.

    One root-to-leaf path per stored solution, so the node count is at most
    1 + sum of the stored solution sizes.
    """

    def __init__(self):
        self.root = _Node()
        self.node_count = 1
        self.operations = 0

    @staticmethod
    def _check_sorted(seq) -> None:
        for a, b in zip(seq, seq[1:]):
            if a >= b:
                raise ValueError("solution keys must be strictly ascending")

    def insert(self, seq) -> bool:
        """Insert a sorted id sequence; True iff it was not present before."""
        self._check_sorted(seq)
        self.operations += 1
        node = self.root
        for e in seq:
            i = bisect_left(node.keys, e)
            if i < len(node.keys) and node.keys[i] == e:
                node = node.kids[i]
            else:
                child = _Node()
                node.keys.insert(i, e)
                node.kids.insert(i, child)
                self.node_count += 1
                node = child
        if node.terminal:
            return False
        node.terminal = True
        return True

    def contains(self, seq) -> bool:
        self._check_sorted(seq)
        self.operations += 1
        node = self.root
        for e in seq:
            i = bisect_left(node.keys, e)
            if i == len(node.keys) or node.keys[i] != e:
                return False
            node = node.kids[i]
        return node.terminal


def enumerate_exp(problem, emit: Optional[Callable] = None,
                  limit: Optional[int] = None) -> Counters:
    """Traverse the solution graph of ``problem``, emitting every maximal
    solution exactly once.

    ``neighbors`` is invoked exactly once per distinct solution; duplicate
    and already-seen candidates are filtered through the trie dictionary.
    ``emit`` receives each solution as a sorted tuple; a failing sink aborts
    the run with PartialOutputError.  ``limit`` stops the run after that
    many emissions (the emitted prefix is deterministic).
    """
    counters = Counters()
    if limit is not None and limit <= 0:
        return counters
    comp_base = problem.comp_calls
    seen = SolutionDict()

    done = False

    def do_emit(sol):
        nonlocal done
        counters.note_emission(problem.comp_calls - comp_base)
        if emit is not None:
            try:
                emit(sol)
            except Exception as exc:
                raise PartialOutputError(counters.solutions_emitted, exc) from exc
        counters.solutions_emitted += 1
        if limit is not None and counters.solutions_emitted >= limit:
            done = True

    first = problem.first_solution()
    seen.insert(first)
    # frame: [solution, depth, candidate iterator or None]
    stack: list[list] = [[first, 0, None]]
    do_emit(first)  # depth 0 is even: pre-order

    while stack and not done:
        frame = stack[-1]
        sol, depth, it = frame
        if it is None:
            counters.neighbors_calls += 1
            it = iter(problem.neighbors(sol))
            frame[2] = it
        advanced = False
        for cand in it:
            if seen.insert(cand):
                child_depth = depth + 1
                stack.append([cand, child_depth, None])
                if child_depth % 2 == 0:
                    do_emit(cand)
                advanced = True
                break
        if not advanced and not done:
            stack.pop()
            if depth % 2 == 1:
                do_emit(sol)

    counters.comp_calls = problem.comp_calls - comp_base
    counters.dict_operations = seen.operations
    return counters
