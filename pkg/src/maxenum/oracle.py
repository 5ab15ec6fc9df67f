"""Brute-force ground truth: all maximal solutions by subset sweep.

Deliberately uses only the plugin's membership predicate, never its
completion or neighboring functions, so it stays independent of the code
it checks.  Masks are visited by descending popcount; a mask below an
already-collected maximal solution is skipped without a predicate call.
"""

from __future__ import annotations

from .problems.base import tuple_of


class OracleCapError(ValueError):
    pass


def brute_force_maximal(problem, cap: int = 16) -> list[tuple[int, ...]]:
    """All inclusion-maximal solutions of the instance, sorted."""
    g = problem.ground_size
    if g > cap:
        raise OracleCapError(
            f"ground set of size {g} exceeds the brute-force cap of {cap}")
    order = sorted(range(1 << g), key=lambda m: (-m.bit_count(), m))
    maximal: list[int] = []
    for mask in order:
        if any(mask & ~m == 0 for m in maximal):
            continue
        if problem.sol(mask):
            maximal.append(mask)
    return sorted(tuple_of(m) for m in maximal)
