"""Completing one side of a decorated polytope from the other.

Two solvers are shipped.  The baseline enumerates every datum of the
right weight and keeps those that pass the MV check; the production
solver searches multiplicities ladder by ladder, pruning with the
condition that becomes settled as soon as an index is chosen, and closes
off with the handful of partitions the vertical-edge condition allows.
Both assert that exactly one completion exists and abort loudly if the
search ever contradicts that.

Results are memoized per (solver, side, datum); entries are immutable,
so the cache behaves as a pure function table.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .lusztig import (
    LusztigDatum,
    Partition,
    RealEntry,
    add_part,
    enumerate_data,
    remove_part,
    weight,
)
from .polytope import (
    DecoratedPolytope,
    PathPrefixes,
    mv_violations,
    part_size_ratio,
    path_prefixes,
)
from .roots import (
    HIGH,
    LOW,
    Algebra,
    RootVector,
    beta,
    delta_multiple,
    max_real_index,
)

__all__ = [
    "LEFT",
    "RIGHT",
    "ORACLE",
    "DFS",
    "SolverInvariantError",
    "NoCompletionError",
    "MultipleCompletionsError",
    "complete_from_left",
    "complete_from_right",
    "transition_l_to_r",
    "transition_r_to_l",
    "clear_cache",
]

LEFT = "left"
RIGHT = "right"

ORACLE = "oracle"
DFS = "dfs"


class SolverInvariantError(RuntimeError):
    """The completion search contradicted the expected uniqueness."""


class NoCompletionError(SolverInvariantError):
    """No datum of matching weight completes the given side."""


class MultipleCompletionsError(SolverInvariantError):
    """More than one completion was found where one was promised."""


_CACHE: dict[tuple[str, str, LusztigDatum], LusztigDatum] = {}


def clear_cache() -> None:
    _CACHE.clear()


def complete_from_left(left: LusztigDatum, solver: str = DFS) -> DecoratedPolytope:
    """The unique decorated polytope whose left datum is `left`."""
    return DecoratedPolytope(left, _partner(left, LEFT, solver))


def complete_from_right(right: LusztigDatum, solver: str = DFS) -> DecoratedPolytope:
    """The unique decorated polytope whose right datum is `right`."""
    return DecoratedPolytope(_partner(right, RIGHT, solver), right)


def transition_l_to_r(left: LusztigDatum, solver: str = DFS) -> LusztigDatum:
    """Right Lusztig datum of the polytope determined by a left datum."""
    return _partner(left, LEFT, solver)


def transition_r_to_l(right: LusztigDatum, solver: str = DFS) -> LusztigDatum:
    """Left Lusztig datum of the polytope determined by a right datum."""
    return _partner(right, RIGHT, solver)


def _partner(known: LusztigDatum, side: str, solver: str) -> LusztigDatum:
    if side not in (LEFT, RIGHT):
        raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {side!r}")
    key = (solver, side, known)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    if solver == ORACLE:
        found = _oracle_completions(known, side)
    elif solver == DFS:
        found = _dfs_completions(known, side)
    else:
        raise ValueError(f"unknown solver {solver!r}")
    if not found:
        raise NoCompletionError(f"no completion of the {side} datum {known}")
    if len(found) > 1:
        raise MultipleCompletionsError(
            f"{len(found)} completions of the {side} datum {known}"
        )
    _CACHE[key] = found[0]
    return found[0]


def _oracle_completions(known: LusztigDatum, side: str) -> list[LusztigDatum]:
    """Generate and test: every datum of the same weight, MV-checked."""
    kind = known.kind
    w = weight(known)
    K = max(2, 1 + max_real_index(kind, w))
    kp = path_prefixes(known, K)
    out = []
    for cand in enumerate_data(kind, w):
        cp = path_prefixes(cand, K)
        if side == LEFT:
            bad = mv_violations(kind, w, kp, cp, known.delta, cand.delta, K, True)
        else:
            bad = mv_violations(kind, w, cp, kp, cand.delta, known.delta, K, True)
        if not bad:
            out.append(cand)
    return out


def _family_choices(
    kind: Algebra,
    family: str,
    start: RootVector,
    K: int,
    settled_ok: Callable[[int, list[int], list[int]], bool],
) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], RootVector]]:
    """All prefix assignments of one ladder that fit under `start`.

    Yields (mults, prefix_a, prefix_b, residual) with arrays of length
    K+1.  settled_ok(k, pa, pb) is consulted once index k is fixed; a
    False verdict prunes the whole subtree below that choice, which is
    sound because later indices cannot change an already settled prefix.
    """
    pa = [0] * (K + 1)
    pb = [0] * (K + 1)
    mults = [0] * (K + 1)
    ladder = [beta(kind, family, k) for k in range(1, K + 1)]

    def rec(k: int, ra: int, rb: int) -> Iterator[
        tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], RootVector]
    ]:
        if k > K:
            yield tuple(mults), tuple(pa), tuple(pb), RootVector(ra, rb)
            return
        root = ladder[k - 1]
        top = min(
            ra // root.a if root.a else ra + rb,
            rb // root.b if root.b else ra + rb,
        )
        for m in range(top + 1):
            pa[k] = pa[k - 1] + m * root.a
            pb[k] = pb[k - 1] + m * root.b
            mults[k] = m
            if k >= 2 and not settled_ok(k, pa, pb):
                continue
            yield from rec(k + 1, ra - m * root.a, rb - m * root.b)

    yield from rec(1, start.a, start.b)


def _ladder_defect(kind: Algebra, v: RootVector) -> int:
    """How far v leans to the alpha1 side of the imaginary direction.

    Low-ladder roots have positive defect, high-ladder roots negative,
    delta has zero, so the sign decides which ladder can absorb v.
    """
    if kind is Algebra.SL2_HAT:
        return v.b - v.a
    return v.b - 2 * v.a


def _delta_candidates(
    kind: Algebra, lam: Partition, n: int, d1: RootVector
) -> list[Partition]:
    """The partitions of n the vertical-edge condition could accept.

    Either both decorations agree, or the unknown one is the known
    partition lam with one part of the prescribed gap size added or
    removed; no other shape can pass the final check.
    """
    out: list[Partition] = []
    if sum(lam) == n:
        out.append(lam)
    num, den = part_size_ratio(kind, d1)
    if num > 0 and num % den == 0:
        s = num // den
        if s in lam and sum(lam) - s == n:
            cand = remove_part(lam, s)
            if cand not in out:
                out.append(cand)
        if sum(lam) + s == n:
            cand = add_part(lam, s)
            if cand not in out:
                out.append(cand)
    return out


def _assemble(
    kind: Algebra,
    low_mults: tuple[int, ...],
    high_mults: tuple[int, ...],
    parts: Partition,
) -> LusztigDatum:
    real = [
        RealEntry(LOW, k, m) for k, m in enumerate(low_mults) if k >= 1 and m
    ] + [RealEntry(HIGH, k, m) for k, m in enumerate(high_mults) if k >= 1 and m]
    return LusztigDatum(kind, tuple(real), parts)


def _dfs_completions(known: LusztigDatum, side: str) -> list[LusztigDatum]:
    """Pruned search for every completion of one side.

    The ladder whose prefixes enter the settled lower-path condition is
    assigned first, pruning index by index; the other ladder follows the
    same way against the upper-path condition; the leftover weight must
    be imaginary and admits at most three candidate partitions.  Every
    assembled pair still runs the full MV check, so pruning only ever
    affects speed, not the answer.
    """
    kind = known.kind
    w = weight(known)
    K = max(2, 1 + max_real_index(kind, w))
    kp = path_prefixes(known, K)
    sols: list[LusztigDatum] = []

    if side == LEFT:
        # Unknown right datum: its low ladder pairs with the known high
        # prefixes in condition 1, its high ladder with the known low
        # prefixes in condition 2.
        def cond1(k: int, pa: list[int], pb: list[int]) -> bool:
            return max(kp.high_b[k] - pb[k - 1], pa[k] - kp.high_a[k - 1]) == 0

        def cond2(k: int, qa: list[int], qb: list[int]) -> bool:
            return min(qa[k - 1] - kp.low_a[k], kp.low_b[k - 1] - qb[k]) == 0

        for low_m, pa1, pb1, res1 in _family_choices(kind, LOW, w, K, cond1):
            if _ladder_defect(kind, res1) > 0:
                continue
            for high_m, pa2, pb2, res2 in _family_choices(kind, HIGH, res1, K, cond2):
                n = delta_multiple(kind, res2)
                if n is None:
                    continue
                d1 = RootVector(pa1[K] - kp.high_a[K], pb1[K] - kp.high_b[K])
                cp = PathPrefixes(pa1, pb1, pa2, pb2)
                for parts in _delta_candidates(kind, known.delta, n, d1):
                    if not mv_violations(
                        kind, w, kp, cp, known.delta, parts, K, True
                    ):
                        sols.append(_assemble(kind, low_m, high_m, parts))
    else:
        # Unknown left datum: mirror image, high ladder first.
        def cond1(k: int, pa: list[int], pb: list[int]) -> bool:
            return max(pb[k] - kp.low_b[k - 1], kp.low_a[k] - pa[k - 1]) == 0

        def cond2(k: int, qa: list[int], qb: list[int]) -> bool:
            return min(kp.high_a[k - 1] - qa[k], qb[k - 1] - kp.high_b[k]) == 0

        for high_m, pa1, pb1, res1 in _family_choices(kind, HIGH, w, K, cond1):
            if _ladder_defect(kind, res1) < 0:
                continue
            for low_m, pa2, pb2, res2 in _family_choices(kind, LOW, res1, K, cond2):
                n = delta_multiple(kind, res2)
                if n is None:
                    continue
                d1 = RootVector(kp.low_a[K] - pa1[K], kp.low_b[K] - pb1[K])
                cp = PathPrefixes(pa2, pb2, pa1, pb1)
                for parts in _delta_candidates(kind, known.delta, n, d1):
                    if not mv_violations(
                        kind, w, cp, kp, parts, known.delta, K, True
                    ):
                        sols.append(_assemble(kind, low_m, high_m, parts))
    return sols
