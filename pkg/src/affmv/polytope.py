"""Decorated pseudo-Weyl polytopes and the MV conditions.

A decorated polytope is a pair of Lusztig data of equal weight.  Each
datum spans one boundary path of the polygon: the low ladder climbs from
the bottom vertex, the high ladder descends from the top, and the
imaginary partition decorates the vertical edge between them.  The four
conditions checked here cut out exactly the pairs that glue into one
consistent polygon with matching decorations.

All checks are evaluated on integer prefix-sum arrays truncated at an
index just past the support of both data; beyond that index every prefix
is constant, so the truncated scan is equivalent to the infinite one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .lusztig import LusztigDatum, Partition, largest_part, remove_part
from .lusztig import weight as datum_weight
from .roots import HIGH, LOW, Algebra, RootVector, beta_high, beta_low

__all__ = [
    "DecoratedPolytope",
    "VertexFan",
    "PathPrefixes",
    "MVViolation",
    "MVVerdict",
    "truncation_index",
    "path_prefixes",
    "vertices",
    "mv_violations",
    "is_mv",
    "part_size_ratio",
]


@dataclass(frozen=True)
class DecoratedPolytope:
    """A pair of Lusztig data of equal weight, left and right."""

    left: LusztigDatum
    right: LusztigDatum

    def __post_init__(self) -> None:
        if self.left.kind is not self.right.kind:
            raise ValueError("the two data must belong to the same algebra")
        if datum_weight(self.left) != datum_weight(self.right):
            raise ValueError(
                f"weight mismatch: left {datum_weight(self.left)}, "
                f"right {datum_weight(self.right)}"
            )

    @property
    def kind(self) -> Algebra:
        return self.left.kind

    @property
    def weight(self) -> RootVector:
        return datum_weight(self.left)


class PathPrefixes(NamedTuple):
    """Coordinatewise prefix sums of the two ladders of one datum.

    Index k holds the sum of the first k ladder entries (with
    multiplicity); all four arrays have length upto+1 and are constant
    from the datum's support onward.
    """

    low_a: tuple[int, ...]
    low_b: tuple[int, ...]
    high_a: tuple[int, ...]
    high_b: tuple[int, ...]


def path_prefixes(d: LusztigDatum, upto: int) -> PathPrefixes:
    low = {entry.k: entry.mult for entry in d.real if entry.family == LOW}
    high = {entry.k: entry.mult for entry in d.real if entry.family == HIGH}
    la = [0] * (upto + 1)
    lb = [0] * (upto + 1)
    ha = [0] * (upto + 1)
    hb = [0] * (upto + 1)
    for k in range(1, upto + 1):
        la[k], lb[k] = la[k - 1], lb[k - 1]
        ha[k], hb[k] = ha[k - 1], hb[k - 1]
        m = low.get(k, 0)
        if m:
            r = beta_low(d.kind, k)
            la[k] += m * r.a
            lb[k] += m * r.b
        m = high.get(k, 0)
        if m:
            r = beta_high(d.kind, k)
            ha[k] += m * r.a
            hb[k] += m * r.b
    return PathPrefixes(tuple(la), tuple(lb), tuple(ha), tuple(hb))


def truncation_index(P: DecoratedPolytope) -> int:
    """One past the largest supported ladder index, at least 2."""
    return max(2, 1 + max(P.left.max_support(), P.right.max_support()))


@dataclass(frozen=True)
class VertexFan:
    """The four vertex paths of a decorated polytope, truncated at K.

    mu_r climbs the right datum's low ladder from the bottom vertex,
    mu_r_top descends its high ladder from the top vertex; mu_l and
    mu_l_top do the same with the ladders of the left datum swapped.
    The *_inf values are the stable endpoints of the four paths; the two
    differences r_top_inf - r_inf and l_top_inf - l_inf are the vertical
    edges carrying the partitions.
    """

    mu_r: tuple[RootVector, ...]
    mu_r_top: tuple[RootVector, ...]
    mu_l: tuple[RootVector, ...]
    mu_l_top: tuple[RootVector, ...]
    r_inf: RootVector
    r_top_inf: RootVector
    l_inf: RootVector
    l_top_inf: RootVector


def vertices(P: DecoratedPolytope) -> VertexFan:
    K = truncation_index(P)
    w = P.weight
    L = path_prefixes(P.left, K)
    R = path_prefixes(P.right, K)
    mu_r = tuple(RootVector(R.low_a[k], R.low_b[k]) for k in range(K + 1))
    mu_r_top = tuple(w - RootVector(R.high_a[k], R.high_b[k]) for k in range(K + 1))
    mu_l = tuple(RootVector(L.high_a[k], L.high_b[k]) for k in range(K + 1))
    mu_l_top = tuple(w - RootVector(L.low_a[k], L.low_b[k]) for k in range(K + 1))
    return VertexFan(
        mu_r,
        mu_r_top,
        mu_l,
        mu_l_top,
        mu_r[K],
        mu_r_top[K],
        mu_l[K],
        mu_l_top[K],
    )


class MVViolation(NamedTuple):
    condition: int
    k: int | None
    note: str


@dataclass(frozen=True)
class MVVerdict:
    ok: bool
    violations: tuple[MVViolation, ...]

    def __bool__(self) -> bool:
        return self.ok


def part_size_ratio(kind: Algebra, diff: RootVector) -> tuple[int, int]:
    """The prescribed vertical-edge gap as an exact fraction (num, den).

    For a difference vector (a, b) between the two lower path endpoints
    the decorations may differ by one part of this size.
    """
    if kind is Algebra.SL2_HAT:
        return diff.b - diff.a, 1
    return diff.b - 2 * diff.a, 2


def mv_violations(
    kind: Algebra,
    w: RootVector,
    L: PathPrefixes,
    R: PathPrefixes,
    left_delta: Partition,
    right_delta: Partition,
    upto: int,
    first_only: bool = False,
) -> list[MVViolation]:
    """All MV condition failures for a pair given as prefix arrays.

    Condition 1 ties each left high-ladder prefix to the neighbouring
    right low-ladder prefix (the two lower boundary paths trace one
    polygon), condition 2 does the same for the upper paths, condition 3
    matches the two vertical-edge partitions up to one part of the
    prescribed size, and condition 4 bounds the largest parts by that
    size.  With first_only the scan stops at the first failure.
    """
    bad: list[MVViolation] = []
    for k in range(2, upto + 1):
        m = max(L.high_b[k] - R.low_b[k - 1], R.low_a[k] - L.high_a[k - 1])
        if m != 0:
            bad.append(MVViolation(1, k, f"max is {m}, expected 0"))
            if first_only:
                return bad
        m = min(R.high_a[k - 1] - L.low_a[k], L.low_b[k - 1] - R.high_b[k])
        if m != 0:
            bad.append(MVViolation(2, k, f"min is {m}, expected 0"))
            if first_only:
                return bad

    # Stable endpoints of the four paths; d1 spans the two bottom
    # vertical-edge feet, d2 the two top ones.
    d1 = RootVector(R.low_a[upto] - L.high_a[upto], R.low_b[upto] - L.high_b[upto])
    d2 = RootVector(L.low_a[upto] - R.high_a[upto], L.low_b[upto] - R.high_b[upto])
    num, den = part_size_ratio(kind, d1)

    if d1.a * d2.b - d1.b * d2.a == 0:
        if left_delta != right_delta:
            bad.append(
                MVViolation(3, None, "parallel vertical edges need equal partitions")
            )
            if first_only:
                return bad
    else:
        fail = None
        if num <= 0 or num % den:
            fail = f"prescribed gap {num}/{den} is not a positive integer"
        elif sum(left_delta) == sum(right_delta):
            fail = "partitions of equal size may not differ"
        else:
            s = num // den
            if sum(left_delta) > sum(right_delta):
                big, small = left_delta, right_delta
            else:
                big, small = right_delta, left_delta
            if s not in big:
                fail = f"larger partition has no part of size {s} to drop"
            elif remove_part(big, s) != small:
                fail = f"partitions do not differ by exactly one part of size {s}"
        if fail is not None:
            bad.append(MVViolation(3, None, fail))
            if first_only:
                return bad

    for side, parts in (("left", left_delta), ("right", right_delta)):
        top = largest_part(parts)
        if den * top > num:
            bad.append(
                MVViolation(
                    4, None, f"largest {side} part {top} exceeds the gap {num}/{den}"
                )
            )
            if first_only:
                return bad
    return bad


def is_mv(P: DecoratedPolytope) -> MVVerdict:
    """Full verdict with every violated condition listed."""
    K = truncation_index(P)
    L = path_prefixes(P.left, K)
    R = path_prefixes(P.right, K)
    found = mv_violations(
        P.kind, P.weight, L, R, P.left.delta, P.right.delta, K
    )
    return MVVerdict(not found, tuple(found))
