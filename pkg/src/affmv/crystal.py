"""Crystal operators on decorated polytopes.

An element is wrapped around a decorated polytope; the two Lusztig data
stay synchronized through the transition solver.  Raising and lowering
operators touch the multiplicity of one extreme root on one side and
re-complete the other side; the starred operators do the same with the
sides exchanged.  Reflections are realized by twisting the datum whose
extreme multiplicity vanishes and re-completing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lusztig import LusztigDatum, PreconditionViolated, datum, twist_s, twist_tau
from .polytope import DecoratedPolytope
from .roots import ALPHA0, ALPHA1, HIGH, LOW, ZERO, Algebra, RootVector, cartan_pair
from .transition import complete_from_left, complete_from_right

__all__ = [
    "CrystalElement",
    "CrystalGraph",
    "lowest",
    "e",
    "f",
    "e_star",
    "f_star",
    "phi",
    "eps",
    "phi_star",
    "eps_star",
    "star",
    "tau",
    "saito",
    "saito_star",
    "crystal_graph",
]


@dataclass(frozen=True)
class CrystalElement:
    """A crystal element, carried by its decorated polytope."""

    polytope: DecoratedPolytope

    @property
    def kind(self) -> Algebra:
        return self.polytope.kind

    @property
    def left(self) -> LusztigDatum:
        return self.polytope.left

    @property
    def right(self) -> LusztigDatum:
        return self.polytope.right

    @property
    def weight(self) -> RootVector:
        return self.polytope.weight


def lowest(kind: Algebra) -> CrystalElement:
    """The element of weight zero every other one is raised from."""
    zero = datum(kind)
    return CrystalElement(DecoratedPolytope(zero, zero))


def _check_node(i: int) -> None:
    if i not in (0, 1):
        raise ValueError(f"node index must be 0 or 1, got {i!r}")


def _bump(d: LusztigDatum, family: str, by: int) -> LusztigDatum:
    return d.with_mult(family, 1, d.mult(family, 1) + by)


def e(i: int, b: CrystalElement) -> CrystalElement:
    """Raise along alpha_i: bump one extreme multiplicity, re-complete."""
    _check_node(i)
    if i == 0:
        return CrystalElement(complete_from_right(_bump(b.right, HIGH, 1)))
    return CrystalElement(complete_from_left(_bump(b.left, LOW, 1)))


def f(i: int, b: CrystalElement) -> CrystalElement | None:
    """Lower along alpha_i, or None at the bottom of the string."""
    _check_node(i)
    if phi(i, b) == 0:
        return None
    if i == 0:
        return CrystalElement(complete_from_right(_bump(b.right, HIGH, -1)))
    return CrystalElement(complete_from_left(_bump(b.left, LOW, -1)))


def e_star(i: int, b: CrystalElement) -> CrystalElement:
    """Raising operator conjugated by the side-swapping involution."""
    _check_node(i)
    if i == 0:
        return CrystalElement(complete_from_left(_bump(b.left, HIGH, 1)))
    return CrystalElement(complete_from_right(_bump(b.right, LOW, 1)))


def f_star(i: int, b: CrystalElement) -> CrystalElement | None:
    """Lowering operator conjugated by the side-swapping involution."""
    _check_node(i)
    if phi_star(i, b) == 0:
        return None
    if i == 0:
        return CrystalElement(complete_from_left(_bump(b.left, HIGH, -1)))
    return CrystalElement(complete_from_right(_bump(b.right, LOW, -1)))


def phi(i: int, b: CrystalElement) -> int:
    """Number of times f_i applies, read off one extreme multiplicity."""
    _check_node(i)
    return b.right.mult(HIGH, 1) if i == 0 else b.left.mult(LOW, 1)


def eps(i: int, b: CrystalElement) -> int:
    """phi_i minus the coroot pairing with the weight; may be negative."""
    return phi(i, b) - cartan_pair(b.kind, i, b.weight)


def phi_star(i: int, b: CrystalElement) -> int:
    _check_node(i)
    return b.left.mult(HIGH, 1) if i == 0 else b.right.mult(LOW, 1)


def eps_star(i: int, b: CrystalElement) -> int:
    return phi_star(i, b) - cartan_pair(b.kind, i, b.weight)


def star(b: CrystalElement) -> CrystalElement:
    """Kashiwara involution: exchange the two Lusztig data."""
    return CrystalElement(DecoratedPolytope(b.right, b.left))


def tau(b: CrystalElement) -> CrystalElement:
    """Diagram flip, untwisted algebra only: flip both data, swap sides."""
    return CrystalElement(
        DecoratedPolytope(twist_tau(b.right), twist_tau(b.left))
    )


def saito(i: int, b: CrystalElement) -> CrystalElement:
    """Reflection at node i, defined when phi_i(b) = 0.

    The right datum twists through s_i and becomes the new left datum;
    the new right datum is whatever completes it.
    """
    if phi(i, b) != 0:
        raise PreconditionViolated(f"reflection at {i} needs phi_{i} = 0, got {phi(i, b)}")
    if i == 0:
        return CrystalElement(complete_from_left(twist_s(b.right, 0)))
    return CrystalElement(complete_from_right(twist_s(b.left, 1)))


def saito_star(i: int, b: CrystalElement) -> CrystalElement:
    """Reflection conjugated by star, defined when phi_i*(b) = 0."""
    if phi_star(i, b) != 0:
        raise PreconditionViolated(
            f"starred reflection at {i} needs phi_{i}* = 0, got {phi_star(i, b)}"
        )
    if i == 0:
        return CrystalElement(complete_from_right(twist_s(b.left, 0)))
    return CrystalElement(complete_from_left(twist_s(b.right, 1)))


@dataclass(frozen=True)
class CrystalGraph:
    """Breadth-first slice of the crystal below a raising depth.

    Nodes are unique elements in discovery order; edges record every
    raising-operator application from nodes strictly inside the depth
    bound, so both endpoints always lie in `nodes`.  node_weights tracks
    the sum of the simple roots applied along the discovery path,
    independently of the polytope weights.
    """

    kind: Algebra
    depth: int
    nodes: tuple[CrystalElement, ...]
    node_depths: tuple[int, ...]
    node_weights: tuple[RootVector, ...]
    edges: tuple[tuple[int, str, int], ...]

    def node_index(self, b: CrystalElement) -> int:
        return self.nodes.index(b)


_RAISERS: tuple[tuple[str, int, bool, RootVector], ...] = (
    ("e0", 0, False, ALPHA0),
    ("e1", 1, False, ALPHA1),
    ("e0*", 0, True, ALPHA0),
    ("e1*", 1, True, ALPHA1),
)


def crystal_graph(kind: Algebra, depth: int) -> CrystalGraph:
    """All elements within `depth` raising steps of the lowest element."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth!r}")
    start = lowest(kind)
    nodes = [start]
    index = {start: 0}
    node_depths = [0]
    node_weights = [ZERO]
    edges: list[tuple[int, str, int]] = []
    frontier = [0]
    for level in range(depth):
        new_frontier: list[int] = []
        for src in frontier:
            b = nodes[src]
            for label, i, starred, alpha in _RAISERS:
                target = e_star(i, b) if starred else e(i, b)
                at = index.get(target)
                if at is None:
                    at = len(nodes)
                    index[target] = at
                    nodes.append(target)
                    node_depths.append(level + 1)
                    node_weights.append(node_weights[src] + alpha)
                    new_frontier.append(at)
                edges.append((src, label, at))
        frontier = new_frontier
    return CrystalGraph(
        kind,
        depth,
        tuple(nodes),
        tuple(node_depths),
        tuple(node_weights),
        tuple(edges),
    )
