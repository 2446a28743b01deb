"""Toroidal quotients of the infinite lattice by sublattices of block translations.

A rank-2 sublattice with Hermite-normal-form basis t1 = (a, 0), t2 = (c, d)
acts on block coordinates; the quotient identifies vertices whose (i, j)
differ by a lattice vector.  Valid quotients are finite graphs with 3*det
vertices and 6*det edges that model periodic patterns on the infinite graph:
a vertex set on a quotient lifts to a periodic set with the same density.

``validate_quotient`` checks the stronger soundness condition used by the
density searches: every breadth-first ball of a given radius in the quotient
must be isomorphic, via the canonical projection, to the corresponding ball
of the infinite lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import FiniteGraph
from .lattice import VClass, VertexAddr, tb_neighbors


class DegenerateQuotientError(ValueError):
    """The sublattice folds some neighborhood onto itself (parallel edges)."""


@dataclass(frozen=True)
class LatticeQuotient:
    """Hermite-normal-form sublattice basis (a, 0), (c, d) with 0 <= c < a."""

    a: int
    c: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.d < 1:
            raise ValueError(f"lattice basis needs a, d >= 1, got a={self.a} d={self.d}")
        if not 0 <= self.c < self.a:
            raise ValueError(f"shear must satisfy 0 <= c < a, got c={self.c} a={self.a}")

    @property
    def det(self) -> int:
        return self.a * self.d

    def reduce(self, i: int, j: int) -> tuple[int, int]:
        """Canonical representative of block coordinate (i, j) modulo the lattice."""
        q, j = divmod(j, self.d)
        return (i - q * self.c) % self.a, j

    def reduce_addr(self, addr: VertexAddr) -> VertexAddr:
        i, j = self.reduce(addr.i, addr.j)
        return VertexAddr(addr.cls, i, j)

    def __str__(self):
        return f"({self.a},{self.c},{self.d})"


def quotient_labels(q: LatticeQuotient) -> list[VertexAddr]:
    """Canonical orbit representatives, sorted in (cls, i, j) order."""
    return sorted(
        VertexAddr(cls, i, j)
        for cls in (VClass.W, VClass.U, VClass.V)
        for i in range(q.a)
        for j in range(q.d)
    )


def build_quotient(q: LatticeQuotient) -> FiniteGraph:
    """Quotient graph on the 3*det orbit representatives.

    Raises :class:`DegenerateQuotientError` when two infinite-lattice
    neighbors of some vertex fall into the same orbit (the quotient would
    need a parallel edge) or a neighbor falls onto the vertex itself.
    """
    labels = quotient_labels(q)
    index = {lab: k for k, lab in enumerate(labels)}
    adj = []
    for lab in labels:
        reduced = [q.reduce_addr(nb) for nb in tb_neighbors(lab)]
        if len(set(reduced)) != len(reduced) or lab in reduced:
            raise DegenerateQuotientError(
                f"quotient {q} folds the neighborhood of {lab}"
            )
        adj.append([index[r] for r in reduced])
    return FiniteGraph(adj, labels=labels)


def tb_ball(root: VertexAddr, radius: int) -> dict[VertexAddr, int]:
    """Breadth-first distances within the given radius in the infinite lattice."""
    dist = {root: 0}
    frontier = [root]
    for step in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for y in tb_neighbors(x):
                if y not in dist:
                    dist[y] = step
                    nxt.append(y)
        frontier = nxt
    return dist


def validate_quotient(q: LatticeQuotient, radius: int) -> bool:
    """True iff every radius-ball of the quotient matches the infinite lattice.

    The canonical projection must be injective on each infinite ball and must
    not create extra adjacencies between ball members; this makes any local
    condition of the given radius transfer exactly between the quotient and
    the periodic lift.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    try:
        g = build_quotient(q)
    except DegenerateQuotientError:
        return False
    for root in g.labels:
        ball = tb_ball(root, radius)
        projected = {}
        for x in ball:
            px = q.reduce_addr(x)
            if px in projected:
                return False  # projection folds two ball vertices together
            projected[px] = x
        for x in ball:
            nbrs_x = set(tb_neighbors(x))
            vx = g.index_of(q.reduce_addr(x))
            for nb_idx in g.adj[vx]:
                nb_lab = g.labels[nb_idx]
                if nb_lab in projected and projected[nb_lab] not in nbrs_x:
                    return False  # quotient edge with no infinite counterpart
    return True


def enumerate_hnf(max_det: int) -> list[LatticeQuotient]:
    """All HNF sublattices with determinant 1..max_det, in (det, a, c) order."""
    out = []
    for det in range(1, max_det + 1):
        for a in range(1, det + 1):
            if det % a:
                continue
            d = det // a
            out.extend(LatticeQuotient(a, c, d) for c in range(a))
    return out
