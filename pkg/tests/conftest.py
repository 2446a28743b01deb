"""Shared fixtures: classic small graphs and the solver/oracle corpus."""

import random

import pytest

from tumbling.graph import FiniteGraph
from tumbling.lattice import FamilyKind, FamilySpec, block_graph, build_family
from tumbling.quotient import DegenerateQuotientError, LatticeQuotient, build_quotient


def cycle(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_graph(n: int, p: float, seed: int) -> FiniteGraph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return FiniteGraph.from_edges(n, edges)


@pytest.fixture
def block():
    return block_graph(1, 1)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c6():
    return cycle(6)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def k1():
    return FiniteGraph([[]])


@pytest.fixture
def k2():
    return complete(2)


def oracle_corpus() -> list[tuple[str, FiniteGraph]]:
    """At least 50 graphs with n <= 16: blocks, small families, small
    quotients, classics, and seeded random graphs."""
    graphs: list[tuple[str, FiniteGraph]] = [
        ("block(1,1)", block_graph(1, 1)),
        ("block(3,5)", block_graph(3, 5)),
        ("K1", FiniteGraph([[]])),
        ("K2", complete(2)),
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("P2", path(2)),
        ("P3", path(3)),
        ("P4", path(4)),
        ("P5", path(5)),
        ("P7", path(7)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C7", cycle(7)),
        ("C9", cycle(9)),
        ("star5", FiniteGraph.from_edges(6, [(0, i) for i in range(1, 6)])),
    ]
    for kind, r, s in [
        (FamilyKind.TBP, 1, 1),
        (FamilyKind.TBP, 1, 2),
        (FamilyKind.TBP, 2, 1),
        (FamilyKind.TBT, 2, 1),
        (FamilyKind.TBR, 1, 2),
        (FamilyKind.TBR, 2, 1),
    ]:
        graphs.append((f"{kind.value}({r},{s})", build_family(FamilySpec(kind, r, s))))
    for acd in [(3, 2, 1), (4, 2, 1), (4, 3, 1), (2, 0, 2), (2, 1, 2), (5, 2, 1), (5, 3, 1), (5, 4, 1)]:
        try:
            graphs.append((f"quotient{acd}", build_quotient(LatticeQuotient(*acd))))
        except DegenerateQuotientError:
            pass
    seed = 20260809
    for n in range(5, 15):
        for p in (0.2, 0.35, 0.5):
            graphs.append((f"gnp({n},{p})", random_graph(n, p, seed)))
            seed += 1
    assert len(graphs) >= 50
    assert all(g.n <= 16 for _, g in graphs)
    return graphs
