"""Cut certificates, bipartite imbalance, exhaustive Hamiltonian search."""

import random

import pytest

from conftest import complete, cycle, path

from tumbling.graph import NotBipartiteError
from tumbling.hamilton import (
    bipartite_balance,
    find_hamiltonian_cycle,
    hex_ball_cut_set,
    verify_cut,
)
from tumbling.lattice import FamilyKind, FamilySpec, VClass, build_family


def test_cut_set_shape():
    S = hex_ball_cut_set(4, 4)
    assert len(S) == 19
    assert all(a.cls == VClass.U for a in S)
    offsets = {(a.i - 4, a.j - 4) for a in S}
    expected = {
        (di, dj)
        for di in range(-2, 3)
        for dj in range(-2, 3)
        if abs(di - dj) <= 2
    }
    assert offsets == expected


def test_cut_certificate_on_tbp77():
    g = build_family(FamilySpec(FamilyKind.TBP, 7, 7))
    S = [g.index_of(a) for a in hex_ball_cut_set(4, 4)]
    cert = verify_cut(g, S)
    assert cert.isolated_after == 24
    assert cert.components_after > len(S)
    assert cert.certifies


def test_cut_trivial_cases(c6):
    assert not verify_cut(c6, (0,)).certifies
    cert = verify_cut(c6, (0, 3))
    assert cert.components_after == 2
    assert not cert.certifies  # consistent: C6 is hamiltonian


def _union_find_components(g, removed):
    removed = set(removed)
    parent = {x: x for x in range(g.n) if x not in removed}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges():
        if a in removed or b in removed:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(x) for x in parent})


def test_components_agree_with_union_find():
    rng = random.Random(99)
    graphs = [
        build_family(FamilySpec(FamilyKind.TBP, 3, 3)),
        build_family(FamilySpec(FamilyKind.TBT, 4)),
        cycle(9),
        path(8),
    ]
    for g in graphs:
        for _ in range(5):
            removed = tuple(x for x in range(g.n) if rng.random() < 0.3)
            cert = verify_cut(g, removed)
            assert cert.components_after == _union_find_components(g, removed)


def test_bipartite_balance_families():
    for r, s in [(1, 1), (2, 3), (4, 4)]:
        g = build_family(FamilySpec(FamilyKind.TBP, r, s))
        a, b, balanced = bipartite_balance(g)
        assert (a, b) == (r * s + r + s, 2 * r * s + r + s)
        assert not balanced


def test_bipartite_balance_block_and_c6(block, c6):
    assert bipartite_balance(block) == (3, 4, False)
    assert bipartite_balance(c6) == (3, 3, True)


def test_bipartite_balance_odd_cycle_errors():
    with pytest.raises(NotBipartiteError):
        bipartite_balance(complete(3))


def test_hamiltonian_cycle_c6(c6):
    cyc = find_hamiltonian_cycle(c6)
    assert cyc is not None
    assert sorted(cyc) == list(range(6))
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert b in c6.adj[a]


def test_hamiltonian_cycle_absent(block, p4):
    assert find_hamiltonian_cycle(block) is None
    assert find_hamiltonian_cycle(p4) is None
    tbp12 = build_family(FamilySpec(FamilyKind.TBP, 1, 2))
    assert find_hamiltonian_cycle(tbp12) is None


def test_hamiltonian_cycle_tbp22():
    g = build_family(FamilySpec(FamilyKind.TBP, 2, 2))
    assert find_hamiltonian_cycle(g) is None


def test_hamiltonian_search_cap():
    with pytest.raises(ValueError):
        find_hamiltonian_cycle(cycle(31))


def test_certificate_implies_search_agreement():
    # wherever a cut certifies on a small graph, exhaustive search finds nothing
    g = build_family(FamilySpec(FamilyKind.TBP, 1, 2))
    u_indices = [k for k, lab in enumerate(g.labels) if lab.cls == VClass.U]
    cert = verify_cut(g, u_indices)
    if cert.certifies:
        assert find_hamiltonian_cycle(g) is None
