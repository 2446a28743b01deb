"""Exact-rational share and open-share analysis of dominating sets.

The share of a dominator v splits each dominated vertex's unit of coverage
equally among its dominators; shares of a dominating set always sum to the
vertex count, which makes them the workhorse of density lower-bound
arguments.  Everything here is exact ``fractions.Fraction`` arithmetic; no
floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import FiniteGraph
from .solvers import is_dominating, is_ld_set, is_old_set, is_open_dominating

#: Exact rational number type used for shares, open shares, and densities.
Rational = Fraction


def private_neighbors(g: FiniteGraph, D: Iterable[int], v: int) -> tuple[int, ...]:
    """Vertices dominated solely by v: all u with N[u] & D == {v}."""
    D = g.check_vertex_set(D)
    if v not in D:
        raise ValueError(f"vertex {v} is not in the dominating set")
    out = []
    for uu in range(g.n):
        dominators = {x for x in g.adj[uu] if x in D}
        if uu in D:
            dominators.add(uu)
        if dominators == {v}:
            out.append(uu)
    return tuple(out)


def share(g: FiniteGraph, D: Iterable[int], v: int) -> Fraction:
    """sh(v; D): sum over w in N[v] of 1 / |D & N[w]|, exactly."""
    D = g.check_vertex_set(D)
    if v not in D:
        raise ValueError(f"vertex {v} is not in the dominating set")
    if not is_dominating(g, D):
        raise ValueError("set is not dominating")
    total = Fraction(0)
    for w in list(g.adj[v]) + [v]:
        k = sum(1 for x in g.adj[w] if x in D) + (1 if w in D else 0)
        total += Fraction(1, k)
    return total


def open_share(g: FiniteGraph, D: Iterable[int], v: int) -> Fraction:
    """sh_o(v; D): sum over w in N(v) of 1 / |N(w) & D|, exactly."""
    D = g.check_vertex_set(D)
    if v not in D:
        raise ValueError(f"vertex {v} is not in the open-dominating set")
    if not is_open_dominating(g, D):
        raise ValueError("set is not open-dominating")
    total = Fraction(0)
    for w in g.adj[v]:
        k = sum(1 for x in g.adj[w] if x in D)
        total += Fraction(1, k)
    return total


@dataclass(frozen=True)
class ShareReport:
    """Per-dominator share breakdown; total equals n for a dominating set."""

    shares: dict[int, Fraction]
    total: Fraction
    private: dict[int, tuple[int, ...]]
    open_variant: bool


def share_report(g: FiniteGraph, D: Iterable[int], open_variant: bool = False) -> ShareReport:
    """All shares (or open shares) of D plus private-neighbor lists."""
    D = g.check_vertex_set(D)
    fn = open_share if open_variant else share
    shares = {v: fn(g, D, v) for v in sorted(D)}
    private = {} if open_variant else {v: private_neighbors(g, D, v) for v in sorted(D)}
    return ShareReport(
        shares=shares,
        total=sum(shares.values(), Fraction(0)),
        private=private,
        open_variant=open_variant,
    )


def check_open_share_cap(g: FiniteGraph, S: Iterable[int]) -> dict[int, Fraction]:
    """Open-share slack 1 + (deg(v)-1)/2 - sh_o(v;S) for every v in an OLD set S.

    Every margin is >= 0; a negative margin would contradict the open-share
    cap for open-locating-dominating sets and is raised as an error.
    """
    S = g.check_vertex_set(S)
    if not is_old_set(g, S):
        raise ValueError("set is not open-locating-dominating")
    margins = {}
    for v in sorted(S):
        bound = 1 + Fraction(g.degree(v) - 1, 2)
        margins[v] = bound - open_share(g, S, v)
        if margins[v] < 0:
            raise AssertionError(
                f"open-share cap violated at {v}: share exceeds {bound}"
            )
    return margins


def check_ld_pn_bound(g: FiniteGraph, S: Iterable[int]) -> dict[int, int]:
    """Count each dominator's private neighbors among its own neighbors.

    For a locating-dominating set every count is at most 1 (two open private
    neighbors of v would share the code {v}); violations raise.
    """
    S = g.check_vertex_set(S)
    if not is_ld_set(g, S):
        raise ValueError("set is not locating-dominating")
    counts = {}
    for v in sorted(S):
        pn = set(private_neighbors(g, S, v))
        counts[v] = len(pn & set(g.adj[v]))
        if counts[v] > 1:
            raise AssertionError(f"vertex {v} has {counts[v]} private neighbors in N(v)")
    return counts
