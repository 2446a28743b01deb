"""Pure-Python branch-and-bound kernels over arbitrary-precision int bitsets.

Two exact engines back all seven parameter solvers:

* minimum hitting set: find the smallest vertex set intersecting every
  requirement mask (domination and code-distinctness constraints both
  reduce to this form);
* maximum disjoint-neighborhood packing: find a conflict-free vertex set
  whose coverage masks are pairwise disjoint and cover the most vertices.

The compiled extension in ``_kernels.pyx`` implements the same interface
over fixed-width machine words; results are identical, only speed differs.
"""

from __future__ import annotations

#: Largest vertex count this backend accepts (no real limit for Python ints).
MAX_N = 1 << 20


def _dominance_filter(masks: list[int]) -> list[int]:
    """Drop requirements implied by a subset requirement (hit A => hit B when A <= B)."""
    masks = sorted(set(masks), key=lambda m: m.bit_count())
    kept: list[int] = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _greedy_cover(n: int, masks: list[int]) -> int:
    """Greedy hitting set used as the initial upper bound; returns a mask."""
    chosen = 0
    unsat = [m for m in masks]
    while unsat:
        counts = {}
        for m in unsat:
            mm = m
            while mm:
                low = mm & -mm
                counts[low] = counts.get(low, 0) + 1
                mm ^= low
        best_bit = max(counts, key=lambda b: (counts[b], -b))
        chosen |= best_bit
        unsat = [m for m in unsat if not m & best_bit]
    return chosen


def solve_cover(n: int, masks: list[int]) -> tuple[int, int, int]:
    """Minimum hitting set of the requirement masks.

    Returns (optimum size, witness mask, explored node count).  Every mask
    must be nonzero; feasibility screening is the caller's job.
    """
    if any(m == 0 for m in masks):
        raise ValueError("infeasible: empty requirement")
    reqs = _dominance_filter(masks)
    seed = _greedy_cover(n, reqs)
    best = [seed.bit_count(), seed]
    nodes = [0]

    def rec(chosen: int, count: int, banned: int) -> None:
        nodes[0] += 1
        # one pass: detect dead candidates, greedy-pack a lower bound, and
        # remember the unsatisfied requirement with fewest candidates
        lb = 0
        used = 0
        branch_req = 0
        branch_width = n + 1
        for m in reqs:
            if m & chosen:
                continue
            cand = m & ~banned
            if cand == 0:
                return
            if not cand & used:
                lb += 1
                used |= cand
            width = cand.bit_count()
            if width < branch_width:
                branch_width = width
                branch_req = cand
        if branch_req == 0:
            if count < best[0]:
                best[0] = count
                best[1] = chosen
            return
        if count + lb >= best[0]:
            return
        local_banned = banned
        cand = branch_req
        while cand:
            low = cand & -cand
            cand ^= low
            rec(chosen | low, count + 1, local_banned)
            local_banned |= low
            if count + 1 >= best[0]:
                break

    rec(0, 0, 0)
    return best[0], best[1], nodes[0]


def cover_feasible(n: int, masks: list[int], forced: int, banned: int, limit: int) -> bool:
    """Is there a hitting set S with forced <= S, S & banned == 0, |S| <= limit?"""
    if forced & banned:
        return False
    reqs = _dominance_filter(masks)

    def rec(chosen: int, count: int, local_banned: int) -> bool:
        if count > limit:
            return False
        lb = 0
        used = 0
        branch_req = 0
        branch_width = n + 1
        for m in reqs:
            if m & chosen:
                continue
            cand = m & ~local_banned
            if cand == 0:
                return False
            if not cand & used:
                lb += 1
                used |= cand
            width = cand.bit_count()
            if width < branch_width:
                branch_width = width
                branch_req = cand
        if branch_req == 0:
            return True
        if count + lb > limit:
            return False
        cand = branch_req
        while cand:
            low = cand & -cand
            cand ^= low
            if rec(chosen | low, count + 1, local_banned):
                return True
            local_banned |= low
        return False

    return rec(forced, forced.bit_count(), banned)


def _conflicts(n: int, cov: list[int]) -> list[int]:
    conf = [0] * n
    for a in range(n):
        ca = cov[a]
        if ca == 0:
            continue
        for b in range(a + 1, n):
            if ca & cov[b]:
                conf[a] |= 1 << b
                conf[b] |= 1 << a
    return conf


def solve_pack(n: int, cov: list[int]) -> tuple[int, int, int]:
    """Maximum coverage by pairwise-disjoint coverage masks.

    Returns (covered count, witness mask, explored node count).  The witness
    is a conflict-free set; its coverage masks are pairwise disjoint.
    """
    conf = _conflicts(n, cov)
    best = [0, 0]
    nodes = [0]

    def rec(avail: int, covered: int, chosen: int) -> None:
        nodes[0] += 1
        weight = covered.bit_count()
        if weight > best[0]:
            best[0] = weight
            best[1] = chosen
        # optimistic bound: everything still coverable gets covered
        union = 0
        am = avail
        branch = -1
        branch_gain = 0
        while am:
            low = am & -am
            am ^= low
            b = low.bit_length() - 1
            gain = cov[b] & ~covered
            union |= gain
            g = gain.bit_count()
            if g > branch_gain:
                branch_gain = g
                branch = b
        if branch < 0 or weight + union.bit_count() <= best[0]:
            return
        bit = 1 << branch
        rec(avail & ~bit & ~conf[branch], covered | cov[branch], chosen | bit)
        rec(avail & ~bit, covered, chosen)

    rec((1 << n) - 1, 0, 0)
    return best[0], best[1], nodes[0]


def pack_feasible(
    n: int, cov: list[int], forced: int, banned: int, target: int, size_cap: int | None = None
) -> bool:
    """Is there a conflict-free S >= forced avoiding banned with coverage >= target
    (and, when given, |S| <= size_cap)?"""
    if forced & banned:
        return False
    conf = _conflicts(n, cov)
    covered = 0
    avail = ((1 << n) - 1) & ~banned & ~forced if n else 0
    fm = forced
    while fm:
        low = fm & -fm
        fm ^= low
        b = low.bit_length() - 1
        if conf[b] & forced:
            return False
        covered |= cov[b]
        avail &= ~conf[b]
    cap = size_cap if size_cap is not None else n

    def rec(avail: int, covered: int, count: int) -> bool:
        if covered.bit_count() >= target:
            return True
        if count >= cap:
            return False
        union = 0
        am = avail
        branch = -1
        branch_gain = 0
        while am:
            low = am & -am
            am ^= low
            b = low.bit_length() - 1
            gain = cov[b] & ~covered
            union |= gain
            g = gain.bit_count()
            if g > branch_gain:
                branch_gain = g
                branch = b
        if branch < 0 or covered.bit_count() + union.bit_count() < target:
            return False
        bit = 1 << branch
        if rec(avail & ~bit & ~conf[branch], covered | cov[branch], count + 1):
            return True
        return rec(avail & ~bit, covered, count)

    return rec(avail, covered, forced.bit_count())
