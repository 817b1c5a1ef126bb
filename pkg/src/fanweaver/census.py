"""Exhaustive enumeration of sphere triangulations at a fixed vertex count.

Every triangulation of the sphere on m vertices can be reached from any
other by diagonal flips, so the isomorphism classes are exactly the flip
closure of one seed (a stacked sphere), deduplicated by canonical code.
The closure is explored breadth-first; states are face tuples and the seen
set stores canonical codes only, which keeps the memory per class small.

This is adequate up to m = 13 or 14 on ordinary hardware.  The counts climb
steeply after that and larger m is out of scope here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import ResourceLimit
from .spheres import min_code, stacked_sphere, triangulation_from_code

__all__ = ["CensusRow", "enumerate_codes", "enumerate_spheres", "census"]

DEFAULT_MEMORY_BUDGET = 8 << 30  # bytes

# rough per-class accounting: code bytes + container overhead
_STATE_OVERHEAD = 96


@dataclass(frozen=True)
class CensusRow:
    m: int
    total: int
    min_deg5: int


def _succ_pred_degrees(m, faces):
    succ = [dict() for _ in range(m)]
    for a, b, c in faces:
        sa = succ[a]
        sb = succ[b]
        sc = succ[c]
        sb[a] = c
        sc[b] = a
        sa[c] = b
    pred = [dict() for _ in range(m)]
    for v in range(m):
        pv = pred[v]
        for u, w in succ[v].items():
            pv[w] = u
    return succ, pred, [len(s) for s in succ]


def _cyc_min(a, b, c):
    if a < b and a < c:
        return (a, b, c)
    if b < c:
        return (b, c, a)
    return (c, a, b)


def _neighbors(m, faces):
    """All flip results of one state as (code, faces) pairs, in edge order."""
    succ, pred, degrees = _succ_pred_degrees(m, faces)
    out = []
    for v in range(m):
        sv = succ[v]
        for u in sv:
            if u < v:
                continue
            # edge (v, u) with v < u
            c = succ[u][v]
            d = succ[v][u]
            if d in succ[c]:
                continue  # diagonal already present
            drop1 = _cyc_min(v, u, c)
            drop2 = _cyc_min(u, v, d)
            nf = [f for f in faces if f != drop1 and f != drop2]
            nf.append(_cyc_min(c, d, u))
            nf.append(_cyc_min(d, c, v))
            nf = tuple(sorted(nf))
            s2, p2, deg2 = _succ_pred_degrees(m, nf)
            out.append((min_code(m, s2, p2, deg2), nf))
    return out


def _expand_batch(args):
    m, states = args
    return [_neighbors(m, faces) for faces in states]


def enumerate_codes(
    m,
    memory_budget=DEFAULT_MEMORY_BUDGET,
    max_seconds=None,
    jobs=1,
    seed_variant=0,
):
    """Sorted canonical codes of all m-vertex sphere triangulations.

    Raises ResourceLimit when the configured budget would be exceeded;
    partial results are never returned.  `jobs` > 1 parallelizes the
    frontier expansion; the result is identical to the serial run.
    """
    if m < 4:
        raise ValueError("m must be >= 4")
    t0 = time.monotonic()
    seed = stacked_sphere(m, variant=seed_variant)
    code0 = min_code(m, seed.succ, seed.pred, seed.degrees)
    seen = {code0}
    frontier = [seed.faces]
    code_len = len(code0)
    pool = None
    if jobs and jobs > 1:
        import multiprocessing

        pool = multiprocessing.Pool(jobs)
    try:
        while frontier:
            if max_seconds is not None and time.monotonic() - t0 > max_seconds:
                raise ResourceLimit(f"time budget exceeded at {len(seen)} classes")
            if len(seen) * (code_len + _STATE_OVERHEAD) > memory_budget:
                raise ResourceLimit(f"memory budget exceeded at {len(seen)} classes")
            next_frontier = []
            if pool is None:
                batches = (_neighbors(m, faces) for faces in frontier)
            else:
                chunk = max(1, len(frontier) // (8 * pool._processes))
                groups = [
                    (m, frontier[i : i + chunk])
                    for i in range(0, len(frontier), chunk)
                ]
                batches = (
                    batch
                    for group in pool.imap(_expand_batch, groups)
                    for batch in group
                )
            for batch in batches:
                for code, faces in batch:
                    if code not in seen:
                        seen.add(code)
                        next_frontier.append(faces)
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return sorted(seen)


def _code_degrees(code):
    """Vertex degrees of a code's representative (its chunk lengths)."""
    out = []
    run = 0
    for x in code:
        if x:
            run += 1
        else:
            out.append(run)
            run = 0
    return out


def enumerate_spheres(m, min_degree=None, **kwargs):
    """All isomorphism classes with m vertices as canonical representatives.

    Optionally keeps only classes whose minimum vertex degree is at least
    `min_degree`.  Deterministic: sorted by canonical code.
    """
    reps = []
    for code in enumerate_codes(m, **kwargs):
        if min_degree is not None and min(_code_degrees(code)) < min_degree:
            continue
        reps.append(triangulation_from_code(code))
    return reps


def census(m_max, memory_budget=DEFAULT_MEMORY_BUDGET, max_seconds=None, jobs=1):
    """Census rows for 4..m_max: class counts and minimum-degree-5 counts."""
    if m_max < 4:
        raise ValueError("m_max must be >= 4")
    rows = []
    for m in range(4, m_max + 1):
        codes = enumerate_codes(
            m, memory_budget=memory_budget, max_seconds=max_seconds, jobs=jobs
        )
        min5 = sum(1 for code in codes if min(_code_degrees(code)) >= 5)
        rows.append(CensusRow(m, len(codes), min5))
    return rows
