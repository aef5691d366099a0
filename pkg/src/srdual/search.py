"""Upper-bound formulas and exhaustive search for the max diameter mu(d,n).

The search enumerates facet subsets (size-d vertex sets) by DFS.  One
isomorph-rejection step is free and sound: every complex has a relabeled
copy containing the lexicographically first facet {0,...,d-1}, so that
facet is forced into every candidate subset.  Leaves are filtered by
vertex coverage, dual-graph connectivity, a cheap eccentricity probe,
and the (S2) oracle before the full diameter is computed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional

from .complexes import SimplicialComplex, mask_of, relabel, vertices_of
from .errors import BadParams, BoundViolation
from .dual_graph import UNBOUNDED, build_dual_graph, diameter


@dataclass(frozen=True)
class UpperBounds:
    """Every applicable diameter bound for the given parameters."""

    d: int
    n: int
    thm32: Optional[int] = None  # d=3: max(2n-10, n-2)
    thm35: Optional[int] = None  # 2^(d-2) (n-d)
    thm36: Optional[int] = None  # codim 5: 8
    thm37: Optional[int] = None  # codim 6: 14
    thm38: Optional[int] = None  # floor(3 * 2^((n-d-5)/2) * (n-d))
    codim3: Optional[int] = None  # 3
    codim4: Optional[int] = None  # 6
    klee_walkup_reduced: Optional[int] = None  # best bound at (n-d, 2(n-d))
    best: int = 0

    def entries(self) -> dict[str, int]:
        keys = ("thm32", "thm35", "thm36", "thm37", "thm38",
                "codim3", "codim4", "klee_walkup_reduced")
        return {k: getattr(self, k) for k in keys if getattr(self, k) is not None}


def bounds(d: int, n: int) -> UpperBounds:
    if not 2 <= d < n:
        raise BadParams("need 2 <= d < n")
    k = n - d
    vals: dict[str, int] = {}
    if d == 3:
        vals["thm32"] = max(2 * n - 10, n - 2)
    vals["thm35"] = (1 << (d - 2)) * k
    if k == 3:
        vals["codim3"] = 3
    if k == 4:
        vals["codim4"] = 6
    if k == 5:
        vals["thm36"] = 8
    if k == 6:
        vals["thm37"] = 14
    if k >= 4:
        # real-valued formula; diameters are integers, so floor it.  The
        # halving argument behind it needs codim >= 4 (below that the
        # floored value undercuts true diameters, e.g. codim 1).
        vals["thm38"] = int(3 * 2 ** ((k - 5) / 2) * k)
    if k >= 2 and (k, 2 * k) != (d, n):
        # at (k, 2k) the reduction is a fixed point, so this recurses once
        vals["klee_walkup_reduced"] = bounds(k, 2 * k).best
    best = min(vals.values())
    return UpperBounds(d=d, n=n, best=best, **vals)


def verify_bounds(cx: SimplicialComplex, diam: Optional[int] = None) -> bool:
    """Blanket invariant: no complex may beat the proved upper bounds."""
    d = cx.d
    if d is None or d < 2 or d >= cx.n:
        return True
    if diam is None:
        diam = diameter(build_dual_graph(cx))
    if diam is UNBOUNDED:
        return True
    return diam <= bounds(d, cx.n).best


@dataclass(frozen=True)
class CanonicalKey:
    facets: tuple[int, ...]
    exact: bool


def _vertex_invariants(facets, n):
    """Per-vertex (degree, co-member degree multiset) for class pruning."""
    deg = [0] * n
    for f in facets:
        for v in vertices_of(f):
            deg[v] += 1
    prof = []
    for v in range(n):
        co = []
        for f in facets:
            if f >> v & 1:
                co.extend(deg[w] for w in vertices_of(f) if w != v)
        prof.append((deg[v], tuple(sorted(co))))
    return prof


def _prekey(facets, n):
    """Cheap isomorphism-invariant total pre-order on complexes."""
    return (len(facets), tuple(sorted(_vertex_invariants(facets, n))))


def canonical_form(cx: SimplicialComplex, max_exact_n: int = 12) -> CanonicalKey:
    """Lex-min sorted facet list over all vertex permutations.

    Exact for n <= max_exact_n; permutations are restricted to vertex
    classes with equal invariants, which prunes most of the n! space.
    Beyond that the key is invariant-based only and flagged inexact.
    """
    n = cx.n
    facets = cx.facets
    if n > max_exact_n:
        inv = tuple(sorted(_vertex_invariants(facets, n)))
        return CanonicalKey((hash(inv),), exact=False)
    prof = _vertex_invariants(facets, n)
    # vertices grouped by invariant; images must stay inside a group
    groups: dict[tuple, list[int]] = {}
    for v in range(n):
        groups.setdefault(prof[v], []).append(v)
    # block order must itself be relabeling-invariant: sort by profile key
    ordered = [groups[k] for k in sorted(groups)]
    best: Optional[tuple[int, ...]] = None
    # assign new labels block by block; only same-class permutations matter
    blocks = [list(permutations(g)) for g in ordered]
    facet_vs = [vertices_of(f) for f in facets]

    def rec(i, perm):
        nonlocal best
        if i == len(blocks):
            key = tuple(sorted(
                sum(1 << perm[v] for v in vs) for vs in facet_vs))
            if best is None or key < best:
                best = key
            return
        base = sum(len(b[0]) for b in blocks[:i])
        for arrangement in blocks[i]:
            for newpos, v in enumerate(arrangement):
                perm[v] = base + newpos
            rec(i + 1, perm)

    rec(0, [0] * n)
    assert best is not None
    return CanonicalKey(best, exact=True)


@dataclass
class SearchBudget:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None


@dataclass
class SearchResult:
    d: int
    n: int
    mu: int
    witness: Optional[SimplicialComplex]
    exhaustive: bool
    nodes_explored: int
    elapsed: float


CHECKPOINT_VERSION = "mu-search-v1"
_TASK_LEVELS = 3  # decisions fixed per task: 2^_TASK_LEVELS tasks


def _read_checkpoint(path, d, n):
    done: set[int] = set()
    incumbent = (-1, None)
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except FileNotFoundError:
        return done, incumbent
    if not lines or lines[0] != CHECKPOINT_VERSION:
        raise BadParams("unrecognized checkpoint file")
    header = lines[1].split()
    if header != ["d=%d" % d, "n=%d" % n]:
        raise BadParams("checkpoint is for different parameters")
    for ln in lines[2:]:
        kind, _, rest = ln.partition(" ")
        if kind == "done":
            done.add(int(rest))
        elif kind == "incumbent":
            parts = rest.split()
            incumbent = (int(parts[0]), tuple(int(x, 16) for x in parts[1:]))
    return done, incumbent


def _write_checkpoint(path, d, n, done, incumbent):
    lines = [CHECKPOINT_VERSION, "d=%d n=%d" % (d, n)]
    for t in sorted(done):
        lines.append("done %d" % t)
    mu, facets = incumbent
    if facets is not None:
        lines.append("incumbent %d %s" % (mu, " ".join("%x" % f for f in facets)))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def enumerate_mu(d: int, n: int, budget: Optional[SearchBudget] = None,
                 threads: int = 1, checkpoint: Optional[str] = None) -> SearchResult:
    """Max dual-graph diameter over (S2) pure complexes using all n vertices.

    Exhaustive when the full (isomorph-reduced) subset tree is traversed
    within budget; otherwise returns the best complex found so far with
    exhaustive=False.
    """
    if not 2 <= d < n:
        raise BadParams("need 2 <= d < n")
    budget = budget or SearchBudget()
    t_start = time.monotonic()
    cands = [mask_of(c) for c in combinations(range(n), d)]
    m = len(cands)
    full_cover = (1 << n) - 1
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if (cands[i] & cands[j]).bit_count() == d - 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    star = [0] * n  # candidate-index mask per vertex
    for i, c in enumerate(cands):
        for v in vertices_of(c):
            star[v] |= 1 << i
    # suffix_cover[i] = union of candidate vertex masks from index i on
    suffix_cover = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_cover[i] = suffix_cover[i + 1] | cands[i]

    best_bound = bounds(d, n).best
    state = {"mu": -1, "witness": None, "prekey": None, "key": None,
             "nodes": 0, "stopped": False}

    def reach(start_bit, allowed):
        seen = start_bit
        frontier = start_bit
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen

    def ecc_from(start_bit, chosen):
        seen = start_bit
        frontier = start_bit
        e = 0
        while True:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & chosen & ~seen
            if not frontier:
                return e
            seen |= frontier
            e += 1

    def passes_s2(chosen, idxs):
        # connectivity was already checked; only nontrivial separators remain
        if d == 2:
            return True
        if d == 3:
            # separators of size d-1 give direct edges; size-1 separators
            # reduce to per-vertex star connectivity
            for v in range(n):
                sub = star[v] & chosen
                if sub and reach(sub & -sub, sub) != sub:
                    return False
            return True
        for a in range(len(idxs)):
            ca = cands[idxs[a]]
            for b in range(a + 1, len(idxs)):
                sep = ca & cands[idxs[b]]
                if sep.bit_count() >= d - 1:
                    continue
                allowed = chosen
                s = sep
                while s:
                    bit = s & -s
                    allowed &= star[bit.bit_length() - 1]
                    s ^= bit
                if not reach(1 << idxs[a], allowed) >> idxs[b] & 1:
                    return False
        return True

    def full_diameter(chosen, idxs):
        best = 0
        for i in idxs:
            e = ecc_from(1 << i, chosen)
            if e > best:
                best = e
        return best

    def consider_leaf(chosen):
        state["nodes"] += 1
        lowbit = chosen & -chosen
        if reach(lowbit, chosen) != chosen:
            return
        idxs = []
        f = chosen
        while f:
            b = f & -f
            idxs.append(b.bit_length() - 1)
            f ^= b
        # probe: diameter <= 2 * any eccentricity; strict comparison keeps
        # the set of tie candidates schedule-independent
        if 2 * ecc_from(lowbit, chosen) < state["mu"]:
            return
        if not passes_s2(chosen, idxs):
            return
        diam = full_diameter(chosen, idxs)
        if diam > best_bound:
            cx = SimplicialComplex(n, tuple(cands[i] for i in idxs))
            raise BoundViolation(
                "diameter %d exceeds proved bound %d for d=%d n=%d: %r"
                % (diam, best_bound, d, n, cx), cx)
        if diam < state["mu"]:
            return
        facet_tuple = tuple(cands[i] for i in idxs)
        if diam > state["mu"]:
            state["mu"] = diam
            state["witness"] = SimplicialComplex(n, facet_tuple)
            state["prekey"] = _prekey(facet_tuple, n)
            state["key"] = None
            return
        # tie: keep the minimal witness under (invariant pre-key,
        # canonical key); the full canonicalization only runs inside
        # the minimal invariant class
        pk = _prekey(facet_tuple, n)
        if pk > state["prekey"]:
            return
        cx = SimplicialComplex(n, facet_tuple)
        if pk < state["prekey"]:
            state["witness"] = cx
            state["prekey"] = pk
            state["key"] = None
            return
        if state["key"] is None:
            state["key"] = canonical_form(state["witness"]).facets
        key = canonical_form(cx).facets
        if key < state["key"]:
            state["witness"] = cx
            state["key"] = key

    max_nodes = budget.max_nodes
    max_seconds = budget.max_seconds

    def dfs(idx, chosen, covered):
        if state["stopped"]:
            return
        if max_nodes is not None and state["nodes"] >= max_nodes:
            state["stopped"] = True
            return
        if max_seconds is not None and state["nodes"] % 4096 == 0 \
                and time.monotonic() - t_start > max_seconds:
            state["stopped"] = True
            return
        if idx == m:
            if covered == full_cover:
                consider_leaf(chosen)
            return
        if covered | suffix_cover[idx] != full_cover:
            return  # cannot cover the remaining vertices
        dfs(idx + 1, chosen | (1 << idx), covered | cands[idx])
        dfs(idx + 1, chosen, covered)

    # forced first facet {0..d-1}; tasks fix the next _TASK_LEVELS choices
    levels = min(_TASK_LEVELS, m - 1)
    tasks = list(range(1 << levels))
    done: set[int] = set()
    if checkpoint:
        done, (ck_mu, ck_facets) = _read_checkpoint(checkpoint, d, n)
        if ck_facets is not None:
            state["mu"] = ck_mu
            state["witness"] = SimplicialComplex(n, ck_facets)
            state["prekey"] = _prekey(ck_facets, n)

    def run_task(t):
        chosen = 1
        covered = cands[0]
        for lvl in range(levels):
            if t >> lvl & 1:
                chosen |= 1 << (1 + lvl)
                covered |= cands[1 + lvl]
        dfs(1 + levels, chosen, covered)

    if threads > 1:
        # worker tasks share the incumbent through `state`; CPython's GIL
        # serializes the updates, and the final merge is order-independent
        # (monotone max + canonical tie-break)
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futs = {}
            for t in tasks:
                if t not in done:
                    futs[t] = pool.submit(run_task, t)
            for t, fut in futs.items():
                fut.result()
                if not state["stopped"]:
                    done.add(t)
                    if checkpoint:
                        _write_checkpoint(checkpoint, d, n, done,
                                          (state["mu"],
                                           state["witness"].facets
                                           if state["witness"] else None))
    else:
        for t in tasks:
            if t in done:
                continue
            run_task(t)
            if state["stopped"]:
                break
            done.add(t)
            if checkpoint:
                _write_checkpoint(checkpoint, d, n, done,
                                  (state["mu"],
                                   state["witness"].facets
                                   if state["witness"] else None))

    exhaustive = not state["stopped"] and len(done) == len(tasks)
    witness = state["witness"]
    if witness is not None and n <= 12:
        # report the witness in its canonical labeling
        key = canonical_form(witness)
        if key.exact:
            witness = SimplicialComplex(n, key.facets)
    return SearchResult(d=d, n=n, mu=state["mu"], witness=witness,
                        exhaustive=exhaustive, nodes_explored=state["nodes"],
                        elapsed=time.monotonic() - t_start)
