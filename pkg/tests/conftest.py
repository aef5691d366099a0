import random
from itertools import combinations

from srdual import from_masks, is_s2, mask_of, vertices_of, verify_bounds

#: every complex any test produces goes through here; the bound invariant
#: is enforced on the spot and the tally is reported by the acceptance run.
BOUND_CHECKS = {"count": 0, "violations": 0}


def track(cx, diam=None):
    """Enforce the diameter-vs-proved-bounds invariant on (S2) complexes.

    The mu(d,n) bounds say nothing about complexes that fail (S2), so
    those pass through unchecked.
    """
    d = cx.d
    if d is None or d < 2 or d >= cx.n or not is_s2(cx).holds:
        return cx
    BOUND_CHECKS["count"] += 1
    if not verify_bounds(cx, diam):
        BOUND_CHECKS["violations"] += 1
        raise AssertionError("bound violation: %r" % (cx,))
    return cx


def random_pure_complex(rng: random.Random, max_n=8, dims=(2, 3, 4)):
    """Random pure complex with no isolated vertices (universe compacted)."""
    while True:
        d = rng.choice(list(dims))
        n = rng.randint(d + 1, max_n)
        pool = [mask_of(c) for c in combinations(range(n), d)]
        k = rng.randint(2, min(len(pool), 3 * n))
        masks = rng.sample(pool, k)
        used = 0
        for m in masks:
            used |= m
        old = vertices_of(used)
        if len(old) <= d:
            continue
        pos = {v: i for i, v in enumerate(old)}
        compacted = [mask_of(pos[v] for v in vertices_of(m)) for m in masks]
        return from_masks(compacted, len(old))
