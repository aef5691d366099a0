"""Serre-level-preserving gluing of pure complexes, plus chain appends.

Gluing identifies some right-hand vertices with left-hand vertices and
takes the union of the facet sets; the overlap complex must be pure of
dimension at least d-2 and satisfy the Serre level one below the target.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .complexes import (
    SimplicialComplex,
    antichain,
    default_names,
    mask_of,
    vertices_of,
)
from .errors import (
    BadParams,
    DimensionMismatch,
    NotAFacet,
    OverlapNotPure,
    OverlapSerreFailure,
    OverlapTooSmall,
    UnsupportedLevel,
)
from .serre import check_s_level, is_s2


@dataclass(frozen=True)
class GlueSpec:
    left: SimplicialComplex
    right: SimplicialComplex
    #: right-vertex -> left-vertex, injective
    identify: Mapping[int, int] = field(default_factory=dict)
    level: int = 2


def _relabel_right(spec: GlueSpec):
    """Map right vertices into the result universe; fresh ones after left."""
    ident = dict(spec.identify)
    if len(set(ident.values())) != len(ident):
        raise BadParams("identification map is not injective")
    for a, b in ident.items():
        if not 0 <= a < spec.right.n:
            raise BadParams("right vertex %d out of range" % a)
        if not 0 <= b < spec.left.n:
            raise BadParams("left vertex %d out of range" % b)
    mapping = {}
    fresh = spec.left.n
    for v in range(spec.right.n):
        if v in ident:
            mapping[v] = ident[v]
        else:
            mapping[v] = fresh
            fresh += 1
    facets = [mask_of(mapping[v] for v in vertices_of(f))
              for f in spec.right.facets]
    return facets, fresh


def overlap_facets(left_facets, right_facets):
    """Maximal common faces of two facet lists (pairwise intersections)."""
    inters = {f & g for f in left_facets for g in right_facets}
    inters.discard(0)
    if not inters:
        return []
    return antichain(inters)


def glue(spec: GlueSpec) -> SimplicialComplex:
    dl, dr = spec.left.d, spec.right.d
    if dl is None or dr is None or dl != dr:
        raise DimensionMismatch("both complexes must be pure of equal facet size")
    d = dl
    if spec.level < 2:
        raise BadParams("glue targets Serre level >= 2")
    if spec.level > 3:
        raise UnsupportedLevel("(S_%d) precondition not checkable" % (spec.level - 1))

    right_facets, total_n = _relabel_right(spec)
    gamma = overlap_facets(spec.left.facets, right_facets)
    if not gamma:
        raise OverlapTooSmall("complexes share no face")
    sizes = {f.bit_count() for f in gamma}
    if len(sizes) != 1:
        raise OverlapNotPure("overlap maximal faces have sizes %s" % sorted(sizes))
    if sizes.pop() < d - 1:  # dimension >= d-2
        raise OverlapTooSmall("overlap dimension below d-2")
    if spec.level == 3:
        gamma_cx = _compact(gamma)
        if not check_s_level(gamma_cx, 2):
            raise OverlapSerreFailure("overlap is not (S_2)")

    names = None
    if spec.left.names is not None:
        names = list(spec.left.names)
        for v in range(spec.right.n):
            if v not in spec.identify:
                nm = (spec.right.names[v] if spec.right.names is not None
                      else default_names(spec.right.n)[v])
                while nm in names:
                    nm = nm + "'"
                names.append(nm)
        names = tuple(names)

    result = SimplicialComplex(
        total_n, tuple(antichain(list(spec.left.facets) + right_facets)), names)
    if spec.level == 2 and is_s2(spec.left).holds and is_s2(spec.right).holds:
        verdict = is_s2(result)
        assert verdict.holds, "gluing broke (S2): %r" % (verdict.witness,)
    return result


def _compact(facets):
    """Complex on the vertices actually used by `facets` (relabeled)."""
    used = 0
    for f in facets:
        used |= f
    old = vertices_of(used)
    pos = {v: i for i, v in enumerate(old)}
    remapped = sorted(mask_of(pos[v] for v in vertices_of(f)) for f in facets)
    return SimplicialComplex(len(old), tuple(remapped))


def append_facet_chain(cx: SimplicialComplex, start: int,
                       steps: int) -> SimplicialComplex:
    """Grow a rolling-window chain of facets off an existing facet.

    Each step drops the oldest retained vertex of the previous end facet
    and adds one fresh vertex, so consecutive chain facets share d-1
    vertices.  steps == 0 returns cx unchanged.
    """
    if start not in cx.facets:
        raise NotAFacet("chain start must be a facet")
    if steps < 0:
        raise BadParams("steps must be >= 0")
    if steps == 0:
        return cx
    window = vertices_of(start)  # ascending: lowest index is dropped first
    facets = list(cx.facets)
    names = list(cx.names) if cx.names is not None else None
    fresh = cx.n
    for _ in range(steps):
        window = window[1:] + [fresh]
        facets.append(mask_of(window))
        if names is not None:
            names.append(default_names(fresh + 1)[fresh]
                         if fresh < 26 else "x%d" % (fresh + 1))
        fresh += 1
    return SimplicialComplex(fresh, tuple(antichain(facets)),
                             tuple(names) if names is not None else None)
