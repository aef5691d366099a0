"""Pure simplicial complexes on a labeled integer vertex universe.

Vertex sets are plain int bitmasks over the universe {0, ..., n-1}; the
helpers below convert between masks and index collections.  Complexes are
immutable: every operation returns a fresh value.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    BadParams,
    EmptyInput,
    IsolatedVertex,
    NotABijection,
    NotAFace,
    NotPure,
    VertexOutOfRange,
)

MAX_UNIVERSE = 128

#: A vertex set is an int bitmask; bit v set means vertex v is a member.
VertexSet = int


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: VertexSet) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def default_names(n: int) -> tuple[str, ...]:
    """A..Z for small universes, x1, x2, ... beyond."""
    letters = string.ascii_uppercase
    if n <= len(letters):
        return tuple(letters[:n])
    return tuple("x%d" % (i + 1) for i in range(n))


def antichain(masks: Iterable[int]) -> list[int]:
    """Maximal elements under containment, deduplicated, ascending order."""
    uniq = sorted(set(masks), key=lambda m: (bin(m).count("1"), m), reverse=True)
    keep: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in keep):
            keep.append(m)
    keep.sort()
    return keep


@dataclass(frozen=True)
class SimplicialComplex:
    """A pure-or-not complex given by its facets (maximal faces).

    ``facets`` is a sorted, containment-free tuple of bitmasks.  The
    single complex {∅} (the void link of a full facet) is represented by
    n == 0 and facets == (0,).
    """

    n: int
    facets: tuple[int, ...]
    names: Optional[tuple[str, ...]] = field(default=None, compare=False)

    @property
    def is_pure(self) -> bool:
        sizes = {f.bit_count() for f in self.facets}
        return len(sizes) == 1

    @property
    def d(self) -> Optional[int]:
        """Facet cardinality when pure (ring dimension), else None."""
        sizes = {f.bit_count() for f in self.facets}
        if len(sizes) == 1:
            return sizes.pop()
        return None

    @property
    def codim(self) -> Optional[int]:
        return None if self.d is None else self.n - self.d

    def vertex_name(self, v: int) -> str:
        if self.names is not None:
            return self.names[v]
        return default_names(self.n)[v]

    def facet_name(self, mask: int) -> str:
        parts = [self.vertex_name(v) for v in vertices_of(mask)]
        if all(len(p) == 1 for p in parts):
            return "".join(parts)
        return " ".join(parts)

    def has_face(self, face: int) -> bool:
        return any(face & f == face for f in self.facets)

    def faces(self, include_empty: bool = False):
        """All faces, smallest first; generated from facet subsets."""
        seen: set[int] = set()
        for f in self.facets:
            vs = vertices_of(f)
            for k in range(1, len(vs) + 1):
                for comb in combinations(vs, k):
                    seen.add(mask_of(comb))
        out = sorted(seen, key=lambda m: (m.bit_count(), m))
        if include_empty:
            out.insert(0, 0)
        return out

    def __repr__(self):
        body = ",".join(self.facet_name(f) for f in self.facets)
        return "SimplicialComplex(n=%d, facets=[%s])" % (self.n, body)


def from_masks(masks: Iterable[int], universe_size: Optional[int] = None,
               names: Optional[Sequence[str]] = None) -> SimplicialComplex:
    masks = list(masks)
    if not masks:
        raise EmptyInput("no facets given")
    if any(m == 0 for m in masks):
        raise EmptyInput("empty facet in input")
    if any(m < 0 for m in masks):
        raise VertexOutOfRange("negative vertex")
    union = 0
    for m in masks:
        union |= m
    top = union.bit_length()
    if top > MAX_UNIVERSE:
        raise VertexOutOfRange("universe larger than %d vertices" % MAX_UNIVERSE)
    if universe_size is None:
        universe_size = top
    elif top > universe_size:
        raise VertexOutOfRange("facet vertex beyond universe of size %d" % universe_size)
    if union != (1 << universe_size) - 1:
        missing = [v for v in range(universe_size) if not (union >> v) & 1]
        raise IsolatedVertex("universe vertices in no facet: %s" % missing)
    if names is not None:
        if len(names) != universe_size:
            raise BadParams("name table size != universe size")
        names = tuple(names)
    return SimplicialComplex(universe_size, tuple(antichain(masks)), names)


def from_facets(facet_list: Iterable[Iterable[int]],
                universe_size: Optional[int] = None,
                names: Optional[Sequence[str]] = None) -> SimplicialComplex:
    """Build a complex from facets given as vertex-index collections.

    Contained and duplicate facets are silently dropped (antichain
    reduction); the universe defaults to the union of the facets.
    """
    facet_list = list(facet_list)
    if not facet_list:
        raise EmptyInput("no facets given")
    return from_masks([mask_of(f) for f in facet_list], universe_size, names)


_EMPTY_FACE_COMPLEX = SimplicialComplex(0, (0,))


def link(cx: SimplicialComplex, face: VertexSet) -> SimplicialComplex:
    """Link of a face: residues of the facets containing it.

    The result lives on a compacted universe of the vertices that appear;
    link(cx, 0) is cx, and the link of a whole facet is the {∅} complex.
    """
    if face == 0:
        return cx
    if not cx.has_face(face):
        raise NotAFace("not a face: %s" % bin(face))
    residues = [f & ~face for f in cx.facets if face & f == face]
    residues = antichain(residues)
    if residues == [0]:
        return _EMPTY_FACE_COMPLEX
    used = 0
    for r in residues:
        used |= r
    old = vertices_of(used)
    pos = {v: i for i, v in enumerate(old)}
    remapped = [mask_of(pos[v] for v in vertices_of(r)) for r in residues]
    names = tuple(cx.vertex_name(v) for v in old)
    return SimplicialComplex(len(old), tuple(sorted(remapped)), names)


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal given by generator supports (bitmasks)."""

    n: int
    generators: tuple[int, ...]

    @property
    def is_unit(self) -> bool:
        """Degenerate case: the empty support (constant generator)."""
        return 0 in self.generators

    @property
    def is_equigenerated(self) -> bool:
        return len({g.bit_count() for g in self.generators}) == 1


def alexander_dual_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Generators are the facet complements inside the universe."""
    if not cx.is_pure:
        raise NotPure("Alexander dual requires a pure complex")
    full = (1 << cx.n) - 1
    gens = tuple(sorted(full & ~f for f in cx.facets))
    return MonomialIdeal(cx.n, gens)


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Inverse of alexander_dual_ideal (complementation is an involution)."""
    full = (1 << ideal.n) - 1
    return from_masks([full & ~g for g in ideal.generators], ideal.n)


def cone(cx: SimplicialComplex, extra: int) -> SimplicialComplex:
    """Add the same `extra` fresh vertices to every facet."""
    if extra < 1:
        raise BadParams("cone needs extra >= 1")
    if cx.n + extra > MAX_UNIVERSE:
        raise VertexOutOfRange("cone exceeds %d vertices" % MAX_UNIVERSE)
    apex = ((1 << extra) - 1) << cx.n
    names = None
    if cx.names is not None:
        names = cx.names + tuple("c%d" % i for i in range(extra))
    return SimplicialComplex(cx.n + extra,
                             tuple(sorted(f | apex for f in cx.facets)),
                             names)


def relabel(cx: SimplicialComplex, perm: Sequence[int]) -> SimplicialComplex:
    """Apply a vertex permutation; perm[v] is the new label of v."""
    if sorted(perm) != list(range(cx.n)):
        raise NotABijection("perm is not a bijection on 0..%d" % (cx.n - 1))
    facets = [mask_of(perm[v] for v in vertices_of(f)) for f in cx.facets]
    names = None
    if cx.names is not None:
        names = list(cx.names)
        for v, w in enumerate(perm):
            names[w] = cx.names[v]
        names = tuple(names)
    return SimplicialComplex(cx.n, tuple(sorted(facets)), names)
