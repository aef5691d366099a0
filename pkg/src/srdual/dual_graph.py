"""Facet-ridge graphs of pure complexes and BFS distance queries.

Nodes carry the facet labels; the complement labels (the minimal-prime
side) are derivable and only used for display.  Adjacency is stored as
one bitmask of node indices per node.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import SimplicialComplex, vertices_of
from .errors import DimensionTooSmall, EmptyGraph, NotPure, UnknownNode


class _Unbounded:
    """Diameter of a disconnected graph; never compares equal to an int."""

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


@dataclass(frozen=True)
class DualGraph:
    n: int
    d: int
    node_facets: tuple[int, ...]
    adjacency: tuple[int, ...]  # adjacency[i] = bitmask of neighbor indices
    names: Optional[tuple[str, ...]] = None

    @property
    def node_count(self) -> int:
        return len(self.node_facets)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adjacency) // 2

    def node_index(self, facet: int) -> int:
        try:
            return self.node_facets.index(facet)
        except ValueError:
            raise UnknownNode("facet is not a node: %s" % bin(facet)) from None

    def node_label(self, i: int, complement: bool = False) -> str:
        mask = self.node_facets[i]
        if complement:
            mask = ((1 << self.n) - 1) & ~mask
        parts = [self._vname(v) for v in vertices_of(mask)]
        if all(len(p) == 1 for p in parts):
            return "".join(parts)
        return " ".join(parts)

    def _vname(self, v: int) -> str:
        if self.names is not None:
            return self.names[v]
        from .complexes import default_names
        return default_names(self.n)[v]


def build_dual_graph(cx: SimplicialComplex) -> DualGraph:
    """One node per facet; edges exactly where |F_i ∩ F_j| = d - 1."""
    d = cx.d
    if d is None:
        raise NotPure("dual graph requires a pure complex")
    if d < 2:
        raise DimensionTooSmall("dual graph requires facet size >= 2")
    facets = cx.facets
    m = len(facets)
    adj = [0] * m
    for i in range(m):
        fi = facets[i]
        for j in range(i + 1, m):
            if (fi & facets[j]).bit_count() == d - 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return DualGraph(cx.n, d, facets, tuple(adj), cx.names)


def _bfs_levels(g: DualGraph, start: int):
    """Yield (distance, bitmask-of-nodes-at-distance) from node `start`."""
    seen = 1 << start
    frontier = seen
    dist = 0
    yield dist, frontier
    adj = g.adjacency
    while True:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~seen
        if not frontier:
            return
        seen |= frontier
        dist += 1
        yield dist, frontier


def eccentricity(g: DualGraph, start: int):
    """Max BFS distance from `start`; UNBOUNDED if some node is unreachable."""
    reached = 0
    dist = 0
    for dist, level in _bfs_levels(g, start):
        reached |= level
    if reached != (1 << g.node_count) - 1:
        return UNBOUNDED
    return dist


def diameter(g: DualGraph):
    """Max over node pairs of BFS distance; UNBOUNDED when disconnected."""
    if g.node_count == 0:
        raise EmptyGraph("diameter of the empty graph")
    best = 0
    for i in range(g.node_count):
        e = eccentricity(g, i)
        if e is UNBOUNDED:
            return UNBOUNDED
        if e > best:
            best = e
    return best


def distance_pair(g: DualGraph, a: int, b: int, want_path: bool = False):
    """BFS distance between two node labels (facet masks).

    With want_path, returns (dist, path-of-facet-masks); ties are broken
    toward the lowest-index predecessor, so paths are deterministic.
    """
    ia, ib = g.node_index(a), g.node_index(b)
    dist_to: dict[int, int] = {}
    for dist, level in _bfs_levels(g, ia):
        f = level
        while f:
            bit = f & -f
            dist_to[bit.bit_length() - 1] = dist
            f ^= bit
    if ib not in dist_to:
        return (UNBOUNDED, None) if want_path else UNBOUNDED
    if not want_path:
        return dist_to[ib]
    path = [ib]
    cur = ib
    while cur != ia:
        want = dist_to[cur] - 1
        nbrs = g.adjacency[cur]
        while nbrs:
            bit = nbrs & -nbrs
            j = bit.bit_length() - 1
            if dist_to.get(j) == want:
                cur = j
                break
            nbrs ^= bit
        path.append(cur)
    path.reverse()
    return dist_to[ib], [g.node_facets[i] for i in path]


def induced_on_superfacets(g: DualGraph, s: int) -> DualGraph:
    """Restrict to nodes whose facet contains s; s == 0 keeps everything."""
    keep = [i for i, f in enumerate(g.node_facets) if f & s == s]
    pos = {i: k for k, i in enumerate(keep)}
    adj = []
    for i in keep:
        m = 0
        nbrs = g.adjacency[i]
        while nbrs:
            bit = nbrs & -nbrs
            j = bit.bit_length() - 1
            if j in pos:
                m |= 1 << pos[j]
            nbrs ^= bit
        adj.append(m)
    return DualGraph(g.n, g.d, tuple(g.node_facets[i] for i in keep),
                     tuple(adj), g.names)


def is_connected(g: DualGraph) -> bool:
    if g.node_count == 0:
        return True
    reached = 0
    for _, level in _bfs_levels(g, 0):
        reached |= level
    return reached == (1 << g.node_count) - 1
