import pytest

from srdual import (
    GlueSpec,
    append_facet_chain,
    build,
    build_dual_graph,
    diameter,
    from_facets,
    glue,
    is_s2,
    mask_of,
    overlap_facets,
)
from srdual.errors import (
    DimensionMismatch,
    NotAFacet,
    OverlapTooSmall,
    UnsupportedLevel,
)
from srdual.families import FamilyId

from conftest import track


def _dim4():
    return build(FamilyId("dim4"), check=False)


def test_figure7_gluing():
    dim4 = _dim4()
    # identify the right copy's EFGH with the left copy's ABCD
    identify = {4: 0, 5: 1, 6: 2, 7: 3}
    glued = track(glue(GlueSpec(dim4, dim4, identify)))
    assert len(glued.facets) == 35 and glued.n == 12
    assert diameter(build_dual_graph(glued)) == 12
    assert is_s2(glued).holds


def test_facet_count_bookkeeping():
    dim4 = _dim4()
    glued = glue(GlueSpec(dim4, dim4, {4: 0, 5: 1, 6: 2, 7: 3}))
    # one overlap facet is shared by both copies
    assert len(glued.facets) == 18 + 18 - 1


def test_smallest_legal_gluings():
    tri = from_facets([[0, 1, 2]])
    # full-facet identification collapses to a single simplex
    whole = glue(GlueSpec(tri, tri, {0: 0, 1: 1, 2: 2}))
    assert whole.facets == tri.facets
    # ridge identification gives two facets sharing d-1 vertices
    ridge = glue(GlueSpec(tri, tri, {0: 0, 1: 1}))
    assert len(ridge.facets) == 2 and ridge.n == 4
    assert is_s2(ridge).holds


def test_overlap_too_small():
    left = from_facets([[0, 1, 2], [1, 2, 3]])
    right = from_facets([[0, 1, 2], [0, 1, 3]])
    with pytest.raises(OverlapTooSmall):
        glue(GlueSpec(left, right, {0: 0}))


def test_no_shared_face_rejected():
    left = from_facets([[0, 1, 2]])
    right = from_facets([[0, 1, 2]])
    with pytest.raises(OverlapTooSmall):
        glue(GlueSpec(left, right, {}))


def test_dimension_mismatch():
    left = from_facets([[0, 1, 2]])
    right = from_facets([[0, 1]])
    with pytest.raises(DimensionMismatch):
        glue(GlueSpec(left, right, {0: 0, 1: 1}))


def test_level_constraints():
    tri = from_facets([[0, 1, 2]])
    with pytest.raises(UnsupportedLevel):
        glue(GlueSpec(tri, tri, {0: 0, 1: 1}, level=4))
    # level 3 requires the overlap to be (S2); an edge overlap is
    assert glue(GlueSpec(tri, tri, {0: 0, 1: 1}, level=3)).n == 4


def test_overlap_facets_antichain():
    out = overlap_facets([0b0111, 0b1110], [0b0111])
    assert out == [0b0111]


def test_gluing_preserves_s2_across_corpus_pairs():
    # facet-to-facet gluings of (S2) figures stay (S2); glue() asserts it,
    # but re-check through the public oracle anyway
    cases = [("fig_a2", [0, 1, 2]), ("fig_a5", [0, 1, 2]),
             ("dim4", [0, 1, 2, 3])]
    for name, facet in cases:
        cx = build(FamilyId(name), check=False)
        d = cx.d
        identify = {v: facet[i] for i, v in enumerate(facet)}
        glued = track(glue(GlueSpec(cx, cx, identify)))
        assert is_s2(glued).holds, name


def test_fresh_labels_are_disjoint():
    tri = from_facets([[0, 1, 2]])
    out = glue(GlueSpec(tri, tri, {0: 0, 1: 1}))
    assert out.n == 4  # one genuinely fresh vertex


def test_append_facet_chain_dim4():
    dim4 = _dim4()
    efgh = mask_of([4, 5, 6, 7])
    ext = track(append_facet_chain(dim4, efgh, 1))
    assert len(ext.facets) == 19 and ext.n == 9
    assert diameter(build_dual_graph(ext)) == 7
    assert is_s2(ext).holds


def test_append_facet_chain_a4():
    a4 = build(FamilyId("fig_a4"), check=False)
    deh = mask_of([3, 4, 7])
    ext = track(append_facet_chain(a4, deh, 1))
    assert ext.n == 9
    assert diameter(build_dual_graph(ext)) == 7
    assert is_s2(ext).holds


def test_append_facet_chain_trivial_and_errors():
    a4 = build(FamilyId("fig_a4"), check=False)
    assert append_facet_chain(a4, mask_of([3, 4, 7]), 0) == a4
    with pytest.raises(NotAFacet):
        append_facet_chain(a4, mask_of([0, 1, 7]), 1)


def test_chain_facets_share_ridges():
    a5 = build(FamilyId("fig_a5"), check=False)
    hij = mask_of([7, 8, 9])
    ext = append_facet_chain(a5, hij, 3)
    new = [f for f in ext.facets if f not in a5.facets]
    assert len(new) == 3
    seq = [hij] + sorted(new, key=lambda m: m.bit_length())
    for u, v in zip(seq, seq[1:]):
        assert (u & v).bit_count() == ext.d - 1


def test_diameter_additivity_on_construction():
    # one G2 (diam 10) glued to G1 (diam 9) along a diametral facet
    two = build(FamilyId("glued_d3", k=2, j=0), check=False)
    assert diameter(build_dual_graph(two)) == 10 + 9  # 10*2 - 1
