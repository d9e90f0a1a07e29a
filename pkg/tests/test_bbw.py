"""Weight combinatorics, Ext profiles, collections, staircase complexes."""

import itertools
from math import comb

import pytest

from igq.bbw import (
    LEFT,
    RIGHT,
    BundleTerm,
    Space,
    bbw_gl,
    bbw_sp,
    bundle_cohomology,
    check_f_orthogonality,
    ext_bundles,
    ext_f_pair,
    f_complex,
    f_complex_euler_consistency,
    hom_bundle,
    lefschetz_collection,
    serre_duality_holds,
    support_partition,
    verify_collection,
    weyl_dimension_gl,
    weyl_dimension_sp,
)


def test_space_invariants():
    gr = Space.gr(6)
    assert (gr.dimension, gr.index, gr.v_dim) == (8, 6, 6)
    igr = Space.igr(3)
    assert (igr.dimension, igr.index, igr.v_dim) == (7, 5, 6)
    with pytest.raises(ValueError):
        Space.gr(3)
    with pytest.raises(ValueError):
        Space.igr(1)


def test_bbw_gl_structure_sheaf_and_twist():
    r = bbw_gl((0, 0, 0, 0), 4)
    assert (r.vanishes, r.degree, r.rep_dimension) == (False, 0, 1)
    assert bbw_gl((-1, -1, 0, 0), 4).vanishes
    with pytest.raises(ValueError):
        bbw_gl((0, 0), 4)


def test_bbw_gl_symmetric_powers_dimension_oracle():
    # H^0(S^a U*) is the a-th symmetric power of the ambient dual: its
    # dimension is the count of monomials of degree a in m variables
    def monomial_count(m, a):
        return sum(1 for _ in itertools.combinations_with_replacement(range(m), a))

    for m in (4, 5, 6):
        for a in range(5):
            r = bbw_gl((a,) + (0,) * (m - 1), m)
            assert r.degree == 0
            assert r.rep_dimension == monomial_count(m, a) == comb(m + a - 1, a)


def test_bbw_sp_examples():
    r = bbw_sp((0, 0, 0), 3)
    assert (r.degree, r.rep_dimension) == (0, 1)
    r = bbw_sp((0, -4, 0), 3)
    assert (r.vanishes, r.degree, r.rep_dimension) == (False, 3, 1)
    for k in (2, 3, 4):
        for j in range(1, 2 * k - 1):
            assert bundle_cohomology(Space.igr(k), 0, -j).vanishes


def test_bbw_sp_symmetric_powers_dimension_oracle():
    # symmetric powers of the standard representation stay irreducible for
    # the symplectic group (the invariant form is alternating, so there is
    # no trace contraction): the dimension is the full monomial count
    for k in (2, 3, 4):
        for a in range(1, 5):
            r = bbw_sp((a,) + (0,) * (k - 1), k)
            assert r.degree == 0 and r.rep_dimension == comb(2 * k + a - 1, a)
    # spot check: Sym^2 of the standard Sp(4)-module is the 10-dim adjoint
    assert bbw_sp((2, 0), 2).rep_dimension == 10


def test_weyl_dimension_formulas_small():
    assert weyl_dimension_gl((1, 0, 0, 0)) == 4
    assert weyl_dimension_gl((1, 1, 0, 0)) == 6
    assert weyl_dimension_sp((1, 0)) == 4
    assert weyl_dimension_sp((1, 1)) == 5


def test_hom_bundle_examples_and_rank_identity():
    assert [(t.sym, t.twist) for t in hom_bundle(0, 0, 3, -2)] == [(3, -2)]
    terms = hom_bundle(2, 0, 2, -2)
    assert {(t.sym, t.twist) for t in terms} == {(4, -4), (2, -3), (0, -2)}
    assert sum(t.scalar_mult * (t.sym + 1) for t in terms) == 9
    for a, b in ((0, 0), (1, 4), (3, 3), (5, 2)):
        total = sum(t.scalar_mult * (t.sym + 1) for t in hom_bundle(a, 2, b, -1))
        assert total == (a + 1) * (b + 1)
    # Hom(E, E) contains the structure sheaf exactly once
    counted = [t for t in hom_bundle(3, 1, 3, 1) if (t.sym, t.twist) == (0, 0)]
    assert len(counted) == 1 and counted[0].scalar_mult == 1


def test_ext_exceptionality_and_semiorthogonality():
    for i in (0, 1, 2):
        assert ext_bundles(Space.igr(3), (i, 0), (i, 0)).dims == ((0, 1),)
    assert ext_bundles(Space.gr(4), (0, 0), (0, -1)).is_zero


def test_key_ext_concentration():
    for k in (2, 3, 4):
        prof = ext_bundles(Space.igr(k), (k - 1, 0), (k - 1, 1 - k))
        assert prof.dims == ((2 * k - 3, 1),)


def test_three_dim_quadric_section_counts():
    # IG(2,4) is the smooth 3-dimensional quadric: sections of O(1) are the
    # 5 ambient coordinates, sections of O(2) are the 15 quadrics minus the
    # defining one
    q3 = Space.igr(2)
    assert ext_bundles(q3, (0, 0), (0, 1)).dims == ((0, 5),)
    assert ext_bundles(q3, (0, 0), (0, 2)).dims == ((0, 14),)
    # Hilbert polynomial of a quadric threefold: binom(j+4,4)-binom(j+2,4)
    for j in range(5):
        expected = comb(j + 4, 4) - comb(j + 2, 4)
        assert ext_bundles(q3, (0, 0), (0, j)).euler == expected


def test_serre_duality_sample():
    pairs = [(0, 0), (1, 0), (2, -1), (1, 2), (3, -3)]
    for space in (Space.gr(4), Space.gr(5), Space.igr(2), Space.igr(3), Space.igr(4)):
        for E, F in itertools.product(pairs, repeat=2):
            assert serre_duality_holds(space, E, F)


def test_ext_degrees_lie_in_geometric_range():
    # any nonzero Ext between bundles lives in degrees 0 .. dim(space)
    pairs = [(0, 0), (2, -1), (3, 1), (1, -4)]
    for space in (Space.gr(5), Space.igr(3)):
        for E, F in itertools.product(pairs, repeat=2):
            prof = ext_bundles(space, E, F)
            assert all(0 <= d <= space.dimension for d, _ in prof.dims)


def test_collections_pass_and_have_expected_sizes():
    expected = {
        ("igr", 2): 4,
        ("igr", 3): 12,
        ("gr", 4): 6,
        ("gr", 5): 10,
        ("gr", 6): 15,
    }
    for (kind, p), size in expected.items():
        space = Space(kind, p)
        rep = verify_collection(space)
        assert rep["ok"], rep["failures"][:3]
        assert rep["objects"] == size
        assert len(lefschetz_collection(space)) == sum(support_partition(space))
    # the isotropic collection has as many objects as the cohomology has
    # dimensions: 2k(k-1)
    for k in (2, 3):
        assert len(lefschetz_collection(Space.igr(k))) == 2 * k * (k - 1)


def test_collection_size_matches_ring_dimension():
    # K-theory rank = dimension of the cohomology ring, computed on the
    # other side of the package
    from igq.presentations import PresentationSpec, QUANTUM_II, presentation_dimension

    for k in (2, 3):
        ring_dim = presentation_dimension(PresentationSpec(k, QUANTUM_II))
        assert len(lefschetz_collection(Space.igr(k))) == ring_dim


def test_f_complex_shapes():
    one = f_complex(1, 3, LEFT)
    assert len(one) == 1
    assert (one[0].sym, one[0].twist, one[0].hom_shift) == (2, -3, 0)
    koszul = f_complex(3, 3, RIGHT)
    assert all(t.twist == 0 for t in koszul)
    assert [t.scalar_mult for t in koszul] == [comb(6, 2), comb(6, 1), comb(6, 0)]
    left = f_complex(2, 3, LEFT)
    assert [t.hom_shift for t in left] == [-1, 0]
    assert [t.scalar_mult for t in left] == [1, comb(6, 1)]
    with pytest.raises(ValueError):
        f_complex(0, 3, LEFT)
    with pytest.raises(ValueError):
        f_complex(4, 3, RIGHT)


def test_f_complex_euler_consistency():
    for space in (Space.gr(4), Space.gr(6), Space.igr(2), Space.igr(3)):
        assert f_complex_euler_consistency(space)["ok"]


def test_ext_f_pair_grassmannian_vanishing():
    prof = ext_f_pair(Space.gr(4), 2, 1)
    assert prof.is_zero and prof.conclusive
    for i, j in ((2, 1), (3, 1), (3, 2)):
        prof = ext_f_pair(Space.gr(6), i, j)
        assert prof.is_zero and prof.conclusive, (i, j, prof)


def test_ext_f_pair_isotropic_pattern():
    prof = ext_f_pair(Space.igr(3), 3, 2)
    assert prof.conclusive and prof.total_dim == 1
    assert prof.euler in (1, -1)
    prof = ext_f_pair(Space.igr(3), 3, 1)
    assert prof.is_zero and prof.conclusive


def test_ext_f_pair_euler_matches_alternating_sum():
    prof = ext_f_pair(Space.igr(3), 2, 1)
    assert prof.euler == sum((-1) ** d * v for d, v in prof.dims)


def test_orthogonality_of_staircase_objects():
    for space in (Space.gr(4), Space.igr(3)):
        k = space.param if space.kind == "igr" else space.param // 2
        for i in range(1, k + 1):
            assert check_f_orthogonality(space, i)["ok"]


def test_orthogonality_i1_matches_direct_bundle_ext():
    # the one-term complex case: F_1(k-1) is S^{k-1}U*(-1); the complex
    # machinery must agree with a direct bundle Ext computation
    space = Space.gr(6)
    k = 3
    rep = check_f_orthogonality(space, 1)
    direct_all_zero = all(
        ext_bundles(space, (u, v), (k - 1, -1)).is_zero
        for v in range(0, k)
        for u in range(0, k - 1)
    )
    assert rep["ok"] == direct_all_zero == True  # noqa: E712


def test_bundle_term_validation():
    with pytest.raises(ValueError):
        BundleTerm(-1, 0)
    with pytest.raises(ValueError):
        BundleTerm(0, 0, 0)
