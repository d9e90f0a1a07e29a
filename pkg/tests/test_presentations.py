"""Ring presentations, their compatibility, and the spectrum split."""

import pytest

from igq.groebner import buchberger
from igq.poly import Ring
from igq.presentations import (
    CLASSICAL_I,
    CLASSICAL_II,
    PresentationSpec,
    QUANTUM_I,
    QUANTUM_II,
    SYMBOLIC,
    ab_ring,
    ab_weights,
    build_presentation,
    count_offorigin_by_substitution,
    decompose_spectrum,
    presentation_dimension,
    schur_determinant,
    sigma_in_ab,
    sigma_ring,
    sigma_weights,
    verify_homomorphism,
    weighted_homogeneity_report,
)


def test_quantum_ii_n2_generators():
    ideal = build_presentation(PresentationSpec(2, QUANTUM_II))
    ring = ideal.ring
    a1, a2 = ring.var("a1"), ring.var("a2")
    assert list(ideal.generators) == [2 * a2 - a1**2, a2**2 + a1]


def test_quantum_ii_n3_generators():
    ideal = build_presentation(PresentationSpec(3, QUANTUM_II))
    ring = ideal.ring
    a1, a2, b1 = ring.var("a1"), ring.var("a2"), ring.var("b1")
    assert list(ideal.generators) == [
        2 * a2 - a1**2 + b1,
        a2**2 + b1 * (2 * a2 - a1**2),
        b1 * a2**2 + a1,
    ]


def test_presentation_dump_bytes_are_frozen():
    # golden bytes: catches any drift in term order, normalization, or the
    # interchange format
    from igq.poly import dump_generators

    spec = PresentationSpec(2, QUANTUM_II)
    gens_text = dump_generators(
        build_presentation(spec).generators, "IG(2,4) variant=QUANTUM_II q=1"
    )
    assert gens_text == (
        "# IG(2,4) variant=QUANTUM_II q=1\n"
        "-1/1*a1^2*a2^0 + 2/1*a1^0*a2^1\n"
        "1/1*a1^0*a2^2 + 1/1*a1^1*a2^0\n"
    )
    from igq.presentations import presentation_basis

    gb_text = dump_generators(
        presentation_basis(spec).elements, "IG(2,4) variant=QUANTUM_II q=1 groebner"
    )
    assert gb_text == (
        "# IG(2,4) variant=QUANTUM_II q=1 groebner\n"
        "1/1*a1^0*a2^2 + 1/1*a1^1*a2^0\n"
        "1/1*a1^2*a2^0 + -2/1*a1^0*a2^1\n"
    )


def test_classical_i_n3_generator_list():
    ideal = build_presentation(PresentationSpec(3, CLASSICAL_I))
    ring = ideal.ring
    s = {k: ring.var("s%d" % k) for k in range(1, 5)}
    # determinantal relations for sizes 3 and 4 plus the two quadratic ones
    assert len(ideal.generators) == 4
    assert ideal.generators[2] == s[2] ** 2 - 2 * s[1] * s[3] + 2 * s[4]
    assert ideal.generators[3] == s[3] ** 2 - 2 * s[2] * s[4]


def test_schur_determinant_matches_cofactor_oracle():
    n = 3
    ring = sigma_ring(n)
    s = lambda k: ring.one if k == 0 else (ring.var("s%d" % k) if 1 <= k <= 4 else ring.zero)
    # independent 3x3 determinant: Sarrus
    m = [[s(1 + j - i) for j in range(1, 4)] for i in range(1, 4)]
    sarrus = (
        m[0][0] * m[1][1] * m[2][2]
        + m[0][1] * m[1][2] * m[2][0]
        + m[0][2] * m[1][0] * m[2][1]
        - m[0][2] * m[1][1] * m[2][0]
        - m[0][0] * m[1][2] * m[2][1]
        - m[0][1] * m[1][0] * m[2][2]
    )
    assert schur_determinant(n, 3, ring) == sarrus


def test_quantum_term_sign_alternates():
    for n in (2, 3, 4):
        ideal = build_presentation(PresentationSpec(n, QUANTUM_I))
        last = ideal.generators[-1]
        s1 = ideal.ring.var("s1")
        coeff = last.coeff(s1.lead_monomial)
        assert coeff == (-1) ** (n + 1)


def test_n_below_two_rejected():
    with pytest.raises(ValueError):
        PresentationSpec(1, QUANTUM_II)


def test_dimensions_match_closed_form():
    for n in (2, 3):
        for variant in (CLASSICAL_I, CLASSICAL_II, QUANTUM_I, QUANTUM_II):
            assert presentation_dimension(PresentationSpec(n, variant)) == 2 * n * (n - 1)


def test_sigma_in_ab_small_cases():
    ring = ab_ring(3)
    a1, a2, b1 = ring.var("a1"), ring.var("a2"), ring.var("b1")
    assert sigma_in_ab(3, 1, ring) == -a1
    assert sigma_in_ab(3, 2, ring) == a2 + b1
    assert sigma_in_ab(3, 3, ring) == -a1 * b1
    assert sigma_in_ab(3, 4, ring) == a2 * b1
    with pytest.raises(ValueError):
        sigma_in_ab(3, 5)
    with pytest.raises(ValueError):
        sigma_in_ab(3, 0)


def test_sigma_in_ab_total_chern_product_oracle():
    # independent check: sum_k sigma_k x^k must equal
    # (sum_i b_i x^{2i}) * (1 - a1 x + a2 x^2) as a polynomial identity
    for n in (2, 3, 4):
        names = ("a1", "a2") + tuple("b%d" % i for i in range(1, n - 1)) + ("x",)
        ring = Ring(names)
        x = ring.var("x")
        lhs = ring.one
        for k in range(1, 2 * n - 1):
            lhs = lhs + sigma_in_ab(n, k, ab_ring(n)).substitute(ring, {}) * x**k
        b_series = ring.one
        for i in range(1, n - 1):
            b_series = b_series + ring.var("b%d" % i) * x ** (2 * i)
        u_series = ring.one - ring.var("a1") * x + ring.var("a2") * x**2
        assert lhs == b_series * u_series


def test_homomorphism_classical():
    for n in (2, 3):
        rep = verify_homomorphism(n, quantum=False)
        assert rep["ok"] and rep["lambda"] is None


def test_homomorphism_quantum_reports_sign():
    for n in (2, 3):
        rep = verify_homomorphism(n, quantum=True)
        assert rep["ok"]
        assert rep["lambda"] in (1, -1)


def test_homomorphism_symbolic_q():
    rep = verify_homomorphism(3, quantum=True, q_mode=SYMBOLIC)
    assert rep["ok"]


def test_spectrum_small_cases():
    assert decompose_spectrum(2).as_tuple() == (4, 0, 1, 3, 3)
    assert decompose_spectrum(3).as_tuple() == (12, 1, 2, 10, 10)


def test_spectrum_internal_identity():
    rep = decompose_spectrum(3)
    assert rep.total_dim == rep.local_length_origin + rep.offorigin_dim


def test_substitution_count_matches_closed_form_and_spectrum():
    for n in (2, 3):
        cnt = count_offorigin_by_substitution(n)
        assert cnt == (n - 1) * (2 * n - 1)
        assert cnt == decompose_spectrum(n).offorigin_distinct_points


def test_substitution_count_rejects_tiny_n():
    with pytest.raises(ValueError):
        count_offorigin_by_substitution(1)


def test_weighted_homogeneity_symbolic_mode():
    for n in (2, 3, 4):
        report = weighted_homogeneity_report(n)
        assert all(entry["ok"] for entry in report.values()), report


def test_weights_cover_all_variables():
    for n in (2, 3, 5):
        assert set(sigma_weights(n)) >= set(sigma_ring(n, True).names)
        assert set(ab_weights(n)) >= set(ab_ring(n, True).names)


def test_offorigin_ideal_is_saturated_by_every_variable():
    # off-origin part must be stable under one more colon by each variable
    from igq.groebner import Ideal, colon
    from igq.presentations import offorigin_ideal

    gb = buchberger(build_presentation(PresentationSpec(3, QUANTUM_II)))
    ideal = Ideal(gb.ring, gb.elements)
    off = offorigin_ideal(ideal)
    for v in gb.ring.gens:
        assert colon(off, v) == off
