"""Analyzer: witness search, certificates, exclusivity, family reports."""

import cmath
import json
from fractions import Fraction

import numpy as np
import pytest

from gradfit.analyzer import (
    CommonZeroWitness,
    ReductionCertificate,
    analyze_family,
    decide_reduction,
    default_degree_bound,
    find_common_zero,
    restriction_residual,
    solve_nullstellensatz,
    verify_certificate,
)
from gradfit.errors import BoundExhausted, DegenerateInput
from gradfit.families import CurveFamily, get_family
from gradfit.poly import (
    BivariatePoly,
    SimilarityTransform,
    apply_transform,
    gradient_norm_squared,
    parse_poly,
)

X = BivariatePoly.variable("x")
Y = BivariatePoly.variable("y")


def circle_poly(a, b, R):
    return BivariatePoly(
        {(2, 0): 1, (0, 2): 1, (1, 0): -2 * a, (0, 1): -2 * b,
         (0, 0): a * a + b * b - R * R},
    )


def random_poly(rng, max_deg=3, nterms=6):
    keys = [(p, q) for p in range(max_deg + 1) for q in range(max_deg + 1 - p)]
    idx = rng.choice(len(keys), size=min(nterms, len(keys)), replace=False)
    return BivariatePoly(
        {keys[i]: float(rng.uniform(-2, 2)) for i in idx}, exact=False
    )


# -- witness search ---------------------------------------------------------

def test_circle_has_no_common_zero():
    for a, b, R in [(0.0, 0.0, 1.0), (1.0, -2.0, 3.0), (0.5, 0.5, 0.5)]:
        P = circle_poly(a, b, R)
        assert find_common_zero(P, gradient_norm_squared(P)) is None


def test_ellipse_witness_matches_closed_form():
    a, b, c = 1.0, 2.0, 1.0
    P = BivariatePoly({(2, 0): a, (0, 2): b, (0, 0): c}, exact=False)
    w = find_common_zero(P, gradient_norm_squared(P))
    assert w is not None
    xe = cmath.sqrt(b * c / (a * (a - b)))
    ye = cmath.sqrt(-a * c / (b * (a - b)))
    assert min(abs(w.x - s * xe) for s in (1, -1)) < 1e-8
    assert min(abs(w.y - s * ye) for s in (1, -1)) < 1e-8


def test_parabola_witness_is_i_over_2c():
    for c in (1.0, 0.5, 2.0):
        P = Y - c * X ** 2
        w = find_common_zero(P.to_float(), gradient_norm_squared(P).to_float())
        assert w is not None
        assert min(abs(w.x - s * 0.5j / c) for s in (1, -1)) < 1e-8
        assert abs(w.y - (-1.0 / (4 * c))) < 1e-8


def test_witness_residuals_meet_tolerance():
    rng = np.random.default_rng(31)
    seen = 0
    while seen < 15:
        P, Q = random_poly(rng), random_poly(rng)
        if P.degree() <= 0 or Q.is_zero():
            continue
        w = find_common_zero(P, Q)
        if w is None:
            continue
        assert max(w.residual_P, w.residual_Q) <= 1e-8
        seen += 1


def test_constant_p_rejected():
    with pytest.raises(DegenerateInput):
        find_common_zero(BivariatePoly.constant(3), X + Y)


def test_shared_factor_yields_witness():
    # common factor (y - x): resultant vanishes identically
    P = (Y - X) * (X + 2)
    Q = (Y - X) * (Y + 1)
    w = find_common_zero(P.to_float(), Q.to_float())
    assert w is not None
    assert abs(w.x - w.y) < 1e-6


def test_vanishing_leading_coefficient_not_mistaken_for_zero():
    # leading y-coefficient of P dies at x = 0 but no common zero exists:
    # Q - P*y = 2 rules one out identically
    P = (X * Y ** 2 + X + 3).to_float()
    Q = P * Y + 2.0
    assert find_common_zero(P, Q) is None
    cert = solve_nullstellensatz(P, Q, 9)
    assert cert is not None


def test_both_univariate_same_variable():
    # everything constant in y: handled through the x-elimination
    P = (X ** 2 - 1).to_float()
    Q = (X - 1).to_float() * 2.0
    w = find_common_zero(P, Q)
    assert w is not None
    assert abs(w.x - 1.0) < 1e-8
    assert find_common_zero((X ** 2 - 1).to_float(), (X - 3).to_float()) is None


# -- certificates -----------------------------------------------------------

def test_circle_certificate_exact_at_degree_zero():
    P = circle_poly(Fraction(1), Fraction(-2), Fraction(3, 2))
    Q = gradient_norm_squared(P)
    cert = solve_nullstellensatz(P, Q, 9)
    assert cert is not None and cert.degree == 0
    R2 = Fraction(3, 2) ** 2
    assert cert.U == BivariatePoly.constant(-1 / R2)
    assert cert.W == BivariatePoly.constant(1 / (4 * R2))
    assert cert.identity_residual == 0.0


def test_ellipse_certificate_infeasible_at_all_degrees():
    P = BivariatePoly({(2, 0): 1, (0, 2): 2, (0, 0): 1})
    Q = gradient_norm_squared(P)
    assert solve_nullstellensatz(P, Q, 9) is None


def test_unit_ideal_certificate():
    cert = solve_nullstellensatz(BivariatePoly.constant(1), X ** 2 + Y ** 2, 9)
    assert cert is not None and cert.degree == 0
    assert cert.U == BivariatePoly.constant(1)
    assert cert.W == BivariatePoly.constant(0)


def test_minimal_degree_is_reported():
    # x^2 and (x+1)^2: coprime, but no degree-0 combination reaches 1
    P = X ** 2
    Q = (X + 1) ** 2
    cert = solve_nullstellensatz(P, Q, 9)
    assert cert is not None
    assert cert.degree == 1
    assert cert.identity_residual == 0.0


def test_float_certificate_residual_bound():
    P = circle_poly(0.25, -0.75, 1.25).to_float()
    Q = gradient_norm_squared(P)
    cert = solve_nullstellensatz(P, Q, 9)
    assert cert is not None and cert.degree == 0
    assert cert.identity_residual <= 1e-10
    assert verify_certificate(P, Q, cert) <= 1e-10


def test_verify_certificate_detects_perturbation():
    P = circle_poly(0, 0, 1)
    Q = gradient_norm_squared(P)
    cert = solve_nullstellensatz(P, Q, 9)
    assert verify_certificate(P, Q, cert) == 0.0
    broken = ReductionCertificate(cert.U, cert.W + 1, 0.0, cert.degree)
    # P*U + Q*(W+1) - 1 = Q, whose largest coefficient is 4
    assert verify_certificate(P, Q, broken) == 4.0


def test_restriction_equals_reciprocal_weight_on_curve():
    P = circle_poly(1, -2, 3)
    Q = gradient_norm_squared(P)
    cert = solve_nullstellensatz(P, Q, 9)
    gap = restriction_residual(P, Q, cert.W)
    assert gap is not None and gap <= 1e-8


# -- combined decision ------------------------------------------------------

def test_decide_circle_admissible():
    d = decide_reduction(circle_poly(0.5, 0.5, 2.0).to_float())
    assert d.admissible and d.certificate is not None and d.witness is None


def test_decide_ellipse_not_admissible():
    P = BivariatePoly({(2, 0): 1.0, (0, 2): 2.0, (0, 0): 1.0}, exact=False)
    d = decide_reduction(P)
    assert not d.admissible and d.witness is not None


def test_decide_raises_bound_exhausted_when_inconclusive():
    with pytest.raises(BoundExhausted):
        decide_reduction(X ** 2, (X + 1) ** 2, max_degree=0)


def test_default_degree_bound_is_bezout_flavored():
    P = circle_poly(0, 0, 1)
    assert default_degree_bound(P, gradient_norm_squared(P)) == 9
    assert default_degree_bound(X ** 4 + Y, X ** 5 - Y) == 20


def test_exclusivity_on_random_pairs():
    rng = np.random.default_rng(99)
    checked = 0
    while checked < 25:
        P = random_poly(rng, max_deg=2, nterms=5)
        Q = random_poly(rng, max_deg=2, nterms=5)
        if P.degree() <= 0 or Q.is_zero():
            continue
        w = find_common_zero(P, Q)
        cert = solve_nullstellensatz(P, Q, 9)
        assert (w is None) != (cert is None), f"exclusivity broken for {P}, {Q}"
        checked += 1


def test_invariance_under_similarity_transforms():
    rng = np.random.default_rng(17)
    for _ in range(12):
        P = random_poly(rng, max_deg=2, nterms=5)
        if P.degree() <= 0:
            continue
        T = SimilarityTransform(
            angle=float(rng.uniform(-3, 3)),
            scale=float(rng.uniform(0.5, 2.0)),
            tx=float(rng.uniform(-1, 1)),
            ty=float(rng.uniform(-1, 1)),
            mirror=bool(rng.integers(2)),
        )
        before = find_common_zero(P, gradient_norm_squared(P)) is not None
        Pt = apply_transform(P, T)
        after = find_common_zero(Pt, gradient_norm_squared(Pt)) is not None
        assert before == after


# -- family analysis --------------------------------------------------------

def test_analyze_circle_family():
    rep = analyze_family("circle", 6, rng=np.random.default_rng(1))
    assert rep.verdict == "admissible" and rep.consistent
    for s in rep.samples:
        R = Fraction(s.theta["R"])
        assert s.certificate.W == BivariatePoly.constant(1 / (4 * R * R))
        assert s.certificate.U == BivariatePoly.constant(-1 / (R * R))
        assert s.certificate.identity_residual == 0.0
        assert s.restriction is not None and s.restriction <= 1e-8


def test_analyze_ellipse_family():
    rep = analyze_family("ellipse", 6, rng=np.random.default_rng(2))
    assert rep.verdict == "not_admissible" and rep.consistent
    for s in rep.samples:
        a, b, c = (s.theta[k] for k in "abc")
        xe = cmath.sqrt(b * c / (a * (a - b)))
        w = s.witness
        assert min(abs(w.x - sg * xe) for sg in (1, -1)) < 1e-8


def test_analyze_parabola_and_hyperbola_families():
    for name in ("parabola", "hyperbola"):
        rep = analyze_family(name, 4, rng=np.random.default_rng(3))
        assert rep.verdict == "not_admissible" and rep.consistent


def test_analyze_line_family_is_admissible():
    rep = analyze_family("line", 5, rng=np.random.default_rng(4))
    assert rep.verdict == "admissible" and rep.consistent
    # the gradient norm of a line is constant, so W is its exact reciprocal
    for s in rep.samples:
        u, v = Fraction(s.theta["u"]), Fraction(s.theta["v"])
        assert s.certificate.W == BivariatePoly.constant(1 / (u * u + v * v))


def test_analyze_family_records_errors_without_aborting():
    def broken_poly(theta, exact):
        if theta["k"] > 0.5:
            raise RuntimeError("synthetic failure")
        return (X ** 2 + Y ** 2 - 1).to_float()

    fam = CurveFamily(
        "broken", ("k",), (0.0, 1.0),
        broken_poly,
        lambda rng: {"k": float(rng.uniform(0, 1))},
        lambda theta, t: (0.0, 0.0),
    )
    rep = analyze_family(fam, 8, rng=np.random.default_rng(5), exact=False)
    kinds = {s.verdict for s in rep.samples}
    assert "error" in kinds and "admissible" in kinds
    assert all(s.error for s in rep.samples if s.verdict == "error")


def test_family_report_serializes_to_json():
    rep = analyze_family("circle", 2, rng=np.random.default_rng(6))
    blob = json.dumps(rep.to_dict())
    back = json.loads(blob)
    assert back["family"] == "circle"
    assert len(back["samples"]) == 2
    assert back["samples"][0]["certificate"]["degree"] == 0


def test_witness_serialization():
    w = CommonZeroWitness(0.5j, -0.25 + 0j, 1e-12, 2e-12)
    d = w.to_dict()
    assert d["x"] == [0.0, 0.5] and d["y"] == [-0.25, 0.0]


def test_unknown_family_rejected():
    from gradfit.errors import InvalidSpec

    with pytest.raises(InvalidSpec):
        get_family("astroid")
