"""Circle and conic fitters: frozen values, oracles, descent, equivariance."""

import math

import numpy as np
import pytest

from gradfit.analyzer import ReductionCertificate, solve_nullstellensatz
from gradfit.errors import (
    CenterHitsDataPoint,
    DegenerateData,
    DegreeMismatch,
    GradientVanishesAtSample,
    ImaginaryRadius,
    InvalidRadius,
    InvalidSpec,
    NoCircle,
)
from gradfit.families import get_family
from gradfit.fitters import (
    CircleParams,
    ConicParams,
    FitConfig,
    FitResult,
    eval_Fa_circle,
    fit_circle_geometric,
    fit_circle_reduced,
    fit_conic_reweight,
    fit_reduced_generic,
    kasa_init,
)
from gradfit.moments import MomentVector
from gradfit.poly import gradient_norm_squared


def circle_points(a, b, R, n, noise=0.0, seed=None):
    t = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    pts = np.column_stack([a + R * np.cos(t), b + R * np.sin(t)])
    if noise:
        pts = pts + np.random.default_rng(seed).normal(scale=noise,
                                                       size=pts.shape)
    return pts


def centered_mv(pts, degree=4):
    return MomentVector.from_points(
        pts, degree, offset=(float(np.mean(pts[:, 0])),
                             float(np.mean(pts[:, 1]))))


def circle_cert(max_degree=4):
    P = get_family("circle").poly({"a": 0.0, "b": 0.0, "R": 1.0}, exact=True)
    return solve_nullstellensatz(P, gradient_norm_squared(P), max_degree)


# -- parameter containers ----------------------------------------------------


def test_circle_params_views():
    p = CircleParams(1.0, -2.0, 3.0)
    assert p.c == 1.0 + 4.0 - 9.0
    assert p.translated(1.0, 1.0) == CircleParams(2.0, -1.0, 3.0)
    assert p.to_dict() == {"a": 1.0, "b": -2.0, "R": 3.0}


@pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
def test_circle_params_rejects_bad_radius(bad):
    with pytest.raises(InvalidRadius):
        CircleParams(0.0, 0.0, bad)


def test_conic_params_normalized_unit_norm():
    p = ConicParams(2.0, 0.0, 2.0, 0.0, 0.0, -2.0)
    assert np.linalg.norm(p.vector) == pytest.approx(1.0, abs=1e-15)
    assert not p.is_degenerate_line
    assert ConicParams(0.0, 0.0, 0.0, 1.0, 1.0, 0.0).is_degenerate_line


def test_conic_params_rejects_zero_vector():
    with pytest.raises(InvalidSpec):
        ConicParams(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)


def test_fit_config_validates():
    with pytest.raises(InvalidSpec):
        FitConfig(max_iterations=0)
    with pytest.raises(InvalidSpec):
        FitConfig(gradient_tol=0.0)


# -- reduced circle objective ------------------------------------------------


def test_value_single_point_frozen():
    # one data point (2, 0) against the unit circle at the origin:
    # statistics (16, -32, 0, 16, 0, 0, 8, -8, 0), count 1, value 9
    mv = MomentVector.from_points([(2.0, 0.0)], 4)
    z, n = mv.circle_z_view()
    assert tuple(float(v) for v in z) == (16.0, -32.0, 0.0, 16.0, 0.0, 0.0,
                                          8.0, -8.0, 0.0)
    value, grad = eval_Fa_circle(z, n, (0.0, 0.0, 1.0))
    assert value == pytest.approx(9.0, abs=1e-12)
    # direct: (x^2 + y^2 - R^2)^2 / R^2 at (2, 0)
    assert value == pytest.approx((4.0 - 1.0) ** 2 / 1.0, abs=1e-12)


def test_value_zero_on_exact_circle():
    # zero up to the cancellation noise of assembling ~1e2-scale statistics
    pts = circle_points(0.4, -1.1, 1.7, 24)
    z, n = MomentVector.from_points(pts, 4).circle_z_view()
    value, _ = eval_Fa_circle(z, n, (0.4, -1.1, 1.7))
    assert abs(value) < 1e-12


def test_value_requires_positive_radius():
    z, n = MomentVector.from_points([(1.0, 0.0)], 4).circle_z_view()
    for bad in (0.0, -2.0):
        with pytest.raises(InvalidRadius):
            eval_Fa_circle(z, n, (0.0, 0.0, bad))


def test_value_rejects_short_view():
    with pytest.raises(DegreeMismatch):
        eval_Fa_circle((1.0, 2.0, 3.0), 1, (0.0, 0.0, 1.0))


def test_gradient_matches_central_differences():
    rng = np.random.default_rng(42)
    pts = rng.normal(size=(50, 2)) * 1.5
    z, n = MomentVector.from_points(pts, 4).circle_z_view()
    worst = 0.0
    for _ in range(30):
        th = np.array([rng.uniform(-2, 2), rng.uniform(-2, 2),
                       rng.uniform(0.5, 2.5)])
        _, grad = eval_Fa_circle(z, n, th)
        fd = np.zeros(3)
        for j in range(3):
            h = 1e-6 * (1.0 + abs(th[j]))
            up, dn = th.copy(), th.copy()
            up[j] += h
            dn[j] -= h
            fd[j] = (eval_Fa_circle(z, n, up)[0]
                     - eval_Fa_circle(z, n, dn)[0]) / (2.0 * h)
        worst = max(worst, float(np.max(np.abs(grad - fd)
                                        / (1.0 + np.abs(fd)))))
    assert worst < 1e-6


# -- linear initializer ------------------------------------------------------


def test_kasa_exact_circle_points():
    pts = circle_points(1.0, -2.0, 3.0, 20)
    p = kasa_init(centered_mv(pts))
    assert p.a == pytest.approx(1.0, abs=1e-12)
    assert p.b == pytest.approx(-2.0, abs=1e-12)
    assert p.R == pytest.approx(3.0, abs=1e-12)


def test_kasa_three_points_is_circumcircle():
    # oracle: circumcenter from two perpendicular bisectors
    tri = np.array([[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]])
    p = kasa_init(MomentVector.from_points(tri, 3))
    ax, ay = tri[0]
    bx, by = tri[1]
    cx, cy = tri[2]
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax ** 2 + ay ** 2) * (by - cy) + (bx ** 2 + by ** 2) * (cy - ay)
          + (cx ** 2 + cy ** 2) * (ay - by)) / d
    uy = ((ax ** 2 + ay ** 2) * (cx - bx) + (bx ** 2 + by ** 2) * (ax - cx)
          + (cx ** 2 + cy ** 2) * (bx - ax)) / d
    r = math.hypot(ax - ux, ay - uy)
    assert p.a == pytest.approx(ux, abs=1e-10)
    assert p.b == pytest.approx(uy, abs=1e-10)
    assert p.R == pytest.approx(r, abs=1e-10)


def test_kasa_collinear_degenerate():
    xs = np.linspace(0.0, 1.0, 12)
    pts = np.column_stack([xs, 2.0 * xs - 0.3])
    with pytest.raises(DegenerateData):
        kasa_init(centered_mv(pts))


def test_kasa_too_few_points():
    with pytest.raises(DegenerateData):
        kasa_init(MomentVector.from_points([(0.0, 0.0), (1.0, 0.0)], 3))


def test_kasa_imaginary_radius_on_tampered_moments():
    # real data cannot produce a nonpositive completed square (the residuals
    # would all be positive yet must sum to zero), so doctor the accumulator
    mv = MomentVector.from_points(circle_points(0.0, 0.0, 1.0, 8), 3)
    blob = mv.to_dict()
    entries = {(p, q): v for p, q, v in blob["entries"]}
    entries[(2, 0)] = -1.0
    entries[(0, 2)] = -1.0
    blob["entries"] = [[p, q, v] for (p, q), v in entries.items()]
    with pytest.raises(ImaginaryRadius):
        kasa_init(MomentVector.from_dict(blob))


# -- reduced circle fit ------------------------------------------------------


def test_reduced_recovers_exact_circle():
    pts = circle_points(1.0, -2.0, 3.0, 20)
    res = fit_circle_reduced(centered_mv(pts))
    assert res.converged
    assert res.params.a == pytest.approx(1.0, abs=1e-9)
    assert res.params.b == pytest.approx(-2.0, abs=1e-9)
    assert res.params.R == pytest.approx(3.0, abs=1e-9)
    assert res.data_passes == 1


def test_reduced_objective_matches_direct_sum():
    pts = circle_points(0.7, 0.2, 1.4, 60, noise=0.05, seed=5)
    res = fit_circle_reduced(centered_mv(pts))
    a, b, R = res.params.a, res.params.b, res.params.R
    direct = float(np.sum(((pts[:, 0] - a) ** 2 + (pts[:, 1] - b) ** 2
                           - R * R) ** 2)) / (R * R)
    assert res.objective == pytest.approx(direct, rel=1e-9)


def test_reduced_noisy_estimate_close():
    pts = circle_points(1.0, -2.0, 3.0, 200, noise=0.01, seed=9)
    res = fit_circle_reduced(centered_mv(pts))
    assert res.converged
    assert abs(res.params.a - 1.0) < 0.01
    assert abs(res.params.b + 2.0) < 0.01
    assert abs(res.params.R - 3.0) < 0.01


def test_reduced_translation_equivariance():
    pts = circle_points(0.3, 0.8, 1.2, 40, noise=0.02, seed=2)
    base = fit_circle_reduced(centered_mv(pts))
    moved = fit_circle_reduced(centered_mv(pts + np.array([250.0, -80.0])))
    assert moved.params.a - base.params.a == pytest.approx(250.0, abs=1e-9)
    assert moved.params.b - base.params.b == pytest.approx(-80.0, abs=1e-9)
    assert moved.params.R == pytest.approx(base.params.R, abs=1e-9)


def test_reduced_descent_is_monotone():
    pts = circle_points(0.5, 0.5, 2.0, 30, noise=0.2, seed=13)
    res = fit_circle_reduced(centered_mv(pts),
                             FitConfig(init=CircleParams(3.0, -2.0, 0.7)))
    trace = res.diagnostics["objective_trace"]
    assert len(trace) >= 2
    # non-increasing up to the objective's evaluation-noise band
    assert all(b <= a + 1e-12 * (1.0 + abs(a))
               for a, b in zip(trace, trace[1:]))


def test_reduced_collinear_raises_no_circle():
    xs = np.linspace(-1.0, 1.0, 15)
    pts = np.column_stack([xs, -0.5 * xs + 1.0])
    with pytest.raises(NoCircle):
        fit_circle_reduced(centered_mv(pts))


def test_reduced_too_few_points():
    with pytest.raises(NoCircle):
        fit_circle_reduced(MomentVector.from_points([(0, 0), (1, 1)], 4))


def test_reduced_shallow_moments_rejected():
    mv = MomentVector.from_points(circle_points(0, 0, 1, 10), 3)
    with pytest.raises(DegreeMismatch):
        fit_circle_reduced(mv)


def test_reduced_max_iterations_flag_not_exception():
    pts = circle_points(0.0, 0.0, 1.0, 30, noise=0.3, seed=1)
    res = fit_circle_reduced(
        centered_mv(pts),
        FitConfig(max_iterations=1, init=CircleParams(2.0, 2.0, 0.5),
                  gradient_tol=1e-15, step_tol=1e-16))
    assert isinstance(res, FitResult)
    assert not res.converged
    assert res.iterations == 1


# -- geometric circle fit ----------------------------------------------------


def test_geometric_recovers_exact_circle():
    pts = circle_points(-0.5, 1.5, 2.0, 25)
    res = fit_circle_geometric(pts)
    assert res.converged
    assert res.params.a == pytest.approx(-0.5, abs=1e-9)
    assert res.params.b == pytest.approx(1.5, abs=1e-9)
    assert res.params.R == pytest.approx(2.0, abs=1e-9)
    assert res.objective < 1e-18


def test_geometric_rejects_tiny_dataset():
    with pytest.raises(DegenerateData):
        fit_circle_geometric(np.array([[0.0, 0.0]]))


def test_geometric_center_on_sample():
    pts = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [-1.0, 0.5]])
    with pytest.raises(CenterHitsDataPoint):
        fit_circle_geometric(pts, init=CircleParams(0.0, 0.0, 1.0))


def test_geometric_close_to_reduced_on_small_noise():
    sigma = 0.01
    pts = circle_points(1.0, 1.0, 2.0, 100, noise=sigma, seed=21)
    geo = fit_circle_geometric(pts)
    red = fit_circle_reduced(centered_mv(pts))
    assert abs(geo.params.a - red.params.a) < 5 * sigma
    assert abs(geo.params.b - red.params.b) < 5 * sigma
    assert abs(geo.params.R - red.params.R) < 5 * sigma


def test_geometric_descent_is_monotone():
    pts = circle_points(0.0, 0.0, 1.0, 40, noise=0.1, seed=3)
    res = fit_circle_geometric(pts, init=CircleParams(1.5, -1.5, 0.4))
    trace = res.diagnostics["objective_trace"]
    assert all(b <= a + 1e-12 * (1.0 + abs(a))
               for a, b in zip(trace, trace[1:]))


# -- conic reweight ----------------------------------------------------------


def test_reweight_recovers_exact_ellipse():
    t = np.linspace(0.0, 2.0 * math.pi, 20, endpoint=False)
    pts = np.column_stack([2.0 * np.cos(t), np.sin(t)])
    res = fit_conic_reweight(pts)
    assert res.converged
    truth = np.array([0.25, 0.0, 1.0, 0.0, 0.0, -1.0])
    truth /= np.linalg.norm(truth)
    got = res.params.vector
    if float(got @ truth) < 0:
        got = -got
    assert np.max(np.abs(got - truth)) < 1e-8
    assert res.objective < 1e-16


def test_reweight_first_iterate_is_unweighted_fit():
    rng = np.random.default_rng(17)
    t = rng.uniform(0.0, 2.0 * math.pi, 40)
    pts = np.column_stack([2.0 * np.cos(t), np.sin(t)])
    pts += rng.normal(scale=0.05, size=pts.shape)
    one = fit_conic_reweight(pts, FitConfig(max_iterations=1))
    x, y = pts[:, 0], pts[:, 1]
    Z = np.column_stack([x * x, x * y, y * y, x, y, np.ones(len(x))])
    _, vecs = np.linalg.eigh(Z.T @ Z)
    ref = vecs[:, 0]
    got = one.params.vector
    if float(got @ ref) < 0:
        ref = -ref
    assert np.max(np.abs(got - ref)) < 1e-12


def test_reweight_requires_six_points():
    with pytest.raises(DegenerateData):
        fit_conic_reweight(circle_points(0, 0, 1, 5))


def test_reweight_gradient_vanishes_at_singular_sample():
    # symmetric ring plus its center: the fitted conic A(x^2+y^2)+F has a
    # stationary point exactly at the center sample
    t = np.linspace(0.0, 2.0 * math.pi, 8, endpoint=False)
    pts = np.vstack([np.column_stack([np.cos(t), np.sin(t)]), [[0.0, 0.0]]])
    with pytest.raises(GradientVanishesAtSample):
        fit_conic_reweight(pts)


def test_reweight_reports_stationarity_diagnostic():
    pts = circle_points(0.2, -0.1, 1.3, 30, noise=0.03, seed=8)
    res = fit_conic_reweight(pts)
    assert "stationarity_residual" in res.diagnostics
    assert math.isfinite(res.diagnostics["stationarity_residual"])
    assert res.data_passes == 1 + res.iterations


# -- certificate-driven generic reduced fit ----------------------------------


def test_generic_circle_matches_reduced_argmin():
    pts = circle_points(1.0, -2.0, 3.0, 50, noise=0.02, seed=31)
    mv = centered_mv(pts)
    red = fit_circle_reduced(mv)
    gen = fit_reduced_generic("circle", circle_cert(), mv)
    assert gen.converged
    assert gen.params.a == pytest.approx(red.params.a, abs=1e-9)
    assert gen.params.b == pytest.approx(red.params.b, abs=1e-9)
    assert gen.params.R == pytest.approx(red.params.R, abs=1e-9)
    assert gen.data_passes == 1


def test_generic_assembled_equals_direct_sum():
    from gradfit.fitters import _CertObjective

    rng = np.random.default_rng(77)
    pts = rng.normal(size=(80, 2)) * 1.2
    mv = MomentVector.from_points(pts, 4)
    obj = _CertObjective(get_family("circle"), 0, mv)
    for _ in range(10):
        th = np.array([rng.uniform(-1, 1), rng.uniform(-1, 1),
                       rng.uniform(0.5, 2.0)])
        F, _ = obj.value_grad(th)
        a, b, R = th
        P = (pts[:, 0] - a) ** 2 + (pts[:, 1] - b) ** 2 - R * R
        direct = float(np.sum(P * P / (4.0 * R * R)))
        assert F == pytest.approx(direct, rel=1e-9)


def test_generic_gradient_matches_central_differences():
    from gradfit.fitters import _CertObjective

    rng = np.random.default_rng(123)
    pts = rng.normal(size=(40, 2))
    mv = MomentVector.from_points(pts, 4)
    obj = _CertObjective(get_family("circle"), 0, mv)
    worst = 0.0
    for _ in range(15):
        th = np.array([rng.uniform(-1, 1), rng.uniform(-1, 1),
                       rng.uniform(0.6, 2.0)])
        _, g = obj.value_grad(th)
        fd = np.zeros(3)
        for j in range(3):
            h = 1e-6 * (1.0 + abs(th[j]))
            up, dn = th.copy(), th.copy()
            up[j] += h
            dn[j] -= h
            fd[j] = (obj.value_grad(up)[0] - obj.value_grad(dn)[0]) / (2 * h)
        worst = max(worst, float(np.max(np.abs(g - fd) / (1.0 + np.abs(fd)))))
    assert worst < 1e-6


def test_generic_zero_noise_objective_vanishes():
    pts = circle_points(0.5, 0.5, 1.5, 30)
    res = fit_reduced_generic("circle", circle_cert(), centered_mv(pts))
    assert res.objective < 1e-12
    assert res.params.R == pytest.approx(1.5, abs=1e-9)


def test_generic_line_family_scale_invariant_fit():
    u, v, w = 0.6, 0.8, -0.7
    t = np.linspace(-1.0, 1.0, 30)
    base = np.array([-w * u, -w * v])
    pts = np.column_stack([base[0] - v * t, base[1] + u * t])
    fam = get_family("line")
    P = fam.poly({"u": u, "v": v, "w": w}, exact=True)
    cert = solve_nullstellensatz(P, gradient_norm_squared(P), 4)
    res = fit_reduced_generic(
        "line", cert, MomentVector.from_points(pts, 2),
        FitConfig(init={"u": 0.5, "v": 0.85, "w": -0.6}))
    assert res.objective < 1e-12
    got = np.array([res.params["u"], res.params["v"], res.params["w"]])
    got /= math.hypot(got[0], got[1])
    assert np.max(np.abs(got - np.array([u, v, w]))) < 1e-6


def test_generic_rejects_unverified_certificate():
    cert = circle_cert()
    bad = ReductionCertificate(U=cert.U, W=cert.W, identity_residual=0.5,
                               degree=cert.degree)
    mv = MomentVector.from_points(circle_points(0, 0, 1, 12), 4)
    with pytest.raises(InvalidSpec):
        fit_reduced_generic("circle", bad, mv)


def test_generic_degree_guard():
    cert = circle_cert()
    deep = ReductionCertificate(U=cert.U, W=cert.W, identity_residual=0.0,
                                degree=2)
    mv = MomentVector.from_points(circle_points(0, 0, 1, 12), 4)
    with pytest.raises(DegreeMismatch):
        fit_reduced_generic("circle", deep, mv)


def test_generic_noncircle_needs_explicit_init():
    u, v, w = 1.0, 0.0, -0.5
    fam = get_family("line")
    P = fam.poly({"u": u, "v": v, "w": w}, exact=True)
    cert = solve_nullstellensatz(P, gradient_norm_squared(P), 4)
    mv = MomentVector.from_points([(0.5, t) for t in np.linspace(-1, 1, 9)], 2)
    with pytest.raises(InvalidSpec):
        fit_reduced_generic("line", cert, mv)


def test_generic_noncircle_rejects_centered_accumulator():
    u, v, w = 1.0, 0.0, -0.5
    fam = get_family("line")
    P = fam.poly({"u": u, "v": v, "w": w}, exact=True)
    cert = solve_nullstellensatz(P, gradient_norm_squared(P), 4)
    mv = MomentVector.from_points([(0.5, t) for t in np.linspace(-1, 1, 9)],
                                  2, offset=(0.5, 0.0))
    with pytest.raises(InvalidSpec):
        fit_reduced_generic("line", cert, mv,
                            FitConfig(init={"u": 1.0, "v": 0.0, "w": -0.5}))


# -- result plumbing ---------------------------------------------------------


def test_fit_result_serializes_to_plain_types():
    import json

    pts = circle_points(0.0, 0.0, 1.0, 16, noise=0.01, seed=4)
    res = fit_circle_reduced(centered_mv(pts))
    blob = json.dumps(res.to_dict())
    back = json.loads(blob)
    assert back["family"] == "circle"
    assert back["converged"] is True
    assert set(back["params"]) == {"a", "b", "R"}
