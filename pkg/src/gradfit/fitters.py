"""Curve fitters.

Four fitting routines around one damped-Newton core:

* ``fit_circle_reduced``   minimizes the moment-assembled circle objective;
  each iteration touches only the nine z statistics and the count, so the
  total cost is one data pass plus O(iterations).
* ``fit_circle_geometric`` damped Gauss-Newton on the signed distance
  residuals sqrt((x-a)^2+(y-b)^2) - R; the O(kn) baseline.
* ``fit_conic_reweight``   gradient-weighted algebraic conic fit by weight
  freezing: eigenvector steps on the weighted scatter matrix with weights
  1/|grad P|^2 recomputed between steps; the generic O(kn) baseline.
* ``fit_reduced_generic``  the certificate-driven reduction: given W with
  P*U + |grad P|^2*W = 1, minimizes the contraction of W*P^2 against a
  moment vector, re-solving the (tiny) certificate system at each iterate.

Non-convergence is reported through ``FitResult.converged``, never raised.
Every accepted iteration is non-increasing in its objective up to the
objective's own evaluation-noise band (see ``_damped_newton``).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .analyzer import ReductionCertificate, _build_system, _fill_float
from .errors import (
    CenterHitsDataPoint,
    DegenerateData,
    DegreeMismatch,
    GradientVanishesAtSample,
    ImaginaryRadius,
    InvalidRadius,
    InvalidSpec,
    NoCircle,
    NonFiniteInput,
    NumericalFailure,
)
from .families import CurveFamily, get_family
from .moments import MomentVector
from .poly import BivariatePoly, partial_derivative

__all__ = [
    "CircleParams",
    "ConicParams",
    "FitConfig",
    "FitResult",
    "eval_Fa_circle",
    "fit_circle_reduced",
    "fit_circle_geometric",
    "fit_conic_reweight",
    "fit_reduced_generic",
    "kasa_init",
]

_CERT_ACCEPT = 1e-8
_KASA_COND_LIMIT = 1e14


# ---------------------------------------------------------------------------
# parameter containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircleParams:
    """Center (a, b) and radius R > 0 of the circle (x-a)^2+(y-b)^2 = R^2."""

    a: float
    b: float
    R: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "R", float(self.R))
        if not (math.isfinite(self.a) and math.isfinite(self.b)
                and math.isfinite(self.R)):
            raise InvalidRadius("circle parameters must be finite")
        if self.R <= 0.0:
            raise InvalidRadius(f"radius must be positive, got {self.R}")

    @property
    def c(self) -> float:
        """The constant term a^2 + b^2 - R^2 of the expanded equation."""
        return self.a * self.a + self.b * self.b - self.R * self.R

    def translated(self, dx: float, dy: float) -> "CircleParams":
        return CircleParams(self.a + dx, self.b + dy, self.R)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "R": self.R}


@dataclass(frozen=True)
class ConicParams:
    """Unit-norm coefficients of A x^2 + B xy + C y^2 + D x + E y + F = 0."""

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        vec = np.array([self.A, self.B, self.C, self.D, self.E, self.F],
                       dtype=float)
        if not np.all(np.isfinite(vec)):
            raise InvalidSpec("conic coefficients must be finite")
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise InvalidSpec("conic coefficients must not all vanish")
        vec /= norm
        for name, val in zip("ABCDEF", vec):
            object.__setattr__(self, name, float(val))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.A, self.B, self.C, self.D, self.E, self.F])

    @property
    def is_degenerate_line(self) -> bool:
        """True when the quadratic part (A, B, C) is numerically zero."""
        return max(abs(self.A), abs(self.B), abs(self.C)) <= 1e-12

    def poly(self) -> BivariatePoly:
        return BivariatePoly(
            {(2, 0): self.A, (1, 1): self.B, (0, 2): self.C,
             (1, 0): self.D, (0, 1): self.E, (0, 0): self.F},
            exact=False,
        )

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in "ABCDEF"}


@dataclass(frozen=True)
class FitConfig:
    max_iterations: int = 100
    gradient_tol: float = 1e-10
    step_tol: float = 1e-12
    max_halvings: int = 60
    init: object = None  # CircleParams or parameter dict; None = default

    def __post_init__(self):
        if self.max_iterations < 1:
            raise InvalidSpec("max_iterations must be at least 1")
        if self.gradient_tol <= 0 or self.step_tol <= 0:
            raise InvalidSpec("tolerances must be positive")
        if self.max_halvings < 1:
            raise InvalidSpec("max_halvings must be at least 1")


@dataclass(frozen=True)
class FitResult:
    family: str
    params: object
    objective: float
    iterations: int
    converged: bool
    iteration_seconds: tuple
    data_passes: int
    diagnostics: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        params = (self.params.to_dict() if hasattr(self.params, "to_dict")
                  else dict(self.params))
        return {
            "family": self.family,
            "params": params,
            "objective": self.objective,
            "iterations": self.iterations,
            "converged": self.converged,
            "iteration_seconds": list(self.iteration_seconds),
            "data_passes": self.data_passes,
            "diagnostics": {k: (list(v) if isinstance(v, tuple) else v)
                            for k, v in self.diagnostics.items()},
        }


# ---------------------------------------------------------------------------
# the reduced circle objective and its derivatives
# ---------------------------------------------------------------------------


def _fa_val_grad_hess(z, n, a, b, R):
    """Value, gradient and Hessian of F(a,b,R) = E/R^2 where E is the
    quadratic z-statistic form with c = a^2+b^2-R^2 substituted."""
    z1, z2, z3, z4, z5, z6, z7, z8, z9 = (float(v) for v in z)
    n = float(n)
    c = a * a + b * b - R * R
    T = z7 + a * z8 + b * z9 + 2.0 * c * n  # dE/dc
    E = (z1 + a * z2 + b * z3 + a * a * z4 + b * b * z5 + a * b * z6
         + c * z7 + a * c * z8 + b * c * z9 + c * c * n)
    E_a = z2 + 2.0 * a * z4 + b * z6 + c * z8 + 2.0 * a * T
    E_b = z3 + 2.0 * b * z5 + a * z6 + c * z9 + 2.0 * b * T
    E_R = -2.0 * R * T
    E_aa = 2.0 * z4 + 4.0 * a * z8 + 2.0 * T + 8.0 * a * a * n
    E_ab = z6 + 2.0 * b * z8 + 2.0 * a * z9 + 8.0 * a * b * n
    E_aR = -2.0 * R * z8 - 8.0 * a * R * n
    E_bb = 2.0 * z5 + 4.0 * b * z9 + 2.0 * T + 8.0 * b * b * n
    E_bR = -2.0 * R * z9 - 8.0 * b * R * n
    E_RR = -2.0 * T + 8.0 * R * R * n
    R2 = R * R
    R3 = R2 * R
    R4 = R2 * R2
    F = E / R2
    grad = np.array([E_a / R2, E_b / R2, E_R / R2 - 2.0 * E / R3])
    hess = np.array([
        [E_aa / R2, E_ab / R2, E_aR / R2 - 2.0 * E_a / R3],
        [E_ab / R2, E_bb / R2, E_bR / R2 - 2.0 * E_b / R3],
        [E_aR / R2 - 2.0 * E_a / R3, E_bR / R2 - 2.0 * E_b / R3,
         E_RR / R2 - 4.0 * E_R / R3 + 6.0 * E / R4],
    ])
    return F, grad, hess


def _circle_triplet(p) -> tuple:
    if isinstance(p, CircleParams):
        return p.a, p.b, p.R
    a, b, R = (float(v) for v in p)
    return a, b, R


def eval_Fa_circle(z, n, p):
    """Evaluate the reduced circle objective and its (a, b, R) gradient.

    ``z`` is the nine-statistic view and ``n`` the point count, both as
    returned by ``MomentVector.circle_z_view``; coordinates of ``p`` must
    live in the same frame as the accumulator (centered if it was centered).
    Cost is independent of the number of data points.
    """
    a, b, R = _circle_triplet(p)
    if not (math.isfinite(R) and R > 0.0):
        raise InvalidRadius(f"radius must be positive, got {R}")
    if len(z) != 9:
        raise DegreeMismatch("expected the nine-statistic circle view")
    F, grad, _ = _fa_val_grad_hess(z, n, a, b, R)
    return float(F), grad


# ---------------------------------------------------------------------------
# damped Newton core
# ---------------------------------------------------------------------------


def _newton_step(H, g):
    """Solve H d = -g, escalating Levenberg damping until d is a descent
    direction; falls back to steepest descent."""
    k = len(g)
    scale = float(np.max(np.abs(H)))
    if not math.isfinite(scale) or scale == 0.0:
        scale = 1.0
    lam = 0.0
    for _ in range(14):
        try:
            d = np.linalg.solve(H + lam * np.eye(k), -g)
        except np.linalg.LinAlgError:
            d = None
        if d is not None and np.all(np.isfinite(d)) and float(d @ g) < 0.0:
            return d
        lam = 1e-8 * scale if lam == 0.0 else lam * 100.0
    return -g


_NOISE_BAND = 1024.0 * np.finfo(float).eps


def _damped_newton(fun, theta0, cfg: FitConfig, feasible=None):
    """Minimize fun: R^k -> (value, gradient, Hessian) by Newton steps with
    halving on ascent.

    Accepted steps never increase the objective beyond its evaluation-noise
    band: once the true decrease of a Newton step falls below the float
    resolution of the assembled objective, strict-descent line search would
    reject it at random and stall short of the minimizer; such steps are
    accepted anyway when they halve the gradient norm, which is geometric
    progress toward stationarity."""
    theta = np.asarray(theta0, dtype=float).copy()
    F, g, H = fun(theta)
    evals = 1
    times: list = []
    trace = [float(F)]

    def _grad_ok(gv, Fv):
        return bool(
            float(np.max(np.abs(gv))) <= cfg.gradient_tol * (1.0 + abs(Fv)))

    converged = _grad_ok(g, F)
    iters = 0
    while not converged and iters < cfg.max_iterations:
        t0 = time.perf_counter()
        delta = _newton_step(H, g)
        gmax = float(np.max(np.abs(g)))
        accepted = False
        for _ in range(cfg.max_halvings):
            cand = theta + delta
            if feasible is not None and not feasible(cand):
                delta = 0.5 * delta
                continue
            Fc, gc, Hc = fun(cand)
            evals += 1
            if math.isfinite(Fc) and (
                    Fc <= F
                    or (Fc - F <= _NOISE_BAND * (1.0 + abs(F))
                        and float(np.max(np.abs(gc))) <= 0.5 * gmax)):
                accepted = True
                break
            delta = 0.5 * delta
        if not accepted:
            times.append(time.perf_counter() - t0)
            break
        step = float(np.max(np.abs(delta)))
        theta, F, g, H = cand, Fc, gc, Hc
        iters += 1
        times.append(time.perf_counter() - t0)
        trace.append(float(F))
        if _grad_ok(g, F) or step <= cfg.step_tol:
            converged = True
    return theta, F, g, iters, converged, times, evals, trace


# ---------------------------------------------------------------------------
# circle fitters
# ---------------------------------------------------------------------------


def kasa_init(mv: MomentVector) -> CircleParams:
    """Linear least-squares circle: solve x^2+y^2+ax+by+g ~ 0 in the normal
    equations assembled from moments, then complete the square."""
    n = mv.n
    if n < 3:
        raise DegenerateData(f"need at least 3 points, got {n}")

    def m(p, q):
        return float(mv.entry(p, q))

    M = np.array([
        [m(2, 0), m(1, 1), m(1, 0)],
        [m(1, 1), m(0, 2), m(0, 1)],
        [m(1, 0), m(0, 1), float(n)],
    ])
    rhs = -np.array([m(3, 0) + m(1, 2), m(2, 1) + m(0, 3), m(2, 0) + m(0, 2)])
    cond = np.linalg.cond(M)
    if not math.isfinite(cond) or cond > _KASA_COND_LIMIT:
        raise DegenerateData("normal matrix is singular (collinear or "
                             "coincident samples)")
    alpha, beta, gamma = np.linalg.solve(M, rhs)
    a = -0.5 * alpha
    b = -0.5 * beta
    r2 = a * a + b * b - gamma
    if r2 <= 0.0:
        raise ImaginaryRadius(f"completed square gives R^2 = {r2}")
    ox, oy = mv.offset
    return CircleParams(a + ox, b + oy, math.sqrt(r2))


def fit_circle_reduced(mv: MomentVector, cfg: FitConfig = None) -> FitResult:
    """Minimize the moment-assembled circle objective; the data are touched
    only through the accumulator (one pass, done by the caller)."""
    cfg = cfg if cfg is not None else FitConfig()
    z, n = mv.circle_z_view()
    if n < 3:
        raise NoCircle(f"need at least 3 points, got {n}")
    ox, oy = mv.offset
    if cfg.init is not None:
        init = cfg.init
        if not isinstance(init, CircleParams):
            init = CircleParams(**init) if isinstance(init, dict) \
                else CircleParams(*init)
    else:
        try:
            init = kasa_init(mv)
        except (DegenerateData, ImaginaryRadius) as exc:
            raise NoCircle(f"linear initializer failed: {exc}") from exc
    theta0 = np.array([init.a - ox, init.b - oy, init.R])

    def fun(th):
        return _fa_val_grad_hess(z, n, th[0], th[1], th[2])

    def feasible(th):
        return bool(np.all(np.isfinite(th)) and th[2] > 0.0)

    theta, F, g, iters, converged, times, _, trace = _damped_newton(
        fun, theta0, cfg, feasible)
    params = CircleParams(theta[0] + ox, theta[1] + oy, theta[2])
    return FitResult(
        family="circle",
        params=params,
        objective=float(F),
        iterations=iters,
        converged=converged,
        iteration_seconds=tuple(times),
        data_passes=1,
        diagnostics={"gradient_inf_norm": float(np.max(np.abs(g))),
                     "objective_trace": tuple(trace),
                     "init": init.to_dict()},
    )


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidSpec(f"expected an (n, 2) point array, got {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise NonFiniteInput("data points must be finite")
    return pts


def fit_circle_geometric(points, init: CircleParams = None,
                         cfg: FitConfig = None) -> FitResult:
    """Damped Gauss-Newton on the distance residuals r_i = d_i - R.

    One pass over all n points per objective/Jacobian evaluation."""
    cfg = cfg if cfg is not None else FitConfig()
    pts = _as_points(points)
    n = pts.shape[0]
    if n < 3:
        raise DegenerateData(f"need at least 3 points, got {n}")
    x = pts[:, 0]
    y = pts[:, 1]
    if init is None:
        centroid = (float(x.mean()), float(y.mean()))
        init = kasa_init(MomentVector.from_points(pts, 3, offset=centroid))
    ones = np.ones(n)

    def fun(th):
        a, b, R = th
        dx = x - a
        dy = y - b
        d = np.hypot(dx, dy)
        if np.any(d == 0.0):
            raise CenterHitsDataPoint(
                f"trial center ({a}, {b}) coincides with a data point")
        r = d - R
        J = np.column_stack([-dx / d, -dy / d, -ones])
        g = 2.0 * (J.T @ r)
        H = 2.0 * (J.T @ J)  # Gauss-Newton curvature
        return float(r @ r), g, H

    def feasible(th):
        return bool(np.all(np.isfinite(th)) and th[2] > 0.0)

    theta0 = np.array([init.a, init.b, init.R])
    theta, F, g, iters, converged, times, evals, trace = _damped_newton(
        fun, theta0, cfg, feasible)
    params = CircleParams(theta[0], theta[1], theta[2])
    return FitResult(
        family="circle",
        params=params,
        objective=float(F),
        iterations=iters,
        converged=converged,
        iteration_seconds=tuple(times),
        data_passes=evals,
        diagnostics={"gradient_inf_norm": float(np.max(np.abs(g))),
                     "objective_trace": tuple(trace),
                     "init": init.to_dict()},
    )


# ---------------------------------------------------------------------------
# generic conic reweight baseline
# ---------------------------------------------------------------------------


def _canonical_sign(vec: np.ndarray) -> np.ndarray:
    for v in vec:
        if abs(v) > 1e-14:
            return -vec if v < 0.0 else vec
    return vec


def _conic_grad2(theta: np.ndarray, x: np.ndarray, y: np.ndarray):
    A, B, C, D, E, _ = theta
    px = 2.0 * A * x + B * y + D
    py = B * x + 2.0 * C * y + E
    return px, py, px * px + py * py


def fit_conic_reweight(points, cfg: FitConfig = None) -> FitResult:
    """Gradient-weighted algebraic conic fit by alternating weight freezing
    and an exact unit-norm quadratic minimization (smallest eigenvector of
    the weighted scatter matrix). O(n) per iteration."""
    cfg = cfg if cfg is not None else FitConfig()
    pts = _as_points(points)
    n = pts.shape[0]
    if n < 6:
        raise DegenerateData(f"need at least 6 points, got {n}")
    x = pts[:, 0]
    y = pts[:, 1]
    Z = np.column_stack([x * x, x * y, y * y, x, y, np.ones(n)])
    weights = np.ones(n)
    theta = None
    trace: list = []
    times: list = []
    converged = False
    iters = 0
    eig_min = math.nan
    while iters < cfg.max_iterations:
        t0 = time.perf_counter()
        S = Z.T @ (weights[:, None] * Z)
        S = 0.5 * (S + S.T)
        evals, vecs = np.linalg.eigh(S)
        cand = _canonical_sign(vecs[:, 0])
        eig_min = float(evals[0])
        step = math.inf if theta is None else min(
            float(np.linalg.norm(cand - theta)),
            float(np.linalg.norm(cand + theta)))
        _, _, grad2 = _conic_grad2(cand, x, y)
        # relative zero: a sample sitting at a singular point of the trial
        # conic has |grad|^2 at rounding-noise level of the others
        if np.any(grad2 <= 1e-24 * max(1.0, float(np.mean(grad2)))):
            raise GradientVanishesAtSample(
                "curve gradient vanishes at a sample; weight undefined")
        weights = 1.0 / grad2
        if not np.all(np.isfinite(weights)):
            raise GradientVanishesAtSample(
                "weight overflow: curve gradient is numerically zero at "
                "a sample")
        theta = cand
        trace.append(float(np.sum((Z @ theta) ** 2 * weights)))
        iters += 1
        times.append(time.perf_counter() - t0)
        if step <= cfg.step_tol:
            converged = True
            break
    params = ConicParams(*theta)
    resid = Z @ theta
    objective = float(np.sum(resid * resid * weights))
    return FitResult(
        family="conic",
        params=params,
        objective=objective,
        iterations=iters,
        converged=converged,
        iteration_seconds=tuple(times),
        data_passes=1 + iters,
        diagnostics={
            "stationarity_residual": _conic_stationarity(theta, Z, x, y),
            "objective_trace": tuple(trace),
            "smallest_eigenvalue": eig_min,
        },
    )


def _conic_stationarity(theta, Z, x, y) -> float:
    """Infinity norm of the tangential full-objective gradient at theta,
    including the term from differentiating the weights; reported as a
    diagnostic — the freezing iteration does not drive it to zero."""
    px, py, grad2 = _conic_grad2(theta, x, y)
    w = 1.0 / grad2
    P = Z @ theta
    zeros = np.zeros_like(x)
    ones = np.ones_like(x)
    dpx = np.column_stack([2.0 * x, y, zeros, ones, zeros, zeros])
    dpy = np.column_stack([zeros, x, 2.0 * y, zeros, ones, zeros])
    dgrad2 = 2.0 * px[:, None] * dpx + 2.0 * py[:, None] * dpy
    full = (2.0 * (P * w) @ Z) - ((P * P * w * w) @ dgrad2)
    tangential = full - float(full @ theta) * theta
    return float(np.max(np.abs(tangential)))


# ---------------------------------------------------------------------------
# certificate-driven generic reduced fit
# ---------------------------------------------------------------------------


class _CertObjective:
    """Assembles F(theta) = <moments, W_theta * P_theta^2> where W_theta is
    re-solved from the tiny certificate system at each parameter value.
    The system degree is pinned by the certificate, so the per-evaluation
    cost is independent of the number of data points."""

    def __init__(self, family: CurveFamily, degree: int, mv: MomentVector,
                 shift=(0.0, 0.0)):
        self.family = family
        self.names = family.param_names
        self.degree = degree
        self.mv = mv
        self.shift = shift  # raw = centered + shift, circle centers only

    def theta_dict(self, vec) -> dict:
        return {k: float(v) for k, v in zip(self.names, vec)}

    def feasible(self, vec) -> bool:
        if not np.all(np.isfinite(vec)):
            return False
        try:
            self.family.validate(self.theta_dict(vec))
        except InvalidSpec:
            return False
        return True

    def _solve(self, vec):
        th = self.theta_dict(vec)
        P = self.family.build_poly(th, False)
        px = partial_derivative(P, "x")
        py = partial_derivative(P, "y")
        Q = px * px + py * py
        cols, rows, ridx = _build_system(P, Q, self.degree)
        k = len(cols)
        A = np.zeros((len(rows), 2 * k))
        _fill_float(A, P, cols, ridx, 0)
        _fill_float(A, Q, cols, ridx, k)
        b = np.zeros(len(rows))
        b[ridx[(0, 0)]] = 1.0
        Ap = np.linalg.pinv(A, rcond=1e-12)
        s = Ap @ b
        if float(np.linalg.norm(A @ s - b)) > _CERT_ACCEPT:
            raise NumericalFailure(
                f"certificate of degree {self.degree} lost at theta={th}")
        W = BivariatePoly({mn: s[k + j] for j, mn in enumerate(cols)},
                          exact=False)
        return th, P, (px, py), W, (cols, ridx, k, A, Ap, s)

    def value_grad(self, vec):
        th, P, (px, py), W, (cols, ridx, k, A, Ap, s) = self._solve(vec)
        F = float(self.mv.contract(W * P * P))
        AtpS = Ap.T @ s
        grads = []
        for name in self.names:
            dP = self.family.poly_dtheta(th, name)
            dQ = 2.0 * (px * partial_derivative(dP, "x")
                        + py * partial_derivative(dP, "y"))
            # dP, dQ fit in A's row space (their degrees never exceed those
            # of P, Q), so the same monomial index applies
            dA = np.zeros_like(A)
            _fill_float(dA, dP, cols, ridx, 0)
            _fill_float(dA, dQ, cols, ridx, k)
            # min-norm solution derivative (zero-residual case)
            v = dA.T @ AtpS
            ds = -Ap @ (dA @ s) + (v - Ap @ (A @ v))
            dW = BivariatePoly({mn: ds[k + j] for j, mn in enumerate(cols)},
                               exact=False)
            dG = dW * P * P + 2.0 * (W * P * dP)
            grads.append(float(self.mv.contract(dG)))
        return F, np.array(grads)

    def value_grad_hess(self, vec):
        F, g = self.value_grad(vec)
        k = len(vec)
        H = np.zeros((k, k))
        for j in range(k):
            h = 1e-6 * (1.0 + abs(float(vec[j])))
            up = np.array(vec, dtype=float)
            dn = np.array(vec, dtype=float)
            up[j] += h
            dn[j] -= h
            if self.feasible(up) and self.feasible(dn):
                _, gu = self.value_grad(up)
                _, gd = self.value_grad(dn)
                H[:, j] = (gu - gd) / (2.0 * h)
            elif self.feasible(up):
                _, gu = self.value_grad(up)
                H[:, j] = (gu - g) / h
            elif self.feasible(dn):
                _, gd = self.value_grad(dn)
                H[:, j] = (g - gd) / h
            else:
                H[j, j] = 1.0
        return F, g, 0.5 * (H + H.T)


def fit_reduced_generic(family, cert: ReductionCertificate, mv: MomentVector,
                        cfg: FitConfig = None) -> FitResult:
    """Minimize the certificate-weighted objective assembled from moments.

    Same damped Newton driver as the reduced circle fit; the data enter
    only through the accumulator."""
    cfg = cfg if cfg is not None else FitConfig()
    fam = get_family(family) if isinstance(family, str) else family
    if not (cert.identity_residual <= _CERT_ACCEPT):
        raise InvalidSpec(
            f"certificate not verified: identity residual "
            f"{cert.identity_residual} exceeds {_CERT_ACCEPT}")
    ox, oy = mv.offset
    centered = (ox, oy) != (0.0, 0.0)
    if centered and fam.name != "circle":
        raise InvalidSpec(
            "centered accumulators are only supported for the circle family; "
            "rebuild the moments with offset (0, 0)")

    if cfg.init is not None:
        init = cfg.init
        if isinstance(init, CircleParams):
            theta_raw = {"a": init.a, "b": init.b, "R": init.R}
        else:
            theta_raw = {k: float(v) for k, v in dict(init).items()}
    elif fam.name == "circle":
        k0 = kasa_init(mv)
        theta_raw = {"a": k0.a, "b": k0.b, "R": k0.R}
    else:
        raise InvalidSpec(f"family {fam.name!r} needs an explicit initializer "
                          "in FitConfig.init")
    fam.validate(theta_raw)

    shift = {"a": ox, "b": oy} if fam.name == "circle" else {}
    theta0 = np.array([theta_raw[k] - shift.get(k, 0.0) for k in fam.param_names])

    P0 = fam.build_poly({k: float(theta0[i])
                         for i, k in enumerate(fam.param_names)}, False)
    need = cert.degree + 2 * int(P0.degree())
    if mv.max_total_degree < need:
        raise DegreeMismatch(
            f"moment degree {mv.max_total_degree} < required {need} "
            f"(certificate degree {cert.degree}, curve degree {P0.degree()})")

    obj = _CertObjective(fam, cert.degree, mv)
    theta, F, g, iters, converged, times, _, trace = _damped_newton(
        obj.value_grad_hess, theta0, cfg, obj.feasible)

    final = {k: float(theta[i]) + shift.get(k, 0.0)
             for i, k in enumerate(fam.param_names)}
    params = CircleParams(final["a"], final["b"], final["R"]) \
        if fam.name == "circle" else final
    return FitResult(
        family=fam.name,
        params=params,
        objective=float(F),
        iterations=iters,
        converged=converged,
        iteration_seconds=tuple(times),
        data_passes=1,
        diagnostics={"gradient_inf_norm": float(np.max(np.abs(g))),
                     "objective_trace": tuple(trace),
                     "certificate_degree": cert.degree},
    )
