"""Reduction-of-complexity analyzer.

Decides, for a polynomial curve P and its squared gradient Q, which of two
mutually exclusive situations holds:

* P and Q share a common zero in C^2 — then no polynomial weight W can agree
  with 1/Q on the whole curve, and the family admits no reduced objective; a
  refined :class:`CommonZeroWitness` is produced as evidence;
* P*U + Q*W = 1 has polynomial solutions — then W is a valid weight
  polynomial, the reduced objective exists, and a verified
  :class:`ReductionCertificate` is produced.

Witness search eliminates one variable with a Sylvester resultant, root-finds
the eliminated system, lifts candidates and polishes them with a damped
two-dimensional Newton iteration. Certificate search poses the identity as a
linear system in the unknown coefficients of U and W, degree by degree.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    BoundExhausted,
    DegenerateInput,
    NumericalFailure,
)
from .families import CurveFamily, get_family
from .poly import (
    NEG_INF,
    BivariatePoly,
    format_poly,
    gradient_norm_squared,
    structural_trim,
    sylvester_resultant,
)

WITNESS_TOL = 1e-8          # relative residual accepted for a common zero
CERT_FLOAT_TOL = 1e-10      # identity residual accepted for a float certificate
RANK_CUTOFF = 1e-10         # singular values below cutoff*largest are zero
_SAMPLE_TRIES = 8           # random slices tried when the resultant vanishes


@dataclass(frozen=True)
class CommonZeroWitness:
    """A point of C^2 where both P and Q vanish (within tolerance)."""

    x: complex
    y: complex
    residual_P: float
    residual_Q: float

    def to_dict(self) -> dict:
        return {
            "x": [self.x.real, self.x.imag],
            "y": [self.y.real, self.y.imag],
            "residual_P": self.residual_P,
            "residual_Q": self.residual_Q,
        }


@dataclass(frozen=True)
class ReductionCertificate:
    """Polynomials U, W with P*U + Q*W = 1, plus the verified residual."""

    U: BivariatePoly
    W: BivariatePoly
    identity_residual: float
    degree: int

    def to_dict(self) -> dict:
        return {
            "U": format_poly(self.U if self.U.exact else self.U),
            "W": format_poly(self.W),
            "identity_residual": self.identity_residual,
            "degree": self.degree,
        }


# ---------------------------------------------------------------------------
# small numerical helpers
# ---------------------------------------------------------------------------


def _unit_normalize(P: BivariatePoly) -> BivariatePoly:
    scale = P.max_coeff_mag()
    if scale == 0.0 or scale == 1.0:
        return P
    return P * (1.0 / scale)


def _int_degree(P: BivariatePoly) -> int:
    d = P.degree()
    return 0 if d == NEG_INF else int(d)


def _rel_residual(P: BivariatePoly, x: complex, y: complex) -> float:
    scale = max(P.max_coeff_mag(), 1e-300)
    pt = max(1.0, abs(x), abs(y)) ** _int_degree(P)
    return abs(P.eval(x, y)) / (scale * pt)


def _poly_roots(coeffs: np.ndarray) -> np.ndarray:
    """Roots of an ascending complex coefficient array: companion-matrix
    eigenvalues, then a few Newton polish steps."""
    c = np.asarray(coeffs, dtype=complex)
    if c.size <= 1:
        return np.empty(0, dtype=complex)
    roots = np.roots(c[::-1])
    dc = c[1:] * np.arange(1, c.size)
    for _ in range(3):
        vals = np.polyval(c[::-1], roots)
        dvals = np.polyval(dc[::-1], roots) if dc.size else np.zeros_like(roots)
        safe = np.abs(dvals) > 1e-30
        roots = np.where(safe, roots - vals / np.where(safe, dvals, 1.0), roots)
    return roots


def _slice_coeffs(P: BivariatePoly, val: complex, elim: str) -> np.ndarray | None:
    """Coefficients of P with the kept variable frozen at ``val``; the
    eliminated variable is the remaining unknown. None if the whole slice
    vanishes (P contains the line)."""
    d = P.deg_in(elim)
    d = 0 if d == NEG_INF else int(d)
    out = np.zeros(d + 1, dtype=complex)
    for (p, q), c in P.terms.items():
        if elim == "y":
            out[q] += c * val ** p
        else:
            out[p] += c * val ** q
    ptscale = max(1.0, abs(val)) ** _int_degree(P)
    if np.all(np.abs(out) <= 1e-10 * ptscale):
        return None
    trim = 1e-9 * float(np.max(np.abs(out)))
    while out.size > 1 and abs(out[-1]) <= trim:
        out = out[:-1]
    return out


def _newton_refine(P, Q, Px, Py, Qx, Qy, x, y, iters: int = 60):
    """Damped Newton on the 2x2 system (P, Q) = 0. Returns (x, y, resP, resQ)."""

    def res(a, b):
        return max(_rel_residual(P, a, b), _rel_residual(Q, a, b))

    best = (x, y, res(x, y))
    for _ in range(iters):
        f1 = P.eval(x, y)
        f2 = Q.eval(x, y)
        j11, j12 = Px.eval(x, y), Py.eval(x, y)
        j21, j22 = Qx.eval(x, y), Qy.eval(x, y)
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-30:
            break
        dx = (f1 * j22 - f2 * j12) / det
        dy = (j11 * f2 - j21 * f1) / det
        step = 1.0
        improved = False
        for _ in range(12):
            nx, ny = x - step * dx, y - step * dy
            r = res(nx, ny)
            if r < best[2]:
                x, y, best = nx, ny, (nx, ny, r)
                improved = True
                break
            step *= 0.5
        if not improved:
            break
        if best[2] <= 1e-14:
            break
    x, y, r = best
    return (complex(x), complex(y),
            float(_rel_residual(P, x, y)), float(_rel_residual(Q, x, y)))


# ---------------------------------------------------------------------------
# common-zero search
# ---------------------------------------------------------------------------


_MATCH_TOL = 1e-3  # relative gap for pairing roots of the two slices


def _lift_candidates(pu, qu) -> tuple[list[complex], bool]:
    """Candidate values of the lift unknown from two slice polynomials.

    Lifting intersects the root sets: a common zero needs a root of both
    slices at (numerically) the same place. Returns (candidates, ruled_out):
    ruled_out is True when the slice pair provably has no common root — one
    side is a nonzero constant (the classic vanishing-leading-coefficient
    artifact of resultants) or the root sets are disjoint.
    """
    if pu is None and qu is None:
        return [0.0 + 0.0j], False  # both vanish identically on the slice
    if pu is None or qu is None:
        alive = qu if pu is None else pu
        if alive.size <= 1:
            return [], True
        # the other polynomial vanishes on the whole slice, so every root of
        # the surviving one is already a candidate common zero
        return list(_poly_roots(alive)), False
    if pu.size <= 1 or qu.size <= 1:
        return [], True
    proots = _poly_roots(pu)
    qroots = _poly_roots(qu)
    cands = []
    for rp in proots:
        gaps = np.abs(qroots - rp)
        j = int(np.argmin(gaps))
        if gaps[j] <= _MATCH_TOL * max(1.0, abs(rp)):
            cands.append((rp + qroots[j]) / 2.0)
    return cands, not cands


def _resultant_roots(R: BivariatePoly):
    """Roots of a univariate bivariate-typed resultant, or None when R is
    identically zero / unavailable."""
    if R is None or R.is_zero():
        return None
    d = _int_degree(R)
    if d == 0:
        return np.empty(0, dtype=complex)
    var = "x" if R.deg_in("x") != NEG_INF and R.deg_in("x") > 0 else "y"
    rc = np.zeros(int(R.deg_in(var)) + 1, dtype=complex)
    for (p, q), c in R.terms.items():
        rc[p if var == "x" else q] += c
    return _poly_roots(rc)


def _near_some_root(val: complex, roots) -> bool:
    """Whether val sits near the admissible coordinate spectrum.

    A finite common zero must have each coordinate among the roots of the
    respective resultant; candidates that drift away (typically toward
    infinity along an asymptote, where scale-relative residuals lose meaning)
    are rejected by this check.
    """
    if roots is None:
        return True
    if roots.size == 0:
        return False
    return bool(np.min(np.abs(roots - val)) <= 1e-3 * max(1.0, abs(val)))


class _Search:
    """Shared state for one find_common_zero run."""

    def __init__(self, P, Q):
        self.P, self.Q = P, Q
        self.Px, self.Py = P.partial("x"), P.partial("y")
        self.Qx, self.Qy = Q.partial("x"), Q.partial("y")
        self.spectrum = {"x": None, "y": None}  # admissible coordinate roots

    def refine(self, x0, y0):
        return _newton_refine(self.P, self.Q, self.Px, self.Py,
                              self.Qx, self.Qy, x0, y0)

    def try_slice(self, val: complex, elim: str):
        """Lift one slice. Returns (witness|None, fully_resolved)."""
        pu = _slice_coeffs(self.P, val, elim)
        qu = _slice_coeffs(self.Q, val, elim)
        cands, ruled_out = _lift_candidates(pu, qu)
        if ruled_out:
            return None, True
        resolved = True
        for cand in cands:
            if elim == "y":
                x, y, rp, rq = self.refine(val, cand)
            else:
                x, y, rp, rq = self.refine(cand, val)
            if rp <= WITNESS_TOL and rq <= WITNESS_TOL:
                if _near_some_root(x, self.spectrum["x"]) and \
                        _near_some_root(y, self.spectrum["y"]):
                    return CommonZeroWitness(x, y, rp, rq), True
                continue  # diverged toward infinity: provably not affine
            resolved = False
        return None, resolved


def find_common_zero(P: BivariatePoly, Q: BivariatePoly):
    """A common zero of P and Q in C^2, or None if there is none.

    Eliminates each variable with a Sylvester resultant. A nonzero constant
    resultant settles the matter immediately. Otherwise resultant roots are
    the only admissible coordinates: each is lifted by intersecting slice
    root sets and polished with a damped two-dimensional Newton iteration,
    and a candidate is accepted only when both residuals meet the witness
    tolerance and both coordinates lie on the admissible spectra (this kills
    the classical artifacts — vanishing leading coefficients and escapes to
    infinity along asymptotes). An identically zero resultant (shared factor)
    is handled by lifting random slices. An unresolvable search raises
    NumericalFailure rather than guessing.
    """
    if _int_degree(P) == 0:
        raise DegenerateInput("P is constant; nothing to intersect")
    Pf = _unit_normalize(structural_trim(P.to_float()))
    Qf = _unit_normalize(structural_trim(Q.to_float()))
    search = _Search(Pf, Qf)

    resultants = {}
    for elim in ("y", "x"):
        try:
            resultants[elim] = structural_trim(
                sylvester_resultant(Pf, Qf, elim), 1e-12)
        except Exception:
            resultants[elim] = None  # degenerate direction
    # a nonzero constant resultant proves emptiness outright
    for R in resultants.values():
        if R is not None and not R.is_zero() and R.degree() <= 0:
            return None

    # admissible coordinate spectra: x from the y-elimination and vice versa
    search.spectrum["x"] = _resultant_roots(resultants["y"])
    search.spectrum["y"] = _resultant_roots(resultants["x"])

    rng = np.random.default_rng(1729)
    any_definitive = False
    for elim in ("y", "x"):
        R = resultants[elim]
        if R is None:
            continue
        if R.is_zero():
            # shared factor: infinitely many common points; sample slices
            for _ in range(_SAMPLE_TRIES):
                val = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
                witness, _ = search.try_slice(val, elim)
                if witness is not None:
                    return witness
            continue
        roots = search.spectrum["x" if elim == "y" else "y"]
        all_resolved = True
        for r in roots:
            witness, resolved = search.try_slice(complex(r), elim)
            if witness is not None:
                return witness
            all_resolved = all_resolved and resolved
        any_definitive = any_definitive or all_resolved
    if any_definitive:
        return None
    raise NumericalFailure(
        "common-zero search could not certify either outcome "
        f"(degrees {_int_degree(P)}, {_int_degree(Q)})"
    )


# ---------------------------------------------------------------------------
# Nullstellensatz certificates
# ---------------------------------------------------------------------------


def _monomials(d: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(d + 1) for q in range(d + 1 - p)]


def _build_system(P: BivariatePoly, Q: BivariatePoly, d: int):
    """Linear system A s = e0 equating coefficients of P*U + Q*W with 1."""
    cols = _monomials(d)
    drow = d + max(_int_degree(P), _int_degree(Q))
    rows = _monomials(drow)
    ridx = {m: i for i, m in enumerate(rows)}
    return cols, rows, ridx


def _fill_float(A, P, cols, ridx, col_base):
    for j, (p, q) in enumerate(cols):
        for (a, b), c in P.terms.items():
            A[ridx[(a + p, b + q)], col_base + j] += complex(c).real


def _solve_float_at(P, Q, d):
    cols, rows, ridx = _build_system(P, Q, d)
    k = len(cols)
    A = np.zeros((len(rows), 2 * k))
    _fill_float(A, P, cols, ridx, 0)
    _fill_float(A, Q, cols, ridx, k)
    b = np.zeros(len(rows))
    b[ridx[(0, 0)]] = 1.0
    sol, *_ = np.linalg.lstsq(A, b, rcond=RANK_CUTOFF)
    if np.linalg.norm(A @ sol - b) > 1e-8:
        return None
    U = BivariatePoly({m: sol[j] for j, m in enumerate(cols)}, exact=False)
    W = BivariatePoly({m: sol[k + j] for j, m in enumerate(cols)}, exact=False)
    return U, W


def _rref(M: list[list[Fraction]]):
    """Reduced row echelon form in place; returns pivot column list."""
    rows, cols = len(M), len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        pv = M[r][c]
        M[r] = [v / pv for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def _solve_exact_at(P, Q, d):
    cols, rows, ridx = _build_system(P, Q, d)
    k = len(cols)
    ncols = 2 * k
    M = [[Fraction(0)] * (ncols + 1) for _ in rows]
    for base, poly in ((0, P), (k, Q)):
        for j, (p, q) in enumerate(cols):
            for (a, b), c in poly.terms.items():
                M[ridx[(a + p, b + q)]][base + j] += Fraction(c)
    M[ridx[(0, 0)]][ncols] = Fraction(1)
    pivots = _rref(M)
    piv_set = set(pivots)
    for row in M:
        if all(v == 0 for v in row[:ncols]) and row[ncols] != 0:
            return None  # inconsistent: infeasible at this degree
    # particular solution with free variables zero
    x0 = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x0[c] = M[r][ncols]
    free = [c for c in range(ncols) if c not in piv_set]
    if free:
        # minimum-norm solution: project x0 onto the affine solution set
        basis = []
        for fcol in free:
            v = [Fraction(0)] * ncols
            v[fcol] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -M[r][fcol]
            basis.append(v)
        m = len(basis)
        G = [[sum(basis[i][t] * basis[j][t] for t in range(ncols))
              for j in range(m)] for i in range(m)]
        h = [-sum(basis[i][t] * x0[t] for t in range(ncols)) for i in range(m)]
        coef = _solve_spd_exact(G, h)
        for i in range(m):
            if coef[i] != 0:
                for t in range(ncols):
                    x0[t] += coef[i] * basis[i][t]
    U = BivariatePoly({mno: x0[j] for j, mno in enumerate(cols)}, exact=True)
    W = BivariatePoly({mno: x0[k + j] for j, mno in enumerate(cols)}, exact=True)
    return U, W


def _solve_spd_exact(G, h):
    """Gaussian elimination for a symmetric positive-definite Fraction system."""
    m = len(G)
    M = [row[:] + [h[i]] for i, row in enumerate(G)]
    for c in range(m):
        pivot = next(i for i in range(c, m) if M[i][c] != 0)
        M[c], M[pivot] = M[pivot], M[c]
        pv = M[c][c]
        M[c] = [v / pv for v in M[c]]
        for i in range(m):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [M[i][m] for i in range(m)]


def _identity_residual(P, Q, U, W) -> float:
    E = P * U + Q * W - 1
    if E.exact:
        return 0.0 if E.is_zero() else E.max_coeff_mag()
    return E.max_coeff_mag()


def solve_nullstellensatz(P: BivariatePoly, Q: BivariatePoly, max_degree: int):
    """Minimal-degree polynomials U, W with P*U + Q*W = 1, if any exist with
    total degree <= max_degree; None when the identity is infeasible that far.

    Feasibility is monotone in the degree bound, so the floating path first
    decides at max_degree with a single least-squares solve, then walks up
    from zero to locate the minimal degree. Exact (rational) inputs use
    fraction-free elimination and return the exact minimum-norm solution.
    """
    if P.is_zero() or Q.is_zero():
        raise DegenerateInput("P and Q must be nonzero")
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    exact = P.exact and Q.exact

    if exact:
        for d in range(max_degree + 1):
            got = _solve_exact_at(P, Q, d)
            if got is not None:
                U, W = got
                res = _identity_residual(P, Q, U, W)
                if res != 0.0:
                    raise NumericalFailure("exact certificate failed verification")
                return ReductionCertificate(U, W, 0.0, d)
        return None

    sP = P.max_coeff_mag()
    sQ = Q.max_coeff_mag()
    Pn = _unit_normalize(structural_trim(P.to_float()))
    Qn = _unit_normalize(structural_trim(Q.to_float()))
    if _solve_float_at(Pn, Qn, max_degree) is None:
        return None
    for d in range(max_degree + 1):
        got = _solve_float_at(Pn, Qn, d)
        if got is None:
            continue
        U, W = got
        U = U * (1.0 / sP)
        W = W * (1.0 / sQ)
        res = _identity_residual(P.to_float(), Q.to_float(), U, W)
        if res <= CERT_FLOAT_TOL:
            return ReductionCertificate(U, W, res, d)
    return None


def verify_certificate(P: BivariatePoly, Q: BivariatePoly,
                       cert: ReductionCertificate) -> float:
    """Recomputed max-coefficient residual of P*U + Q*W - 1."""
    return _identity_residual(P, Q, cert.U, cert.W)


def restriction_residual(P: BivariatePoly, Q: BivariatePoly, W: BivariatePoly,
                         samples: int = 24, span: float = 3.0):
    """max |W*Q - 1| over sampled real points of the curve P = 0.

    On the curve the identity forces W = 1/Q, so this measures how well W
    restricts to the reciprocal weight. Returns None when no real points are
    found in the scanned window.
    """
    Pf = P.to_float()
    Qf = Q.to_float()
    Wf = W.to_float()
    worst = None
    count = 0
    for elim in ("y", "x"):
        for val in np.linspace(-span, span, 61):
            cu = _slice_coeffs(Pf, complex(val), elim)
            if cu is None or cu.size <= 1:
                continue
            for root in _poly_roots(cu):
                if abs(root.imag) > 1e-8 * max(1.0, abs(root)):
                    continue
                x, y = (val, root.real) if elim == "y" else (root.real, val)
                if _rel_residual(Pf, x, y) > 1e-7:
                    continue
                qv = Qf.eval(x, y)
                if abs(qv) < 1e-12:
                    continue
                gap = abs(Wf.eval(x, y) * qv - 1.0)
                worst = gap if worst is None else max(worst, gap)
                count += 1
                if count >= samples:
                    return worst
    return worst


# ---------------------------------------------------------------------------
# verdicts and family reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionDecision:
    """Outcome for one (P, Q) pair."""

    admissible: bool
    witness: CommonZeroWitness | None
    certificate: ReductionCertificate | None
    max_degree: int

    def to_dict(self) -> dict:
        return {
            "admissible": self.admissible,
            "witness": self.witness.to_dict() if self.witness else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "max_degree": self.max_degree,
        }


def default_degree_bound(P: BivariatePoly, Q: BivariatePoly) -> int:
    return max(3, _int_degree(P)) * max(3, _int_degree(Q))


def decide_reduction(P: BivariatePoly, Q: BivariatePoly | None = None,
                     max_degree: int | None = None) -> ReductionDecision:
    """Full verdict for one polynomial: witness search, then certificate.

    Q defaults to the squared gradient of P. Raises BoundExhausted when
    neither a witness nor a certificate materializes — an inconclusive state
    distinct from both definite answers.
    """
    if Q is None:
        Q = gradient_norm_squared(P)
    if max_degree is None:
        max_degree = default_degree_bound(P, Q)
    witness = find_common_zero(P, Q)
    if witness is not None:
        return ReductionDecision(False, witness, None, max_degree)
    cert = solve_nullstellensatz(P, Q, max_degree)
    if cert is None:
        raise BoundExhausted(
            f"no witness and no certificate through degree {max_degree}"
        )
    return ReductionDecision(True, None, cert, max_degree)


@dataclass(frozen=True)
class SampleReport:
    index: int
    theta: dict
    verdict: str                      # admissible | not_admissible | inconclusive | error
    witness: CommonZeroWitness | None = None
    certificate: ReductionCertificate | None = None
    restriction: float | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "theta": {k: float(v) for k, v in self.theta.items()},
            "verdict": self.verdict,
            "witness": self.witness.to_dict() if self.witness else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "restriction": self.restriction,
            "error": self.error,
        }


@dataclass(frozen=True)
class FamilyReport:
    family: str
    samples: tuple
    consistent: bool
    verdict: str

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "consistent": self.consistent,
            "verdict": self.verdict,
            "samples": [s.to_dict() for s in self.samples],
        }


def _analyze_one(family: CurveFamily, idx: int, theta: dict, exact: bool,
                 max_degree: int | None) -> SampleReport:
    try:
        P = family.poly(theta, exact=exact)
        Q = gradient_norm_squared(P)
        decision = decide_reduction(P, Q, max_degree)
    except BoundExhausted:
        return SampleReport(idx, theta, "inconclusive")
    except Exception as exc:
        return SampleReport(idx, theta, "error", error=f"{type(exc).__name__}: {exc}")
    if decision.admissible:
        restriction = restriction_residual(P, Q, decision.certificate.W)
        return SampleReport(idx, theta, "admissible",
                            certificate=decision.certificate,
                            restriction=restriction)
    return SampleReport(idx, theta, "not_admissible", witness=decision.witness)


def analyze_family(family, samples: int, rng=None, exact: bool = True,
                   max_degree: int | None = None, workers: int = 0) -> FamilyReport:
    """Per-sample admissibility verdicts over random parameters of a family.

    Errors in individual samples are recorded, never abort the batch. The
    report carries a consistency flag: every nondegenerate sample of one
    family must land on the same verdict.
    """
    if isinstance(family, str):
        family = get_family(family)
    if rng is None:
        rng = np.random.default_rng(0)
    thetas = [family.sample_theta(rng) for _ in range(samples)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(
                lambda it: _analyze_one(family, it[0], it[1], exact, max_degree),
                enumerate(thetas)))
    else:
        reports = [_analyze_one(family, i, t, exact, max_degree)
                   for i, t in enumerate(thetas)]
    reports.sort(key=lambda r: r.index)
    decided = {r.verdict for r in reports if r.verdict in ("admissible", "not_admissible")}
    consistent = len(decided) <= 1
    if not decided:
        verdict = "inconclusive"
    elif not consistent:
        verdict = "mixed"
    else:
        verdict = decided.pop()
    return FamilyReport(family.name, tuple(reports), consistent, verdict)
