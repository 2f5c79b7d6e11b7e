"""Sparse bivariate polynomial arithmetic.

Polynomials in x, y are stored as a map ``(p, q) -> coefficient`` in canonical
sparse form (no zero terms). Two coefficient domains are supported, flagged per
polynomial:

* exact mode: ``fractions.Fraction`` entries. Floats fed into an exact
  polynomial are converted exactly (every float is a dyadic rational), so
  elimination and certificate computations are free of rounding.
* floating mode: ``complex`` entries in double precision.

Mixing modes in arithmetic promotes to floating. All values are immutable
after construction and every operation is a pure function, so instances can
be shared freely across threads.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import numpy as np

from .errors import DegenerateElimination, ParseError

# Relative tolerance for floating coefficient equality, after normalizing by
# the largest coefficient magnitude.
COEFF_EQ_TOL = 1e-12

NEG_INF = float("-inf")


def _to_exact(c) -> Fraction:
    if isinstance(c, Rational):
        return Fraction(c)
    if isinstance(c, float):
        return Fraction(c)  # exact: floats are dyadic rationals
    if isinstance(c, complex):
        if c.imag != 0.0:
            raise TypeError("exact mode supports rational coefficients only")
        return Fraction(c.real)
    raise TypeError(f"unsupported coefficient type {type(c)!r}")


def _to_float(c) -> complex:
    if isinstance(c, Rational):
        return complex(float(c))
    return complex(c)


class BivariatePoly:
    """A sparse polynomial in two variables with exact or floating coefficients."""

    __slots__ = ("terms", "exact")

    def __init__(self, terms=None, exact: bool | None = None):
        items = dict(terms or {})
        if exact is None:
            exact = all(isinstance(c, Rational) for c in items.values())
        conv = _to_exact if exact else _to_float
        clean = {}
        for (p, q), c in items.items():
            p, q = int(p), int(q)
            if p < 0 or q < 0:
                raise ValueError("exponents must be nonnegative")
            cc = conv(c)
            if cc != 0:
                clean[(p, q)] = cc
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "exact", bool(exact))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("BivariatePoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, exact: bool = True) -> "BivariatePoly":
        return cls({}, exact=exact)

    @classmethod
    def constant(cls, c, exact: bool | None = None) -> "BivariatePoly":
        return cls({(0, 0): c}, exact=exact)

    @classmethod
    def variable(cls, name: str, exact: bool = True) -> "BivariatePoly":
        if name == "x":
            return cls({(1, 0): 1}, exact=exact)
        if name == "y":
            return cls({(0, 1): 1}, exact=exact)
        raise ValueError("variable must be 'x' or 'y'")

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree; the zero polynomial reports -inf."""
        if not self.terms:
            return NEG_INF
        return max(p + q for p, q in self.terms)

    def deg_in(self, var: str):
        """Degree in one variable; -inf for the zero polynomial."""
        idx = _var_index(var)
        if not self.terms:
            return NEG_INF
        return max(k[idx] for k in self.terms)

    def coeff(self, p: int, q: int):
        zero = Fraction(0) if self.exact else 0j
        return self.terms.get((p, q), zero)

    def max_coeff_mag(self) -> float:
        if not self.terms:
            return 0.0
        return max(abs(float(c)) if self.exact else abs(c) for c in self.terms.values())

    # -- mode conversion ----------------------------------------------------

    def to_float(self) -> "BivariatePoly":
        if not self.exact:
            return self
        return BivariatePoly({k: _to_float(c) for k, c in self.terms.items()}, exact=False)

    def to_exact(self) -> "BivariatePoly":
        if self.exact:
            return self
        return BivariatePoly({k: _to_exact(c) for k, c in self.terms.items()}, exact=True)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self.exact)
        if other is NotImplemented:
            return NotImplemented
        exact = self.exact and other.exact
        a = self if exact or not self.exact else self.to_float()
        b = other if exact or not other.exact else other.to_float()
        terms = dict(a.terms)
        for k, c in b.terms.items():
            terms[k] = terms.get(k, 0) + c
        return BivariatePoly(terms, exact=exact)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self.terms.items()}, exact=self.exact)

    def __sub__(self, other):
        other = _coerce(other, self.exact)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other, self.exact)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other, self.exact)
        if other is NotImplemented:
            return NotImplemented
        exact = self.exact and other.exact
        a = self if exact or not self.exact else self.to_float()
        b = other if exact or not other.exact else other.to_float()
        terms: dict = {}
        for (p1, q1), c1 in a.terms.items():
            for (p2, q2), c2 in b.terms.items():
                k = (p1 + p2, q1 + q2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return BivariatePoly(terms, exact=exact)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BivariatePoly.constant(1, exact=self.exact)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            other = _coerce(other, self.exact)
            if other is NotImplemented:
                return NotImplemented
        if self.exact and other.exact:
            return self.terms == other.terms
        a, b = self.to_float(), other.to_float()
        scale = max(a.max_coeff_mag(), b.max_coeff_mag())
        if scale == 0.0:
            return True
        tol = COEFF_EQ_TOL * scale
        for k in set(a.terms) | set(b.terms):
            if abs(a.terms.get(k, 0j) - b.terms.get(k, 0j)) > tol:
                return False
        return True

    __hash__ = None  # tolerance-based equality is incompatible with hashing

    # -- evaluation ---------------------------------------------------------

    def eval(self, x, y):
        """Evaluate at a point by Horner-style grouping (powers of y outermost,
        sparse Horner in x inside each group)."""
        if not self.terms:
            return Fraction(0) if self.exact and _is_rational_point(x, y) else 0.0
        by_q: dict[int, dict[int, object]] = {}
        for (p, q), c in self.terms.items():
            by_q.setdefault(q, {})[p] = c
        qs = sorted(by_q, reverse=True)
        acc = None
        prev_q = qs[0]
        for q in qs:
            inner = _horner_sparse(by_q[q], x)
            if acc is None:
                acc = inner
            else:
                acc = acc * _ipow(y, prev_q - q) + inner
            prev_q = q
        return acc * _ipow(y, prev_q)

    __call__ = eval

    # -- calculus -----------------------------------------------------------

    def partial(self, var: str) -> "BivariatePoly":
        idx = _var_index(var)
        terms = {}
        for (p, q), c in self.terms.items():
            e = (p, q)[idx]
            if e == 0:
                continue
            k = (p - 1, q) if idx == 0 else (p, q - 1)
            terms[k] = terms.get(k, 0) + c * e
        return BivariatePoly(terms, exact=self.exact)

    def __repr__(self):
        return f"BivariatePoly({format_poly(self)!r})"


def _var_index(var: str) -> int:
    if var == "x":
        return 0
    if var == "y":
        return 1
    raise ValueError("variable must be 'x' or 'y'")


def _is_rational_point(x, y) -> bool:
    return isinstance(x, Rational) and isinstance(y, Rational)


def _ipow(base, n: int):
    if n == 0:
        return 1
    return base ** n


def _horner_sparse(coeffs_by_p: dict[int, object], x):
    ps = sorted(coeffs_by_p, reverse=True)
    acc = coeffs_by_p[ps[0]]
    prev = ps[0]
    for p in ps[1:]:
        acc = acc * _ipow(x, prev - p) + coeffs_by_p[p]
        prev = p
    return acc * _ipow(x, prev)


def _coerce(value, exact_hint: bool):
    if isinstance(value, BivariatePoly):
        return value
    if isinstance(value, (int, float, complex, Fraction)):
        exact = exact_hint and not isinstance(value, (float, complex))
        return BivariatePoly.constant(value, exact=exact)
    return NotImplemented


def partial_derivative(P: BivariatePoly, var: str) -> BivariatePoly:
    return P.partial(var)


def gradient_norm_squared(P: BivariatePoly) -> BivariatePoly:
    """Squared gradient magnitude (dP/dx)^2 + (dP/dy)^2 as a polynomial."""
    px = P.partial("x")
    py = P.partial("y")
    return px * px + py * py


def structural_trim(P: BivariatePoly, rel_tol: float = COEFF_EQ_TOL) -> BivariatePoly:
    """Drop floating terms below ``rel_tol`` times the largest coefficient.

    Elimination code calls this so that roundoff residue cannot inflate the
    degree structure. Exact polynomials are returned unchanged.
    """
    if P.exact or not P.terms:
        return P
    cut = rel_tol * P.max_coeff_mag()
    return BivariatePoly(
        {k: c for k, c in P.terms.items() if abs(c) > cut}, exact=False
    )


# ---------------------------------------------------------------------------
# text form: `1 x^2 + 1 y^2 - 1`, coefficients decimal or rational num/den
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>(?:\d+\s*/\s*\d+)|(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))?
        \s*(?P<xv>x(?:\^(?P<px>\d+))?)?
        \s*(?P<yv>y(?:\^(?P<py>\d+))?)?
        \s*""",
    re.X,
)


def parse_poly(text: str, exact: bool | None = None) -> BivariatePoly:
    """Parse the term-list text form.

    Coefficients may be decimals (``-1.5``, ``2e-3``) or rationals (``3/4``).
    Mode is inferred when ``exact`` is None: the polynomial is exact iff every
    coefficient is an integer or a rational.
    """
    src = text.replace("*", " ").strip()
    if not src:
        raise ParseError("empty polynomial expression")
    pos = 0
    first = True
    terms: dict = {}
    saw_float = False
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse polynomial near {src[pos:pos + 20]!r}")
        sign, coeff, xv, yv = m.group("sign"), m.group("coeff"), m.group("xv"), m.group("yv")
        if coeff is None and xv is None and yv is None:
            raise ParseError(f"cannot parse polynomial near {src[pos:pos + 20]!r}")
        if not first and sign is None:
            raise ParseError(f"missing +/- before term at {src[pos:pos + 20]!r}")
        if coeff is None:
            value: object = Fraction(1)
        elif "/" in coeff:
            num, den = coeff.split("/")
            if int(den) == 0:
                raise ParseError(f"zero denominator in {coeff!r}")
            value = Fraction(int(num), int(den))
        elif "." in coeff or "e" in coeff or "E" in coeff:
            value = float(coeff)
            saw_float = True
        else:
            value = Fraction(int(coeff))
        if sign == "-":
            value = -value
        p = int(m.group("px") or (1 if xv else 0))
        q = int(m.group("py") or (1 if yv else 0))
        terms[(p, q)] = terms.get((p, q), 0) + value
        pos = m.end()
        first = False
    if exact is None:
        exact = not saw_float
    return BivariatePoly(terms, exact=exact)


def _format_coeff(c, exact: bool) -> str:
    if exact:
        f = Fraction(c)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    z = complex(c)
    if z.imag != 0.0:
        raise ValueError("text form supports real coefficients only")
    r = z.real
    if r == int(r) and abs(r) < 1e16:
        return str(int(r))
    return repr(r)


def format_poly(P: BivariatePoly) -> str:
    """Emit the canonical text form, terms ordered by descending (total degree, x-degree)."""
    if not P.terms:
        return "0"
    keys = sorted(P.terms, key=lambda k: (k[0] + k[1], k[0]), reverse=True)
    out = []
    for i, (p, q) in enumerate(keys):
        c = P.terms[(p, q)]
        neg = (c < 0) if P.exact else (complex(c).real < 0)
        mag = -c if neg else c
        body = _format_coeff(mag, P.exact)
        if p:
            body += f" x^{p}" if p > 1 else " x"
        if q:
            body += f" y^{q}" if q > 1 else " y"
        if i == 0:
            out.append(("-" + body) if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def univariate_coeffs(P: BivariatePoly, var: str) -> list:
    """Dense ascending coefficient list of a polynomial involving one variable only."""
    idx = _var_index(var)
    other = 1 - idx
    if P.terms and any(k[other] for k in P.terms):
        raise ValueError(f"polynomial is not univariate in {var}")
    d = P.deg_in(var)
    if d == NEG_INF:
        return []
    zero = Fraction(0) if P.exact else 0j
    out = [zero] * (int(d) + 1)
    for k, c in P.terms.items():
        out[k[idx]] = c
    return out


# ---------------------------------------------------------------------------
# similarity transforms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimilarityTransform:
    """Composition of mirror (across the x-axis, applied first), rotation,
    uniform scaling by a nonzero factor, then translation."""

    angle: float = 0.0
    scale: float = 1.0
    tx: float = 0.0
    ty: float = 0.0
    mirror: bool = False

    def __post_init__(self):
        if self.scale == 0.0:
            raise ValueError("scale must be nonzero")

    @classmethod
    def identity(cls) -> "SimilarityTransform":
        return cls()

    @classmethod
    def translation(cls, tx: float, ty: float) -> "SimilarityTransform":
        return cls(tx=tx, ty=ty)

    @classmethod
    def scaling(cls, c: float) -> "SimilarityTransform":
        return cls(scale=c)

    @classmethod
    def rotation(cls, angle: float) -> "SimilarityTransform":
        return cls(angle=angle)

    def linear_matrix(self) -> tuple[tuple[float, float], tuple[float, float]]:
        cs, sn = math.cos(self.angle), math.sin(self.angle)
        mu = -1.0 if self.mirror else 1.0
        c = self.scale
        return ((c * cs, -c * sn * mu), (c * sn, c * cs * mu))

    def apply(self, x: float, y: float) -> tuple[float, float]:
        (axx, axy), (ayx, ayy) = self.linear_matrix()
        return (axx * x + axy * y + self.tx, ayx * x + ayy * y + self.ty)

    def inverse(self) -> "SimilarityTransform":
        ang = self.angle if self.mirror else -self.angle
        inv = SimilarityTransform(angle=ang, scale=1.0 / self.scale, mirror=self.mirror)
        (axx, axy), (ayx, ayy) = inv.linear_matrix()
        return SimilarityTransform(
            angle=ang,
            scale=1.0 / self.scale,
            mirror=self.mirror,
            tx=-(axx * self.tx + axy * self.ty),
            ty=-(ayx * self.tx + ayy * self.ty),
        )

    def compose(self, inner: "SimilarityTransform") -> "SimilarityTransform":
        """Transform equal to applying ``inner`` first, then ``self``."""
        angle = self.angle + (-inner.angle if self.mirror else inner.angle)
        t1x, t1y = self.apply(inner.tx, inner.ty)
        return SimilarityTransform(
            angle=angle,
            scale=self.scale * inner.scale,
            mirror=self.mirror ^ inner.mirror,
            tx=t1x,
            ty=t1y,
        )


def apply_transform(P: BivariatePoly, T: SimilarityTransform) -> BivariatePoly:
    """The polynomial in transformed coordinates: composes P with the inverse map.

    Exact polynomials stay exact: every float entry of the map is a dyadic
    rational and converts without rounding.
    """
    inv = T.inverse()
    (axx, axy), (ayx, ayy) = inv.linear_matrix()
    bx, by = inv.tx, inv.ty
    exact = P.exact
    xs = BivariatePoly({(1, 0): axx, (0, 1): axy, (0, 0): bx}, exact=exact)
    ys = BivariatePoly({(1, 0): ayx, (0, 1): ayy, (0, 0): by}, exact=exact)
    max_p = max((k[0] for k in P.terms), default=0)
    max_q = max((k[1] for k in P.terms), default=0)
    xpow = _power_table(xs, max_p, exact)
    ypow = _power_table(ys, max_q, exact)
    acc = BivariatePoly.zero(exact=exact)
    for (p, q), c in P.terms.items():
        acc = acc + xpow[p] * ypow[q] * c
    return acc


def _power_table(base: BivariatePoly, n: int, exact: bool) -> list[BivariatePoly]:
    table = [BivariatePoly.constant(1, exact=exact)]
    for _ in range(n):
        table.append(table[-1] * base)
    return table


# ---------------------------------------------------------------------------
# Sylvester resultant
# ---------------------------------------------------------------------------

# univariate polynomials over Fraction: ascending tuples, trailing zeros trimmed


def _up_trim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _up_add(a, b):
    n = max(len(a), len(b))
    return _up_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _up_sub(a, b):
    n = max(len(a), len(b))
    return _up_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _up_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _up_trim(out)


def _up_divexact(a, b):
    """Exact division of univariate polynomials over the rationals."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return ()
    rem = list(a)
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        coef = rem[k + len(b) - 1] / lead
        out[k] = coef
        if coef != 0:
            for j, bj in enumerate(b):
                rem[k + j] -= coef * bj
    if any(r != 0 for r in rem):
        raise ArithmeticError("inexact polynomial division in fraction-free elimination")
    return _up_trim(out)


def _bareiss_det(M: list[list[tuple]]) -> tuple:
    """Fraction-free Bareiss determinant of a matrix of univariate polynomials."""
    n = len(M)
    if n == 0:
        return (Fraction(1),)
    sign = 1
    prev = (Fraction(1),)
    for k in range(n - 1):
        if not M[k][k]:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return ()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _up_sub(_up_mul(M[i][j], M[k][k]), _up_mul(M[i][k], M[k][j]))
                M[i][j] = _up_divexact(num, prev)
            M[i][k] = ()
        prev = M[k][k]
    det = M[n - 1][n - 1]
    if sign < 0:
        det = tuple(-c for c in det)
    return det


def _clear_denominators(P: BivariatePoly) -> tuple[BivariatePoly, Fraction]:
    """Scale an exact polynomial to integer coefficients; returns (scaled, factor)."""
    lam = Fraction(1)
    for c in P.terms.values():
        lam = Fraction(math.lcm(lam.numerator, Fraction(c).denominator))
    return BivariatePoly({k: c * lam for k, c in P.terms.items()}, exact=True), lam


def _coeff_rows(P: BivariatePoly, elim: str, keep: str) -> list[BivariatePoly]:
    """Coefficients of the eliminated variable, highest power first, each a
    polynomial in the kept variable."""
    e = _var_index(elim)
    k = _var_index(keep)
    d = int(P.deg_in(elim))
    rows = [dict() for _ in range(d + 1)]
    for key, c in P.terms.items():
        rows[d - key[e]][(key[k], 0) if keep == "x" else (0, key[k])] = c
    return [BivariatePoly(r, exact=P.exact) for r in rows]


def sylvester_resultant(P: BivariatePoly, Q: BivariatePoly, eliminate: str = "y") -> BivariatePoly:
    """Resultant of P and Q with respect to one variable.

    Returns the determinant of their Sylvester matrix, viewed as polynomials in
    the eliminated variable over polynomials in the other. Exact inputs take a
    fraction-free Bareiss elimination; floating inputs are handled by
    evaluating the determinant on roots of unity and interpolating by FFT.
    """
    keep = "x" if eliminate == "y" else "y"
    _var_index(eliminate)
    exact = P.exact and Q.exact
    if not exact:
        P = structural_trim(P.to_float())
        Q = structural_trim(Q.to_float())
    m = P.deg_in(eliminate)
    n = Q.deg_in(eliminate)
    m = -1 if m == NEG_INF else int(m)
    n = -1 if n == NEG_INF else int(n)
    if m <= 0 and n <= 0:
        if P.is_zero() and Q.is_zero():
            raise DegenerateElimination("both inputs are zero")
        if not P.is_zero() and not Q.is_zero():
            raise DegenerateElimination(
                f"both inputs have degree 0 in {eliminate}; fall back to univariate gcd"
            )
    if P.is_zero():
        return BivariatePoly.zero(exact=exact)
    if Q.is_zero():
        return BivariatePoly.zero(exact=exact)
    if m <= 0:
        return P ** n  # P constant in the eliminated variable
    if n <= 0:
        return Q ** m

    scale_back = None
    if exact:
        P, lp = _clear_denominators(P)
        Q, lq = _clear_denominators(Q)
        scale_back = Fraction(1) / (lp ** n * lq ** m)

    prow = _coeff_rows(P, eliminate, keep)
    qrow = _coeff_rows(Q, eliminate, keep)
    size = m + n

    if exact:
        M = [[() for _ in range(size)] for _ in range(size)]
        for r in range(n):
            for j, c in enumerate(prow):
                M[r][r + j] = tuple(univariate_coeffs(c, keep))
        for r in range(m):
            for j, c in enumerate(qrow):
                M[n + r][r + j] = tuple(univariate_coeffs(c, keep))
        det = _bareiss_det(M)
        terms = {}
        for i, c in enumerate(det):
            if c != 0:
                terms[(i, 0) if keep == "x" else (0, i)] = c * scale_back
        return BivariatePoly(terms, exact=True)

    # floating path: interpolate det(S(t)) from unit-circle samples
    dpk = P.deg_in(keep)
    dqk = Q.deg_in(keep)
    dpk = 0 if dpk == NEG_INF else int(dpk)
    dqk = 0 if dqk == NEG_INF else int(dqk)
    bound = n * dpk + m * dqk
    count = bound + 1
    nodes = np.exp(2j * np.pi * np.arange(count) / count)
    pc = [np.array(univariate_coeffs(c, keep), dtype=complex) for c in prow]
    qc = [np.array(univariate_coeffs(c, keep), dtype=complex) for c in qrow]
    vals = np.empty(count, dtype=complex)
    for t, z in enumerate(nodes):
        S = np.zeros((size, size), dtype=complex)
        for r in range(n):
            for j in range(m + 1):
                S[r, r + j] = _npeval(pc[j], z)
        for r in range(m):
            for j in range(n + 1):
                S[n + r, r + j] = _npeval(qc[j], z)
        vals[t] = np.linalg.det(S)
    coeffs = np.fft.fft(vals) / count
    if _all_real(P) and _all_real(Q):
        coeffs = coeffs.real  # resultant of real polynomials is real
    terms = {}
    for i, c in enumerate(coeffs):
        terms[(i, 0) if keep == "x" else (0, i)] = c
    return structural_trim(BivariatePoly(terms, exact=False), 1e-10)


def _all_real(P: BivariatePoly) -> bool:
    scale = P.max_coeff_mag()
    return all(abs(complex(c).imag) <= 1e-14 * scale for c in P.terms.values())


def _npeval(coeffs: np.ndarray, z: complex) -> complex:
    if coeffs.size == 0:
        return 0.0 + 0.0j
    acc = 0.0 + 0.0j
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc
