"""Streaming, mergeable raw-moment accumulation.

A :class:`MomentVector` holds every m[p,q] = sum x^p y^q with p+q <= D for a
dataset, in one pass and constant memory. The circle objective and the generic
reduced objective are both assembled from these sums, so after accumulation
the raw points can be discarded.

Numerical notes:

* floating accumulators use Neumaier compensated summation per slot — the
  fourth-power sums feeding z1 are the dominant cancellation hazard;
* callers may center the data by a visible ``offset`` (usually the centroid):
  powers are taken of (x - ox, y - oy), which improves the conditioning of
  fourth moments by orders of magnitude, and fits translate their result back;
* an exact mode accumulates ``Fraction`` sums; floats convert exactly.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

from .errors import DegreeMismatch, NonFiniteInput

_CHUNK = 1 << 16

FORMAT_TAG = "moment-vector/1"


def moment_keys(D: int) -> list[tuple[int, int]]:
    """All (p, q) with p+q <= D in lexicographic order."""
    return [(p, q) for p in range(D + 1) for q in range(D + 1 - p)]


class MomentVector:
    """Accumulator for raw moments up to a fixed total degree.

    Single-writer: accumulate/extend mutate in place and return self.
    Concurrent ingestion should use one accumulator per worker and ``merge``.
    """

    __slots__ = ("max_total_degree", "offset", "exact", "n", "_keys", "_index",
                 "_sum", "_comp", "_frac")

    def __init__(self, max_total_degree: int, offset=(0.0, 0.0), exact: bool = False):
        if max_total_degree < 0:
            raise ValueError("max_total_degree must be nonnegative")
        self.max_total_degree = int(max_total_degree)
        ox, oy = offset
        if not (math.isfinite(ox) and math.isfinite(oy)):
            raise NonFiniteInput("offset must be finite")
        self.offset = (float(ox), float(oy))
        self.exact = bool(exact)
        self.n = 0
        self._keys = moment_keys(self.max_total_degree)
        self._index = {k: i for i, k in enumerate(self._keys)}
        if exact:
            self._frac = [Fraction(0)] * len(self._keys)
            self._sum = self._comp = None
        else:
            self._frac = None
            self._sum = np.zeros(len(self._keys))
            self._comp = np.zeros(len(self._keys))

    # -- ingestion ----------------------------------------------------------

    def accumulate(self, x: float, y: float) -> "MomentVector":
        """Absorb one point; every m[p,q] grows by x^p y^q."""
        if not (math.isfinite(x) and math.isfinite(y)):
            raise NonFiniteInput(f"non-finite point ({x}, {y})")
        D = self.max_total_degree
        if self.exact:
            u = Fraction(x) - Fraction(self.offset[0])
            v = Fraction(y) - Fraction(self.offset[1])
            up = [Fraction(1)]
            vq = [Fraction(1)]
            for _ in range(D):
                up.append(up[-1] * u)
                vq.append(vq[-1] * v)
            for i, (p, q) in enumerate(self._keys):
                self._frac[i] += up[p] * vq[q]
        else:
            u = float(x) - self.offset[0]
            v = float(y) - self.offset[1]
            up = [1.0]
            vq = [1.0]
            for _ in range(D):
                up.append(up[-1] * u)
                vq.append(vq[-1] * v)
            s, c = self._sum, self._comp
            for i, (p, q) in enumerate(self._keys):
                val = up[p] * vq[q]
                t = s[i] + val
                if abs(s[i]) >= abs(val):
                    c[i] += (s[i] - t) + val
                else:
                    c[i] += (val - t) + s[i]
                s[i] = t
        self.n += 1
        return self

    def extend(self, xs, ys) -> "MomentVector":
        """Vectorized bulk ingestion; equals repeated accumulate within roundoff."""
        xs = np.asarray(xs, dtype=float).ravel()
        ys = np.asarray(ys, dtype=float).ravel()
        if xs.shape != ys.shape:
            raise ValueError("xs and ys must have equal length")
        if xs.size and not (np.isfinite(xs).all() and np.isfinite(ys).all()):
            raise NonFiniteInput("non-finite coordinate in bulk input")
        if self.exact:
            for x, y in zip(xs.tolist(), ys.tolist()):
                self.accumulate(x, y)
            return self
        D = self.max_total_degree
        s, c = self._sum, self._comp
        for lo in range(0, xs.size, _CHUNK):
            u = xs[lo:lo + _CHUNK] - self.offset[0]
            v = ys[lo:lo + _CHUNK] - self.offset[1]
            up = [np.ones_like(u)]
            vq = [np.ones_like(v)]
            for _ in range(D):
                up.append(up[-1] * u)
                vq.append(vq[-1] * v)
            for i, (p, q) in enumerate(self._keys):
                val = float(np.sum(up[p] * vq[q]))
                t = s[i] + val
                if abs(s[i]) >= abs(val):
                    c[i] += (s[i] - t) + val
                else:
                    c[i] += (val - t) + s[i]
                s[i] = t
        self.n += int(xs.size)
        return self

    @classmethod
    def from_points(cls, points, max_total_degree: int, offset=(0.0, 0.0),
                    exact: bool = False) -> "MomentVector":
        mv = cls(max_total_degree, offset=offset, exact=exact)
        pts = np.asarray(points, dtype=float)
        if pts.size == 0:
            return mv
        if exact:
            for x, y in np.atleast_2d(pts):
                mv.accumulate(float(x), float(y))
            return mv
        pts = np.atleast_2d(pts)
        return mv.extend(pts[:, 0], pts[:, 1])

    # -- merging ------------------------------------------------------------

    def merge(self, other: "MomentVector") -> "MomentVector":
        """Entrywise sum of two accumulators over the same degree and offset."""
        if self.max_total_degree != other.max_total_degree:
            raise DegreeMismatch(
                f"cannot merge D={self.max_total_degree} with D={other.max_total_degree}"
            )
        if self.offset != other.offset:
            raise ValueError("cannot merge accumulators with different offsets")
        out = MomentVector(self.max_total_degree, offset=self.offset,
                           exact=self.exact and other.exact)
        out.n = self.n + other.n
        if out.exact:
            out._frac = [a + b for a, b in zip(self._frac, other._frac)]
            return out
        a_sum, a_comp = self._float_parts()
        b_sum, b_comp = other._float_parts()
        s = a_sum.copy()
        c = a_comp.copy()
        for add in (b_sum, b_comp):
            t = s + add
            big = np.abs(s) >= np.abs(add)
            c += np.where(big, (s - t) + add, (add - t) + s)
            s = t
        out._sum, out._comp = s, c
        return out

    def _float_parts(self):
        if self.exact:
            return (np.array([float(f) for f in self._frac]),
                    np.zeros(len(self._keys)))
        return self._sum, self._comp

    # -- views --------------------------------------------------------------

    def entry(self, p: int, q: int):
        """The accumulated sum of x^p y^q (in centered coordinates)."""
        i = self._index.get((int(p), int(q)))
        if i is None:
            raise DegreeMismatch(f"moment ({p},{q}) exceeds max_total_degree")
        if self.exact:
            return self._frac[i]
        return self._sum[i] + self._comp[i]

    def contract(self, poly) -> float:
        """Sum of poly over the (centered) data: sum_i poly(u_i, v_i) via moments."""
        acc = Fraction(0) if self.exact and poly.exact else 0.0
        for (p, q), coeff in poly.terms.items():
            if p + q > self.max_total_degree:
                raise DegreeMismatch(
                    f"term x^{p} y^{q} exceeds accumulated degree {self.max_total_degree}"
                )
            val = self.entry(p, q)
            if isinstance(acc, Fraction):
                acc += Fraction(coeff) * val
            else:
                cr = complex(coeff)
                term = (cr.real if cr.imag == 0 else cr) * (
                    float(val) if isinstance(val, Fraction) else val
                )
                acc = acc + term
        return acc

    def circle_z_view(self):
        """The nine z statistics of the reduced circle objective plus the count.

        z1 = sum s^2, z2 = -4 sum x s, z3 = -4 sum y s, z4 = 4 sum x^2,
        z5 = 4 sum y^2, z6 = 8 sum xy, z7 = 2 sum s, z8 = -4 sum x,
        z9 = -4 sum y, with s = x^2 + y^2, all in centered coordinates.
        """
        if self.max_total_degree < 4:
            raise DegreeMismatch("circle z-view needs moments of total degree 4")
        m = self.entry
        z1 = m(4, 0) + 2 * m(2, 2) + m(0, 4)
        z2 = -4 * (m(3, 0) + m(1, 2))
        z3 = -4 * (m(2, 1) + m(0, 3))
        z4 = 4 * m(2, 0)
        z5 = 4 * m(0, 2)
        z6 = 8 * m(1, 1)
        z7 = 2 * (m(2, 0) + m(0, 2))
        z8 = -4 * m(1, 0)
        z9 = -4 * m(0, 1)
        return (z1, z2, z3, z4, z5, z6, z7, z8, z9), self.n

    def centroid(self):
        """Mean of the raw (uncentered) data points."""
        if self.n == 0:
            raise ValueError("empty accumulator has no centroid")
        if self.max_total_degree < 1:
            raise DegreeMismatch("centroid needs first moments")
        return (float(self.entry(1, 0)) / self.n + self.offset[0],
                float(self.entry(0, 1)) / self.n + self.offset[1])

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        if self.exact:
            entries = [[p, q, f"{f.numerator}/{f.denominator}"]
                       for (p, q), f in zip(self._keys, self._frac)]
        else:
            entries = [[p, q, self._sum[i] + self._comp[i]]
                       for i, (p, q) in enumerate(self._keys)]
        return {
            "format": FORMAT_TAG,
            "max_total_degree": self.max_total_degree,
            "n": self.n,
            "offset": list(self.offset),
            "exact": self.exact,
            "entries": entries,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MomentVector":
        if d.get("format") != FORMAT_TAG:
            raise ValueError(f"not a {FORMAT_TAG} record")
        mv = cls(int(d["max_total_degree"]), offset=tuple(d["offset"]),
                 exact=bool(d["exact"]))
        mv.n = int(d["n"])
        for p, q, val in d["entries"]:
            i = mv._index[(int(p), int(q))]
            if mv.exact:
                num, den = str(val).split("/")
                mv._frac[i] = Fraction(int(num), int(den))
            else:
                mv._sum[i] = float(val)
        return mv

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "MomentVector":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def __repr__(self):
        return (f"MomentVector(D={self.max_total_degree}, n={self.n}, "
                f"offset={self.offset}, exact={self.exact})")


def merge(a: MomentVector, b: MomentVector) -> MomentVector:
    return a.merge(b)
