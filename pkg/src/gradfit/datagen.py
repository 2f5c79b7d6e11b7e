"""Synthetic data generation and text ingestion.

Noise model: exact points on the curve, sampled uniformly in the natural
parameter over the requested arc, plus i.i.d. isotropic Gaussian offsets of
standard deviation sigma per coordinate. The generator is numpy's seeded
PCG64 (``np.random.default_rng``), so a fixed seed reproduces the point set
bit for bit across runs.

Text format: one ``x,y`` pair per line; ``#`` starts a comment (full-line or
trailing); blank lines are skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec, NonFiniteValue, ParseError
from .families import get_family


@dataclass(frozen=True)
class SyntheticSpec:
    family: str
    theta: dict
    n: int
    sigma: float = 0.0
    arc: tuple | None = None  # (t_lo, t_hi); None = family default
    seed: int | None = None

    def __post_init__(self):
        fam = get_family(self.family)  # raises InvalidSpec for unknown names
        fam.validate(self.theta)
        if self.n < 1:
            raise InvalidSpec(f"need at least one point, got n={self.n}")
        if not (self.sigma >= 0.0 and math.isfinite(self.sigma)):
            raise InvalidSpec(f"noise level must be finite and >= 0, "
                              f"got {self.sigma}")
        if self.arc is not None:
            lo, hi = self.arc
            if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
                raise InvalidSpec(f"arc range must be finite with lo < hi, "
                                  f"got {self.arc}")

    def t_range(self) -> tuple:
        return self.arc if self.arc is not None \
            else get_family(self.family).t_range


def generate(spec: SyntheticSpec) -> np.ndarray:
    """Points of shape (n, 2), deterministic for a given seed."""
    fam = get_family(spec.family)
    rng = np.random.default_rng(spec.seed)
    lo, hi = spec.t_range()
    ts = rng.uniform(lo, hi, spec.n)
    pts = np.array([fam.point_at(spec.theta, float(t)) for t in ts])
    if spec.sigma > 0.0:
        pts = pts + rng.normal(0.0, spec.sigma, size=pts.shape)
    return pts


def ingest(path) -> list:
    """Parse a point-per-line text file into [(x, y), ...]."""
    points = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [f.strip() for f in line.split(",")]
            if len(fields) != 2:
                raise ParseError(
                    f"{path}: line {lineno}: expected 'x,y', got {raw.strip()!r}")
            try:
                x, y = float(fields[0]), float(fields[1])
            except ValueError:
                raise ParseError(
                    f"{path}: line {lineno}: not a number pair: "
                    f"{raw.strip()!r}") from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise NonFiniteValue(
                    f"{path}: line {lineno}: non-finite value {raw.strip()!r}")
            points.append((x, y))
    return points


def write_points(path, points, header: str | None = None) -> None:
    """Write points as ``x,y`` lines; the optional header becomes a comment."""
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for ln in header.splitlines():
                fh.write(f"# {ln}\n")
        for x, y in np.asarray(points, dtype=float):
            fh.write(f"{float(x)!r},{float(y)!r}\n")
