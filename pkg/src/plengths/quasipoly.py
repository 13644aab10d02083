"""Quasipolynomial detection and exact fitting for integer sequences.

A quasipolynomial of degree d and period pi evaluates row (n mod pi) of a
pi x (d+1) table of rational coefficients as a polynomial in n. A window of
consecutive samples agrees with such a function exactly when the (d+1)-fold
pi-step difference of the window vanishes; the coefficients are then
recovered per residue class by exact rational interpolation and re-verified
against every sample. No floating point is used anywhere in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import factor
from .errors import WindowTooShortError
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class SampleWindow:
    """Values f(start), f(start+1), ... on a contiguous integer range."""

    start: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.start < 0:
            raise ValueError("window start must be >= 0")
        if not self.values:
            raise ValueError("window must be nonempty")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end(self) -> int:
        """Last sampled index, inclusive."""
        return self.start + len(self.values) - 1


def step_difference(w: SampleWindow, step: int) -> SampleWindow:
    """Window of f(n + step) - f(n); the start is unchanged, length drops by step."""
    if step < 1:
        raise ValueError("step must be >= 1")
    if len(w) <= step:
        raise WindowTooShortError(f"window of length {len(w)} with step {step}")
    vals = w.values
    return SampleWindow(w.start, tuple(vals[i + step] - vals[i] for i in range(len(vals) - step)))


def differences_vanish(w: SampleWindow, degree: int, period: int) -> bool:
    """(degree+1)-fold period-step difference of the window is identically zero."""
    vals = list(w.values)
    for _ in range(degree + 1):
        if len(vals) <= period:
            raise WindowTooShortError(
                f"window of length {len(w)} cannot absorb {degree + 1} differences of step {period}"
            )
        vals = [vals[i + period] - vals[i] for i in range(len(vals) - period)]
    return all(v == 0 for v in vals)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Degree, period, and per-residue coefficient rows c_0 .. c_degree."""

    degree: int
    period: int
    coefficients: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.degree < 0 or self.period < 1:
            raise ValueError("degree >= 0 and period >= 1 required")
        if len(self.coefficients) != self.period:
            raise ValueError("one coefficient row per residue class required")
        if any(len(row) != self.degree + 1 for row in self.coefficients):
            raise ValueError("each row must list c_0 .. c_degree")
        if self.degree > 0 and all(row[-1] == 0 for row in self.coefficients):
            raise ValueError("leading coefficient vanishes in every class")

    def evaluate(self, n: int) -> Fraction:
        row = self.coefficients[n % self.period]
        acc = Fraction(0)
        for c in reversed(row):
            acc = acc * n + c
        return acc

    def leading_coefficients(self) -> tuple[Fraction, ...]:
        return tuple(row[-1] for row in self.coefficients)

    def constant_leading(self) -> Fraction | None:
        """The leading coefficient when it does not depend on the residue."""
        leads = set(self.leading_coefficients())
        return leads.pop() if len(leads) == 1 else None


@dataclass(frozen=True)
class FitReport:
    """Outcome of a fit or detection attempt over one sample window."""

    window_start: int
    window_length: int
    quasipoly: QuasiPolynomial | None
    searched_degree: int | None = None
    searched_period: int | None = None
    detail: str = ""

    @property
    def fitted(self) -> bool:
        return self.quasipoly is not None

    def to_json(self) -> dict:
        out: dict = {
            "outcome": "fitted" if self.fitted else "not-quasipolynomial",
            "window": {"start": self.window_start, "length": self.window_length},
        }
        if self.fitted:
            qp = self.quasipoly
            out["degree"] = qp.degree
            out["period"] = qp.period
            out["leading_coefficients"] = [str(c) for c in qp.leading_coefficients()]
        else:
            out["searched"] = {
                "degree_max": self.searched_degree,
                "period_max": self.searched_period,
            }
        if self.detail:
            out["detail"] = self.detail
        return out


def _interpolate_class(points: list[tuple[int, int]], degree: int) -> list[Fraction]:
    """Exact coefficients c_0..c_degree of the polynomial through the points."""
    pts = points[: degree + 1]
    coeffs = [Fraction(0)] * (degree + 1)
    for i, (xi, yi) in enumerate(pts):
        # Lagrange basis polynomial for xi, accumulated into coeffs.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                new[t] -= c * xj
                new[t + 1] += c
            basis = new
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for t, c in enumerate(basis):
            coeffs[t] += scale * c
    return coeffs


def qp_fit(w: SampleWindow, degree: int, period: int) -> FitReport:
    """Fit the window exactly as a quasipolynomial of the given shape.

    Succeeds exactly when the (degree+1)-fold period-step difference of the
    window vanishes. On success the returned quasipolynomial reproduces
    every window sample and carries the exact degree (trailing zero
    coefficient columns are trimmed).
    """
    if degree < 0 or period < 1:
        raise ValueError("degree >= 0 and period >= 1 required")
    if len(w) < (degree + 2) * period:
        raise WindowTooShortError(
            f"need at least {(degree + 2) * period} samples, got {len(w)}"
        )
    if not differences_vanish(w, degree, period):
        return FitReport(w.start, len(w), None, degree, period, "difference test nonzero")

    by_class: dict[int, list[tuple[int, int]]] = {}
    for idx, v in enumerate(w.values):
        n = w.start + idx
        by_class.setdefault(n % period, []).append((n, v))
    rows = [
        _interpolate_class(by_class[j], degree) if j in by_class else [Fraction(0)] * (degree + 1)
        for j in range(period)
    ]
    actual = 0
    for t in range(degree, -1, -1):
        if any(row[t] != 0 for row in rows):
            actual = t
            break
    qp = QuasiPolynomial(actual, period, tuple(tuple(row[: actual + 1]) for row in rows))
    for idx, v in enumerate(w.values):
        if qp.evaluate(w.start + idx) != v:
            raise RuntimeError("exact interpolation failed to reproduce a sample")
    return FitReport(w.start, len(w), qp)


def qp_detect(w: SampleWindow, degree_max: int, period_max: int) -> FitReport:
    """Smallest-period fit on the grid, ties broken by smallest degree.

    Returns a negative report after exhausting every (degree, period) with
    degree <= degree_max and period <= period_max.
    """
    if degree_max < 0 or period_max < 1:
        raise ValueError("degree_max >= 0 and period_max >= 1 required")
    if len(w) < (degree_max + 2) * period_max:
        raise WindowTooShortError(
            f"need at least {(degree_max + 2) * period_max} samples, got {len(w)}"
        )
    for period in range(1, period_max + 1):
        for degree in range(degree_max + 1):
            if differences_vanish(w, degree, period):
                return qp_fit(w, degree, period)
    return FitReport(
        w.start, len(w), None, degree_max, period_max, "grid exhausted"
    )


# ---------------------------------------------------------------------------
# Expected quasipolynomial shape of each extremal length functional, and the
# verification that sampled data fits it exactly.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QpRow:
    """Predicted shape of one extremal length functional of S."""

    name: str
    p: object  # int or math.inf
    mode: str
    degree: int
    period: int
    leading: Fraction | None  # None: no prediction for the leading value
    note: str = ""


def expected_rows(S: NumericalSemigroup) -> tuple[QpRow, ...]:
    """Degree, period, and leading coefficient for each functional of S.

    Minima: the square length has period N = sum of squared generators and
    leading 1/N; the ordinary length has period g_k and leading 1/g_k; the
    max-coordinate length has period g = sum of generators and leading 1/g;
    the support count is periodic with period lcm of the generators.
    Maxima: the support count is eventually the constant k; for finite
    p >= 1 the p-length has degree p, period g_1 and leading 1/g_1^p, and
    the max-coordinate length is linear with period and leading 1/g_1.
    """
    gens = S.generators
    k = len(gens)
    g1, gk = gens[0], gens[-1]
    g = sum(gens)
    nsq = sum(x * x for x in gens)
    power_note = "leading coefficient is 1/g1^p for p >= 2 (1/g1 applies only at p = 1)"
    return (
        QpRow("l0_min", 0, "min", 0, lcm(*gens), None),
        QpRow("l1_min", 1, "min", 1, gk, Fraction(1, gk)),
        QpRow("l2_min", 2, "min", 2, nsq, Fraction(1, nsq)),
        QpRow("linf_min", math.inf, "min", 1, g, Fraction(1, g)),
        QpRow("l0_max", 0, "max", 0, 1, Fraction(k)),
        QpRow("l1_max", 1, "max", 1, g1, Fraction(1, g1)),
        QpRow("l2_max", 2, "max", 2, g1, Fraction(1, g1**2), power_note),
        QpRow("l3_max", 3, "max", 3, g1, Fraction(1, g1**3), power_note),
        QpRow("linf_max", math.inf, "max", 1, g1, Fraction(1, g1)),
    )


def qp_threshold(S: NumericalSemigroup) -> int:
    """Start bound beyond which every functional has settled into its shape."""
    gens = S.generators
    g1, gk = gens[0], gens[-1]
    g = sum(gens)
    return max(gk * gk, g1 * g1 * g, g * g, S.frobenius() + g)


def sample_extremal(
    S: NumericalSemigroup, p, mode: str, lo: int, hi: int
) -> SampleWindow:
    """Window of extremal p-lengths on [lo, hi]; every point must lie in S."""
    if lo > hi:
        raise ValueError("empty window")
    vals = factor.extremal_values(S, hi, p, mode)[lo : hi + 1]
    if any(v is None for v in vals):
        bad = lo + next(i for i, v in enumerate(vals) if v is None)
        raise ValueError(f"window touches {bad}, which is outside the semigroup")
    return SampleWindow(lo, tuple(vals))


@dataclass(frozen=True)
class RowReport:
    """Verification outcome for one predicted row."""

    row: QpRow
    window_start: int
    window_length: int
    fitted: bool
    degree_ok: bool
    period_minimal: bool
    leading_ok: bool
    fitted_leading: tuple[Fraction, ...] | None
    threshold: int = 0

    @property
    def passed(self) -> bool:
        return self.fitted and self.degree_ok and self.period_minimal and self.leading_ok

    def to_json(self) -> dict:
        out = {
            "row": self.row.name,
            "p": "inf" if self.row.p == math.inf else self.row.p,
            "mode": self.row.mode,
            "degree": self.row.degree,
            "period": self.row.period,
            "expected_leading": None if self.row.leading is None else str(self.row.leading),
            "fitted_leading": None
            if self.fitted_leading is None
            else [str(c) for c in self.fitted_leading],
            "window": {"start": self.window_start, "length": self.window_length},
            "threshold": self.threshold,
            "passed": self.passed,
        }
        if self.row.note:
            out["note"] = self.row.note
        return out


def _proper_divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def verify_qp_attributes(
    S: NumericalSemigroup, window: tuple[int, int] | None = None
) -> list[RowReport]:
    """Fit every predicted row on a post-threshold window and check it exactly.

    With no explicit window each row samples (degree + 2) * period points
    starting one period past the threshold. A row passes when the fit
    succeeds with the exact degree, no proper divisor of the period also
    fits (the period is minimal), and the leading coefficient equals the
    predicted rational in every residue class.
    """
    thr = qp_threshold(S)
    reports = []
    for row in expected_rows(S):
        if window is None:
            lo = thr + 1 + row.period
            hi = lo + (row.degree + 2) * row.period - 1
        else:
            lo, hi = window
            if lo <= thr:
                raise ValueError(f"window must start beyond {thr}")
            if hi - lo + 1 < (row.degree + 2) * row.period:
                raise WindowTooShortError(f"row {row.name} needs more samples")
        w = sample_extremal(S, row.p, row.mode, lo, hi)
        rep = qp_fit(w, row.degree, row.period)
        if not rep.fitted:
            reports.append(
                RowReport(row, lo, len(w), False, False, False, False, None, thr)
            )
            continue
        qp = rep.quasipoly
        degree_ok = qp.degree == row.degree
        minimal = not any(
            differences_vanish(w, row.degree, d) for d in _proper_divisors(row.period)
        )
        leads = qp.leading_coefficients()
        # pad to the requested degree when trimming reduced it
        if qp.degree < row.degree:
            leads = tuple(Fraction(0) for _ in leads)
        leading_ok = row.leading is None or all(c == row.leading for c in leads)
        reports.append(
            RowReport(row, lo, len(w), True, degree_ok, minimal, leading_ok, leads, thr)
        )
    return reports
