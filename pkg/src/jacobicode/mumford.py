"""Brute-force Jacobian group oracle for imaginary genus-2 models.

Divisor classes are held in Mumford form (u, v): u monic of degree at most
2, deg v < deg u, and u dividing v^2 + h v - f.  The group law is Cantor's
composition-and-reduction; the whole group is enumerated by scanning all
candidate (u, v) pairs, and the resulting cardinality is cross-checked
against the order predicted by the Weil polynomial -- a mismatch raises
the OrderMismatch tripwire, it can only mean an implementation bug.

The curve sits inside its Jacobian through the base point at infinity:
an affine point (x0, y0) maps to (x - x0, y0) and infinity to the
identity.  The image is the theta set, the degree <= 1 classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from . import poly
from .curves import CurveModel, CurvePoint, count_points
from .errors import (
    BudgetExceededError,
    InvalidDivisorError,
    NonZeroSumError,
    OrderMismatchError,
    PointNotOnCurveError,
    RealModelUnsupportedError,
)
from .weil import jacobian_order, weil_from_counts

JACOBIAN_Q_CAP = 64


@dataclass(frozen=True)
class MumfordDivisor:
    """Reduced divisor class (u, v); the identity is ((1,), ())."""

    u: tuple[int, ...]
    v: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.u) - 1

    def sort_key(self) -> tuple:
        return (len(self.u), self.u, self.v)

    def to_dict(self) -> dict:
        return {"u": list(self.u), "v": list(self.v)}

    @classmethod
    def from_dict(cls, d: dict) -> "MumfordDivisor":
        return cls(tuple(d["u"]), tuple(d["v"]))


IDENTITY = MumfordDivisor((1,), ())


def check_divisor(curve: CurveModel, d: MumfordDivisor) -> None:
    """Raise InvalidDivisor unless (u, v) is a reduced divisor on the curve."""
    F = curve.field
    u, v = poly.trim(d.u), poly.trim(d.v)
    if u != d.u or v != d.v:
        raise InvalidDivisorError("coefficient tuples must be trimmed")
    if not poly.is_monic(u) or poly.degree(u) > 2:
        raise InvalidDivisorError("u must be monic of degree <= 2")
    if poly.degree(v) >= poly.degree(u) and v:
        raise InvalidDivisorError("v must have degree below deg u")
    if any(not 0 <= c < F.q for c in u + v):
        raise InvalidDivisorError("coefficients must be encodings below q")
    lhs = poly.add(F, poly.mul(F, v, v), poly.mul(F, curve.h, v))
    if poly.mod(F, poly.sub(F, lhs, curve.f), u):
        raise InvalidDivisorError("u does not divide v^2 + h v - f")


def _require_imaginary(curve: CurveModel) -> None:
    if not curve.is_imaginary:
        raise RealModelUnsupportedError(
            "Mumford arithmetic here needs an imaginary (degree-5) model")


def cantor_add(curve: CurveModel, d1: MumfordDivisor, d2: MumfordDivisor) -> MumfordDivisor:
    """Group law: compose through the three-term gcd, then reduce to degree <= 2."""
    _require_imaginary(curve)
    F = curve.field
    h, f = curve.h, curve.f
    u1, v1 = d1.u, d1.v
    u2, v2 = d2.u, d2.v

    d0, e1, e2 = poly.ext_gcd(F, u1, u2)
    s = poly.add(F, poly.add(F, v1, v2), h)
    d, c1, c2 = poly.ext_gcd(F, d0, s)
    s1 = poly.mul(F, c1, e1)
    s2 = poly.mul(F, c1, e2)
    s3 = c2

    try:
        u = poly.exact_div(F, poly.mul(F, u1, u2), poly.mul(F, d, d))
        num = poly.add(
            F,
            poly.add(F, poly.mul(F, poly.mul(F, s1, u1), v2),
                     poly.mul(F, poly.mul(F, s2, u2), v1)),
            poly.mul(F, s3, poly.add(F, poly.mul(F, v1, v2), f)),
        )
        v = poly.mod(F, poly.exact_div(F, num, d), u)
        while poly.degree(u) > 2:
            numer = poly.sub(F, poly.sub(F, f, poly.mul(F, v, h)), poly.mul(F, v, v))
            u_next = poly.exact_div(F, numer, u)
            v = poly.mod(F, poly.neg(F, poly.add(F, h, v)), u_next)
            u = u_next
        u = poly.monic(F, u)
        v = poly.mod(F, v, u)
    except ValueError as exc:  # an inexact division means a bad input divisor
        raise InvalidDivisorError(str(exc)) from exc
    return MumfordDivisor(u, v)


def negate(curve: CurveModel, d: MumfordDivisor) -> MumfordDivisor:
    """Hyperelliptic involution on classes: (u, (-v - h) mod u)."""
    _require_imaginary(curve)
    F = curve.field
    v = poly.mod(F, poly.neg(F, poly.add(F, d.v, curve.h)), d.u)
    return MumfordDivisor(d.u, v)


def scalar_mul(curve: CurveModel, n: int, d: MumfordDivisor) -> MumfordDivisor:
    """n-fold sum by double-and-add; negative n through the involution."""
    if n < 0:
        return scalar_mul(curve, -n, negate(curve, d))
    acc = IDENTITY
    base = d
    while n:
        if n & 1:
            acc = cantor_add(curve, acc, base)
        n >>= 1
        if n:
            base = cantor_add(curve, base, base)
    return acc


def embed_point(curve: CurveModel, pt: CurvePoint) -> MumfordDivisor:
    """Curve point to divisor class with base point infinity; injective."""
    _require_imaginary(curve)
    if pt.at_infinity:
        return IDENTITY
    F = curve.field
    x, y = pt.x, pt.y
    if not (0 <= x < F.q and 0 <= y < F.q):
        raise PointNotOnCurveError(f"({x}, {y}) is not over F_{F.q}")
    lhs = F.add(F.mul(y, y), F.mul(poly.evaluate(F, curve.h, x), y))
    if lhs != poly.evaluate(F, curve.f, x):
        raise PointNotOnCurveError(f"({x}, {y}) does not satisfy the curve equation")
    return MumfordDivisor((F.neg(x), 1), (y,) if y else ())


def in_theta(d: MumfordDivisor) -> bool:
    """Whether the class lies on the embedded curve (deg u <= 1)."""
    return len(d.u) <= 2


@lru_cache(maxsize=256)
def enumerate_jacobian(curve: CurveModel) -> tuple[MumfordDivisor, ...]:
    """All reduced divisors by direct (u, v) scan, sorted by wire encoding.

    The scan is complete for reduced representatives: a conjugate pair
    {P, iota(P)} admits no interpolating v, and a doubled Weierstrass point
    fails the divisibility forced at a double root, so each class shows up
    exactly once.  The cardinality is checked against the zeta-side order.
    """
    _require_imaginary(curve)
    F = curve.field
    q = F.q
    if q > JACOBIAN_Q_CAP:
        raise BudgetExceededError(f"jacobian enumeration capped at q <= {JACOBIAN_Q_CAP}")
    h, f = curve.h, curve.f
    add, mul, neg = F.add, F.mul, F.neg

    out = [IDENTITY]

    # degree-1 classes correspond to affine curve points
    for u0 in range(q):
        x0 = neg(u0)
        hx = poly.evaluate(F, h, x0)
        fx = poly.evaluate(F, f, x0)
        for v0 in range(q):
            if add(mul(v0, v0), mul(hx, v0)) == fx:
                out.append(MumfordDivisor((u0, 1), (v0,) if v0 else ()))

    # degree-2 classes: reduce everything modulo u = x^2 + u1 x + u0 once per u
    for u1 in range(q):
        for u0 in range(q):
            u = (u0, u1, 1)
            e1 = neg(u1)  # x^2 == e1*x + e0 (mod u)
            e0 = neg(u0)
            fr = poly.mod(F, f, u)
            fr1, fr0 = poly.coefficient(fr, 1), poly.coefficient(fr, 0)
            hr = poly.mod(F, h, u)
            hr1, hr0 = poly.coefficient(hr, 1), poly.coefficient(hr, 0)
            for v1 in range(q):
                a2 = mul(v1, v1)
                sq1 = mul(a2, e1)
                sq0 = mul(a2, e0)
                hv_hi = mul(hr1, v1)  # x^2 coefficient of h*v
                base1 = add(add(sq1, mul(hv_hi, e1)), mul(hr0, v1))
                base0 = add(sq0, mul(hv_hi, e0))
                for v0 in range(q):
                    m = mul(v1, v0)
                    w1 = add(add(base1, add(m, m)), mul(hr1, v0))
                    if w1 != fr1:
                        continue
                    w0 = add(add(base0, mul(v0, v0)), mul(hr0, v0))
                    if w0 == fr0:
                        vv = (v0, v1) if v1 else ((v0,) if v0 else ())
                        out.append(MumfordDivisor(u, vv))

    out.sort(key=MumfordDivisor.sort_key)

    n1 = count_points(curve, 1).count
    n2 = count_points(curve, 2).count
    expected = jacobian_order(weil_from_counts(q, n1, n2))
    if len(out) != expected:
        raise OrderMismatchError(
            f"enumeration found {len(out)} classes but the Weil polynomial "
            f"predicts {expected}")
    return tuple(out)


def theta_set(curve: CurveModel) -> tuple[MumfordDivisor, ...]:
    """The embedded curve inside the enumerated Jacobian."""
    return tuple(d for d in enumerate_jacobian(curve) if in_theta(d))


def zero_sum_tuples(curve: CurveModel, r: int, limit: int | None = None,
                    stride: int = 1) -> Iterator[tuple[MumfordDivisor, ...]]:
    """Tuples (P_1, ..., P_r) summing to the identity.

    The first r-1 entries run lexicographically over the sorted group (so
    the all-identity tuple comes first) and the last entry is determined;
    ``stride`` keeps every stride-th tuple of that order, ``limit`` caps
    how many are yielded.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    group = enumerate_jacobian(curve)
    yielded = 0
    index = 0
    total = len(group) ** (r - 1)
    while index < total and (limit is None or yielded < limit):
        rest = index
        picks = []
        for _ in range(r - 1):
            rest, i = divmod(rest, len(group))
            picks.append(group[i])
        picks.reverse()  # lexicographic: leftmost entry moves slowest
        acc = IDENTITY
        for d in picks:
            acc = cantor_add(curve, acc, d)
        picks.append(negate(curve, acc))
        yield tuple(picks)
        yielded += 1
        index += stride


@dataclass(frozen=True)
class TranslateExperiment:
    """Support count of a sum of curve translates attached to a zero-sum tuple."""

    points: tuple[MumfordDivisor, ...]
    support_count: int
    attained: bool
    weight_surrogate: int


def translate_support_count(curve: CurveModel,
                            points: Sequence[MumfordDivisor]) -> TranslateExperiment:
    """Count group elements lying on some translate of the embedded curve.

    The tuple must sum to the identity.  ``attained`` means the translates
    are pairwise disjoint on rational points, equivalently the support
    reaches r * N1; the weight surrogate is the group order minus the
    support size.
    """
    group = enumerate_jacobian(curve)
    acc = IDENTITY
    for d in points:
        check_divisor(curve, d)
        acc = cantor_add(curve, acc, d)
    if acc != IDENTITY:
        raise NonZeroSumError("the tuple does not sum to the identity")
    theta = theta_set(curve)
    support: set[MumfordDivisor] = set()
    for p in points:
        for t in theta:
            support.add(cantor_add(curve, t, p))
    n_support = len(support)
    return TranslateExperiment(
        points=tuple(points),
        support_count=n_support,
        attained=n_support == len(points) * len(theta),
        weight_surrogate=len(group) - n_support,
    )
