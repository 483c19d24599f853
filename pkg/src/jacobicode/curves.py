"""Genus-2 curve models y^2 + h(x)y = f(x) over small finite fields.

Validation accepts exactly the nonsingular genus-2 models and normalizes
odd-characteristic input to h = 0 by completing the square, so a single
smoothness criterion applies per characteristic:

* odd characteristic: the folded right-hand side g = f + h^2/4 must keep
  degree 5 or 6 and be squarefree;
* characteristic 2: h must be nonzero with gcd(h, h'^2 f + f'^2) constant
  (no affine singular point over the algebraic closure), plus an explicit
  smoothness check on the chart at infinity for degree-6 models.

Counting is exhaustive: for each x in F_{q^k} the number of y-solutions is
read off the quadratic in y (square test in odd characteristic, trace test
in characteristic 2), with the points at infinity of the smooth model added
per model kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import poly
from .errors import (
    BudgetExceededError,
    GenusNotTwoError,
    SingularModelError,
    WrongDegreeError,
)
from .fields import FieldEmbedding, FiniteField, extend_field

POINT_BUDGET = 1 << 20

IMAGINARY = "imaginary"
REAL = "real"


@dataclass(frozen=True)
class CurveModel:
    """A validated, normalized genus-2 model.

    ``h`` and ``f`` are coefficient tuples (low degree first, integer
    encodings).  Odd-characteristic models always have ``h == ()``; their
    ``f`` may be non-monic when folding h into the square cancelled part of
    the leading term of a degree-6 input.  ``kind`` reflects the normalized
    degree of ``f``: 5 is imaginary (one rational point at infinity),
    6 is real.  Construct through :func:`validate_curve`.
    """

    field: FiniteField
    h: tuple[int, ...]
    f: tuple[int, ...]
    kind: str

    @property
    def is_imaginary(self) -> bool:
        return self.kind == IMAGINARY

    def to_dict(self) -> dict:
        return {"field": self.field.to_dict(), "h": list(self.h), "f": list(self.f)}

    @classmethod
    def from_dict(cls, d: dict) -> "CurveModel":
        return validate_curve(FiniteField.from_dict(d["field"]), d["h"], d["f"])

    def __repr__(self) -> str:
        return (f"CurveModel(q={self.field.q}, h={poly.to_string(self.h)}, "
                f"f={poly.to_string(self.f)}, {self.kind})")


@dataclass(frozen=True)
class PointCount:
    k: int
    count: int


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), or a point at infinity when x is None.

    For real models the two possible points at infinity are told apart by
    the y slot, which then holds the solution of the leading-term equation;
    an imaginary model's single point at infinity is ``CurvePoint(None, 0)``.
    """

    x: int | None
    y: int

    @property
    def at_infinity(self) -> bool:
        return self.x is None


INFINITY = CurvePoint(None, 0)


def validate_curve(field: FiniteField, h: Sequence[int], f: Sequence[int]) -> CurveModel:
    """Check degrees, smoothness and genus; return the normalized model."""
    h = poly.trim(h)
    f = poly.trim(f)
    q = field.q
    if any(not 0 <= c < q for c in h) or any(not 0 <= c < q for c in f):
        raise ValueError("coefficients must be integer encodings below q")
    df = poly.degree(f)
    if df not in (5, 6):
        raise WrongDegreeError(f"deg f must be 5 or 6, got {df}")
    if not poly.is_monic(f):
        raise WrongDegreeError("f must be monic")
    h_cap = 2 if df == 5 else 3
    if poly.degree(h) > h_cap:
        raise WrongDegreeError(f"deg h must be <= {h_cap} for deg f = {df}")

    if field.p == 2:
        if not h:
            raise SingularModelError(
                "characteristic 2 needs h != 0 (h = 0 kills the y-derivative)")
        hp = poly.derivative(field, h)
        fp = poly.derivative(field, f)
        crit = poly.add(field, poly.mul(field, poly.mul(field, hp, hp), f),
                        poly.mul(field, fp, fp))
        if poly.degree(poly.gcd(field, h, crit)) >= 1:
            raise SingularModelError("affine singular point (gcd criterion)")
        if df == 6:
            h3 = poly.coefficient(h, 3)
            if h3 == 0:
                # ramified point at infinity; smooth iff h2^2 f6 != f5^2
                h2 = poly.coefficient(h, 2)
                f5 = poly.coefficient(f, 5)
                lhs = field.mul(field.mul(h2, h2), poly.coefficient(f, 6))
                if lhs == field.mul(f5, f5):
                    raise SingularModelError("singular point at infinity")
        kind = IMAGINARY if df == 5 else REAL
        return CurveModel(field, h, f, kind)

    # odd characteristic: fold h away via y -> y + h/2
    if h:
        inv4 = field.inv(4 % field.p)
        g = poly.add(field, f, poly.scale(field, poly.mul(field, h, h), inv4))
    else:
        g = f
    dg = poly.degree(g)
    if dg < 5:
        raise GenusNotTwoError(
            "completing the square left degree < 5; the model has genus < 2")
    gp = poly.derivative(field, g)
    if poly.degree(poly.gcd(field, g, gp)) >= 1:
        raise SingularModelError("right-hand side is not squarefree")
    kind = IMAGINARY if dg == 5 else REAL
    return CurveModel(field, (), g, kind)


@lru_cache(maxsize=None)
def _extension(field: FiniteField, k: int) -> FieldEmbedding:
    return extend_field(field, k, allow_large=True)


def _check_budget(curve: CurveModel, k: int) -> None:
    if curve.field.q ** k > POINT_BUDGET:
        raise BudgetExceededError(
            f"q^k = {curve.field.q ** k} exceeds the enumeration budget {POINT_BUDGET}")


def _lifted(curve: CurveModel, k: int) -> tuple[FiniteField, tuple[int, ...], tuple[int, ...]]:
    if k == 1:
        return curve.field, curve.h, curve.f
    emb = _extension(curve.field, k)
    return emb.ext, emb.map_poly(curve.h), emb.map_poly(curve.f)


def _affine_solution_count(E: FiniteField, hh, ff, x: int) -> int:
    fx = poly.evaluate(E, ff, x)
    if E.p == 2:
        hx = poly.evaluate(E, hh, x)
        if hx == 0:
            return 1  # squaring is bijective
        c = E.mul(fx, E.inv(E.mul(hx, hx)))
        return 2 if E.trace_bit(c) == 0 else 0
    if fx == 0:
        return 1
    return 2 if fx in E.nonzero_squares else 0


def _infinity_count(curve: CurveModel, E: FiniteField, hh, ff) -> int:
    if curve.is_imaginary:
        return 1
    if E.p == 2:
        h3 = poly.coefficient(hh, 3)
        f6 = poly.coefficient(ff, 6)
        if h3 == 0:
            return 1  # z^2 = f6 has exactly one solution
        c = E.mul(f6, E.inv(E.mul(h3, h3)))
        return 2 if E.trace_bit(c) == 0 else 0
    lead = ff[-1]
    return 2 if lead in E.nonzero_squares else 0


def count_points(curve: CurveModel, k: int = 1) -> PointCount:
    """Exhaustive number of points of the smooth model over F_{q^k}."""
    _check_budget(curve, k)
    E, hh, ff = _lifted(curve, k)
    total = _infinity_count(curve, E, hh, ff)
    if E.p == 2:
        mul, inv, add = E.mul, E.inv, E.add
        mask = E._trace_mask
        # inline Horner per x; h is short so this dominates nothing
        for x in E.elements():
            fx = 0
            for c in reversed(ff):
                fx = add(mul(fx, x), c)
            hx = 0
            for c in reversed(hh):
                hx = add(mul(hx, x), c)
            if hx == 0:
                total += 1
            elif (mul(fx, inv(mul(hx, hx))) & mask).bit_count() & 1 == 0:
                total += 2
    else:
        mul, add = E.mul, E.add
        squares = E.nonzero_squares
        for x in E.elements():
            fx = 0
            for c in reversed(ff):
                fx = add(mul(fx, x), c)
            if fx == 0:
                total += 1
            elif fx in squares:
                total += 2
    return PointCount(k, total)


def curve_points(curve: CurveModel, k: int = 1) -> list[CurvePoint]:
    """The explicit point set over F_{q^k}; its length equals count_points."""
    _check_budget(curve, k)
    E, hh, ff = _lifted(curve, k)
    pts: list[CurvePoint] = []

    if curve.is_imaginary:
        pts.append(INFINITY)
    elif E.p == 2:
        h3 = poly.coefficient(hh, 3)
        f6 = poly.coefficient(ff, 6)
        if h3 == 0:
            pts.append(CurvePoint(None, E.pow_(f6, E.q // 2)))
        else:
            c = E.mul(f6, E.inv(E.mul(h3, h3)))
            z0 = E.artin_schreier_roots[c]
            if z0 >= 0:
                w = E.mul(h3, z0)
                pts.append(CurvePoint(None, w))
                pts.append(CurvePoint(None, E.add(w, h3)))
    else:
        lead = ff[-1]
        r = E.square_roots[lead]
        if r >= 0:
            pts.append(CurvePoint(None, r))
            pts.append(CurvePoint(None, E.neg(r)))

    if E.p == 2:
        for x in E.elements():
            fx = poly.evaluate(E, ff, x)
            hx = poly.evaluate(E, hh, x)
            if hx == 0:
                pts.append(CurvePoint(x, E.pow_(fx, E.q // 2)))
            else:
                c = E.mul(fx, E.inv(E.mul(hx, hx)))
                z0 = E.artin_schreier_roots[c]
                if z0 >= 0:
                    y = E.mul(hx, z0)
                    pts.append(CurvePoint(x, y))
                    pts.append(CurvePoint(x, E.add(y, hx)))
    else:
        for x in E.elements():
            fx = poly.evaluate(E, ff, x)
            if fx == 0:
                pts.append(CurvePoint(x, 0))
            else:
                r = E.square_roots[fx]
                if r >= 0:
                    pts.append(CurvePoint(x, r))
                    pts.append(CurvePoint(x, E.neg(r)))
    return pts
