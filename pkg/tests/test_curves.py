"""Curve validation and point counting against exhaustive oracles.

The singularity oracle scans both affine charts of the weighted model over
F_{q^d}, d <= 3, for simultaneous zeros of the equation and its partials;
degree bounds make that complete (any repeated factor of a sextic has
degree <= 3, and singular x-coordinates in characteristic 2 are roots of
h).  The count oracle solves nothing: it tries every (x, y) pair.
"""

from __future__ import annotations

import itertools

import pytest

from jacobicode import poly
from jacobicode.curves import (
    INFINITY,
    CurvePoint,
    count_points,
    curve_points,
    validate_curve,
)
from jacobicode.errors import (
    BudgetExceededError,
    GenusNotTwoError,
    JacobicodeError,
    SingularModelError,
    WrongDegreeError,
)
from jacobicode.fields import extend_field, make_field
from jacobicode.weil import serre_constant


# -- oracles -----------------------------------------------------------------

def brute_count(field, h, f, kind, k=1):
    """Count points by trying every (x, y), plus the chart at infinity."""
    emb = extend_field(field, k, allow_large=True)
    E = emb.ext
    hh, ff = emb.map_poly(h), emb.map_poly(f)
    total = 0
    for x in E.elements():
        for y in E.elements():
            lhs = E.add(E.mul(y, y), E.mul(poly.evaluate(E, hh, x), y))
            if lhs == poly.evaluate(E, ff, x):
                total += 1
    if kind == "imaginary":
        total += 1
    else:
        h3 = poly.coefficient(hh, 3)
        f6 = poly.coefficient(ff, 6)
        for z in E.elements():
            if E.add(E.mul(z, z), E.mul(h3, z)) == f6:
                total += 1
    return total


def _chart_polys(field, h, f):
    """Both charts of the weighted model, as (h-part, f-part) pairs."""
    h6 = tuple(poly.coefficient(h, i) for i in range(4))
    f6 = tuple(poly.coefficient(f, i) for i in range(7))
    inf_h = poly.trim(reversed(h6))
    inf_f = poly.trim(reversed(f6))
    return ((poly.trim(h6), poly.trim(f6)), (inf_h, inf_f))


def has_singular_point(field, h, f):
    """Exhaustive singular-point search over F_{q^d}, d in {1, 2, 3}."""
    for hh, ff in _chart_polys(field, h, f):
        for d in (1, 2, 3):
            emb = extend_field(field, d, allow_large=True)
            E = emb.ext
            hd, fd = emb.map_poly(hh), emb.map_poly(ff)
            hp, fp = poly.derivative(E, hd), poly.derivative(E, fd)
            for x in E.elements():
                hx = poly.evaluate(E, hd, x)
                fx = poly.evaluate(E, fd, x)
                hpx = poly.evaluate(E, hp, x)
                fpx = poly.evaluate(E, fp, x)
                for y in E.elements():
                    if (E.add(E.mul(y, y), E.mul(hx, y)) == fx
                            and E.add(E.add(y, y), hx) == 0
                            and E.mul(hpx, y) == fpx):
                        return True
    return False


def exhaustive_census(field, f_degree, h_degrees):
    q = field.q
    h_tuples = itertools.chain.from_iterable(
        itertools.product(range(q), repeat=d + 1) for d in h_degrees)
    for h in set(poly.trim(t) for t in h_tuples) | {()}:
        for tail in itertools.product(range(q), repeat=f_degree):
            yield h, tail + (1,)


# -- validation --------------------------------------------------------------

class TestValidation:
    def test_anchor_models(self, f2):
        c = validate_curve(f2, (1,), (0, 0, 0, 0, 0, 1))
        assert c.kind == "imaginary" and c.h == (1,)

    def test_char2_h_zero_is_singular(self, f2):
        with pytest.raises(SingularModelError):
            validate_curve(f2, (), (0, 0, 0, 0, 0, 1))

    def test_wrong_degree(self):
        F3 = make_field(3, 1)
        with pytest.raises(WrongDegreeError):
            validate_curve(F3, (), (1, 0, 0, 0, 1))  # x^4 + 1
        with pytest.raises(WrongDegreeError):
            validate_curve(F3, (), (1, 0, 0, 0, 0, 2))  # non-monic quintic
        with pytest.raises(WrongDegreeError):
            validate_curve(F3, (0, 0, 0, 1), (0, 0, 0, 0, 0, 1))  # deg h = 3 on deg-5 f

    def test_odd_char_normalizes_h_away(self):
        F5 = make_field(5, 1)
        # y^2 + (x+1) y = x^5 + 2  ->  y^2 = x^5 + (x+1)^2/4 + 2
        c = validate_curve(F5, (1, 1), (2, 0, 0, 0, 0, 1))
        assert c.h == ()
        inv4 = F5.inv(4)
        expected = poly.add(F5, (2, 0, 0, 0, 0, 1),
                            poly.scale(F5, poly.mul(F5, (1, 1), (1, 1)), inv4))
        assert c.f == expected

    def test_odd_char_squarefree_required(self):
        F3 = make_field(3, 1)
        with pytest.raises(SingularModelError):
            validate_curve(F3, (), (0, 0, 0, 0, 0, 1))  # x^5 has a double root
        c = validate_curve(F3, (), (0, 1, 0, 0, 0, 1))  # x^5 + x is squarefree
        assert c.kind == "imaginary"

    def test_char5_fifth_power_detected(self):
        F5 = make_field(5, 1)
        # x^5 + 2 = (x + c)^5 in characteristic 5: derivative vanishes identically
        with pytest.raises(SingularModelError):
            validate_curve(F5, (), (2, 0, 0, 0, 0, 1))

    def test_real_models(self):
        F5 = make_field(5, 1)
        c = validate_curve(F5, (), (1, 1, 0, 0, 0, 0, 1))  # x^6 + x + 1
        assert c.kind == "real"
        F2 = make_field(2, 1)
        c2 = validate_curve(F2, (1,), (0, 0, 0, 0, 0, 1, 1))  # y^2+y = x^6+x^5
        assert c2.kind == "real"
        with pytest.raises(SingularModelError):
            validate_curve(F2, (1,), (0, 0, 0, 0, 0, 0, 1))  # y^2+y = x^6

    def test_degree6_leading_cancellation_rekinds(self):
        # over F_5: h = x^3 with h^2/4 = 4 x^6; 1 + 4 = 0 kills the sextic term
        # and the surviving x^5 term makes the normalized model imaginary
        F5 = make_field(5, 1)
        c = validate_curve(F5, (0, 0, 0, 1), (0, 1, 0, 0, 0, 1, 1))
        assert c.kind == "imaginary"
        assert poly.degree(c.f) == 5

    def test_degree6_full_cancellation_is_not_genus_two(self):
        # leading cancellation with no x^5 term left: degree drops below 5
        F5 = make_field(5, 1)
        with pytest.raises((GenusNotTwoError, SingularModelError)):
            validate_curve(F5, (0, 0, 0, 1), (0, 1, 0, 0, 0, 0, 1))

    @pytest.mark.parametrize("q,f_degree,h_degrees,sample", [
        (2, 5, (0, 1, 2), None),
        (2, 6, (0, 1, 2, 3), None),
        (3, 5, (0, 1, 2), None),
        (3, 6, (0, 1, 2, 3), 400),
        (4, 5, (0, 1, 2), 400),
        (5, 5, (0, 1, 2), 400),
    ])
    def test_validation_matches_bruteforce_singularity_search(
            self, q, f_degree, h_degrees, sample):
        from conftest import field_for
        field = field_for(q)
        census = list(exhaustive_census(field, f_degree, h_degrees))
        if sample is not None:
            census = census[:: max(1, len(census) // sample)]
        checked = 0
        for h, f in census:
            try:
                validate_curve(field, h, f)
                accepted = True
            except (SingularModelError, GenusNotTwoError):
                accepted = False
            except WrongDegreeError:
                continue
            assert accepted == (not has_singular_point(field, h, f)), (h, f)
            checked += 1
        assert checked > 50


# -- counting ----------------------------------------------------------------

class TestCounting:
    def test_e1_counts(self, curve_e1):
        assert count_points(curve_e1, 1).count == 3
        assert count_points(curve_e1, 2).count == 5

    def test_e2_counts(self, curve_e2):
        assert count_points(curve_e2, 1).count == 5
        assert count_points(curve_e2, 2).count == 5

    def test_e1_point_set(self, curve_e1):
        assert set(curve_points(curve_e1, 1)) == {
            INFINITY, CurvePoint(0, 0), CurvePoint(0, 1)}

    def test_e2_point_set(self, curve_e2):
        assert set(curve_points(curve_e2, 1)) == {
            INFINITY, CurvePoint(0, 0), CurvePoint(0, 1),
            CurvePoint(1, 0), CurvePoint(1, 1)}

    def test_counts_match_bruteforce_on_corpus(self, corpus):
        for q, curves in corpus.items():
            for curve in curves[:20]:
                for k in (1, 2):
                    if curve.field.q ** (2 * k) > 1 << 16:
                        continue
                    expected = brute_count(curve.field, curve.h, curve.f,
                                           curve.kind, k)
                    assert count_points(curve, k).count == expected

    def test_real_model_counts_match_bruteforce(self):
        F5 = make_field(5, 1)
        F2 = make_field(2, 1)
        cases = [
            (F5, (), (1, 1, 0, 0, 0, 0, 1)),       # lc = 1 square: 2 points at infinity
            (F5, (), (2, 1, 0, 0, 0, 0, 1)),
            (F2, (1,), (0, 0, 0, 0, 0, 1, 1)),      # ramified infinity (h3 = 0)
            (F2, (0, 0, 0, 1), (1, 0, 1, 0, 0, 0, 1)),  # split/inert infinity (h3 != 0)
        ]
        for field, h, f in cases:
            try:
                curve = validate_curve(field, h, f)
            except JacobicodeError:
                continue
            for k in (1, 2):
                expected = brute_count(field, curve.h, curve.f, curve.kind, k)
                assert count_points(curve, k).count == expected, (h, f, k)

    def test_odd_real_nonsquare_leading_coefficient(self):
        # force a non-monic normalized f: h = x^3, f = x^6 + ... over F_3
        # h^2/4 = x^6: lc becomes 1 + 1 = 2, a non-square mod 3: 0 points at infinity
        F3 = make_field(3, 1)
        curve = validate_curve(F3, (0, 0, 0, 1), (1, 1, 0, 0, 0, 0, 1))
        assert curve.kind == "real" and curve.f[-1] == 2
        for k in (1, 2):
            expected = brute_count(F3, curve.h, curve.f, curve.kind, k)
            assert count_points(curve, k).count == expected

    def test_count_equals_point_list_length(self, corpus):
        for curves in corpus.values():
            for curve in curves[:15]:
                for k in (1, 2):
                    assert count_points(curve, k).count == len(curve_points(curve, k))

    def test_serre_weil_window(self, corpus):
        for q, curves in corpus.items():
            for curve in curves:
                for k in (1, 2):
                    nk = count_points(curve, k).count
                    qk = q ** k
                    assert abs(nk - (qk + 1)) <= 2 * serre_constant(qk)

    def test_points_inject_into_quadratic_extension(self, corpus):
        for curves in corpus.values():
            for curve in curves[:10]:
                emb = extend_field(curve.field, 2, allow_large=True)
                big = set(curve_points(curve, 2))
                for pt in curve_points(curve, 1):
                    if pt.at_infinity:
                        lifted = CurvePoint(None, emb(pt.y))
                    else:
                        lifted = CurvePoint(emb(pt.x), emb(pt.y))
                    assert lifted in big

    def test_budget(self, curve_e2):
        with pytest.raises(BudgetExceededError):
            count_points(curve_e2, 21)
        with pytest.raises(BudgetExceededError):
            curve_points(curve_e2, 21)

    def test_extension_count_example_over_f8(self, curve_e2):
        assert count_points(curve_e2, 3).count == 17
