"""Binomial systems, membership, the circle-collapsing projection, samplers."""

import cmath
from fractions import Fraction

import pytest

from logcharts.errors import ArityMismatch, InvalidPoint
from logcharts.exactnum import GaussianRational
from logcharts.monoid import MonoidSpec, face_with_support, faces, validate
from logcharts.semialg import (CxPoint, KnPoint, Target, check_membership,
                               emit_equations, sample_kn_stratum,
                               sample_stratum, tau)


def a1_cone():
    return validate(MonoidSpec.make(2, [[1, 0], [1, 1], [1, 2]],
                                    [[[1, 0, 1], [0, 2, 0]]]))


def quadrant():
    return validate(MonoidSpec.make(2, [[1, 0], [0, 1]]))


def test_emit_free_monoids_have_empty_systems():
    assert emit_equations(quadrant(), Target.COMPLEX_POINTS).equations == ()
    n1 = validate(MonoidSpec.make(1, [[1]]))
    assert emit_equations(n1, Target.COMPLEX_POINTS).equations == ()


def test_emit_a1_cone_equation_verbatim():
    system = emit_equations(a1_cone(), Target.COMPLEX_POINTS)
    assert system.variable_count == 3
    assert system.equations == (((1, 0, 1), (0, 2, 0)),)
    kn = emit_equations(a1_cone(), Target.KN_POINTS)
    assert kn.equations == system.equations and kn.target is Target.KN_POINTS


def test_check_membership_exact_examples():
    system = emit_equations(a1_cone(), Target.COMPLEX_POINTS)
    ok, res = check_membership(system, CxPoint.exact_point([1, 2, 4]))
    assert ok and res == 0.0
    ok, res = check_membership(system, CxPoint.exact_point([1, 2, 5]))
    assert not ok and res == 1.0


def test_check_membership_empty_system():
    system = emit_equations(quadrant(), Target.COMPLEX_POINTS)
    ok, res = check_membership(system, CxPoint.exact_point([123, -7]))
    assert ok and res == 0.0


def test_check_membership_arity_and_type_errors():
    system = emit_equations(a1_cone(), Target.COMPLEX_POINTS)
    with pytest.raises(ArityMismatch):
        check_membership(system, CxPoint.exact_point([1, 2]))
    with pytest.raises(InvalidPoint):
        check_membership(system, KnPoint.exact_point([(1, 0), (1, 0), (1, 0)]))


def test_check_membership_floating_tolerance():
    system = emit_equations(a1_cone(), Target.COMPLEX_POINTS)
    ok, res = check_membership(system, CxPoint.floating([1.0, 2.0, 4.0 + 1e-12]))
    assert ok and res <= 1e-9
    ok, res = check_membership(system, CxPoint.floating([1.0, 2.0, 4.1]))
    assert not ok


def test_kn_membership_exact_and_floating():
    kn = emit_equations(a1_cone(), Target.KN_POINTS)
    exact = KnPoint.exact_point([(1, Fraction(1, 3)), (2, Fraction(1, 3)),
                                 (4, Fraction(1, 3))])
    ok, res = check_membership(kn, exact)
    assert ok and res == 0.0
    floating = KnPoint.floating([(1.0, 1.0), (2.0, cmath.exp(0.7j)),
                                 (4.0, cmath.exp(1.4j))])
    ok, res = check_membership(kn, floating)
    assert ok and res < 1e-12
    bad = KnPoint.exact_point([(1, Fraction(1, 3)), (2, 0), (4, Fraction(1, 3))])
    ok, _ = check_membership(kn, bad)
    assert not ok


def test_tau_quarter_turn_exact():
    p = KnPoint.exact_point([(2, Fraction(1, 4))])
    image = tau(p)
    assert image.exact
    assert image.values[0] == GaussianRational(Fraction(0), Fraction(2))


def test_tau_collapses_zero_radius():
    for turn in (0, Fraction(1, 3), Fraction(5, 8)):
        image = tau(KnPoint.exact_point([(0, turn)]))
        value = image.values[0]
        collapsed = value.is_zero() if image.exact else abs(value) == 0
        assert collapsed


def test_tau_floating_fallback_on_irrational_turns():
    p = KnPoint.exact_point([(2, Fraction(1, 3))])
    image = tau(p)
    assert not image.exact
    assert abs(image.values[0] - 2 * cmath.exp(2j * cmath.pi / 3)) < 1e-12


def test_tau_respects_equations():
    m = a1_cone()
    kn = emit_equations(m, Target.KN_POINTS)
    cx = emit_equations(m, Target.COMPLEX_POINTS)
    dense = face_with_support(m, [0, 1, 2])
    for point in sample_kn_stratum(m, dense, 8, seed=21):
        ok, res = check_membership(kn, point)
        assert ok and res == 0.0
        image = tau(point)
        ok, res = check_membership(cx, image)
        assert ok and res == 0.0  # exact samples stay exact through tau


def test_tau_round_trip_floating_within_ten_tolerances():
    m = a1_cone()
    kn = emit_equations(m, Target.KN_POINTS)
    cx = emit_equations(m, Target.COMPLEX_POINTS)
    tol = 1e-9
    point = KnPoint.floating([
        (1.5, cmath.exp(0.3j)), (3.0, cmath.exp(0.65j)), (6.0, cmath.exp(1.0j))])
    ok, res = check_membership(kn, point, tol)
    assert ok and res <= tol
    image = tau(point)
    ok, res = check_membership(cx, image, 10 * tol)
    assert ok and res <= 10 * tol


def test_sample_stratum_supports_and_membership():
    m = a1_cone()
    system = emit_equations(m, Target.COMPLEX_POINTS)
    for f in faces(m):
        for pt in sample_stratum(m, f, 4, seed=31):
            assert pt.exact
            ok, res = check_membership(system, pt)
            assert ok and res == 0.0
            for i in range(pt.arity):
                assert pt.is_zero_at(i) == (i not in f.support)


def test_sample_stratum_vertex_is_origin():
    n1 = validate(MonoidSpec.make(1, [[1]]))
    points = sample_stratum(n1, face_with_support(n1, []), 1, seed=0)
    assert len(points) == 1 and points[0].is_zero_at(0)


def test_sample_determinism():
    m = a1_cone()
    dense = face_with_support(m, [0, 1, 2])
    a = sample_stratum(m, dense, 5, seed=77)
    b = sample_stratum(m, dense, 5, seed=77)
    assert [p.values for p in a] == [p.values for p in b]
    c = sample_kn_stratum(m, dense, 5, seed=77)
    d = sample_kn_stratum(m, dense, 5, seed=77)
    assert [p.values for p in c] == [p.values for p in d]


def test_sample_kn_off_support_radius_zero_but_angles_live():
    m = a1_cone()
    f = face_with_support(m, [0])
    kn = emit_equations(m, Target.KN_POINTS)
    for point in sample_kn_stratum(m, f, 4, seed=13):
        assert point.is_zero_at(1) and point.is_zero_at(2)
        assert not point.is_zero_at(0)
        ok, res = check_membership(kn, point)
        assert ok and res == 0.0
