"""Defining equations of the chart spaces and their points.

A chart with generators p_1..p_k and relations sum r_ij p_j = sum s_ij p_j
has two point spaces. The complex model C(P) = Hom(P, C) embeds into C^k
cut out by the binomial equations prod z_j^{r_ij} = prod z_j^{s_ij}.  The
log model C(P)_log = Hom(P, R>=0 x S^1) is cut out of (R>=0 x S^1)^k by
the same exponent data read componentwise: radii multiplicatively, angles
additively modulo one full turn.  The factored (radius, angle) form is
kept throughout; the real-algebraic embedding into (R^3)^k would add
arithmetic without adding checkable content.

Exact points carry Gaussian-rational coordinates, exact rational radii
(or radicals produced by root extraction) and rational angles measured in
turns; exact membership requires residual exactly zero.  Floating points
use complex/float coordinates against a tolerance, 1e-9 by default.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (ArityMismatch, InvalidPoint, StratumEmptyAtDeskScale)
from .exactnum import (GAUSSIAN_ONE, GAUSSIAN_ZERO, GaussianRational,
                       NonnegRoot, turn_mod1, unit_from_turn_exact,
                       unit_from_turn_float)
from .monoid import AffineMonoid, Face

DEFAULT_TOLERANCE = 1e-9
_SAMPLER_RETRY_BUDGET = 64


class Target(enum.Enum):
    COMPLEX_POINTS = "complex"
    KN_POINTS = "kn"


@dataclass(frozen=True)
class BinomialSystem:
    """The equations of one chart model, relation exponents verbatim."""

    variable_count: int
    equations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    target: Target

    def to_json_dict(self):
        return {
            "target": self.target.value,
            "variable_count": self.variable_count,
            "equations": [{"lhs": list(r), "rhs": list(s)} for r, s in self.equations],
        }


@dataclass(frozen=True)
class CxPoint:
    """A generator-value assignment into C.

    Exact points hold GaussianRational values; floating points hold
    complex values.
    """

    values: tuple
    exact: bool

    @staticmethod
    def exact_point(values) -> CxPoint:
        return CxPoint(tuple(GaussianRational.of(v) for v in values), True)

    @staticmethod
    def floating(values) -> CxPoint:
        return CxPoint(tuple(complex(v) for v in values), False)

    def value(self, i):
        return self.values[i]

    @property
    def arity(self) -> int:
        return len(self.values)

    def is_zero_at(self, i, tol: float = 0.0) -> bool:
        v = self.values[i]
        if self.exact:
            return v.is_zero()
        return abs(v) <= tol

    def to_complex(self) -> tuple[complex, ...]:
        if self.exact:
            return tuple(v.to_complex() for v in self.values)
        return self.values

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class KnPoint:
    """A generator-value assignment into R>=0 x S^1.

    Exact points: radius is a Fraction or a NonnegRoot, angle is an exact
    rational number of turns in [0, 1).  Floating points: radius is a
    float, angle is a unit complex number.
    """

    values: tuple
    exact: bool

    @staticmethod
    def exact_point(pairs) -> KnPoint:
        vals = []
        for radius, angle in pairs:
            radius = radius if isinstance(radius, NonnegRoot) else NonnegRoot.of(Fraction(radius))
            vals.append((radius, turn_mod1(Fraction(angle))))
        return KnPoint(tuple(vals), True)

    @staticmethod
    def floating(pairs) -> KnPoint:
        vals = []
        for radius, angle in pairs:
            radius = float(radius)
            if radius < 0:
                raise InvalidPoint("radius must be nonnegative")
            angle = complex(angle)
            mag = abs(angle)
            if mag == 0:
                raise InvalidPoint("angle must be a unit complex number")
            vals.append((radius, angle / mag))
        return KnPoint(tuple(vals), False)

    def radius(self, i):
        return self.values[i][0]

    def angle(self, i):
        return self.values[i][1]

    @property
    def arity(self) -> int:
        return len(self.values)

    def is_zero_at(self, i, tol: float = 0.0) -> bool:
        r = self.values[i][0]
        if self.exact:
            return r.is_zero()
        return abs(r) <= tol

    def __str__(self):
        if self.exact:
            return "(" + ", ".join(f"({r}, {a} turn)" for r, a in self.values) + ")"
        return "(" + ", ".join(f"({r:.6g}, {a:.6g})" for r, a in self.values) + ")"


def emit_equations(m: AffineMonoid, target: Target | str) -> BinomialSystem:
    """One binomial equation per verified relation of the chart."""
    if isinstance(target, str):
        target = Target(target)
    return BinomialSystem(m.generator_count, tuple(m.relations), target)


def _monomial_exact(values, exponents):
    out = GAUSSIAN_ONE
    for v, e in zip(values, exponents):
        if e:
            if v.is_zero():
                return GAUSSIAN_ZERO
            out = out * v ** e
    return out


def _monomial_float(values, exponents):
    out = complex(1)
    for v, e in zip(values, exponents):
        if e:
            out *= v ** e
    return out


def _radius_monomial_exact(point, exponents):
    out = NonnegRoot.of(1)
    for (r, _), e in zip(point.values, exponents):
        if e:
            if r.is_zero():
                return NonnegRoot.of(0)
            out = out * r ** e
    return out


def check_membership(system: BinomialSystem, point, tol: float = DEFAULT_TOLERANCE):
    """Evaluate every equation at the point.

    Returns (ok, max_residual).  Exact points must have residual exactly
    zero; the reported residual is a float for uniformity.  Raises
    ArityMismatch when the point has the wrong number of coordinates and
    InvalidPoint when the point type does not match the system target.
    """
    if point.arity != system.variable_count:
        raise ArityMismatch(
            f"point has {point.arity} coordinates, system has {system.variable_count}")
    if system.target is Target.COMPLEX_POINTS and not isinstance(point, CxPoint):
        raise InvalidPoint("complex system expects a CxPoint")
    if system.target is Target.KN_POINTS and not isinstance(point, KnPoint):
        raise InvalidPoint("log system expects a KnPoint")

    max_residual = 0.0
    ok = True
    for r, s in system.equations:
        if system.target is Target.COMPLEX_POINTS:
            if point.exact:
                diff = _monomial_exact(point.values, r) - _monomial_exact(point.values, s)
                residual = math.sqrt(float(diff.abs2()))
                if not diff.is_zero():
                    ok = False
            else:
                residual = abs(_monomial_float(point.values, r)
                               - _monomial_float(point.values, s))
                if residual > tol:
                    ok = False
        else:
            residual = _kn_equation_residual(point, r, s)
            if point.exact:
                if residual != 0.0:
                    ok = False
            elif residual > tol:
                ok = False
        max_residual = max(max_residual, residual)
    return ok, max_residual


def _kn_equation_residual(point: KnPoint, r, s) -> float:
    if point.exact:
        lhs = _radius_monomial_exact(point, r)
        rhs = _radius_monomial_exact(point, s)
        radius_res = 0.0 if lhs == rhs else abs(float(lhs) - float(rhs))
        turn = turn_mod1(sum((Fraction(ri) - Fraction(si)) * point.angle(i)
                             for i, (ri, si) in enumerate(zip(r, s))))
        angle_res = 0.0 if turn == 0 else abs(unit_from_turn_float(turn) - 1.0)
        # Angles only matter where some radius factor is alive on a side;
        # they are group-valued, so the relation constrains them globally.
        return max(radius_res, angle_res)
    lhs_r = 1.0
    rhs_r = 1.0
    lhs_a = complex(1)
    rhs_a = complex(1)
    for i, (ri, si) in enumerate(zip(r, s)):
        if ri:
            lhs_r *= point.radius(i) ** ri
            lhs_a *= point.angle(i) ** ri
        if si:
            rhs_r *= point.radius(i) ** si
            rhs_a *= point.angle(i) ** si
    return max(abs(lhs_r - rhs_r), abs(lhs_a - rhs_a))


def tau(point: KnPoint) -> CxPoint:
    """The projection (radius, angle) -> radius * angle, componentwise.

    Exact output requires rational radii and quarter-turn angles (the only
    rational turns with Gaussian-rational unit); otherwise the result is a
    floating point with the same coordinates numerically.
    """
    if point.exact:
        exact_values = []
        for radius, angle in point.values:
            unit = unit_from_turn_exact(angle)
            if unit is None or not radius.is_rational():
                exact_values = None
                break
            exact_values.append(GaussianRational.of(radius.as_rational()) * unit)
        if exact_values is not None:
            return CxPoint(tuple(exact_values), True)
        return CxPoint.floating([
            float(radius) * unit_from_turn_float(angle) for radius, angle in point.values])
    return CxPoint.floating([radius * angle for radius, angle in point.values])


def _draw_points(draw, count, face):
    """Collect ``count`` consistent draws; prefer fresh points, fall back
    to repeats once a small stratum is exhausted, and report loudly if no
    consistent assignment materializes at all."""
    out = []
    seen = set()
    while len(out) < count:
        fresh = None
        fallback = None
        for _ in range(_SAMPLER_RETRY_BUDGET):
            got = draw()
            if got is None:
                continue
            point, key = got
            fallback = point
            if key not in seen:
                fresh = (point, key)
                break
        if fresh is not None:
            seen.add(fresh[1])
            out.append(fresh[0])
        elif fallback is not None:
            out.append(fallback)
        else:
            raise StratumEmptyAtDeskScale(
                f"no consistent assignment found on face {face.support} "
                f"within the retry budget")
    return out


def _random_nonzero_fraction(rng: random.Random) -> Fraction:
    num = rng.choice([-1, 1]) * rng.randint(1, 9)
    den = rng.randint(1, 4)
    return Fraction(num, den)


def _random_gaussian_unit_scale(rng: random.Random) -> GaussianRational:
    re = rng.randint(-3, 3)
    im = rng.randint(-3, 3)
    if re == 0 and im == 0:
        re = 1
    return GaussianRational(Fraction(re), Fraction(im))


def sample_stratum(m: AffineMonoid, f: Face, count: int, seed: int) -> list[CxPoint]:
    """Deterministic exact points with exactly the face's coordinates
    nonvanishing.

    Points are drawn from the ambient torus: a nonzero Gaussian rational
    t_l per ambient dimension induces z_i = prod_l t_l^{g_il} on the
    face's generators and 0 elsewhere.  Every Z-linear relation among the
    generators then holds identically, so each draw is relation-consistent
    by construction; the retry budget guards deduplication.
    """
    rng = random.Random(seed)
    support = set(f.support)

    def draw():
        params = [GaussianRational.of(_random_nonzero_fraction(rng))
                  * _random_gaussian_unit_scale(rng) for _ in range(m.ambient_rank)]
        values = []
        for i, gen in enumerate(m.generators):
            if i not in support:
                values.append(GAUSSIAN_ZERO)
                continue
            z = GAUSSIAN_ONE
            for t, e in zip(params, gen):
                z = z * t ** e
            if z.is_zero():
                return None
            values.append(z)
        point = CxPoint(tuple(values), True)
        return point, tuple((v.re, v.im) for v in values)

    return _draw_points(draw, count, f)


def sample_kn_stratum(m: AffineMonoid, f: Face, count: int, seed: int,
                      turn_denominator: int = 4) -> list[KnPoint]:
    """Deterministic exact log-model points over the given face.

    Radii come from positive rational parameters per ambient dimension
    (zero exactly off the face's support); angles are rational turns with
    the given denominator, drawn per ambient dimension and pushed through
    the generator exponents, so every relation holds identically.  The
    default denominator 4 keeps tau-images exactly Gaussian rational.
    """
    rng = random.Random(seed)
    support = set(f.support)

    def draw():
        rho = [Fraction(rng.randint(1, 9), rng.randint(1, 4))
               for _ in range(m.ambient_rank)]
        theta = [Fraction(rng.randrange(turn_denominator), turn_denominator)
                 for _ in range(m.ambient_rank)]
        pairs = []
        for i, gen in enumerate(m.generators):
            angle = turn_mod1(sum(Fraction(e) * t for e, t in zip(gen, theta)))
            if i in support:
                radius = Fraction(1)
                for p, e in zip(rho, gen):
                    radius *= p ** e
                pairs.append((radius, angle))
            else:
                pairs.append((Fraction(0), angle))
        point = KnPoint.exact_point(pairs)
        return point, tuple((r.base, r.degree, a) for r, a in point.values)

    return _draw_points(draw, count, f)
