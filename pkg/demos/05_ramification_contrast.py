"""Where the complex model ramifies, the log model does not.

Over the vertex of the affine-line chart, the algebraic n-th power map
has a single preimage, but its log model z -> z^n restricts to the
vanishing circle as a genuine n-fold cover.  This one-point-versus-n
contrast is the whole mechanism of the comparison.
"""

from fractions import Fraction

from logcharts import (CxPoint, KnPoint, MonoidSpec, algebraic_kummer_fiber,
                       kn_kummer_fiber, tau, validate)

line = validate(MonoidSpec.make(1, [[1]]))

origin = CxPoint.exact_point([0])
circle_over_origin = KnPoint.exact_point([(0, Fraction(1, 8))])

print("fibers over the vertex of the affine-line chart:")
print(f"{'n':>3} {'algebraic':>10} {'log model':>10}")
for n in range(1, 9):
    alg = algebraic_kummer_fiber(line, origin, n)
    log = kn_kummer_fiber(line, circle_over_origin, n)
    print(f"{n:>3} {len(alg):>10} {len(log):>10}")

print("\naway from the vertex both covers are n-fold:")
one = CxPoint.exact_point([1])
for n in (2, 3, 4):
    print(f"  n = {n}: roots of unity over 1:",
          [str(v) for q in algebraic_kummer_fiber(line, one, n) for v in q.values])

print("\nthe projection tau collapses the vanishing circle to the origin:")
for turn in (Fraction(0), Fraction(1, 4), Fraction(1, 2)):
    point = KnPoint.exact_point([(0, turn)])
    print(f"  tau(radius 0, {turn} turn) =", tau(point))
