"""Affine (fine, saturated, sharp) monoids presented by lattice generators.

A chart supplies a monoid P as a list of integer vectors in an ambient
lattice Z^d, optionally with binomial relations among the generators.
Everything downstream (faces, rank strata, Kummer extensions, the groups
mu_n(P)) is computed from this presentation by exact linear algebra.

Generator indices are 0-based throughout the library.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import ratlp
from .abgrp import (FgAbelianGroup, IntMatrix, cokernel, generator_matrix,
                    kernel_basis, rank, smith_normal_form, solve_integer)
from .errors import (InvalidMonoidSpec, NotAFace, NotSharp,
                     RelationInconsistent, RelationSynthesisIncomplete,
                     SaturationFailure)

DEFAULT_DEGREE_BOUND = 20

Relation = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class MonoidSpec:
    """Raw presentation data: ambient rank, generators, optional relations.

    A relation is a pair (r, s) of nonnegative integer exponent vectors of
    length k asserting sum_j r_j gen_j == sum_j s_j gen_j in Z^d.
    """

    ambient_rank: int
    generators: tuple[tuple[int, ...], ...]
    relations: tuple[Relation, ...] | None = None

    @staticmethod
    def make(ambient_rank, generators, relations=None) -> MonoidSpec:
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        rels = None
        if relations is not None:
            rels = tuple((tuple(int(x) for x in r), tuple(int(x) for x in s))
                         for r, s in relations)
        return MonoidSpec(int(ambient_rank), gens, rels)


@dataclass(frozen=True)
class Face:
    """A face of the monoid, as the set of generator indices lying on it.

    The certificate is a rational functional u with <u, gen_i> == 0 exactly
    for i in the support and <u, gen_j> > 0 exactly off it; its existence
    is what makes the support a face.
    """

    support: tuple[int, ...]
    certificate: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(sorted(self.support)))
        object.__setattr__(self, "certificate", tuple(Fraction(x) for x in self.certificate))

    def __contains__(self, index: int) -> bool:
        return index in self.support

    def __str__(self):
        return "{" + ", ".join(map(str, self.support)) + "}"


@dataclass
class AffineMonoid:
    """A validated fine saturated sharp monoid.

    ``relations`` is the verified relation set (synthesized from the kernel
    of the generator matrix when the presentation supplied none).
    ``is_saturated``
    records a desk-scale check: saturation was verified for all cone
    lattice points up to ``degree_bound``.  Treat instances as immutable;
    they are only constructed by :func:`validate`.
    """

    spec: MonoidSpec
    gp_lattice_rank: int
    is_sharp: bool
    is_saturated: bool
    relations: tuple[Relation, ...]
    degree_bound: int
    sharpness_certificate: tuple[Fraction, ...]
    grading: tuple[int, ...]
    _faces: tuple[Face, ...] | None = field(default=None, repr=False, compare=False)

    @property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        return self.spec.generators

    @property
    def ambient_rank(self) -> int:
        return self.spec.ambient_rank

    @property
    def generator_count(self) -> int:
        return len(self.spec.generators)

    def generator_matrix(self) -> IntMatrix:
        return generator_matrix(self.spec.generators, self.spec.ambient_rank)

    def degree(self, vector) -> int:
        """Value of the grading functional; >= 1 on every generator."""
        return sum(int(u) * int(x) for u, x in zip(self.grading, vector))

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"<affine monoid in Z^{self.ambient_rank} with generators {gens}>"


def _check_spec_shape(spec: MonoidSpec):
    d, k = spec.ambient_rank, len(spec.generators)
    if d < 0:
        raise InvalidMonoidSpec("ambient rank must be nonnegative")
    for g in spec.generators:
        if len(g) != d:
            raise InvalidMonoidSpec(f"generator {g} does not live in Z^{d}")
        if all(x == 0 for x in g):
            raise InvalidMonoidSpec("zero generator: sharpness admits no unit besides 0")
    if spec.relations is not None:
        for r, s in spec.relations:
            if len(r) != k or len(s) != k:
                raise InvalidMonoidSpec(f"relation {(r, s)} has wrong arity (expected {k})")
            if any(x < 0 for x in r) or any(x < 0 for x in s):
                raise InvalidMonoidSpec(f"relation {(r, s)} has negative exponents")


def _verify_relation(spec: MonoidSpec, relation: Relation):
    r, s = relation
    d = spec.ambient_rank
    lhs = tuple(sum(r[j] * spec.generators[j][i] for j in range(len(r))) for i in range(d))
    rhs = tuple(sum(s[j] * spec.generators[j][i] for j in range(len(s))) for i in range(d))
    if lhs != rhs:
        raise RelationInconsistent(
            f"relation {relation} fails: sides evaluate to {lhs} and {rhs}")


def _grading_functional(spec: MonoidSpec, certificate) -> tuple[int, ...]:
    """An integer functional that is >= 1 on every generator.

    The coordinate-sum functional is the default degree; it is used
    whenever it is positive on all generators, and the sharpness
    certificate, cleared to integers, is the fallback grading otherwise.
    """
    d = spec.ambient_rank
    coord_sum = tuple(1 for _ in range(d))
    if all(sum(g) >= 1 for g in spec.generators):
        return coord_sum
    ints = ratlp._normalize_functional(tuple(Fraction(c) for c in certificate))
    return tuple(int(x) for x in ints)


def _synthesize_relations(spec: MonoidSpec) -> tuple[Relation, ...]:
    """Candidate relations from a basis of the integer kernel of the
    generator matrix, each kernel vector split into its positive and
    negative parts."""
    matrix = generator_matrix(spec.generators, spec.ambient_rank)
    rels = []
    for z in kernel_basis(matrix):
        r = tuple(x if x > 0 else 0 for x in z)
        s = tuple(-x if x < 0 else 0 for x in z)
        rels.append((r, s))
    return tuple(rels)


_ENUMERATION_CAP = 2_000_000


def _bounded_exponent_vectors(degrees, bound):
    """All n in N^k with sum n_i * degrees_i <= bound."""
    k = len(degrees)
    out = []
    vec = [0] * k

    def rec(i, remaining):
        if i == k:
            out.append(tuple(vec))
            if len(out) > _ENUMERATION_CAP:
                raise InvalidMonoidSpec(
                    "degree-bounded enumeration exceeds the desk-scale cap; "
                    "lower the degree bound")
            return
        step = degrees[i]
        top = remaining // step
        for c in range(top + 1):
            vec[i] = c
            rec(i + 1, remaining - c * step)
        vec[i] = 0

    rec(0, bound)
    return out


def _image(spec: MonoidSpec, exponents) -> tuple[int, ...]:
    d = spec.ambient_rank
    return tuple(sum(exponents[j] * spec.generators[j][i] for j in range(len(exponents)))
                 for i in range(d))


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _check_congruence_complete(spec: MonoidSpec, relations, degrees, bound):
    """Brute-force congruence oracle.

    Two exponent vectors with the same image must be connected by the
    elementary moves m + r <-> m + s generated by the relation set.  Every
    move preserves the image and the degree, so each fiber of the image map
    over degree-bounded elements is closed under moves and can be checked
    by union-find.  Fails loudly if any fiber is disconnected.
    """
    vectors = _bounded_exponent_vectors(degrees, bound)
    fibers: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for n in vectors:
        fibers.setdefault(_image(spec, n), []).append(n)
    k = len(spec.generators)
    for image, members in fibers.items():
        if len(members) < 2:
            continue
        index = {n: i for i, n in enumerate(members)}
        uf = _UnionFind(len(members))
        for n in members:
            for r, s in relations:
                for a, b in ((r, s), (s, r)):
                    if all(n[j] >= a[j] for j in range(k)):
                        moved = tuple(n[j] - a[j] + b[j] for j in range(k))
                        uf.union(index[n], index[moved])
        root = uf.find(0)
        if any(uf.find(i) != root for i in range(len(members))):
            raise RelationSynthesisIncomplete(
                f"relation set does not connect the {len(members)} presentations "
                f"of {image} at degree <= {bound}")
    return {img for img in fibers}


def _check_saturation(m_partial: AffineMonoid, monoid_images, bound):
    """Desk-scale saturation check.

    Enumerates the integer points of the cone truncated at the degree
    bound (bounding box per coordinate by exact LP, then cone membership
    per point) and demands each point of the generated sublattice be a
    nonnegative integer combination of generators, i.e. appear among the
    enumerated monoid elements.
    """
    spec = m_partial.spec
    d, k = spec.ambient_rank, len(spec.generators)
    if k == 0 or d == 0:
        return
    gens = spec.generators
    degrees = [m_partial.degree(g) for g in gens]
    grading = m_partial.grading

    # Bounding box of { G @ lam : lam >= 0, grading . (G @ lam) <= bound }.
    lo, hi = [], []
    constraint = [[Fraction(degrees[j]) for j in range(k)] + [Fraction(1)]]
    rhs = [Fraction(bound)]
    for axis in range(d):
        cost = [Fraction(gens[j][axis]) for j in range(k)] + [Fraction(0)]
        status_min, _, vmin = ratlp.solve_standard_form(cost, constraint, rhs)
        status_max, _, vmax = ratlp.solve_standard_form([-c for c in cost], constraint, rhs)
        if status_min != ratlp.OPTIMAL or status_max != ratlp.OPTIMAL:
            raise InvalidMonoidSpec("truncated cone is unbounded; grading is broken")
        lo.append(math.ceil(vmin))
        hi.append(math.floor(-vmax))
    box = 1
    for a, b in zip(lo, hi):
        box *= max(0, b - a + 1)
    if box > 500_000:
        raise InvalidMonoidSpec(
            f"saturation box has {box} points; lower the degree bound")

    matrix = m_partial.generator_matrix()
    gen_cols = [tuple(g) for g in gens]
    for point in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(x == 0 for x in point):
            continue
        deg = sum(u * x for u, x in zip(grading, point))
        if deg < 0 or deg > bound:
            continue
        if point in monoid_images:
            continue
        if not ratlp.in_cone(gen_cols, point):
            continue
        if solve_integer(matrix, point) is None:
            continue  # in the cone but not in the generated sublattice
        raise SaturationFailure(point)


def validate(spec: MonoidSpec, degree_bound: int = DEFAULT_DEGREE_BOUND) -> AffineMonoid:
    """Validate a presentation and return the affine monoid it defines.

    Sharpness is decided exactly by rational feasibility.  Supplied
    relations are verified exactly; absent relations are synthesized from
    the integer kernel of the generator matrix and checked against the
    brute-force congruence oracle up to the degree bound.  Saturation is
    checked up to the same bound.

    Raises NotSharp, RelationInconsistent, RelationSynthesisIncomplete,
    SaturationFailure, or InvalidMonoidSpec.
    """
    if not isinstance(spec, MonoidSpec):
        spec = MonoidSpec.make(*spec)
    _check_spec_shape(spec)
    d = spec.ambient_rank

    certificate = ratlp.strict_functional(d, [], list(spec.generators))
    if certificate is None:
        raise NotSharp("the rational cone spanned by the generators contains a line")

    if spec.relations is not None:
        for rel in spec.relations:
            _verify_relation(spec, rel)
        relations = spec.relations
        synthesized = False
    else:
        relations = _synthesize_relations(spec)
        synthesized = True

    gp_rank = rank(generator_matrix(spec.generators, d))
    grading = _grading_functional(spec, certificate)
    monoid = AffineMonoid(
        spec=spec,
        gp_lattice_rank=gp_rank,
        is_sharp=True,
        is_saturated=False,
        relations=relations,
        degree_bound=degree_bound,
        sharpness_certificate=tuple(certificate),
        grading=grading,
    )

    degrees = [monoid.degree(g) for g in spec.generators]
    if any(x < 1 for x in degrees):
        raise InvalidMonoidSpec("grading functional is not positive on the generators")
    if synthesized:
        images = _check_congruence_complete(spec, relations, degrees, degree_bound)
    else:
        images = {_image(spec, n)
                  for n in _bounded_exponent_vectors(degrees, degree_bound)}
    _check_saturation(monoid, images, degree_bound)
    monoid.is_saturated = True
    return monoid


def faces(m: AffineMonoid) -> list[Face]:
    """The complete face lattice, one Face per support, sorted by
    (support size, support).

    Every subset of generator indices is decided by exact rational
    feasibility; k <= ~12 at desk scale, so 2^k subsets is fine.  The
    empty support (vertex) is a face exactly because the monoid is sharp,
    and the full support (dense face) always is, with certificate 0.
    """
    if m._faces is not None:
        return list(m._faces)
    gens = m.generators
    k = len(gens)
    found = []
    for size in range(k + 1):
        for support in itertools.combinations(range(k), size):
            inside = [gens[i] for i in support]
            outside = [gens[j] for j in range(k) if j not in support]
            cert = ratlp.strict_functional(m.ambient_rank, inside, outside)
            if cert is not None:
                found.append(Face(support, cert))
    m._faces = tuple(found)
    return list(found)


def face_with_support(m: AffineMonoid, support) -> Face:
    """The face with the given support, or NotAFace."""
    support = tuple(sorted(int(i) for i in support))
    for f in faces(m):
        if f.support == support:
            return f
    raise NotAFace(f"generator subset {support} admits no supporting functional")


def _is_face_of(m: AffineMonoid, f: Face) -> bool:
    try:
        return face_with_support(m, f.support).support == f.support
    except NotAFace:
        return False


def stalk(m: AffineMonoid, f: Face) -> tuple[AffineMonoid, int]:
    """The sharp quotient monoid P/<F> and its group rank.

    The quotient is presented in the free lattice Z^d / sat(L_F), where
    L_F is the sublattice spanned by the face's generators; saturating
    changes nothing on the group side (the face lattice is saturated in
    P^gp because P is) and keeps the quotient torsion-free.  The rank is
    gp_lattice_rank(P) minus the rank of L_F.
    """
    if not _is_face_of(m, f):
        raise NotAFace(f"{f.support} is not a face of this monoid")
    d = m.ambient_rank
    support = set(f.support)
    face_matrix = generator_matrix([m.generators[i] for i in f.support], d)
    u, diag, _ = smith_normal_form(face_matrix)
    r = sum(1 for x in diag.diagonal_entries() if x != 0)

    # x -> last d-r coordinates of U x kills exactly sat(L_F).
    def project(vec):
        y = u.apply(vec)
        return y[r:]

    outside = [j for j in range(len(m.generators)) if j not in support]
    quotient_gens = [project(m.generators[j]) for j in outside]
    quotient_spec = MonoidSpec.make(d - r, quotient_gens, None)
    quotient = validate(quotient_spec, degree_bound=m.degree_bound)
    return quotient, m.gp_lattice_rank - r


def kummer(m: AffineMonoid, n: int) -> tuple[AffineMonoid, IntMatrix]:
    """The Kummer extension P -> (1/n)P.

    (1/n)P is presented by the same generator vectors inside the refined
    lattice (1/n)Z^d rescaled back to Z^d, so the extended monoid has the
    identical presentation, and the group-level inclusion
    P^gp -> (1/n)P^gp is multiplication by n on a rank-r lattice.
    """
    n = int(n)
    if n < 1:
        raise ValueError("Kummer index must be a positive integer")
    inclusion = IntMatrix.diagonal([n] * m.gp_lattice_rank)
    return m, inclusion


def mu(m: AffineMonoid, n: int) -> FgAbelianGroup:
    """The finite abelian group mu_n(P).

    Computed as the cokernel of the Kummer inclusion on group lattices,
    which for a sharp fs monoid of group rank r is (Z/n)^r.  Cartier
    duality identifies a finite abelian group with its dual only
    non-canonically, so the abstract group is returned; every downstream
    use (orders, torsor cardinalities, pro-system levels) is
    isomorphism-invariant.
    """
    _, inclusion = kummer(m, n)
    return cokernel(inclusion)
