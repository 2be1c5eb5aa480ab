"""Monoid validation, face lattices, stalks, Kummer extensions."""

import random

import pytest

from logcharts.abgrp import FgAbelianGroup, IntMatrix, cokernel, is_isomorphic, tensor_mod
from logcharts.errors import (InvalidMonoidSpec, NotAFace, NotSharp,
                              RelationInconsistent, SaturationFailure)
from logcharts.monoid import (MonoidSpec, face_with_support, faces, kummer,
                              mu, stalk, validate)

from oracles import face_supports_by_axiom


def n_monoid():
    return validate(MonoidSpec.make(1, [[1]]))


def quadrant():
    return validate(MonoidSpec.make(2, [[1, 0], [0, 1]]))


def a1_cone():
    return validate(MonoidSpec.make(2, [[1, 0], [1, 1], [1, 2]],
                                    [[[1, 0, 1], [0, 2, 0]]]))


def test_validate_log_point():
    m = n_monoid()
    assert m.gp_lattice_rank == 1 and m.is_sharp and m.is_saturated


def test_validate_a1_cone_relation():
    m = a1_cone()
    assert m.gp_lattice_rank == 2
    # (1,0) + (1,2) == 2 * (1,1) holds exactly
    assert tuple(x + y for x, y in zip((1, 0), (1, 2))) == (2, 2)


def test_validate_rejects_line():
    with pytest.raises(NotSharp):
        validate(MonoidSpec.make(1, [[1], [-1]]))


def test_validate_rejects_zero_generator():
    with pytest.raises(InvalidMonoidSpec):
        validate(MonoidSpec.make(2, [[0, 0], [1, 0]]))


def test_validate_rejects_false_relation():
    with pytest.raises(RelationInconsistent):
        validate(MonoidSpec.make(2, [[1, 0], [1, 1], [1, 2]],
                                 [[[1, 0, 0], [0, 1, 0]]]))


def test_validate_reports_saturation_witness():
    with pytest.raises(SaturationFailure) as info:
        validate(MonoidSpec.make(1, [[2], [3]]))
    assert info.value.witness == (1,)


def test_relation_synthesis_matches_supplied():
    synthesized = validate(MonoidSpec.make(2, [[1, 0], [1, 1], [1, 2]]))
    assert synthesized.relations == (((1, 0, 1), (0, 2, 0)),)


def test_faces_quadrant():
    assert [f.support for f in faces(quadrant())] == [(), (0,), (1,), (0, 1)]


def test_faces_log_point():
    assert [f.support for f in faces(n_monoid())] == [(), (0,)]


def test_faces_a1_cone_interior_ray_excluded():
    assert [f.support for f in faces(a1_cone())] == [(), (0,), (2,), (0, 1, 2)]


def test_faces_match_combinatorial_axiom_oracle():
    for gens in [[(1,)], [(1, 0), (0, 1)], [(1, 0), (1, 1), (1, 2)],
                 [(1, 0), (0, 1), (1, 1)], [(2, 1), (1, 2)]]:
        m = validate(MonoidSpec.make(len(gens[0]), [list(g) for g in gens]))
        got = {f.support for f in faces(m)}
        assert got == face_supports_by_axiom([tuple(g) for g in gens], 10)


def test_face_certificates_are_exact():
    for m in [quadrant(), a1_cone()]:
        for f in faces(m):
            for i, g in enumerate(m.generators):
                value = sum(u * x for u, x in zip(f.certificate, g))
                if i in f.support:
                    assert value == 0
                else:
                    assert value > 0


def test_stalk_examples():
    q, r = stalk(quadrant(), face_with_support(quadrant(), [0]))
    assert r == 1 and q.gp_lattice_rank == 1
    m = n_monoid()
    q, r = stalk(m, face_with_support(m, []))
    assert r == 1 and q.generators == ((1,),)
    a = a1_cone()
    q, r = stalk(a, face_with_support(a, [0, 1, 2]))
    assert r == 0 and q.generator_count == 0


def test_stalk_requires_a_face():
    a = a1_cone()
    with pytest.raises(NotAFace):
        face_with_support(a, [1])


def test_stalk_rank_monotone_under_inclusion():
    for m in [quadrant(), a1_cone()]:
        fs = faces(m)
        ranks = {f.support: stalk(m, f)[1] for f in fs}
        for f in fs:
            for g in fs:
                if set(f.support) <= set(g.support):
                    assert ranks[g.support] <= ranks[f.support]


def test_vertex_is_unique_maximal_rank_face():
    for m in [n_monoid(), quadrant(), a1_cone()]:
        tops = [f.support for f in faces(m)
                if stalk(m, f)[1] == m.gp_lattice_rank]
        assert tops == [()]


def test_stalk_of_nonsaturated_sublattice_presentation():
    # generators span an index-2 sublattice; the quotient must still be
    # presented torsion-free
    m = validate(MonoidSpec.make(2, [[2, 0], [1, 1]]))
    q, r = stalk(m, face_with_support(m, [0]))
    assert r == 1 and q.gp_lattice_rank == 1 and q.is_sharp


def test_kummer_inclusion_matrices():
    assert kummer(n_monoid(), 2)[1].entries == ((2,),)
    assert kummer(quadrant(), 3)[1].entries == ((3, 0), (0, 3))
    assert kummer(a1_cone(), 1)[1].entries == ((1, 0), (0, 1))


def test_kummer_composition():
    m = a1_cone()
    ext_a, inc_a = kummer(m, 2)
    _, inc_b = kummer(ext_a, 3)
    _, inc_ab = kummer(m, 6)
    assert (inc_a @ inc_b).entries == inc_ab.entries


def test_mu_examples():
    for n in (1, 2, 5, 8):
        assert is_isomorphic(mu(n_monoid(), n), FgAbelianGroup.cyclic(n))
    assert mu(quadrant(), 2) == FgAbelianGroup(0, (2, 2))
    assert mu(a1_cone(), 3) == FgAbelianGroup(0, (3, 3))
    # oracle: SNF of n*I_r
    assert mu(quadrant(), 2) == cokernel(IntMatrix.diagonal([2, 2]))


def test_mu_tower_coherence_via_tensor_mod():
    for m in [n_monoid(), quadrant(), a1_cone()]:
        r = m.gp_lattice_rank
        free = FgAbelianGroup.free(r)
        for big in range(1, 25):
            for n in (d for d in range(1, big + 1) if big % d == 0):
                assert tensor_mod(mu(m, big), n) == mu(m, n)
                assert tensor_mod(free, n) == mu(m, n)


def test_trivial_monoid():
    t = validate(MonoidSpec.make(0, []))
    assert t.gp_lattice_rank == 0
    assert [f.support for f in faces(t)] == [()]
    assert mu(t, 7) == FgAbelianGroup.trivial()


def test_face_axiom_on_bounded_elements():
    # the certificate vanishes exactly on face elements
    m = a1_cone()
    for f in faces(m):
        cert = f.certificate
        for i, g in enumerate(m.generators):
            v = sum(u * x for u, x in zip(cert, g))
            assert (v == 0) == (i in f.support)


def test_relation_verification_is_exact_on_random_valid_relations():
    rng = random.Random(2)
    m = a1_cone()
    base_r, base_s = m.relations[0]
    for _ in range(10):
        # scaled relations remain valid
        c = rng.randrange(1, 4)
        rel = ([c * x for x in base_r], [c * x for x in base_s])
        validate(MonoidSpec.make(2, [[1, 0], [1, 1], [1, 2]], [rel]))
