"""Towers of finite abelian groups and their level-wise comparison."""

import math
import threading

import pytest

from logcharts.abgrp import FgAbelianGroup, tensor_mod
from logcharts.monoid import MonoidSpec, validate
from logcharts.profin import (FiniteAbelianProSystem, K1HomotopyType,
                              classifying_pro_space, completion,
                              equivalent_up_to, k1_equivalent_up_to, mu_tower,
                              product_system, profinite_type)

Z = FgAbelianGroup.free(1)


def test_completion_of_z_is_the_cyclic_tower():
    c = completion(Z)
    for m in (1, 2, 12, 100):
        assert c.level(m) == FgAbelianGroup.cyclic(m)


def test_completion_of_z2():
    c = completion(FgAbelianGroup.free(2))
    for m in range(1, 25):
        assert c.level(m) == tensor_mod(FgAbelianGroup.free(2), m)


def test_completion_of_finite_group_is_eventually_constant():
    g = FgAbelianGroup.from_cyclic_orders([6])
    c = completion(g)
    for m in (6, 12, 18, 60):
        assert c.level(m) == g
    assert c.level(4) == FgAbelianGroup.cyclic(2)


def test_levels_must_be_finite():
    bad = FiniteAbelianProSystem(lambda n: FgAbelianGroup.free(1), "broken")
    with pytest.raises(ValueError):
        bad.level(3)


def test_transition_coherence():
    for g in [Z, FgAbelianGroup.free(3), FgAbelianGroup(1, (4,)),
              FgAbelianGroup(0, (2, 6))]:
        assert completion(g).check_coherence(30)


def test_mu_tower_of_log_point_is_z_hat():
    m = validate(MonoidSpec.make(1, [[1]]))
    ok, cert = equivalent_up_to(completion(Z), mu_tower(m), 100)
    assert ok and cert.equivalent and cert.witness_level is None


def test_mu_tower_of_trivial_monoid():
    t = validate(MonoidSpec.make(0, []))
    tower = mu_tower(t)
    for n in (1, 5, 9):
        assert tower.level(n) == FgAbelianGroup.trivial()


def test_finite_products_commute_with_completion():
    for k in (1, 2, 3, 4):
        ok, cert = equivalent_up_to(
            completion(FgAbelianGroup.free(k)),
            product_system(*[completion(Z)] * k), 100)
        assert ok, cert.witness_level


def test_inequivalent_with_witness():
    ok, cert = equivalent_up_to(completion(Z), completion(FgAbelianGroup.free(2)), 10)
    assert not ok and cert.witness_level == 2
    rec = next(r for r in cert.levels if r.n == 2)
    assert rec.factors_a == (2,) and rec.factors_b == (2, 2)


def test_cofinal_factorial_reindexing():
    facts = [math.factorial(m) for m in range(1, 41)]
    restricted = completion(Z).restrict_to_cofinal(facts)
    ok, _ = equivalent_up_to(completion(Z), restricted, 40)
    assert ok


def test_restriction_needs_cofinality():
    restricted = completion(Z).restrict_to_cofinal([2, 4, 8])
    with pytest.raises(ValueError):
        restricted.level(3)


def test_classifying_pro_space_levels():
    b = classifying_pro_space(completion(Z))
    assert b.level(6).pi1 == FgAbelianGroup.cyclic(6)
    trivial = classifying_pro_space(completion(FgAbelianGroup.trivial()))
    assert trivial.level(9).pi1 == FgAbelianGroup.trivial()
    squares = classifying_pro_space(completion(FgAbelianGroup.free(2)))
    assert squares.level(5).pi1 == FgAbelianGroup(0, (5, 5))


def test_profinite_type_of_torus():
    for k in (0, 1, 2, 3):
        t = profinite_type(K1HomotopyType(FgAbelianGroup.free(k)))
        assert t.level(4).pi1 == tensor_mod(FgAbelianGroup.free(k), 4)


def test_profinite_type_of_finite_k1_stabilizes():
    t = profinite_type(K1HomotopyType(FgAbelianGroup.cyclic(6)))
    for n in (6, 12, 36, 60):
        assert t.level(n).pi1 == FgAbelianGroup.cyclic(6)


def test_goodness_surrogate():
    # completed torus vs classifying tower of the mu-tower, rank matching
    charts = [
        (1, validate(MonoidSpec.make(1, [[1]]))),
        (2, validate(MonoidSpec.make(2, [[1, 0], [0, 1]]))),
        (2, validate(MonoidSpec.make(2, [[1, 0], [1, 1], [1, 2]],
                                     [[[1, 0, 1], [0, 2, 0]]]))),
    ]
    for k, m in charts:
        ok, _ = k1_equivalent_up_to(
            profinite_type(K1HomotopyType(FgAbelianGroup.free(k))),
            classifying_pro_space(mu_tower(m)), 60)
        assert ok


def test_concurrent_level_memoization():
    calls = []

    def level_fn(n):
        calls.append(n)
        return tensor_mod(Z, n)

    system = FiniteAbelianProSystem(level_fn, "concurrency probe")
    threads = [threading.Thread(target=lambda: [system.level(n) for n in range(1, 20)])
               for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    # at-most-once computation per level
    assert sorted(calls) == list(range(1, 20))
