"""Pro-systems of finite abelian groups indexed by divisibility.

The towers the theory produces are all of the same shape: a level for
every positive integer n, the level at n a finite abelian group, and for
n | m a natural surjection level(m) -> level(n).  The profinite completion
of a finitely generated abelian group G is the tower n -> G/nG; the
mu-tower of a chart is n -> mu_n(P).  For such towers the transitions are
determined up to automorphism by the invariant factors, so level-wise
comparison of invariant factors plus transition coherence is the checkable
shadow of pro-equivalence; the limitation is recorded on every
certificate.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from .abgrp import FgAbelianGroup, is_isomorphic, tensor_mod
from .monoid import AffineMonoid, mu

COMPARISON_NOTE = (
    "level-wise invariant-factor comparison with transition coherence up to "
    "a finite bound; not a categorical pro-isomorphism"
)


class FiniteAbelianProSystem:
    """A divisibility-indexed tower of finite abelian groups.

    ``level(n)`` is memoized and safe under concurrent readers (a lock
    gives at-most-once computation per level).  Transitions for n | m are
    the natural reductions; their composition law is checkable on normal
    forms because tensor_mod(tensor_mod(g, k), n) == tensor_mod(g, n).
    """

    def __init__(self, level_fn: Callable[[int], FgAbelianGroup], description: str):
        self._level_fn = level_fn
        self.description = description
        self._memo: dict[int, FgAbelianGroup] = {}
        self._lock = threading.Lock()

    def level(self, n: int) -> FgAbelianGroup:
        n = int(n)
        if n < 1:
            raise ValueError("levels are indexed by positive integers")
        with self._lock:
            got = self._memo.get(n)
            if got is None:
                got = self._level_fn(n)
                if got.free_rank != 0:
                    raise ValueError(
                        f"level {n} of {self.description!r} is not finite: {got}")
                self._memo[n] = got
        return got

    def transition_consistent(self, m: int, n: int) -> bool:
        """Does the natural reduction level(m) -> level(n) exist, i.e. is
        level(n) the mod-n truncation of level(m)?  Requires n | m."""
        if m % n != 0:
            raise ValueError(f"transition needs n | m, got n={n}, m={m}")
        return is_isomorphic(tensor_mod(self.level(m), n), self.level(n))

    def check_coherence(self, bound: int) -> bool:
        """Transition compatibility for every pair n | m <= bound."""
        for m in range(1, bound + 1):
            for n in _divisors(m):
                if not self.transition_consistent(m, n):
                    return False
        return True

    def restrict_to_cofinal(self, indices) -> FiniteAbelianProSystem:
        """The same pro-object presented on a cofinal index subset.

        The level at arbitrary n is recovered from the smallest listed
        index m with n | m as tensor_mod(level(m), n).
        """
        indices = sorted(set(int(i) for i in indices))

        def level_fn(n):
            for m in indices:
                if m % n == 0:
                    return tensor_mod(self.level(m), n)
            raise ValueError(f"index set is not cofinal at level {n}")

        return FiniteAbelianProSystem(
            level_fn, f"{self.description} restricted to {indices[:4]}...")

    def __str__(self):
        return f"<pro-system: {self.description}>"


def _divisors(m: int) -> list[int]:
    return [n for n in range(1, m + 1) if m % n == 0]


def completion(g: FgAbelianGroup) -> FiniteAbelianProSystem:
    """The profinite completion of G as the tower of truncations G/mG."""
    return FiniteAbelianProSystem(lambda m: tensor_mod(g, m), f"completion of {g}")


def mu_tower(m: AffineMonoid) -> FiniteAbelianProSystem:
    """The tower n -> mu_n(P) underlying the infinite root construction."""
    return FiniteAbelianProSystem(lambda n: mu(m, n), f"mu-tower of {m}")


def product_system(*systems: FiniteAbelianProSystem) -> FiniteAbelianProSystem:
    """Level-wise direct product of towers."""
    desc = " x ".join(s.description for s in systems) or "trivial product"

    def level_fn(n):
        return FgAbelianGroup.trivial().direct_sum(*(s.level(n) for s in systems))

    return FiniteAbelianProSystem(level_fn, desc)


@dataclass(frozen=True)
class LevelRecord:
    n: int
    factors_a: tuple[int, ...]
    factors_b: tuple[int, ...]
    isomorphic: bool


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Per-level evidence for (or against) tower equivalence."""

    equivalent: bool
    bound: int
    levels: tuple[LevelRecord, ...]
    witness_level: int | None
    note: str = COMPARISON_NOTE

    def to_json_dict(self):
        return {
            "equivalent": self.equivalent,
            "bound": self.bound,
            "witness_level": self.witness_level,
            "note": self.note,
            "levels": [
                {"n": rec.n, "factors_a": list(rec.factors_a),
                 "factors_b": list(rec.factors_b), "isomorphic": rec.isomorphic}
                for rec in self.levels
            ],
        }


def equivalent_up_to(a: FiniteAbelianProSystem, b: FiniteAbelianProSystem,
                     bound: int) -> tuple[bool, EquivalenceCertificate]:
    """Level-wise equivalence of two towers up to the bound.

    True iff every level n <= bound has isomorphic invariant factors on
    both sides and both towers' transitions are coherent among the levels
    n | m <= bound.  For towers of finite abelian groups with natural
    surjections this is the checkable shadow of pro-equivalence.
    """
    bound = int(bound)
    if bound < 1:
        raise ValueError("bound must be a positive integer")
    records = []
    witness = None
    for n in range(1, bound + 1):
        ga, gb = a.level(n), b.level(n)
        iso = is_isomorphic(ga, gb)
        records.append(LevelRecord(n, tuple(ga.invariant_factors()),
                                   tuple(gb.invariant_factors()), iso))
        if not iso and witness is None:
            witness = n
    ok = witness is None
    if ok:
        for m in range(1, bound + 1):
            for n in _divisors(m):
                if not (a.transition_consistent(m, n) and b.transition_consistent(m, n)):
                    ok = False
                    witness = n
                    break
            if not ok:
                break
    return ok, EquivalenceCertificate(ok, bound, tuple(records), witness)


@dataclass(frozen=True)
class K1HomotopyType:
    """The homotopy type K(pi1, 1); only abelian pi1 is admitted.

    Every fiber the comparison meets is of this form (a torus or a
    classifying space of a finite abelian group), and on this class the
    pi1 functor is faithful, so equivalence of types is isomorphism of
    groups.
    """

    pi1: FgAbelianGroup

    def __str__(self):
        return f"K({self.pi1}, 1)"


class K1ProSystem:
    """A pro-system of K(A, 1) homotopy types, one per level, transitions
    inherited from the underlying group tower."""

    def __init__(self, group_system: FiniteAbelianProSystem):
        self.group_system = group_system
        self.description = f"B({group_system.description})"

    def level(self, n: int) -> K1HomotopyType:
        return K1HomotopyType(self.group_system.level(n))

    def __str__(self):
        return f"<pro-space: {self.description}>"


def classifying_pro_space(s: FiniteAbelianProSystem) -> K1ProSystem:
    """Apply B level-wise: the classifying space of a limit of finite
    groups is the limit of the classifying spaces."""
    return K1ProSystem(s)


def profinite_type(t: K1HomotopyType) -> K1ProSystem:
    """Profinite completion of K(A, 1) for finitely generated abelian A,
    computed as B of the completed group."""
    return classifying_pro_space(completion(t.pi1))


def k1_equivalent_up_to(a: K1ProSystem, b: K1ProSystem,
                        bound: int) -> tuple[bool, EquivalenceCertificate]:
    """Equivalence of K(A,1) towers reduces to their group towers."""
    return equivalent_up_to(a.group_system, b.group_system, bound)
