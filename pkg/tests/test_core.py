"""Construction, invariants, Apéry and pseudo-Frobenius data, irreducibility,
generator surgery, and the gcd-reduction Frobenius formula."""

import random
from itertools import combinations
from math import gcd
from functools import reduce

import pytest

from numsgps.core import (
    WHOLE_N,
    adjoin,
    apery,
    brauer_step,
    from_gaps,
    from_generators,
    intersect,
    is_irreducible,
    is_pseudo_symmetric,
    is_symmetric,
    preceq,
    pseudo_frobenius,
    remove_minimal_generator,
    semigroup_type,
)
from numsgps.errors import (
    InvalidInput,
    NotAdjoinable,
    NotClosed,
    NotCoprime,
    NotMember,
    NotMinimalGenerator,
    NotNumerical,
    WholeN,
)
from numsgps.oracle import is_irreducible_bruteforce, semigroups_by_genus

from conftest import sgp


class TestFromGenerators:
    def test_345(self):
        S = sgp(3, 4, 5)
        assert S.gaps == (1, 2)
        assert S.frobenius == 2
        assert S.genus == 2

    def test_whole_n(self):
        S = sgp(1)
        assert S.gaps == ()
        assert S.frobenius == -1
        assert S.genus == 0
        assert S == WHOLE_N

    def test_redundant_generator_dropped(self):
        assert sgp(9, 10, 14, 18).msg == (9, 10, 14)

    def test_non_coprime_rejected(self):
        with pytest.raises(NotNumerical):
            sgp(4, 6)

    def test_bad_values_rejected(self):
        with pytest.raises(InvalidInput):
            sgp(0, 3)
        with pytest.raises(InvalidInput):
            sgp(-2, 3)
        with pytest.raises(InvalidInput):
            from_generators([])


class TestFromGaps:
    def test_empty(self):
        assert from_gaps([]) == WHOLE_N

    def test_gap_pair(self):
        assert from_gaps([1, 2]) == sgp(3, 4, 5)

    def test_124_closed(self):
        assert from_gaps([1, 2, 4]) == sgp(3, 5, 7)

    def test_not_closed_witness(self):
        with pytest.raises(NotClosed) as err:
            from_gaps([1, 4])
        a, b = err.value.witness
        assert a + b == 4 and a not in (1, 4) and b not in (1, 4)

    def test_round_trip_every_gap_set_to_genus_15(self):
        """All 6964 closed gap sets with at most 15 gaps survive both
        round trips (the count itself pins the enumerator)."""
        pool = semigroups_by_genus(15)
        assert len(pool) == 6964
        for S in pool:
            again = from_gaps(S.gaps)
            assert again == S
            assert from_generators(again.msg) == S


class TestMembership:
    def test_examples(self):
        S = sgp(3, 5, 7)
        assert not S.contains(4)
        assert S.contains(0)
        assert S.contains(12)
        assert not S.contains(-3)

    def test_closure(self, small_semigroups):
        for S in small_semigroups[::7]:
            members = S.members_up_to(2 * S.frobenius + 2)
            for a, b in combinations(members, 2):
                assert S.contains(a + b)


class TestApery:
    def test_paper_value(self):
        assert 80 in apery(sgp(21, 24, 25, 31), 21)

    def test_whole_n(self):
        assert apery(WHOLE_N, 1) == (0,)

    def test_23(self):
        assert apery(sgp(2, 3), 2) == (0, 3)

    def test_requires_member(self):
        with pytest.raises(NotMember):
            apery(sgp(3, 5, 7), 4)
        with pytest.raises(NotMember):
            apery(sgp(3, 5, 7), 0)

    def _check_shape(self, S):
        for x in S.msg:
            ap = apery(S, x)
            assert len(ap) == x
            assert sorted(a % x for a in ap) == list(range(x))
            assert max(ap) == S.frobenius + x
            assert 0 in ap
            assert all(S.contains(a) and not S.contains(a - x) for a in ap)

    def test_shape_census(self, census_by_frobenius):
        for f in range(1, 11):
            for S in census_by_frobenius(f):
                self._check_shape(S)

    def test_shape_random_to_f40(self):
        rng = random.Random(11)
        produced = 0
        while produced < 150:
            gens = rng.sample(range(2, 30), rng.randint(2, 4))
            if reduce(gcd, gens) != 1:
                continue
            S = from_generators(gens)
            if not 1 <= S.frobenius <= 40:
                continue
            produced += 1
            self._check_shape(S)


class TestPseudoFrobenius:
    def test_579(self):
        assert pseudo_frobenius(sgp(5, 7, 9)) == (11, 13)

    def test_6911_minus_9(self):
        T = remove_minimal_generator(sgp(6, 9, 11), 9)
        assert pseudo_frobenius(T) == (9, 16, 25)

    def test_single_gap(self):
        assert pseudo_frobenius(sgp(2, 3)) == (1,)

    def test_whole_n_rejected(self):
        with pytest.raises(WholeN):
            pseudo_frobenius(WHOLE_N)

    def test_equals_maximal_gaps(self, genus_tree_12):
        """PF(S) is the set of gaps maximal for the order x ⪯ y iff y-x ∈ S."""
        for S in genus_tree_12:
            if S.is_whole_n:
                continue
            maximals = tuple(
                z
                for z in S.gaps
                if not any(
                    y != z and preceq(S, z, y).difference_in_S for y in S.gaps
                )
            )
            assert pseudo_frobenius(S) == maximals

    def test_type_examples(self):
        assert semigroup_type(sgp(5, 7, 9)) == 2
        assert semigroup_type(sgp(2, 3)) == 1
        assert semigroup_type(sgp(4, 5, 6, 7)) == 3


class TestIrreducible:
    def test_examples(self):
        assert is_irreducible(sgp(3, 5, 7))
        assert is_pseudo_symmetric(sgp(3, 5, 7))  # F = 4 even
        assert is_symmetric(sgp(2, 3))  # F = 1 odd
        assert not is_irreducible(sgp(5, 6, 8, 9))

    def test_whole_n_rejected(self):
        with pytest.raises(WholeN):
            is_irreducible(WHOLE_N)

    def test_against_bruteforce(self, small_semigroups):
        for S in small_semigroups:
            expected = is_irreducible_bruteforce(S)
            assert is_irreducible(S) == expected
            if expected:
                assert is_symmetric(S) == (S.frobenius % 2 == 1)
                assert is_pseudo_symmetric(S) == (S.frobenius % 2 == 0)


class TestGeneratorSurgery:
    def test_remove_examples(self):
        T = sgp(5, 7, 8, 9)
        assert remove_minimal_generator(T, 8) == sgp(5, 7, 9, 13)
        assert remove_minimal_generator(T, 9) == sgp(5, 7, 8)
        assert remove_minimal_generator(WHOLE_N, 1) == sgp(2, 3)

    def test_remove_requires_minimal_generator(self):
        with pytest.raises(NotMinimalGenerator):
            remove_minimal_generator(sgp(3, 5, 7), 8)

    def test_adjoin_examples(self):
        assert adjoin(sgp(3, 5, 7), 4) == sgp(3, 4, 5)
        assert adjoin(sgp(2, 3), 1) == WHOLE_N

    def test_adjoin_frobenius_always_works(self, small_semigroups):
        for S in small_semigroups[::5]:
            bigger = adjoin(S, S.frobenius)
            assert bigger.genus == S.genus - 1

    def test_adjoin_reasons(self):
        S = sgp(3, 5, 7)
        with pytest.raises(NotAdjoinable, match="not a gap"):
            adjoin(S, 3)
        with pytest.raises(NotAdjoinable, match="pseudo-Frobenius"):
            adjoin(S, 1)
        S2 = sgp(4, 5, 6, 7)  # PF = {1, 2, 3}, but 2·1 = 2 is a gap
        with pytest.raises(NotAdjoinable, match="twice"):
            adjoin(S2, 1)

    def test_adjoin_then_remove_is_identity(self, small_semigroups):
        for S in small_semigroups:
            bigger = adjoin(S, S.frobenius)
            if S.frobenius in bigger.msg:
                assert remove_minimal_generator(bigger, S.frobenius) == S


class TestIntersect:
    def test_containment_example(self):
        assert intersect(sgp(4, 5, 7), sgp(4, 7, 9, 10)) == sgp(4, 7, 9, 10)

    def test_whole_n_neutral(self):
        S = sgp(3, 5, 7)
        assert intersect(S, WHOLE_N) == S

    def test_gap_union(self):
        got = intersect(sgp(2, 3), sgp(3, 4, 5))
        assert set(got.gaps) == {1, 2}

    def test_membership_agrees(self, small_semigroups):
        rng = random.Random(3)
        for _ in range(100):
            s1, s2 = rng.sample(small_semigroups, 2)
            both = intersect(s1, s2)
            for x in range(0, max(s1.frobenius, s2.frobenius) + 3):
                assert both.contains(x) == (s1.contains(x) and s2.contains(x))


class TestBrauerStep:
    def test_reduction_example(self):
        assert brauer_step(9, [10, 14, 18]) == (35, 20)

    def test_gcd_one_is_direct(self):
        S = sgp(5, 7, 9)
        assert brauer_step(5, [7, 9]) == (S.frobenius, S.genus)

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            brauer_step(4, [6, 10])

    def test_matches_direct_on_random_tuples(self):
        rng = random.Random(17)
        done = 0
        while done < 200:
            a1 = rng.randint(2, 200)
            rest = rng.sample(range(2, 201), rng.randint(1, 3))
            if reduce(gcd, rest, a1) != 1:
                continue
            done += 1
            S = from_generators([a1, *rest])
            assert brauer_step(a1, rest) == (S.frobenius, S.genus)


class TestValueSemantics:
    def test_hash_and_equality(self):
        assert sgp(3, 4, 5) == from_gaps([1, 2])
        assert len({sgp(3, 4, 5), from_gaps([1, 2]), sgp(2, 3)}) == 2

    def test_str(self):
        assert str(sgp(5, 7, 9)) == "⟨5,7,9⟩"

    def test_inclusion_order(self):
        assert sgp(4, 7, 9, 10) <= sgp(4, 5, 7)
        assert not sgp(4, 5, 7) <= sgp(4, 7, 9, 10)


class TestWidthGuard:
    def test_brauer_overflow_reported(self):
        from numsgps.errors import Overflow

        # b = 2**63 scales the reduction past the 64-bit range.
        with pytest.raises(Overflow):
            brauer_step(3, [2**63, 5 * 2**63])

    def test_context_overflow_reported(self):
        from numsgps.errors import Overflow
        from numsgps.multiples import MultipleContext

        with pytest.raises(Overflow):
            MultipleContext(sgp(2, 3), 2**63)
