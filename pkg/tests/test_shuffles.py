import doctest
import math

import pytest

import liejacobi.shuffles
from liejacobi import (
    Permutation,
    jacobi_index_sets,
    omega,
    riffle_permutation,
    enumerate_shuffles,
    enumerate_shuffles_first_fixed,
)
from liejacobi.shuffles import Shuffle


def perm(*images):
    return Permutation(images)


def test_doctests():
    failures, _ = doctest.testmod(liejacobi.shuffles)
    assert failures == 0


class TestShuffleType:
    def test_valid(self):
        sh = Shuffle((1, 3), (2, 4))
        assert sh.s == 2 and sh.t == 2

    @pytest.mark.parametrize("alpha,beta", [
        ((3, 1), (2,)),        # alpha not increasing
        ((1, 2), (4,)),        # not a partition of 1..3
        ((1, 2), (2,)),        # overlapping images
        ((1,), (3, 2)),        # beta not increasing
    ])
    def test_invalid(self, alpha, beta):
        with pytest.raises(ValueError):
            Shuffle(alpha, beta)


class TestEnumeration:
    def test_one_one(self):
        assert enumerate_shuffles(1, 1) == [Shuffle((1,), (2,)), Shuffle((2,), (1,))]

    def test_two_two_count(self):
        assert len(enumerate_shuffles(2, 2)) == 6

    def test_empty(self):
        assert enumerate_shuffles(0, 0) == [Shuffle((), ())]

    def test_lex_order_on_alpha(self):
        alphas = [sh.alpha for sh in enumerate_shuffles(2, 3)]
        assert alphas == sorted(alphas)

    @pytest.mark.parametrize("s", range(0, 7))
    @pytest.mark.parametrize("t", range(0, 7))
    def test_cardinality(self, s, t):
        assert len(enumerate_shuffles(s, t)) == math.comb(s + t, s)


class TestFirstFixed:
    def test_two_one(self):
        assert enumerate_shuffles_first_fixed(2, 1) == [
            Shuffle((1, 2), (3,)), Shuffle((1, 3), (2,)),
        ]

    def test_three_two_count(self):
        assert len(enumerate_shuffles_first_fixed(3, 2)) == 6

    def test_singleton(self):
        assert enumerate_shuffles_first_fixed(1, 0) == [Shuffle((1,), ())]

    def test_s_zero_rejected(self):
        with pytest.raises(ValueError):
            enumerate_shuffles_first_fixed(0, 2)

    @pytest.mark.parametrize("s", range(1, 7))
    @pytest.mark.parametrize("t", range(1, 7))
    def test_cardinality(self, s, t):
        assert len(enumerate_shuffles_first_fixed(s, t)) == math.comb(s + t - 1, t)

    def test_all_have_alpha_starting_at_one(self):
        for sh in enumerate_shuffles_first_fixed(3, 3):
            assert sh.alpha[0] == 1


class TestRifflePermutation:
    def test_degree_two(self):
        assert riffle_permutation(2, 1, Shuffle((1,), (2,))) == perm(2, 1)

    def test_degree_three_split_one(self):
        assert riffle_permutation(3, 1, Shuffle((1, 2), (3,))) == perm(3, 1, 2)

    def test_degree_three_split_two(self):
        assert riffle_permutation(3, 2, Shuffle((1,), (2, 3))) == perm(3, 2, 1)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            riffle_permutation(3, 1, Shuffle((1,), (2, 3)))
        with pytest.raises(ValueError):
            riffle_permutation(3, 2, Shuffle((2,), (1, 3)))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_distinct_and_stratified(self, n):
        # value 1 lands at position i+1, so strata never collide
        seen = set()
        for i in range(n):
            for sh in enumerate_shuffles_first_fixed(n - i, i):
                p = riffle_permutation(n, i, sh)
                assert p(i + 1) == 1
                assert p not in seen
                seen.add(p)
        assert len(seen) == 2 ** (n - 1)


class TestOmega:
    def test_degree_one(self):
        from liejacobi import GroupRingElement
        assert omega(1) == GroupRingElement.from_permutation(perm(1))

    def test_degree_two(self):
        assert [(p.images, c) for p, c in omega(2).items()] == [
            ((1, 2), 1), ((2, 1), -1),
        ]

    def test_degree_three(self):
        assert dict(omega(3).items()) == {
            perm(1, 2, 3): 1,
            perm(2, 1, 3): -1,
            perm(3, 1, 2): -1,
            perm(3, 2, 1): 1,
        }

    @pytest.mark.parametrize("n", range(1, 8))
    def test_support_and_signs(self, n):
        w = omega(n)
        assert len(w) == 2 ** (n - 1)
        assert all(c in (1, -1) for _, c in w.items())

    @pytest.mark.parametrize("n", range(2, 8))
    def test_augmentation_zero(self, n):
        assert omega(n).augmentation() == 0

    def test_cached_instance(self):
        assert omega(4) is omega(4)


class TestJacobiIndexSets:
    def test_degree_two(self):
        sets = jacobi_index_sets(2)
        assert sets.plus == frozenset({perm(1, 2)})
        assert sets.minus == frozenset({perm(2, 1)})

    def test_degree_three(self):
        # inverting the four omega(3) riffles; note inverse of 3 1 2 is 2 3 1
        sets = jacobi_index_sets(3)
        assert sets.plus == frozenset({perm(1, 2, 3), perm(3, 2, 1)})
        assert sets.minus == frozenset({perm(2, 3, 1), perm(2, 1, 3)})

    def test_degree_four_sizes(self):
        # sum of C(3, i) over even/odd i
        sets = jacobi_index_sets(4)
        assert len(sets.plus) == 4
        assert len(sets.minus) == 4

    @pytest.mark.parametrize("n", range(1, 7))
    def test_disjoint_and_complete(self, n):
        sets = jacobi_index_sets(n)
        assert not (sets.plus & sets.minus)
        assert len(sets.plus) + len(sets.minus) == 2 ** (n - 1)
        even = sum(math.comb(n - 1, i) for i in range(0, n, 2))
        assert len(sets.plus) == even

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_antipode_omega_signs(self, n):
        sets = jacobi_index_sets(n)
        s_omega = omega(n).antipode()
        assert sets.plus == frozenset(
            g for g, c in s_omega.items() if c == 1)
        assert sets.minus == frozenset(
            g for g, c in s_omega.items() if c == -1)
