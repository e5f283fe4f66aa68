import itertools
import random

import pytest

from liejacobi import (
    Permutation,
    enumerate_jacobi_subsets,
    indicator,
    is_jacobi_bruteforce,
    is_jacobi_subset,
    jacobi_lattice_basis,
    left_translate,
    parse_subsets,
    symmetric_group,
    verify_subset,
)
from liejacobi.search import (
    _depth_first,
    format_subset,
    format_subsets,
)

from conftest import IDENTITY_SUBSETS_N4, as_subset


def perm(*images):
    return Permutation(images)


def brute_force_census(n):
    group = symmetric_group(n)
    jacobi = set()
    for r in range(len(group) + 1):
        for combo in itertools.combinations(group, r):
            if is_jacobi_bruteforce(indicator(combo, n)):
                jacobi.add(frozenset(combo))
    return jacobi


class TestEnumerateSmall:
    def test_degree_one(self):
        assert enumerate_jacobi_subsets(1) == [frozenset()]
        assert enumerate_jacobi_subsets(1, require_nonempty=True) == []

    def test_degree_two_nonempty(self):
        out = enumerate_jacobi_subsets(2, require_nonempty=True)
        assert out == [frozenset({perm(1, 2), perm(2, 1)})]

    def test_degree_three_census(self):
        got = set(enumerate_jacobi_subsets(3))
        assert got == brute_force_census(3)

    def test_degree_three_includes_cyclic_identity(self):
        out = enumerate_jacobi_subsets(3, require_nonempty=True, max_size=3)
        cyclic = as_subset([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
        assert cyclic in out

    def test_ordering_by_size_then_lex(self):
        out = enumerate_jacobi_subsets(3, require_nonempty=True)
        keys = [(len(T), sorted(p.images for p in T)) for T in out]
        assert keys == sorted(keys)

    def test_max_size_filter(self):
        out = enumerate_jacobi_subsets(3, max_size=2, require_nonempty=True)
        assert all(len(T) <= 2 for T in out)

    def test_require_identity(self):
        out = enumerate_jacobi_subsets(3, require_identity=True)
        e = Permutation.identity(3)
        assert out
        assert all(e in T for T in out)


class TestEnumerateDegreeFour:
    def test_rediscovers_paper_identities(self):
        out = enumerate_jacobi_subsets(4, max_size=7, require_identity=True)
        for rows in IDENTITY_SUBSETS_N4:
            assert as_subset(rows) in out

    def test_sampled_agreement_with_bruteforce(self):
        rng = random.Random(21)
        group = symmetric_group(4)
        for _ in range(500):
            T = frozenset(p for p in group if rng.random() < 0.35)
            assert is_jacobi_subset(T, 4).is_jacobi \
                == is_jacobi_bruteforce(indicator(T, 4))

    def test_small_search_members_in_lattice(self):
        out = enumerate_jacobi_subsets(4, max_size=4, require_nonempty=True)
        B = jacobi_lattice_basis(4)
        assert out
        for T in out:
            assert indicator(T, 4) in B

    def test_translate_closure_spot_check(self):
        out = enumerate_jacobi_subsets(4, max_size=5, require_identity=True)
        rng = random.Random(22)
        group = symmetric_group(4)
        for T in rng.sample(out, min(10, len(out))):
            tau = rng.choice(group)
            translated = frozenset(tau * p for p in T)
            assert is_jacobi_subset(translated, 4).is_jacobi


class TestDepthFirst:
    # the DFS path must agree with the exhaustive sweep wherever both run
    @pytest.mark.parametrize("max_size", [0, 2, 3, 6])
    def test_matches_exhaustive_degree_three(self, max_size):
        got = _depth_first(3, max_size, False, False)
        expected = [
            tuple(i for i, p in enumerate(symmetric_group(3)) if p in T)
            for T in enumerate_jacobi_subsets(3, max_size=max_size)
        ]
        assert sorted(got) == sorted(expected)

    def test_matches_exhaustive_degree_four_capped(self):
        got = _depth_first(4, 4, True, True)
        perms = symmetric_group(4)
        got_sets = {frozenset(perms[i] for i in t) for t in got}
        expected = set(enumerate_jacobi_subsets(
            4, max_size=4, require_nonempty=True, require_identity=True))
        assert got_sets == expected

    def test_degree_five_pairs(self):
        out = enumerate_jacobi_subsets(5, max_size=2, require_nonempty=True)
        # exactly the anticommutativity pairs {sigma, sigma * (1 2)}
        swap = perm(2, 1, 3, 4, 5)
        assert len(out) == 60
        for T in out:
            a, b = sorted(T)
            assert a * swap == b

    def test_degree_five_requires_cap(self):
        with pytest.raises(ValueError):
            enumerate_jacobi_subsets(5)
        with pytest.raises(ValueError):
            enumerate_jacobi_subsets(5, max_size=9)

    def test_degree_six_unsupported(self):
        with pytest.raises(ValueError):
            enumerate_jacobi_subsets(6, max_size=2)


class TestThreads:
    def test_results_identical_across_thread_counts(self):
        one = enumerate_jacobi_subsets(3, threads=1)
        eight = enumerate_jacobi_subsets(3, threads=8)
        assert one == eight

    def test_degree_four_threads(self):
        one = enumerate_jacobi_subsets(4, max_size=4, threads=1)
        four = enumerate_jacobi_subsets(4, max_size=4, threads=4)
        assert one == four


class TestVerifySubset:
    def test_paper_size_six(self, paper_subsets_n4):
        report = verify_subset(paper_subsets_n4[2], 4)
        assert report.verdicts() == (True,) * 5
        assert report.is_jacobi

    def test_size_six_with_deletion(self, paper_subsets_n4):
        T = paper_subsets_n4[2] - {perm(1, 2, 3, 4)}
        report = verify_subset(T, 4)
        assert report.verdicts() == (False,) * 5
        assert report.counting.witness is not None

    def test_empty(self):
        report = verify_subset(frozenset(), 3)
        assert report.verdicts() == (True,) * 5


class TestSubsetText:
    def test_parse_single(self):
        subsets = parse_subsets("1 2\n2 1\n")
        assert subsets == [frozenset({perm(1, 2), perm(2, 1)})]

    def test_parse_multiple_stanzas(self):
        text = "# one\n1 2 3\n---\n2 3 1\n3 1 2\n---\n"
        subsets = parse_subsets(text)
        assert len(subsets) == 2
        assert subsets[0] == frozenset({perm(1, 2, 3)})

    def test_parse_degree_conflict(self):
        with pytest.raises(ValueError, match="line 2"):
            parse_subsets("1 2\n1 2 3\n")

    def test_parse_bad_token(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_subsets("1 q\n")

    def test_format_round_trip(self):
        T = as_subset(IDENTITY_SUBSETS_N4[0])
        assert parse_subsets(format_subset(T)) == [T]

    def test_format_subsets_separator(self):
        a = frozenset({perm(1, 2)})
        b = frozenset({perm(2, 1)})
        assert format_subsets([a, b]) == "1 2\n---\n2 1\n"
