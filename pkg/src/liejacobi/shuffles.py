"""
(s,t)-shuffles, riffle permutations, and the alternating riffle sum omega(n).

An (s,t)-shuffle is a pair of strictly increasing maps
``alpha: {1..s} -> {1..s+t}`` and ``beta: {1..t} -> {1..s+t}`` with disjoint
images covering {1..s+t}.  The subfamily with ``alpha(1) == 1`` indexes, for
each split ``i``, the riffle permutations

    [beta(i), ..., beta(1), alpha(1), ..., alpha(n-i)]

whose alternating sum over i = 0..n-1 is ``omega(n)``, the group ring image
of the fully left-normed bracket [x_1, ..., x_n].  The inverses of the same
riffles, split by parity of i, give the index sets characterizing Jacobi
subsets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .group_ring import GroupRingElement
from .permutations import Permutation

__all__ = [
    "JacobiIndexSets",
    "Shuffle",
    "jacobi_index_sets",
    "omega",
    "riffle_permutation",
    "enumerate_shuffles",
    "enumerate_shuffles_first_fixed",
]


@dataclass(frozen=True)
class Shuffle:
    """A pair of increasing sequences partitioning {1, ..., s+t}.

    ``alpha`` has length s, ``beta`` length t; both are stored ascending.

    >>> Shuffle((1, 3), (2,))
    Shuffle(alpha=(1, 3), beta=(2,))
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        n = len(self.alpha) + len(self.beta)
        if any(a >= b for a, b in zip(self.alpha, self.alpha[1:])):
            raise ValueError(f"alpha not strictly increasing: {self.alpha}")
        if any(a >= b for a, b in zip(self.beta, self.beta[1:])):
            raise ValueError(f"beta not strictly increasing: {self.beta}")
        if sorted(self.alpha + self.beta) != list(range(1, n + 1)):
            raise ValueError(
                f"alpha and beta must partition 1..{n}: "
                f"{self.alpha} / {self.beta}"
            )

    @property
    def s(self) -> int:
        return len(self.alpha)

    @property
    def t(self) -> int:
        return len(self.beta)

    def __repr__(self) -> str:
        return f"Shuffle(alpha={self.alpha}, beta={self.beta})"


def enumerate_shuffles(s: int, t: int) -> list[Shuffle]:
    """All (s,t)-shuffles, in lexicographic order of alpha.

    >>> enumerate_shuffles(1, 1)
    [Shuffle(alpha=(1,), beta=(2,)), Shuffle(alpha=(2,), beta=(1,))]
    >>> len(enumerate_shuffles(2, 2))
    6
    """
    if s < 0 or t < 0:
        raise ValueError("shuffle sizes must be nonnegative")
    universe = range(1, s + t + 1)
    result = []
    for alpha in itertools.combinations(universe, s):
        chosen = set(alpha)
        beta = tuple(v for v in universe if v not in chosen)
        result.append(Shuffle(alpha, beta))
    return result


def enumerate_shuffles_first_fixed(s: int, t: int) -> list[Shuffle]:
    """The (s,t)-shuffles with alpha(1) == 1, lex order of alpha.

    >>> enumerate_shuffles_first_fixed(2, 1)
    [Shuffle(alpha=(1, 2), beta=(3,)), Shuffle(alpha=(1, 3), beta=(2,))]
    >>> len(enumerate_shuffles_first_fixed(3, 2))
    6
    """
    if s < 1:
        raise ValueError("alpha(1) = 1 needs s >= 1")
    if t < 0:
        raise ValueError("shuffle sizes must be nonnegative")
    rest = range(2, s + t + 1)
    result = []
    for tail in itertools.combinations(rest, s - 1):
        alpha = (1,) + tail
        chosen = set(alpha)
        beta = tuple(v for v in rest if v not in chosen)
        result.append(Shuffle(alpha, beta))
    return result


def riffle_permutation(n: int, i: int, sh: Shuffle) -> Permutation:
    """The permutation [beta(i), ..., beta(1), alpha(1), ..., alpha(n-i)].

    ``sh`` must lie in the alpha(1)=1 family of (n-i, i)-shuffles: beta is
    applied in reverse, then alpha in order.

    >>> str(riffle_permutation(3, 2, Shuffle((1,), (2, 3))))
    '3 2 1'
    """
    if not 0 <= i <= n - 1:
        raise ValueError(f"split must satisfy 0 <= i <= n-1, got i={i}, n={n}")
    if sh.s != n - i or sh.t != i:
        raise ValueError(
            f"shape mismatch: need an ({n - i},{i})-shuffle, "
            f"got ({sh.s},{sh.t})"
        )
    if sh.alpha[0] != 1:
        raise ValueError(f"shuffle must have alpha(1) = 1, got {sh.alpha}")
    return Permutation(tuple(reversed(sh.beta)) + sh.alpha)


def omega(n: int) -> GroupRingElement:
    """The alternating sum of riffle permutations over all splits.

    Equals the group ring image of the left-normed bracket [x_1, ..., x_n]
    (cross-validated against the commutator expansion in free_algebra).  Has
    2^(n-1) terms, all coefficients +1 or -1.

    >>> [(str(p), c) for p, c in omega(2).items()]
    [('1 2', 1), ('2 1', -1)]
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    cached = _OMEGA_CACHE.get(n)
    if cached is None:
        terms: dict[Permutation, int] = {}
        sign = 1
        for i in range(n):
            for sh in enumerate_shuffles_first_fixed(n - i, i):
                terms[riffle_permutation(n, i, sh)] = sign
            sign = -sign
        cached = GroupRingElement._make(n, terms)
        _OMEGA_CACHE[n] = cached
    return cached


_OMEGA_CACHE: dict[int, GroupRingElement] = {}


@dataclass(frozen=True)
class JacobiIndexSets:
    """Inverses of the riffle permutations, split by parity of the split i.

    ``plus`` collects the even-i strata, ``minus`` the odd-i ones; together
    they have 2^(n-1) elements and are disjoint.
    """

    degree: int
    plus: frozenset[Permutation]
    minus: frozenset[Permutation]


def jacobi_index_sets(n: int) -> JacobiIndexSets:
    """The index sets used by the counting criteria for Jacobi subsets.

    >>> sorted(str(p) for p in jacobi_index_sets(2).plus)
    ['1 2']
    >>> sorted(str(p) for p in jacobi_index_sets(2).minus)
    ['2 1']
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    cached = _INDEX_CACHE.get(n)
    if cached is None:
        plus, minus = set(), set()
        for i in range(n):
            bucket = plus if i % 2 == 0 else minus
            for sh in enumerate_shuffles_first_fixed(n - i, i):
                bucket.add(riffle_permutation(n, i, sh).inverse())
        cached = JacobiIndexSets(n, frozenset(plus), frozenset(minus))
        _INDEX_CACHE[n] = cached
    return cached


_INDEX_CACHE: dict[int, JacobiIndexSets] = {}
