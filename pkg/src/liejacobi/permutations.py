"""
Permutations of {1, ..., n} in one-line notation.

A permutation sigma is written as the sequence of its images
``sigma(1), sigma(2), ..., sigma(n)``.  Values are 1-based everywhere in the
public interface (constructors, ``images``, text format); storage is 0-based
internally.  Composition is ``(sigma * pi)(k) == sigma(pi(k))``, i.e. the
right factor acts first.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator

__all__ = [
    "Permutation",
    "SYMMETRIC_GROUP_CAP",
    "compose",
    "parse_permutation",
    "symmetric_group",
]

# Largest n for which symmetric_group(n) will enumerate (8! = 40320).
SYMMETRIC_GROUP_CAP = 8


class Permutation:
    """An element of S_n, immutable and hashable.

    >>> s = Permutation([2, 3, 1])
    >>> s(1), s(2), s(3)
    (2, 3, 1)
    >>> str(s * s.inverse())
    '1 2 3'
    """

    __slots__ = ("_word", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs degree at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        self._word = tuple(v - 1 for v in images)
        self._hash = hash(self._word)

    @classmethod
    def _from_word(cls, word: tuple[int, ...]) -> Permutation:
        # Trusted 0-based constructor; skips validation.
        self = object.__new__(cls)
        self._word = word
        self._hash = hash(word)
        return self

    @classmethod
    def identity(cls, n: int) -> Permutation:
        """The identity of S_n.

        >>> str(Permutation.identity(4))
        '1 2 3 4'
        """
        if n < 1:
            raise ValueError("degree must be at least 1")
        return cls._from_word(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self._word)

    @property
    def images(self) -> tuple[int, ...]:
        """One-line notation: the tuple (sigma(1), ..., sigma(n))."""
        return tuple(v + 1 for v in self._word)

    def __call__(self, k: int) -> int:
        """Apply to a point of {1, ..., n}."""
        if not 1 <= k <= len(self._word):
            raise ValueError(f"point {k} outside 1..{len(self._word)}")
        return self._word[k - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition, right factor first: (self * other)(k) = self(other(k)).

        >>> str(Permutation([2, 1, 3]) * Permutation([1, 3, 2]))
        '2 3 1'
        """
        if not isinstance(other, Permutation):
            return NotImplemented
        word = self._word
        if len(word) != len(other._word):
            raise ValueError(
                f"degree mismatch: {len(word)} vs {len(other._word)}"
            )
        return Permutation._from_word(tuple(word[j] for j in other._word))

    def inverse(self) -> Permutation:
        """The inverse permutation.

        >>> str(Permutation([2, 3, 1]).inverse())
        '3 1 2'
        """
        word = self._word
        inv = [0] * len(word)
        for k, v in enumerate(word):
            inv[v] = k
        return Permutation._from_word(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self._word))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._word == other._word

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Permutation) -> bool:
        # Lexicographic order on one-line notation; used for canonical output.
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._word < other._word

    def __le__(self, other: Permutation) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._word <= other._word

    def __str__(self) -> str:
        return " ".join(str(v + 1) for v in self._word)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"


def compose(sigma: Permutation, pi: Permutation) -> Permutation:
    """Functional alias for ``sigma * pi`` (right factor applied first)."""
    return sigma * pi


def parse_permutation(text: str) -> Permutation:
    """Parse space-separated one-line notation, e.g. ``'2 1 4 3'``.

    >>> parse_permutation("2 1 4 3").images
    (2, 1, 4, 3)
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty permutation")
    try:
        images = [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not _is_int(t))
        raise ValueError(f"invalid integer {bad!r}") from None
    return Permutation(images)


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All of S_n in lexicographic order of one-line notation.

    >>> [str(p) for p in symmetric_group(2)]
    ['1 2', '2 1']
    >>> len(symmetric_group(4))
    24
    """
    if not 1 <= n <= SYMMETRIC_GROUP_CAP:
        raise ValueError(
            f"degree must be in 1..{SYMMETRIC_GROUP_CAP}, got {n}"
        )
    return _symmetric_group_cached(n)


_SYM_CACHE: dict[int, tuple[Permutation, ...]] = {}


def _symmetric_group_cached(n: int) -> tuple[Permutation, ...]:
    group = _SYM_CACHE.get(n)
    if group is None:
        group = tuple(
            Permutation._from_word(word)
            for word in itertools.permutations(range(n))
        )
        _SYM_CACHE[n] = group
    return group


def iter_symmetric_group(n: int) -> Iterator[Permutation]:
    """Iterate S_n lazily in lexicographic order (same cap as symmetric_group)."""
    return iter(symmetric_group(n))
