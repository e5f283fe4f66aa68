"""
The multilinear slice of the free associative ring Z<x_1, ..., x_n>.

A multilinear monomial ``x_{sigma(1)} ... x_{sigma(n)}`` is stored as the
permutation sigma, so a MultilinearPolynomial is a sparse integer combination
of permutations just like a group ring element, but with no group product:
the two types never mix.  ``to_group_ring`` / ``to_polynomial`` re-wrap
between the bases.

``expand_left_normed_bracket`` computes [x_1, ..., x_n] by iterating
[p, x] = p*x - x*p in the free ring.  That expansion is the ground-truth
oracle for this package: it is computed without any shuffle combinatorics,
so agreement with ``shuffles.omega`` validates both routes.
"""
from __future__ import annotations

from typing import Sequence

from .group_ring import GroupRingElement, _SparseCombination
from .permutations import Permutation
from .shuffles import omega

__all__ = [
    "MultilinearPolynomial",
    "bracket_words",
    "bracketing",
    "expand_left_normed_bracket",
    "format_polynomial",
    "omega_image",
    "to_group_ring",
    "to_polynomial",
]


class MultilinearPolynomial(_SparseCombination):
    """Integer combination of degree-n multilinear words.

    Additive only: there is no product on this type.
    """

    __slots__ = ()

    @classmethod
    def from_word(cls, word: Permutation, coeff: int = 1) -> MultilinearPolynomial:
        if coeff == 0:
            return cls._make(word.degree, {})
        return cls._make(word.degree, {word: coeff})


def bracket_words(letters: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Expand the left-normed commutator [x_{l1}, ..., x_{lk}] into words.

    Letters must be pairwise distinct.  Returns word -> coefficient with
    2^(k-1) entries, all +1 or -1.  Works for any distinct letters, so
    partial brackets (k letters out of a larger alphabet) are fine.

    >>> bracket_words([1, 2]) == {(1, 2): 1, (2, 1): -1}
    True
    """
    letters = tuple(letters)
    if not letters:
        raise ValueError("bracket of no letters")
    if len(set(letters)) != len(letters):
        raise ValueError(f"repeated letter in bracket: {letters}")
    expansion: dict[tuple[int, ...], int] = {(letters[0],): 1}
    for x in letters[1:]:
        nxt: dict[tuple[int, ...], int] = {}
        for word, c in expansion.items():
            nxt[word + (x,)] = c
            nxt[(x,) + word] = -c
        expansion = nxt
    return expansion


_BRACKET_CACHE: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}


def _cached_bracket(images: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    cached = _BRACKET_CACHE.get(images)
    if cached is None:
        cached = bracket_words(images)
        _BRACKET_CACHE[images] = cached
    return cached


def expand_left_normed_bracket(
    indices: Sequence[int], n: int
) -> MultilinearPolynomial:
    """The full bracket [x_{i1}, ..., x_{in}] as a multilinear polynomial.

    ``indices`` must be a permutation of 1..n (partial brackets are served by
    ``bracket_words``, which this wraps).

    >>> p = expand_left_normed_bracket([1, 2], 2)
    >>> [(str(w), c) for w, c in p.items()]
    [('1 2', 1), ('2 1', -1)]
    """
    indices = tuple(indices)
    if len(set(indices)) != len(indices):
        raise ValueError(f"repeated index in bracket: {indices}")
    if sorted(indices) != list(range(1, n + 1)):
        raise ValueError(
            f"need a permutation of 1..{n} for a full multilinear bracket, "
            f"got {indices}"
        )
    words = _cached_bracket(indices)
    return MultilinearPolynomial._make(
        n, {Permutation._from_word(tuple(v - 1 for v in w)): c
            for w, c in words.items()}
    )


def to_group_ring(p: MultilinearPolynomial) -> GroupRingElement:
    """Rewrap words as permutations (basis-preserving bijection)."""
    return GroupRingElement._make(p.degree, dict(p._terms))


def to_polynomial(a: GroupRingElement) -> MultilinearPolynomial:
    """Rewrap permutations as words; inverse of to_group_ring."""
    return MultilinearPolynomial._make(a.degree, dict(a._terms))


def bracketing(a: GroupRingElement) -> MultilinearPolynomial:
    """Interpret each term as a left-normed bracket and expand:

        sum_sigma a(sigma) [x_{sigma(1)}, ..., x_{sigma(n)}]

    A group ring element is Jacobi exactly when this vanishes.
    """
    n = a.degree
    acc: dict[tuple[int, ...], int] = {}
    for sigma, c in a._terms.items():
        for word, d in _cached_bracket(sigma.images).items():
            total = acc.get(word, 0) + c * d
            if total:
                acc[word] = total
            else:
                del acc[word]
    return MultilinearPolynomial._make(
        n, {Permutation._from_word(tuple(v - 1 for v in w)): c
            for w, c in acc.items()}
    )


def omega_image(a: GroupRingElement) -> GroupRingElement:
    """Right multiplication by the riffle sum: a * omega(n), omega cached."""
    return a * omega(a.degree)


def format_polynomial(p: MultilinearPolynomial) -> str:
    """Same text format as group ring elements; a word line is its
    permutation's one-line notation."""
    lines = [f"{c} {word}" for word, c in p.items()]
    return "\n".join(lines) + ("\n" if lines else "")
