"""
Sparse exact-integer elements of the group ring Z[S_n].

An element is a finite map from permutations to (arbitrary precision) integer
coefficients, kept in canonical form: zero coefficients are never stored, so
structural equality is mathematical equality.  Iteration and printing always
use lexicographic order of one-line notation, which keeps every output of the
package byte-stable.

Text format, one term per line::

    # comments allowed
    1 1 2
    -1 2 1

i.e. ``<coefficient> <sigma(1)> ... <sigma(n)>``.  Lines with equal
permutations are summed on read; canonical writing is lex-ordered with zero
terms dropped.
"""
from __future__ import annotations

import random
from typing import Iterable, Iterator, Mapping

from .permutations import Permutation

__all__ = [
    "GroupRingElement",
    "antipode",
    "augmentation",
    "format_element",
    "left_translate",
    "parse_element",
    "random_element",
    "scalar_product",
]


class _SparseCombination:
    """Shared guts of integer linear combinations keyed by permutations.

    Subclasses represent different algebraic objects (group ring elements,
    multilinear polynomials); they never compare equal to each other.
    """

    __slots__ = ("_degree", "_terms")

    def __init__(
        self,
        degree: int,
        terms: Mapping[Permutation, int] | Iterable[tuple[Permutation, int]] = (),
    ):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Permutation, int] = {}
        for key, coeff in terms:
            if key.degree != degree:
                raise ValueError(
                    f"degree mismatch: element of degree {degree}, "
                    f"term of degree {key.degree}"
                )
            acc[key] = acc.get(key, 0) + coeff
        self._degree = degree
        self._terms = {k: c for k, c in acc.items() if c != 0}

    @classmethod
    def _make(cls, degree: int, terms: dict[Permutation, int]):
        # Trusted constructor: terms already canonical (no zeros, degrees ok).
        self = object.__new__(cls)
        self._degree = degree
        self._terms = terms
        return self

    @classmethod
    def zero(cls, degree: int):
        return cls(degree)

    @property
    def degree(self) -> int:
        return self._degree

    def coefficient(self, key: Permutation) -> int:
        return self._terms.get(key, 0)

    def support(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self._terms))

    def items(self) -> Iterator[tuple[Permutation, int]]:
        """Terms in lexicographic order of the key."""
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if other._degree != self._degree:
            raise ValueError(
                f"degree mismatch: {self._degree} vs {other._degree}"
            )

    def __add__(self, other):
        self._check_compatible(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            total = acc.get(key, 0) + coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
        return type(self)._make(self._degree, acc)

    def __sub__(self, other):
        self._check_compatible(other)
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            total = acc.get(key, 0) - coeff
            if total:
                acc[key] = total
            else:
                acc.pop(key, None)
        return type(self)._make(self._degree, acc)

    def __neg__(self):
        return type(self)._make(
            self._degree, {k: -c for k, c in self._terms.items()}
        )

    def scaled(self, scalar: int):
        """Multiply every coefficient by an integer."""
        if scalar == 0:
            return type(self)._make(self._degree, {})
        return type(self)._make(
            self._degree, {k: scalar * c for k, c in self._terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._degree == other._degree and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._degree,
                     frozenset(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{k.images}: {c}" for k, c in self.items())
        return f"{type(self).__name__}(n={self._degree}, {{{body}}})"


class GroupRingElement(_SparseCombination):
    """An element of Z[S_n] in canonical sparse form.

    Supports ``+``, ``-``, unary ``-``, ring multiplication ``a * b``
    (convolution via permutation composition) and integer scaling
    ``a.scaled(c)``.
    """

    __slots__ = ()

    @classmethod
    def from_permutation(cls, sigma: Permutation, coeff: int = 1) -> GroupRingElement:
        if coeff == 0:
            return cls._make(sigma.degree, {})
        return cls._make(sigma.degree, {sigma: coeff})

    @classmethod
    def one(cls, degree: int) -> GroupRingElement:
        return cls.from_permutation(Permutation.identity(degree))

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_compatible(other)
        acc: dict[Permutation, int] = {}
        for f, a in self._terms.items():
            for h, b in other._terms.items():
                g = f * h
                total = acc.get(g, 0) + a * b
                if total:
                    acc[g] = total
                else:
                    del acc[g]
        return GroupRingElement._make(self._degree, acc)

    def antipode(self) -> GroupRingElement:
        """Coefficient-preserving inversion of every term: g maps to g^-1."""
        return GroupRingElement._make(
            self._degree,
            {sigma.inverse(): c for sigma, c in self._terms.items()},
        )

    def augmentation(self) -> int:
        """Sum of all coefficients."""
        return sum(self._terms.values())


def antipode(a: GroupRingElement) -> GroupRingElement:
    return a.antipode()


def augmentation(a: GroupRingElement) -> int:
    return a.augmentation()


def left_translate(tau: Permutation, a: GroupRingElement) -> GroupRingElement:
    """tau * a: every term sigma becomes tau composed with sigma."""
    if tau.degree != a.degree:
        raise ValueError(f"degree mismatch: {tau.degree} vs {a.degree}")
    return GroupRingElement._make(
        a.degree, {tau * sigma: c for sigma, c in a._terms.items()}
    )


def scalar_product(a: GroupRingElement, b: GroupRingElement) -> int:
    """Coefficient-wise dot product: sum over g of a(g) * b(g)."""
    if not isinstance(a, GroupRingElement) or not isinstance(b, GroupRingElement):
        raise TypeError("scalar_product needs two group ring elements")
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    if len(b._terms) < len(a._terms):
        a, b = b, a
    return sum(c * b._terms.get(g, 0) for g, c in a._terms.items())


def random_element(
    rng: random.Random,
    n: int,
    coeff_bound: int = 3,
    density: float = 0.5,
) -> GroupRingElement:
    """A seeded random element: each sigma enters with probability `density`,
    its coefficient uniform in [-coeff_bound, coeff_bound] (zeros dropped).

    Deterministic for a given rng state; used by the property test suites.
    """
    from .permutations import symmetric_group

    terms: dict[Permutation, int] = {}
    for sigma in symmetric_group(n):
        if rng.random() < density:
            c = rng.randint(-coeff_bound, coeff_bound)
            if c:
                terms[sigma] = c
    return GroupRingElement._make(n, terms)


def parse_element(text: str, degree: int | None = None) -> GroupRingElement:
    """Parse the element text format; degree inferred from token counts.

    Raises ValueError naming the offending line on malformed input.  An
    explicit ``degree`` permits parsing the zero element from term-free text.
    """
    terms: dict[Permutation, int] = {}
    n = degree
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise ValueError(
                f"line {lineno}: need a coefficient and a permutation"
            )
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            bad = next(t for t in tokens if not t.lstrip("+-").isdigit())
            raise ValueError(f"line {lineno}: invalid integer {bad!r}") from None
        coeff, images = values[0], values[1:]
        if n is None:
            n = len(images)
        elif len(images) != n:
            raise ValueError(
                f"line {lineno}: expected degree {n}, got {len(images)} images"
            )
        try:
            sigma = Permutation(images)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        terms[sigma] = terms.get(sigma, 0) + coeff
    if n is None:
        raise ValueError("no terms found and no degree given")
    return GroupRingElement(n, terms)


def format_element(a: GroupRingElement) -> str:
    """Canonical text: lex-ordered terms, one per line, trailing newline."""
    lines = [f"{c} {sigma}" for sigma, c in a.items()]
    return "\n".join(lines) + ("\n" if lines else "")
