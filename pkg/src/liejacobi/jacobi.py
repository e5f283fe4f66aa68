"""
Four independent deciders for the Jacobi property of group ring elements,
plus the counting criterion for subsets.

An element a of Z[S_n] is *Jacobi* when the identity
``sum_sigma a(sigma) [x_{sigma(1)}, ..., x_{sigma(n)}] = 0`` holds in every
Lie ring.  The deciders check this by, respectively:

  * brute force  -- expand the brackets in the free associative ring,
  * omega kernel -- right-multiply by the riffle sum omega(n),
  * orthogonality -- scalar products against all left translates of
    antipode(omega(n)),
  * coset sums   -- signed coefficient sums over the translated index sets.

All four must always agree; the test suite hammers on that equivalence.
A subset T of S_n is Jacobi when its 0/1 indicator element is, which reduces
to the per-tau counting condition |T n tau I+| == |T n tau I-|.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .free_algebra import bracketing, omega_image
from .group_ring import GroupRingElement
from .permutations import Permutation, symmetric_group
from .shuffles import jacobi_index_sets, omega

__all__ = [
    "FailureWitness",
    "JacobiVerdict",
    "indicator",
    "is_jacobi_bruteforce",
    "is_jacobi_coset_sums",
    "is_jacobi_omega",
    "is_jacobi_orthogonality",
    "is_jacobi_subset",
    "subset_count_table",
]


@dataclass(frozen=True)
class FailureWitness:
    """First (lex order) tau violating a criterion, with the offending value.

    For subset checks ``counts`` carries the unbalanced pair
    (|T n tau I+|, |T n tau I-|) and ``value`` their difference.
    """

    tau: Permutation
    value: int
    counts: tuple[int, int] | None = None


@dataclass(frozen=True)
class JacobiVerdict:
    is_jacobi: bool
    witness: FailureWitness | None = None

    def __bool__(self) -> bool:
        return self.is_jacobi


def is_jacobi_bruteforce(a: GroupRingElement) -> bool:
    """Ground truth: the bracket expansion vanishes in the free ring."""
    return bracketing(a).is_zero()


def is_jacobi_omega(a: GroupRingElement) -> bool:
    """Kernel criterion: a * omega(n) == 0."""
    return omega_image(a).is_zero()


def is_jacobi_orthogonality(a: GroupRingElement) -> JacobiVerdict:
    """Orthogonality criterion: <a, tau * antipode(omega)> = 0 for all tau."""
    terms = a._terms
    for tau, vector in _orthogonality_vectors(a.degree):
        value = sum(c * terms.get(g, 0) for g, c in vector)
        if value:
            return JacobiVerdict(False, FailureWitness(tau, value))
    return JacobiVerdict(True)


def is_jacobi_coset_sums(lam: GroupRingElement) -> JacobiVerdict:
    """Coefficient criterion: for every tau the signed sum of lam over the
    translated index sets vanishes,

        sum_{g in I+} lam(tau g)  -  sum_{g in I-} lam(tau g)  =  0.
    """
    terms = lam._terms
    for tau, plus_products, minus_products in _coset_tables(lam.degree):
        value = sum(terms.get(g, 0) for g in plus_products) \
            - sum(terms.get(g, 0) for g in minus_products)
        if value:
            return JacobiVerdict(False, FailureWitness(tau, value))
    return JacobiVerdict(True)


def is_jacobi_subset(T: Iterable[Permutation], n: int) -> JacobiVerdict:
    """Counting criterion: |T n tau I+| == |T n tau I-| for every tau."""
    members = frozenset(T)
    for sigma in members:
        if sigma.degree != n:
            raise ValueError(
                f"subset member of degree {sigma.degree}, expected {n}"
            )
    for tau, plus_products, minus_products in _coset_tables(n):
        plus_count = sum(1 for g in plus_products if g in members)
        minus_count = sum(1 for g in minus_products if g in members)
        if plus_count != minus_count:
            return JacobiVerdict(
                False,
                FailureWitness(tau, plus_count - minus_count,
                               (plus_count, minus_count)),
            )
    return JacobiVerdict(True)


def subset_count_table(
    T: Iterable[Permutation], n: int
) -> list[tuple[Permutation, int, int]]:
    """Per-tau intersection counts (tau, |T n tau I+|, |T n tau I-|)."""
    members = frozenset(T)
    table = []
    for tau, plus_products, minus_products in _coset_tables(n):
        table.append((
            tau,
            sum(1 for g in plus_products if g in members),
            sum(1 for g in minus_products if g in members),
        ))
    return table


def indicator(T: Iterable[Permutation], n: int) -> GroupRingElement:
    """The 0/1 element of Z[S_n] supported on T."""
    terms: dict[Permutation, int] = {}
    for sigma in T:
        if sigma.degree != n:
            raise ValueError(
                f"subset member of degree {sigma.degree}, expected {n}"
            )
        terms[sigma] = 1
    return GroupRingElement._make(n, terms)


# Fixed per-degree tables for the per-tau loops.  tau runs in lex order so
# reported witnesses are deterministic.

_ORTHO_CACHE: dict[int, tuple] = {}


def _orthogonality_vectors(n: int):
    cached = _ORTHO_CACHE.get(n)
    if cached is None:
        from .group_ring import left_translate

        s_omega = omega(n).antipode()
        cached = tuple(
            (tau, tuple(left_translate(tau, s_omega)._terms.items()))
            for tau in symmetric_group(n)
        )
        _ORTHO_CACHE[n] = cached
    return cached


_COSET_CACHE: dict[int, tuple] = {}


def _coset_tables(n: int):
    cached = _COSET_CACHE.get(n)
    if cached is None:
        index_sets = jacobi_index_sets(n)
        plus = sorted(index_sets.plus)
        minus = sorted(index_sets.minus)
        cached = tuple(
            (tau,
             tuple(tau * g for g in plus),
             tuple(tau * g for g in minus))
            for tau in symmetric_group(n)
        )
        _COSET_CACHE[n] = cached
    return cached
