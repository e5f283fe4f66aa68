"""
Exact integer linear algebra: row-style Hermite normal form, saturated left
kernels, and the lattice of all Jacobi elements of Z[S_n].

Everything is dense and arbitrary precision.  The Jacobi lattice is the left
kernel {v : v M = 0} of the matrix of right-multiplication by omega(n) in
the lex-ordered permutation basis; the kernel basis comes out of the
unimodular transform of the HNF, so it is a genuine Z-basis (any integer
kernel vector is an integer combination), not merely a Q-basis.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .free_algebra import bracketing
from .group_ring import GroupRingElement, left_translate
from .permutations import Permutation, symmetric_group
from .shuffles import omega

__all__ = [
    "IntegerMatrix",
    "LatticeBasis",
    "bracketing_matrix",
    "hermite_normal_form",
    "jacobi_lattice_basis",
    "left_kernel_basis",
    "omega_matrix",
    "rank",
]

# HNF of a 720 x 720 dense matrix is already slow in pure Python; the
# acceptance envelope stops at 6.
MAX_MATRIX_DEGREE = 6


class IntegerMatrix:
    """A rectangular matrix of Python ints, immutable."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("ragged rows")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def num_rows(self) -> int:
        return len(self._rows)

    @property
    def num_cols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntegerMatrix({[list(r) for r in self._rows]!r})"


def hermite_normal_form(M: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style HNF: returns (H, U) with U unimodular and U M = H.

    H is in row echelon form with positive pivots, entries above each pivot
    reduced into [0, pivot), and zero rows last.
    """
    m, cols = M.num_rows, M.num_cols
    A = [list(row) for row in M.rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def row_op(i: int, p: int, q: int) -> None:
        # row i -= q * row p, in both A and U
        Ai, Ap = A[i], A[p]
        for j in range(cols):
            Ai[j] -= q * Ap[j]
        Ui, Up = U[i], U[p]
        for j in range(m):
            Ui[j] -= q * Up[j]

    r = 0
    for j in range(cols):
        if r == m:
            break
        # gcd elimination below row r in column j
        while True:
            nonzero = [i for i in range(r, m) if A[i][j] != 0]
            if len(nonzero) <= 1:
                break
            p = min(nonzero, key=lambda i: abs(A[i][j]))
            for i in nonzero:
                if i != p:
                    row_op(i, p, A[i][j] // A[p][j])
        pivot_rows = [i for i in range(r, m) if A[i][j] != 0]
        if not pivot_rows:
            continue
        p = pivot_rows[0]
        A[r], A[p] = A[p], A[r]
        U[r], U[p] = U[p], U[r]
        if A[r][j] < 0:
            A[r] = [-v for v in A[r]]
            U[r] = [-v for v in U[r]]
        for i in range(r):
            q = A[i][j] // A[r][j]
            if q:
                row_op(i, r, q)
        r += 1
    return IntegerMatrix(A), IntegerMatrix(U)


def rank(M: IntegerMatrix) -> int:
    """Number of nonzero rows of the HNF."""
    H, _ = hermite_normal_form(M)
    return sum(1 for row in H.rows if any(row))


def left_kernel_basis(M: IntegerMatrix) -> list[tuple[int, ...]]:
    """A Z-basis of the saturated left kernel lattice {v : v M = 0}.

    The rows of the unimodular transform matching the zero rows of the HNF.
    """
    H, U = hermite_normal_form(M)
    return [U.row(i) for i in range(M.num_rows) if not any(H.row(i))]


def omega_matrix(n: int) -> IntegerMatrix:
    """Matrix of a -> a * omega(n) acting on coefficient row vectors.

    Row sigma holds the coefficients of sigma * omega(n); rows and columns
    are indexed by S_n in lex order.
    """
    if not 1 <= n <= MAX_MATRIX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_MATRIX_DEGREE}, got {n}")
    perms = symmetric_group(n)
    index = {p: i for i, p in enumerate(perms)}
    om = omega(n)
    rows = []
    for sigma in perms:
        row = [0] * len(perms)
        for pi, c in left_translate(sigma, om)._terms.items():
            row[index[pi]] = c
        rows.append(row)
    return IntegerMatrix(rows)


def bracketing_matrix(n: int) -> IntegerMatrix:
    """Matrix of the bracket expansion map in the lex word basis.

    Row sigma holds the coefficients of [x_{sigma(1)}, ..., x_{sigma(n)}].
    Its rank equals the rank of omega_matrix(n); the test suite checks that
    with an independent rank computation.
    """
    if not 1 <= n <= MAX_MATRIX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_MATRIX_DEGREE}, got {n}")
    perms = symmetric_group(n)
    index = {p: i for i, p in enumerate(perms)}
    rows = []
    for sigma in perms:
        row = [0] * len(perms)
        expansion = bracketing(GroupRingElement.from_permutation(sigma))
        for word, c in expansion._terms.items():
            row[index[word]] = c
        rows.append(row)
    return IntegerMatrix(rows)


class LatticeBasis:
    """A Z-basis of the lattice of Jacobi elements of Z[S_n].

    Basis vectors are stored in row-style Hermite normal form over the
    lex-ordered permutation basis, so the basis is canonical and membership
    testing is a triangular reduction.
    """

    def __init__(self, degree: int, rows: Sequence[Sequence[int]]):
        perms = symmetric_group(degree)
        if any(len(row) != len(perms) for row in rows):
            raise ValueError("basis rows must have length n!")
        H, _ = hermite_normal_form(IntegerMatrix(rows))
        self._degree = degree
        self._perms = perms
        self._rows = tuple(row for row in H.rows if any(row))
        self._pivots = tuple(
            next(j for j, v in enumerate(row) if v) for row in self._rows
        )
        self._basis = tuple(
            GroupRingElement(
                degree,
                {perms[j]: v for j, v in enumerate(row) if v},
            )
            for row in self._rows
        )

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def basis(self) -> tuple[GroupRingElement, ...]:
        return self._basis

    @property
    def rank(self) -> int:
        return len(self._rows)

    def coefficient_vector(self, a: GroupRingElement) -> list[int]:
        if a.degree != self._degree:
            raise ValueError(f"degree mismatch: {a.degree} vs {self._degree}")
        index = {p: i for i, p in enumerate(self._perms)}
        vec = [0] * len(self._perms)
        for sigma, c in a._terms.items():
            vec[index[sigma]] = c
        return vec

    def __contains__(self, a: GroupRingElement) -> bool:
        """Exact integer membership: is a an integer combination of the basis?"""
        vec = self.coefficient_vector(a)
        for row, pivot in zip(self._rows, self._pivots):
            q, rem = divmod(vec[pivot], row[pivot])
            if rem:
                return False
            if q:
                for j in range(pivot, len(vec)):
                    vec[j] -= q * row[j]
        return not any(vec)

    def __len__(self) -> int:
        return len(self._basis)

    def __iter__(self):
        return iter(self._basis)

    def __repr__(self) -> str:
        return f"LatticeBasis(degree={self._degree}, rank={self.rank})"


def jacobi_lattice_basis(n: int) -> LatticeBasis:
    """Z-basis of the left kernel of omega_matrix(n): all Jacobi elements."""
    cached = _BASIS_CACHE.get(n)
    if cached is None:
        cached = LatticeBasis(n, left_kernel_basis(omega_matrix(n)))
        _BASIS_CACHE[n] = cached
    return cached


_BASIS_CACHE: dict[int, LatticeBasis] = {}


def format_basis(B: LatticeBasis) -> str:
    """Basis export: element stanzas separated by `---` lines."""
    from .group_ring import format_element

    return "---\n".join(format_element(b) for b in B.basis)
