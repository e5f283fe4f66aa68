"""
liejacobi: Jacobi elements of the group ring of the symmetric group.

Decides whether integer combinations of permutations give identities valid
in every Lie ring, computes the full lattice of such elements, and searches
for Jacobi subsets of S_n.
"""
from .free_algebra import (
    MultilinearPolynomial,
    bracketing,
    expand_left_normed_bracket,
    omega_image,
    to_group_ring,
    to_polynomial,
)
from .group_ring import (
    GroupRingElement,
    antipode,
    augmentation,
    format_element,
    left_translate,
    parse_element,
    scalar_product,
)
from .jacobi import (
    FailureWitness,
    JacobiVerdict,
    indicator,
    is_jacobi_bruteforce,
    is_jacobi_coset_sums,
    is_jacobi_omega,
    is_jacobi_orthogonality,
    is_jacobi_subset,
)
from .lattice import (
    IntegerMatrix,
    LatticeBasis,
    hermite_normal_form,
    jacobi_lattice_basis,
    left_kernel_basis,
    omega_matrix,
)
from .permutations import Permutation, compose, parse_permutation, symmetric_group
from .search import (
    SubsetReport,
    enumerate_jacobi_subsets,
    format_subset,
    parse_subsets,
    verify_subset,
)
from .shuffles import (
    JacobiIndexSets,
    Shuffle,
    enumerate_shuffles,
    enumerate_shuffles_first_fixed,
    jacobi_index_sets,
    omega,
    riffle_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "FailureWitness",
    "GroupRingElement",
    "IntegerMatrix",
    "JacobiIndexSets",
    "JacobiVerdict",
    "LatticeBasis",
    "MultilinearPolynomial",
    "Permutation",
    "Shuffle",
    "SubsetReport",
    "antipode",
    "augmentation",
    "bracketing",
    "compose",
    "enumerate_jacobi_subsets",
    "expand_left_normed_bracket",
    "format_element",
    "format_subset",
    "hermite_normal_form",
    "indicator",
    "is_jacobi_bruteforce",
    "is_jacobi_coset_sums",
    "is_jacobi_omega",
    "is_jacobi_orthogonality",
    "is_jacobi_subset",
    "jacobi_index_sets",
    "jacobi_lattice_basis",
    "left_kernel_basis",
    "left_translate",
    "omega",
    "omega_image",
    "omega_matrix",
    "parse_element",
    "parse_permutation",
    "parse_subsets",
    "riffle_permutation",
    "scalar_product",
    "enumerate_shuffles",
    "enumerate_shuffles_first_fixed",
    "symmetric_group",
    "to_group_ring",
    "to_polynomial",
    "verify_subset",
]
