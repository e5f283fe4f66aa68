from pathlib import Path

import pytest

from liejacobi import Permutation

FIXTURES = Path(__file__).parent / "fixtures"

# The displayed n=4 identities, as subsets of S_4 (sizes 4, 5, 6, 7).
IDENTITY_SUBSETS_N4 = [
    [[1, 2, 3, 4], [3, 4, 1, 2], [2, 1, 4, 3], [4, 3, 2, 1]],
    [[1, 2, 3, 4], [3, 1, 2, 4], [4, 1, 2, 3], [1, 4, 3, 2], [2, 3, 4, 1]],
    [[1, 2, 3, 4], [3, 1, 2, 4], [2, 1, 4, 3], [4, 2, 1, 3], [1, 4, 3, 2],
     [2, 3, 4, 1]],
    [[1, 2, 3, 4], [3, 1, 2, 4], [2, 1, 4, 3], [4, 2, 1, 3], [1, 3, 4, 2],
     [3, 4, 1, 2], [2, 3, 4, 1]],
]

IDENTITY_SUBSET_N2 = [[1, 2], [2, 1]]
IDENTITY_SUBSET_N3 = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]


def as_subset(rows):
    return frozenset(Permutation(r) for r in rows)


@pytest.fixture
def paper_subsets_n4():
    return [as_subset(rows) for rows in IDENTITY_SUBSETS_N4]
