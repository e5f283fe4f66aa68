"""
Discovery of Jacobi subsets of S_n.

The counting criterion (per tau, |T n tau I+| == |T n tau I-|) is cheap
enough to sweep candidate spaces: subsets are 24-bit masks for n = 4, so the
exhaustive census precomputes, for every tau, the bitmask of tau I+ and
tau I-, and filters the whole 2^(n!) space with vectorized popcounts.  For
n = 5 the space is out of reach; a size-capped depth-first search extends
partial subsets in lex order and cuts branches whose per-tau imbalance can
no longer be repaired by the remaining eligible permutations.

``verify_subset`` cross-checks one subset with all five available criteria
and refuses to return if they ever disagree.

Subset text format: one permutation per line in one-line notation, subsets
separated by lines containing ``---``; ``#`` comments and blank lines are
ignored.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .group_ring import GroupRingElement
from .jacobi import (
    JacobiVerdict,
    _coset_tables,
    indicator,
    is_jacobi_bruteforce,
    is_jacobi_coset_sums,
    is_jacobi_omega,
    is_jacobi_orthogonality,
    is_jacobi_subset,
)
from .permutations import Permutation, symmetric_group

__all__ = [
    "SubsetReport",
    "enumerate_jacobi_subsets",
    "format_subset",
    "format_subsets",
    "parse_subsets",
    "verify_subset",
]

EXHAUSTIVE_MAX_DEGREE = 4
DFS_DEGREE = 5
DFS_MAX_SIZE = 8

_BATCH_BITS = 20  # masks per exhaustive work unit


def enumerate_jacobi_subsets(
    n: int,
    max_size: int | None = None,
    require_nonempty: bool = False,
    require_identity: bool = False,
    threads: int = 1,
) -> list[frozenset[Permutation]]:
    """All Jacobi subsets of S_n passing the filters, sorted by size then lex.

    Exhaustive over the full power set for n <= 4.  For n = 5 a pruned
    depth-first search is used and ``max_size`` must be at most 8.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    if max_size is not None and max_size < 0:
        raise ValueError("max_size must be nonnegative")
    if n <= EXHAUSTIVE_MAX_DEGREE:
        found = _exhaustive(n, max_size, require_nonempty, require_identity,
                            max(1, threads))
    elif n == DFS_DEGREE:
        if max_size is None or max_size > DFS_MAX_SIZE:
            raise ValueError(
                f"degree {DFS_DEGREE} needs max_size <= {DFS_MAX_SIZE}"
            )
        found = _depth_first(n, max_size, require_nonempty, require_identity)
    else:
        raise ValueError(
            f"subset search supports degrees 1..{DFS_DEGREE}, got {n}"
        )
    perms = symmetric_group(n)
    subsets = [frozenset(perms[i] for i in member_indices)
               for member_indices in found]
    subsets.sort(key=lambda T: (len(T), sorted(p.images for p in T)))
    return subsets


def _coset_masks(n: int) -> list[tuple[int, int]]:
    """Per tau (lex order): bitmasks of tau I+ and tau I- over lex S_n."""
    perms = symmetric_group(n)
    index = {p: i for i, p in enumerate(perms)}
    masks = []
    for _, plus_products, minus_products in _coset_tables(n):
        pmask = 0
        for g in plus_products:
            pmask |= 1 << index[g]
        mmask = 0
        for g in minus_products:
            mmask |= 1 << index[g]
        masks.append((pmask, mmask))
    return masks


if hasattr(np, "bitwise_count"):
    _popcount = np.bitwise_count
else:  # numpy < 2.0
    _POP16 = np.array([bin(i).count("1") for i in range(1 << 16)],
                      dtype=np.uint8)

    def _popcount(x):
        return _POP16[x & np.uint32(0xFFFF)] + _POP16[x >> np.uint32(16)]


def _scan_mask_range(
    lo: int,
    hi: int,
    coset_masks: Sequence[tuple[int, int]],
    max_size: int | None,
    require_nonempty: bool,
    require_identity: bool,
) -> list[int]:
    masks = np.arange(lo, hi, dtype=np.uint32)
    if require_nonempty and lo == 0:
        masks = masks[1:]
    if require_identity:
        masks = masks[(masks & np.uint32(1)) != 0]
    if max_size is not None:
        masks = masks[_popcount(masks) <= max_size]
    for pmask, mmask in coset_masks:
        if masks.size == 0:
            break
        balanced = _popcount(masks & np.uint32(pmask)) \
            == _popcount(masks & np.uint32(mmask))
        masks = masks[balanced]
    return [int(v) for v in masks]


def _exhaustive(
    n: int,
    max_size: int | None,
    require_nonempty: bool,
    require_identity: bool,
    threads: int,
) -> list[tuple[int, ...]]:
    m = len(symmetric_group(n))
    coset_masks = _coset_masks(n)
    total = 1 << m
    step = 1 << _BATCH_BITS
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]

    def job(bounds: tuple[int, int]) -> list[int]:
        lo, hi = bounds
        return _scan_mask_range(lo, hi, coset_masks, max_size,
                                require_nonempty, require_identity)

    if threads > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(job, ranges))
    else:
        chunks = [job(r) for r in ranges]
    hits = [mask for chunk in chunks for mask in chunk]
    return [tuple(i for i in range(m) if mask >> i & 1) for mask in hits]


def _membership_tau_lists(n: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """For each sigma index, the tau indices with sigma in tau I+ / tau I-."""
    perms = symmetric_group(n)
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    plus_taus: list[list[int]] = [[] for _ in range(m)]
    minus_taus: list[list[int]] = [[] for _ in range(m)]
    for t, (_, plus_products, minus_products) in enumerate(_coset_tables(n)):
        for g in plus_products:
            plus_taus[index[g]].append(t)
        for g in minus_products:
            minus_taus[index[g]].append(t)
    return ([tuple(v) for v in plus_taus], [tuple(v) for v in minus_taus])


def _depth_first(
    n: int,
    max_size: int,
    require_nonempty: bool,
    require_identity: bool,
) -> list[tuple[int, ...]]:
    m = len(symmetric_group(n))
    plus_taus, minus_taus = _membership_tau_lists(n)

    # suffix counts: how many eligible sigma >= p sit on each tau's side
    rem_plus = [[0] * m for _ in range(m + 1)]
    rem_minus = [[0] * m for _ in range(m + 1)]
    for p in range(m - 1, -1, -1):
        rp, rm = rem_plus[p], rem_minus[p]
        rp[:] = rem_plus[p + 1]
        rm[:] = rem_minus[p + 1]
        for t in plus_taus[p]:
            rp[t] += 1
        for t in minus_taus[p]:
            rm[t] += 1

    results: list[tuple[int, ...]] = []
    members: list[int] = []
    deficits: dict[int, int] = {}

    def bump(taus: tuple[int, ...], delta: int) -> None:
        for t in taus:
            d = deficits.get(t, 0) + delta
            if d:
                deficits[t] = d
            else:
                del deficits[t]

    def visit(last: int) -> None:
        if not deficits:
            if members or not require_nonempty:
                if not require_identity or (members and members[0] == 0):
                    results.append(tuple(members))
        size = len(members)
        if size == max_size:
            return
        remaining = max_size - size
        start = last + 1
        for t, d in deficits.items():
            need = d if d > 0 else -d
            if need > remaining:
                return
            side = rem_minus[start][t] if d > 0 else rem_plus[start][t]
            if need > side:
                return
        for cand in range(start, m):
            if require_identity and not members and cand != 0:
                break
            members.append(cand)
            bump(plus_taus[cand], +1)
            bump(minus_taus[cand], -1)
            visit(cand)
            bump(plus_taus[cand], -1)
            bump(minus_taus[cand], +1)
            members.pop()

    visit(-1)
    return results


@dataclass(frozen=True)
class SubsetReport:
    """Outcome of all five checks on one subset; always unanimous."""

    degree: int
    subset: frozenset[Permutation]
    element: GroupRingElement
    bruteforce: bool
    omega_kernel: bool
    orthogonality: JacobiVerdict
    coset_sums: JacobiVerdict
    counting: JacobiVerdict

    @property
    def is_jacobi(self) -> bool:
        return self.counting.is_jacobi

    def verdicts(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.bruteforce,
            self.omega_kernel,
            self.orthogonality.is_jacobi,
            self.coset_sums.is_jacobi,
            self.counting.is_jacobi,
        )


def verify_subset(T: Iterable[Permutation], n: int) -> SubsetReport:
    """Run every criterion on T and cross-check that they agree.

    Disagreement between criteria would mean a bug in this package, so it
    raises instead of returning a report.
    """
    members = frozenset(T)
    element = indicator(members, n)
    report = SubsetReport(
        degree=n,
        subset=members,
        element=element,
        bruteforce=is_jacobi_bruteforce(element),
        omega_kernel=is_jacobi_omega(element),
        orthogonality=is_jacobi_orthogonality(element),
        coset_sums=is_jacobi_coset_sums(element),
        counting=is_jacobi_subset(members, n),
    )
    verdicts = report.verdicts()
    if len(set(verdicts)) != 1:
        raise RuntimeError(
            "internal error: criteria disagree on "
            f"{sorted(p.images for p in members)}: "
            f"bruteforce={verdicts[0]} omega={verdicts[1]} "
            f"orthogonality={verdicts[2]} coset_sums={verdicts[3]} "
            f"counting={verdicts[4]}"
        )
    return report


def parse_subsets(text: str) -> list[frozenset[Permutation]]:
    """Parse `---`-separated subset stanzas; empty stanzas are dropped."""
    subsets: list[frozenset[Permutation]] = []
    current: set[Permutation] = set()
    degree: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "---":
            if current:
                subsets.append(frozenset(current))
            current = set()
            degree = None
            continue
        tokens = line.split()
        try:
            images = [int(t) for t in tokens]
        except ValueError:
            bad = next(t for t in tokens if not t.lstrip("+-").isdigit())
            raise ValueError(f"line {lineno}: invalid integer {bad!r}") from None
        if degree is None:
            degree = len(images)
        elif len(images) != degree:
            raise ValueError(
                f"line {lineno}: expected degree {degree}, got {len(images)}"
            )
        try:
            current.add(Permutation(images))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if current:
        subsets.append(frozenset(current))
    return subsets


def format_subset(T: Iterable[Permutation]) -> str:
    """One permutation per line, lex order, trailing newline."""
    lines = [str(p) for p in sorted(T)]
    return "\n".join(lines) + ("\n" if lines else "")


def format_subsets(subsets: Sequence[Iterable[Permutation]]) -> str:
    return "---\n".join(format_subset(T) for T in subsets)
