"""The partition function f_t and its fast paths.

f_t(x_1, ..., x_r) is the largest value of sum_{i<j} x_{P_i} * x_{P_j} over
partitions (P_1, ..., P_{t-1}) of the index set into t-1 nonempty blocks,
where x_P is the sum of the entries indexed by P.  f_2 is identically 0.

Indices in partitions are 0-based positions in the *canonical* (sorted
ascending) form of the multiset.

Two evaluation styles are provided.  The scalar functions return an
:class:`FtResult` carrying a maximizing partition.  The ``*_values``
functions take a 2-D integer array with one multiset per row and return
values only; they exist so that exhaustive sweeps over millions of
multisets finish in seconds.  Both styles share the same cores.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArity, InvalidSize

Partition = tuple[tuple[int, ...], ...]

# float64 block sums and squared totals stay exact below 2**53.
_FLOAT_EXACT_TOTAL = 1 << 26
# Soft cap on the (rows x partitions x blocks) scratch array per chunk.
_CHUNK_ELEMENTS = 1 << 22
# Above this total, f3_fast tracks reachable sums as sets, not bitsets.
_BITSET_TOTAL = 1 << 24


@dataclass(frozen=True)
class FtResult:
    value: int
    witness: Partition | None


def canonical(xs: Iterable[int]) -> tuple[int, ...]:
    """Validate part sizes and return them sorted ascending."""
    values = tuple(xs)
    for x in values:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise InvalidSize(f"part size {x!r} is not an integer")
        if x < 1:
            raise InvalidSize(f"part size {x} is not positive")
    return tuple(sorted(int(x) for x in values))


def pair_sum(block_sums: Sequence[int]) -> int:
    """sum_{i<j} s_i * s_j for the given block sums."""
    total = sum(block_sums)
    return (total * total - sum(s * s for s in block_sums)) // 2


def partition_value(xs: Sequence[int], partition: Partition) -> int:
    """Pairwise block-sum product of ``partition`` applied to ``xs``."""
    return pair_sum([sum(xs[i] for i in block) for block in partition])


def is_partition(partition: Partition, r: int, blocks: int) -> bool:
    """True when ``partition`` splits range(r) into ``blocks`` nonempty disjoint sets."""
    if len(partition) != blocks or any(not b for b in partition):
        return False
    seen = sorted(i for b in partition for i in b)
    return seen == list(range(r))


def _restricted_growth_strings(r: int, blocks: int):
    """Yield restricted growth strings of length r using exactly ``blocks`` labels."""
    word = [0] * r

    def extend(pos: int, used: int):
        if pos == r:
            if used == blocks:
                yield tuple(word)
            return
        # Not enough positions left to open the remaining blocks.
        if blocks - used > r - pos:
            return
        for label in range(min(used + 1, blocks)):
            word[pos] = label
            yield from extend(pos + 1, max(used, label + 1))

    if r == 0:
        if blocks == 0:
            yield ()
        return
    word[0] = 0
    yield from extend(1, 1)


@lru_cache(maxsize=None)
def set_partitions(r: int, blocks: int) -> tuple[Partition, ...]:
    """All partitions of range(r) into ``blocks`` nonempty blocks.

    Each partition lists its blocks by increasing minimum element.  The
    tuple is sorted lexicographically, so the first maximizer found by a
    linear scan is the lexicographically smallest one.
    """
    out = []
    for word in _restricted_growth_strings(r, blocks):
        groups: list[list[int]] = [[] for _ in range(blocks)]
        for i, label in enumerate(word):
            groups[label].append(i)
        out.append(tuple(tuple(g) for g in groups))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _membership(r: int, blocks: int) -> np.ndarray:
    """(r, P * blocks) 0/1 matrix; column p*blocks + b marks block b of partition p."""
    parts = set_partitions(r, blocks)
    mat = np.zeros((r, len(parts) * blocks), dtype=np.float64)
    for p, partition in enumerate(parts):
        for b, block in enumerate(partition):
            mat[list(block), p * blocks + b] = 1.0
    mat.setflags(write=False)
    return mat


def _as_rows(xs) -> np.ndarray:
    arr = np.asarray(xs, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D array with one multiset per row")
    if arr.size and arr.min() < 1:
        raise InvalidSize("part sizes must be positive")
    return arr


def _check_arity(r: int, t: int) -> None:
    if t < 2:
        raise InvalidArity(f"t must be at least 2, got {t}")
    if t >= 3 and r < t - 1:
        raise InvalidArity(f"cannot split {r} parts into {t - 1} nonempty blocks")


def _general_core(arr: np.ndarray, t: int) -> tuple[np.ndarray, np.ndarray]:
    """Exhaustive f_t over rows; returns (values, index of first maximizer)."""
    n_rows, r = arr.shape
    blocks = t - 1
    mat = _membership(r, blocks)
    n_parts = mat.shape[1] // blocks
    values = np.empty(n_rows, dtype=np.int64)
    best = np.empty(n_rows, dtype=np.int64)
    step = max(1, _CHUNK_ELEMENTS // max(1, mat.shape[1]))
    for start in range(0, n_rows, step):
        chunk = arr[start:start + step].astype(np.float64)
        sums = (chunk @ mat).reshape(len(chunk), n_parts, blocks)
        total = chunk.sum(axis=1)
        twice = total[:, None] ** 2 - np.einsum("npb,npb->np", sums, sums)
        idx = np.argmax(twice, axis=1)
        best[start:start + step] = idx
        values[start:start + step] = np.rint(twice[np.arange(len(chunk)), idx] / 2)
    return values, best


def _general_exact(xs: tuple[int, ...], t: int) -> tuple[int, int]:
    """Pure-integer fallback for totals too large for float64."""
    best_value, best_idx = -1, -1
    for idx, partition in enumerate(set_partitions(len(xs), t - 1)):
        value = partition_value(xs, partition)
        if value > best_value:
            best_value, best_idx = value, idx
    return best_value, best_idx


def f_general_values(xs, t: int) -> np.ndarray:
    """Vectorized f_t over the rows of ``xs`` (exhaustive enumeration)."""
    arr = _as_rows(xs)
    _check_arity(arr.shape[1], t)
    if t == 2 or arr.shape[0] == 0:
        return np.zeros(arr.shape[0], dtype=np.int64)
    if arr.sum(axis=1).max() >= _FLOAT_EXACT_TOTAL:
        return np.array(
            [_general_exact(tuple(int(v) for v in row), t)[0] for row in arr],
            dtype=object,
        )
    return _general_core(arr, t)[0]


def f_general(xs: Iterable[int], t: int) -> FtResult:
    """Exact f_t by enumerating every partition into t-1 nonempty blocks.

    The witness is the lexicographically smallest maximizing partition.
    """
    values = canonical(xs)
    _check_arity(len(values), t)
    if t == 2:
        return FtResult(0, None)
    if sum(values) < _FLOAT_EXACT_TOTAL:
        vals, idx = _general_core(np.array([values], dtype=np.int64), t)
        value, best = int(vals[0]), int(idx[0])
    else:
        value, best = _general_exact(values, t)
    return FtResult(value, set_partitions(len(values), t - 1)[best])


def _best_split(reach: int, total: int) -> int:
    """Achievable sum s (bit of ``reach``) maximizing s * (total - s)."""
    half = total // 2
    below = reach & ((1 << (half + 1)) - 1)
    candidates = []
    if below:
        candidates.append(below.bit_length() - 1)
    above = reach >> (half + 1)
    if above:
        candidates.append(half + 1 + ((above & -above).bit_length() - 1))
    return max(candidates, key=lambda s: (s * (total - s), -s))


def _split_bitset(values: tuple[int, ...], total: int) -> tuple[list[int], int]:
    r = len(values)
    # suffix[i]: bitset of sums reachable from values[i : r-1], empty sum included.
    suffix = [0] * r
    suffix[r - 1] = 1
    for i in range(r - 2, -1, -1):
        suffix[i] = suffix[i + 1] | (suffix[i + 1] << values[i])
    target = _best_split(suffix[0] & ~1, total)
    chosen, remaining = [], target
    for i in range(r - 1):
        x = values[i]
        if remaining >= x and (suffix[i + 1] >> (remaining - x)) & 1:
            chosen.append(i)
            remaining -= x
    return chosen, target


def _split_sparse(values: tuple[int, ...], total: int) -> tuple[list[int], int]:
    """Same as :func:`_split_bitset` with explicit sum sets, for huge totals."""
    r = len(values)
    suffix = [frozenset()] * r
    suffix[r - 1] = frozenset([0])
    for i in range(r - 2, -1, -1):
        suffix[i] = suffix[i + 1] | {s + values[i] for s in suffix[i + 1]}
    target = max((s for s in suffix[0] if s), key=lambda s: (s * (total - s), -s))
    chosen, remaining = [], target
    for i in range(r - 1):
        if remaining - values[i] in suffix[i + 1]:
            chosen.append(i)
            remaining -= values[i]
    return chosen, target


def f3_fast(xs: Iterable[int]) -> FtResult:
    """f_3 as a balanced two-way split, solved by subset-sum reachability.

    The last (largest) entry is pinned to the second block, so the first
    block ranges over nonempty subsets of the remaining entries; this
    excludes the empty and the full subset.
    """
    values = canonical(xs)
    r = len(values)
    if r < 2:
        raise InvalidArity(f"f_3 needs at least 2 parts, got {r}")
    total = sum(values)
    if total < _BITSET_TOTAL:
        chosen, target = _split_bitset(values, total)
    else:
        chosen, target = _split_sparse(values, total)
    rest = tuple(i for i in range(r) if i not in chosen)
    witness = tuple(sorted((tuple(chosen), rest)))
    return FtResult(target * (total - target), witness)


def f3_fast_values(xs) -> np.ndarray:
    """Vectorized f_3 via a boolean subset-sum table per row."""
    arr = _as_rows(xs)
    n_rows, r = arr.shape
    if r < 2:
        raise InvalidArity(f"f_3 needs at least 2 parts, got {r}")
    if n_rows == 0:
        return np.zeros(0, dtype=np.int64)
    width = int(arr.sum(axis=1).max()) + 1
    if width > _FLOAT_EXACT_TOTAL:
        return np.array([f3_fast(row).value for row in arr.tolist()], dtype=object)
    out = np.empty(n_rows, dtype=np.int64)
    step = max(1, _CHUNK_ELEMENTS // width)
    sums = np.arange(width, dtype=np.int64)
    for start in range(0, n_rows, step):
        chunk = arr[start:start + step]
        reach = np.zeros((len(chunk), width), dtype=bool)
        reach[:, 0] = True
        for j in range(r - 1):
            col = chunk[:, j]
            for v in np.unique(col):
                rows = np.flatnonzero(col == v)
                reach[rows, v:] |= reach[rows, : width - v]
        reach[:, 0] = False
        total = chunk.sum(axis=1)
        prod = sums[None, :] * (total[:, None] - sums[None, :])
        out[start:start + step] = np.where(reach, prod, -1).max(axis=1)
    return out


def f_closed_equal_r(xs: Iterable[int]) -> int:
    """f_r for r parts: all pairwise products except the two smallest parts'."""
    values = canonical(xs)
    if len(values) < 2:
        raise InvalidArity(f"need at least 2 parts, got {len(values)}")
    return pair_sum(values) - values[0] * values[1]


def f_closed_equal_r_values(xs) -> np.ndarray:
    """Vectorized :func:`f_closed_equal_r`; rows need not be sorted."""
    arr = np.sort(_as_rows(xs), axis=1)
    if arr.shape[1] < 2:
        raise InvalidArity(f"need at least 2 parts, got {arr.shape[1]}")
    total = arr.sum(axis=1)
    return (total * total - (arr * arr).sum(axis=1)) // 2 - arr[:, 0] * arr[:, 1]


def f_t(xs: Iterable[int], t: int) -> int:
    """Value of f_t, using the subset-sum path when t == 3."""
    if t == 3:
        return f3_fast(xs).value
    return f_general(xs, t).value
