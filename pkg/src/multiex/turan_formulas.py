"""Closed-form extremal numbers for multipartite hosts, with range guards.

Every function returns a :class:`FormulaValue` that records which result
produced the number and whether the instance satisfies that result's
hypotheses (``in_proved_range``).  Values outside a proved range are still
computed; they are conjectured, and callers decide what to do with them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

from . import partition_opt as po
from .errors import InvalidArity, OutOfRange


class FormulaId(str, enum.Enum):
    THM11 = "thm11"    # ex(K_{n_1..n_r}, K_t) = f_t
    THM12 = "thm12"    # kK_r in r-partite hosts
    THM13 = "thm13"    # kK_3 in 4-partite hosts, piecewise
    THM16 = "thm16"    # kK_3 for r >= 4 with n_1 + 4k <= n_2
    CONJ15 = "conj15"  # max over partitions, n_P form
    CONJ16 = "conj16"  # (k-1)(n-n_1) + f_t(n_1-(k-1), n_2, ..., n_r)
    KK2 = "kk2"        # k disjoint edges
    ERDOS = "erdos"    # kK_3 in K_n


@dataclass(frozen=True)
class HostParams:
    ns: tuple[int, ...]
    t: int
    k: int

    @classmethod
    def make(cls, ns: Iterable[int], t: int, k: int) -> "HostParams":
        sizes = po.canonical(ns)
        if not sizes:
            raise InvalidArity("need at least one part")
        if t < 2:
            raise InvalidArity(f"t must be at least 2, got {t}")
        if k < 1:
            raise OutOfRange(f"k must be at least 1, got {k}")
        return cls(sizes, t, k)

    @property
    def r(self) -> int:
        return len(self.ns)

    @property
    def n(self) -> int:
        return sum(self.ns)


@dataclass(frozen=True)
class FormulaValue:
    value: int
    formula_id: FormulaId
    in_proved_range: bool
    range_note: str

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "formula_id": self.formula_id.value,
            "in_proved_range": self.in_proved_range,
            "range_note": self.range_note,
        }


class ConsistencyError(AssertionError):
    """Two forms of the same closed formula disagreed."""


def reduced_sizes(ns: tuple[int, ...], k: int) -> tuple[int, ...]:
    """(n_1 - (k-1), n_2, ..., n_r); requires sorted ``ns`` with n_1 >= k."""
    if ns[0] < k:
        raise OutOfRange(f"n_1 = {ns[0]} < k = {k}; the reduced first part would be empty")
    return (ns[0] - (k - 1),) + ns[1:]


def main_theorem_failures(ns: tuple[int, ...], k: int) -> list[str]:
    """Hypotheses of the kK_3 main theorem that ``ns`` violates (empty if none)."""
    failures = []
    if len(ns) < 4:
        failures.append(f"needs r >= 4 parts, got {len(ns)}")
    if ns[0] < 6 * k - 4:
        failures.append(f"needs n_1 >= 6k-4 = {6 * k - 4}, got n_1 = {ns[0]}")
    if len(ns) >= 2 and min(ns[1:]) < ns[0] + 4 * k:
        failures.append(f"needs min(n_2..n_r) >= n_1+4k = {ns[0] + 4 * k}, got {min(ns[1:])}")
    return failures


def ex_clique(ns: Iterable[int], t: int) -> FormulaValue:
    sizes = po.canonical(ns)
    if t < 2 or len(sizes) < t:
        raise InvalidArity(f"needs r >= t >= 2, got r={len(sizes)}, t={t}")
    return FormulaValue(po.f_t(sizes, t), FormulaId.THM11, True, "holds for all r >= t >= 2")


def ex_kclique_full_r(ns: Iterable[int], k: int) -> FormulaValue:
    sizes = po.canonical(ns)
    r = len(sizes)
    if r < 2:
        raise InvalidArity(f"needs r >= 2, got {r}")
    if not 1 <= k <= sizes[0]:
        raise OutOfRange(f"needs 1 <= k <= n_1 = {sizes[0]}, got k = {k}")
    n1, n2 = sizes[0], sizes[1]
    value = po.pair_sum(sizes) - n1 * n2 + (k - 1) * n2
    other = (k - 1) * (sum(sizes) - n1) + po.f_general(reduced_sizes(sizes, k), r).value
    if value != other:
        raise ConsistencyError(f"kK_r forms disagree for {sizes}, k={k}: {value} != {other}")
    return FormulaValue(value, FormulaId.THM12, True, "t = r with 1 <= k <= n_1")


def ex_kK3_fourpartite(ns: Iterable[int], k: int) -> FormulaValue:
    sizes = po.canonical(ns)
    if len(sizes) != 4:
        raise InvalidArity(f"needs exactly 4 parts, got {len(sizes)}")
    if k < 1:
        raise OutOfRange(f"k must be at least 1, got {k}")
    n1, n2, n3, n4 = sizes
    if n4 > n2 + n3:
        value = n4 * (n1 + n2 + n3) + (k - 1) * (n2 + n3)
    else:
        value = (n1 + n4) * (n2 + n3) + (k - 1) * n4
    return FormulaValue(
        value, FormulaId.THM13, False,
        "theorem requires n_1,...,n_4 sufficiently large (unquantified)",
    )


def _conjecture_range(sizes: tuple[int, ...], t: int, k: int) -> tuple[bool, str]:
    r = len(sizes)
    if r < t:
        return True, "r < t: the host contains no K_t, every edge is kept"
    if k == 1:
        return True, "k = 1 reduces to the K_t result (r >= t >= 2)"
    if t == r:
        return True, "t = r with k <= n_1 (kK_r result)"
    if t == 2:
        return True, "t = 2 (kK_2 result; k <= n_1 guard is conservative)"
    if t == 3 and not main_theorem_failures(sizes, k):
        return True, "t = 3 inside the main theorem's range"
    return False, "conjectured for n_1 >= k; not proved for these parameters"


def conjecture_value(ns: Iterable[int], t: int, k: int) -> FormulaValue:
    """(k-1)(n - n_1) + f_t(n_1 - (k-1), n_2, ..., n_r)."""
    sizes = po.canonical(ns)
    if t < 2 or len(sizes) < max(1, t - 1):
        raise InvalidArity(f"needs r >= t-1 >= 1, got r={len(sizes)}, t={t}")
    if k < 1:
        raise OutOfRange(f"k must be at least 1, got {k}")
    reduced = reduced_sizes(sizes, k)
    value = (k - 1) * (sum(sizes) - sizes[0]) + po.f_t(reduced, t)
    proved, note = _conjecture_range(sizes, t, k)
    return FormulaValue(value, FormulaId.CONJ16, proved, note)


def conjecture15_value(ns: Iterable[int], t: int, k: int) -> FormulaValue:
    """max over partitions P of (k-1) * max_I (n_I - min_I) + sum_{I<I'} n_I n_I'."""
    sizes = po.canonical(ns)
    if t < 3 or len(sizes) < t - 1:
        raise InvalidArity(f"needs r >= t-1 >= 2, got r={len(sizes)}, t={t}")
    if k < 1:
        raise OutOfRange(f"k must be at least 1, got {k}")
    best = None
    for partition in po.set_partitions(len(sizes), t - 1):
        block_sums = [sum(sizes[i] for i in block) for block in partition]
        spread = max(s - min(sizes[i] for i in block) for s, block in zip(block_sums, partition))
        value = (k - 1) * spread + po.pair_sum(block_sums)
        if best is None or value > best:
            best = value
    return FormulaValue(best, FormulaId.CONJ15, False, "conjectured for sufficiently large parts")


def ex_kK3_main(ns: Iterable[int], k: int) -> FormulaValue:
    sizes = po.canonical(ns)
    if k < 1:
        raise OutOfRange(f"k must be at least 1, got {k}")
    failures = main_theorem_failures(sizes, k)
    if failures:
        raise OutOfRange("; ".join(failures))
    value = conjecture_value(sizes, 3, k).value
    return FormulaValue(value, FormulaId.THM16, True, "r >= 4 and 10k-4 <= n_1+4k <= min(n_2..n_r)")


def ex_kmatching(ns: Iterable[int], k: int) -> FormulaValue:
    sizes = po.canonical(ns)
    if len(sizes) < 2:
        raise InvalidArity(f"needs r >= 2, got {len(sizes)}")
    if not 1 <= k <= sizes[0]:
        raise OutOfRange(f"needs 1 <= k <= n_1 = {sizes[0]} (conservative guard), got k = {k}")
    value = (k - 1) * (sum(sizes) - sizes[0])
    other = conjecture_value(sizes, 2, k).value
    if value != other:
        raise ConsistencyError(f"kK_2 value {value} != conjecture form {other}")
    return FormulaValue(value, FormulaId.KK2, True, "k <= n_1 guard is conservative")


def ex_kK3_complete(n: int, k: int) -> FormulaValue:
    """e(K_{k-1} joined with T_2(n-k+1)) for the complete host K_n."""
    if k < 1 or n < 3 * k:
        raise OutOfRange(f"needs k >= 1 and n >= 3k, got n={n}, k={k}")
    rest = n - k + 1
    value = comb(k - 1, 2) + (k - 1) * rest + rest * rest // 4
    if k == 1:
        return FormulaValue(value, FormulaId.ERDOS, True, "k = 1: triangle-free extremal number")
    proved = 2 * n > 9 * k + 8
    note = "n > 9k/2 + 4" if proved else "known only for n > 9k/2 + 4"
    return FormulaValue(value, FormulaId.ERDOS, proved, note)


def applicable_formulas(ns: Iterable[int], t: int, k: int) -> dict[str, FormulaValue]:
    """Every formula whose preconditions accept (ns, t, k), keyed by id."""
    sizes = po.canonical(ns)
    candidates = {
        FormulaId.THM11: lambda: ex_clique(sizes, t) if k == 1 else None,
        FormulaId.THM12: lambda: ex_kclique_full_r(sizes, k) if t == len(sizes) else None,
        FormulaId.THM13: lambda: ex_kK3_fourpartite(sizes, k) if t == 3 and sizes[0] >= k else None,
        FormulaId.THM16: lambda: ex_kK3_main(sizes, k) if t == 3 else None,
        FormulaId.CONJ15: lambda: conjecture15_value(sizes, t, k),
        FormulaId.CONJ16: lambda: conjecture_value(sizes, t, k),
        FormulaId.KK2: lambda: ex_kmatching(sizes, k) if t == 2 else None,
        FormulaId.ERDOS: lambda: (
            ex_kK3_complete(len(sizes), k) if t == 3 and set(sizes) == {1} else None
        ),
    }
    out = {}
    for fid, compute in candidates.items():
        try:
            value = compute()
        except (InvalidArity, OutOfRange):
            continue
        if value is not None:
            out[fid.value] = value
    return out


# Vectorized forms used by the exhaustive sweeps.  Rows are sorted first.

def conjecture_values(xs, t: int, k: int) -> np.ndarray:
    """:func:`conjecture_value` over rows; rows with n_1 < k are rejected."""
    arr = np.sort(np.asarray(xs, dtype=np.int64), axis=1)
    if arr.size and arr[:, 0].min() < k:
        raise OutOfRange(f"some row has n_1 < k = {k}")
    reduced = arr.copy()
    reduced[:, 0] -= k - 1
    head = (k - 1) * (arr.sum(axis=1) - arr[:, 0])
    if t == 3:
        return head + po.f3_fast_values(reduced)
    return head + po.f_general_values(reduced, t)


def conjecture15_values(xs, t: int, k: int) -> np.ndarray:
    """:func:`conjecture15_value` over rows."""
    arr = np.sort(np.asarray(xs, dtype=np.int64), axis=1)
    n_rows, r = arr.shape
    if t < 3 or r < t - 1:
        raise InvalidArity(f"needs r >= t-1 >= 2, got r={r}, t={t}")
    blocks = t - 1
    parts = po.set_partitions(r, blocks)
    members = np.zeros((len(parts), blocks, r), dtype=np.int64)
    # Sorted rows: a block's smallest entry sits at its smallest index.
    first = np.zeros((len(parts), blocks), dtype=np.int64)
    for p, partition in enumerate(parts):
        for b, block in enumerate(partition):
            members[p, b, list(block)] = 1
            first[p, b] = block[0]
    out = np.empty(n_rows, dtype=np.int64)
    step = max(1, (1 << 21) // (len(parts) * blocks))
    for start in range(0, n_rows, step):
        chunk = arr[start:start + step]
        sums = np.einsum("nr,pbr->npb", chunk, members)
        spread = (sums - chunk[:, first]).max(axis=2)
        total = chunk.sum(axis=1)
        pairs = (total[:, None] ** 2 - (sums * sums).sum(axis=2)) // 2
        out[start:start + step] = ((k - 1) * spread + pairs).max(axis=1)
    return out
