"""Exhaustive sweeps over sorted size tuples.

Each sweep returns a :class:`SweepSummary`; a sweep passes when it has no
violations.  The f_t and inequality sweeps work on numpy row batches.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import partition_opt as po
from . import turan_formulas as tf
from .extremal_construct import build_lower_bound_graph, certify

MAX_EXAMPLES = 20


@dataclass
class SweepSummary:
    which: str
    checked: int = 0
    violations: int = 0
    examples: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def record(self, example: dict) -> None:
        self.violations += 1
        if len(self.examples) < MAX_EXAMPLES:
            self.examples.append(example)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "which": self.which,
            "checked": self.checked,
            "violations": self.violations,
            "examples": self.examples,
            "notes": self.notes,
        }


def sorted_tuples(r: int, size_max: int, size_min: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing r-tuples over [size_min, size_max] in lexicographic order."""
    return itertools.combinations_with_replacement(range(size_min, size_max + 1), r)


def sorted_tuple_rows(r: int, size_max: int, chunk: int = 400_000) -> Iterator[np.ndarray]:
    """:func:`sorted_tuples` as int64 row batches (via the stars-and-bars bijection)."""
    combos = itertools.combinations(range(size_max + r - 1), r)
    offset = np.arange(r, dtype=np.int64)
    while True:
        block = list(itertools.islice(combos, chunk))
        if not block:
            return
        yield np.array(block, dtype=np.int64) - offset + 1


def _rows(r_values, size_max) -> Iterator[np.ndarray]:
    for r in r_values:
        yield from sorted_tuple_rows(r, size_max)


def f3_cross_check(r_max: int = 9, size_max: int = 20) -> SweepSummary:
    """Subset-sum f_3 against exhaustive f_3 on every multiset."""
    summary = SweepSummary("f3_fast==f_general")
    for arr in _rows(range(2, r_max + 1), size_max):
        fast = po.f3_fast_values(arr)
        slow = po.f_general_values(arr, 3)
        summary.checked += len(arr)
        for i in np.flatnonzero(fast != slow):
            summary.record({"sizes": arr[i].tolist(), "fast": int(fast[i]), "general": int(slow[i])})
    return summary


def closed_form_cross_check(r_max: int = 7, size_max: int = 12) -> SweepSummary:
    """f_r closed form against exhaustive f_r on every multiset."""
    summary = SweepSummary("f_closed_equal_r==f_general")
    for r in range(2, r_max + 1):
        for arr in sorted_tuple_rows(r, size_max):
            closed = po.f_closed_equal_r_values(arr)
            slow = po.f_general_values(arr, r)
            summary.checked += len(arr)
            for i in np.flatnonzero(closed != slow):
                summary.record({"sizes": arr[i].tolist(), "closed": int(closed[i]), "general": int(slow[i])})
    return summary


def reduced_form_equivalence(r_max: int = 6, size_max: int = 15, k_max: int = 4) -> SweepSummary:
    """Max-over-partitions form equals the reduced-f_t form, r > t >= 3, k >= 2."""
    summary = SweepSummary("2.1")
    for r in range(4, r_max + 1):
        for arr in sorted_tuple_rows(r, size_max):
            for t in range(3, r):
                for k in range(2, k_max + 1):
                    rows = arr[arr[:, 0] >= k]
                    if not len(rows):
                        continue
                    lhs = tf.conjecture15_values(rows, t, k)
                    rhs = tf.conjecture_values(rows, t, k)
                    summary.checked += len(rows)
                    for i in np.flatnonzero(lhs != rhs):
                        summary.record({
                            "sizes": rows[i].tolist(), "t": t, "k": k,
                            "conj15": int(lhs[i]), "conj16": int(rhs[i]),
                        })
    return summary


def unit_shift_bound(r_max: int = 6, size_max: int = 15) -> SweepSummary:
    """Moving one unit from n_mu to n_1 raises f_3 by at most n_mu - (n_1 + 1)."""
    summary = SweepSummary("2.2")
    for arr in _rows(range(2, r_max + 1), size_max):
        base = po.f_general_values(arr, 3)
        for mu in range(1, arr.shape[1]):
            sel = np.flatnonzero(arr[:, mu] - 1 >= arr[:, 0] + 1)
            if not len(sel):
                continue
            moved = arr[sel].copy()
            moved[:, 0] += 1
            moved[:, mu] -= 1
            lhs = po.f_general_values(moved, 3)
            rhs = base[sel] + arr[sel, mu] - (arr[sel, 0] + 1)
            summary.checked += len(sel)
            for i in np.flatnonzero(lhs > rhs):
                summary.record({
                    "sizes": arr[sel[i]].tolist(), "mu": mu + 1,
                    "lhs": int(lhs[i]), "rhs": int(rhs[i]),
                })
    return summary


def double_decrement_bound(r_max: int = 6, size_max: int = 15) -> SweepSummary:
    """Decrementing two parts lowers f_3 by at least n - max{n_1 + 2, n_i - n_1 + 1}.

    Checked over ordered pairs (i, j).  Pairs that would create a zero part
    are skipped (f_3 is defined on positive sizes).  The note reports
    whether the symmetric variant with min(n_i, n_j) also held.
    """
    summary = SweepSummary("2.3")
    skipped = sharper_failures = 0
    for arr in _rows(range(2, r_max + 1), size_max):
        arr = arr[arr[:, 0] + 2 <= arr[:, 1]]
        if not len(arr):
            continue
        base = po.f_general_values(arr, 3)
        total = arr.sum(axis=1)
        n1 = arr[:, 0]
        for i, j in itertools.permutations(range(arr.shape[1]), 2):
            keep = (arr[:, i] > 1) & (arr[:, j] > 1)
            skipped += int((~keep).sum())
            sel = np.flatnonzero(keep)
            if not len(sel):
                continue
            dec = arr[sel].copy()
            dec[:, i] -= 1
            dec[:, j] -= 1
            lhs = po.f_general_values(dec, 3)
            head = base[sel] - total[sel]
            rhs = head + np.maximum(n1[sel] + 2, arr[sel, i] - n1[sel] + 1)
            sharper = head + np.maximum(
                n1[sel] + 2, np.minimum(arr[sel, i], arr[sel, j]) - n1[sel] + 1
            )
            sharper_failures += int((lhs > sharper).sum())
            summary.checked += len(sel)
            for m in np.flatnonzero(lhs > rhs):
                summary.record({
                    "sizes": arr[sel[m]].tolist(), "i": i + 1, "j": j + 1,
                    "lhs": int(lhs[m]), "rhs": int(rhs[m]),
                })
    summary.notes.append(f"skipped {skipped} (tuple, pair) cases that would create a zero part")
    summary.notes.append(f"symmetric min(n_i, n_j) variant failed on {sharper_failures} cases")
    return summary


PROPOSITIONS = {"2.1": reduced_form_equivalence, "2.2": unit_shift_bound, "2.3": double_decrement_bound}


def construction_sweep(r_max: int = 5, size_max: int = 8, total_max: int = 24) -> SweepSummary:
    """Construction edge count equals the conjectured value and it is kK_t-free."""
    summary = SweepSummary("construction")
    for r in range(2, r_max + 1):
        for ns in sorted_tuples(r, size_max):
            if sum(ns) > total_max:
                continue
            for t in range(2, r + 1):
                for k in range(1, ns[0] + 1):
                    g, _ = build_lower_bound_graph(ns, t, k)
                    cert = certify(g, t, k, tf.conjecture_value(ns, t, k).value)
                    summary.checked += 1
                    if not cert.passed:
                        summary.record({"sizes": list(ns), "t": t, "k": k, **cert.to_dict()})
    return summary
