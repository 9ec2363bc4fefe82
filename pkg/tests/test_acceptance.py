"""Acceptance criteria, one test each, with their time limits.

Each test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line (visible with
``pytest -s``) before asserting.
"""

import contextlib
import itertools
import json
import time

from multiex import sweeps
from multiex.brute_oracle import brute_force_ex
from multiex.cli import run
from multiex.extremal_construct import build_lower_bound_graph
from multiex.graph_core import find_disjoint_cliques
from multiex.partition_opt import f_t
from multiex.turan_formulas import conjecture_value, ex_kK3_complete


@contextlib.contextmanager
def criterion(number, title, limit=None):
    """Time the block, print one PASS/FAIL line, then enforce the limit."""
    start = time.perf_counter()
    failure = None
    try:
        yield
    except AssertionError as exc:
        failure = exc
    elapsed = time.perf_counter() - start
    if failure is None and limit is not None and elapsed > limit:
        failure = AssertionError(f"took {elapsed:.1f}s, limit {limit}s")
    status = "PASS" if failure is None else "FAIL"
    print(f"\nACCEPTANCE {number} {status} {title} ({elapsed:.2f}s)")
    if failure is not None:
        raise failure


def test_1_f3_and_closed_form_cross_validation():
    with criterion(1, "f_t cross-validation", limit=60):
        fast = sweeps.f3_cross_check(r_max=9, size_max=20)
        closed = sweeps.closed_form_cross_check(r_max=7, size_max=12)
        assert fast.violations == 0, fast.examples
        assert closed.violations == 0, closed.examples
        # every multiset: sum over r of C(20+r-1, r) for r=2..9, and C(12+r-1, r) for r=2..7
        assert fast.checked == 10_014_984
        assert closed.checked == 50_375


def test_2_clique_free_oracle_equivalence():
    with criterion(2, "k=1 oracle equals f_t", limit=300):
        checked = 0
        for r in (2, 3, 4):
            for ns in itertools.combinations_with_replacement(range(1, 4), r):
                for t in range(2, r + 1):
                    assert brute_force_ex(ns, t, 1).value == f_t(ns, t), (ns, t)
                    checked += 1
        assert checked == 6 + 2 * 10 + 3 * 15


def test_3_full_partite_oracle_values():
    with criterion(3, "octahedron and K_{1,2,2}"):
        for ns, k, expected in [((2, 2, 2), 2, 10), ((1, 2, 2), 1, 6)]:
            start = time.perf_counter()
            assert brute_force_ex(ns, 3, k).value == expected
            assert time.perf_counter() - start < 10
        assert f_t((1, 2, 2), 3) == 6


def test_4_matching_oracle_values():
    with criterion(4, "kK_2 values", limit=10):
        assert brute_force_ex((2, 2), 2, 2).value == 2
        assert brute_force_ex((2, 3, 3), 2, 2).value == (2 - 1) * (8 - 2) == 6


def test_5_reduced_form_equivalence():
    with criterion(5, "max-over-partitions form equals reduced form"):
        summary = sweeps.reduced_form_equivalence(r_max=6, size_max=15, k_max=4)
        assert summary.checked > 0
        assert summary.violations == 0, summary.examples


def test_6_inequality_sweeps():
    with criterion(6, "unit-shift and double-decrement bounds"):
        shift = sweeps.unit_shift_bound(r_max=6, size_max=15)
        double = sweeps.double_decrement_bound(r_max=6, size_max=15)
        assert shift.checked > 0 and double.checked > 0
        assert shift.violations == 0, shift.examples
        assert double.violations == 0, double.examples


def test_7_smallest_main_instance_construction():
    with criterion(7, "(8,16,16,16), k=2 construction", limit=30):
        g, plan = build_lower_bound_graph((8, 16, 16, 16), 3, 2)
        assert g.edge_count == 784 == 48 + f_t((7, 16, 16, 16), 3) == 24 * 32 + 16
        assert plan.v0_size == 1
        assert g.is_spanning_subgraph()
        assert find_disjoint_cliques(g, 3, 2) is None


def test_8_construction_sweep():
    with criterion(8, "construction certification sweep"):
        summary = sweeps.construction_sweep(r_max=5, size_max=8, total_max=24)
        assert summary.checked > 0
        assert summary.violations == 0, summary.examples


def test_9_mantel():
    with criterion(9, "K_5 triangle-free maximum", limit=10):
        assert ex_kK3_complete(5, 1).value == 6 == brute_force_ex((1,) * 5, 3, 1).value


def test_10_conjecture_evidence_sweep(capsys):
    with criterion(10, "r=4 oracle sweep"):
        code = run(["sweep", "--r", "4", "--t", "3", "--k-max", "2", "--size-max", "2", "--oracle"])
        out = capsys.readouterr().out
        lines = [json.loads(line) for line in out.splitlines()]
        assert code in (0, 1)
        tuples = [tuple(ns) for ns in itertools.combinations_with_replacement((1, 2), 4)]
        assert [(tuple(d["ns"]), d["k"]) for d in lines] == [(ns, k) for ns in tuples for k in (1, 2)]
        for d in lines:
            assert d["oracle"] is not None
            if d["verdict"] == "MISMATCH":
                assert d["potential_counterexample"] or d["proved_mismatch"]
                assert d["notes"]
        octa = next(d for d in lines if d["ns"] == [2, 2, 2, 2] and d["k"] == 2)
        assert octa["formulas"]["conj16"]["value"] == conjecture_value((2, 2, 2, 2), 3, 2).value == 18
        assert octa["verdict"] in ("ORACLE_MATCHES_FORMULA", "MISMATCH")
    with capsys.disabled():
        for d in lines:
            print(f"  ns={d['ns']} k={d['k']} oracle={d['oracle']['value']} verdict={d['verdict']}"
                  f"{' (potential counterexample)' if d['potential_counterexample'] else ''}")
