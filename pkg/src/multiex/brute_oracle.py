"""Exact extremal numbers on tiny hosts by minimum edge deletion.

ex(K_{n_1,...,n_r}, kK_t) equals the host's edge count minus the fewest
edges whose deletion leaves no k vertex-disjoint t-cliques.  The search
deepens the deletion count d = LB, LB+1, ...; at each node it finds one
kK_t copy and branches on deleting each of its k*C(t,2) edges, since every
kK_t-free subgraph misses at least one of them.

Pruning uses a lower bound: kK_t copies that share no edge must each lose
a distinct edge, so a greedy set of edge-disjoint copies bounds the number
of deletions still needed.  Failed (deleted-set, remaining-depth) pairs are
memoized.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .errors import BudgetExceeded
from .extremal_construct import build_lower_bound_graph
from .graph_core import Edge, MultipartiteGraph, complete_multipartite, find_disjoint_cliques
from .report import ExtremalReport, Verdict
from .turan_formulas import HostParams, applicable_formulas

DEFAULT_MAX_NODES = 10**7
DEFAULT_MAX_SECONDS = 60.0


@dataclass(frozen=True)
class Budget:
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS


@dataclass(frozen=True)
class OracleResult:
    value: int
    deletions: int
    extremal_example: tuple[Edge, ...]
    nodes_explored: int
    timed_out: bool = False

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "deletions": self.deletions,
            "extremal_example": [list(e) for e in self.extremal_example],
            "nodes_explored": self.nodes_explored,
            "timed_out": self.timed_out,
        }


class _OutOfBudget(Exception):
    pass


class _DeletionSearch:
    def __init__(self, host: MultipartiteGraph, t: int, k: int, budget: Budget):
        self.host = host
        self.t = t
        self.k = k
        self.budget = budget
        self.edges = host.edges()
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_seconds
        # deleted-edge mask -> largest remaining depth already refuted
        self.refuted: dict[int, int] = {}

    def graph(self, deleted: int) -> MultipartiteGraph:
        adj = list(self.host.adjacency)
        while deleted:
            low = deleted & -deleted
            u, v = self.edges[low.bit_length() - 1]
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            deleted ^= low
        return MultipartiteGraph(self.host.part_sizes, tuple(adj))

    def witness_mask(self, g: MultipartiteGraph) -> int | None:
        found = find_disjoint_cliques(g, self.t, self.k)
        if found is None:
            return None
        mask = 0
        for e in found.edges():
            mask |= 1 << self.index[e]
        return mask

    def lower_bound(self, deleted: int, first_copy: int) -> int:
        """Number of greedily found edge-disjoint kK_t copies."""
        count, used = 1, deleted | first_copy
        while True:
            mask = self.witness_mask(self.graph(used))
            if mask is None:
                return count
            count += 1
            used |= mask

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget
        if self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def search(self, deleted: int, depth: int) -> int | None:
        """A deletion set extending ``deleted`` by at most ``depth`` edges, or None."""
        self.tick()
        copy = self.witness_mask(self.graph(deleted))
        if copy is None:
            return deleted
        if depth == 0 or self.refuted.get(deleted, -1) >= depth:
            return None
        if self.lower_bound(deleted, copy) > depth:
            self.refuted[deleted] = max(self.refuted.get(deleted, -1), depth)
            return None
        while copy:
            low = copy & -copy
            copy ^= low
            found = self.search(deleted | low, depth - 1)
            if found is not None:
                return found
        self.refuted[deleted] = max(self.refuted.get(deleted, -1), depth)
        return None

    def greedy_deletions(self) -> int:
        """Size of some feasible deletion set: drop one copy edge at a time."""
        deleted = 0
        while True:
            copy = self.witness_mask(self.graph(deleted))
            if copy is None:
                return deleted.bit_count()
            deleted |= copy & -copy


def brute_force_ex(ns: Iterable[int], t: int, k: int, budget: Budget | None = None) -> OracleResult:
    """Exact ex(K_{n_1,...,n_r}, kK_t) by iterative-deepening edge deletion.

    Raises :class:`BudgetExceeded` with bracketing bounds when the node or
    time budget runs out; a value is only returned when it is exact.
    """
    params = HostParams.make(ns, t, k)
    host = complete_multipartite(params.ns)
    search = _DeletionSearch(host, t, k, budget or Budget())
    total = host.edge_count

    root = search.witness_mask(host)
    depth = 0 if root is None else search.lower_bound(0, root)
    while True:
        try:
            found = search.search(0, depth)
        except _OutOfBudget:
            raise BudgetExceeded(
                f"budget exhausted while testing {depth} deletions",
                lower=total - search.greedy_deletions(),
                upper=total - depth,
                nodes_explored=search.nodes,
            ) from None
        if found is not None:
            break
        depth += 1

    deleted = found.bit_count()
    kept = tuple(e for i, e in enumerate(search.edges) if not (found >> i) & 1)
    return OracleResult(total - deleted, deleted, kept, search.nodes)


def _construction(params: HostParams) -> tuple[int | None, bool | None]:
    if params.ns[0] < params.k or params.r < params.t:
        return None, None
    g, _ = build_lower_bound_graph(params.ns, params.t, params.k)
    return g.edge_count, find_disjoint_cliques(g, params.t, params.k) is None


def verify_instance(
    ns: Iterable[int], t: int, k: int, budget: Budget | None = None, *, run_oracle: bool = True
) -> ExtremalReport:
    """Oracle value, every applicable formula and the construction, side by side.

    With ``run_oracle`` the oracle must conclude; :class:`BudgetExceeded`
    propagates otherwise.
    """
    params = HostParams.make(ns, t, k)
    edges, free = _construction(params)
    report = ExtremalReport(
        ns=params.ns,
        t=t,
        k=k,
        formulas=applicable_formulas(params.ns, t, k),
        construction_edges=edges,
        construction_free=free,
    )
    if run_oracle:
        report.oracle = brute_force_ex(params.ns, t, k, budget)
    report.notes.extend(_notes(report, params))
    return report


def _notes(report: ExtremalReport, params: HostParams) -> list[str]:
    notes = []
    if params.ns[0] < params.k:
        notes.append("n_1 < k: outside the conjectured range; no closed form applies")
    if report.verdict is Verdict.MISMATCH and report.potential_counterexample:
        notes.append(
            "potential counterexample to a conjectured value: either the n_1 >= k range "
            "is not tight here or small sizes are degenerate; neither reading is asserted"
        )
    if report.proved_mismatch:
        notes.append("mismatch against a proved value: this indicates a defect")
    return notes

