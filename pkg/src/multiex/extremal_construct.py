"""Lower-bound constructions and their certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import partition_opt as po
from .errors import OutOfRange
from .graph_core import (
    MultipartiteGraph,
    PackingWitness,
    complete_multipartite,
    find_disjoint_cliques,
)
from .turan_formulas import HostParams, reduced_sizes


@dataclass(frozen=True)
class ConstructionPlan:
    params: HostParams
    witness_partition: po.Partition | None
    v0_size: int

    @property
    def reduced_sizes(self) -> tuple[int, ...]:
        return reduced_sizes(self.params.ns, self.params.k)


def build_lower_bound_graph(ns: Iterable[int], t: int, k: int) -> tuple[MultipartiteGraph, ConstructionPlan]:
    """The kK_t-free spanning subgraph of K_{n_1,...,n_r} meeting the conjectured value.

    Part 1 is split into an apex set V_0 of k-1 vertices (its first ids)
    and the remaining n_1-k+1 vertices.  V_0 is joined to everything
    outside part 1.  The other vertices are grouped by the partition
    attaining f_t(n_1-(k-1), n_2, ..., n_r) and every pair of groups is
    completely joined, so deleting V_0 leaves a complete (t-1)-partite
    graph and each K_t must use an apex.
    """
    params = HostParams.make(ns, t, k)
    sizes = params.ns
    if params.r < t:
        raise OutOfRange(f"needs r >= t, got r={params.r}, t={t}")
    reduced = reduced_sizes(sizes, k)
    witness = po.f_general(reduced, t).witness

    n = params.n
    part_start = [0]
    for s in sizes:
        part_start.append(part_start[-1] + s)
    apex_mask = (1 << (k - 1)) - 1
    outside_part1 = ((1 << n) - 1) & ~((1 << sizes[0]) - 1)

    # Vertex set of each group V_{P_l}; V_1 excludes the apexes.
    group_masks = []
    for block in witness or ():
        mask = 0
        for i in block:
            mask |= ((1 << (part_start[i + 1] - part_start[i])) - 1) << part_start[i]
        group_masks.append(mask & ~apex_mask)

    adj = [0] * n
    for v in range(k - 1):
        adj[v] = outside_part1
    for u in range(k - 1, n):
        nbrs = apex_mask if u >= sizes[0] else 0
        for mask in group_masks:
            if not (mask >> u) & 1:
                nbrs |= mask
        adj[u] = nbrs
    graph = MultipartiteGraph(sizes, tuple(adj))
    return graph, ConstructionPlan(params, witness, k - 1)


def build_erdos_graph(n: int, k: int) -> MultipartiteGraph:
    """K_{k-1} joined with the balanced complete bipartite graph on n-k+1 vertices.

    As a multipartite graph this is complete, with k-1 singleton parts and
    two parts of sizes floor and ceil of (n-k+1)/2.
    """
    if k < 1 or n < k + 1:
        raise OutOfRange(f"needs k >= 1 and n >= k+1, got n={n}, k={k}")
    rest = n - k + 1
    return complete_multipartite((1,) * (k - 1) + (rest // 2, rest - rest // 2))


@dataclass
class Certificate:
    t: int
    k: int
    measured_edges: int
    claimed_edges: int | None
    spanning_ok: bool
    witness: PackingWitness | None = field(default=None)

    @property
    def edges_ok(self) -> bool:
        return self.claimed_edges is None or self.measured_edges == self.claimed_edges

    @property
    def free(self) -> bool:
        return self.witness is None

    @property
    def passed(self) -> bool:
        return self.edges_ok and self.free and self.spanning_ok

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "k": self.k,
            "measured_edges": self.measured_edges,
            "claimed_edges": self.claimed_edges,
            "edges_ok": self.edges_ok,
            "spanning_ok": self.spanning_ok,
            "free": self.free,
            "witness": None if self.witness is None else [list(c) for c in self.witness.cliques],
            "passed": self.passed,
        }


def certify(g: MultipartiteGraph, t: int, k: int, claimed_edges: int | None = None) -> Certificate:
    """Measure edges, check the spanning-subgraph property and kK_t-freeness."""
    return Certificate(
        t=t,
        k=k,
        measured_edges=g.edge_count,
        claimed_edges=claimed_edges,
        spanning_ok=g.is_spanning_subgraph(),
        witness=find_disjoint_cliques(g, t, k),
    )
