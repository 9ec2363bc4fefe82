"""Spanning subgraphs of complete multipartite graphs, stored as bitsets.

Vertices are 0..n-1, assigned part by part in the order of ``part_sizes``.
Adjacency is one Python int per vertex with bit ``u`` set for each
neighbour ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from .errors import InvalidSize, NotAnEdge

Edge = tuple[int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class MultipartiteGraph:
    part_sizes: tuple[int, ...]
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if any(s < 1 for s in self.part_sizes):
            raise InvalidSize(f"part sizes must be positive: {self.part_sizes}")
        if len(self.adjacency) != sum(self.part_sizes):
            raise ValueError("adjacency length does not match the vertex count")

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @cached_property
    def part_of(self) -> tuple[int, ...]:
        return tuple(p for p, size in enumerate(self.part_sizes) for _ in range(size))

    @cached_property
    def part_masks(self) -> tuple[int, ...]:
        masks, start = [], 0
        for size in self.part_sizes:
            masks.append(((1 << size) - 1) << start)
            start += size
        return tuple(masks)

    @cached_property
    def twin_masks(self) -> tuple[int, ...]:
        """For each vertex, the mask of vertices sharing its open neighbourhood."""
        groups: dict[int, int] = {}
        for v, nbrs in enumerate(self.adjacency):
            groups[nbrs] = groups.get(nbrs, 0) | (1 << v)
        return tuple(groups[nbrs] for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adjacency[v]))

    def edges(self) -> list[Edge]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            out.extend((u, v) for v in _bits(nbrs >> (u + 1) << (u + 1)))
        return out

    @property
    def edge_count(self) -> int:
        return sum(nbrs.bit_count() for nbrs in self.adjacency) // 2

    def is_spanning_subgraph(self) -> bool:
        """Symmetric, loopless, and no edge inside a part."""
        for v, nbrs in enumerate(self.adjacency):
            if nbrs >> self.n:
                return False
            if nbrs & self.part_masks[self.part_of[v]]:
                return False
            if any(not (self.adjacency[u] >> v) & 1 for u in _bits(nbrs)):
                return False
        return True

    @classmethod
    def from_edges(cls, part_sizes: Iterable[int], edges: Iterable[Edge]) -> "MultipartiteGraph":
        sizes = tuple(int(s) for s in part_sizes)
        n = sum(sizes)
        adj = [0] * n
        graph = cls(sizes, tuple(adj))
        part_of = graph.part_of
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"invalid edge ({u}, {v}) for {n} vertices")
            if part_of[u] == part_of[v]:
                raise ValueError(f"edge ({u}, {v}) lies inside part {part_of[u]}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(sizes, tuple(adj))


@dataclass(frozen=True)
class PackingWitness:
    cliques: tuple[tuple[int, ...], ...]

    def edges(self) -> list[Edge]:
        return [e for clique in self.cliques for e in combinations(clique, 2)]


def complete_multipartite(ns: Iterable[int]) -> MultipartiteGraph:
    """K_{n_1,...,n_r}; part sizes are sorted ascending first."""
    sizes = tuple(ns)
    for s in sizes:
        if isinstance(s, bool) or not isinstance(s, int) or s < 1:
            raise InvalidSize(f"part size {s!r} is not a positive integer")
    sizes = tuple(sorted(sizes))
    n = sum(sizes)
    full = (1 << n) - 1
    adj, start = [], 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        adj.extend([full & ~block] * size)
        start += size
    return MultipartiteGraph(sizes, tuple(adj))


def remove_edges(g: MultipartiteGraph, edges: Iterable[Edge]) -> MultipartiteGraph:
    """Copy of ``g`` without ``edges``; every listed pair must be a current edge."""
    adj = list(g.adjacency)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not (adj[u] >> v) & 1:
            raise NotAnEdge(f"({u}, {v}) is not an edge")
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return MultipartiteGraph(g.part_sizes, tuple(adj))


def _cliques_in(adj, cand: int, need: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if need == 0:
        yield prefix
        return
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        yield from _cliques_in(adj, cand & adj[v], need - 1, prefix + (v,))


def enumerate_cliques(g: MultipartiteGraph, t: int) -> Iterator[tuple[int, ...]]:
    """Yield every t-clique of ``g`` once, as sorted tuples in lexicographic order."""
    if t < 1:
        raise ValueError(f"clique order must be positive, got {t}")
    return _cliques_in(g.adjacency, (1 << g.n) - 1, t, ())


class _PackingSearch:
    """Exact search for k vertex-disjoint t-cliques.

    Branches on the smallest available vertex v: either v lies in one of
    the packed cliques, or v (and, by symmetry, every available twin of v)
    is left out.  Twins are vertices with the same neighbourhood; they are
    interchangeable, so each clique extension only tries the smallest
    available member of a twin class.
    """

    def __init__(self, g: MultipartiteGraph, t: int):
        self.adj = g.adjacency
        self.twins = g.twin_masks
        self.parts = g.part_masks
        self.t = t
        self.failed: set[tuple[int, int]] = set()

    def _feasible(self, avail: int, m: int) -> bool:
        need = self.t * m
        if avail.bit_count() < need:
            return False
        # A clique takes at most one vertex from each part.
        return sum(min((avail & p).bit_count(), m) for p in self.parts) >= need

    def _extensions(self, cand: int, need: int, avail: int, prefix):
        if need == 0:
            yield prefix
            return
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            first_twin = self.twins[u] & avail
            if first_twin & -first_twin != low:
                continue
            yield from self._extensions(cand & self.adj[u], need - 1, avail, prefix + (u,))

    def run(self, avail: int, m: int) -> list[tuple[int, ...]] | None:
        if m == 0:
            return []
        if not self._feasible(avail, m) or (avail, m) in self.failed:
            return None
        low = avail & -avail
        v = low.bit_length() - 1
        for clique in self._extensions(self.adj[v] & avail, self.t - 1, avail, (v,)):
            mask = 0
            for u in clique:
                mask |= 1 << u
            rest = self.run(avail & ~mask, m - 1)
            if rest is not None:
                return [clique] + rest
        found = self.run(avail & ~self.twins[v], m)
        if found is None:
            self.failed.add((avail, m))
        return found


def find_disjoint_cliques(g: MultipartiteGraph, t: int, k: int) -> PackingWitness | None:
    """A witness of k pairwise vertex-disjoint t-cliques in ``g``, or None.

    The search is complete: None means ``g`` contains no copy of kK_t.
    """
    if t < 1 or k < 0:
        raise ValueError(f"need t >= 1 and k >= 0, got t={t}, k={k}")
    if t == 1:
        return PackingWitness(tuple((v,) for v in range(k))) if k <= g.n else None
    found = _PackingSearch(g, t).run((1 << g.n) - 1, k)
    if found is None:
        return None
    return PackingWitness(tuple(sorted(found)))


def validate_packing(g: MultipartiteGraph, witness: PackingWitness, t: int, k: int) -> bool:
    """Check a witness against ``g`` without reusing the search code."""
    if len(witness.cliques) != k:
        return False
    seen: set[int] = set()
    for clique in witness.cliques:
        if len(clique) != t or len(set(clique)) != t:
            return False
        if seen.intersection(clique):
            return False
        seen.update(clique)
        if len({g.part_of[v] for v in clique}) != t:
            return False
        if any(not g.has_edge(u, v) for u, v in combinations(clique, 2)):
            return False
    return True


def max_packing_size(g: MultipartiteGraph, t: int) -> int:
    """Largest m such that ``g`` contains m vertex-disjoint t-cliques."""
    m = 0
    while find_disjoint_cliques(g, t, m + 1) is not None:
        m += 1
    return m


def format_edge_list(g: MultipartiteGraph) -> str:
    lines = ["parts: " + ",".join(str(s) for s in g.part_sizes)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> MultipartiteGraph:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("parts:"):
        raise ValueError("edge list must start with a 'parts: n_1,...,n_r' header")
    try:
        sizes = [int(s) for s in lines[0][len("parts:"):].split(",")]
    except ValueError as exc:
        raise ValueError(f"bad parts header: {lines[0]!r}") from exc
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= v:
            raise ValueError(f"line {lineno}: expected u < v, got {line!r}")
        edges.append((u, v))
    return MultipartiteGraph.from_edges(sizes, edges)


def write_edge_list(g: MultipartiteGraph, path) -> None:
    Path(path).write_text(format_edge_list(g))


def read_edge_list(path) -> MultipartiteGraph:
    return parse_edge_list(Path(path).read_text())
