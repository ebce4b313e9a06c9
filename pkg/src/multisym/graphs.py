"""Labeled multigraphs on vertices ``1..n`` and their stable and j-maximal partitions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .partitions import Partition, SetPartition, enumerate_set_partitions

__all__ = [
    "Graph",
    "StablePartitionReport",
    "complete_multipartite",
    "complement",
    "graph_join",
    "stable_partitions",
    "jmaximal_partitions",
    "parse_graph",
    "simple_graph_classes",
]


@dataclass(frozen=True)
class Graph:
    """A multigraph; loops are ``(v, v)`` and parallel edges repeat a pair.

    Edges are stored as a sorted tuple of ``(u, v)`` with ``u <= v``, so
    equality is equality of labeled canonical forms.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        canon = []
        for e in self.edges:
            u, v = (int(x) for x in e)
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {e} has an endpoint outside 1..{self.n}")
            canon.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((v, v + 1) for v in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a simple cycle needs at least 3 vertices")
        return cls(n, tuple((v, v + 1) for v in range(1, n)) + ((1, n),))

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_simple(self) -> bool:
        return not self.has_loop() and len(set(self.edges)) == len(self.edges)

    def simplified(self) -> "Graph":
        """Drop duplicate edges (loops are kept)."""
        return Graph(self.n, tuple(sorted(set(self.edges))))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj) -> "Graph":
        try:
            return cls(int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from None


@dataclass(frozen=True)
class StablePartitionReport:
    partition: SetPartition
    internal_edges: int
    shape: Partition = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "shape", self.partition.shape)


def complete_multipartite(lam: Iterable[int]) -> Graph:
    """Stable sets of sizes ``lam`` (consecutive labels) with all cross edges."""
    lam = Partition(lam)
    part_of = []
    for i, size in enumerate(lam):
        part_of.extend([i] * size)
    n = len(part_of)
    edges = tuple(
        (u, v) for u, v in combinations(range(1, n + 1), 2) if part_of[u - 1] != part_of[v - 1]
    )
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    if not g.is_simple():
        raise ValueError("complement is only defined for simple graphs")
    present = g.edge_set
    return Graph(g.n, tuple(e for e in combinations(range(1, g.n + 1), 2) if e not in present))


def graph_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; ``h`` is relabeled by ``+g.n``."""
    shift = g.n
    edges = list(g.edges)
    edges += [(u + shift, v + shift) for u, v in h.edges]
    edges += [(u, v + shift) for u in range(1, g.n + 1) for v in range(1, h.n + 1)]
    return Graph(g.n + h.n, tuple(edges))


def _internal_edges(g: Graph, labels: Sequence[int]) -> int:
    return sum(1 for u, v in g.edges if labels[u - 1] == labels[v - 1])


def _reports(g: Graph) -> Iterator[tuple[SetPartition, list[int], int]]:
    for p in enumerate_set_partitions(g.n):
        labels = p.labels()
        yield p, labels, _internal_edges(g, labels)


def stable_partitions(g: Graph, shape: Iterable[int] | None = None) -> list[StablePartitionReport]:
    """Set partitions of ``V(g)`` into stable sets, optionally of one shape."""
    want = Partition(shape) if shape is not None else None
    out = []
    for p, _, e in _reports(g):
        if e == 0 and (want is None or p.shape == want):
            out.append(StablePartitionReport(p, 0))
    return out


def _blocks_pairwise_adjacent(g: Graph, labels: Sequence[int], nblocks: int) -> bool:
    linked = {
        (min(labels[u - 1], labels[v - 1]), max(labels[u - 1], labels[v - 1]))
        for u, v in g.edges
        if labels[u - 1] != labels[v - 1]
    }
    return len(linked) == nblocks * (nblocks - 1) // 2


def jmaximal_partitions(g: Graph, j: int) -> list[StablePartitionReport]:
    """Partitions that are i-maximal for some ``0 <= i <= j``.

    That is: at most ``j`` edges inside blocks (counted with multiplicity)
    and at least one edge between every pair of blocks.
    """
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    return [
        StablePartitionReport(p, e)
        for p, labels, e in _reports(g)
        if e <= j and _blocks_pairwise_adjacent(g, labels, len(p))
    ]


# -- textual graph specs -------------------------------------------------------

_NAMED = {
    "path": Graph.path,
    "cycle": Graph.cycle,
    "complete": Graph.complete,
    "empty": Graph.empty,
}


def parse_graph(spec: str) -> Graph:
    """Parse ``path:4``, ``cycle:5``, ``complete:3``, ``multipartite:2,2,1``,
    ``empty:4``, inline JSON, or ``@file.json``."""
    spec = spec.strip()
    if spec.startswith("@"):
        try:
            return Graph.from_json(json.loads(Path(spec[1:]).read_text()))
        except OSError as exc:
            raise ValueError(f"cannot read graph file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ValueError(f"graph file is not JSON: {exc}") from None
    if spec.startswith("{"):
        try:
            return Graph.from_json(json.loads(spec))
        except json.JSONDecodeError as exc:
            raise ValueError(f"graph spec is not JSON: {exc}") from None
    name, _, arg = spec.partition(":")
    name = name.lower()
    if name == "multipartite":
        try:
            parts = [int(t) for t in arg.split(",") if t.strip()]
        except ValueError:
            raise ValueError(f"graph spec {spec!r} needs comma-separated part sizes") from None
        return complete_multipartite(Partition.from_parts(parts))
    if name in _NAMED:
        try:
            n = int(arg)
        except ValueError:
            raise ValueError(f"graph spec {spec!r} needs an integer size") from None
        return _NAMED[name](n)
    raise ValueError(f"unknown graph spec {spec!r}")


def simple_graph_classes(n: int) -> list[Graph]:
    """One labeled representative per isomorphism class of simple graphs on ``n`` vertices.

    Classes are found by marking whole orbits of edge bitmasks under the
    vertex permutations, so cost is ``2^(n choose 2)`` plus ``n!`` per class.
    Intended for ``n <= 6``.
    """
    pairs = list(combinations(range(n), 2))
    pos = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([pos[tuple(sorted((perm[a], perm[b])))] for a, b in pairs])
    seen = bytearray(1 << len(pairs))
    reps = []
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        bits = [i for i in range(len(pairs)) if mask >> i & 1]
        for pm in perm_maps:
            seen[sum(1 << pm[i] for i in bits)] = 1
        reps.append(Graph(n, tuple((a + 1, b + 1) for i, (a, b) in enumerate(pairs) if mask >> i & 1)))
    return reps
