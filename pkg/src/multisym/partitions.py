"""Integer partitions, set partitions, puzzles and the counting functions built on them.

Integer partitions of ``n`` are always listed in reverse lexicographic order,
``(n)`` first and ``(1, ..., 1)`` last; every matrix in the package is indexed
in this order.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "SetPartition",
    "partitions_of",
    "set_partition_count",
    "enumerate_set_partitions",
    "enumerate_set_partitions_of_shape",
    "refinements",
    "meet",
    "join",
    "refines",
    "puzzles",
    "necklaces",
    "necklace_count",
    "cycle_type_count",
    "composition_count",
]


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    Being a tuple, a partition hashes and compares like one, so it can key
    dictionaries directly.  The empty partition is the unique partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be non-increasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated text form; ``""`` is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def aut(self) -> int:
        """The product of ``n_i!`` over all part sizes ``i``."""
        return prod(factorial(c) for c in Counter(self).values())

    def factorial_product(self) -> int:
        """The product of ``part!`` over all parts."""
        return prod(factorial(p) for p in self)

    def union(self, other: Sequence[int]) -> "Partition":
        """Disjoint union of parts: ``(3,1,1) | (2,1) == (3,2,1,1,1)``."""
        return Partition.from_parts(tuple(self) + tuple(other))

    __or__ = union


def _parts_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _parts_bounded(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_partitions_of(n))


def set_partition_count(n: int, shape: Partition) -> int:
    """Number of set partitions of ``{1..n}`` with block sizes ``shape``."""
    shape = Partition(shape)
    if shape.size != n:
        raise ValueError(f"shape {shape} is not a partition of {n}")
    return factorial(n) // (shape.factorial_product() * shape.aut())


class SetPartition:
    """A set partition of ``{1..n}`` stored in canonical form.

    Blocks are sorted tuples, ordered by their minimal element, so equal
    partitions have equal representations.
    """

    __slots__ = ("ground_size", "blocks", "_hash")

    def __init__(self, ground_size: int, blocks: Iterable[Iterable[int]]):
        blocks = [tuple(sorted(b)) for b in blocks]
        seen: list[int] = []
        for b in blocks:
            if not b:
                raise ValueError("set partition blocks must be nonempty")
            seen.extend(b)
        if sorted(seen) != list(range(1, ground_size + 1)):
            raise ValueError(
                f"blocks {blocks} are not a partition of {{1..{ground_size}}}"
            )
        self.ground_size = ground_size
        self.blocks: tuple[tuple[int, ...], ...] = tuple(sorted(blocks))
        self._hash = hash((ground_size, self.blocks))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Partition from a block label per element (element ``i+1`` gets ``labels[i]``)."""
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(v)
        return cls(len(labels), groups.values())

    @classmethod
    def finest(cls, n: int) -> "SetPartition":
        return cls(n, [(v,) for v in range(1, n + 1)])

    @classmethod
    def coarsest(cls, n: int) -> "SetPartition":
        return cls(n, [range(1, n + 1)] if n else [])

    @classmethod
    def parse(cls, text: str, ground_size: int | None = None) -> "SetPartition":
        """Parse ``"1,3|2,4"``; the ground size defaults to the largest element."""
        text = text.strip()
        blocks = []
        if text:
            for chunk in text.split("|"):
                try:
                    blocks.append([int(tok) for tok in chunk.split(",")])
                except ValueError:
                    raise ValueError(f"malformed set partition {text!r}") from None
        if ground_size is None:
            ground_size = max((max(b) for b in blocks), default=0)
        return cls(ground_size, blocks)

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({self.ground_size}, {str(self)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.ground_size == other.ground_size and self.blocks == other.blocks

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    @property
    def shape(self) -> Partition:
        return Partition.from_parts(len(b) for b in self.blocks)

    def labels(self) -> list[int]:
        """Block index of each element, as a list indexed by ``element - 1``."""
        lab = [0] * self.ground_size
        for i, b in enumerate(self.blocks):
            for v in b:
                lab[v - 1] = i
        return lab

    def meet(self, other: "SetPartition") -> "SetPartition":
        return meet(self, other)

    def join(self, other: "SetPartition") -> "SetPartition":
        return join(self, other)

    def refines(self, other: "SetPartition") -> bool:
        return refines(self, other)

    __and__ = meet
    __or__ = join
    __le__ = refines


def _check_same_ground(a: SetPartition, b: SetPartition) -> None:
    if a.ground_size != b.ground_size:
        raise ValueError(
            f"ground sizes differ: {a.ground_size} and {b.ground_size}"
        )


def meet(a: SetPartition, b: SetPartition) -> SetPartition:
    """Coarsest common refinement: nonempty pairwise block intersections."""
    _check_same_ground(a, b)
    la, lb = a.labels(), b.labels()
    return SetPartition.from_labels([(x, y) for x, y in zip(la, lb)])


def join(a: SetPartition, b: SetPartition) -> SetPartition:
    """Finest common coarsening, via union-find over both block relations."""
    _check_same_ground(a, b)
    parent = list(range(a.ground_size + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in a.blocks + b.blocks:
        root = find(block[0])
        for v in block[1:]:
            r = find(v)
            if r != root:
                parent[r] = root
    return SetPartition.from_labels([find(v) for v in range(1, a.ground_size + 1)])


def refines(a: SetPartition, b: SetPartition) -> bool:
    """True iff every block of ``a`` lies inside a block of ``b``."""
    _check_same_ground(a, b)
    lb = b.labels()
    return all(len({lb[v - 1] for v in block}) == 1 for block in a.blocks)


def _restricted_growth(n: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    labels = [0] * n

    def rec(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield labels
            return
        for lab in range(top + 2):
            labels[i] = lab
            yield from rec(i + 1, max(top, lab))

    # element 1 always opens block 0
    yield from rec(1, 0)


@lru_cache(maxsize=16)
def _set_partitions(n: int) -> tuple[SetPartition, ...]:
    return tuple(SetPartition.from_labels(lab) for lab in _restricted_growth(n))


def enumerate_set_partitions(n: int) -> list[SetPartition]:
    """Every set partition of ``{1..n}`` exactly once."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return list(_set_partitions(n))


def enumerate_set_partitions_of_shape(n: int, shape: Partition) -> list[SetPartition]:
    shape = Partition(shape)
    return [p for p in _set_partitions(n) if p.shape == shape]


def refinements(p: SetPartition) -> Iterator[SetPartition]:
    """All set partitions ``q`` with ``q <= p``, generated blockwise."""

    def rec(i: int, acc: list[tuple[int, ...]]) -> Iterator[SetPartition]:
        if i == len(p.blocks):
            yield SetPartition(p.ground_size, acc)
            return
        block = p.blocks[i]
        for sub in _set_partitions(len(block)):
            pieces = [tuple(block[v - 1] for v in b) for b in sub.blocks]
            yield from rec(i + 1, acc + pieces)

    yield from rec(0, [])


# -- puzzles ---------------------------------------------------------------


def _sub_multisets(avail: tuple[tuple[int, int], ...], target: int, idx: int = 0):
    """Yield (chosen parts, remaining avail) with chosen parts summing to target.

    ``avail`` is a tuple of (part size, count) pairs in decreasing part order.
    """
    if target == 0:
        yield (), avail
        return
    if idx >= len(avail):
        return
    size, count = avail[idx]
    for take in range(min(count, target // size), -1, -1):
        rest = avail[:idx] + ((size, count - take),) + avail[idx + 1:]
        for chosen, remaining in _sub_multisets(rest, target - take * size, idx + 1):
            yield (size,) * take + chosen, remaining


@lru_cache(maxsize=None)
def _puzzles(avail: tuple[tuple[int, int], ...], caps: tuple[int, ...]):
    if not caps:
        return ((),) if all(c == 0 for _, c in avail) else ()
    out = []
    for chosen, remaining in _sub_multisets(avail, caps[0]):
        for tail in _puzzles(remaining, caps[1:]):
            out.append((Partition(chosen),) + tail)
    return tuple(out)


def puzzles(mu: Partition, lam: Partition) -> list[tuple[Partition, ...]]:
    """All puzzles of ``mu`` into ``lam``.

    A puzzle is an ordered tuple ``(mu^1, ..., mu^k)`` with ``mu^i`` a
    partition of ``lam[i]`` whose parts, pooled together, are exactly the
    parts of ``mu``.  Equal parts of ``mu`` are not distinguished.
    """
    mu, lam = Partition(mu), Partition(lam)
    if mu.size != lam.size:
        raise ValueError(f"|{mu}| != |{lam}|")
    avail = tuple(sorted(Counter(mu).items(), reverse=True))
    return list(_puzzles(avail, tuple(lam)))


# -- necklaces, permutations, compositions ------------------------------------


def _require_nonempty(mu: Partition) -> Partition:
    mu = Partition(mu)
    if not mu:
        raise ValueError("the empty partition is not allowed here")
    return mu


def necklaces(mu: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Cyclically ordered set partitions of ``{1..|mu|}`` of shape ``mu``.

    Each necklace is reported with the block containing 1 first, which fixes
    the rotation.
    """
    mu = _require_nonempty(mu)
    n = mu.size
    for sp in enumerate_set_partitions_of_shape(n, mu):
        first, rest = sp.blocks[0], sp.blocks[1:]
        for order in permutations(rest):
            yield (first,) + order


def necklace_count(mu: Partition) -> int:
    """``n! (l-1)! / (prod mu_i! prod n_i!)``: necklaces of shape ``mu``."""
    mu = _require_nonempty(mu)
    return factorial(mu.size) * factorial(mu.length - 1) // (
        mu.factorial_product() * mu.aut()
    )


def cycle_type_count(lam: Partition) -> int:
    """Number of permutations of ``{1..|lam|}`` with cycle type ``lam``."""
    lam = _require_nonempty(lam)
    return factorial(lam.size) // (lam.aut() * prod(lam))


def composition_count(mu: Partition) -> int:
    """Number of distinct orderings of the parts of ``mu``."""
    mu = _require_nonempty(mu)
    return factorial(mu.length) // mu.aut()
