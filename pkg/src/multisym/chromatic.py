"""Chromatic and Tutte symmetric functions, and their expansions in the r basis.

``chromatic_sym`` counts stable partitions by shape; ``tutte_sym`` weights
every set partition by ``(1+t)^(internal edges)``.  The r-basis expansions
are computed combinatorially by inclusion-exclusion over meets of the
j-maximal partitions of the graph, and agree with converting the mtilde
expansions through the transition matrices.
"""

from __future__ import annotations

import os
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .graphs import Graph, jmaximal_partitions
from .partitions import Partition, SetPartition, enumerate_set_partitions, refinements
from .symfunc import Basis, SymExpr, mtilde_to_r_coeff, parse_fraction, transition_matrix

__all__ = [
    "SubsetCapExceeded",
    "TuttePoly",
    "DEFAULT_SUBSET_CAP",
    "subset_cap",
    "chromatic_sym",
    "chromatic_oracle",
    "tutte_sym",
    "evaluate_at_t",
    "meet_inclusion_exclusion",
    "xb_partial_r_expansion",
    "chromatic_r_expansion",
    "lemma_delta_check",
    "lemma_delta_sides",
]

DEFAULT_SUBSET_CAP = 20


class SubsetCapExceeded(RuntimeError):
    """Raised when inclusion-exclusion would range over too many partitions."""

    def __init__(self, k: int, cap: int):
        super().__init__(
            f"{k} j-maximal partitions exceed the subset cap of {cap} "
            f"(raise it with MULTISYM_SUBSET_CAP)"
        )
        self.k = k
        self.cap = cap


def subset_cap() -> int:
    """The cap from ``MULTISYM_SUBSET_CAP``, or the default of 20."""
    raw = os.environ.get("MULTISYM_SUBSET_CAP")
    if raw is None:
        return DEFAULT_SUBSET_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"MULTISYM_SUBSET_CAP must be an integer, got {raw!r}") from None


class TuttePoly:
    """``sum c[i, lam] (1+t)^i mtilde_lam``, kept in powers of ``(1+t)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, Iterable[int]], object] | None = None):
        clean: dict[tuple[int, Partition], Fraction] = defaultdict(Fraction)
        for (i, lam), c in (terms or {}).items():
            if i < 0:
                raise ValueError(f"(1+t) power must be nonnegative, got {i}")
            clean[(int(i), Partition(lam))] += Fraction(c)
        self.terms = {k: v for k, v in clean.items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TuttePoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"TuttePoly({self.terms!r})"

    def max_power(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    def slice(self, i: int) -> SymExpr:
        """The mtilde coefficient of ``(1+t)^i``."""
        return SymExpr(Basis.MT, {lam: c for (k, lam), c in self.terms.items() if k == i})

    def partial_sum(self, j: int) -> SymExpr:
        """Sum of the slices for powers ``0..j``."""
        return SymExpr(Basis.MT, _accumulate((lam, c) for (k, lam), c in self.terms.items() if k <= j))

    def items(self) -> list[tuple[int, Partition, Fraction]]:
        """Terms ordered by partition (reverse lexicographic), then ascending power."""
        rows = [(i, lam, c) for (i, lam), c in self.terms.items()]
        rows.sort(key=lambda r: (r[1].size, tuple(-x for x in r[1]), r[0]))
        return rows

    def to_json(self) -> dict:
        return {"terms": [{"i": i, "partition": str(lam), "coeff": str(c)} for i, lam, c in self.items()]}

    @classmethod
    def from_json(cls, obj) -> "TuttePoly":
        try:
            return cls({(int(t["i"]), Partition.parse(str(t["partition"]))): parse_fraction(t["coeff"])
                        for t in obj["terms"]})
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed Tutte JSON: {exc}") from None


def _accumulate(pairs) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, c in pairs:
        out[lam] += c
    return out


def chromatic_sym(g: Graph) -> SymExpr:
    """``X_G`` in the mtilde basis: stable partitions counted by shape."""
    if g.has_loop():
        return SymExpr.zero(Basis.MT)
    edges = set(g.edges)
    out: dict[Partition, int] = defaultdict(int)
    for p in enumerate_set_partitions(g.n):
        labels = p.labels()
        if all(labels[u - 1] != labels[v - 1] for u, v in edges):
            out[p.shape] += 1
    return SymExpr(Basis.MT, out)


def chromatic_oracle(g: Graph, nvars: int) -> dict[tuple[int, ...], int]:
    """``X_G`` truncated to ``nvars`` variables, by brute force over all colorings."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for coloring in product(range(nvars), repeat=g.n):
        if all(coloring[u - 1] != coloring[v - 1] for u, v in g.edges):
            exps = [0] * nvars
            for c in coloring:
                exps[c] += 1
            out[tuple(exps)] += 1
    return dict(out)


def tutte_sym(g: Graph) -> TuttePoly:
    """``XB_G``: every set partition weighted by ``(1+t)^(internal edges)``."""
    out: dict[tuple[int, Partition], int] = defaultdict(int)
    for p in enumerate_set_partitions(g.n):
        labels = p.labels()
        e = sum(1 for u, v in g.edges if labels[u - 1] == labels[v - 1])
        out[(e, p.shape)] += 1
    return TuttePoly(out)


def evaluate_at_t(x: TuttePoly, t0) -> SymExpr:
    """Substitute ``t = t0``; ``(1+t0)^0`` is 1 even when ``t0 = -1``."""
    base = 1 + Fraction(t0)
    return SymExpr(Basis.MT, _accumulate((lam, c * base**i) for (i, lam), c in x.terms.items()))


@lru_cache(maxsize=1 << 20)
def _meet_labels(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # both inputs are canonical block labels (first occurrences in order); so is the output
    ids: dict[tuple[int, int], int] = {}
    return tuple(ids.setdefault(pair, len(ids)) for pair in zip(a, b))


def meet_inclusion_exclusion(parts: list[SetPartition]) -> dict[SetPartition, int]:
    """Signed count of each meet over nonempty subsets of ``parts``.

    Returns ``{P: sum over nonempty S with meet(S) == P of (-1)^(|S|-1)}``
    with zero entries dropped.  Subsets are folded in one partition at a
    time, so the work is bounded by the number of distinct meets rather than
    by ``2^k``.
    """
    signed: dict[tuple[int, ...], int] = {}
    for m in parts:
        mlab = tuple(m.labels())
        step = dict(signed)
        for p, c in signed.items():
            q = _meet_labels(p, mlab)
            step[q] = step.get(q, 0) - c
        step[mlab] = step.get(mlab, 0) + 1
        signed = {p: c for p, c in step.items() if c}
    return {SetPartition.from_labels(p): c for p, c in signed.items()}


def xb_partial_r_expansion(g: Graph, j: int, cap: int | None = -1) -> SymExpr:
    """``sum_{i<=j} [(1+t)^i] XB_G`` in the r basis, by inclusion-exclusion.

    ``cap`` bounds the number of (<= j)-maximal partitions; ``-1`` reads it
    from the environment, ``None`` disables it.
    """
    if cap == -1:
        cap = subset_cap()
    maximal = [rep.partition for rep in jmaximal_partitions(g, j)]
    if cap is not None and len(maximal) > cap:
        raise SubsetCapExceeded(len(maximal), cap)
    out: dict[Partition, int] = defaultdict(int)
    for p, c in meet_inclusion_exclusion(maximal).items():
        out[p.shape] += c
    return SymExpr(Basis.R, out)


def chromatic_r_expansion(g: Graph, cap: int | None = -1) -> SymExpr:
    """``X_G`` in the r basis from the meets of its maximal stable partitions."""
    if g.has_loop():
        return SymExpr.zero(Basis.R)
    return xb_partial_r_expansion(g, 0, cap)


def lemma_delta_check(p: SetPartition, mu: Iterable[int]) -> Fraction:
    """``sum over q <= p of [r_mu] mtilde_{shape(q)}``; equals 1 iff ``shape(p) == mu``, else 0."""
    mu = Partition(mu)
    if mu.size != p.ground_size:
        raise ValueError(f"|{mu}| != ground size {p.ground_size}")
    return sum((mtilde_to_r_coeff(q.shape, mu) for q in refinements(p)), Fraction(0))


def lemma_delta_sides(p: SetPartition) -> dict[Partition, Fraction]:
    """:func:`lemma_delta_check` for every ``mu`` at once, read off the mtilde -> r matrix."""
    tm = transition_matrix(p.ground_size, Basis.MT, Basis.R)
    pos = {lam: j for j, lam in enumerate(tm.index)}
    totals = [Fraction(0)] * len(tm.index)
    for q in refinements(p):
        j = pos[q.shape]
        for i, row in enumerate(tm.entries):
            totals[i] += row[j]
    return dict(zip(tm.index, totals))
