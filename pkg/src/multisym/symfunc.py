"""Exact symmetric-function expressions in six partition-indexed bases.

Every expression is a finite map from partitions to ``Fraction`` coefficients
tagged with a basis.  The augmented monomial basis ``mtilde`` (the monomial
basis rescaled by ``prod n_i(lam)!``) is the pivot: each basis element has a
known ``mtilde`` expansion, and conversions between any two bases go
``source -> mtilde -> target`` one degree at a time, through memoized
per-degree transition matrices.

Two products are available: the ordinary product of symmetric functions and
the ``otimes`` product, defined on the pivot basis by
``mtilde_lam (x) mtilde_mu = mtilde_{lam u mu}``.  The ``r`` basis
(chromatic symmetric functions of complete multipartite graphs) is
multiplicative for ``otimes`` rather than for the ordinary product.
"""

from __future__ import annotations

import csv
import io
import threading
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Mapping, Union

from . import linalg
from .partitions import Partition, partitions_of, puzzles, set_partition_count

__all__ = [
    "Basis",
    "SymExpr",
    "TransitionMatrix",
    "mtilde_multiply",
    "otimes_multiply",
    "generator",
    "convert",
    "coefficient",
    "transition_matrix",
    "mtilde_to_r_coeff",
    "r_to_mtilde_coeff",
    "p_to_e_coeff",
    "e_to_p_coeff",
    "p_to_h_coeff",
    "to_polynomial",
    "poly_multiply",
    "parse_fraction",
]

Scalar = Union[int, Fraction]


class Basis(str, Enum):
    M = "m"
    MT = "mtilde"
    P = "p"
    E = "e"
    H = "h"
    R = "r"

    @classmethod
    def parse(cls, name: Union[str, "Basis"]) -> "Basis":
        if isinstance(name, Basis):
            return name
        key = name.strip().lower()
        aliases = {"mt": "mtilde", "m~": "mtilde", "augmented": "mtilde"}
        key = aliases.get(key, key)
        for b in cls:
            if b.value == key:
                return b
        raise ValueError(f"unknown basis {name!r}; expected one of m, mtilde, p, e, h, r")

    def __str__(self) -> str:
        return self.value


def parse_fraction(text: Union[str, int, Fraction]) -> Fraction:
    """Parse an exact rational such as ``"-1/2"``; a Unicode minus is accepted."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {text!r}") from None


def _order_key(p: Partition):
    # degree ascending, then reverse lexicographic inside a degree
    return (p.size, tuple(-x for x in p))


class SymExpr:
    """A finite linear combination of basis elements with rational coefficients.

    Instances are treated as immutable.  Zero coefficients are never stored.
    Expressions in different bases compare equal when they denote the same
    symmetric function.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: Union[Basis, str], terms: Mapping[Iterable[int], Scalar] | None = None):
        self.basis = Basis.parse(basis)
        clean: dict[Partition, Fraction] = {}
        for lam, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                lam = lam if isinstance(lam, Partition) else Partition(lam)
                clean[lam] = clean.get(lam, Fraction(0)) + c
        self.terms: dict[Partition, Fraction] = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, basis: Union[Basis, str] = Basis.MT) -> "SymExpr":
        return cls(basis)

    @classmethod
    def one(cls, basis: Union[Basis, str] = Basis.MT) -> "SymExpr":
        return cls(basis, {Partition(): 1})

    @classmethod
    def single(cls, basis: Union[Basis, str], lam: Iterable[int], coeff: Scalar = 1) -> "SymExpr":
        return cls(basis, {Partition(lam): coeff})

    # -- container protocol --------------------------------------------------

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, lam: Iterable[int]) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def items(self) -> list[tuple[Partition, Fraction]]:
        """Terms sorted by degree, then reverse lexicographically."""
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]))

    def degrees(self) -> set[int]:
        return {lam.size for lam in self.terms}

    def homogeneous_part(self, d: int) -> "SymExpr":
        return SymExpr(self.basis, {k: v for k, v in self.terms.items() if k.size == d})

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other: "SymExpr") -> "SymExpr":
        return other if other.basis == self.basis else convert(other, self.basis)

    def __add__(self, other: "SymExpr") -> "SymExpr":
        if not isinstance(other, SymExpr):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return SymExpr(self.basis, out)

    def __neg__(self) -> "SymExpr":
        return SymExpr(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SymExpr") -> "SymExpr":
        if not isinstance(other, SymExpr):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> "SymExpr":
        c = Fraction(c)
        return SymExpr(self.basis, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return convert(mtilde_multiply(convert(self, Basis.MT), convert(other, Basis.MT)), self.basis)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def otimes(self, other: "SymExpr") -> "SymExpr":
        return convert(otimes_multiply(convert(self, Basis.MT), convert(other, Basis.MT)), self.basis)

    def to(self, basis: Union[Basis, str]) -> "SymExpr":
        return convert(self, basis)

    def coefficient(self, basis: Union[Basis, str], lam: Iterable[int]) -> Fraction:
        return coefficient(self, basis, lam)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymExpr):
            return NotImplemented
        if self.basis == other.basis:
            return self.terms == other.terms
        return convert(self, Basis.MT).terms == convert(other, Basis.MT).terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SymExpr({self.basis.value!r}, {str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for lam, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            out.append(f"{sign} {coef}{self.basis.value}[{lam}]")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "terms": [{"partition": str(lam), "coeff": str(c)} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "SymExpr":
        try:
            basis = Basis.parse(obj["basis"])
            terms: dict[Partition, Fraction] = defaultdict(Fraction)
            for t in obj["terms"]:
                terms[Partition.parse(str(t["partition"]))] += parse_fraction(t["coeff"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed expression JSON: {exc}") from None
        return cls(basis, terms)


# -- products on the pivot basis ---------------------------------------------


@lru_cache(maxsize=None)
def _mt_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    # Sum over injective partial maps between part indices of lam and mu.
    counts: Counter = Counter()
    k = len(mu)

    def rec(i: int, used: int, merged: tuple[int, ...]) -> None:
        if i == len(lam):
            rest = tuple(mu[j] for j in range(k) if not used >> j & 1)
            counts[Partition.from_parts(merged + rest)] += 1
            return
        rec(i + 1, used, merged + (lam[i],))
        for j in range(k):
            if not used >> j & 1:
                rec(i + 1, used | 1 << j, merged + (lam[i] + mu[j],))

    rec(0, 0, ())
    return tuple(counts.items())


def _require_mt(*exprs: SymExpr) -> None:
    for x in exprs:
        if x.basis is not Basis.MT:
            raise ValueError(f"expected an mtilde expression, got basis {x.basis.value!r}")


def mtilde_multiply(a: SymExpr, b: SymExpr) -> SymExpr:
    """Ordinary product of two expressions in the ``mtilde`` basis."""
    _require_mt(a, b)
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, x in a.terms.items():
        for mu, y in b.terms.items():
            key = (lam, mu) if lam <= mu else (mu, lam)
            for nu, c in _mt_product(*key):
                out[nu] += x * y * c
    return SymExpr(Basis.MT, out)


def otimes_multiply(a: SymExpr, b: SymExpr) -> SymExpr:
    """Bilinear extension of ``mtilde_lam (x) mtilde_mu = mtilde_{lam u mu}``."""
    _require_mt(a, b)
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, x in a.terms.items():
        for mu, y in b.terms.items():
            out[lam.union(mu)] += x * y
    return SymExpr(Basis.MT, out)


# -- basis elements as mtilde expansions ---------------------------------------


def _single_part_generator(basis: Basis, n: int) -> SymExpr:
    if basis is Basis.P:
        return SymExpr(Basis.MT, {(n,): 1})
    if basis is Basis.E:
        return SymExpr(Basis.MT, {(1,) * n: Fraction(1, factorial(n))})
    if basis is Basis.H:
        return SymExpr(Basis.MT, {mu: Fraction(1, mu.aut()) for mu in partitions_of(n)})
    if basis is Basis.R:
        return SymExpr(Basis.MT, {mu: set_partition_count(n, mu) for mu in partitions_of(n)})
    raise AssertionError(basis)


@lru_cache(maxsize=None)
def _generator(basis: Basis, lam: Partition) -> SymExpr:
    if basis is Basis.MT:
        return SymExpr(Basis.MT, {lam: 1})
    if basis is Basis.M:
        return SymExpr(Basis.MT, {lam: Fraction(1, lam.aut())})
    if not lam:
        return SymExpr.one(Basis.MT)
    # peel off the last part; earlier prefixes are cached
    head = _generator(basis, Partition(lam[:-1]))
    tail = _single_part_generator(basis, lam[-1])
    if basis is Basis.R:
        return otimes_multiply(head, tail)
    return mtilde_multiply(head, tail)


def generator(basis: Union[Basis, str], lam: Iterable[int]) -> SymExpr:
    """The ``mtilde`` expansion of the basis element indexed by ``lam``."""
    return _generator(Basis.parse(basis), Partition(lam))


# -- closed-form coefficients --------------------------------------------------


def _same_size(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|{lam}| != |{mu}|")
    return lam, mu


def mtilde_to_r_coeff(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """``[r_mu] mtilde_lam`` as a signed sum over puzzles of ``mu`` into ``lam``."""
    return _mtilde_to_r_coeff(*_same_size(lam, mu))


@lru_cache(maxsize=None)
def _mtilde_to_r_coeff(lam: Partition, mu: Partition) -> Fraction:
    total = Fraction(0)
    for pz in puzzles(mu, lam):
        term = Fraction(1)
        for li, piece in zip(lam, pz):
            sign = -1 if (piece.length - 1) % 2 else 1
            term *= Fraction(
                sign * factorial(li) * factorial(piece.length - 1),
                piece.factorial_product() * piece.aut(),
            )
        total += term
    return total


def r_to_mtilde_coeff(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """``[mtilde_mu] r_lam`` summed over puzzles of ``mu`` into ``lam``."""
    lam, mu = _same_size(lam, mu)
    s = sum((Fraction(1, prod(piece.aut() for piece in pz)) for pz in puzzles(mu, lam)), Fraction(0))
    return Fraction(lam.factorial_product(), mu.factorial_product()) * s


def _cycle_sum(mu: Partition, lam: Partition) -> Fraction:
    # sum over puzzles of prod_i (l(mu^i)-1)! / prod_j n_j(mu^i)!
    total = Fraction(0)
    for pz in puzzles(mu, lam):
        total += prod(
            (Fraction(factorial(piece.length - 1), piece.aut()) for piece in pz), start=Fraction(1)
        )
    return total


def p_to_e_coeff(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """``[e_mu] p_lam``."""
    lam, mu = _same_size(lam, mu)
    sign = -1 if (lam.size - mu.length) % 2 else 1
    return sign * prod(lam) * _cycle_sum(mu, lam)


def e_to_p_coeff(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """``[p_mu] e_lam``."""
    lam, mu = _same_size(lam, mu)
    sign = -1 if (lam.size - mu.length) % 2 else 1
    s = sum((Fraction(1, prod(piece.aut() for piece in pz)) for pz in puzzles(mu, lam)), Fraction(0))
    return sign * s / prod(mu)


def p_to_h_coeff(lam: Iterable[int], mu: Iterable[int]) -> Fraction:
    """``[h_mu] p_lam``."""
    lam, mu = _same_size(lam, mu)
    total = Fraction(0)
    for pz in puzzles(mu, lam):
        term = Fraction(1)
        for piece in pz:
            sign = -1 if (piece.length - 1) % 2 else 1
            term *= Fraction(sign * factorial(piece.length - 1), piece.aut())
        total += term
    return prod(lam) * total


# -- transition matrices ------------------------------------------------------


@dataclass(frozen=True)
class TransitionMatrix:
    """Change of basis in one degree.

    ``entries[i][j]`` is the coefficient of ``target_{index[i]}`` in the
    expansion of ``source_{index[j]}``; ``index`` is reverse lexicographic.
    """

    degree: int
    source: Basis
    target: Basis
    index: tuple[Partition, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def position(self, lam: Iterable[int]) -> int:
        return self.index.index(Partition(lam))

    def entry(self, mu: Iterable[int], lam: Iterable[int]) -> Fraction:
        """Coefficient of ``target_mu`` in ``source_lam``."""
        return self.entries[self.position(mu)][self.position(lam)]

    def as_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        """Composition: apply ``other`` first, then ``self``."""
        if self.degree != other.degree or self.source != other.target:
            raise ValueError("incompatible transition matrices")
        prod_ = linalg.matmul(self.entries, other.entries)
        return TransitionMatrix(self.degree, other.source, self.target, self.index, _freeze(prod_))

    def is_identity(self) -> bool:
        return all(
            v == (1 if i == j else 0) for i, row in enumerate(self.entries) for j, v in enumerate(row)
        )

    def is_lower_unitriangular(self) -> bool:
        return linalg.is_lower_triangular(self.entries) and all(
            self.entries[i][i] == 1 for i in range(len(self.index))
        )

    def apply(self, vec: Mapping[Partition, Fraction]) -> dict[Partition, Fraction]:
        pos = {lam: j for j, lam in enumerate(self.index)}
        out: dict[Partition, Fraction] = defaultdict(Fraction)
        for lam, c in vec.items():
            j = pos[lam]
            for i, row in enumerate(self.entries):
                if row[j]:
                    out[self.index[i]] += row[j] * c
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"{self.target.value}\\{self.source.value}"] + [str(p) for p in self.index])
        for lam, row in zip(self.index, self.entries):
            w.writerow([str(lam)] + [str(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "from": self.source.value,
            "to": self.target.value,
            "index": [str(p) for p in self.index],
            "entries": [[str(v) for v in row] for row in self.entries],
        }


def _freeze(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(v) for v in r) for r in rows)


def _build_matrix(d: int, source: Basis, target: Basis) -> TransitionMatrix:
    index = tuple(partitions_of(d))
    n = len(index)
    if source is target:
        rows = linalg.identity(n)
    elif target is Basis.MT:
        cols = [generator(source, lam) for lam in index]
        rows = [[cols[j][mu] for j in range(n)] for mu in index]
    elif source is Basis.MT and target is Basis.R:
        rows = [[mtilde_to_r_coeff(lam, mu) for lam in index] for mu in index]
    elif source is Basis.MT:
        rows = linalg.invert(transition_matrix(d, target, Basis.MT).entries)
    else:
        return transition_matrix(d, Basis.MT, target) @ transition_matrix(d, source, Basis.MT)
    return TransitionMatrix(d, source, target, index, _freeze(rows))


class _MatrixCache:
    """Build-once cache: one lock per key, so independent keys build concurrently.

    A build may request other keys; the dependency graph is acyclic
    (``a->b`` needs ``a->mtilde`` and ``mtilde->b``; ``mtilde->b`` needs
    ``b->mtilde``; ``b->mtilde`` needs nothing), so per-key locking cannot
    deadlock.
    """

    def __init__(self) -> None:
        self._done: dict[tuple, TransitionMatrix] = {}
        self._locks: dict[tuple, threading.Lock] = {}
        self._guard = threading.Lock()
        self.builds = Counter()

    def get(self, d: int, source: Basis, target: Basis) -> TransitionMatrix:
        key = (d, source, target)
        found = self._done.get(key)
        if found is not None:
            return found
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            found = self._done.get(key)
            if found is None:
                found = _build_matrix(d, source, target)
                self.builds[key] += 1
                self._done[key] = found
        return found

    def clear(self) -> None:
        with self._guard:
            self._done.clear()
            self._locks.clear()
            self.builds.clear()


_CACHE = _MatrixCache()


def transition_matrix(d: int, source: Union[Basis, str], target: Union[Basis, str]) -> TransitionMatrix:
    """The degree-``d`` change-of-basis matrix from ``source`` to ``target``."""
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")
    return _CACHE.get(d, Basis.parse(source), Basis.parse(target))


def convert(x: SymExpr, target: Union[Basis, str]) -> SymExpr:
    """Re-express ``x`` in ``target``, degree by degree."""
    target = Basis.parse(target)
    if x.basis is target:
        return x
    by_degree: dict[int, dict[Partition, Fraction]] = defaultdict(dict)
    for lam, c in x.terms.items():
        by_degree[lam.size][lam] = c
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for d, vec in by_degree.items():
        for mu, c in transition_matrix(d, x.basis, target).apply(vec).items():
            out[mu] += c
    return SymExpr(target, out)


def coefficient(x: SymExpr, basis: Union[Basis, str], lam: Iterable[int]) -> Fraction:
    """``[f_lam] x`` where ``f`` is the given basis."""
    return convert(x, basis)[lam]


# -- polynomial truncation ------------------------------------------------------

Polynomial = dict[tuple[int, ...], Fraction]


def to_polynomial(x: SymExpr, nvars: int) -> Polynomial:
    """Expand ``x`` as a polynomial in ``x_1..x_nvars`` (exponent vector -> coefficient)."""
    out: Polynomial = defaultdict(Fraction)
    for lam, c in convert(x, Basis.MT).terms.items():
        if lam.length > nvars:
            continue
        for idx in permutations(range(nvars), lam.length):
            exps = [0] * nvars
            for i, part in zip(idx, lam):
                exps[i] = part
            out[tuple(exps)] += c
    return {k: v for k, v in out.items() if v}


def poly_multiply(a: Polynomial, b: Polynomial) -> Polynomial:
    out: Polynomial = defaultdict(Fraction)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {k: v for k, v in out.items() if v}
