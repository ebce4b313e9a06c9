"""Checkable identities relating the r, mtilde, p, e and h bases.

Each check computes both sides by independent routes and returns them, so
callers can report the values as well as the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from math import factorial, prod
from typing import Callable, Iterable, Mapping, Union

from . import linalg
from .partitions import Partition, cycle_type_count, necklace_count, partitions_of, puzzles
from .symfunc import (
    Basis,
    convert,
    e_to_p_coeff,
    generator,
    p_to_e_coeff,
    transition_matrix,
)

__all__ = [
    "WeightFunction",
    "Verdict",
    "stepnice_lhs",
    "stepnice_rhs",
    "reciprocity_sides",
    "reciprocity_check",
    "rnm_check",
    "rnm_sides",
    "necklace_inversion_check",
    "orientation_sides",
    "perec_lam_sign_sides",
]


class WeightFunction:
    """A map from positive integers to rationals.

    Built from a named builtin (``"one"`` or ``"alt-sign"``, i.e.
    ``(-1)^k``), a callable, or an explicit table for ``1..n``.
    """

    def __init__(self, spec: Union[str, Mapping[int, object], Callable[[int], object]], name: str | None = None):
        if isinstance(spec, str):
            if spec == "one":
                self._f = lambda k: Fraction(1)
            elif spec == "alt-sign":
                self._f = lambda k: Fraction(-1 if k % 2 else 1)
            else:
                raise ValueError(f"unknown weight function {spec!r}")
            self.name = spec
        elif callable(spec):
            self._f = lambda k: Fraction(spec(k))
            self.name = name or getattr(spec, "__name__", "callable")
        else:
            table = {int(k): Fraction(v) for k, v in spec.items()}
            self._f = table.__getitem__
            self.name = name or "table"
            self.table = table

    def __call__(self, k: int) -> Fraction:
        try:
            return self._f(k)
        except KeyError:
            raise ValueError(f"weight function {self.name!r} is undefined at {k}") from None

    def __repr__(self) -> str:
        return f"WeightFunction({self.name!r})"

    @classmethod
    def random(cls, n: int, rng: Random, bound: int = 9) -> "WeightFunction":
        """Table on ``1..n`` with small random numerators and denominators."""
        table = {k: Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for k in range(1, n + 1)}
        return cls(table, name="random")


@dataclass(frozen=True, eq=False)
class Verdict:
    """Outcome of one identity instance: both sides plus the instance labels."""

    identity: str
    lhs: object
    rhs: object
    context: tuple[tuple[str, str], ...] = ()

    @classmethod
    def of(cls, identity: str, lhs, rhs, **context) -> "Verdict":
        return cls(identity, lhs, rhs, tuple((k, str(v)) for k, v in context.items()))

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        out: dict = {"identity": self.identity}
        out.update(self.context)
        out.update(lhs=str(self.lhs), rhs=str(self.rhs))
        out["pass"] = self.passed
        return out


def _nonempty(mu: Iterable[int]) -> Partition:
    mu = Partition(mu)
    if not mu:
        raise ValueError("the empty partition is not allowed here")
    return mu


def stepnice_lhs(mu: Iterable[int], f: WeightFunction) -> Fraction:
    """Weighted puzzle sum over all ``lam`` coarsening ``mu``."""
    mu = _nonempty(mu)
    total = Fraction(0)
    for lam in partitions_of(mu.size):
        inner = Fraction(0)
        for pz in puzzles(mu, lam):
            inner += prod((Fraction(factorial(pc.length - 1), pc.aut()) for pc in pz), start=Fraction(1))
        if inner:
            total += f(lam.length) * inner / lam.aut()
    return total


def stepnice_rhs(mu: Iterable[int], f: WeightFunction) -> Fraction:
    """``(1/prod n_i(mu)!)`` times the sum of ``f(#cycles)`` over ``S_{l(mu)}``,
    aggregated by cycle type."""
    mu = _nonempty(mu)
    s = sum((cycle_type_count(nu) * f(nu.length) for nu in partitions_of(mu.length)), Fraction(0))
    return s / mu.aut()


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def reciprocity_sides(lam: Iterable[int], mu: Iterable[int]) -> dict[str, tuple[Fraction, Fraction]]:
    """Both sides of the two reciprocity identities.

    ``eprec``: ``(-1)^(|lam|-l(lam)) prod(lam_i-1)!/prod mu_i! [e_mu]p_lam == [r_mu]mtilde_lam``

    ``perec``: ``(-1)^(|lam|-l(mu)) prod lam_i!/prod(mu_i-1)! [p_mu]e_lam == [mtilde_mu]r_lam``

    The p/e coefficients come from closed-form puzzle sums, the r/mtilde
    coefficients from the transition matrices.  The sign in ``perec`` uses
    ``l(mu)``; with ``l(lam)`` in its place the identity fails whenever
    ``l(lam) - l(mu)`` is odd (see :func:`perec_lam_sign_sides`).
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|{lam}| != |{mu}|")
    d = lam.size
    r_in_mt = transition_matrix(d, Basis.MT, Basis.R).entry(mu, lam)
    mt_in_r = transition_matrix(d, Basis.R, Basis.MT).entry(mu, lam)

    ep_lhs = (
        _sign(lam.size - lam.length)
        * Fraction(prod(factorial(x - 1) for x in lam), mu.factorial_product())
        * p_to_e_coeff(lam, mu)
    )
    pe_lhs = (
        _sign(lam.size - mu.length)
        * Fraction(lam.factorial_product(), prod(factorial(x - 1) for x in mu))
        * e_to_p_coeff(lam, mu)
    )
    return {"eprec": (ep_lhs, r_in_mt), "perec": (pe_lhs, mt_in_r)}


def perec_lam_sign_sides(lam: Iterable[int], mu: Iterable[int]) -> tuple[Fraction, Fraction]:
    """``perec`` with the sign exponent written as ``|lam| - l(lam)``."""
    lam, mu = Partition(lam), Partition(mu)
    lhs, rhs = reciprocity_sides(lam, mu)["perec"]
    return lhs * _sign(lam.length - mu.length), rhs


def reciprocity_check(lam: Iterable[int], mu: Iterable[int]) -> tuple[bool, bool]:
    """Whether ``eprec`` and ``perec`` hold exactly for this pair."""
    sides = reciprocity_sides(lam, mu)
    return tuple(a == b for a, b in (sides["eprec"], sides["perec"]))  # type: ignore[return-value]


def rnm_sides(n: int) -> list[tuple[Partition, Fraction, Fraction]]:
    """Entries of the inverse of ``R[mu][lam] = [m_lam] p_mu`` against the closed form.

    ``R`` is inverted exactly; for each ``mu`` the inverse entry in row ``mu``,
    column ``(n)`` (which is ``[p_n] m_mu``) is paired with
    ``(-1)^(l(mu)-1) (l(mu)-1)! / prod n_i(mu)!``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pm = transition_matrix(n, Basis.P, Basis.M)  # pm.entries[lam][mu] = [m_lam] p_mu
    r = linalg.transpose(pm.entries)
    r_inv = linalg.invert(r)
    idx = pm.index
    col = idx.index(Partition((n,)))
    out = []
    for i, mu in enumerate(idx):
        closed = Fraction(_sign(mu.length - 1) * factorial(mu.length - 1), mu.aut())
        out.append((mu, r_inv[i][col], closed))
    return out


def rnm_check(n: int) -> bool:
    return all(a == b for _, a, b in rnm_sides(n))


def necklace_inversion_check(n: int) -> bool:
    """``m_n`` in the r basis has coefficient ``(-1)^(l(mu)-1) c_mu`` on ``r_mu``."""
    if n < 1:
        raise ValueError("n must be positive")
    m_n = convert(generator(Basis.M, (n,)), Basis.R)
    return all(m_n[mu] == _sign(mu.length - 1) * necklace_count(mu) for mu in partitions_of(n))


def orientation_sides(lam: Iterable[int], mu: Iterable[int]) -> tuple[Fraction, Fraction]:
    """``[m_mu] r_lam`` against ``(prod lam_i!/prod mu_i!) R[mu][lam]`` with ``R[mu][lam] = [m_lam] p_mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError(f"|{lam}| != |{mu}|")
    d = lam.size
    lhs = transition_matrix(d, Basis.R, Basis.M).entry(mu, lam)
    r_entry = transition_matrix(d, Basis.P, Basis.M).entry(lam, mu)
    return lhs, Fraction(lam.factorial_product(), mu.factorial_product()) * r_entry
