"""Verification sweeps behind ``multisym verify``.

A sweep turns a size bound into a list of small picklable tasks and checks
each task independently, so sweeps can fan out over a process pool.  Results
come back in task order whatever the job count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, NamedTuple

from .chromatic import (
    chromatic_oracle,
    chromatic_r_expansion,
    chromatic_sym,
    lemma_delta_sides,
    tutte_sym,
    xb_partial_r_expansion,
)
from .graphs import Graph, complement, complete_multipartite, graph_join, simple_graph_classes
from .identities import (
    Verdict,
    WeightFunction,
    necklace_inversion_check,
    orientation_sides,
    reciprocity_sides,
    rnm_sides,
    stepnice_lhs,
    stepnice_rhs,
)
from .partitions import (
    Partition,
    composition_count,
    cycle_type_count,
    enumerate_set_partitions,
    necklace_count,
    necklaces,
    partitions_of,
)
from .symfunc import Basis, convert, generator, otimes_multiply, to_polynomial, transition_matrix

__all__ = ["SWEEPS", "run_sweep", "random_weight_functions", "random_graph"]

# brute-force limits that keep each sweep at desk scale
ORACLE_VARS = (2, 3, 4)
ENUMERATION_LIMIT = 7
JOIN_PAIRS = 100
JOIN_MAX_VERTICES = 4
STEPNICE_FUNCTIONS = 10


class Sweep(NamedTuple):
    tasks: Callable[[int, int], list]
    check: Callable[[tuple], list[Verdict]]
    doc: str


def _graphs_upto(max_n: int) -> list[Graph]:
    return [g for n in range(max_n + 1) for g in simple_graph_classes(n)]


def _gjson(g: Graph) -> str:
    return f"{g.n}:{list(map(list, g.edges))}"


# -- graph sweeps -------------------------------------------------------------


def _graph_tasks(max_n: int, seed: int) -> list:
    return [(g,) for g in _graphs_upto(max_n)]


def _check_corollary(task) -> list[Verdict]:
    (g,) = task
    return [Verdict.of("corollary", chromatic_r_expansion(g, cap=None), convert(chromatic_sym(g), Basis.R), graph=_gjson(g))]


def _check_thm32(task) -> list[Verdict]:
    (g,) = task
    xb = tutte_sym(g)
    return [
        Verdict.of("thm32", xb_partial_r_expansion(g, j, cap=None), convert(xb.partial_sum(j), Basis.R),
                   graph=_gjson(g), j=j)
        for j in range(len(g.edges) + 1)
    ]


def _oracle_tasks(max_n: int, seed: int) -> list:
    return [(g, N) for g in _graphs_upto(max_n) for N in ORACLE_VARS]


def _check_oracle(task) -> list[Verdict]:
    g, nvars = task
    brute = {k: Fraction(v) for k, v in chromatic_oracle(g, nvars).items()}
    return [Verdict.of("oracle", _poly_str(brute), _poly_str(to_polynomial(chromatic_sym(g), nvars)),
                       graph=_gjson(g), vars=nvars)]


def _poly_str(poly) -> str:
    return "; ".join(f"{c}*x^{list(e)}" for e, c in sorted(poly.items())) or "0"


def random_graph(rng: random.Random, max_vertices: int) -> Graph:
    """Uniform vertex count in ``0..max_vertices``, each possible edge kept with probability 1/2."""
    n = rng.randint(0, max_vertices)
    edges = tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.5)
    return Graph(n, edges)


def _tsujie_tasks(max_n: int, seed: int) -> list:
    rng = random.Random(f"tsujie:{seed}")
    bound = min(max_n, JOIN_MAX_VERTICES)
    return [(random_graph(rng, bound), random_graph(rng, bound)) for _ in range(JOIN_PAIRS)]


def _check_tsujie(task) -> list[Verdict]:
    g, h = task
    lhs = otimes_multiply(chromatic_sym(g), chromatic_sym(h))
    return [Verdict.of("tsujie", lhs, chromatic_sym(graph_join(g, h)), G=_gjson(g), H=_gjson(h))]


def _partition_tasks(max_n: int, seed: int) -> list:
    return [(lam,) for n in range(1, max_n + 1) for lam in partitions_of(n)]


def _check_complement(task) -> list[Verdict]:
    (lam,) = task
    lhs = chromatic_sym(complement(complete_multipartite(lam)))
    return [Verdict.of("complement", lhs, generator(Basis.E, lam).scale(lam.factorial_product()), **{"lambda": lam})]


# -- partition-lattice sweeps --------------------------------------------------


def _lemma_tasks(max_n: int, seed: int) -> list:
    return [(p,) for n in range(max_n + 1) for p in enumerate_set_partitions(n)]


def _check_lemma31(task) -> list[Verdict]:
    (p,) = task
    return [
        Verdict.of("lemma31", total, int(p.shape == mu), P=p, mu=mu)
        for mu, total in lemma_delta_sides(p).items()
    ]


# -- basis-change sweeps ---------------------------------------------------------


def _degree_tasks(max_n: int, seed: int) -> list:
    return [(n,) for n in range(1, max_n + 1)]


def _check_necklace(task) -> list[Verdict]:
    (n,) = task
    out = [Verdict.of("necklace", necklace_inversion_check(n), True, n=n)]
    if n <= ENUMERATION_LIMIT:
        for mu in partitions_of(n):
            out.append(Verdict.of("necklace_count", necklace_count(mu), sum(1 for _ in necklaces(mu)), mu=mu))
    return out


def _check_rnm(task) -> list[Verdict]:
    (n,) = task
    return [Verdict.of("rnm", inv, closed, n=n, mu=mu) for mu, inv, closed in rnm_sides(n)]


def _check_roundtrip(task) -> list[Verdict]:
    (d,) = task
    out = []
    for a in Basis:
        for b in Basis:
            ok = (transition_matrix(d, b, a) @ transition_matrix(d, a, b)).is_identity()
            out.append(Verdict.of("roundtrip", ok, True, degree=d, source=a.value, target=b.value))
    return out


def _check_cyctype(task) -> list[Verdict]:
    (n,) = task
    out = [Verdict.of("cyctype_sum", sum(cycle_type_count(lam) for lam in partitions_of(n)),
                      factorial(n), n=n)]
    if n <= ENUMERATION_LIMIT:
        counts: dict[Partition, int] = {}
        for perm in permutations(range(n)):
            ct = _cycle_type(perm)
            counts[ct] = counts.get(ct, 0) + 1
        for lam in partitions_of(n):
            out.append(Verdict.of("cyctype", cycle_type_count(lam), counts.get(lam, 0), **{"lambda": lam}))
    return out


def _cycle_type(perm) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if not seen[start]:
            k, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = perm[x]
                k += 1
            lengths.append(k)
    return Partition.from_parts(lengths)


def _pair_tasks(max_n: int, seed: int) -> list:
    return [(lam, mu) for n in range(1, max_n + 1) for lam in partitions_of(n) for mu in partitions_of(n)]


def _check_reciprocity(task) -> list[Verdict]:
    lam, mu = task
    sides = reciprocity_sides(lam, mu)
    return [Verdict.of(name, *sides[name], **{"lambda": lam, "mu": mu}) for name in ("eprec", "perec")]


def _check_orientation(task) -> list[Verdict]:
    lam, mu = task
    return [Verdict.of("orientation", *orientation_sides(lam, mu), **{"lambda": lam, "mu": mu})]


def random_weight_functions(mu: Partition, seed: int, count: int = STEPNICE_FUNCTIONS) -> list[WeightFunction]:
    """Seeded random weight tables on ``1..l(mu)``, reproducible per (seed, mu)."""
    rng = random.Random(f"stepnice:{seed}:{mu}")
    return [WeightFunction.random(max(mu.length, 1), rng) for _ in range(count)]


def _stepnice_tasks(max_n: int, seed: int) -> list:
    return [(mu, seed) for n in range(1, max_n + 1) for mu in partitions_of(n)]


def _check_stepnice(task) -> list[Verdict]:
    mu, seed = task
    out = []
    for k, f in enumerate(random_weight_functions(mu, seed)):
        out.append(Verdict.of("stepnice", stepnice_lhs(mu, f), stepnice_rhs(mu, f), mu=mu, f=f"random#{k}"))
    one = WeightFunction("one")
    out.append(Verdict.of("compositions", stepnice_lhs(mu, one), composition_count(mu), mu=mu))
    if mu != Partition((mu.size,)):
        out.append(Verdict.of("small", stepnice_lhs(mu, WeightFunction("alt-sign")), 0, mu=mu))
    return out


SWEEPS: dict[str, Sweep] = {
    "oracle": Sweep(_oracle_tasks, _check_oracle, "truncated X_G against brute-force proper colorings"),
    "corollary": Sweep(_graph_tasks, _check_corollary, "r-expansion of X_G from maximal stable partitions"),
    "thm32": Sweep(_graph_tasks, _check_thm32, "r-expansion of partial (1+t)-slice sums of XB_G"),
    "lemma31": Sweep(_lemma_tasks, _check_lemma31, "refinement sums of [r_mu] mtilde are deltas"),
    "roundtrip": Sweep(_degree_tasks, _check_roundtrip, "transition matrices compose to the identity"),
    "necklace": Sweep(_degree_tasks, _check_necklace, "m_n in the r basis has necklace coefficients"),
    "reciprocity": Sweep(_pair_tasks, _check_reciprocity, "e/p against r/mtilde reciprocity"),
    "rnm": Sweep(_degree_tasks, _check_rnm, "inverse of R against the closed form"),
    "stepnice": Sweep(_stepnice_tasks, _check_stepnice, "weighted puzzle sums against cycle-type sums"),
    "cyctype": Sweep(_degree_tasks, _check_cyctype, "cycle-type counts against brute force"),
    "tsujie": Sweep(_tsujie_tasks, _check_tsujie, "X_G (x) X_H equals X of the join"),
    "orientation": Sweep(_pair_tasks, _check_orientation, "[m_mu] r_lam against the m/p matrix"),
    "complement": Sweep(_partition_tasks, _check_complement, "X of disjoint cliques is a multiple of e_lam"),
}


def run_sweep(name: str, max_n: int, seed: int = 0, jobs: int = 1) -> list[Verdict]:
    """Run one sweep; verdicts come back in task order for any ``jobs``."""
    sweep = SWEEPS[name]
    tasks = sweep.tasks(max_n, seed)
    if jobs <= 1 or len(tasks) < 2:
        results = [sweep.check(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(sweep.check, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    return [v for chunk in results for v in chunk]
