"""Full quotient rank: the Apéry sufficient condition, semigroups with a
unique Betti element, obstruction search, and a bounded hunt for multiples
of small embedding dimension.

The quotient rank of S is min e(T) over all multiples T of S; it is full
when it equals e(S).  If the sum of all minimal generators but a_i lies in
Ap(S, a_i) for every i, the rank is full; the converse is open, so a false
verdict proves nothing and the bounded search below never claims one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, product
from math import gcd, prod

from .core import NumericalSemigroup, from_generators
from .errors import (
    CeilingExceeded,
    InternalInvariantError,
    InvalidInput,
    NotPairwiseCoprime,
    TooSmall,
    WholeN,
)
from .fibers import TruncationBounds, enumerate_fiber
from .multiples import MultipleContext, max_multiples


@dataclass(frozen=True)
class ApexWitness:
    """One Apéry membership check: does sum_{j != i} a_j lie in Ap(S, a_i)?"""

    index: int
    generator: int
    partner_sum: int
    in_apery: bool


@dataclass(frozen=True)
class RankReport:
    semigroup: NumericalSemigroup
    condition_holds: bool
    witnesses: tuple[ApexWitness, ...]
    multiplicity_bound_ok: bool


def full_rank_condition(S: NumericalSemigroup) -> RankReport:
    """Check the Apéry sufficient condition for full quotient rank.

    condition_holds = True is a proof; False proves nothing.  When the
    condition holds, the multiplicity is at least 2^(e-1).
    """
    if S.is_whole_n:
        raise WholeN("quotient rank analysis is undefined for the whole of ℕ")
    total = sum(S.msg)
    witnesses = []
    for i, a in enumerate(S.msg):
        w = total - a
        in_apery = S.contains(w) and not S.contains(w - a)
        witnesses.append(ApexWitness(i, a, w, in_apery))
    holds = all(w.in_apery for w in witnesses)
    bound_ok = not holds or S.multiplicity >= 2 ** (S.embedding_dimension - 1)
    return RankReport(S, holds, tuple(witnesses), bound_ok)


@dataclass(frozen=True)
class UniqueBettiSpec:
    """Pairwise-coprime c_1, ..., c_e ≥ 2; generators are the products
    of all c_j but one."""

    c: tuple[int, ...]

    def __post_init__(self):
        if len(self.c) < 2:
            raise TooSmall("need at least two factors")
        if any(v < 2 for v in self.c):
            raise TooSmall(f"every factor must be at least 2, got {self.c}")
        for a, b in combinations(self.c, 2):
            if gcd(a, b) != 1:
                raise NotPairwiseCoprime(f"gcd({a}, {b}) != 1")

    @property
    def msg_out(self) -> tuple[int, ...]:
        p = prod(self.c)
        return tuple(sorted(p // v for v in self.c))


def unique_betti(spec: UniqueBettiSpec) -> NumericalSemigroup:
    """The semigroup generated by the complementary products of spec.c.

    Its minimal generators are exactly those products and it always has
    full quotient rank (asserted through the Apéry condition).
    """
    S = from_generators(spec.msg_out)
    if S.msg != spec.msg_out:
        raise InternalInvariantError(
            f"derived generators {spec.msg_out} are not minimal for {S}"
        )
    if not full_rank_condition(S).condition_holds:
        raise InternalInvariantError(f"{S} fails the full-rank condition")
    return S


def unique_betti_apery(spec: UniqueBettiSpec, i: int) -> tuple[int, ...]:
    """Ap(S, a_i) = {sum u_j a_j | 0 ≤ u_j ≤ c_j - 1, j != i}, 0-based i.

    The bound c_j - 1 is forced: the Apéry set has exactly a_i elements,
    which is the number of coefficient tuples below it.
    """
    cs = spec.c
    if not 0 <= i < len(cs):
        raise InvalidInput(f"index {i} out of range for {cs}")
    p = prod(cs)
    gens = {j: p // cs[j] for j in range(len(cs)) if j != i}
    values = {
        sum(u * gens[j] for u, j in zip(us, gens))
        for us in product(*(range(cs[j]) for j in gens))
    }
    if len(values) != p // cs[i]:
        raise InternalInvariantError(f"Apéry coefficient tuples collide for {cs}")
    return tuple(sorted(values))


@dataclass(frozen=True)
class JSubsetWitness:
    """Generators indexed by J sum to a nonnegative combination of the rest."""

    subset: tuple[int, ...]
    coefficients: tuple[tuple[int, int], ...]

    @property
    def target(self) -> int:
        return sum(self.subset)


def j_subset_obstruction(S: NumericalSemigroup) -> JSubsetWitness | None:
    """Search for J with sum_{j in J} a_j = sum_{j not in J} u_j a_j, u != 0.

    A witness is consistent with S not having full quotient rank; finding
    none (the search is exhaustive, the equation bounds the coefficients)
    reports only that no obstruction of this shape exists.
    """
    if S.is_whole_n:
        raise WholeN("quotient rank analysis is undefined for the whole of ℕ")
    msg = S.msg
    e = len(msg)
    for r in range(1, e):
        for idx in combinations(range(e), r):
            others = [msg[j] for j in range(e) if j not in idx]
            target = sum(msg[j] for j in idx)
            coeffs = _coin_decomposition(others, target)
            if coeffs is not None:
                return JSubsetWitness(
                    subset=tuple(msg[j] for j in idx),
                    coefficients=tuple(zip(others, coeffs)),
                )
    return None


def _coin_decomposition(gens: list[int], target: int) -> list[int] | None:
    """Nonnegative u with sum u_i gens_i = target, else None."""
    parent: list[int | None] = [None] * (target + 1)
    reachable = bytearray(target + 1)
    reachable[0] = 1
    for n in range(1, target + 1):
        for k, a in enumerate(gens):
            if a <= n and reachable[n - a]:
                reachable[n] = 1
                parent[n] = k
                break
    if not reachable[target]:
        return None
    coeffs = [0] * len(gens)
    n = target
    while n:
        k = parent[n]
        coeffs[k] += 1
        n -= gens[k]
    return coeffs


def bounded_low_e_multiple_search(
    S: NumericalSemigroup, d_max: int, bounds: TruncationBounds
) -> tuple[int, NumericalSemigroup] | None:
    """First multiple T of S within bounds with e(T) < e(S), scanning d ascending.

    A hit certifies quotient rank < e(S); None proves nothing beyond the
    bounds.  Within one d the hit of least (genus, gap tuple) is returned,
    so the outcome is deterministic.
    """
    if S.is_whole_n:
        raise WholeN("quotient rank analysis is undefined for the whole of ℕ")
    bounds.require_finite()
    e = S.embedding_dimension
    root_cap = bounds.max_nodes if bounds.max_nodes is not None else 4000
    for d in range(1, d_max + 1):
        ctx = MultipleContext(S, d)
        try:
            roots = max_multiples(ctx, node_cap=root_cap).maximals
        except CeilingExceeded:
            # Root discovery blew the budget; this d stays unexplored,
            # which the no-proof contract of a None result already covers.
            continue
        hits = []
        for root in roots:
            tree = enumerate_fiber(ctx, root, bounds)
            hits.extend(
                t for t in tree.semigroups() if t.embedding_dimension < e
            )
        if hits:
            best = min(hits, key=lambda t: (t.genus, t.gaps))
            return d, best
    return None


def random_semigroup(rng: random.Random, max_genus: int) -> NumericalSemigroup:
    """A random numerical semigroup with 1 ≤ genus ≤ max_genus."""
    high = max(6, 3 * max_genus)
    while True:
        k = rng.randint(2, 5)
        gens = rng.sample(range(2, high + 1), k)
        if reduce(gcd, gens) != 1:
            continue
        S = from_generators(gens)
        if 1 <= S.genus <= max_genus:
            return S


SWEEP_FIELDS = (
    "msg",
    "frobenius",
    "genus",
    "embedding_dimension",
    "multiplicity",
    "condition_holds",
    "multiplicity_bound_ok",
    "obstruction_found",
    "low_e_d",
    "low_e_multiple",
)


def rank_sweep(count: int, max_genus: int, seed: int, d_max: int = 3) -> list[dict]:
    """Seeded sweep comparing the Apéry condition against bounded searches.

    Each row records, for one random semigroup, the condition verdict, the
    subset obstruction, and the bounded low-embedding-dimension hunt (over
    d ≤ d_max, fibers truncated at F ≤ d_max·F(S) + 6 and 2000 nodes).  No
    verdict on the open converse is derived, only evidence.
    """
    if count < 0 or max_genus < 1:
        raise InvalidInput("count must be ≥ 0 and max_genus ≥ 1")
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        S = random_semigroup(rng, max_genus)
        report = full_rank_condition(S)
        obstruction = j_subset_obstruction(S)
        bounds = TruncationBounds(
            max_frobenius=d_max * S.frobenius + 6, max_nodes=2000
        )
        low = bounded_low_e_multiple_search(S, d_max, bounds)
        rows.append(
            {
                "msg": ",".join(map(str, S.msg)),
                "frobenius": S.frobenius,
                "genus": S.genus,
                "embedding_dimension": S.embedding_dimension,
                "multiplicity": S.multiplicity,
                "condition_holds": report.condition_holds,
                "multiplicity_bound_ok": report.multiplicity_bound_ok,
                "obstruction_found": obstruction is not None,
                "low_e_d": low[0] if low else "",
                "low_e_multiple": ",".join(map(str, low[1].msg)) if low else "",
            }
        )
    return rows
