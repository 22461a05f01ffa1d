"""Brute-force enumerators and checkers, slow by design and independent of
the production algorithms; every other module's property tests lean on them.

The workhorse is a recursive descent over gap subsets of [1, limit]: each
position is decided member-or-gap in increasing order while an integer
bitmask tracks every pairwise sum of members, so a position may become a gap
only when no two members add up to it.  Censuses, bounded multiple
enumeration and over-semigroup listings are all instances of that descent
with different forced/allowed position sets.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .core import NumericalSemigroup, WHOLE_N, _from_gap_tuple, from_gaps
from .errors import CeilingExceeded, InternalInvariantError, InvalidInput, NotClosed
from .multiples import MultipleContext, quotient

DEFAULT_CENSUS_CEILING = 20
CEILING_ENV_VAR = "NUMSGPS_ORACLE_CEILING"


def census_ceiling() -> int:
    raw = os.environ.get(CEILING_ENV_VAR)
    return int(raw) if raw else DEFAULT_CENSUS_CEILING


@dataclass(frozen=True)
class EnumerationBudget:
    """Hard, finite limits for brute-force enumeration."""

    max_frobenius: int
    max_genus: int
    hard_node_limit: int

    def __post_init__(self):
        for name in ("max_frobenius", "max_genus", "hard_node_limit"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidInput(f"{name} must be a finite integer, got {v!r}")


def _closed_gap_sets(
    limit: int,
    allowed_mask: int,
    forced_mask: int,
    node_limit: int | None = None,
) -> list[tuple[int, ...]]:
    """All gap sets G with forced ⊆ G ⊆ forced ∪ allowed ⊆ [1, limit] whose
    complement in ℕ is additively closed.

    Positions outside allowed ∪ forced are members.  ``gen`` holds every sum
    of two nonzero members decided so far (bits above limit dropped), so a
    gap is legal exactly while its gen bit is clear, and a member is refused
    as soon as it would force a sum onto a forced gap.
    """
    full = (1 << (limit + 1)) - 1
    gapable = allowed_mask | forced_mask
    out: list[tuple[int, ...]] = []
    gaps: list[int] = []

    def rec(pos: int, members: int, gen: int):
        if node_limit is not None and len(out) > node_limit:
            return
        if pos > limit:
            out.append(tuple(gaps))
            return
        bit = 1 << pos
        if not (forced_mask & bit):
            new_gen = (gen | (((members & ~1) | bit) << pos)) & full
            if not (new_gen & forced_mask):
                rec(pos + 1, members | bit, new_gen)
        if (gapable & bit) and not (gen & bit):
            gaps.append(pos)
            rec(pos + 1, members, gen)
            gaps.pop()

    rec(1, 1, 0)
    return out


def _canonical(semigroups) -> tuple[NumericalSemigroup, ...]:
    return tuple(sorted(semigroups, key=lambda s: (s.genus, s.gaps)))


def all_with_frobenius(f: int) -> tuple[NumericalSemigroup, ...]:
    """Every numerical semigroup with Frobenius number exactly f.

    Descent over gap subsets of [1, f] containing f.  Refuses f above the
    configured ceiling (default 20, override via NUMSGPS_ORACLE_CEILING).
    """
    if f < 1:
        raise InvalidInput(f"the Frobenius number must be positive, got {f}")
    ceiling = census_ceiling()
    if f > ceiling:
        raise CeilingExceeded(f"census for f={f} exceeds ceiling {ceiling}")
    sets = _closed_gap_sets(f, (1 << f) - 2, 1 << f)
    return _canonical(_from_gap_tuple(g) for g in sets)


def all_with_frobenius_genus_tree(f: int) -> tuple[NumericalSemigroup, ...]:
    """Second, independent census: grow semigroups from ℕ by removing one
    minimal generator above the Frobenius number at a time."""
    if f < 1:
        raise InvalidInput(f"the Frobenius number must be positive, got {f}")
    results = []
    frontier = [WHOLE_N]
    while frontier:
        nxt = []
        for S in frontier:
            if S.frobenius == f:
                results.append(S)
                continue
            for x in S.msg:
                if S.frobenius < x <= f:
                    nxt.append(_from_gap_tuple(S.gaps + (x,)))
        frontier = nxt
    return _canonical(results)


def semigroups_by_genus(max_genus: int) -> tuple[NumericalSemigroup, ...]:
    """All numerical semigroups with genus ≤ max_genus (ℕ included)."""
    out = [WHOLE_N]
    frontier = [WHOLE_N]
    for _ in range(max_genus):
        nxt = []
        for S in frontier:
            for x in S.msg:
                if x > S.frobenius:
                    nxt.append(_from_gap_tuple(S.gaps + (x,)))
        out.extend(nxt)
        frontier = nxt
    return _canonical(out)


def all_multiples_bounded(
    ctx: MultipleContext, budget: EnumerationBudget
) -> tuple[NumericalSemigroup, ...]:
    """Every d-multiple T of S with F(T) ≤ budget.max_frobenius and
    genus ≤ budget.max_genus, straight from the gap sandwich.

    Scaled gaps are forced gaps, scaled members are forced members, and the
    remaining positions up to max_frobenius are free.
    """
    fmax = budget.max_frobenius
    forced = 0
    for h in ctx.scaled_gaps:
        if h > fmax:
            return ()
        forced |= 1 << h
    allowed = 0
    for n in range(1, fmax + 1):
        if not (forced >> n & 1) and not ctx.in_scaled_semigroup(n):
            allowed |= 1 << n
    sets = _closed_gap_sets(fmax, allowed, forced, node_limit=budget.hard_node_limit)
    if len(sets) > budget.hard_node_limit:
        raise CeilingExceeded(
            f"more than {budget.hard_node_limit} multiples below F={fmax}"
        )
    return _canonical(
        _from_gap_tuple(g) for g in sets if len(g) <= budget.max_genus
    )


def oversemigroups(S: NumericalSemigroup) -> tuple[NumericalSemigroup, ...]:
    """All numerical semigroups containing S (finitely many; S and ℕ included)."""
    allowed = 0
    for h in S.gaps:
        allowed |= 1 << h
    return _canonical(
        _from_gap_tuple(g) for g in _closed_gap_sets(max(S.frobenius, 0), allowed, 0)
    )


def is_irreducible_bruteforce(S: NumericalSemigroup) -> bool:
    """Irreducibility from the definition: no two strictly larger semigroups
    intersect to S (their gap sets would union to gaps(S))."""
    target = S.gap_set
    strict = [T.gap_set for T in oversemigroups(S) if T != S]
    return not any(
        g1 | g2 == target for g1, g2 in combinations_with_replacement(strict, 2)
    )


def theta_bruteforce(ctx: MultipleContext, T: NumericalSemigroup) -> int | None:
    """θ from the definition: the largest gap x of T with T ∪ {x} an
    additively closed d-multiple of S, else None."""
    for x in sorted(T.gaps, reverse=True):
        remaining = tuple(h for h in T.gaps if h != x)
        try:
            candidate = from_gaps(remaining)
        except NotClosed:
            continue
        if quotient(candidate, ctx.d) == ctx.semigroup:
            return x
    return None


def children_bruteforce(
    ctx: MultipleContext, T: NumericalSemigroup
) -> tuple[tuple[int, NumericalSemigroup], ...]:
    """Fiber-tree children from the definitions only: all T ∖ {x} that are
    d-multiples whose brute-force θ equals x."""
    out = []
    for x in T.msg:
        child = _from_gap_tuple(T.gaps + (x,))
        if quotient(child, ctx.d) != ctx.semigroup:
            continue
        if theta_bruteforce(ctx, child) == x:
            out.append((x, child))
    return tuple(out)


def _monoid_members_up_to(ctx: MultipleContext, extra_gens, bound: int) -> frozenset[int]:
    """Members of ⟨extra_gens⟩ + d·S within [0, bound]."""
    gens = sorted(set(extra_gens) | {ctx.d * a for a in ctx.semigroup.msg})
    gens = [a for a in gens if a <= bound]
    reach = bytearray(bound + 1)
    reach[0] = 1
    for n in range(1, bound + 1):
        if any(a <= n and reach[n - a] for a in gens):
            reach[n] = 1
    return frozenset(n for n in range(bound + 1) if reach[n])


def brute_minimal_md_system(ctx: MultipleContext, elements) -> tuple[int, ...]:
    """Lexicographically least, minimum-cardinality X with ⟨X⟩ + d·S equal to
    the monoid whose members up to their maximum are ``elements``.

    Any generating X must contain every atom of the monoid outside d·S (an
    atom is no sum of two nonzero members, so it can only enter as a bare
    generator), which pins the search; extras are tried in lexicographic
    order by ascending cardinality if that core ever falls short.
    """
    elems = sorted(set(elements))
    if not elems or elems[0] != 0:
        raise InvalidInput("element list must contain 0")
    eset = frozenset(elems)
    bound = elems[-1]
    nonzero = [m for m in elems if m > 0]
    atoms = [
        m
        for m in nonzero
        if not any(a <= m // 2 and (m - a) in eset for a in nonzero)
    ]
    base = [a for a in atoms if not ctx.in_scaled_semigroup(a)]
    if _monoid_members_up_to(ctx, base, bound) == eset:
        for a in base:
            rest = [b for b in base if b != a]
            if _monoid_members_up_to(ctx, rest, bound) == eset:
                raise InternalInvariantError(f"atom {a} is redundant in {base}")
        return tuple(base)
    pool = [m for m in nonzero if not ctx.in_scaled_semigroup(m) and m not in base]
    for k in range(1, len(pool) + 1):
        for extra in combinations(pool, k):
            xs = sorted(base + list(extra))
            if _monoid_members_up_to(ctx, xs, bound) == eset:
                return tuple(xs)
    raise InvalidInput("element list is not a monoid of the form ⟨X⟩ + d·S")
