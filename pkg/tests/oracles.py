"""Brute-force reference computations used to pin expected test values.

Everything here favors the most direct computation over speed, and shares
no code with the package under test beyond reading plain Cayley tables.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_homomorphism(table, perm) -> bool:
    n = len(table)
    for a in range(n):
        for b in range(n):
            if perm[table[a][b]] != table[perm[a]][perm[b]]:
                return False
    return True


def brute_automorphisms(table) -> list[tuple[int, ...]]:
    """Every automorphism, by filtering all n! permutations.

    A homomorphic permutation necessarily fixes 0 (the identity maps to an
    idempotent, and the identity is the only one), so permutations moving 0
    are skipped up front purely as a speedup.
    """
    n = len(table)
    out = []
    for perm in itertools.permutations(range(n)):
        if perm[0] != 0:
            continue
        if is_homomorphism(table, perm):
            out.append(perm)
    return sorted(out)


def brute_fixed_pairs(table, h_members, auts) -> int:
    return sum(1 for x in h_members for a in auts if a[x] == x)


def brute_pr(table, h_members, auts) -> Fraction:
    """Fixed-pair probability over H x auts, counted pair by pair."""
    return Fraction(brute_fixed_pairs(table, h_members, auts), len(h_members) * len(auts))


def brute_commuting_pr(table, h_members) -> Fraction:
    n = len(table)
    hits = sum(1 for x in h_members for y in range(n) if table[x][y] == table[y][x])
    return Fraction(hits, len(h_members) * n)


def brute_inverse(table, a: int) -> int:
    return next(b for b in range(len(table)) if table[a][b] == 0 and table[b][a] == 0)


def is_subgroup(table, subset) -> bool:
    sset = set(subset)
    if 0 not in sset:
        return False
    for a in subset:
        if brute_inverse(table, a) not in sset:
            return False
        for b in subset:
            if table[a][b] not in sset:
                return False
    return True


def brute_subgroups(table) -> list[tuple[int, ...]]:
    """All subgroups by filtering every subset whose size divides the order."""
    n = len(table)
    out = []
    for size in divisors(n):
        for combo in itertools.combinations(range(1, n), size - 1):
            cand = (0,) + combo
            if is_subgroup(table, cand):
                out.append(cand)
    return sorted(out, key=lambda s: (len(s), s))


def brute_closure(table, seed) -> tuple[int, ...]:
    """Generated subgroup by repeated pairwise products to a fixed point."""
    members = {0} | set(seed)
    while True:
        new = {table[a][b] for a in members for b in members} - members
        if not new:
            return tuple(sorted(members))
        members |= new


def brute_orbit(table, auts, x) -> tuple[int, ...]:
    return tuple(sorted({a[x] for a in auts}))


def brute_autocommutators(table, h_members, auts) -> tuple[int, ...]:
    out = set()
    for x in h_members:
        xi = brute_inverse(table, x)
        for a in auts:
            out.add(table[xi][a[x]])
    return tuple(sorted(out))
