"""Brute-force oracles used by the tests, written apart from the library code paths."""

import itertools


def sorted_by_age_brute(lst):
    """Every distinct permutation of lst whose ages never decrease."""
    out = set()
    for perm in itertools.permutations(lst):
        if all(perm[i].age <= perm[i + 1].age for i in range(len(perm) - 1)):
            out.add(tuple(perm))
    return out


def has_blocking_pair(cand, comp, matching):
    partner_c = dict(matching)
    partner_k = {k: c for c, k in matching}
    n = len(cand)
    for c in range(n):
        for k in range(n):
            if partner_c[c] == k:
                continue
            if cand[c].index(k) < cand[c].index(partner_c[c]) and comp[k].index(c) < comp[k].index(partner_k[k]):
                return True
    return False


def stable_matchings_brute(cand, comp):
    n = len(cand)
    return {
        frozenset(enumerate(perm))
        for perm in itertools.permutations(range(n))
        if not has_blocking_pair(cand, comp, list(enumerate(perm)))
    }


def linear_extensions_brute(vertices, edges):
    out = set()
    for perm in itertools.permutations(sorted(vertices)):
        pos = {v: i for i, v in enumerate(perm)}
        if all(pos[u] < pos[v] for u, v in edges):
            out.add(perm)
    return out
