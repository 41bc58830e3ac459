"""Independent brute-force oracles used to cross-check the library.

These deliberately avoid the library's own algorithms: covers come from
enumerating every subset of the support, memberships from raw divisibility.
"""

from itertools import combinations

from genlink import Monomial


def support_sets(ideal):
    return [frozenset(g.support()) for g in ideal.gens]


def brute_minimal_covers(ideal):
    """All minimal transversals of the generator supports, by subset enumeration."""
    supports = support_sets(ideal)
    vertices = sorted(set().union(*supports))
    assert len(vertices) <= 14, "brute force capped at 14 variables"
    covers = []
    for k in range(len(vertices) + 1):
        for combo in combinations(vertices, k):
            s = frozenset(combo)
            if all(s & e for e in supports):
                covers.append(s)
    return {c for c in covers if not any(o < c for o in covers)}


def brute_is_cover(subset, ideal):
    return all(set(subset) & g.support() for g in ideal.gens)


def all_monomials(variables, max_degree):
    """Every monomial over the variables of total degree at most max_degree."""
    vs = list(variables)

    def rec(i, budget):
        if i == len(vs):
            yield ()
            return
        for e in range(budget + 1):
            for rest in rec(i + 1, budget - e):
                yield ((vs[i], e),) + rest if e else rest

    for exps in rec(0, max_degree):
        yield Monomial(exps)
