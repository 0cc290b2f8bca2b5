"""Combinatorics of monomial ideals: minimal generators, staircase counting,
Krull dimension of the quotient, highest corner.

Monomials are exponent tuples.  Everything here is exact and independent of
the reduction engine; vdim answers are produced by the recursive peeling
count, not by the engine's incremental bookkeeping.
"""

from itertools import combinations
from math import inf


class StaircaseError(ValueError):
    pass


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimal_generators(mons):
    """Minimal generating set of the monomial ideal generated by mons, sorted."""
    mons = sorted(set(tuple(m) for m in mons), key=lambda m: (sum(m), m))
    out = []
    for m in mons:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(out)

def contains(gens, mon):
    return any(divides(g, mon) for g in gens)


def pure_power_bounds(gens, n):
    """bounds[i] = least e with x_i^e in the ideal, or None.

    The staircase (complement) is finite iff every bound exists.
    """
    bounds = [None] * n
    for g in gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
    if any(g == (0,) * n for g in gens):
        bounds = [0] * n
    return bounds


def staircase_count(gens, n):
    """Number of monomials outside the ideal; inf if unbounded.

    Peels the last variable: for each exponent layer e the slice is again a
    monomial ideal in one variable less; layers between the generators'
    distinct last exponents contribute identical slices.
    """
    gens = minimal_generators(gens)
    if any(g == (0,) * n for g in gens):
        return 0
    if n == 0:
        return 1
    bounds = pure_power_bounds(gens, n)
    if any(b is None for b in bounds):
        return inf
    return _count(gens, n)


def _count(gens, n):
    if n == 1:
        return min(g[0] for g in gens) if gens else inf
    top = min(g[-1] for g in gens if all(e == 0 for e in g[:-1]))
    events = sorted({g[-1] for g in gens if g[-1] < top} | {0})
    total = 0
    for idx, e in enumerate(events):
        width = (events[idx + 1] if idx + 1 < len(events) else top) - e
        slice_gens = minimal_generators(g[:-1] for g in gens if g[-1] <= e)
        sub = _count(slice_gens, n - 1) if slice_gens else inf
        if sub is inf:
            return inf
        total += width * sub
    return total


def staircase_monomials(gens, n, cap=4_000_000):
    """All monomials outside the ideal, as a list; error when infinite."""
    gens = minimal_generators(gens)
    bounds = pure_power_bounds(gens, n)
    if any(b is None for b in bounds):
        raise StaircaseError("staircase is infinite: some variable has no pure power")
    size = 1
    for b in bounds:
        size *= max(b, 1)
    if size > cap:
        raise StaircaseError("staircase box too large to enumerate")
    out = [()]
    for i in range(n):
        out = [m + (e,) for m in out for e in range(max(bounds[i], 1))]
        # prune against generators fully supported on the first i+1 variables
        zero_tail = (0,) * (n - i - 1)
        active = [g[: i + 1] for g in gens if g[i + 1 :] == zero_tail]
        if active:
            out = [m for m in out if not any(divides(g, m) for g in active)]
    return out


def highest_corner(gens, n, skey):
    """The order-smallest monomial outside the ideal (local degree orders)."""
    mons = staircase_monomials(gens, n)
    if not mons:
        raise StaircaseError("empty staircase: the ideal contains a unit")
    return max(mons, key=skey)


def quotient_dimension(gens, n):
    """Krull dimension of the quotient by the monomial ideal.

    dim = max |S| over variable subsets S such that no generator's support
    is contained in S (exhaustive search; n is small).
    """
    gens = minimal_generators(gens)
    if any(g == (0,) * n for g in gens):
        raise StaircaseError("dimension of the trivial ideal")
    if not gens:
        return n
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    for size in range(n, 0, -1):
        for sub in combinations(range(n), size):
            s = frozenset(sub)
            if not any(sup <= s for sup in supports):
                return size
    return 0
