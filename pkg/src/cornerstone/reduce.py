"""s-polynomials and weak normal forms.

nf_buchberger: classical division for well-orderings (unit = 1).
nf_mora: division with unit for arbitrary semigroup orderings; reductions by
intermediate elements are expanded back into contributions of f and G, so the
returned record always satisfies  u*f = sum a_i*g_i + h  exactly.
"""

from dataclasses import dataclass

from . import orders
from .rings import Polynomial, RingError


class ReductionError(ValueError):
    pass


@dataclass
class ReductionRecord:
    """Weak normal form h of f against G with certificate u*f = sum a_i g_i + h."""

    remainder: Polynomial
    unit: Polynomial
    multipliers: tuple

    def check(self, f, G):
        """Assert the four record invariants exactly; used by the test suite."""
        ring = f.ring
        lhs = self.unit * f
        rhs = self.remainder
        for a, g in zip(self.multipliers, G):
            rhs = rhs + a * g
        assert lhs == rhs, "certificate identity failed"
        assert self.unit.terms and self.unit.lm() == (0,) * ring.nvars, "unit must have lm 1"
        if self.remainder:
            hm = self.remainder.lm()
            assert not any(
                g.terms and _divides(g.lm(), hm) for g in G
            ), "remainder lead is reducible"
        if lhs:
            skey = ring.compiled.skey
            top = skey(lhs.lm())
            for a, g in zip(self.multipliers, G):
                ag = a * g
                if ag:
                    assert skey(ag.lm()) >= top, "standard representation violated"
        return True


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def spoly(f, g):
    """x^(c-a) f - (lc f/lc g) x^(c-b) g, c = lcm(a, b); cancels both leads."""
    if not f.terms or not g.terms:
        raise ReductionError("spoly of zero polynomial")
    f._check(g)
    ring = f.ring
    am, bm = f.lm(), g.lm()
    gamma = tuple(max(x, y) for x, y in zip(am, bm))
    mf = ring.monomial(tuple(c - a for c, a in zip(gamma, am)))
    mg = ring.monomial(tuple(c - b for c, b in zip(gamma, bm)), ring.coeff_div(f.lc(), g.lc()))
    return mf * f - mg * g


def nf_buchberger(f, G, tail=False):
    """Normal form for a global ring order; divisor = first g whose lm divides.

    With tail=True the remainder is fully reduced (every monomial
    irreducible), which is what interreduction of a Groebner basis needs.
    """
    ring = f.ring
    if orders.classify(ring.order) != orders.GLOBAL:
        raise ReductionError("nf_buchberger requires a global (well-)ordering")
    mults = [ring.zero() for _ in G]
    done = ring.zero()  # accumulated irreducible head (tail mode)
    h = f
    while h.terms:
        hm = h.lm()
        g_idx = next(
            (i for i, g in enumerate(G) if g.terms and _divides(g.lm(), hm)), None
        )
        if g_idx is None:
            if not tail:
                break
            lt = ring.monomial(hm, h.lc())
            done = done + lt
            h = h - lt
            continue
        g = G[g_idx]
        mult = ring.monomial(
            tuple(a - b for a, b in zip(hm, g.lm())), ring.coeff_div(h.lc(), g.lc())
        )
        mults[g_idx] = mults[g_idx] + mult
        h = h - mult * g
    return ReductionRecord(done + h, ring.one(), tuple(mults))


def nf_mora(f, G):
    """Weak normal form with unit for any semigroup ordering.

    T starts as G; while the lead of h is divisible by some lm(g), g in T,
    reduce by the divisor of minimal ecart (tie: earliest in T), first
    appending a snapshot of h to T when every candidate has bigger ecart
    than h.  Snapshots carry their own certificates and never escape the call.
    """
    ring = f.ring
    one = ring.one()
    zero = ring.zero()
    skey = ring.compiled.skey

    # T entries: (poly, ecart, lm, unit-part, multiplier-vector)
    T = []
    for i, g in enumerate(G):
        if g.terms:
            mv = tuple(one if j == i else zero for j in range(len(G)))
            T.append((g, g.ecart(), g.lm(), zero, mv))

    h, u = f, one
    mults = [zero] * len(G)
    while h.terms:
        hm = h.lm()
        best = None
        for idx, (g, ec, gm, _, _) in enumerate(T):
            if _divides(gm, hm) and (best is None or ec < T[best][1]):
                best = idx
        if best is None:
            break
        g, g_ecart, gm, g_unit, g_mults = T[best]
        if g_ecart > h.ecart():
            # remember h itself as an admissible reducer for later leads
            T.append((h, h.ecart(), hm, u, tuple(mults)))
        mult = ring.monomial(tuple(a - b for a, b in zip(hm, gm)), ring.coeff_div(h.lc(), g.lc()))
        h = h - mult * g
        u = u - mult * g_unit
        mults = [a - mult * b for a, b in zip(mults, g_mults)]
    # snapshots store (u_s, a_s) with h_s = u_s*f + sum a_s g  -- note the sign
    # convention: for original generators unit-part 0 gives u unchanged.
    return ReductionRecord(h, u, tuple(-a for a in mults))


def divide_exact(f, g):
    """Quotient f/g when g divides f exactly; error otherwise."""
    ring = f.ring
    if not g.terms:
        raise ReductionError("division by zero polynomial")
    q = ring.zero()
    h = f
    while h.terms:
        hm, gm = h.lm(), g.lm()
        if not _divides(gm, hm):
            raise ReductionError("inexact polynomial division")
        t = ring.monomial(tuple(a - b for a, b in zip(hm, gm)), ring.coeff_div(h.lc(), g.lc()))
        q = q + t
        h = h - t * g
    return q
