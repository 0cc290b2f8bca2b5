"""Ideal-theoretic operations: membership, triviality, intersection, quotient,
saturation, elimination, radical membership, ring-map kernels.

Ideal equality always means mutual generator membership (weak normal form
against a standard basis), never syntactic generator-list equality.
Constructions that need an auxiliary variable prepend a reserved tag
variable ('@t', '@u', ...) ordered by a global dp block, which keeps the
residual variables under the caller's (possibly local) order -- the mixed
ordering scenario.
"""

from . import basis as _basis
from . import orders, staircase
from .orders import OrderSpec, block, dp, make_elim_order
from .reduce import nf_mora
from .rings import Polynomial, RingContext, RingError


class IdealError(ValueError):
    pass


class IdealHandle:
    """Generator list plus a lazily computed, cached standard basis."""

    __slots__ = ("ring", "gens", "_basis")

    def __init__(self, ring, gens):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise IdealError("all generators must be polynomials in the given ring")
        self.ring = ring
        self.gens = gens
        self._basis = None

    def basis(self, cancel=None, stats=None):
        if self._basis is None:
            live = [g for g in self.gens if g.terms]
            if not live:
                self._basis = _basis.StandardBasis(self.ring, (), self.gens)
            else:
                self._basis = _basis.standard_basis(live, cancel=cancel, stats=stats)
        return self._basis

    def cached_basis(self):
        return self._basis

    def with_basis(self, sb):
        self._basis = sb
        return self

    def __repr__(self):
        return f"IdealHandle({list(self.gens)})"


def ideal(ring, gens):
    return IdealHandle(ring, gens)


def membership(f, I, cancel=None):
    """f in I * Loc K[x]?"""
    if f.ring != I.ring:
        raise IdealError("membership: polynomial and ideal rings differ")
    if not f.terms:
        return True
    elements = list(I.basis(cancel=cancel).elements)
    if not elements:
        return False
    return not _basis.nf_fast(f, elements, cancel=cancel).terms


def reduce_by(f, I, cancel=None):
    """Weak normal form remainder of f against the cached basis of I."""
    if f.ring != I.ring:
        raise IdealError("reduce: polynomial and ideal rings differ")
    elements = list(I.basis(cancel=cancel).elements)
    if not elements:
        return f
    return _basis.nf_fast(f, elements, cancel=cancel)


def is_trivial(I, cancel=None):
    """1 in I, i.e. the basis contains a unit (an element with lm = 1)."""
    zero_mon = (0,) * I.ring.nvars
    return any(g.lm() == zero_mon for g in I.basis(cancel=cancel).elements)


def ideal_equal(I, J, cancel=None):
    return all(membership(g, J, cancel) for g in I.gens) and all(
        membership(g, I, cancel) for g in J.gens
    )


def contains_ideal(I, J, cancel=None):
    """J subset of I."""
    return all(membership(g, I, cancel) for g in J.gens)


# ---------------------------------------------------------------------------
# tag-variable machinery


def _tag_name(ring):
    for name in ("@t", "@u", "@v", "@w"):
        if name not in ring.variables:
            return name
    raise IdealError("no free tag variable name")


def _tag_ring(ring):
    """Ring with a fresh tag variable prepended, tag block global dp."""
    name = _tag_name(ring)
    order = block((dp(1), 1), (ring.order, ring.nvars))
    return RingContext(ring.char, (name,) + ring.variables, order)


def _lift(f, ext):
    """Reinterpret f in the tag-extended ring (tag exponent 0)."""
    return Polynomial(ext, tuple(((0,) + m, ext.coeff(c)) for m, c in f.terms))


def _project_tag_free(elements, ring):
    """Keep elements free of the tag variable; drop the tag coordinate."""
    out = []
    for g in elements:
        if all(m[0] == 0 for m, _ in g.terms):
            out.append(Polynomial(ring, tuple((m[1:], c) for m, c in g.terms)))
    return out


def intersect(I, J, cancel=None):
    """Generators of I cap J via a global tag block: basis of t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise IdealError("intersect: rings differ")
    ring = I.ring
    ext = _tag_ring(ring)
    t = ext.var(0)
    gens = [t * _lift(g, ext) for g in I.gens if g.terms]
    gens += [(ext.one() - t) * _lift(g, ext) for g in J.gens if g.terms]
    if not gens:
        return IdealHandle(ring, ())
    sb = _basis.standard_basis(gens, cancel=cancel)
    return IdealHandle(ring, _project_tag_free(sb.elements, ring))


def quotient(I, J, cancel=None):
    """I : J = intersection over generators g of J of (I : g).

    I : g comes from intersect(I, <g>); every generator h of the intersection
    satisfies u*h' = a*g with a unit u (weak normal form against {g}), and
    <h/g> = <a> in Loc K[x], so the Mora multiplier is the quotient generator.
    """
    if I.ring != J.ring:
        raise IdealError("quotient: rings differ")
    ring = I.ring
    live = [g for g in J.gens if g.terms]
    if not live:
        return IdealHandle(ring, (ring.one(),))
    result = None
    for g in live:
        inter = intersect(I, IdealHandle(ring, (g,)), cancel=cancel)
        qgens = []
        for h in inter.gens:
            rec = nf_mora(h, [g])
            if rec.remainder.terms:
                raise IdealError(
                    "quotient: intersection generator not divisible by g "
                    "(internal invariant violation)"
                )
            qgens.append(rec.multipliers[0])
        part = IdealHandle(ring, [q for q in qgens if q.terms])
        result = part if result is None else intersect(result, part, cancel=cancel)
    return result


def saturate(I, J, cancel=None, max_steps=64):
    """Iterate I : J until stable (two-sided membership); returns (ideal, steps)."""
    current = I
    for k in range(max_steps):
        nxt = quotient(current, J, cancel=cancel)
        if ideal_equal(nxt, current, cancel=cancel):
            return current, k
        current = nxt
    raise IdealError("saturation did not stabilize within the iteration cap")


def eliminate(I, variables, cancel=None):
    """Basis of I under an elimination order, filtered to the kept variables.

    variables: names or indices to eliminate.  The eliminated block is
    globally ordered (dp) by construction; the rest keeps the ring order.
    """
    ring = I.ring
    idxs = set()
    for v in variables:
        if isinstance(v, str):
            if v not in ring.variables:
                raise IdealError(f"unknown variable {v!r}")
            idxs.add(ring.variables.index(v))
        else:
            if not 0 <= v < ring.nvars:
                raise IdealError("variable index out of range")
            idxs.add(int(v))
    if not idxs:
        return IdealHandle(ring, I.gens)
    espec = make_elim_order(ring.order, idxs)
    ering = RingContext(ring.char, ring.variables, espec)
    live = [ering.convert(g) for g in I.gens if g.terms]
    if not live:
        return IdealHandle(ring, ())
    sb = _basis.standard_basis(live, cancel=cancel)
    kept = []
    for g in sb.elements:
        if all(all(m[i] == 0 for i in idxs) for m, _ in g.terms):
            kept.append(ring.convert(g))
    return IdealHandle(ring, kept)


def radical_membership(f, I, cancel=None):
    """f in sqrt(I) via the trick of adjoining 1 - t*f; global orders only."""
    ring = I.ring
    if orders.classify(ring.order) != orders.GLOBAL:
        raise IdealError("radical membership requires a global ring order")
    if f.ring != ring:
        raise IdealError("radical membership: rings differ")
    if not f.terms:
        return membership(f, I, cancel)
    ext = _tag_ring(ring)
    t = ext.var(0)
    gens = [_lift(g, ext) for g in I.gens if g.terms]
    gens.append(ext.one() - t * _lift(f, ext))
    return is_trivial(IdealHandle(ext, gens), cancel=cancel)


def ring_map_kernel(images, target_ring, cancel=None):
    """Kernel of target_ring -> source ring, y_i -> images[i].

    Both orders must be global.  Variable names of the two rings must be
    disjoint; the answer is an ideal of target_ring.
    """
    if not images:
        return IdealHandle(target_ring, ())
    source = images[0].ring
    for g in images:
        if g.ring != source:
            raise IdealError("map images live in different rings")
    if len(images) != target_ring.nvars:
        raise IdealError("need one image per target variable")
    if orders.classify(source.order) != orders.GLOBAL or (
        orders.classify(target_ring.order) != orders.GLOBAL
    ):
        raise IdealError("ring-map kernel requires global orders")
    if set(source.variables) & set(target_ring.variables):
        raise IdealError("source and target variable names must be disjoint")
    nx, ny = source.nvars, target_ring.nvars
    comb = RingContext(
        source.char,
        source.variables + target_ring.variables,
        block((dp(nx), nx), (target_ring.order, ny)),
    )
    gens = []
    for i, img in enumerate(images):
        y_i = comb.var(nx + i)
        lifted = Polynomial(
            comb, tuple((m + (0,) * ny, comb.coeff(c)) for m, c in img.terms)
        )
        gens.append(y_i - lifted)
    sb = _basis.standard_basis(gens, cancel=cancel)
    kept = []
    for g in sb.elements:
        if all(all(m[i] == 0 for i in range(nx)) for m, _ in g.terms):
            kept.append(
                Polynomial(target_ring, tuple((m[nx:], c) for m, c in g.terms))
            )
    out = IdealHandle(target_ring, kept)
    return out


def krull_dim(I, cancel=None):
    """Krull dimension of Loc K[x]/I from the leading monomial ideal."""
    sb = I.basis(cancel=cancel)
    gens = [g.lm() for g in sb.elements]
    return staircase.quotient_dimension(gens, I.ring.nvars)


def zero_dim_basis(I, cancel=None, stats=None):
    """Cached basis, preferring the bounded-staircase route under ds.

    The certified pure-power augmentation is a genuine standard basis of I,
    so it is safe to cache on the handle; for ideals that turn out not to be
    zero-dimensional it falls back to the classical computation.
    """
    if I._basis is None:
        live = [g for g in I.gens if g.terms]
        if live and I.ring.order.kind == "ds":
            I._basis = _basis.local_zero_dim_basis(live, cancel=cancel, stats=stats)
        else:
            return I.basis(cancel=cancel, stats=stats)
    return I._basis


def vdim(I, cancel=None, stats=None):
    """K-dimension of Loc K[x]/I: staircase count of the leading ideal."""
    sb = zero_dim_basis(I, cancel=cancel, stats=stats)
    gens = [g.lm() for g in sb.elements]
    return staircase.staircase_count(gens, I.ring.nvars)
