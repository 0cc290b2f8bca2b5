"""Singularity invariants: Jacobian ideals, Milnor/Tjurina numbers,
multiplicity, determinacy bounds, Hessian corank, A_k recognition, the
Tjurina-algebra deformation basis, singular loci, and Milnor/Tjurina
numbers of isolated complete intersections.

Invariants of the germ at the origin are computed in a copy of the ring
carrying the local degree ordering ds, whatever the input ring's order.
"""

from dataclasses import dataclass
from itertools import combinations
from math import inf

from . import basis as _basis
from . import ideals as _ideals
from . import modules as _modules
from . import staircase
from .orders import ds
from .rings import Polynomial, RingContext, RingError


class SingularityError(ValueError):
    pass


@dataclass
class InvariantReport:
    milnor: object
    tjurina: object
    mult: int
    determinacy: object
    corank: int


@dataclass
class DeformationBasis:
    """Monomials g_1 = 1, g_2, ..., g_tau spanning the Tjurina algebra.

    Perturbing by sum t_j g_j realizes every deformation of the germ up to
    equivalence; the monomials are the staircase of <f> + jacob(f) under ds.
    """

    monomials: tuple
    tau: int


def local_ring(ring):
    if ring.order.kind == "ds":
        return ring
    return RingContext(ring.char, ring.variables, ds(ring.nvars))


def to_local(f):
    lr = local_ring(f.ring)
    return lr.convert(f) if lr is not f.ring else f


def jacobian_ideal(f):
    ring = f.ring
    return _ideals.IdealHandle(ring, [f.diff(i) for i in range(ring.nvars)])


def milnor_number(f, cancel=None):
    """vdim of the Jacobian ideal under ds; inf for non-isolated singularities."""
    g = to_local(f)
    return _ideals.vdim(jacobian_ideal(g), cancel=cancel)


def tjurina_number(f, cancel=None):
    """vdim of <f> + jacob(f) under ds."""
    g = to_local(f)
    ring = g.ring
    gens = [g] + [g.diff(i) for i in range(ring.nvars)]
    return _ideals.vdim(_ideals.IdealHandle(ring, gens), cancel=cancel)


def multiplicity(f):
    """Minimal total degree of a term (order of the power series)."""
    return f.order_of()


def singular_locus_hypersurface(f):
    """<f> + jacob(f) in f's own ring."""
    ring = f.ring
    return _ideals.IdealHandle(ring, [f] + [f.diff(i) for i in range(ring.nvars)])


def determinacy_bound(f, cancel=None):
    """Total degree of the highest corner of m^2*jacob(f) under ds.

    Every monomial of degree k+1 then lies in the leading ideal, so the
    k-jet of f determines the germ up to right equivalence.
    """
    g = to_local(f)
    ring = g.ring
    n = ring.nvars
    partials = [g.diff(i) for i in range(n)]
    quad = []
    for i in range(n):
        for j in range(i, n):
            quad.append(ring.var(i) * ring.var(j))
    gens = [m * p for m in quad for p in partials if p.terms]
    if not gens:
        raise SingularityError("determinacy bound of a constant germ")
    sb = _ideals.zero_dim_basis(_ideals.IdealHandle(ring, gens), cancel=cancel)
    try:
        corner = _basis.highest_corner(sb)
    except staircase.StaircaseError:
        raise SingularityError(
            "determinacy bound requires an isolated singularity (finite Milnor number)"
        )
    return sum(corner)


def hessian_matrix_at_zero(f):
    """n x n matrix of second partials evaluated at the origin (exact scalars)."""
    ring = f.ring
    n = ring.nvars
    origin = [0] * n
    return [
        [f.diff(i).diff(j).evaluate(origin) for j in range(n)] for i in range(n)
    ]


def hessian_corank(f):
    """(rank, corank) of the Hessian at 0 over the exact coefficient field."""
    ring = f.ring
    if f.constant_term():
        raise SingularityError("hessian corank expects f(0) = 0")
    m = [row[:] for row in hessian_matrix_at_zero(f)]
    n = ring.nvars
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(n):
            if r != rank and m[r][col]:
                factor = ring.coeff_div(m[r][col], m[rank][col])
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
                if ring.char:
                    m[r] = [a % ring.char for a in m[r]]
        rank += 1
    return rank, n - rank


def classify_corank1(f, cancel=None):
    """A_mu when the Hessian corank is at most 1 and mu is finite."""
    g = to_local(f)
    ring = g.ring
    if g.constant_term():
        raise SingularityError("classification expects f(0) = 0")
    origin = [0] * ring.nvars
    if any(g.diff(i).evaluate(origin) for i in range(ring.nvars)):
        raise SingularityError("smooth point: some partial derivative is a unit")
    _, corank = hessian_corank(g)
    if corank <= 1:
        mu = milnor_number(g, cancel=cancel)
        if mu != inf:
            return f"A_{mu}"
    return f"NotClassified(corank={corank})"


def tjurina_basis(f, cancel=None):
    """Standard monomials of L(<f> + jacob f) under ds, 1 first, then descending."""
    g = to_local(f)
    ring = g.ring
    gens = [g] + [g.diff(i) for i in range(ring.nvars)]
    sb = _ideals.zero_dim_basis(_ideals.IdealHandle(ring, gens), cancel=cancel)
    lead = [e.lm() for e in sb.elements]
    try:
        mons = staircase.staircase_monomials(lead, ring.nvars)
    except staircase.StaircaseError:
        raise SingularityError("tjurina basis requires a finite Tjurina number")
    skey = ring.compiled.skey
    mons.sort(key=skey)
    return DeformationBasis(tuple(mons), len(mons))


def invariant_report(f, cancel=None):
    mu = milnor_number(f, cancel=cancel)
    tau = tjurina_number(f, cancel=cancel)
    det = determinacy_bound(f, cancel=cancel) if mu != inf else None
    _, corank = hessian_corank(f)
    return InvariantReport(mu, tau, multiplicity(f), det, corank)


# ---------------------------------------------------------------------------
# isolated complete intersections


def _minors(rows, size, ring):
    """All size x size minors of a matrix of polynomials (cofactor expansion)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    out = []
    for rsel in combinations(range(m), size):
        for csel in combinations(range(n), size):
            out.append(_det([[rows[i][j] for j in csel] for i in rsel], ring))
    return out


def _det(m, ring):
    k = len(m)
    if k == 1:
        return m[0][0]
    total = ring.zero()
    for j in range(k):
        sub = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det(sub, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


def icis_milnor(F, cancel=None):
    """Milnor number of an isolated complete intersection (recursive minors).

    mu_i = d_i - mu_{i-1} with d_i the vdim of the ideal of (f_1..f_{i-1})
    plus all i x i minors of the Jacobian of (f_1..f_i).
    """
    F = [to_local(f) for f in F]
    if not F:
        raise SingularityError("empty map germ")
    ring = F[0].ring
    n = ring.nvars
    mu = 0
    for i in range(1, len(F) + 1):
        jac = [[F[r].diff(j) for j in range(n)] for r in range(i)]
        gens = list(F[: i - 1]) + _minors(jac, i, ring)
        gens = [g for g in gens if g.terms]
        d = _ideals.vdim(_ideals.IdealHandle(ring, gens), cancel=cancel)
        if d == inf:
            raise SingularityError("not an isolated complete intersection (infinite vdim)")
        mu = d - mu
    return mu


def icis_tjurina(F, cancel=None):
    """Module vdim of (f_j e_i : all i,j) + Jacobian columns, under ds."""
    F = [to_local(f) for f in F]
    if not F:
        raise SingularityError("empty map germ")
    ring = F[0].ring
    n = ring.nvars
    k = len(F)
    gens = []
    for i in range(1, k + 1):
        for f in F:
            gens.append(_modules.VectorElem(ring, k, {i: f}))
    for j in range(n):
        col = {i + 1: F[i].diff(j) for i in range(k)}
        gens.append(_modules.VectorElem(ring, k, col))
    M = _modules.SubmoduleHandle(ring, k, gens)
    tau = _modules.module_vdim(M, cancel=cancel)
    if tau == inf:
        raise SingularityError("not an isolated complete intersection (infinite module vdim)")
    return tau


def krull_dim(I, cancel=None):
    return _ideals.krull_dim(I, cancel=cancel)


def vdim(I, cancel=None):
    return _ideals.vdim(I, cancel=cancel)
