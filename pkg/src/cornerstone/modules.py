"""Submodules of free modules: syzygies, free resolutions, module quotients,
subquotient kernels, Ext-annihilators and the equidimensional part.

Vectors are sparse maps component -> Polynomial (components 1-based).
Syzygies are computed by embedding generators v_i + e_{r+i} into a free
module of rank r+k under a component-elimination order, taking a standard
basis and keeping the elements supported entirely in the trailing
components; this works uniformly for global and local ring orders.
"""

from dataclasses import dataclass, field

from . import basis as _basis
from . import ideals as _ideals
from . import staircase
from .basis import _Engine, _vec_to_eterms, _eterms_to_vec
from .orders import ELIM_COMPONENTS, TERM_OVER_POSITION, ModuleOrder, extend_to_module
from .rings import Polynomial, RingError


class ModuleError(ValueError):
    pass


class VectorElem:
    """Sparse element of a free module R^rank; no zero entries stored."""

    __slots__ = ("ring", "rank", "entries")

    def __init__(self, ring, rank, entries):
        self.ring = ring
        self.rank = rank
        clean = {}
        for comp, poly in entries.items():
            if not 1 <= comp <= rank:
                raise ModuleError("component index out of range")
            if poly.terms:
                clean[comp] = poly
        self.entries = clean

    @classmethod
    def from_list(cls, ring, polys):
        return cls(ring, len(polys), {i + 1: p for i, p in enumerate(polys)})

    def dense(self):
        zero = self.ring.zero()
        return [self.entries.get(i + 1, zero) for i in range(self.rank)]

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, VectorElem)
            and self.rank == other.rank
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rank, tuple(sorted((c, p.terms) for c, p in self.entries.items()))))

    def __add__(self, other):
        if self.rank != other.rank:
            raise ModuleError("rank mismatch")
        out = dict(self.entries)
        for c, p in other.entries.items():
            out[c] = out.get(c, self.ring.zero()) + p
        return VectorElem(self.ring, self.rank, out)

    def __sub__(self, other):
        return self + other.scale(self.ring.const(-1))

    def scale(self, poly):
        return VectorElem(
            self.ring, self.rank, {c: poly * p for c, p in self.entries.items()}
        )

    def __repr__(self):
        return f"VectorElem({self.dense()})"


class SubmoduleHandle:
    """Generator list of a submodule of R^rank with a cached standard basis."""

    __slots__ = ("ring", "rank", "gens", "policy", "_basis")

    def __init__(self, ring, rank, gens, policy=TERM_OVER_POSITION):
        gens = tuple(g for g in gens)
        for g in gens:
            if g.rank != rank:
                raise ModuleError("generator rank mismatch")
        self.ring = ring
        self.rank = rank
        self.gens = gens
        self.policy = policy
        self._basis = None

    def module_order(self):
        return extend_to_module(self.ring.order, self.policy)

    def basis(self, cancel=None):
        if self._basis is None:
            live = [g for g in self.gens if not g.is_zero()]
            if not live:
                self._basis = ()
            else:
                self._basis = tuple(
                    std_vectors(live, self.ring, self.rank, self.module_order(), cancel=cancel)
                )
        return self._basis

    def __repr__(self):
        return f"SubmoduleHandle(rank={self.rank}, gens={list(self.gens)})"


def std_vectors(vectors, ring, rank, mord, *, cancel=None, stats=None):
    """Minimal monic standard basis of a list of VectorElems."""
    eng = _Engine(ring, mord, truncate=False, cancel=cancel, stats=stats)
    result = eng.run([_vec_to_eterms(v.entries, mord) for v in vectors if not v.is_zero()])
    return [VectorElem(ring, rank, _eterms_to_vec(t, ring)) for t, _ in result]


def nf_vector(vec, basis_vectors, ring, rank, mord, cancel=None):
    """Weak normal form remainder of a vector against basis vectors."""
    eng = _Engine(ring, mord, truncate=False, cancel=cancel)
    for v in basis_vectors:
        if not v.is_zero():
            eng.add_elem(_vec_to_eterms(v.entries, mord))
    if vec.is_zero():
        return vec
    zero_d = (0,) * ring.nvars
    seeds = [(_vec_to_eterms(vec.entries, mord), eng.skey_mon(zero_d), zero_d, 1)]
    rest, _, _ = eng.nf(seeds)
    return VectorElem(ring, rank, _eterms_to_vec(rest, ring))


def vector_membership(vec, M, cancel=None):
    return nf_vector(vec, list(M.basis(cancel=cancel)), M.ring, M.rank, M.module_order()).is_zero()


def module_equal(M, N, cancel=None):
    if M.rank != N.rank:
        return False
    return all(vector_membership(g, N, cancel) for g in M.gens) and all(
        vector_membership(g, M, cancel) for g in N.gens
    )


# ---------------------------------------------------------------------------
# matrices and resolutions


class PolyMatrix:
    """Dense matrix of polynomials; columns are the module generators."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring, nrows, ncols, rows):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [list(r) for r in rows]

    @classmethod
    def from_columns(cls, ring, nrows, columns):
        rows = [[col.entries.get(i + 1, ring.zero()) for col in columns] for i in range(nrows)]
        return cls(ring, nrows, len(columns), rows)

    def columns(self):
        return [
            VectorElem(
                self.ring,
                self.nrows,
                {i + 1: self.rows[i][j] for i in range(self.nrows)},
            )
            for j in range(self.ncols)
        ]

    def transpose(self):
        rows = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return PolyMatrix(self.ring, self.ncols, self.nrows, rows)

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ModuleError("matrix shape mismatch")
        zero = self.ring.zero()
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(row)
        return PolyMatrix(self.ring, self.nrows, other.ncols, rows)

    def is_zero(self):
        return all(not e.terms for row in self.rows for e in row)

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"


@dataclass
class Resolution:
    """Presentation matrices M_1, M_2, ... with columns of M_{j+1} = syz(columns of M_j)."""

    matrices: list

    def check_complex(self):
        for a, b in zip(self.matrices, self.matrices[1:]):
            if b.ncols and not a.matmul(b).is_zero():
                return False
        return True


def syzygies(M, cancel=None):
    """Relations among the generators of M, as a submodule of R^k, k = #gens."""
    ring = M.ring
    gens = list(M.gens)
    k = len(gens)
    r = M.rank
    if k == 0:
        return SubmoduleHandle(ring, 0, ())
    big = []
    one = ring.one()
    for i, v in enumerate(gens):
        entries = dict(v.entries)
        entries[r + i + 1] = one
        big.append(VectorElem(ring, r + k, entries))
    mord = extend_to_module(ring.order, ELIM_COMPONENTS, r=r)
    sb = std_vectors(big, ring, r + k, mord, cancel=cancel)
    out = []
    for w in sb:
        if all(c > r for c in w.entries):
            out.append(
                VectorElem(ring, k, {c - r: p for c, p in w.entries.items()})
            )
    return SubmoduleHandle(ring, k, out)


def syzygies_of_ideal(I, cancel=None):
    gens = [g for g in I.gens]
    M = SubmoduleHandle(I.ring, 1, [VectorElem.from_list(I.ring, [g]) for g in gens])
    return syzygies(M, cancel=cancel)


def free_resolution(I, length, cancel=None):
    """Matrices M_1..M_length by iterated syzygies; M_1 = row of generators."""
    if length < 1:
        raise ModuleError("resolution length must be >= 1")
    ring = I.ring
    gens = list(I.gens)
    mats = [PolyMatrix(ring, 1, len(gens), [gens])]
    current = SubmoduleHandle(
        ring, 1, [VectorElem.from_list(ring, [g]) for g in gens]
    )
    for _ in range(length - 1):
        if not current.gens:
            mats.append(PolyMatrix(ring, mats[-1].ncols, 0, [[] for _ in range(mats[-1].ncols)]))
            current = SubmoduleHandle(ring, mats[-1].nrows, ())
            continue
        syz = syzygies(current, cancel=cancel)
        live = [g for g in syz.gens if not g.is_zero()]
        mats.append(PolyMatrix.from_columns(ring, len(current.gens), live))
        current = SubmoduleHandle(ring, len(current.gens), live)
    return Resolution(mats)


def module_quotient(M, N, cancel=None):
    """{f : f*N subset of M} as an ideal; via syzygies of (n | gens of M)."""
    if M.rank != N.rank:
        raise ModuleError("module quotient needs equal ranks")
    ring = M.ring
    live = [n for n in N.gens if not n.is_zero()]
    if not live:
        return _ideals.IdealHandle(ring, (ring.one(),))
    result = None
    for n in live:
        cols = [n] + list(M.gens)
        syz = syzygies(SubmoduleHandle(ring, M.rank, cols), cancel=cancel)
        firsts = [s.entries.get(1, ring.zero()) for s in syz.gens]
        part = _ideals.IdealHandle(ring, [f for f in firsts if f.terms])
        result = part if result is None else _ideals.intersect(result, part, cancel=cancel)
    return result if result is not None else _ideals.IdealHandle(ring, (ring.one(),))


def subquotient_kernel(A, B, cancel=None):
    """Kernel of R^a -> R^n/im(B) given by A; generators h with A h in im(B)."""
    if A.nrows != B.nrows:
        raise ModuleError("matrices must share the target rank")
    ring = A.ring
    cols = A.columns() + B.columns()
    syz = syzygies(SubmoduleHandle(ring, A.nrows, cols), cancel=cancel)
    a = A.ncols
    out = []
    for s in syz.gens:
        entries = {c: p for c, p in s.entries.items() if c <= a}
        v = VectorElem(ring, a, entries)
        if not v.is_zero():
            out.append(v)
    return SubmoduleHandle(ring, a, out)


def _free_module(ring, rank):
    one = ring.one()
    return SubmoduleHandle(
        ring, rank, [VectorElem(ring, rank, {i + 1: one}) for i in range(rank)]
    )


def ext_annihilator(I, i, cancel=None):
    """Ann Ext^i(R/I, R) = Im(d^{i-1}) : Ker(d^i), read off a free resolution."""
    if i < 1:
        raise ModuleError("ext index must be >= 1")
    ring = I.ring
    res = free_resolution(I, i + 1, cancel=cancel)
    M_i = res.matrices[i - 1]
    M_next = res.matrices[i]
    if M_i.ncols == 0:
        return _ideals.IdealHandle(ring, (ring.one(),))
    im_cols = M_i.transpose().columns()
    Im = SubmoduleHandle(ring, M_i.ncols, im_cols)
    if M_next.ncols == 0:
        Ker = _free_module(ring, M_i.ncols)
    else:
        dual = M_next.transpose()
        Ker = syzygies(SubmoduleHandle(ring, dual.nrows, dual.columns()), cancel=cancel)
        Ker = SubmoduleHandle(ring, M_i.ncols, Ker.gens)
    return module_quotient(Im, Ker, cancel=cancel)


def equidimensional_part(I, cancel=None):
    """Ideal of the union of the maximal-dimensional components of V(I)."""
    ring = I.ring
    if _ideals.is_trivial(I, cancel=cancel):
        raise ModuleError("equidimensional part of the trivial ideal")
    if not any(g.terms for g in I.gens):
        return _ideals.IdealHandle(ring, I.gens)
    c = ring.nvars - _ideals.krull_dim(I, cancel=cancel)
    if c == 0:
        return _ideals.IdealHandle(ring, I.gens)
    return ext_annihilator(I, c, cancel=cancel)


def module_vdim(M, cancel=None):
    """Staircase count of the module leading ideal, summed over components."""
    basis_vecs = M.basis(cancel=cancel)
    mord = M.module_order()
    per_comp = {c: [] for c in range(1, M.rank + 1)}
    for v in basis_vecs:
        best = None
        for comp, poly in v.entries.items():
            cand = (mord.skey(poly.lm(), comp), poly.lm(), comp)
            if best is None or cand[0] < best[0]:
                best = cand
        per_comp[best[2]].append(best[1])
    total = 0
    for comp, mons in per_comp.items():
        if not mons:
            return float("inf")
        cnt = staircase.staircase_count(mons, M.ring.nvars)
        if cnt == float("inf"):
            return float("inf")
        total += cnt
    return total if M.rank else 0
