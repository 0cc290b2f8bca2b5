"""Monomial orderings: comparators, classification, elimination/block orders, module orders.

Every ordering is compiled to a "sort key": an integer tuple that is a linear
function of the exponent vector and whose ascending (tuple) order is the
*descending* monomial order.  Sorting term lists by sort key therefore puts
the leading term first, and multiplying a monomial by x^d adds skey(d)
componentwise, which is what the reduction engine relies on.
"""

from dataclasses import dataclass
from fractions import Fraction

LT, EQ, GT = -1, 0, 1

GLOBAL = "global"
LOCAL = "local"
MIXED = "mixed"

TERM_OVER_POSITION = "term_over_position"
ELIM_COMPONENTS = "eliminate_components"


class OrderError(ValueError):
    """Ill-formed ordering specification or arity mismatch."""


@dataclass(frozen=True)
class OrderSpec:
    """Declarative monomial-ordering description.

    kind is one of "lp", "dp", "ds" (named forms), "block" or "matrix".
    Block components cover consecutive variable ranges and their sizes sum
    to the arity; a matrix must be square of full rank over Q.
    """

    kind: str
    arity: int
    blocks: tuple = ()
    matrix: tuple = ()

    def __post_init__(self):
        if self.arity < 1:
            raise OrderError("ordering needs at least one variable")
        if self.kind in ("lp", "dp", "ds"):
            return
        if self.kind == "block":
            if not self.blocks:
                raise OrderError("empty block order")
            if sum(size for _, size in self.blocks) != self.arity:
                raise OrderError("block sizes must sum to the arity")
            for sub, size in self.blocks:
                if sub.arity != size:
                    raise OrderError("block sub-order arity mismatch")
        elif self.kind == "matrix":
            m = self.matrix
            if len(m) != self.arity or any(len(row) != self.arity for row in m):
                raise OrderError("order matrix must be square")
            if _rank(m) != self.arity:
                raise OrderError("order matrix must have full rank")
        else:
            raise OrderError(f"unknown ordering kind {self.kind!r}")

    def __repr__(self):
        if self.kind in ("lp", "dp", "ds"):
            return f"{self.kind}({self.arity})"
        if self.kind == "block":
            return "block(" + ",".join(repr(s) for s, _ in self.blocks) + ")"
        return f"matrix({self.matrix})"


def lp(n):
    return OrderSpec("lp", n)


def dp(n):
    return OrderSpec("dp", n)


def ds(n):
    return OrderSpec("ds", n)


def block(*parts):
    """Block order from (OrderSpec, size) pairs over consecutive variables."""
    parts = tuple((sub, size) for sub, size in parts)
    return OrderSpec("block", sum(size for _, size in parts), blocks=parts)


def matrix_order(rows):
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    return OrderSpec("matrix", len(rows), matrix=rows)


def _rank(rows):
    """Rank over Q of an integer matrix (fraction-free elimination)."""
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                a, b = m[rank][c], m[r][c]
                m[r] = [x * a - y * b for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _key_rows(spec):
    """Integer rows of the order key: key(m) = rows @ m, compared lexically."""
    n = spec.arity
    if spec.kind == "lp":
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    if spec.kind in ("dp", "ds"):
        sign = 1 if spec.kind == "dp" else -1
        rows = [[sign] * n]
        for i in range(n - 1, 0, -1):
            rows.append([-1 if j == i else 0 for j in range(n)])
        return rows
    if spec.kind == "matrix":
        return [list(r) for r in spec.matrix]
    rows = []
    offset = 0
    for sub, size in spec.blocks:
        for sub_row in _key_rows(sub):
            row = [0] * n
            row[offset : offset + size] = sub_row
            rows.append(row)
        offset += size
    return rows


class CompiledOrder:
    """An OrderSpec compiled to fast sort-key callables.

    skey(mon) is the negated key; ascending skey = descending monomial order.
    deg_slot tells whether skey[0] is +deg (ds), -deg (dp) or neither (0).
    """

    __slots__ = ("spec", "nvars", "skey", "tag", "deg_slot", "_srows")

    def __init__(self, spec):
        self.spec = spec
        self.nvars = n = spec.arity
        self._srows = tuple(tuple(-v for v in row) for row in _key_rows(spec))
        if spec.kind == "dp":
            self.skey = _skey_dp
            self.deg_slot = -1
        elif spec.kind == "ds":
            self.skey = _skey_ds
            self.deg_slot = 1
        elif spec.kind == "lp":
            self.skey = _skey_lp
            self.deg_slot = 0
        else:
            srows = self._srows
            self.skey = lambda m: tuple(
                sum(r * e for r, e in zip(row, m)) for row in srows
            )
            self.deg_slot = 0
        one = (0,) * n
        k0 = self.skey(one)
        flags = [self.skey(tuple(1 if j == i else 0 for j in range(n))) < k0
                 for i in range(n)]
        if all(flags):
            self.tag = GLOBAL
        elif not any(flags):
            self.tag = LOCAL
        else:
            self.tag = MIXED

    def matrix_skey(self, m):
        """Generic row-based key; used to cross-check the named fast paths."""
        return tuple(sum(r * e for r, e in zip(row, m)) for row in self._srows)


def _skey_dp(m):
    return (-sum(m),) + tuple(m[:0:-1])


def _skey_ds(m):
    return (sum(m),) + tuple(m[:0:-1])


def _skey_lp(m):
    return tuple(-e for e in m)


_compiled_cache = {}


def compile_order(spec):
    co = _compiled_cache.get(spec)
    if co is None:
        co = _compiled_cache[spec] = CompiledOrder(spec)
    return co


def compare(spec, a, b):
    """Compare monomials (exponent tuples); returns LT, EQ or GT."""
    if len(a) != spec.arity or len(b) != spec.arity:
        raise OrderError("monomial arity does not match the ordering")
    ka, kb = compile_order(spec).skey(a), compile_order(spec).skey(b)
    if ka == kb:
        return EQ
    return GT if ka < kb else LT


def classify(spec):
    """global / local / mixed, by comparing every variable against 1."""
    return compile_order(spec).tag


def leading(spec, f):
    """(lc, lm) of a nonzero polynomial under spec (may differ from f's ring order)."""
    if not f.terms:
        raise OrderError("leading term of the zero polynomial")
    skey = compile_order(spec).skey
    mon, coeff = min(f.terms, key=lambda t: skey(t[0]))
    return coeff, mon


def ecart(spec, f):
    """Max term degree minus leading-monomial degree; requires f != 0."""
    if not f.terms:
        raise OrderError("ecart of the zero polynomial")
    _, lm = leading(spec, f)
    return max(sum(m) for m, _ in f.terms) - sum(lm)


def make_elim_order(spec, eliminate):
    """Order whose first block is dp on the eliminated variables.

    Any monomial containing an eliminated variable exceeds any monomial free
    of them; the remaining variables keep spec's comparator.  Returned in
    matrix form (the construction permutes variable ranges, which the block
    form cannot express).
    """
    n = spec.arity
    elim = sorted(set(eliminate))
    if any(i < 0 or i >= n for i in elim):
        raise OrderError("eliminated variable index out of range")
    if not elim:
        return spec
    keep = [i for i in range(n) if i not in elim]
    rows = []
    for sub_row in _key_rows(dp(len(elim))):
        row = [0] * n
        for col, v in zip(elim, sub_row):
            row[col] = v
        rows.append(row)
    if keep:
        for sub_row in _key_rows(_restrict(spec, keep)):
            row = [0] * n
            for col, v in zip(keep, sub_row):
                row[col] = v
            rows.append(row)
    # Drop linearly dependent rows so the matrix constructor's rank check holds.
    rows = _independent_rows(rows, n)
    return matrix_order(rows)


def _restrict(spec, keep):
    """spec's comparator restricted to the kept variable positions."""
    if spec.kind in ("lp", "dp", "ds"):
        return OrderSpec(spec.kind, len(keep))
    if spec.kind == "matrix":
        rows = [[row[i] for i in keep] for row in spec.matrix]
        rows = _independent_rows(rows, len(keep))
        return matrix_order(rows)
    parts = []
    offset = 0
    for sub, size in spec.blocks:
        inner = [i - offset for i in keep if offset <= i < offset + size]
        if inner:
            parts.append((_restrict(sub, inner), len(inner)))
        offset += size
    return block(*parts) if len(parts) > 1 else parts[0][0]


def _independent_rows(rows, n):
    out = []
    for row in rows:
        if _rank(out + [row]) > len(out):
            out.append(row)
        if len(out) == n:
            break
    if _rank(out) != len(out) or len(out) != n:
        raise OrderError("could not build a full-rank elimination order")
    return out


class ModuleOrder:
    """Extension of a ring order to free-module terms (monomial, component).

    term_over_position: compare monomials by the ring order, tie broken by
    smaller component.  eliminate_components(r): any term in components
    1..r exceeds any term in components > r; term_over_position inside each
    zone.  skey layout is (zone?, *ring_skey, component), so scalar
    multiplication touches exactly the ring segment.
    """

    __slots__ = ("ring_spec", "policy", "r", "ring_order", "pre_len", "post_len")

    def __init__(self, ring_spec, policy=TERM_OVER_POSITION, r=0):
        if policy not in (TERM_OVER_POSITION, ELIM_COMPONENTS):
            raise OrderError(f"unknown module order policy {policy!r}")
        self.ring_spec = ring_spec
        self.policy = policy
        self.r = r
        self.ring_order = compile_order(ring_spec)
        self.pre_len = 1 if policy == ELIM_COMPONENTS else 0
        self.post_len = 1

    def skey(self, mon, comp):
        rk = self.ring_order.skey(mon)
        if self.policy == ELIM_COMPONENTS:
            return ((0 if comp <= self.r else 1),) + rk + (comp,)
        return rk + (comp,)

    def compare(self, a, b):
        """Compare (monomial, component) pairs; returns LT, EQ or GT."""
        ka, kb = self.skey(*a), self.skey(*b)
        if ka == kb:
            return EQ
        return GT if ka < kb else LT


def extend_to_module(spec, policy=TERM_OVER_POSITION, r=0):
    return ModuleOrder(spec, policy, r)
