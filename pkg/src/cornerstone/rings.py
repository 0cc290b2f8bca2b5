"""Ring contexts, exact coefficient arithmetic and sparse multivariate polynomials.

Coefficients are exact: arbitrary-precision rationals in characteristic 0
(gmpy2.mpq when available, fractions.Fraction otherwise -- same semantics),
or residues in [0, p) for a word-sized prime p.  A polynomial is a term
list sorted descending under its ring's monomial order; monomials are plain
exponent tuples.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is normally present
    QQ = Fraction

from . import orders
from .orders import GLOBAL, LOCAL, MIXED  # noqa: F401  (re-exported)


class RingError(ValueError):
    """Ring/argument mismatch or ill-formed construction."""


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RingContext:
    """Coefficient field + named variables + monomial order."""

    __slots__ = ("char", "variables", "order", "compiled", "_var_index")

    def __init__(self, char, variables, order):
        variables = tuple(variables)
        if not variables or len(set(variables)) != len(variables):
            raise RingError("variable names must be distinct and nonempty")
        if any(not v for v in variables):
            raise RingError("variable names must be nonempty")
        if char != 0:
            if not _is_prime(char) or char >= 1 << 62:
                raise RingError("characteristic must be 0 or a word-sized prime")
        if order.arity != len(variables):
            raise RingError("order arity must equal the number of variables")
        self.char = char
        self.variables = variables
        self.order = order
        self.compiled = orders.compile_order(order)
        self._var_index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.char == other.char
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.char, self.variables, self.order))

    def __repr__(self):
        return f"RingContext({self.char}, {self.variables}, {self.order!r})"

    # -- coefficient field ------------------------------------------------

    def coeff(self, c):
        """Coerce an int / Fraction / mpq into the coefficient field."""
        if self.char:
            den = int(getattr(c, "denominator", 1))
            num = int(getattr(c, "numerator", c))
            if den == 1:
                return num % self.char
            return num * pow(den, -1, self.char) % self.char
        return QQ(c)

    def coeff_div(self, a, b):
        if self.char:
            return a * pow(b, -1, self.char) % self.char
        return QQ(a) / QQ(b)

    # -- polynomial constructors ------------------------------------------

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.coeff(c)
        if not c:
            return Polynomial(self, ())
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, name_or_index):
        if isinstance(name_or_index, str):
            i = self._var_index.get(name_or_index)
            if i is None:
                raise RingError(f"unknown variable {name_or_index!r}")
        else:
            i = name_or_index
            if not 0 <= i < self.nvars:
                raise RingError("variable index out of range")
        mon = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((mon, self.coeff(1)),))

    def monomial(self, exps, c=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise RingError("bad exponent vector")
        c = self.coeff(c)
        return Polynomial(self, ((exps, c),)) if c else self.zero()

    def poly(self, terms):
        """Polynomial from {mon: coeff} or an iterable of (mon, coeff)."""
        items = terms.items() if isinstance(terms, dict) else terms
        acc = {}
        for mon, c in items:
            mon = tuple(int(e) for e in mon)
            if len(mon) != self.nvars or any(e < 0 for e in mon):
                raise RingError("bad exponent vector")
            acc[mon] = acc.get(mon, 0) + self.coeff(c)
        return self._from_dict(acc)

    def _from_dict(self, acc):
        skey = self.compiled.skey
        if self.char:
            items = [(m, c % self.char) for m, c in acc.items()]
            items = [(m, c) for m, c in items if c]
        else:
            items = [(m, c) for m, c in acc.items() if c]
        items.sort(key=lambda t: skey(t[0]))
        return Polynomial(self, tuple(items))

    def convert(self, f):
        """Re-express a polynomial from another ring here (matching by name).

        Every variable occurring in f must exist in this ring; terms are
        re-sorted under this ring's order and coefficients re-coerced.
        """
        if f.ring is self or f.ring == self:
            return f
        src = f.ring
        positions = []
        for i, name in enumerate(src.variables):
            j = self._var_index.get(name)
            if j is None:
                if any(t[0][i] for t in f.terms):
                    raise RingError(f"variable {name!r} does not exist in target ring")
                positions.append(None)
            else:
                positions.append(j)
        acc = {}
        n = self.nvars
        for mon, c in f.terms:
            new = [0] * n
            for i, e in enumerate(mon):
                if e:
                    new[positions[i]] = e
            key = tuple(new)
            acc[key] = acc.get(key, 0) + self.coeff(c if src.char == 0 else int(c))
        return self._from_dict(acc)


class Polynomial:
    """Immutable sparse polynomial; terms strictly descending under the ring order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lm(self):
        """Leading monomial (exponent tuple)."""
        if not self.terms:
            raise RingError("leading monomial of zero")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise RingError("leading coefficient of zero")
        return self.terms[0][1]

    def ecart(self):
        return orders.ecart(self.ring.order, self)

    def degree(self):
        """Maximal total degree; -1 for the zero polynomial."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def order_of(self):
        """Minimal total degree of a term; infinity for 0."""
        if not self.terms:
            return float("inf")
        return min(sum(m) for m, _ in self.terms)

    def constant_term(self):
        zero_mon = (0,) * self.ring.nvars
        for m, c in self.terms:
            if m == zero_mon:
                return c
        return self.ring.coeff(0)

    def monic(self):
        if not self.terms:
            return self
        lc = self.lc()
        if lc == self.ring.coeff(1):
            return self
        div = self.ring.coeff_div
        return Polynomial(self.ring, tuple((m, div(c, lc)) for m, c in self.terms))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise RingError("polynomials live in different rings")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return self.ring._from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        if self.ring.char:
            p = self.ring.char
            return Polynomial(self.ring, tuple((m, (p - c) % p) for m, c in self.terms))
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.coeff(other)
            if not c:
                return self.ring.zero()
            if self.ring.char:
                p = self.ring.char
                return Polynomial(self.ring, tuple((m, a * c % p) for m, a in self.terms))
            return Polynomial(self.ring, tuple((m, a * c) for m, a in self.terms))
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc = {}
        for m1, c1 in a:
            for m2, c2 in b:
                m = tuple(x + y for x, y in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        return self.ring._from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise RingError("negative polynomial power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base0 = base
            e >>= 1
            if e:
                base = base0 * base0
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if not self.terms:
                return other == 0
            zero_mon = (0,) * self.ring.nvars
            return len(self.terms) == 1 and self.terms[0] == (zero_mon, self.ring.coeff(other))
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        if not self.terms:
            return "<0>"
        bits = []
        for m, c in self.terms:
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.ring.variables, m)
                if e
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}*{mono}")
        s = "+".join(bits).replace("+-", "-")
        return f"<{s}>"

    # -- calculus / evaluation ----------------------------------------------

    def diff(self, i):
        """Formal partial derivative by variable index or name."""
        if isinstance(i, str):
            i = self.ring._var_index.get(i)
            if i is None:
                raise RingError("unknown variable")
        if not 0 <= i < self.ring.nvars:
            raise RingError("variable index out of range")
        acc = {}
        for m, c in self.terms:
            e = m[i]
            if e:
                new = m[:i] + (e - 1,) + m[i + 1 :]
                acc[new] = acc.get(new, 0) + c * e
        return self.ring._from_dict(acc)

    def evaluate(self, point):
        """Exact value at a point given as a coefficient vector."""
        if len(point) != self.ring.nvars:
            raise RingError("point arity mismatch")
        point = [self.ring.coeff(v) for v in point]
        total = self.ring.coeff(0)
        for m, c in self.terms:
            v = c
            for e, x in zip(m, point):
                if e:
                    v = v * x**e
            total = total + v
        if self.ring.char:
            total %= self.ring.char
        return total

    def substitute(self, images):
        """Replace variable i by images[i] (same ring), expand, canonicalize."""
        if len(images) != self.ring.nvars:
            raise RingError("need one image per variable")
        images = [self._coerce(g) for g in images]
        powers = [{0: self.ring.one()} for _ in images]

        def power(i, e):
            cache = powers[i]
            got = cache.get(e)
            if got is None:
                got = cache[e] = images[i] ** e
            return got

        total = self.ring.zero()
        for m, c in self.terms:
            v = self.ring.const(c)
            for i, e in enumerate(m):
                if e:
                    v = v * power(i, e)
            total = total + v
        return total

    def truncate_at_degree(self, k):
        """Drop all terms of total degree > k."""
        return Polynomial(self.ring, tuple(t for t in self.terms if sum(t[0]) <= k))


def arith(kind, f, g):
    """Dispatcher form of the ring arithmetic (add/sub/mul/negate/scalar_mul)."""
    if kind == "negate":
        return -f
    if kind == "scalar_mul":
        return f * g
    if not isinstance(g, Polynomial):
        g = f.ring.const(g)
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise RingError(f"unknown arithmetic kind {kind!r}")
