"""Standard bases for ideals and submodules over any semigroup ordering.

One engine serves global, local and mixed orderings:

* global orders reduce with the first dividing element (classical division;
  termination from the well-ordering);
* everything else reduces with the minimal-ecart divisor and snapshots the
  intermediate polynomial as an extra reducer when every candidate has
  bigger ecart (Mora's device: terminates for any semigroup order and keeps
  the working support from spreading);
* for rank-1 ideals under the local degree order ds with a bounded
  staircase, tails are truncated above the degree of the highest corner of
  the current partial leading ideal -- every such monomial already lies in
  the ideal -- and pairs whose lcm degree exceeds that bound are discarded
  outright, since every term of their s-polynomial would be truncated.

Zero-dimensional local computations run with generators augmented by pure
powers x_i^N, which bounds the staircase from the start.  Two certificates
promote such a run to an answer about the original ideal I:

* taint-free: if no element of the final minimal basis derives from an
  augmented generator, the basis consists of combinations of the original
  generators, so it is contained in I while its leading ideal contains
  L(I) -- a standard basis of I;
* two-level: if two runs at N1 < N2 produce the same minimal leading
  monomials with corner degree D < N1, then x_i^{N1} lies in I + m^M for
  every M (substituting the pure powers into themselves raises the order
  indefinitely), hence in I by the Krull intersection theorem; so
  I + Q_{N1} = I and the basis is again a standard basis of I.

Engine terms are (key, component, coefficient) where key is the order sort
key concatenated with the exponent vector, so one tuple addition performs a
whole scalar multiplication.  Coefficients are content-free integers
(characteristic 0) or residues mod p; the normal-form accumulator holds
exact rationals re-primitivized adaptively so long division chains cannot
blow up.
"""

import heapq
from math import gcd
from operator import add as _add

import numpy as np

from .rings import QQ, Polynomial, RingError
from . import orders, staircase
from .orders import ModuleOrder


class Cancelled(Exception):
    """Raised by a cancellation token inside long-running loops."""


class CancelToken:
    """Cooperative deadline checked between pair reductions."""

    __slots__ = ("deadline",)

    def __init__(self, deadline=None):
        self.deadline = deadline

    def check(self):
        if self.deadline is not None:
            import time

            if time.monotonic() > self.deadline:
                raise Cancelled("computation exceeded its deadline")


class MonomialIdeal:
    """Minimal monomial generators, sorted; equality is set equality."""

    __slots__ = ("nvars", "gens")

    def __init__(self, nvars, mons):
        self.nvars = nvars
        self.gens = staircase.minimal_generators(mons)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.nvars == other.nvars
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.nvars, self.gens))

    def __contains__(self, mon):
        return staircase.contains(self.gens, tuple(mon))

    def __repr__(self):
        return f"MonomialIdeal{self.gens}"


class StandardBasis:
    """Canonical standard basis: monic elements sorted by lm descending."""

    __slots__ = ("ring", "elements", "source", "stats")

    def __init__(self, ring, elements, source, stats=None):
        self.ring = ring
        self.elements = tuple(elements)
        self.source = tuple(source)
        self.stats = stats

    @property
    def order(self):
        return self.ring.order

    def leading_ideal(self):
        return MonomialIdeal(self.ring.nvars, [g.lm() for g in self.elements])

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


# ---------------------------------------------------------------------------
# term conversion: engine term = (key, comp, coeff), key = skey + monomial


def _int_coeffs(coeffs):
    """Clear denominators, strip content, make the first coefficient positive."""
    den = 1
    for c in coeffs:
        d = int(getattr(c, "denominator", 1))
        den = den * d // gcd(den, d)
    ints = [int(c * den) if den != 1 else int(c) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        ints = [c // g for c in ints]
    if ints and ints[0] < 0:
        ints = [-c for c in ints]
    return ints


def _poly_to_eterms(f, skey):
    if f.ring.char:
        return [(skey(m) + m, 0, int(c)) for m, c in f.terms]
    coeffs = _int_coeffs([c for _, c in f.terms])
    return [(skey(m) + m, 0, c) for (m, _), c in zip(f.terms, coeffs)]


def _vec_to_eterms(entries, mord):
    raw = []
    char = 0
    for comp, poly in entries.items():
        char = poly.ring.char
        for m, c in poly.terms:
            raw.append((mord.skey(m, comp) + m, comp, c))
    raw.sort(key=lambda t: t[0])
    if char:
        return [(k, cp, int(c)) for k, cp, c in raw]
    coeffs = _int_coeffs([c for _, _, c in raw])
    return [(k, cp, c) for (k, cp, _), c in zip(raw, coeffs)]


def _eterms_to_poly(terms, ring):
    if not terms:
        return ring.zero()
    n = ring.nvars
    lc = terms[0][2]
    if ring.char:
        inv = pow(lc, -1, ring.char)
        return Polynomial(ring, tuple((k[-n:], c * inv % ring.char) for k, _, c in terms))
    return Polynomial(ring, tuple((k[-n:], QQ(c, lc)) for k, _, c in terms))


def _eterms_to_vec(terms, ring):
    if not terms:
        return {}
    n = ring.nvars
    lc = terms[0][2]
    per = {}
    if ring.char:
        inv = pow(lc, -1, ring.char)
        for k, cp, c in terms:
            per.setdefault(cp, []).append((k[-n:], c * inv % ring.char))
    else:
        for k, cp, c in terms:
            per.setdefault(cp, []).append((k[-n:], QQ(c, lc)))
    return {cp: Polynomial(ring, tuple(ts)) for cp, ts in per.items()}


# ---------------------------------------------------------------------------
# the engine


class _Elem:
    __slots__ = ("terms", "key", "mon", "comp", "lc", "ecart", "lmdeg", "idx", "taint")

    def __init__(self, terms, idx, nvars, taint=False):
        self.terms = terms
        k, cp, c = terms[0]
        self.key = k
        self.mon = k[-nvars:]
        self.comp = cp
        self.lc = c
        self.lmdeg = sum(self.mon)
        self.ecart = max(sum(t[0][-nvars:]) for t in terms) - self.lmdeg
        self.idx = idx
        self.taint = taint


class _Engine:
    def __init__(self, ring, mord=None, *, truncate="auto", cancel=None, stats=None, trace=None):
        self.ring = ring
        self.char = ring.char
        self.n = ring.nvars
        self.mord = mord
        self.is_global = ring.compiled.tag == orders.GLOBAL
        co = ring.compiled
        self.skey_mon = co.skey
        zero = (0,) * self.n
        if mord is None:
            self.pre = 0
            self.post = 0
            self.klen = len(co.skey(zero))
        else:
            self.pre = mord.pre_len
            self.post = mord.post_len
            self.klen = len(mord.skey(zero, 1))
        self.elems = []
        self.lm_np = None
        self._np_dirty = True
        self.cancel = cancel
        self.trace = trace
        self.stats = stats if stats is not None else {}
        for key in (
            "pairs_created", "pairs_processed", "product_skips", "chain_skips",
            "zero_reductions", "nf_steps", "max_ecart", "elements",
        ):
            self.stats.setdefault(key, 0)
        # highest-corner truncation state (rank-1, pure ds only)
        self.trunc_enabled = (
            truncate is True
            or (truncate == "auto" and mord is None and ring.order.kind == "ds")
        ) and mord is None and ring.order.kind == "ds"
        self.trunc = None
        self._pure = [None] * self.n
        self._compl = None
        self._refresh_at = 6_000
        self._needs_refresh = False
        self._one_mon = zero

    def _dpacked(self, dmon):
        """Additive key delta for multiplication by x^dmon."""
        rk = self.skey_mon(dmon)
        if self.pre or self.post:
            return (0,) * self.pre + rk + (0,) * self.post + dmon
        return rk + dmon

    def term_key(self, mon, comp=0):
        if self.mord is None:
            return self.skey_mon(mon) + mon
        return self.mord.skey(mon, comp) + mon

    # -- element bookkeeping -------------------------------------------------

    def add_elem(self, terms, taint=False):
        e = _Elem(terms, len(self.elems), self.n, taint)
        self.elems.append(e)
        self._np_dirty = True
        self.stats["elements"] += 1
        if e.ecart > self.stats["max_ecart"]:
            self.stats["max_ecart"] = e.ecart
        if self.trunc_enabled:
            self._note_lead(e.mon)
        return e

    def _note_lead(self, mon):
        support = [i for i, v in enumerate(mon) if v]
        if len(support) == 1:
            i = support[0]
            if self._pure[i] is None or mon[i] < self._pure[i]:
                self._pure[i] = mon[i]
        if self._compl is None:
            if any(b is None for b in self._pure):
                return
            size = 1
            for b in self._pure:
                size *= max(b, 1)
            if size > 4_500_000:
                self.trunc_enabled = False
                return
            axes = [np.arange(max(b, 1), dtype=np.int32) for b in self._pure]
            grid = np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, self.n)
            for e in self.elems:
                lead = np.array(e.mon, dtype=np.int32)
                grid = grid[~(grid >= lead).all(axis=1)]
            self._compl = grid
        else:
            lead = np.array(mon, dtype=np.int32)
            self._compl = self._compl[~(self._compl >= lead).all(axis=1)]
        if self._compl is not None and len(self._compl):
            self.trunc = int(self._compl.sum(axis=1, dtype=np.int64).max())
            self.stats["hc_degree"] = self.trunc
            if len(self._compl) <= self._refresh_at:
                self._needs_refresh = True
                self._refresh_at = len(self._compl) // 2

    def _lead_arrays(self):
        if self._np_dirty:
            self.lm_np = np.array([e.mon for e in self.elems], dtype=np.int64)
            self.comp_np = np.array([e.comp for e in self.elems], dtype=np.int64)
            self.ecart_np = np.array([e.ecart for e in self.elems], dtype=np.int64)
            self._np_dirty = False
        return self.lm_np, self.comp_np, self.ecart_np

    # -- weak normal form ----------------------------------------------------

    def _find_divisor(self, mon, comp, upto, local_elems, exclude, by_ecart):
        """Reducer with lm | (mon, comp); earliest, or minimal ecart tie earliest."""
        best = None
        if upto >= 24:
            lm, cps, ecs = self._lead_arrays()
            mask = (lm[:upto] <= np.array(mon, dtype=np.int64)).all(axis=1)
            if self.mord is not None:
                mask &= cps[:upto] == comp
            if exclude is not None and exclude < upto:
                mask[exclude] = False
            idxs = np.nonzero(mask)[0]
            if len(idxs):
                if by_ecart:
                    cand = int(idxs[np.argmin(ecs[idxs])])
                else:
                    cand = int(idxs[0])
                e = self.elems[cand]
                # argmin returns the first minimum, so idx order is preserved
                best = ((e.ecart, e.idx) if by_ecart else e.idx, e)
        else:
            elems = self.elems
            for k in range(upto):
                e = elems[k]
                if k != exclude and e.comp == comp and all(
                    a <= b for a, b in zip(e.mon, mon)
                ):
                    score = (e.ecart, e.idx) if by_ecart else e.idx
                    if best is None or score < best[0]:
                        best = (score, e)
                    if not by_ecart:
                        break
        for e in local_elems:
            if e.comp == comp and all(a <= b for a, b in zip(e.mon, mon)):
                score = (e.ecart, e.idx) if by_ecart else e.idx
                if best is None or score < best[0]:
                    best = (score, e)
        return best[1] if best else None

    def nf(self, seeds, upto=None, *, tail=False, exclude=None, taint=False, step_cap=None):
        """Reduce the sum of seed term streams; returns (terms, taint, finished).

        seeds: list of (terms, dmon, scalar) contributions.
        upto: only elements[:upto] serve as reducers (call-time snapshot).
        tail=True keeps reducing past irreducible leads.
        step_cap, when set, bounds the reduction steps; an unfinished state
        is materialized and handed back so the caller can requeue it (the
        partial remainder is a combination of ideal elements).
        """
        if upto is None:
            upto = len(self.elems)
        n = self.n
        acc = {}
        heap = []
        degcnt = {}
        trunc = self.trunc if self.trunc_enabled else None
        mora = not self.is_global
        p = self.char

        maxdeg_box = [0, False]  # running max term degree, stale flag

        def add(terms, dmon, scalar):
            dpk = self._dpacked(dmon)
            for k, cp, c in terms:
                nk = tuple(map(_add, k, dpk))
                if trunc is not None and nk[0] > trunc:
                    continue
                key = (nk, cp)
                old = acc.get(key)
                if old is None:
                    v = scalar * c
                    if p:
                        v %= p
                    if v:
                        acc[key] = v
                        heapq.heappush(heap, key)
                        if mora:
                            d = sum(nk[-n:])
                            degcnt[d] = degcnt.get(d, 0) + 1
                            if d > maxdeg_box[0]:
                                maxdeg_box[0] = d
                else:
                    v = old + scalar * c
                    if p:
                        v %= p
                    if v:
                        acc[key] = v
                    else:
                        del acc[key]
                        if mora:
                            d = sum(nk[-n:])
                            if degcnt[d] == 1:
                                del degcnt[d]
                                if d == maxdeg_box[0]:
                                    maxdeg_box[1] = True
                            else:
                                degcnt[d] -= 1

        for terms, dmon, scalar in seeds:
            add(terms, dmon, scalar)

        local_elems = []
        local_idx = 10**9  # snapshots come after every basis element
        out = []  # irreducible head, tail mode only
        steps = 0
        norm_bits = 1 << 10  # adaptive content-strip threshold
        while heap:
            hkey = heap[0]
            c = acc.get(hkey)
            if not c:
                heapq.heappop(heap)
                continue
            k, comp = hkey
            mon = k[-n:]
            if not p:
                # keep the accumulator primitive: without periodic content
                # stripping the rationals of long division chains blow up
                bits = int(c.numerator).bit_length() + int(
                    getattr(c, "denominator", 1)
                ).bit_length()
                if bits > norm_bits:
                    self._strip_acc(acc)
                    c = acc[hkey]
                    intrinsic = int(c.numerator).bit_length()
                    norm_bits = max(2 * intrinsic + 64, 1 << 10)
            steps += 1
            if steps % 2048 == 0 and self.cancel is not None:
                self.cancel.check()
            if step_cap is not None and steps > step_cap:
                self.stats["nf_steps"] += steps
                self.stats["deferrals"] = self.stats.get("deferrals", 0) + 1
                return self._normalize_ints(out + self._materialize(acc)), taint, False
            g = self._find_divisor(mon, comp, upto, local_elems, exclude, mora)
            if g is None:
                if not tail:
                    break
                heapq.heappop(heap)
                del acc[hkey]
                if mora:
                    d = sum(mon)
                    if degcnt[d] == 1:
                        del degcnt[d]
                        if d == maxdeg_box[0]:
                            maxdeg_box[1] = True
                    else:
                        degcnt[d] -= 1
                out.append((k, comp, c))
                continue
            taint = taint or g.taint
            if mora:
                lmdeg = sum(mon)
                if maxdeg_box[1]:
                    maxdeg_box[0] = max(degcnt) if degcnt else lmdeg
                    maxdeg_box[1] = False
                h_ecart = max(maxdeg_box[0], lmdeg) - lmdeg
                if self.trace is not None:
                    self.trace(g.idx, g.ecart, h_ecart)
                if g.ecart > h_ecart and not tail:
                    snap = self._materialize(acc)
                    e = _Elem(snap, local_idx, n, taint)
                    local_idx += 1
                    local_elems.append(e)
                    if g.ecart > self.stats["max_ecart"]:
                        self.stats["max_ecart"] = g.ecart
            elif self.trace is not None:
                self.trace(g.idx, g.ecart, 0)
            # cancel the lead: subtract (c / g.lc) * x^(mon - g.mon) * g
            del acc[hkey]
            heapq.heappop(heap)
            if mora:
                d = sum(mon)
                if degcnt[d] == 1:
                    del degcnt[d]
                    if d == maxdeg_box[0]:
                        maxdeg_box[1] = True
                else:
                    degcnt[d] -= 1
            dmon = tuple(a - b for a, b in zip(mon, g.mon))
            if p:
                q = (p - c) * pow(g.lc, -1, p) % p
            else:
                q = QQ(-c, g.lc)
            add(g.terms[1:], dmon, q)
        self.stats["nf_steps"] += steps
        rest = self._materialize(acc)
        if tail and out:
            return self._normalize_ints(out + rest), taint, True
        return rest, taint, True

    def _strip_acc(self, acc):
        """Rescale accumulator values to coprime integers (unit change only)."""
        den = 1
        for v in acc.values():
            d = int(getattr(v, "denominator", 1))
            if d != 1:
                den = den * d // gcd(den, d)
        g = 0
        items = []
        for key, v in acc.items():
            iv = int(v * den) if den != 1 else int(v)
            items.append((key, iv))
            g = gcd(g, iv)
        if g == 0:
            g = 1
        for key, iv in items:
            acc[key] = iv // g

    def _materialize(self, acc):
        items = [(k, cp, c) for (k, cp), c in acc.items()]
        items.sort(key=lambda t: t[0])
        return self._normalize_ints(items)

    def _normalize_ints(self, items):
        if not items:
            return []
        if self.char:
            return items
        coeffs = _int_coeffs([t[2] for t in items])
        return [(t[0], t[1], c) for t, c in zip(items, coeffs)]

    # -- the pair loop -------------------------------------------------------

    def run(self, gens_terms, *, select="min", taints=None):
        pairs = []
        counter = 0

        def lcm_key(gamma):
            sk = self.skey_mon(gamma)
            return tuple(-v for v in sk) if select == "min" else sk

        def new_pairs(j):
            nonlocal counter
            ej = self.elems[j]
            for i in range(j):
                ei = self.elems[i]
                if ei.comp != ej.comp:
                    continue
                if self.is_global and self.mord is None and all(
                    min(a, b) == 0 for a, b in zip(ei.mon, ej.mon)
                ):
                    self.stats["product_skips"] += 1
                    continue
                gamma = tuple(max(a, b) for a, b in zip(ei.mon, ej.mon))
                # under ds every spoly term has degree >= deg(lcm); above the
                # corner bound the spoly lies in the ideal already
                if self.trunc is not None and sum(gamma) > self.trunc:
                    self.stats["corner_skips"] = self.stats.get("corner_skips", 0) + 1
                    continue
                counter += 1
                self.stats["pairs_created"] += 1
                heapq.heappush(pairs, (lcm_key(gamma), counter, "pair", i, j, gamma))

        unit = None
        for pos, terms in enumerate(gens_terms):
            if not terms:
                continue
            e = self.add_elem(terms, bool(taints and taints[pos]))
            if self.mord is None and sum(e.mon) == 0:
                unit = e
                break
            new_pairs(e.idx)

        # Work items: ("pair", i, j, gamma) or ("rem", terms, taint, cap).
        # Capped reductions requeue their remnant (an ideal element), so
        # cheap low-degree pairs get to shrink the corner bound before the
        # expensive chains resume inside a much smaller term pool.
        base_cap = None
        while pairs and unit is None:
            if self.cancel is not None:
                self.cancel.check()
            item = heapq.heappop(pairs)
            kind = item[2]
            if kind == "pair":
                _, _, _, i, j, gamma = item
                self.stats["pairs_processed"] += 1
                if self.trunc is not None and sum(gamma) > self.trunc:
                    self.stats["corner_skips"] = self.stats.get("corner_skips", 0) + 1
                    continue
                ei, ej = self.elems[i], self.elems[j]
                if self._chain_skip(i, j, gamma, ei.comp):
                    self.stats["chain_skips"] += 1
                    continue
                di = tuple(a - b for a, b in zip(gamma, ei.mon))
                dj = tuple(a - b for a, b in zip(gamma, ej.mon))
                if self.char:
                    si, sj = ej.lc, (self.char - ei.lc) % self.char
                else:
                    g = gcd(ei.lc, ej.lc)
                    si, sj = ej.lc // g, -(ei.lc // g)
                seeds = [
                    (ei.terms[1:], di, si),
                    (ej.terms[1:], dj, sj),
                ]
                taint0 = ei.taint or ej.taint
                cap = base_cap
            else:
                _, _, _, terms, taint0, cap = item
                if self.trunc is not None and terms:
                    terms = [t for t in terms if t[0][0] <= self.trunc]
                seeds = [(terms, self._one_mon, 1)]
            full = (
                self.trunc is not None
                and self.mord is None
                and self._compl is not None
                and len(self._compl) <= 6_000
            )
            h, taint, done = self.nf(seeds, taint=taint0, tail=full, step_cap=cap)
            if not done:
                counter += 1
                key = h[0][0][: self.klen]
                requeue_key = tuple(-v for v in key) if select == "min" else key
                heapq.heappush(pairs, (requeue_key, counter, "rem", h, taint, cap))
                continue
            if not h:
                self.stats["zero_reductions"] += 1
                continue
            e = self.add_elem(h, taint)
            if self.mord is None and sum(e.mon) == 0:
                unit = e
                break
            new_pairs(e.idx)
            if self._needs_refresh:
                self._needs_refresh = False
                self._refresh_tails()

        if unit is not None:
            return [([(self.term_key(self._one_mon, unit.comp), unit.comp, 1)], unit.taint)]
        return self._minimalize()

    def _refresh_tails(self):
        """Re-reduce each minimal element against the others.

        Minimal leads are irreducible among the rest, so they survive and
        pair bookkeeping stays valid; the result is a positive-rational
        multiple of the element minus a combination of the others.  Keeping
        tails inside the current staircase stops old high-degree terms from
        re-entering later reductions with inflated coefficients.
        """
        for e in self.elems:
            if len(e.terms) == 1:
                continue
            redundant = any(
                o is not e
                and o.comp == e.comp
                and all(a <= b for a, b in zip(o.mon, e.mon))
                for o in self.elems
            )
            if redundant:
                continue
            terms, taint, done = self.nf(
                [(e.terms, self._one_mon, 1)], tail=True, exclude=e.idx, taint=e.taint
            )
            if not done or not terms or terms[0][0][-self.n :] != e.mon:
                continue  # degenerate; keep the old form
            e.terms = terms
            e.lc = terms[0][2]
            e.taint = taint
            e.ecart = max(sum(t[0][-self.n :]) for t in terms) - e.lmdeg
        self._np_dirty = True

    def _chain_skip(self, i, j, gamma, comp):
        for k, e in enumerate(self.elems):
            if k == i or k == j or e.comp != comp:
                continue
            if all(a <= b for a, b in zip(e.mon, gamma)):
                lik = tuple(max(a, b) for a, b in zip(self.elems[i].mon, e.mon))
                if lik == gamma:
                    continue
                ljk = tuple(max(a, b) for a, b in zip(self.elems[j].mon, e.mon))
                if ljk == gamma:
                    continue
                return True
        return False

    def _minimalize(self):
        keep = []
        for e in self.elems:
            redundant = any(
                o is not e
                and o.comp == e.comp
                and all(a <= b for a, b in zip(o.mon, e.mon))
                and (o.mon != e.mon or o.idx < e.idx)
                for o in self.elems
            )
            if not redundant:
                keep.append(e)
        keep.sort(key=lambda e: (e.key, e.comp))
        if self.is_global:
            keep = self._tail_reduce(keep)
        return [(e.terms, e.taint) for e in keep]

    def _tail_reduce(self, keep):
        """Full reduction of each element against the others (global orders)."""
        self.elems = []
        self._np_dirty = True
        for e in keep:
            self.add_elem(e.terms, e.taint)
        out = []
        for e in list(self.elems):
            red, taint, _ = self.nf(
                [(e.terms, self._one_mon, 1)], tail=True, exclude=e.idx, taint=e.taint
            )
            out.append(_Elem(red, e.idx, self.n, taint))
        return out


# ---------------------------------------------------------------------------
# public operations


def standard_basis(gens, *, cancel=None, stats=None, trace=None, truncate="auto", select="min"):
    """Minimal, monic standard basis of the ideal generated by gens."""
    gens = [g for g in gens if isinstance(g, Polynomial)]
    if not gens:
        raise RingError("standard_basis needs at least one polynomial (may be 0)")
    ring = gens[0].ring
    for g in gens[1:]:
        if g.ring != ring:
            raise RingError("generators live in different rings")
    eng = _Engine(ring, None, truncate=truncate, cancel=cancel, stats=stats, trace=trace)
    skey = ring.compiled.skey
    result = eng.run([_poly_to_eterms(g, skey) for g in gens], select=select)
    elements = [_eterms_to_poly(t, ring) for t, _ in result]
    return StandardBasis(ring, elements, gens, stats=eng.stats)


def local_zero_dim_basis(gens, *, cancel=None, stats=None):
    """Standard basis under ds, tuned for finite-staircase (0-dim) ideals.

    Generators are augmented with pure powers x_i^N so the staircase is
    bounded from the start.  A run whose minimal basis never touched an
    augmented generator is certified immediately (taint-free); otherwise two
    consecutive levels with identical minimal leading monomials and corner
    degree below the lower level certify via the Krull intersection
    argument.  The classical unbounded computation is the fallback.
    """
    gens = [g for g in gens if g.terms]
    if not gens:
        raise RingError("local basis of the zero ideal")
    ring = gens[0].ring
    if ring.order.kind != "ds":
        return standard_basis(gens, cancel=cancel, stats=stats)
    n = ring.nvars
    skey = ring.compiled.skey
    cap = int(4_500_000 ** (1.0 / n)) + 1
    min_ord = min(g.order_of() for g in gens)
    N = 16
    while N < min_ord + 2:
        N = (N * 3) // 2
    prev = None  # (N, corner_degree, minimal leads tuple)
    while N <= cap:
        run_stats = {}
        eng = _Engine(ring, None, truncate=True, cancel=cancel, stats=run_stats)
        eterms = [_poly_to_eterms(g, skey) for g in gens]
        taints = [False] * len(gens)
        for i in range(n):
            mon = tuple(N if j == i else 0 for j in range(n))
            eterms.append([(skey(mon) + mon, 0, 1)])
            taints.append(True)
        # lowest-degree pairs first: small leads arrive early, which shrinks
        # the corner bound and prunes the high-degree queue
        result = eng.run(eterms, taints=taints, select="max")

        def finish(res, rstats, level):
            if stats is not None:
                stats.update(rstats)
                stats["augmented_power"] = level
            elements = [_eterms_to_poly(t, ring) for t, _ in res]
            return StandardBasis(ring, elements, gens, stats=rstats)

        if not any(taint for _, taint in result):
            return finish(result, run_stats, N)
        leads = staircase.minimal_generators([t[0][0][-n:] for t, _ in result])
        corner = run_stats.get("hc_degree")
        if prev is not None and corner is not None:
            p_n, p_corner, p_leads = prev
            if p_leads == leads and p_corner is not None and p_corner < p_n:
                return finish(result, run_stats, N)
        prev = (N, corner, leads)
        N = (N * 3) // 2
    return standard_basis(gens, cancel=cancel, stats=stats)


def nf_fast(f, basis_elements, *, cancel=None):
    """Weak normal form remainder of f against a list of polynomials (engine path)."""
    if not isinstance(f, Polynomial):
        raise RingError("nf_fast expects a polynomial")
    ring = f.ring
    eng = _Engine(ring, None, truncate=False, cancel=cancel)
    for g in basis_elements:
        if g.terms:
            eng.add_elem(_poly_to_eterms(g, ring.compiled.skey))
    if not f.terms:
        return f
    seeds = [(_poly_to_eterms(f, ring.compiled.skey), (0,) * ring.nvars, 1)]
    rest, _, _ = eng.nf(seeds)
    return _eterms_to_poly(rest, ring)


def is_standard_basis(elements, *, use_traced=False):
    """Buchberger test: every spoly reduces to 0 against the set."""
    from .reduce import nf_mora, spoly

    elems = [g for g in elements if g.terms]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            sp = spoly(elems[i], elems[j])
            if not sp.terms:
                continue
            if use_traced:
                rem = nf_mora(sp, elems).remainder
            else:
                rem = nf_fast(sp, elems)
            if rem.terms:
                return False
    return True


def interreduce(elements):
    """Drop lm-redundant elements, normalize lc to 1; tail-reduce when global."""
    elems = [g for g in elements if g.terms]
    if not elems:
        return []
    ring = elems[0].ring
    skey = ring.compiled.skey
    keep = []
    for i, g in enumerate(elems):
        gm = g.lm()
        redundant = False
        for k, other in enumerate(elems):
            if k == i:
                continue
            om = other.lm()
            if all(a <= b for a, b in zip(om, gm)) and (om != gm or k < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    keep.sort(key=lambda g: skey(g.lm()))
    if ring.compiled.tag == orders.GLOBAL:
        from .reduce import nf_buchberger

        reduced = []
        for i, g in enumerate(keep):
            others = keep[:i] + keep[i + 1 :]
            reduced.append(nf_buchberger(g, others, tail=True).remainder)
        keep = reduced
    return [g.monic() for g in keep]


def leading_ideal(basis):
    if isinstance(basis, StandardBasis):
        return basis.leading_ideal()
    elems = list(basis)
    if not elems:
        raise RingError("leading ideal of an empty set needs a ring")
    return MonomialIdeal(elems[0].ring.nvars, [g.lm() for g in elems])


def highest_corner(basis):
    """ds-smallest monomial outside L(basis); the staircase must be finite."""
    ring = basis.ring
    if ring.order.kind != "ds":
        raise RingError("highest corner requires the local degree ordering ds")
    gens = [g.lm() for g in basis.elements]
    return staircase.highest_corner(gens, ring.nvars, ring.compiled.skey)
