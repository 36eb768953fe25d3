"""Buchberger's algorithm and the ideal toolkit built on it.

Everything here runs in the free polynomial ring; ideals of a quotient ring
R = S/I0 are represented by their lifts to S (generators plus the quotient
generators), so a single engine answers every query.  Pair selection uses
the sugar strategy with both classical pair-skipping criteria, and ties are
broken by (sugar, lcm key, indices), so repeated runs produce bit-identical
reduced bases.
"""

from __future__ import annotations

import heapq

from .budget import Budget
from .ring import (Block, Polynomial, Ring, mono_deg, mono_div, mono_divides,
                   mono_gcd, mono_lcm, mono_mul)


# ---------------------------------------------------------------------------
# division

def _nf_dict(work, basis, ring, budget):
    """Full normal form of the term dict `work` against `basis`, a sequence
    of (lm, terms) pairs for monic reducers.  Returns the remainder dict."""
    p = ring.p
    key = ring.order.key
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        reducer = None
        for blm, bterms in basis:
            if mono_divides(blm, m):
                reducer = (blm, bterms)
                break
        if reducer is None:
            rem[m] = c
            continue
        budget.charge()
        blm, bterms = reducer
        shift = mono_div(m, blm)
        for bm, bc in bterms:
            if bm == blm:
                continue
            mm = mono_mul(bm, shift)
            nc = (work.get(mm, 0) - c * bc) % p
            if nc:
                work[mm] = nc
            else:
                work.pop(mm, None)
    return rem


def normal_form_poly(f, basis_polys, budget=None):
    """Remainder of f modulo a list of monic polynomials (typically a reduced
    Groebner basis)."""
    budget = Budget.ensure(budget)
    ring = f.ring
    basis = [(g.lm(), g.terms) for g in basis_polys if g]
    rem = _nf_dict(dict(f.terms), basis, ring, budget)
    return ring.from_dict(rem)


# ---------------------------------------------------------------------------
# Buchberger

def _spoly_dict(gi, gj, ring):
    """S-polynomial of two monic basis entries (lm, terms)."""
    lmi, ti = gi
    lmj, tj = gj
    lcm = mono_lcm(lmi, lmj)
    si = mono_div(lcm, lmi)
    sj = mono_div(lcm, lmj)
    p = ring.p
    d = {}
    for m, c in ti:
        mm = mono_mul(m, si)
        d[mm] = (d.get(mm, 0) + c) % p
    for m, c in tj:
        mm = mono_mul(m, sj)
        d[mm] = (d.get(mm, 0) - c) % p
    return {m: c for m, c in d.items() if c}


def buchberger(gens, ring, budget=None):
    """Reduced Groebner basis of the ideal generated by `gens` under the
    ring's order.  Deterministic; raises BudgetExceeded when the pair queue
    outruns the step budget."""
    budget = Budget.ensure(budget)
    key = ring.order.key

    G = []           # (lm, terms, sugar)
    lmkey = []       # cached order keys of leading monomials
    pairs = []       # heap of (sugar, lcm_key, i, j)
    done = set()     # treated index pairs, for the chain criterion

    def push_pairs(j):
        lmj, _, sj = G[j]
        for i in range(j):
            lmi, _, si = G[i]
            lcm = mono_lcm(lmi, lmj)
            sugar = max(si + mono_deg(lcm) - mono_deg(lmi),
                        sj + mono_deg(lcm) - mono_deg(lmj))
            heapq.heappush(pairs, (sugar, key(lcm), i, j))

    def add(poly_terms, sugar):
        lm = max(poly_terms, key=key)
        c = poly_terms[lm]
        if c != 1:
            inv = pow(c, -1, ring.p)
            poly_terms = {m: (v * inv) % ring.p for m, v in poly_terms.items()}
        terms = tuple(sorted(poly_terms.items(), key=lambda mc: key(mc[0]),
                             reverse=True))
        G.append((lm, terms, sugar))
        lmkey.append(key(lm))
        push_pairs(len(G) - 1)

    seed = sorted({g.monic() for g in gens if g},
                  key=lambda g: (key(g.lm()), g.terms))
    for g in seed:
        add(dict(g.terms), g.degree())
    if not G:
        return ()

    zero = (0,) * ring.nvars
    while pairs:
        sugar, lcm_key, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        lmi, ti, _ = G[i]
        lmj, tj, _ = G[j]
        lcm = mono_lcm(lmi, lmj)
        if key(lcm) != lcm_key:
            continue  # stale entry: one side was replaced
        if mono_gcd(lmi, lmj) == zero:
            continue  # product criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(G[k][0], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        budget.charge()
        sp = _spoly_dict((lmi, ti), (lmj, tj), ring)
        rem = _nf_dict(sp, [(lm, t) for lm, t, _ in G], ring, budget)
        if rem:
            add(rem, sugar)

    return _reduce_basis([Polynomial(ring, terms) for _, terms, _ in G],
                         ring, budget)


def _reduce_basis(polys, ring, budget):
    """Minimalize and tail-reduce a basis into the unique reduced form,
    sorted ascending by leading monomial."""
    key = ring.order.key
    polys = sorted((g.monic() for g in polys if g),
                   key=lambda g: (key(g.lm()), g.terms))
    minimal = []
    for g in polys:
        if not any(mono_divides(h.lm(), g.lm()) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = [(h.lm(), h.terms) for j, h in enumerate(minimal) if j != i]
        rem = _nf_dict(dict(g.terms), others, ring, budget)
        reduced.append(ring.from_dict(rem).monic())
    reduced = [g for g in reduced if g]
    reduced.sort(key=lambda g: key(g.lm()))
    return tuple(reduced)


# ---------------------------------------------------------------------------
# ideals

class Ideal:
    """An ideal given by generators, with a write-once cache of its reduced
    Groebner basis (computed on the lift when the ring is a quotient)."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring, gens=()):
        self.ring = ring
        fixed = []
        for g in gens:
            if isinstance(g, str):
                g = ring.poly(g)
            if g.ring is not ring:
                g = g.transported(ring)
            if g:
                fixed.append(g)
        self.gens = tuple(fixed)
        self._gb = None

    @classmethod
    def parse(cls, ring, text):
        from .parse import parse_poly_list
        return cls(ring, parse_poly_list(text, ring))

    def lifted_gens(self):
        """Generators plus the ring's quotient generators, in the free ring."""
        free = self.ring.free()
        out = [g.transported(free) for g in self.gens]
        out.extend(self.ring.quotient)
        return tuple(out)

    def groebner_basis(self, budget=None):
        if self._gb is None:
            free = self.ring.free()
            self._gb = buchberger(self.lifted_gens(), free, budget)
        return self._gb

    def normal_form(self, f, budget=None):
        free = self.ring.free()
        f = f.transported(free)
        return normal_form_poly(f, self.groebner_basis(budget), budget)

    def contains(self, f, budget=None):
        return self.normal_form(f, budget).is_zero

    def contains_ideal(self, other, budget=None):
        return all(self.contains(g, budget) for g in other.lifted_gens())

    def equal(self, other, budget=None):
        if not self.ring.compatible(other.ring):
            return False
        return self.groebner_basis(budget) == other.groebner_basis(budget)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.equal(other)

    __hash__ = None

    @property
    def is_zero(self):
        return not self.groebner_basis()

    @property
    def is_unit(self):
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant and not gb[0].is_zero

    def is_monomial_ideal(self):
        return all(g.is_monomial for g in self.gens)

    def plus(self, other):
        gens = self.gens + tuple(g.transported(self.ring) for g in other.gens)
        return Ideal(self.ring, gens)

    def __repr__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def basis_str(self, budget=None):
        gb = self.groebner_basis(budget)
        if not gb:
            return "(0)"
        return "(" + ", ".join(str(g) for g in gb) + ")"


def groebner_basis(ideal, order=None, budget=None):
    """Reduced Groebner basis, optionally under a different monomial order
    than the ideal's ring carries."""
    if order is None or order == ideal.ring.order:
        return ideal.groebner_basis(budget)
    ring2 = ideal.ring.free().with_order(order)
    gens = [g.transported(ring2) for g in ideal.lifted_gens()]
    return buchberger(gens, ring2, budget)


def ideal_equal(I, J, budget=None):
    return I.equal(J, budget)


def normal_form(f, ideal, budget=None):
    return ideal.normal_form(f, budget)


def eliminate(ideal, k, budget=None):
    """Generators of I intersected with F_p[v_{k+1}, ..., v_n]."""
    ring = ideal.ring
    if k == 0:
        return Ideal(ring, ideal.groebner_basis(budget))
    if k >= ring.nvars:
        raise ValueError("cannot eliminate every variable")
    free = ring.free().with_order(Block(k))
    gens = [g.transported(free) for g in ideal.lifted_gens()]
    gb = buchberger(gens, free, budget)
    block = set(range(k))
    kept = [g for g in gb if not (g.support_vars() & block)]
    return Ideal(ring.free(), [g.transported(ring.free()) for g in kept])


def intersect(I, J, budget=None):
    """I cap J via the single tag variable t: eliminate t from t*I + (1-t)*J."""
    ring = I.ring.free()
    (tname,) = ring.fresh_names(1, "t")
    ext = Ring(ring.p, (tname,) + ring.variables, Block(1))
    t = ext.var(tname)
    one = ext.one()
    gens = [t * g.transported(ext) for g in I.lifted_gens()]
    gens += [(one - t) * g.transported(ext) for g in J.lifted_gens()]
    gb = buchberger(gens, ext, budget)
    kept = [g for g in gb if 0 not in g.support_vars()]
    return Ideal(ring, [g.transported(ring) for g in kept])


def _exact_div(f, g, budget=None):
    """Quotient f/g for f a multiple of g (single-divisor division; the
    remainder must vanish)."""
    budget = Budget.ensure(budget)
    ring = f.ring
    p = ring.p
    ginv = pow(g.lc(), -1, p)
    glm = g.lm()
    work = dict(f.terms)
    quot = {}
    key = ring.order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not mono_divides(glm, m):
            raise ArithmeticError("exact division with nonzero remainder")
        budget.charge()
        shift = mono_div(m, glm)
        qc = (c * ginv) % p
        quot[shift] = qc
        for bm, bc in g.terms:
            if bm == glm:
                continue
            mm = mono_mul(bm, shift)
            nc = (work.get(mm, 0) - qc * bc) % p
            if nc:
                work[mm] = nc
            else:
                work.pop(mm, None)
    return ring.from_dict(quot)


def colon_ideal(I, J, budget=None):
    """(I : J) = {r | r*J inside I}, generator by generator through
    intersections with principal ideals."""
    if I.ring.p != J.ring.p or I.ring.variables != J.ring.variables:
        raise ValueError("colon of ideals in different rings")
    ring = I.ring
    free = ring.free()
    gens_j = [g.transported(free) for g in J.gens if g]
    if not gens_j:
        raise ValueError("colon by the zero ideal")
    result = None
    for g in gens_j:
        meet = intersect(Ideal(free, I.lifted_gens()), Ideal(free, [g]), budget)
        part = Ideal(free, [_exact_div(h, g, budget) for h in meet.gens])
        result = part if result is None else intersect(result, part, budget)
    return Ideal(ring, [g.transported(ring) for g in result.gens])


def radical_membership(f, ideal, budget=None):
    """f in the radical of I, by the auxiliary-variable trick:
    1 in I + (1 - t*f) in the extended ring."""
    ring = ideal.ring.free()
    (tname,) = ring.fresh_names(1, "t")
    ext = ring.extended((tname,))
    t = ext.var(tname)
    gens = [g.transported(ext) for g in ideal.lifted_gens()]
    gens.append(ext.one() - t * f.transported(ext))
    gb = buchberger(gens, ext, budget)
    return len(gb) == 1 and gb[0].is_constant
