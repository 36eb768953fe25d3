"""Groebner bases for submodules of free modules.

Vectors over S^r are tuples of polynomials; internally the engine flattens
them to dicts keyed by module monomials (position, exponent tuple) under a
position-over-term order extending the ring's order (lower position wins).
Syzygies come from the standard elimination embedding: stack an identity
block under the matrix, compute a module basis where the original positions
dominate, and keep the elements supported entirely on the tag block.

A ModulePresentation is a cokernel: M = S^rank / (column span of relations).
Quotient rings are handled by appending one relation column per quotient
generator and basis row, so homology answers are answers over R = S/I0.
"""

from __future__ import annotations

import heapq

from .budget import Budget
from .groebner import Ideal, intersect
from .ring import mono_deg, mono_div, mono_divides, mono_lcm, mono_mul


# ---------------------------------------------------------------------------
# vectors and module terms

def zero_vector(ring, rank):
    z = ring.zero()
    return (z,) * rank


def unit_vector(ring, rank, i):
    z = ring.zero()
    return tuple(ring.one() if j == i else z for j in range(rank))


def vec_is_zero(vec):
    return all(c.is_zero for c in vec)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(u, f):
    return tuple(f * a for a in u)


def apply_columns(columns, coeffs, ring, rank):
    """Matrix-vector product: sum of coeffs[j] * columns[j]."""
    out = list(zero_vector(ring, rank))
    for c, col in zip(coeffs, columns):
        if c.is_zero:
            continue
        for i, entry in enumerate(col):
            if entry:
                out[i] = out[i] + c * entry
    return tuple(out)


def _vec_to_dict(vec):
    d = {}
    for pos, poly in enumerate(vec):
        for m, c in poly.terms:
            d[(pos, m)] = c
    return d


def _dict_to_vec(d, rank, ring):
    rows = [{} for _ in range(rank)]
    for (pos, m), c in d.items():
        rows[pos][m] = c
    return tuple(ring.from_dict(row) for row in rows)


def _mkey(ring):
    okey = ring.order.key

    def key(term):
        pos, m = term
        return (-pos, okey(m))

    return key


# ---------------------------------------------------------------------------
# module division and Buchberger

def _nf_vecdict(work, basis, ring, budget):
    """Full normal form of a module term dict against monic basis entries
    (lm=(pos, mono), terms)."""
    p = ring.p
    key = _mkey(ring)
    rem = {}
    while work:
        t = max(work, key=key)
        c = work.pop(t)
        pos, m = t
        reducer = None
        for blm, bterms in basis:
            if blm[0] == pos and mono_divides(blm[1], m):
                reducer = (blm, bterms)
                break
        if reducer is None:
            rem[t] = c
            continue
        budget.charge()
        (bpos, bm), bterms = reducer
        shift = mono_div(m, bm)
        for (tpos, tm), tc in bterms:
            if tpos == bpos and tm == bm:
                continue
            tt = (tpos, mono_mul(tm, shift))
            nc = (work.get(tt, 0) - c * tc) % p
            if nc:
                work[tt] = nc
            else:
                work.pop(tt, None)
    return rem


def _vdict_sugar(d):
    return max((mono_deg(m) for (_, m) in d), default=0)


def module_groebner(vectors, rank, ring, budget=None):
    """Reduced module Groebner basis (position-over-term order) of the
    submodule of S^rank generated by `vectors`."""
    budget = Budget.ensure(budget)
    key = _mkey(ring)
    p = ring.p

    G = []       # (lm, terms, sugar)
    pairs = []   # heap of (sugar, tiebreak, i, j)
    done = set()

    def push_pairs(j):
        lmj, _, sj = G[j]
        for i in range(j):
            lmi, _, si = G[i]
            if lmi[0] != lmj[0]:
                continue
            lcm = mono_lcm(lmi[1], lmj[1])
            sugar = max(si + mono_deg(lcm) - mono_deg(lmi[1]),
                        sj + mono_deg(lcm) - mono_deg(lmj[1]))
            heapq.heappush(pairs, (sugar, (lmi[0], key((lmi[0], lcm))), i, j))

    def add(d, sugar):
        t = max(d, key=key)
        c = d[t]
        if c != 1:
            inv = pow(c, -1, p)
            d = {k: (v * inv) % p for k, v in d.items()}
        terms = tuple(sorted(d.items(), key=lambda kv: key(kv[0]), reverse=True))
        G.append((t, terms, sugar))
        push_pairs(len(G) - 1)

    seed = []
    for v in vectors:
        d = {k: c for k, c in _vec_to_dict(v).items() if c}
        if d:
            seed.append(d)
    seed.sort(key=lambda d: sorted(((key(t), c) for t, c in d.items()), reverse=True))
    for d in seed:
        add(d, _vdict_sugar(d))
    if not G:
        return ()

    while pairs:
        sugar, _, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        (posi, lmi), ti, _ = G[i]
        (posj, lmj), tj, _ = G[j]
        lcm = mono_lcm(lmi, lmj)
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            (posk, lmk), _, _ = G[k]
            if posk == posi and mono_divides(lmk, lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        budget.charge()
        si = mono_div(lcm, lmi)
        sj = mono_div(lcm, lmj)
        d = {}
        for (tpos, tm), tc in ti:
            tt = (tpos, mono_mul(tm, si))
            d[tt] = (d.get(tt, 0) + tc) % p
        for (tpos, tm), tc in tj:
            tt = (tpos, mono_mul(tm, sj))
            d[tt] = (d.get(tt, 0) - tc) % p
        d = {k: c for k, c in d.items() if c}
        rem = _nf_vecdict(d, [(lm, t) for lm, t, _ in G], ring, budget)
        if rem:
            add(rem, sugar)

    return _reduce_module_basis([dict(t) for _, t, _ in G], rank, ring, budget)


def _reduce_module_basis(dicts, rank, ring, budget):
    key = _mkey(ring)
    entries = []
    for d in dicts:
        if not d:
            continue
        t = max(d, key=key)
        entries.append((t, d))
    entries.sort(key=lambda e: (key(e[0]),
                                sorted(((key(t), c) for t, c in e[1].items()),
                                       reverse=True)))
    minimal = []
    for t, d in entries:
        if not any(kt[0] == t[0] and mono_divides(kt[1], t[1]) for kt, _ in minimal):
            minimal.append((t, d))
    basis = []
    for i, (t, d) in enumerate(minimal):
        others = []
        for j, (ot, od) in enumerate(minimal):
            if j == i:
                continue
            terms = tuple(sorted(od.items(), key=lambda kv: key(kv[0]), reverse=True))
            others.append((ot, terms))
        rem = _nf_vecdict(dict(d), others, ring, budget)
        if rem:
            lt = max(rem, key=key)
            c = rem[lt]
            if c != 1:
                inv = pow(c, -1, ring.p)
                rem = {k: (v * inv) % ring.p for k, v in rem.items()}
            basis.append(rem)
    basis.sort(key=lambda d: key(max(d, key=key)))
    return tuple(_dict_to_vec(d, rank, ring) for d in basis)


def module_normal_form(vec, gb, rank, ring, budget=None):
    budget = Budget.ensure(budget)
    key = _mkey(ring)
    basis = []
    for v in gb:
        d = _vec_to_dict(v)
        if not d:
            continue
        t = max(d, key=key)
        terms = tuple(sorted(d.items(), key=lambda kv: key(kv[0]), reverse=True))
        basis.append((t, terms))
    rem = _nf_vecdict(_vec_to_dict(vec), basis, ring, budget)
    return _dict_to_vec(rem, rank, ring)


def in_module(vec, gb, rank, ring, budget=None):
    return vec_is_zero(module_normal_form(vec, gb, rank, ring, budget))


# ---------------------------------------------------------------------------
# syzygies

def syzygy_module(columns, rank, ring, budget=None):
    """Generators of {v : sum v_j * columns[j] = 0} as vectors of length
    len(columns), via the elimination embedding into S^(rank + #columns)."""
    columns = list(columns)
    c = len(columns)
    if c == 0:
        return ()
    stacked = []
    zero = ring.zero()
    one = ring.one()
    for j, col in enumerate(columns):
        if len(col) != rank:
            raise ValueError("column length does not match ambient rank")
        tag = tuple(one if t == j else zero for t in range(c))
        stacked.append(tuple(col) + tag)
    gb = module_groebner(stacked, rank + c, ring, budget)
    syz = []
    for v in gb:
        if all(entry.is_zero for entry in v[:rank]):
            syz.append(v[rank:])
    return tuple(syz)


# ---------------------------------------------------------------------------
# presentations

class ModulePresentation:
    """M = S^rank / column span of `columns` (each column a length-rank
    tuple of polynomials).  The cyclic case rank=1 is R/J."""

    __slots__ = ("ring", "rank", "columns")

    def __init__(self, ring, rank, columns=()):
        self.ring = ring
        self.rank = int(rank)
        fixed = []
        for col in columns:
            col = tuple(ring.poly(e) if isinstance(e, str)
                        else e.transported(ring) for e in col)
            if len(col) != self.rank:
                raise ValueError("relation column has wrong length")
            if not vec_is_zero(col):
                fixed.append(col)
        self.columns = tuple(fixed)

    @classmethod
    def cyclic(cls, ring, gens):
        if isinstance(gens, Ideal):
            gens = gens.gens
        return cls(ring, 1, [(g,) for g in gens])

    @classmethod
    def free(cls, ring, rank=1):
        return cls(ring, rank, ())

    def cyclic_ideal(self):
        if self.rank != 1:
            raise ValueError("not a cyclic presentation")
        return Ideal(self.ring, [c[0] for c in self.columns])

    def lifted_columns(self):
        """Relation columns over the free ring, with one column per quotient
        generator and basis position appended."""
        free = self.ring.free()
        cols = [tuple(e.transported(free) for e in col) for col in self.columns]
        zero = free.zero()
        for q in self.ring.quotient:
            for i in range(self.rank):
                cols.append(tuple(q if j == i else zero for j in range(self.rank)))
        return cols

    def relation_basis(self, budget=None):
        return module_groebner(self.lifted_columns(), self.rank,
                               self.ring.free(), budget)

    def is_zero_module(self, budget=None):
        free = self.ring.free()
        gb = self.relation_basis(budget)
        return all(in_module(unit_vector(free, self.rank, i), gb, self.rank,
                             free, budget)
                   for i in range(self.rank))

    def __repr__(self):
        if not self.columns:
            return f"free module of rank {self.rank} over {self.ring!r}"
        cols = "; ".join("(" + ", ".join(str(e) for e in col) + ")"
                         for col in self.columns)
        return f"coker[{cols}] over {self.ring!r}"


def is_graded(pres):
    """True when the relation matrix is homogeneous for some assignment of
    degrees to the basis rows (graded Nakayama territory)."""
    cols = pres.lifted_columns()
    for col in cols:
        for e in col:
            if e and not e.is_homogeneous:
                return False
    row_deg = {0: 0}
    changed = True
    while changed:
        changed = False
        for col in cols:
            known = [(i, e) for i, e in enumerate(col) if e and i in row_deg]
            if not known:
                continue
            i0, e0 = known[0]
            cdeg = row_deg[i0] + e0.degree()
            for i, e in enumerate(col):
                if not e:
                    continue
                want = cdeg - e.degree()
                if i in row_deg:
                    if row_deg[i] != want:
                        return False
                else:
                    row_deg[i] = want
                    changed = True
    return True


# ---------------------------------------------------------------------------
# free resolutions

class FreeComplex:
    """Composable matrices D_1, ..., D_n with D_i . D_{i+1} = 0; D_i is a
    tuple of columns over S^{rank(i-1)}."""

    __slots__ = ("ring", "rank0", "diffs")

    def __init__(self, ring, rank0, diffs):
        self.ring = ring
        self.rank0 = rank0
        self.diffs = [tuple(d) for d in diffs]

    @property
    def length(self):
        return len(self.diffs)

    def rank(self, i):
        if i == 0:
            return self.rank0
        return len(self.diffs[i - 1])

    def composes_to_zero(self, budget=None):
        for i in range(1, len(self.diffs)):
            upper = self.diffs[i]
            lower = self.diffs[i - 1]
            for col in upper:
                image = apply_columns(lower, col, self.ring, self.rank(i - 1))
                if not vec_is_zero(image):
                    return False
        return True


def _irredundant_columns(cols, rank, ring, budget):
    """Drop columns lying in the span of the others; deterministic order."""
    key = _mkey(ring)

    def canon(col):
        d = _vec_to_dict(col)
        return sorted(((key(t), c) for t, c in d.items()), reverse=True)

    cols = sorted((c for c in cols if not vec_is_zero(c)), key=canon)
    i = len(cols) - 1
    while i >= 0 and len(cols) > 1:
        others = cols[:i] + cols[i + 1:]
        gb = module_groebner(others, rank, ring, budget)
        if in_module(cols[i], gb, rank, ring, budget):
            cols = others
        i -= 1
    return cols


def _unit_entry(col):
    for i, e in enumerate(col):
        if e and e.is_constant:
            return i
    return None


def _unit_prune_pair(cols, syz, ring):
    """Split trivial summands off the pair (D, Syz(D)): a unit entry in a
    syzygy column says one column of D is redundant.  Returns the pruned
    pair; spans and exactness are preserved."""
    cols = list(cols)
    syz = [list(s) for s in syz]
    while True:
        hit = None
        for b, s in enumerate(syz):
            a = _unit_entry(s)
            if a is not None:
                hit = (a, b)
                break
        if hit is None:
            break
        a, b = hit
        u = syz[b][a]
        uinv = pow(u.lc(), -1, ring.p)
        for t, s in enumerate(syz):
            if t == b or s[a].is_zero:
                continue
            factor = s[a] * uinv
            syz[t] = [se - factor * be for se, be in zip(s, syz[b])]
        syz.pop(b)
        for s in syz:
            s.pop(a)
        cols.pop(a)
    return [tuple(c) for c in cols], [tuple(s) for s in syz]


def _prune_unit_generators(cols, rank, ring):
    """Unit entries in a presentation matrix mean redundant module
    generators; split them off (rank drops)."""
    cols = [list(c) for c in cols]
    while True:
        hit = None
        for b, col in enumerate(cols):
            a = _unit_entry(col)
            if a is not None:
                hit = (a, b)
                break
        if hit is None:
            break
        a, b = hit
        u = cols[b][a]
        uinv = pow(u.lc(), -1, ring.p)
        for t, col in enumerate(cols):
            if t == b or col[a].is_zero:
                continue
            factor = col[a] * uinv
            cols[t] = [ce - factor * be for ce, be in zip(col, cols[b])]
        cols.pop(b)
        for col in cols:
            col.pop(a)
        rank -= 1
    return [tuple(c) for c in cols if not vec_is_zero(tuple(c))], rank


def free_resolution(pres, cap=8, budget=None):
    """Iterated syzygies with minimality pruning.  Returns (FreeComplex, pd)
    where pd is None when the resolution did not terminate within cap.
    Requires a free ring; the projective-dimension oracle is graded-only by
    contract but the computation itself just needs the ring."""
    budget = Budget.ensure(budget)
    ring = pres.ring
    if ring.is_quotient:
        raise ValueError("free resolutions are computed over the free ring")
    rank = pres.rank
    cols = [c for c in pres.columns if not vec_is_zero(c)]
    cols, rank = _prune_unit_generators(cols, rank, ring)
    cols = _irredundant_columns(cols, rank, ring, budget)
    if not cols:
        return FreeComplex(ring, rank, []), 0
    diffs = [(rank, list(cols))]
    pd = None
    for step in range(1, cap + 1):
        codrank, cur = diffs[-1]
        syz = [s for s in syzygy_module(cur, codrank, ring, budget)
               if not vec_is_zero(s)]
        while True:
            syz = _irredundant_columns(syz, len(cur), ring, budget)
            cur2, syz2 = _unit_prune_pair(cur, syz, ring)
            if len(cur2) == len(cur) and len(syz2) == len(syz):
                cur, syz = cur2, syz2
                break
            cur, syz = cur2, syz2
        diffs[-1] = (codrank, cur)
        if not syz:
            pd = step
            break
        diffs.append((len(cur), syz))
    complex_ = FreeComplex(ring, rank, [tuple(d[1]) for d in diffs])
    return complex_, pd


def projective_dimension(pres, cap=8, budget=None):
    _, pd = free_resolution(pres, cap, budget)
    return pd


# ---------------------------------------------------------------------------
# annihilators and module colons

def annihilator(pres, budget=None):
    """{r : r*M = 0} as an ideal, via syzygies of [e_j | relations] for each
    generator, intersected over j."""
    budget = Budget.ensure(budget)
    free = pres.ring.free()
    cols = pres.lifted_columns()
    result = None
    for j in range(pres.rank):
        ej = unit_vector(free, pres.rank, j)
        syz = syzygy_module([ej] + cols, pres.rank, free, budget)
        gens = [s[0] for s in syz if s[0]]
        part = Ideal(free, gens)
        result = part if result is None else intersect(result, part, budget)
    if result is None:
        result = Ideal(free, [free.one()])  # rank 0: the zero module
    return Ideal(pres.ring, result.gens)


def module_colon_by_element(cols, rank, f, ring, budget=None):
    """Generators of {w in S^rank : f*w in column span}, via syzygies of
    [f*I | columns]."""
    budget = Budget.ensure(budget)
    zero = ring.zero()
    aug = []
    for i in range(rank):
        aug.append(tuple(f if j == i else zero for j in range(rank)))
    aug += list(cols)
    syz = syzygy_module(aug, rank, ring, budget)
    out = []
    for s in syz:
        w = s[:rank]
        if not vec_is_zero(w):
            out.append(w)
    return out
