"""Koszul homology, depth at the origin, and depth under Frobenius.

The Frobenius functor acts on a presentation by raising every relation
entry to the q-th power; for a cyclic module R/J this is R/J^[q], the
concrete left-module avatar under which left multiplication by the ring is
ordinary multiplication.  Depth at the origin is the Koszul grade of the
variables, computed homology group by homology group:

    H_i(x; M) != 0  <=>  some kernel generator of the i-th differential
                         (tensored with the presentation) escapes the span
                         of the (i+1)-st image and the relation block.

Kernels come from syzygies of [d_i | relations], images are module
membership questions, so everything reduces to the module engine.  In the
graded free-ring case the answer is cross-checked against the projective
dimension through the depth + pd = n identity.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

from .budget import Budget, InternalInvariantError
from .frobenius import fedder_f_pure
from .modules import (FreeComplex, ModulePresentation, free_resolution,
                      in_module, is_graded, module_colon_by_element,
                      module_groebner, syzygy_module, unit_vector,
                      vec_is_zero)


# ---------------------------------------------------------------------------
# the Frobenius functor on presentations

def frobenius_functor(M, e):
    """Presentation of F^e(M): every relation entry to the power p^e.
    Quotient-ring relations are appended unbracketed at computation time,
    matching R/J^[q] = S/(J^[q] + I0) in the cyclic case."""
    if e < 0:
        raise ValueError("e must be >= 0")
    cols = [tuple(entry.frobenius(e) for entry in col) for col in M.columns]
    return ModulePresentation(M.ring, M.rank, cols)


# ---------------------------------------------------------------------------
# Koszul complexes

def _subsets(n, i):
    return list(itertools.combinations(range(n), i))


def koszul_differential(xs, i, ring):
    """Columns of d_i : K_i -> K_{i-1} for the Koszul complex on xs, with
    subsets ordered lexicographically and the usual alternating signs."""
    n = len(xs)
    rows = {s: idx for idx, s in enumerate(_subsets(n, i - 1))}
    cols = []
    zero = ring.zero()
    for S in _subsets(n, i):
        col = [zero] * len(rows)
        for k, j in enumerate(S):
            rest = S[:k] + S[k + 1:]
            term = xs[j] if k % 2 == 0 else -xs[j]
            col[rows[rest]] = col[rows[rest]] + term
        cols.append(tuple(col))
    return cols


def koszul_complex(xs, ring):
    """The full Koszul complex on xs as a FreeComplex (rank-one
    coefficients), mainly for d.d = 0 sanity checks."""
    n = len(xs)
    return FreeComplex(ring, 1, [koszul_differential(xs, i, ring)
                                 for i in range(1, n + 1)])


def _tensor_identity(cols, r, ring):
    """Tensor scalar Koszul columns with the identity of S^r: each column
    over S^b becomes r columns over S^(b*r), coordinates grouped
    (block, generator)."""
    out = []
    zero = ring.zero()
    if not cols:
        return out
    b = len(cols[0])
    for col in cols:
        for t in range(r):
            vec = [zero] * (b * r)
            for blockrow, entry in enumerate(col):
                if entry:
                    vec[blockrow * r + t] = entry
            out.append(tuple(vec))
    return out


def _block_relations(rel_cols, blocks, r, ring):
    """Relation columns copied into each of `blocks` block positions."""
    out = []
    zero = ring.zero()
    for s in range(blocks):
        for col in rel_cols:
            vec = [zero] * (blocks * r)
            for t in range(r):
                vec[s * r + t] = col[t]
            out.append(tuple(vec))
    return out


def koszul_homology_nonzero(xs, M, i, budget=None):
    """Decide H_i(x; M) != 0 for the presented module M."""
    budget = Budget.ensure(budget)
    free = M.ring.free()
    xs = [x.transported(free) for x in xs]
    n = len(xs)
    if i < 0 or i > n:
        return False
    r = M.rank
    rel = M.lifted_columns()
    if i == 0:
        d1 = _tensor_identity(koszul_differential(xs, 1, free), r, free)
        span = d1 + _block_relations(rel, 1, r, free)
        gb = module_groebner(span, r, free, budget)
        return any(not in_module(unit_vector(free, r, t), gb, r, free, budget)
                   for t in range(r))
    b_i = comb(n, i)
    b_low = comb(n, i - 1)
    di = _tensor_identity(koszul_differential(xs, i, free), r, free)
    rel_low = _block_relations(rel, b_low, r, free)
    kernel = []
    for s in syzygy_module(di + rel_low, b_low * r, free, budget):
        head = s[:b_i * r]
        if not vec_is_zero(head):
            kernel.append(head)
    if not kernel:
        return False
    image = []
    if i < n:
        image = _tensor_identity(koszul_differential(xs, i + 1, free), r, free)
    span = image + _block_relations(rel, b_i, r, free)
    gb = module_groebner(span, b_i * r, free, budget)
    return any(not in_module(k, gb, b_i * r, free, budget) for k in kernel)


@dataclass
class KoszulProfile:
    """Which Koszul homology groups are nonzero, and the resulting grade
    n - (top nonzero index)."""

    sequence: tuple
    n: int
    nonzero_homology: frozenset

    @property
    def kgrade(self):
        if not self.nonzero_homology:
            return None
        return self.n - max(self.nonzero_homology)


def kgrade(xs, M, budget=None):
    """Full Koszul profile of the sequence xs on M."""
    budget = Budget.ensure(budget)
    xs = tuple(xs)
    n = len(xs)
    nonzero = frozenset(i for i in range(n + 1)
                        if koszul_homology_nonzero(xs, M, i, budget))
    return KoszulProfile(xs, n, nonzero)


# ---------------------------------------------------------------------------
# depth at the origin

def depth_at_origin(M, cross_check=True, budget=None):
    """Koszul depth of the variables on M; in the graded free-ring case the
    value is cross-checked against n - pd(M)."""
    budget = Budget.ensure(budget)
    free = M.ring.free()
    xs = list(free.gens())
    n = len(xs)
    depth = None
    for h in range(n, -1, -1):
        if koszul_homology_nonzero(xs, M, h, budget):
            depth = n - h
            break
    if depth is None:
        raise ValueError("module vanishes at the origin; depth undefined")
    if cross_check and not M.ring.is_quotient and is_graded(M):
        _, pd = free_resolution(M, cap=n, budget=budget)
        if pd is None:
            pd = n  # Hilbert's bound: the cap-n resolution always closes
        if depth != n - pd:
            raise InternalInvariantError(
                f"Koszul depth {depth} disagrees with n - pd = {n - pd}")
    return depth


# ---------------------------------------------------------------------------
# regular elements and sequences

def _module_span(cols, rank, ring, budget):
    return module_groebner(cols, rank, ring, budget)


def is_regular_element(f, cols, rank, ring, budget=None):
    """f is a nonzerodivisor on coker(cols) and does not act as the whole
    module (coker != f*coker)."""
    budget = Budget.ensure(budget)
    if f.is_zero:
        return False
    gb = _module_span(cols, rank, ring, budget)
    for w in module_colon_by_element(cols, rank, f, ring, budget):
        if not in_module(w, gb, rank, ring, budget):
            return False
    zero = ring.zero()
    aug = list(cols)
    for i in range(rank):
        aug.append(tuple(f if j == i else zero for j in range(rank)))
    gb_aug = _module_span(aug, rank, ring, budget)
    if all(in_module(unit_vector(ring, rank, i), gb_aug, rank, ring, budget)
           for i in range(rank)):
        return False
    return True


def _quotient_cols(cols, rank, f, ring):
    zero = ring.zero()
    out = list(cols)
    for i in range(rank):
        out.append(tuple(f if j == i else zero for j in range(rank)))
    return out


def regular_sequence_check(xs, M, e_range, budget=None):
    """For each level e, is xs a regular sequence on F^e(M)?  The all-true
    answer over a range is the finite evidence for regularity on the
    perfect-closure base change."""
    budget = Budget.ensure(budget)
    free = M.ring.free()
    xs = [x.transported(free) for x in xs]
    results = []
    for e in e_range:
        Fe = frobenius_functor(M, e)
        cols = Fe.lifted_columns()
        rank = Fe.rank
        ok = True
        for f in xs:
            if not is_regular_element(f, cols, rank, free, budget):
                ok = False
                break
            cols = _quotient_cols(cols, rank, f, free)
        results.append(ok)
    return results


# ---------------------------------------------------------------------------
# candidate pools for depth searches

MAX_EXHAUSTIVE_LINEAR = 512
MAX_EXHAUSTIVE_QUADRATIC = 4096


def _normalized_vectors(p, length):
    """Nonzero coefficient vectors with first nonzero entry 1 (one
    representative per scalar class), in lexicographic order."""
    for vec in itertools.product(range(p), repeat=length):
        if not any(vec):
            continue
        first = next(v for v in vec if v)
        if first != 1:
            continue
        yield vec


def linear_candidates(ring, seed=0, trials=512):
    """All linear forms up to scalar when p^n is small, else a seeded random
    sample.  Returns (forms, exhaustive)."""
    n, p = ring.nvars, ring.p
    gens = ring.gens()
    if p ** n <= MAX_EXHAUSTIVE_LINEAR:
        forms = []
        for vec in _normalized_vectors(p, n):
            f = ring.zero()
            for c, x in zip(vec, gens):
                if c:
                    f = f + c * x
            forms.append(f)
        return forms, True
    rng = random.Random(seed)
    forms, seen = [], set()
    while len(forms) < trials:
        vec = tuple(rng.randrange(p) for _ in range(n))
        if not any(vec) or vec in seen:
            continue
        seen.add(vec)
        f = ring.zero()
        for c, x in zip(vec, gens):
            if c:
                f = f + c * x
        forms.append(f)
    return forms, False


def quadratic_candidates(ring, seed=0, trials=256):
    """Homogeneous degree-2 forms, exhaustive for small coefficient spaces.
    Finite fields can lack linear regular elements, so depth searches fall
    back to these."""
    n, p = ring.nvars, ring.p
    monos = []
    for i in range(n):
        for j in range(i, n):
            exps = [0] * n
            exps[i] += 1
            exps[j] += 1
            monos.append(ring.monomial(exps))
    m = len(monos)
    if p ** m <= MAX_EXHAUSTIVE_QUADRATIC:
        forms = []
        for vec in _normalized_vectors(p, m):
            f = ring.zero()
            for c, mono in zip(vec, monos):
                if c:
                    f = f + c * mono
            forms.append(f)
        return forms, True
    rng = random.Random(seed)
    forms, seen = [], set()
    attempts = 0
    while len(forms) < trials and attempts < 50 * trials:
        attempts += 1
        vec = tuple(rng.randrange(p) for _ in range(m))
        if not any(vec) or vec in seen:
            continue
        seen.add(vec)
        f = ring.zero()
        for c, mono in zip(vec, monos):
            if c:
                f = f + c * mono
        forms.append(f)
    return forms, False


@dataclass
class DepthSearchReport:
    """Greedy regular-sequence search outcome: a certified lower bound with
    its witness sequence; exhaustive means every candidate pool was fully
    enumerated, so the bound is sharp for sequences drawn from the pools."""

    bound: int
    witness: tuple
    exhaustive: bool
    seed: int = 0


def classical_depth_search(M, seed=0, trials=512, max_degree=2, budget=None):
    """Greedy search for a regular sequence on M among linear forms, then
    homogeneous quadratics.  Returns a lower bound for depth with a
    witness."""
    budget = Budget.ensure(budget)
    free = M.ring.free()
    cols = M.lifted_columns()
    rank = M.rank
    witness = []
    exhaustive = True
    while True:
        pools = [linear_candidates(free, seed, trials)]
        if max_degree >= 2:
            pools.append(quadratic_candidates(free, seed, trials))
        found = None
        for forms, full in pools:
            if not full:
                exhaustive = False
            for f in forms:
                if is_regular_element(f, cols, rank, free, budget):
                    found = f
                    break
            if found is not None:
                break
        if found is None:
            return DepthSearchReport(len(witness), tuple(witness), exhaustive, seed)
        witness.append(found)
        cols = _quotient_cols(cols, rank, found, free)


# ---------------------------------------------------------------------------
# stabilizing depth

@dataclass
class SdepthReport:
    """depth(F^e(M)) for e = 0..e_max, with the eventual value detected by a
    run of `window` equal tail values; None means unresolved within e_max."""

    per_e_depth: list
    stabilized_value: int | None
    window: int
    f_pure: bool
    monotone: bool

    @property
    def unresolved(self):
        return self.stabilized_value is None


def sdepth(M, e_max=4, window=2, f_pure=None, cross_check=True, budget=None):
    """Stabilizing depth of M: the eventual constant value of depth under
    the Frobenius functor.  Over an F-pure ring the per-level values must be
    non-increasing; a violation is a hard engine failure."""
    budget = Budget.ensure(budget)
    if f_pure is None:
        if M.ring.is_quotient:
            f_pure = fedder_f_pure(M.ring, budget=budget).is_f_pure
        else:
            f_pure = True
    per_e = []
    for e in range(e_max + 1):
        d = depth_at_origin(frobenius_functor(M, e), cross_check, budget)
        per_e.append((e, d))
    values = [d for _, d in per_e]
    monotone = all(values[i + 1] <= values[i] for i in range(len(values) - 1))
    if f_pure and not monotone:
        raise InternalInvariantError(
            f"depth under Frobenius increased over an F-pure ring: {values}")
    stabilized = None
    if len(values) >= window and len(set(values[-window:])) == 1:
        stabilized = values[-1]
    return SdepthReport(per_e, stabilized, window, f_pure, monotone)


def cdepth_lower_bound(M, e_max=4, seed=0, trials=512, max_degree=2,
                       budget=None):
    """Longest sequence found that is regular on F^e(M) for every e <= e_max
    simultaneously; bounds the classical depth of the perfect-closure base
    change from below."""
    budget = Budget.ensure(budget)
    free = M.ring.free()
    levels = {}
    for e in range(e_max + 1):
        Fe = frobenius_functor(M, e)
        levels[e] = Fe.lifted_columns()
    rank = M.rank
    witness = []
    exhaustive = True

    def regular_everywhere(f):
        return all(is_regular_element(f, levels[e], rank, free, budget)
                   for e in range(e_max + 1))

    while True:
        pools = [linear_candidates(free, seed, trials)]
        if max_degree >= 2:
            pools.append(quadratic_candidates(free, seed, trials))
        found = None
        for forms, full in pools:
            if not full:
                exhaustive = False
            for f in forms:
                if regular_everywhere(f):
                    found = f
                    break
            if found is not None:
                break
        if found is None:
            return DepthSearchReport(len(witness), tuple(witness), exhaustive, seed)
        witness.append(found)
        for e in range(e_max + 1):
            levels[e] = _quotient_cols(levels[e], rank, found, free)


@dataclass
class KdepthReport:
    """Koszul profiles of the variables on F^e(M) per level; under the
    truncation isomorphism these are the profiles of the fractional bracket
    powers of the maximal ideal on the extension side."""

    profiles: list
    stable: bool
    stable_kgrade: int | None
    sdepth_value: int | None

    @property
    def matches_sdepth(self):
        return (self.stable_kgrade is not None
                and self.stable_kgrade == self.sdepth_value)


def kdepth_truncation_profile(M, e_max=4, window=2, budget=None):
    """Per-level Koszul profiles plus whether the nonzero-homology pattern
    is eventually constant with grade equal to the stabilizing depth."""
    budget = Budget.ensure(budget)
    free = M.ring.free()
    xs = list(free.gens())
    profiles = []
    for e in range(e_max + 1):
        profiles.append(kgrade(xs, frobenius_functor(M, e), budget))
    patterns = [p.nonzero_homology for p in profiles]
    stable = (len(patterns) >= window
              and all(p == patterns[-1] for p in patterns[-window:]))
    stable_kgrade = profiles[-1].kgrade if stable else None
    values = [p.kgrade for p in profiles]
    sdepth_value = None
    if len(values) >= window and len(set(values[-window:])) == 1:
        sdepth_value = values[-1]
    return KdepthReport(profiles, stable, stable_kgrade, sdepth_value)
