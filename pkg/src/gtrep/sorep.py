"""Irreducible o(2n+1) modules on decorated double-row pattern bases.

The diagonal and lowering generators evaluate directly. The raising
generators come from a two-step composite whose individual steps can hit
removable poles; those columns are recomputed with every pattern entry
shifted by a formal parameter (the top row included, which amounts to
working in a nearby generic module) and the limit taken at zero. A pole
surviving the limit is a construction failure, never silently dropped.

Index convention: generator slots are pairs (i, j) with -n <= i, j <= n;
F(-j,-i) = -F(i,j), so F(i,-i) = 0.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import F1, PoleError, RationalFunction, UniPoly, rf_limit_at
from .linalg import Operator, rref
from .patterns import PatternB, check_weight_so, enumerate_patterns_b

HALF = Fraction(1, 2)


class ConstructionError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DeformContext:
    """Evaluates pattern data as plain Fractions or as rational functions
    of the deformation parameter. profile "uniform" shifts every entry by
    the parameter; "per-level" shifts level-r entries by r times it."""

    __slots__ = ("deformed", "profile")

    def __init__(self, deformed=False, profile="uniform"):
        if profile not in ("uniform", "per-level"):
            raise ValueError("unknown deformation profile %r" % (profile,))
        self.deformed = deformed
        self.profile = profile

    def _mult(self, level):
        return 1 if self.profile == "uniform" else level

    def entry(self, h, level):
        # h: HalfInt pattern entry (or derived l-value) living at `level`
        if not self.deformed:
            return h.as_fraction()
        return RationalFunction(UniPoly((h.as_fraction(), self._mult(level))))

    def const(self, x):
        x = Fraction(x)
        if not self.deformed:
            return x
        return RationalFunction.const(x)


def _lu(ctx, pat, k, i):
    # l_{ki}; the i = 0 value is a fixed constant, never deformed
    if i == 0:
        return ctx.const(-HALF)
    return ctx.entry(pat.lval(k, i), k)


def _lp(ctx, pat, k, i):
    return ctx.entry(pat.lpr(k, i), k)


def _wt(ctx, pat, k):
    # F(k,k) eigenvalue of the (possibly non-basis) array, deformed along
    # with its entries; evaluated per term on the target array
    base = pat.weight()[k - 1].as_fraction()
    if not ctx.deformed:
        return base
    m = ctx._mult
    drift = k * m(k) - (k - 1) * m(k - 1)
    return RationalFunction(UniPoly((base, Fraction(drift))))


def mid_row_prefactor(ctx, pat, k, i):
    """Prefactor over the level k-1 l-values; slot i = 0 uses the fixed
    -1/2. Denominators here are the only coefficient factors that can
    vanish, and only via the +1/2 pairing in the integer class."""
    li = _lu(ctx, pat, k - 1, i)
    acc = ctx.const(1)
    for a in range(1, k):
        la = _lu(ctx, pat, k - 1, a)
        if a != i:
            acc = acc / (li - la)
        acc = acc / (li + la)
    return acc


def prime_shift_weight(ctx, pat, k, i, x):
    """Interpolation-style weight attached to raising primed slot i of
    level k, evaluated at x."""
    acc = ctx.const(1)
    lpi = _lp(ctx, pat, k, i)
    for a in range(1, k + 1):
        if a == i:
            continue
        la = _lp(ctx, pat, k, a)
        acc = acc * (x + la + 1) * (x - la) / (la - lpi)
    return acc


def prime_drop_weight(ctx, pat, k, i):
    """Coefficient attached to lowering primed slot i of level k."""
    lpi = _lp(ctx, pat, k, i)
    sig = pat.sigma[k - 1]
    acc = lpi * (1 - 2 * sig - 2 * lpi)
    for a in range(1, k + 1):
        acc = acc * (_lu(ctx, pat, k, a) - lpi)
    for a in range(1, k):
        acc = acc * (_lu(ctx, pat, k - 1, a) - lpi)
    for a in range(1, k + 1):
        if a != i:
            acc = acc / (_lp(ctx, pat, k, a) - lpi)
    return acc


def _sig_case_terms(ctx, pat, k):
    """The sigma-flip branch: list of (raw target, coeff thunk) before the
    shared prefactor and denominators are applied."""
    sk = pat.sigma[k - 1]
    skm = pat.sigma[k - 2] if k >= 2 else 0
    base = [("sig", k)] + ([("sig", k - 1)] if k >= 2 else [])
    x0 = ctx.const(-HALF)
    out = []
    if (sk, skm) == (0, 0):
        sign = ctx.const(1 if k % 2 == 0 else -1)
        out.append((pat.shifted(base), lambda s=sign: s))
    elif (sk, skm) == (1, 0):
        for j in range(1, k + 1):
            tgt = pat.shifted(base + [("p", k, j, +1)])
            out.append((tgt,
                        lambda j=j: prime_shift_weight(ctx, pat, k, j, x0)))
    elif (sk, skm) == (0, 1):
        for m in range(1, k):
            tgt = pat.shifted(base + [("p", k - 1, m, +1)])
            out.append((tgt,
                        lambda m=m: -prime_shift_weight(ctx, pat, k - 1, m, x0)))
    else:
        sign = 1 if (k - 1) % 2 == 0 else -1
        for j in range(1, k + 1):
            for m in range(1, k):
                tgt = pat.shifted(base + [("p", k, j, +1), ("p", k - 1, m, +1)])
                out.append((tgt, lambda j=j, m=m:
                            sign * prime_shift_weight(ctx, pat, k, j, x0)
                            * prime_shift_weight(ctx, pat, k - 1, m, x0)))
    return out


def lower_step_terms(ctx, pat, k, u=None):
    """Expansion of the mixed lowering generator at level k.

    With u None this is the plain generator F(k-1,-k); with a parameter u
    each term gains the resolvent denominator evaluated on its target (all
    targets sit one eigenvalue step above the source, so the three
    denominator shapes match the source-side normal forms). Yields
    (raw target array, coeff thunk); thunks are only called for targets
    that survive the caller's validity filter, so branches whose targets
    all drop never evaluate their (possibly singular) prefactors.
    """
    terms = []
    for tgt, thunk in _sig_case_terms(ctx, pat, k):
        def coeff(tgt=tgt, thunk=thunk):
            c = mid_row_prefactor(ctx, pat, k, 0) * thunk()
            if u is not None:
                c = c / (ctx.const(u) + _wt(ctx, tgt, k) - Fraction(3, 2))
            return c
        terms.append((tgt, coeff))
    for i in range(1, k):
        tgt = pat.shifted([("u", k - 1, i, -1)])

        def coeff_minus(i=i, tgt=tgt):
            li = _lu(ctx, pat, k - 1, i)
            c = -mid_row_prefactor(ctx, pat, k, i) / (li - HALF)
            if u is not None:
                c = c / (ctx.const(u) - li + _wt(ctx, tgt, k) - 1)
            return c
        terms.append((tgt, coeff_minus))

        for j in range(1, k + 1):
            for m in range(1, k):
                tgt = pat.shifted([("p", k, j, +1), ("u", k - 1, i, +1),
                                   ("p", k - 1, m, +1)])

                def coeff_plus(i=i, j=j, m=m, tgt=tgt):
                    li = _lu(ctx, pat, k - 1, i)
                    c = (mid_row_prefactor(ctx, pat, k, i)
                         * prime_shift_weight(ctx, pat, k, j, li)
                         * prime_shift_weight(ctx, pat, k - 1, m, li)
                         / (li + HALF))
                    if u is not None:
                        c = c / (ctx.const(u) + li + _wt(ctx, tgt, k) - 1)
                    return c
                terms.append((tgt, coeff_plus))
    return terms


def prime_drop_terms(ctx, pat, k):
    """Expansion of the primed-entry lowering step at level k."""
    terms = []
    for i in range(1, k + 1):
        tgt = pat.shifted([("p", k, i, -1)])

        def coeff(i=i, tgt=tgt):
            return (prime_drop_weight(ctx, pat, k, i)
                    * (_wt(ctx, tgt, k) - _lp(ctx, pat, k, i) + 1))
        terms.append((tgt, coeff))
    return terms


class SoBasis:
    __slots__ = ("lam", "n", "dim", "patterns", "index", "weights")

    def __init__(self, lam, patterns):
        self.lam = lam
        self.n = len(lam)
        self.patterns = patterns
        self.dim = len(patterns)
        self.index = {p: i for i, p in enumerate(patterns)}
        self.weights = tuple(p.weight() for p in patterns)

    def highest_index(self):
        # column-constant pattern: all sigma 0, every stored row a
        # truncation of the highest weight
        pat = PatternB([0] * self.n,
                       [self.lam[:k] for k in range(1, self.n + 1)],
                       [self.lam[:k] for k in range(1, self.n + 1)])
        return self.index[pat]


def build_f_diag(basis, k):
    op = Operator(basis.dim)
    for c in range(basis.dim):
        w = basis.weights[c][k - 1]
        if w.d:
            op.ent[(c, c)] = w.as_fraction()
    return op


def _single_step(basis, k, term_fn, profile):
    """Evaluate a one-step generator; per-entry deformed retry on poles."""
    plain = DeformContext(False, profile)
    op = Operator(basis.dim)
    for c, pat in enumerate(basis.patterns):
        for tgt, thunk in term_fn(plain, pat, k):
            if not tgt.full_valid():
                continue
            r = basis.index[tgt]
            try:
                v = thunk()
            except ZeroDivisionError:
                eps = DeformContext(True, profile)
                match = [th for tg, th in term_fn(eps, pat, k) if tg == tgt]
                total = RationalFunction.const(0)
                for th in match:
                    total = total + th()
                try:
                    v = rf_limit_at(total, 0)
                except PoleError as e:
                    raise ConstructionError(
                        "pole in generator (%d) at column %d target %d"
                        % (k, c, r), witness=e.witness)
            if v:
                op.add_to(r, c, v)
    return op


def build_f_lower(basis, k, profile="uniform"):
    return _single_step(basis, k, lambda ctx, pat, kk: lower_step_terms(ctx, pat, kk), profile)


def build_phi_minus(basis, k, profile="uniform"):
    return _single_step(basis, k, prime_drop_terms, profile)


def build_phi_u(basis, k, u, deformed=False, profile="uniform"):
    """The parametric lowering step as an explicit matrix. In deformed mode
    the result keeps rational-function entries and extends over the
    generically-valid arrays reachable from the basis (extra columns are
    never sources); used for traces and diagnostics."""
    if not deformed:
        return _single_step(
            basis, k, lambda ctx, pat, kk: lower_step_terms(ctx, pat, kk, u),
            profile)
    ctx = DeformContext(True, profile)
    extra = []
    extra_index = {}

    def idx_of(pat):
        if pat in basis.index:
            return basis.index[pat]
        if pat not in extra_index:
            extra_index[pat] = basis.dim + len(extra)
            extra.append(pat)
        return extra_index[pat]

    entries = {}
    for c, pat in enumerate(basis.patterns):
        for tgt, thunk in lower_step_terms(ctx, pat, k, u):
            if not tgt.generic_valid():
                continue
            r = idx_of(tgt)
            v = thunk()
            if v:
                prev = entries.get((r, c))
                entries[(r, c)] = v if prev is None else prev + v
    return entries, tuple(extra)


def raise_column_terms(basis, k, pat, ctx):
    """All composite paths from one source pattern: returns {target: value}
    in ctx arithmetic. Intermediates pass the interleaving-only filter;
    final targets must be basis members."""
    acc = {}

    def add(tgt, v):
        if not v:
            return
        prev = acc.get(tgt)
        acc[tgt] = v if prev is None else prev + v

    # first composite term: primed drop, then parametric step at u = 2
    for mid, thunk1 in prime_drop_terms(ctx, pat, k):
        if not mid.generic_valid():
            continue
        c1 = thunk1()
        if not c1:
            continue
        for tgt, thunk2 in lower_step_terms(ctx, mid, k, 2):
            if not tgt.full_valid():
                continue
            add(tgt, thunk2() * c1)
    # second composite term: parametric step at u = 0, then primed drop
    for mid, thunk1 in lower_step_terms(ctx, pat, k, 0):
        if not mid.generic_valid():
            continue
        c1 = thunk1()
        if not c1:
            continue
        for tgt, thunk2 in prime_drop_terms(ctx, mid, k):
            if not tgt.full_valid():
                continue
            add(tgt, -(thunk2() * c1))
    return acc


def build_f_raise(basis, k, profile="uniform", force_deformed=False,
                  trace=None):
    """The raising generator at level k from the two-step composite.

    Fast path: plain rational arithmetic per source column. Any division
    by zero sends the whole column through the deformed route, where the
    per-target sums are rational functions whose limit at zero is taken
    after full cancellation between paths (per-path limits alone would
    miss pole pairs that cancel in the sum).
    """
    op = Operator(basis.dim)
    plain = DeformContext(False, profile)
    eps = DeformContext(True, profile)
    for c, pat in enumerate(basis.patterns):
        use_deformed = force_deformed
        if not use_deformed:
            try:
                col = raise_column_terms(basis, k, pat, plain)
            except ZeroDivisionError:
                use_deformed = True
        if use_deformed:
            dcol = raise_column_terms(basis, k, pat, eps)
            col = {}
            for tgt, v in dcol.items():
                if trace is not None:
                    trace.append((k, c, basis.index[tgt], str(v)))
                try:
                    lim = rf_limit_at(v, 0)
                except PoleError as e:
                    raise ConstructionError(
                        "raising generator pole at level %d column %d" % (k, c),
                        witness=e.witness)
                if lim:
                    col[tgt] = lim
        for tgt, v in col.items():
            op.add_to(basis.index[tgt], c, v)
    return op


# ------------------------------------------------------------- closure


def defining_operators(n):
    """All F(i,j) in the defining (2n+1)-dim module, basis ordered
    -n..-1, 0, 1..n."""
    dim = 2 * n + 1

    def pos(i):
        return i + n

    ops = {}
    for i in range(-n, n + 1):
        for j in range(-n, n + 1):
            m = Operator(dim)
            m.add_to(pos(i), pos(j), F1)
            m.add_to(pos(-j), pos(-i), -F1)
            ops[(i, j)] = m
    return ops


def _canon_slot(p, q):
    # F(p,q) and -F(-q,-p) are the same operator; F(p,-p) = 0
    if p == -q:
        return None, 0
    alt = (-q, -p)
    if (p, q) <= alt:
        return (p, q), 1
    return alt, -1


def table_bracket(a, b, c, d):
    """[F(a,b), F(c,d)] as {canonical slot: coefficient}."""
    raw = []
    if b == c:
        raw.append(((a, d), 1))
    if d == a:
        raw.append(((c, b), -1))
    if b == -d:
        raw.append(((c, -a), 1))
    if a == -c:
        raw.append(((-d, b), 1))
    out = {}
    for slot, coef in raw:
        cs, sgn = _canon_slot(*slot)
        if cs is None:
            continue
        out[cs] = out.get(cs, 0) + sgn * coef
    return {s: Fraction(v) for s, v in out.items() if v}


def structure_table(n, _cache={}):
    """The full bracket table for slots -n..n, revalidated against the
    elementary-matrix commutators rather than trusted as written."""
    if n in _cache:
        return _cache[n]
    defs = defining_operators(n)
    table = {}
    slots = [(i, j) for i in range(-n, n + 1) for j in range(-n, n + 1)]
    for ab in slots:
        for cd in slots:
            terms = table_bracket(*ab, *cd)
            table[(ab, cd)] = terms
            chk = defs[ab].commutator(defs[cd])
            for slot, coef in terms.items():
                chk = chk - defs[slot].scale(coef)
            if chk:
                raise ConstructionError("structure table mismatch at %s,%s"
                                        % (ab, cd))
    _cache[n] = table
    return table


def close_generators(n, seeds, dim):
    """Extend the seed slots to every F(i,j) using the bracket table.

    Deterministic: missing slots and candidate pairs are scanned in sorted
    order; each new slot comes from the first bracket relation in which it
    is the only unknown."""
    table = structure_table(n)
    known = {}

    def store(slot, op):
        known[slot] = op
        alt = (-slot[1], -slot[0])
        if alt != slot:
            known[alt] = -op

    for i in range(-n, n + 1):
        known[(i, -i)] = Operator(dim)
    for slot, op in seeds.items():
        store(slot, op)

    all_slots = sorted((i, j) for i in range(-n, n + 1)
                       for j in range(-n, n + 1))
    while True:
        missing = [s for s in all_slots if s not in known]
        if not missing:
            break
        progress = False
        for slot in missing:
            cs, sgn = _canon_slot(*slot)
            found = None
            for ab in sorted(known):
                for cd in sorted(known):
                    terms = table_bracket(*ab, *cd)
                    if cs not in terms:
                        continue
                    if any(s != cs and not _slot_known(known, s)
                           for s in terms):
                        continue
                    found = (ab, cd, terms)
                    break
                if found:
                    break
            if not found:
                continue
            ab, cd, terms = found
            acc = known[ab].commutator(known[cd])
            for s, coef in terms.items():
                if s != cs:
                    acc = acc - known[s].scale(coef)
            op = acc.scale(1 / terms[cs])
            if sgn < 0:
                op = -op
            store(slot, op)
            progress = True
        if not progress:
            raise ConstructionError("bracket closure stalled; missing %s"
                                    % (missing,))
    return known


def _slot_known(known, s):
    return s in known or (-s[1], -s[0]) in known


class SoRep:
    __slots__ = ("lam", "n", "dim", "patterns", "index", "weights", "gens")

    def __init__(self, basis, gens):
        self.lam = basis.lam
        self.n = basis.n
        self.dim = basis.dim
        self.patterns = basis.patterns
        self.index = basis.index
        self.weights = basis.weights
        self.gens = gens

    def gen(self, i, j):
        return self.gens[(i, j)]

    def highest_index(self):
        return SoBasis.highest_index(self)


def build_so(lam, cap=None, profile="uniform", force_deformed=False,
             trace=None):
    """All (2n+1)^2 generator matrices over the pattern basis."""
    lam = check_weight_so(lam)
    n = len(lam)
    basis = SoBasis(lam, enumerate_patterns_b(lam, cap))
    seeds = {}
    for k in range(1, n + 1):
        seeds[(k, k)] = build_f_diag(basis, k)
        seeds[(k - 1, -k)] = build_f_lower(basis, k, profile)
        seeds[(k - 1, k)] = build_f_raise(basis, k, profile,
                                          force_deformed=force_deformed,
                                          trace=trace)
    gens = close_generators(n, seeds, basis.dim)
    rep = SoRep(basis, gens)
    if any(x.d for x in lam):
        _check_span_rank(rep)
    return rep


def _check_span_rank(rep):
    # the built generators must span a Lie algebra of the right dimension
    rows = []
    seen = set()
    for i in range(-rep.n, rep.n + 1):
        for j in range(-rep.n, rep.n + 1):
            cs, _ = _canon_slot(i, j)
            if cs is None or cs in seen:
                continue
            seen.add(cs)
            op = rep.gens[cs]
            row = {r * rep.dim + c: v for (r, c), v in op.ent.items()}
            if row:
                rows.append(row)
    want = rep.n * (2 * rep.n + 1)
    got = len(rref(rows, rep.dim * rep.dim))
    if got != want:
        raise ConstructionError("generator span has rank %d, expected %d"
                                % (got, want))
