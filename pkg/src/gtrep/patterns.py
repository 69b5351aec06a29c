"""Pattern bases for the two chains.

Type A patterns are triangular arrays of rationals with integral
interleaving differences. Type B patterns carry one sigma bit per level,
a primed row per level and an unprimed row per level (top row fixed to the
highest weight), all entries non-positive members of one parity class.

Validity comes in two strengths. full_valid_b is basis membership: parity
class, non-positivity, both interleaving chains and the sigma bound.
generic_valid_b keeps only the interleaving chains; composite operators
pass through such arrays while their coefficients are regularized, and the
interleaving conditions are the ones stable under that deformation.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import HalfInt, format_rational, parse_rational


class DimensionCapError(Exception):
    """Enumeration would exceed the configured cap."""


def check_weight_gl(entries):
    """Validate a gl highest weight: non-increasing, integral differences."""
    w = tuple(Fraction(x) for x in entries)
    if not w:
        raise ValueError("empty weight")
    for a, b in zip(w, w[1:]):
        if a < b:
            raise ValueError("weight entries must be non-increasing")
        if (a - b).denominator != 1:
            raise ValueError("consecutive differences must be integers")
    return w


def check_weight_so(entries):
    """Validate an odd-orthogonal highest weight in the non-positive
    convention: 0 >= w_1 >= ... >= w_n, all integer or all half-odd."""
    w = tuple(x if isinstance(x, HalfInt) else
              HalfInt.from_fraction(Fraction(x)) for x in entries)
    if not w:
        raise ValueError("empty weight")
    par = w[0].d % 2
    for x in w:
        if x.d % 2 != par:
            raise ValueError("mixed parity classes in weight")
    if w[0].d > 0:
        raise ValueError("weight entries must be non-positive")
    for a, b in zip(w, w[1:]):
        if a.d < b.d:
            raise ValueError("weight entries must be non-increasing")
    return w


# ---------------------------------------------------------------- type A


class PatternA:
    """Triangular array; rows[k-1] is row k (length k), rows[n-1] on top."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)

    @property
    def n(self):
        return len(self.rows)

    def key(self):
        # top row constant across the basis, excluded
        out = []
        for k in range(self.n - 1, 0, -1):
            out.extend(self.rows[k - 1])
        return tuple(out)

    def weight(self):
        out = []
        prev = Fraction(0)
        for k in range(1, self.n + 1):
            s = sum(self.rows[k - 1], Fraction(0))
            out.append(s - prev)
            prev = s
        return tuple(out)

    def lval(self, k, i):
        # l_{ki} = entry - i + 1, 1-based i
        return self.rows[k - 1][i - 1] - i + 1

    def shifted(self, k, i, sign):
        rows = [list(r) for r in self.rows]
        rows[k - 1][i - 1] += sign
        return PatternA(rows)

    def interleaves(self):
        for k in range(2, self.n + 1):
            hi = self.rows[k - 1]
            lo = self.rows[k - 2]
            for i in range(k - 1):
                d1 = hi[i] - lo[i]
                d2 = lo[i] - hi[i + 1]
                if d1 < 0 or d2 < 0:
                    return False
                if d1.denominator != 1 or d2.denominator != 1:
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, PatternA) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "PatternA(%s)" % (self.rows,)

    def to_json(self):
        return {"rows": [[format_rational(x) for x in r] for r in self.rows]}

    @staticmethod
    def from_json(obj):
        return PatternA([[parse_rational(x) for x in r] for r in obj["rows"]])


def enumerate_patterns_a(lam, cap=None):
    """All valid type A patterns for the given top row, canonical order."""
    lam = check_weight_gl(lam)
    n = len(lam)
    out = []

    def descend(rows_acc, upper):
        if len(upper) == 1:
            pat = PatternA(list(reversed(rows_acc)))
            out.append(pat)
            if cap is not None and len(out) > cap:
                raise DimensionCapError("pattern count exceeds cap %d" % cap)
            return
        # choose the row below `upper`
        k = len(upper) - 1
        choices = []
        for i in range(k):
            lo = upper[i + 1]
            hi = upper[i]
            span = int(hi - lo)
            choices.append([lo + j for j in range(span + 1)])

        def rec(i, cur):
            if i == k:
                descend(rows_acc + [tuple(cur)], tuple(cur))
                return
            for v in choices[i]:
                cur.append(v)
                rec(i + 1, cur)
                cur.pop()

        rec(0, [])

    descend([tuple(lam)], tuple(lam))
    out.sort(key=PatternA.key)
    return tuple(out)


# ---------------------------------------------------------------- type B


MINUS_HALF = HalfInt(-1)  # l_{k0}, fixed under any deformation


class PatternB:
    """sigma bits, unprimed rows (rows[n-1] = highest weight) and primed
    rows; entries HalfInt. Construction performs no validity checks."""

    __slots__ = ("sigma", "rows", "primed")

    def __init__(self, sigma, rows, primed):
        self.sigma = tuple(int(s) for s in sigma)
        self.rows = tuple(tuple(x if isinstance(x, HalfInt) else
                                HalfInt.from_fraction(Fraction(x)) for x in r)
                          for r in rows)
        self.primed = tuple(tuple(x if isinstance(x, HalfInt) else
                                  HalfInt.from_fraction(Fraction(x)) for x in r)
                            for r in primed)

    @property
    def n(self):
        return len(self.sigma)

    def key(self):
        out = []
        for k in range(self.n, 0, -1):
            out.append(Fraction(self.sigma[k - 1]))
            out.extend(x.as_fraction() for x in self.primed[k - 1])
            if k >= 2:
                out.extend(x.as_fraction() for x in self.rows[k - 2])
        return tuple(out)

    def weight(self):
        out = []
        for k in range(1, self.n + 1):
            d = 2 * self.sigma[k - 1]
            d += 2 * sum(x.d for x in self.primed[k - 1])
            d -= sum(x.d for x in self.rows[k - 1])
            if k >= 2:
                d -= sum(x.d for x in self.rows[k - 2])
            out.append(HalfInt(d))
        return tuple(out)

    def lval(self, k, i):
        # l_{ki} = entry - i + 1/2; i = 0 is the fixed -1/2
        if i == 0:
            return MINUS_HALF
        return HalfInt(self.rows[k - 1][i - 1].d - 2 * i + 1)

    def lpr(self, k, i):
        return HalfInt(self.primed[k - 1][i - 1].d - 2 * i + 1)

    def shifted(self, moves):
        """Apply moves: ("u",k,i,s) unprimed, ("p",k,i,s) primed,
        ("sig",k) sigma flip. Returns a raw array, validity not judged."""
        sigma = list(self.sigma)
        rows = [list(r) for r in self.rows]
        primed = [list(r) for r in self.primed]
        for mv in moves:
            if mv[0] == "sig":
                k = mv[1]
                sigma[k - 1] ^= 1
            elif mv[0] == "u":
                _, k, i, s = mv
                rows[k - 1][i - 1] = HalfInt(rows[k - 1][i - 1].d + 2 * s)
            else:
                _, k, i, s = mv
                primed[k - 1][i - 1] = HalfInt(primed[k - 1][i - 1].d + 2 * s)
        return PatternB(sigma, rows, primed)

    def interleaves(self):
        n = self.n
        for k in range(1, n + 1):
            pr = self.primed[k - 1]
            ur = self.rows[k - 1]
            for i in range(k):
                if pr[i].d < ur[i].d:
                    return False
                if i + 1 < k and ur[i].d < pr[i + 1].d:
                    return False
            if k >= 2:
                below = self.rows[k - 2]
                for i in range(k - 1):
                    if pr[i].d < below[i].d:
                        return False
                    if below[i].d < pr[i + 1].d:
                        return False
        return True

    def full_valid(self):
        if not self.interleaves():
            return False
        par = self.rows[self.n - 1][0].d % 2
        zero_max = 0 if par == 0 else -1
        for rr in (self.rows, self.primed):
            for r in rr:
                for x in r:
                    if x.d % 2 != par or x.d > zero_max:
                        return False
        if par == 0:
            for k in range(1, self.n + 1):
                if self.sigma[k - 1] == 1 and self.primed[k - 1][0].d > -2:
                    return False
        return True

    # generic validity for composite intermediates
    generic_valid = interleaves

    def __eq__(self, other):
        return (isinstance(other, PatternB) and self.sigma == other.sigma
                and self.rows == other.rows and self.primed == other.primed)

    def __hash__(self):
        return hash((self.sigma,
                     tuple(tuple(x.d for x in r) for r in self.rows),
                     tuple(tuple(x.d for x in r) for r in self.primed)))

    def __repr__(self):
        return "PatternB(sigma=%s, rows=%s, primed=%s)" % (
            self.sigma,
            tuple(tuple(str(x) for x in r) for r in self.rows),
            tuple(tuple(str(x) for x in r) for r in self.primed))

    def to_json(self):
        return {
            "sigma": list(self.sigma),
            "rows": [[format_rational(x.as_fraction()) for x in r]
                     for r in self.rows],
            "primed_rows": [[format_rational(x.as_fraction()) for x in r]
                            for r in self.primed],
        }

    @staticmethod
    def from_json(obj):
        return PatternB(obj["sigma"],
                        [[parse_rational(x) for x in r] for r in obj["rows"]],
                        [[parse_rational(x) for x in r]
                         for r in obj["primed_rows"]])


def pattern_shift_a(pat, k, i, sign):
    """Shifted array plus basis membership (zero-vector convention)."""
    q = pat.shifted(k, i, sign)
    return q, q.interleaves()


def pattern_shift_b(pat, moves):
    q = pat.shifted(moves)
    return q, q.full_valid()


def enumerate_patterns_b(lam, cap=None):
    """All valid B patterns for the highest weight, canonical order."""
    lam = check_weight_so(lam)
    n = len(lam)
    par = lam[0].d % 2
    zero_max = 0 if par == 0 else -1  # doubled value of the class maximum
    out = []

    def choose_row(lo_bounds, hi_bounds):
        # all rows (tuples of doubled ints) with lo[i] <= v[i] <= hi[i],
        # stepping by 2; interleaving within the row is implied by bounds
        m = len(lo_bounds)

        def rec(i, cur, acc):
            if i == m:
                acc.append(tuple(cur))
                return
            v = lo_bounds[i]
            while v <= hi_bounds[i]:
                cur.append(v)
                rec(i + 1, cur, acc)
                cur.pop()
                v += 2
        acc = []
        rec(0, [], acc)
        return acc

    def descend(k, urow_d, sig_acc, urows_acc, prows_acc):
        # urow_d: doubled entries of unprimed row k
        if k == 0:
            pat = PatternB(list(reversed(sig_acc)),
                           [tuple(HalfInt(d) for d in r)
                            for r in reversed(urows_acc)],
                           [tuple(HalfInt(d) for d in r)
                            for r in reversed(prows_acc)])
            out.append(pat)
            if cap is not None and len(out) > cap:
                raise DimensionCapError("pattern count exceeds cap %d" % cap)
            return
        # primed row k: lo = urow[i], hi = urow[i-1] (class max for i = 1)
        lo = list(urow_d)
        hi = [zero_max] + list(urow_d[:-1])
        for prow in choose_row(lo, hi):
            sig_opts = [0]
            if par == 1 or prow[0] <= -2:
                sig_opts.append(1)
            # unprimed row k-1: between-level bounds from primed row k
            if k >= 2:
                lo2 = list(prow[1:])
                hi2 = list(prow[:-1])
                rows_below = choose_row(lo2, hi2)
            else:
                rows_below = [()]
            for sig in sig_opts:
                for urow2 in rows_below:
                    descend(k - 1, urow2, sig_acc + [sig],
                            urows_acc + ([urow2] if k >= 2 else []),
                            prows_acc + [prow])

    descend(n, tuple(x.d for x in lam), [], [tuple(x.d for x in lam)], [])
    out.sort(key=PatternB.key)
    return tuple(out)
