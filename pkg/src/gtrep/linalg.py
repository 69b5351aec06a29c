"""Sparse matrices over an exact field, plus the small eliminations the
verification layer needs. Entries are Fraction in normal builds and
RationalFunction in deformed ones; the code only assumes field arithmetic
and truthiness-as-nonzero."""
from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


class Operator:
    """dim x dim matrix stored as {(row, col): value}, zero entries absent."""

    __slots__ = ("dim", "ent")

    def __init__(self, dim, ent=None):
        self.dim = dim
        self.ent = {} if ent is None else ent

    @staticmethod
    def zero(dim):
        return Operator(dim)

    @staticmethod
    def identity(dim, one=F1):
        return Operator(dim, {(i, i): one for i in range(dim)})

    def copy(self):
        return Operator(self.dim, dict(self.ent))

    def add_to(self, r, c, v):
        # accumulate one entry, dropping exact zeros
        key = (r, c)
        nv = self.ent.get(key, F0) + v
        if nv:
            self.ent[key] = nv
        else:
            self.ent.pop(key, None)

    def __bool__(self):
        return bool(self.ent)

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.dim == other.dim and self.ent == other.ent

    def __neg__(self):
        return Operator(self.dim, {k: -v for k, v in self.ent.items()})

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        out = dict(self.ent)
        for k, v in other.ent.items():
            nv = out.get(k, F0) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return Operator(self.dim, out)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if not s:
            return Operator(self.dim)
        return Operator(self.dim, {k: v * s for k, v in self.ent.items()})

    def __matmul__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        # group left factor by column
        bycol = {}
        for (r, c), v in self.ent.items():
            bycol.setdefault(c, []).append((r, v))
        out = Operator(self.dim)
        for (k, c), bv in other.ent.items():
            for r, av in bycol.get(k, ()):
                out.add_to(r, c, av * bv)
        return out

    def commutator(self, other):
        return (self @ other) - (other @ self)

    def transpose(self):
        return Operator(self.dim, {(c, r): v for (r, c), v in self.ent.items()})

    def apply(self, vec):
        # vec: {index: value} -> {index: value}
        out = {}
        for (r, c), v in self.ent.items():
            if c in vec:
                nv = out.get(r, F0) + v * vec[c]
                if nv:
                    out[r] = nv
                else:
                    out.pop(r, None)
        return out

    def column(self, c):
        return {r: v for (r, cc), v in self.ent.items() if cc == c}

    def entries_sorted(self):
        return sorted(self.ent.items())

    def map_values(self, fn):
        out = Operator(self.dim)
        for k, v in self.ent.items():
            nv = fn(v)
            if nv:
                out.ent[k] = nv
        return out

    def __repr__(self):
        return "Operator(dim=%d, nnz=%d)" % (self.dim, len(self.ent))


def rref(rows, ncols):
    """Reduced echelon form of sparse rows (dicts col->Fraction).

    Returns {pivot_col: row_dict} with each pivot row monic and fully
    reduced. Deterministic for a fixed input order.
    """
    piv = {}
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            if c in piv:
                f = r[c]
                for cc, vv in piv[c].items():
                    nv = r.get(cc, F0) - f * vv
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
            else:
                inv = 1 / r[c]
                piv[c] = {cc: vv * inv for cc, vv in r.items()}
                break
    # back substitution
    for c in sorted(piv, reverse=True):
        pr = piv[c]
        for c2 in piv:
            if c2 >= c:
                continue
            row2 = piv[c2]
            if c not in row2:
                continue
            f = row2[c]
            for cc, vv in pr.items():
                nv = row2.get(cc, F0) - f * vv
                if nv:
                    row2[cc] = nv
                else:
                    row2.pop(cc, None)
    return piv


def rank_of(rows, ncols):
    return len(rref(rows, ncols))


def nullspace(rows, ncols):
    """Deterministic basis of the kernel of the stacked row system."""
    piv = rref(rows, ncols)
    basis = []
    for fc in range(ncols):
        if fc in piv:
            continue
        v = {fc: F1}
        for c, row in piv.items():
            if fc in row:
                v[c] = -row[fc]
        basis.append(v)
    return basis
