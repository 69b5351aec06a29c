"""Independent consistency oracles for built representations.

Every reference value here is recomputed from scratch (elementary
matrices, closed-form dimension products, the Freudenthal recursion,
brute-force interval counts), so agreement with the constructed
matrices is evidence rather than circular bookkeeping.
"""

import itertools
from fractions import Fraction

from .exact import F0
from .linalg import Operator, nullspace, rank_of
from .patterns import DimensionCapError
from .glrep import InconsistencyError, capelli_det, contravariant_gram
from .sorep import SoBasis, build_phi_minus, structure_table


class NonScalarError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class VerificationReport:
    """Ordered list of named pass/fail results with optional witnesses."""

    def __init__(self):
        self.checks = []

    def add(self, name, ok, witness=None):
        self.checks.append({"name": name, "pass": bool(ok),
                            "witness": None if witness is None else str(witness)})

    def extend(self, other):
        self.checks.extend(other.checks)

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)

    def summary(self):
        return "pass" if self.passed else "fail"

    def to_json(self):
        return {"checks": list(self.checks), "summary": self.summary()}


# ------------------------------------------- structure constants


def _structure_witness(rep, algebra_type):
    keys = sorted(rep.gens)
    if algebra_type == "A":
        for ab in keys:
            for cd in keys:
                (a, b), (c, d) = ab, cd
                acc = rep.gens[ab].commutator(rep.gens[cd])
                if b == c:
                    acc = acc - rep.gens[(a, d)]
                if d == a:
                    acc = acc + rep.gens[(c, b)]
                if acc:
                    return (ab, cd)
    else:
        table = structure_table(rep.n)
        for ab in keys:
            for cd in keys:
                acc = rep.gens[ab].commutator(rep.gens[cd])
                for slot, coef in table[(ab, cd)].items():
                    acc = acc - rep.gens[slot].scale(coef)
                if acc:
                    return (ab, cd)
    return None


def check_structure_constants(rep, algebra_type):
    report = VerificationReport()
    w = _structure_witness(rep, algebra_type)
    report.add("all generator commutators match the bracket table",
               w is None, w)
    return report


# ------------------------------------------------- Weyl dimension


def weyl_dim(algebra_type, lam):
    lam = tuple(Fraction(x) if not hasattr(x, "as_fraction") else x.as_fraction()
                for x in lam)
    n = len(lam)
    if algebra_type == "A":
        ls = [lam[i] - i for i in range(n)]
        acc = Fraction(1)
        for i in range(n):
            for j in range(i + 1, n):
                acc *= Fraction(ls[i] - ls[j], j - i)
    else:
        # reflect to the dominant-positive side first
        lt = [-lam[n - 1 - i] for i in range(n)]
        half = Fraction(1, 2)
        ls = [lt[i] + (n - 1 - i) + half for i in range(n)]
        rs = [(n - 1 - i) + half for i in range(n)]
        acc = Fraction(1)
        for i in range(n):
            acc *= ls[i] / rs[i]
            for j in range(i + 1, n):
                acc *= (ls[i] ** 2 - ls[j] ** 2) / (rs[i] ** 2 - rs[j] ** 2)
    if acc.denominator != 1 or acc <= 0:
        raise ValueError("dimension formula gave %s for %s" % (acc, lam))
    return int(acc)


# ----------------------------------------------------- branching


def _as_fracs(t):
    return tuple(Fraction(x) if not hasattr(x, "as_fraction") else x.as_fraction()
                 for x in t)


def branching_multiplicity(lam, mu):
    """Number of interleaving tuples between lam (rank n) and mu (rank n-1),
    counted per coordinate; 0 on parity mismatch or any empty interval."""
    lam = _as_fracs(lam)
    mu = _as_fracs(mu)
    n = len(lam)
    cls = (2 * lam[0]) % 2
    if any((2 * x) % 2 != cls for x in mu):
        return 0
    count = 1
    for i in range(n):
        lo = lam[i]
        hi = -lam[0] if i == 0 else lam[i - 1]
        if i < len(mu):
            lo = max(lo, mu[i])
        if i == 0 and mu:
            hi = min(hi, -mu[0])
        elif i >= 1 and i - 1 < len(mu):
            hi = min(hi, mu[i - 1])
        span = hi - lo
        if span < 0:
            return 0
        assert span.denominator == 1
        count *= int(span) + 1
    return count


def check_branching(rep):
    """Exact highest-vector counts of the rank n-1 subalgebra per weight,
    against the interval counts, plus the global dimension identity."""
    report = VerificationReport()
    n = rep.n
    groups = {}
    for c, w in enumerate(rep.weights):
        mu = tuple(x.as_fraction() for x in w[:n - 1])
        groups.setdefault(mu, []).append(c)
    raising = [rep.gens[(i, j)]
               for i in range(-(n - 1), n) for j in range(i + 1, n)]
    witness = None
    counts = {}
    for mu in sorted(groups):
        cols = groups[mu]
        pos = {c: k for k, c in enumerate(cols)}
        rows = []
        for op in raising:
            byrow = {}
            for (r, c), v in op.ent.items():
                if c in pos:
                    byrow.setdefault(r, {})[pos[c]] = v
            rows.extend(d for d in byrow.values() if d)
        got = len(nullspace(rows, len(cols))) if rows else len(cols)
        want = branching_multiplicity(rep.lam, mu)
        if got:
            counts[mu] = got
        if got != want and witness is None:
            witness = (mu, got, want)
    report.add("subalgebra highest-vector counts match the interval counts",
               witness is None, witness)
    total = sum(c * weyl_dim("B", mu) for mu, c in counts.items())
    report.add("branching dimensions sum to the module dimension",
               total == rep.dim, None if total == rep.dim else (total, rep.dim))
    return report


# ------------------------------------------------------- Casimir


def casimir_scalar(rep):
    """Sum of all products gen(i,j)gen(j,i); raises unless exactly scalar."""
    acc = Operator(rep.dim)
    for (i, j) in sorted(rep.gens):
        acc = acc + rep.gens[(i, j)] @ rep.gens[(j, i)]
    val = acc.ent.get((0, 0), F0)
    rem = acc - Operator.identity(rep.dim).scale(val)
    if rem:
        r, c = min(rem.ent)
        raise NonScalarError("Casimir sum is not scalar",
                             witness=(r, c, rem.ent[(r, c)]))
    return val


def casimir_highest_value(algebra_type, lam):
    """The same sum evaluated on the highest vector through the bracket
    table alone, never touching the built matrices."""
    lam = _as_fracs(lam)
    n = len(lam)
    if algebra_type == "A":
        return sum(lam[i] * (lam[i] + n + 1 - 2 * (i + 1)) for i in range(n))

    def eig(p):
        if p > 0:
            return lam[p - 1]
        if p < 0:
            return -lam[-p - 1]
        return Fraction(0)

    total = sum(2 * lam[k] * lam[k] for k in range(n))
    table = structure_table(n)
    for i in range(-n, n + 1):
        for j in range(i + 1, n + 1):
            for slot, coef in table[((i, j), (j, i))].items():
                p, q = slot
                if p == q:
                    total += coef * eig(p)
                elif p > q:
                    # lowering terms never appear in these brackets
                    raise NonScalarError("unexpected slot %s" % (slot,))
    return total


# -------------------------------------------------- Freudenthal


def _freudenthal(lam, dominants, roots, rho, dom_of, bound):
    dset = set(dominants)
    lam = tuple(lam)
    nlam = sum((a + b) ** 2 for a, b in zip(lam, rho))
    order = sorted(dominants,
                   key=lambda m: (-sum((a + b) ** 2 for a, b in zip(m, rho)), m))
    mult = {}
    for mu in order:
        if mu == lam:
            mult[mu] = 1
            continue
        den = nlam - sum((a + b) ** 2 for a, b in zip(mu, rho))
        num = Fraction(0)
        for al in roots:
            t = 1
            while True:
                nu = tuple(m + t * a for m, a in zip(mu, al))
                if max(abs(x) for x in nu) > bound:
                    break
                d = dom_of(nu)
                m = mult.get(d, 0) if d in dset else 0
                if m:
                    num += m * sum(x * y for x, y in zip(nu, al))
                t += 1
        val = 2 * num / den
        assert val.denominator == 1 and val >= 0
        if val:
            mult[mu] = int(val)
    return mult


def _dominants_a(lam):
    n = len(lam)
    total = sum(lam)
    out = []

    def rec(prefix, psum):
        i = len(prefix)
        if i == n:
            if psum == total:
                out.append(tuple(prefix))
            return
        hi = prefix[-1] if prefix else lam[0]
        v = hi
        while v >= lam[-1]:
            ps = psum + v
            rest = total - ps
            if (ps <= sum(lam[:i + 1])
                    and rest <= (n - 1 - i) * v
                    and rest >= (n - 1 - i) * lam[-1]):
                rec(prefix + [v], ps)
            v -= 1

    rec([], Fraction(0))
    return out


def _dominants_b(lt):
    # dominant-positive side: non-increasing, lowest entry 0 or 1/2 by
    # parity class, partial sums bounded by those of lt
    n = len(lt)
    floor_v = lt[0] % 1
    out = []

    def rec(prefix, psum):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        hi = prefix[-1] if prefix else lt[0]
        v = hi
        while v >= floor_v:
            if psum + v <= sum(lt[:i + 1]):
                rec(prefix + [v], psum + v)
            v -= 1

    rec([], Fraction(0))
    return out


def freudenthal_multiplicities(algebra_type, lam, cap=None):
    """Exact weight multiplicities by the recursion over positive roots;
    independent of the pattern enumeration."""
    lam = _as_fracs(lam)
    n = len(lam)
    dim = weyl_dim(algebra_type, lam)
    if cap is not None and dim > cap:
        raise DimensionCapError("dimension %d exceeds cap %d" % (dim, cap))
    out = {}
    if algebra_type == "A":
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                al = [0] * n
                al[i], al[j] = 1, -1
                roots.append(tuple(al))
        rho = tuple(Fraction(n - 1 - i) for i in range(n))
        bound = max(abs(lam[0]), abs(lam[-1]))
        mult = _freudenthal(lam, _dominants_a(lam), roots, rho,
                            lambda nu: tuple(sorted(nu, reverse=True)), bound)
        for mu, m in mult.items():
            for w in set(itertools.permutations(mu)):
                out[w] = m
    else:
        lt = tuple(-lam[n - 1 - i] for i in range(n))
        roots = []
        for i in range(n):
            al = [0] * n
            al[i] = 1
            roots.append(tuple(al))
            for j in range(i + 1, n):
                for s in (1, -1):
                    al = [0] * n
                    al[i], al[j] = 1, s
                    roots.append(tuple(al))
        rho = tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))
        mult = _freudenthal(lt, _dominants_b(lt), roots, rho,
                            lambda nu: tuple(sorted((abs(x) for x in nu),
                                                    reverse=True)), lt[0])
        for mu, m in mult.items():
            for p in set(itertools.permutations(mu)):
                nz = [i for i, x in enumerate(p) if x]
                for signs in itertools.product((1, -1), repeat=len(nz)):
                    w = list(p)
                    for i, s in zip(nz, signs):
                        w[i] *= s
                    # back to the non-positive convention
                    out[tuple(-w[n - 1 - j] for j in range(n))] = m
    return out


# ------------------------------------- quadratic lowering identity


def _joint_kernel(rep, k):
    # common kernel of every gen(i,j) with -k < i < j < k
    rows = []
    for i in range(-(k - 1), k):
        for j in range(i + 1, k):
            byrow = {}
            for (r, c), v in rep.gens[(i, j)].ent.items():
                byrow.setdefault(r, {})[c] = v
            rows.extend(d for d in byrow.values() if d)
    if not rows:
        return [{c: Fraction(1)} for c in range(rep.dim)]
    return nullspace(rows, rep.dim)


def _phi_witness(rep):
    basis = SoBasis(rep.lam, rep.patterns)
    for k in range(1, rep.n + 1):
        quad = Operator(rep.dim) - (rep.gens[(0, k)]
                                    @ rep.gens[(0, k)]).scale(Fraction(1, 2))
        for i in range(1, k):
            quad = quad + rep.gens[(-k, i)] @ rep.gens[(i, k)]
        diff = quad - build_phi_minus(basis, k)
        if not diff:
            continue
        for v in _joint_kernel(rep, k):
            if diff.apply(v):
                return (k, sorted(v))
    return None


def phi_definition_check(rep):
    """Whether the quadratic expression in built generators agrees with the
    formula-built primed-lowering operator on each level's highest
    subspace."""
    return _phi_witness(rep) is None


# --------------------------------------------- module equivalence


def equivalence_intertwiner(rep, target):
    """Invertible S with S a = b S for every generator pair (a from rep,
    b from target); None unless the solution space is a line carrying an
    invertible matrix."""
    dim = rep.dim
    eqs = {}
    for key in sorted(rep.gens):
        a, b = rep.gens[key], target[key]
        if a.dim != dim or b.dim != dim:
            return None
        for (m, c), v in a.ent.items():
            for r in range(dim):
                d = eqs.setdefault((key, r, c), {})
                d[r * dim + m] = d.get(r * dim + m, F0) + v
        for (r, m), v in b.ent.items():
            for c in range(dim):
                d = eqs.setdefault((key, r, c), {})
                d[m * dim + c] = d.get(m * dim + c, F0) - v
    rows = []
    for d in eqs.values():
        d = {k: v for k, v in d.items() if v}
        if d:
            rows.append(d)
    sols = nullspace(rows, dim * dim)
    if len(sols) != 1:
        return None
    s = Operator(dim)
    for flat, v in sols[0].items():
        s.ent[(flat // dim, flat % dim)] = v
    byrow = {}
    for (r, c), v in s.ent.items():
        byrow.setdefault(r, {})[c] = v
    if rank_of(list(byrow.values()), dim) != dim:
        return None
    return s


# ------------------------------------------------- report driver


def run_verification(rep, algebra_type, level="fast"):
    report = VerificationReport()
    w = _structure_witness(rep, algebra_type)
    report.add("all generator commutators match the bracket table",
               w is None, w)
    dim = weyl_dim(algebra_type, rep.lam)
    report.add("basis size equals the Weyl dimension formula",
               rep.dim == dim, None if rep.dim == dim else (rep.dim, dim))

    witness = None
    for k in range(1, rep.n + 1):
        diag = rep.gens[(k, k)]
        want = {(c, c): rep.weights[c][k - 1].as_fraction()
                if hasattr(rep.weights[c][k - 1], "as_fraction")
                else rep.weights[c][k - 1] for c in range(rep.dim)}
        want = {rc: v for rc, v in want.items() if v}
        if diag.ent != want:
            witness = ("diagonal", k)
            break
    if witness is None:
        h = rep.highest_index()
        for (i, j) in sorted(rep.gens):
            if i < j and rep.gens[(i, j)].column(h):
                witness = ("highest not annihilated", (i, j))
                break
    report.add("basis vectors are weight vectors and the top one is highest",
               witness is None, witness)

    if level == "full":
        if algebra_type == "B" and rep.n >= 1:
            report.extend(check_branching(rep))
        try:
            val = casimir_scalar(rep)
            want = casimir_highest_value(algebra_type, rep.lam)
            report.add("Casimir sum is the scalar dictated by the top weight",
                       val == want, None if val == want else (val, want))
        except NonScalarError as e:
            report.add("Casimir sum is the scalar dictated by the top weight",
                       False, e.witness)
        hist = {}
        for w_ in rep.weights:
            key = tuple(x.as_fraction() if hasattr(x, "as_fraction") else x
                        for x in w_)
            hist[key] = hist.get(key, 0) + 1
        freud = freudenthal_multiplicities(algebra_type, rep.lam)
        report.add("weight histogram matches the Freudenthal recursion",
                   hist == freud,
                   None if hist == freud else sorted(
                       set(hist.items()) ^ set(freud.items()))[:3])
        if algebra_type == "A":
            cwit = None
            ls = [Fraction(x) - i for i, x in enumerate(rep.lam)]
            for u in (Fraction(0), Fraction(1), Fraction(-1), Fraction(7)):
                t = capelli_det(rep, u)
                scal = Fraction(1)
                for l in ls:
                    scal *= u + l
                if t != Operator.identity(rep.dim).scale(scal):
                    cwit = ("u", u)
                    break
            report.add("determinant central element acts by the "
                       "expected scalar", cwit is None, cwit)
            try:
                g = contravariant_gram(rep)
                ok = all(r == c and v for (r, c), v in g.ent.items()) \
                    and len(g.ent) == rep.dim
                report.add("contravariant form is diagonal and nondegenerate",
                           ok, None)
            except InconsistencyError as e:
                report.add("contravariant form is diagonal and nondegenerate",
                           False, str(e))
        else:
            pw = _phi_witness(rep)
            report.add("quadratic form of the primed-lowering operator "
                       "matches its definition", pw is None, pw)
    return report
