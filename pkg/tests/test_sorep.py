"""Odd orthogonal generator matrices: coefficients, limits, closure."""

from fractions import Fraction

import pytest

from conftest import B_CORPUS, so_rep
from gtrep import (
    Operator,
    PatternB,
    RationalFunction,
    check_weight_so,
    defining_operators,
    enumerate_patterns_b,
    structure_table,
)
from gtrep.sorep import (
    DeformContext,
    SoBasis,
    build_f_diag,
    build_f_lower,
    build_f_raise,
    build_phi_minus,
    build_phi_u,
    mid_row_prefactor,
    prime_drop_weight,
    prime_shift_weight,
    table_bracket,
)

PLAIN = DeformContext(False)


def basis_of(w):
    lam = check_weight_so(w)
    return SoBasis(lam, enumerate_patterns_b(lam))


class TestCoefficients:
    # rank 2 array whose level 1 row is (-1), so the level 1 content is -3/2
    pat2 = PatternB([0, 0], [(-1,), (0, -1)], [(-1,), (0, -1)])

    def test_mid_row_prefactor_inner_slot(self):
        assert mid_row_prefactor(PLAIN, self.pat2, 2, 1) == Fraction(-1, 3)

    def test_mid_row_prefactor_zero_slot(self):
        assert mid_row_prefactor(PLAIN, self.pat2, 2, 0) == Fraction(-1, 2)

    def test_mid_row_prefactor_deformed_zero_slot(self):
        # level 1 row (0,) puts the content at -1/2, colliding with the
        # fixed slot; only the deformed value is finite
        pat = PatternB([0, 0], [(0,), (0, 0)], [(0,), (0, 0)])
        ctx = DeformContext(True)
        t = RationalFunction.var()
        got = mid_row_prefactor(ctx, pat, 2, 0)
        assert got == RationalFunction.const(1) / (t * (1 - t))

    def test_prime_shift_rank_one_is_unity(self):
        pat = PatternB([0], [(-1,)], [(-1,)])
        assert prime_shift_weight(PLAIN, pat, 1, 1, Fraction(7)) == 1

    def test_prime_shift_rank_two_values(self):
        # primed contents (-1/2, -5/2)
        x = Fraction(-3, 2)
        assert prime_shift_weight(PLAIN, self.pat2, 2, 1, x) == Fraction(3, 2)
        assert prime_shift_weight(PLAIN, self.pat2, 2, 2, x) == Fraction(1, 2)

    def test_prime_drop_cases(self):
        spinor = PatternB([0], [("-1/2",)], [("-1/2",)])
        assert prime_drop_weight(PLAIN, spinor, 1, 1) == 0
        mid = PatternB([0], [(-1,)], [(0,)])
        assert prime_drop_weight(PLAIN, mid, 1, 1) == 1
        top = PatternB([1], [(-1,)], [(-1,)])
        assert prime_drop_weight(PLAIN, top, 1, 1) == 0


class TestVectorModule:
    def test_diagonal_eigenvalues(self):
        b = basis_of(("-1",))
        assert dict(build_f_diag(b, 1).ent) == {
            (0, 0): Fraction(-1), (1, 1): Fraction(1)}

    def test_primed_drop_matrix(self):
        b = basis_of(("-1",))
        assert dict(build_phi_minus(b, 1).ent) == {(0, 1): Fraction(1, 2)}

    def test_parametric_drop_matrix(self):
        b = basis_of(("-1",))
        got = build_phi_u(b, 1, Fraction(2))
        assert dict(got.ent) == {(2, 0): Fraction(-2), (1, 2): Fraction(2, 3)}

    def test_mixed_lowering_matrix(self):
        b = basis_of(("-1",))
        assert dict(build_f_lower(b, 1).ent) == {
            (2, 0): Fraction(-1), (1, 2): Fraction(1)}

    def test_raising_matrix(self):
        b = basis_of(("-1",))
        assert dict(build_f_raise(b, 1).ent) == {
            (2, 1): Fraction(-1), (0, 2): Fraction(1)}


class TestSpinorModule:
    def test_raising_sends_primed_to_plain(self):
        b = basis_of(("-1/2",))
        assert dict(build_f_raise(b, 1).ent) == {(0, 1): Fraction(1, 2)}

    def test_primed_drop_vanishes(self):
        b = basis_of(("-1/2",))
        assert not build_phi_minus(b, 1)

    def test_diagonal(self):
        b = basis_of(("-1/2",))
        assert dict(build_f_diag(b, 1).ent) == {
            (0, 0): Fraction(-1, 2), (1, 1): Fraction(1, 2)}


class TestBrackets:
    def test_raise_lower_bracket_gives_diagonal(self):
        r = so_rep(("-1",))
        got = r.gens[(0, 1)].commutator(r.gens[(0, -1)])
        want = Operator(r.dim)
        for slot, coef in table_bracket(0, 1, 0, -1).items():
            want = want + r.gens[slot].scale(coef)
        assert got == want

    def test_table_antisymmetry(self):
        for a in range(-2, 3):
            for b in range(-2, 3):
                lhs = table_bracket(a, b, b, a)
                rhs = table_bracket(b, a, a, b)
                assert lhs == {s: -v for s, v in rhs.items()}

    def test_table_validates_against_elementary_matrices(self):
        # construction raises on any mismatch, so arrival is the assertion
        structure_table(3)

    @pytest.mark.parametrize("w", [("-1",), ("0", "-1"), ("-1/2", "-1/2")])
    def test_all_commutators_close(self, w):
        r = so_rep(w)
        tab = structure_table(r.n)
        for ab in r.gens:
            for cd in r.gens:
                got = r.gens[ab].commutator(r.gens[cd])
                want = Operator(r.dim)
                for slot, coef in tab[(ab, cd)].items():
                    want = want + r.gens[slot].scale(coef)
                assert got == want, (w, ab, cd)


class TestDeformationAgreement:
    @pytest.mark.parametrize("w", B_CORPUS)
    def test_uniform_limit_matches_fast_path(self, w):
        b = basis_of(w)
        for k in range(1, b.n + 1):
            fast = build_f_raise(b, k)
            slow = build_f_raise(b, k, force_deformed=True)
            assert fast == slow, (w, k)

    def test_per_level_profile_builds(self):
        # alternative deformation direction; value may differ at colliding
        # weights, so only well-definedness is asserted here
        b = basis_of(("0", "-1"))
        for k in (1, 2):
            build_f_raise(b, k, profile="per-level", force_deformed=True)


class TestDefiningModule:
    def test_rank_one_matrices(self):
        ops = defining_operators(1)
        assert dict(ops[(1, 1)].ent) == {(0, 0): Fraction(-1), (2, 2): Fraction(1)}
        assert dict(ops[(0, 1)].ent) == {(0, 1): Fraction(-1), (1, 2): Fraction(1)}
        assert not ops[(0, 0)]
        assert not ops[(1, -1)]

    def test_skew_pairing(self):
        ops = defining_operators(2)
        for i in range(-2, 3):
            for j in range(-2, 3):
                assert ops[(i, j)] == -ops[(-j, -i)]


class TestWholeModules:
    def test_trivial_module(self):
        r = so_rep(("0", "0"))
        assert r.dim == 1
        assert all(not op for op in r.gens.values())

    def test_generator_count(self):
        r = so_rep(("0", "-1"))
        assert set(r.gens) == {(i, j) for i in (-2, -1, 0, 1, 2)
                               for j in (-2, -1, 0, 1, 2)}

    def test_span_rank_is_algebra_dimension(self):
        from gtrep import rank_of
        r = so_rep(("0", "-1"))
        rows = [{a * r.dim + b: v for (a, b), v in r.gens[slot].ent.items()}
                for slot in sorted(r.gens)]
        rows = [row for row in rows if row]
        assert rank_of(rows, r.dim * r.dim) == r.n * (2 * r.n + 1)

    @pytest.mark.parametrize("w", B_CORPUS)
    def test_top_basis_vector_carries_the_label(self, w):
        r = so_rep(w)
        assert r.dim == len(r.patterns)
        assert r.weights[r.highest_index()] == r.lam
