import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import recurrences
from linrec.errors import (
    IrrationalCoefficients,
    IrrationalResidue,
    NonPositiveDiscriminant,
    RadicandMismatch,
    RootOrderError,
)
from linrec.quadfield import QuadRat
from linrec.recurrence import (
    ClosedForm,
    Recurrence,
    eval_closed,
    eval_iterative,
    eval_matrix,
    from_roots,
    iter_terms,
    solve,
)

FIB = Recurrence(1, 1, 1, 1)
PELL = Recurrence(2, 1, 1, 2)
MILLS = Recurrence(6, -1, 1, 5)
PHI = QuadRat(1, 1, 2, 5)


def brute(r, n):
    """Independent oracle: literal list-based iteration."""
    seq = [r.a0, r.a1]
    while len(seq) <= n:
        seq.append(r.A * seq[-1] + r.B * seq[-2])
    return seq[n]


class TestIterative:
    def test_examples(self):
        assert eval_iterative(MILLS, 2) == 29
        assert eval_iterative(MILLS, 0) == 1
        assert eval_iterative(FIB, 5) == 8

    def test_rational_params(self):
        r = Recurrence(Fraction(1, 2), Fraction(-1, 3), 1, 1)
        assert eval_iterative(r, 3) == brute(r, 3) == Fraction(-1, 4)

    def test_negative_index(self):
        with pytest.raises(ValueError):
            eval_iterative(FIB, -1)

    def test_accepts_strings_rejects_floats(self):
        assert Recurrence("1/2", 0, 0, 1).A == Fraction(1, 2)
        with pytest.raises(TypeError):
            Recurrence(0.5, 0, 0, 1)


class TestMatrix:
    def test_examples(self):
        assert eval_matrix(FIB, 10) == 89
        assert eval_matrix(MILLS, 1) == 5
        assert eval_matrix(PELL, 4) == 29

    @given(recurrences(), st.integers(0, 60))
    def test_matches_brute_force(self, r, n):
        assert eval_matrix(r, n) == brute(r, n)


class TestSolve:
    def test_fibonacci(self):
        cf = solve(FIB)
        sqrt5 = QuadRat(0, 1, 1, 5)
        assert cf.x_plus == PHI
        assert cf.x_minus == PHI.conj()
        assert cf.a == PHI / sqrt5
        assert cf.b == -PHI.conj() / sqrt5
        assert not cf.rational_roots
        assert cf.disc == 5

    def test_mills(self):
        cf = solve(MILLS)
        s2 = QuadRat.sqrt(2, 32)
        assert cf.x_plus == 3 + 2 * s2
        assert cf.x_minus == 3 - 2 * s2
        assert cf.a == (s2 + 2) / 4
        assert cf.b == -(s2 - 2) / 4
        assert cf.radicand == 32

    def test_perfect_square(self):
        r = Recurrence(3, -2, 2, 3)
        cf = solve(r)
        assert cf.rational_roots
        assert (cf.x_plus, cf.x_minus, cf.a, cf.b) == (2, 1, 1, 1)
        for n in range(20):
            assert eval_closed(cf, n) == 2**n + 1 == eval_iterative(r, n)

    def test_rational_discriminant_is_cleared(self):
        # D = 1/4 + 4/3 = 19/12 -> sqrt(19*12)/12
        cf = solve(Recurrence(Fraction(1, 2), Fraction(1, 3), 1, 0))
        assert cf.radicand == 228
        assert cf.x_plus - cf.x_minus == QuadRat(0, 1, 12, 228)

    def test_rational_square_discriminant(self):
        # D = 1/4 + 2 = 9/4
        cf = solve(Recurrence(Fraction(1, 2), Fraction(1, 2), 0, 1))
        assert cf.rational_roots
        assert (cf.x_plus, cf.x_minus) == (1, Fraction(-1, 2))

    @pytest.mark.parametrize("r", [Recurrence(1, -1, 1, 1), Recurrence(2, -1, 0, 1)])
    def test_non_positive_discriminant(self, r):
        with pytest.raises(NonPositiveDiscriminant):
            solve(r)

    @given(recurrences())
    def test_invariants(self, r):
        cf = solve(r)
        assert cf.x_plus > cf.x_minus
        assert cf.x_plus + cf.x_minus == r.A
        assert cf.x_plus * cf.x_minus == -r.B
        assert cf.a + cf.b == r.a0
        assert cf.a * cf.x_plus + cf.b * cf.x_minus == r.a1


class TestClosedEval:
    def test_examples(self):
        assert eval_closed(solve(MILLS), 2) == 29
        assert eval_closed(solve(FIB), 5) == 8

    @given(recurrences())
    def test_index_zero(self, r):
        assert eval_closed(solve(r), 0) == r.a0

    def test_irrational_residue(self):
        cf = solve(FIB)
        bad = ClosedForm(cf.a, cf.a, cf.x_plus, cf.x_minus, cf.disc, False)
        with pytest.raises(IrrationalResidue):
            eval_closed(bad, 3)

    @given(recurrences(), st.integers(0, 200))
    def test_three_way_agreement(self, r, n):
        cf = solve(r)
        assert eval_iterative(r, n) == eval_matrix(r, n) == eval_closed(cf, n)

    def test_single_surd_root_is_irrational(self):
        # a*phi**n alone never collapses to a rational
        cf = ClosedForm(QuadRat.rational(1, 5), QuadRat.rational(0, 5), PHI, PHI.conj(), 5, False)
        assert eval_closed(cf, 0) == 1
        with pytest.raises(IrrationalResidue):
            eval_closed(cf, 1)
        with pytest.raises(IrrationalCoefficients):
            cf.to_recurrence()


class TestFromRoots:
    def test_integer_roots(self):
        assert from_roots(1, 1, 2, 1) == Recurrence(3, -2, 2, 3)

    def test_golden(self):
        r = from_roots(Fraction(1, 2), Fraction(1, 2), PHI, PHI.conj())
        assert r == Recurrence(1, 1, 1, Fraction(1, 2))

    def test_irrational(self):
        with pytest.raises(IrrationalCoefficients):
            from_roots(1, 1, PHI, QuadRat(0, 1, 1, 5) / 3)
        with pytest.raises(IrrationalCoefficients):
            from_roots(PHI, 0, PHI, PHI.conj())

    def test_order(self):
        with pytest.raises(RootOrderError):
            from_roots(1, 1, 1, 2)

    def test_mixed_radicands(self):
        with pytest.raises(RadicandMismatch):
            from_roots(1, 1, PHI, QuadRat(1, -1, 1, 2))

    @given(recurrences())
    def test_roundtrip_recurrence(self, r):
        assert solve(r).to_recurrence() == r

    @given(
        st.integers(-10, 10),
        st.integers(-10, 10),
        st.integers(-9, 9),
        st.integers(-9, 9),
        st.integers(1, 9),
    )
    def test_roundtrip_roots(self, A, B, u, v, w):
        D = A * A + 4 * B
        if D <= 0 or int(D**0.5) ** 2 == D or (int(D**0.5) + 1) ** 2 == D:
            return
        root = QuadRat(0, 1, 1, D)
        xp, xm = (A + root) / 2, (A - root) / 2
        a = QuadRat(u, v, w, D)
        r = from_roots(a, a.conj(), xp, xm)
        cf = solve(r)
        assert (cf.a, cf.b, cf.x_plus, cf.x_minus) == (a, a.conj(), xp, xm)


class TestRendering:
    def test_formula(self):
        assert solve(FIB).formula() == (
            "a_n = (5 + 1*sqrt(5))/10*((1 + 1*sqrt(5))/2)^n"
            " + (5 - 1*sqrt(5))/10*((1 - 1*sqrt(5))/2)^n"
        )
        assert str(solve(Recurrence(3, -2, 2, 3))) == "a_n = 1*(2)^n + 1*(1)^n"

    def test_json_keys(self):
        d = solve(MILLS).to_dict()
        assert {"A", "B", "a0", "a1", "D", "a", "b", "x_plus", "x_minus"} <= set(d)
        assert d["A"] == "6" and d["B"] == "-1" and d["D"] == "32"
        assert d["x_plus"] == {"p": "6", "q": "1", "den": "2"}

    @given(recurrences())
    def test_json_roundtrip(self, r):
        cf = solve(r)
        assert ClosedForm.from_dict(json.loads(json.dumps(cf.to_dict()))) == cf


def test_iter_terms_prefix():
    it = iter_terms(PELL)
    assert [next(it) for _ in range(6)] == [1, 2, 5, 12, 29, 70]
