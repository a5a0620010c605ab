import random
from fractions import Fraction

import pytest

from ncdb.freealg import FreeAlgebra
from ncdb.bracket import BracketSpec
from ncdb.axioms import check_h0_skew
from ncdb.classify import builtin
from ncdb.localize import LocalisationPlan, localize
from ncdb.repspace import (
    MatrixPoint,
    check_induced_poisson,
    coordinate_bracket,
    eval_element,
    eval_trace,
    induced_trace_bracket,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_trace,
)


@pytest.fixture(scope="module")
def mdbI():
    return builtin("mdbI")[0]


@pytest.fixture(scope="module")
def mdbII():
    return builtin("mdbII")[0]


class TestMatrices:
    def test_exact_inverse(self):
        m = ((Fraction(2), Fraction(1)), (Fraction(7), Fraction(4)))
        inv = mat_inverse(m)
        assert mat_mul(m, inv) == mat_identity(2)
        assert mat_mul(inv, m) == mat_identity(2)

    def test_singular_returns_none(self):
        m = ((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4)))
        assert mat_inverse(m) is None

    def test_random_point_deterministic(self, mdbI):
        p1 = MatrixPoint.random(mdbI.algebra, 2, seed=5)
        p2 = MatrixPoint.random(mdbI.algebra, 2, seed=5)
        assert p1.mats == p2.mats

    def test_inverted_generators_get_inverses(self):
        alg = FreeAlgebra(("v", "w"), inverted=(1, 2))
        p = MatrixPoint.random(alg, 3, seed=1)
        for i in (1, 2):
            assert mat_mul(p.mats[i], p.invs[i]) == mat_identity(3)


class TestEvaluation:
    def test_unit_evaluates_to_identity(self, mdbI):
        p = MatrixPoint.random(mdbI.algebra, 2, seed=0)
        assert eval_element(mdbI.algebra.one(), p) == mat_identity(2)

    def test_trace_cyclicity(self, mdbI):
        alg = mdbI.algebra
        p = MatrixPoint.random(alg, 3, seed=2)
        a = alg.element({(1, 2): 1})
        b = alg.element({(2, 1): 1})
        assert eval_trace(a, p) == eval_trace(b, p)

    def test_inverse_letter_evaluates(self):
        alg = FreeAlgebra(("v", "w"), inverted=(1,))
        p = MatrixPoint.random(alg, 2, seed=3)
        # the word v v^-1 reduces to the unit before evaluation, and the
        # stored inverse satisfies the matrix relation exactly
        assert mat_mul(p.letter_matrix(1), p.letter_matrix(-1)) == mat_identity(2)
        assert eval_element(alg.element({(-1, 2, 1): 1}), p) == mat_mul(
            mat_mul(p.letter_matrix(-1), p.letter_matrix(2)), p.letter_matrix(1)
        )

    def test_linearity(self, mdbI):
        alg = mdbI.algebra
        p = MatrixPoint.random(alg, 2, seed=4)
        x = alg.element({(1,): Fraction(1, 3), (2, 3): -2})
        y = alg.element({(3,): 5})
        assert eval_trace(x, p) + eval_trace(y, p) == eval_trace(x + y, p)

    def test_multiplicative_on_words(self, mdbI):
        alg = mdbI.algebra
        p = MatrixPoint.random(alg, 2, seed=6)
        a = alg.element({(1, 2): 1})
        b = alg.element({(3,): 1})
        assert eval_element(a * b, p) == mat_mul(eval_element(a, p), eval_element(b, p))


class TestTraceBracket:
    def test_value_for_mdbI(self, mdbI):
        alg = mdbI.algebra
        p = MatrixPoint.random(alg, 2, seed=7)
        # {x1, x2} = -x2 x1, so the trace bracket is -tr(X2 X1)
        got = induced_trace_bracket(mdbI, alg.gen(1), alg.gen(2), p)
        x2x1 = mat_mul(p.mats[2], p.mats[1])
        assert got == -mat_trace(x2x1)

    def test_zero_spec(self):
        alg = FreeAlgebra.standard(2)
        zero = BracketSpec(alg, {})
        p = MatrixPoint.random(alg, 2, seed=8)
        assert induced_trace_bracket(zero, alg.gen(1), alg.gen(2), p) == 0

    def test_scalar_points_commute(self, mdbI):
        alg = mdbI.algebra
        p = MatrixPoint.random(alg, 1, seed=9)
        t = induced_trace_bracket(mdbI, alg.gen(1), alg.gen(2), p) + induced_trace_bracket(
            mdbI, alg.gen(2), alg.gen(1), p
        )
        assert t == 0

    def test_commutators_trace_to_zero(self, mdbI):
        rng = random.Random(71)
        alg = mdbI.algebra
        p = MatrixPoint.random(alg, 3, seed=10)
        words = [w for w in alg.words_up_to(3) if w]
        for _ in range(30):
            a = alg.element({rng.choice(words): rng.randint(-3, 3)})
            b = alg.element({rng.choice(words): rng.randint(-3, 3)})
            assert eval_trace(a * b - b * a, p) == 0


class TestInducedPoisson:
    def test_mdbII_small_sweep(self, mdbII):
        p = MatrixPoint.random(mdbII.algebra, 2, seed=11)
        assert check_induced_poisson(mdbII, p, 2).passed

    def test_zero_spec(self):
        alg = FreeAlgebra.standard(2)
        zero = BracketSpec(alg, {})
        p = MatrixPoint.random(alg, 2, seed=12)
        assert check_induced_poisson(zero, p, 2).passed

    def test_laurent_point(self):
        spec, w = builtin("kontsevich")
        loc, _ = localize(spec, w, LocalisationPlan(spec.algebra, (1, 2)))
        p = MatrixPoint.random(loc.algebra, 2, seed=13)
        assert check_induced_poisson(loc, p, 2).passed

    def test_mutation_fails_with_trace_witness(self, mdbII):
        alg = mdbII.algebra
        table = {k: alg.tensor2(dict(u.terms)) for k, u in mdbII.table.items()}
        table[(2, 3)] = table[(2, 3)].scale(-1)  # flip one sign
        corrupted = BracketSpec(alg, table)
        # symbolic failure comes first
        sym = check_h0_skew(corrupted, 2)
        assert not sym.passed
        p = MatrixPoint.random(alg, 2, seed=14)
        rep = check_induced_poisson(corrupted, p, 2)
        assert not rep.passed
        assert rep.witnesses and rep.witnesses[0].residual != "0"

    def test_determinism(self, mdbII):
        p1 = MatrixPoint.random(mdbII.algebra, 2, seed=15)
        p2 = MatrixPoint.random(mdbII.algebra, 2, seed=15)
        r1 = check_induced_poisson(builtin("mdbII")[0], p1, 2)
        r2 = check_induced_poisson(builtin("mdbII")[0], p2, 2)
        assert r1.to_json() == r2.to_json()


class TestCoordinateBracket:
    def dp_spec(self):
        alg = FreeAlgebra(("v",))
        return BracketSpec(
            alg, {(1, 1): alg.tensor2({((1,), (1, 1)): 1, ((1, 1), (1,)): -1})}
        )

    def test_requires_double_poisson(self, mdbI):
        alg = mdbI.algebra
        p = MatrixPoint.random(alg, 2, seed=16)
        with pytest.raises(ValueError):
            coordinate_bracket(mdbI, alg.gen(1), alg.gen(2), p)

    def test_diagonal_sum_matches_trace_bracket(self):
        spec = self.dp_spec()
        alg = spec.algebra
        p = MatrixPoint.random(alg, 2, seed=17)
        a = alg.element({(1,): 1})
        b = alg.element({(1, 1): 1})
        cb = coordinate_bracket(spec, a, b, p)
        n = p.size
        total = sum(cb[i][i][u][u] for i in range(n) for u in range(n))
        assert total == induced_trace_bracket(spec, a, b, p)

    def test_entrywise_leibniz(self):
        # {a_ij, (bc)_uv} = sum_w {a_ij, b_uw} c_wv + b_uw {a_ij, c_wv}
        spec = self.dp_spec()
        alg = spec.algebra
        p = MatrixPoint.random(alg, 2, seed=18)
        a = alg.element({(1, 1): 1})
        b = alg.element({(1,): 1})
        c = alg.element({(1, 1): 1})
        n = p.size
        lhs = coordinate_bracket(spec, a, b * c, p)
        ab = coordinate_bracket(spec, a, b, p)
        ac = coordinate_bracket(spec, a, c, p)
        bm = eval_element(b, p)
        cm = eval_element(c, p)
        for i in range(n):
            for j in range(n):
                for u in range(n):
                    for v in range(n):
                        rhs = sum(
                            ab[i][j][u][w] * cm[w][v] + bm[u][w] * ac[i][j][w][v]
                            for w in range(n)
                        )
                        assert lhs[i][j][u][v] == rhs
