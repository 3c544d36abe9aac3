from fractions import Fraction

import pytest

from cayley8.linalg import ExactMatrix, SingularMatrixError
from cayley8.polynomial import Polynomial, x
from cayley8.tensor import (
    FORM,
    MULTIVECTOR,
    DegreeMismatch,
    GradedTensor,
    VarianceMismatch,
    contract,
    dx,
    flat,
    hodge,
    inner,
    mv,
    musical,
    pullback_linear,
    sharp,
    unit,
    vol,
    wedge,
)
from cayley8.verify import contraction_oracle


class TestConstruction:
    def test_unsorted_indices_canonicalize(self):
        assert GradedTensor(FORM, 2, {(1, 0): 1}) == dx(0, 1) * -1

    def test_repeated_index_drops(self):
        assert GradedTensor(FORM, 2, {(1, 1): 5}).is_zero()

    def test_wrong_length_rejected(self):
        with pytest.raises(DegreeMismatch):
            GradedTensor(FORM, 2, {(0,): 1})

    def test_nonzero_out_of_range_degree_rejected(self):
        with pytest.raises(DegreeMismatch):
            GradedTensor(FORM, 9, {(0,): 1})

    def test_zero_tensor_any_degree(self):
        assert GradedTensor.zero(FORM, 11).is_zero()
        assert GradedTensor.zero(FORM, -1).is_zero()

    def test_immutable(self):
        with pytest.raises(AttributeError):
            dx(0).degree = 3

    def test_coefficient_lookup_with_sign(self):
        t = dx(0, 1, coeff=3)
        assert t.coefficient((1, 0)) == Polynomial.constant(-3)


class TestWedge:
    def test_basis_case(self):
        assert wedge(dx(0), dx(1)) == dx(0, 1)

    def test_antisymmetry(self):
        assert wedge(dx(1), dx(0)) == dx(0, 1) * -1

    def test_overflow_is_zero(self):
        a = dx(0, 1, 2, 3, 4)
        b = dx(5, 6, 7, coeff=2)
        assert wedge(wedge(a, b), dx(0)).is_zero()

    def test_variance_mismatch(self):
        with pytest.raises(VarianceMismatch):
            wedge(dx(0), mv(1))

    def test_graded_commutativity(self, make_tensor):
        for p, q in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 4)]:
            a, b = make_tensor(FORM, p), make_tensor(FORM, q)
            assert wedge(a, b) == wedge(b, a) * ((-1) ** (p * q))

    def test_associativity(self, make_tensor):
        for _ in range(5):
            a, b, c = (make_tensor(FORM, d) for d in (1, 2, 2))
            assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))

    def test_operator_alias(self):
        assert (dx(0) ^ dx(1)) == dx(0, 1)

    def test_degree_zero_multiplies(self):
        f = unit() * x(3)
        assert wedge(f, dx(0)) == dx(0, coeff=x(3))


class TestContract:
    def test_two_into_two(self):
        assert contract(mv(0, 1), dx(0, 1)) == unit()

    def test_order_convention(self):
        # (e0 ^ e1) _| dx012 applies e0 first: e1 _| (e0 _| dx012) = dx2
        assert contract(mv(0, 1), dx(0, 1, 2)) == dx(2)

    def test_degree_error(self):
        with pytest.raises(DegreeMismatch):
            contract(mv(0, 1), dx(0))

    def test_variance_checks(self):
        with pytest.raises(VarianceMismatch):
            contract(dx(0), dx(0, 1))
        with pytest.raises(VarianceMismatch):
            contract(mv(0), mv(0, 1))

    def test_coefficients_multiply_pointwise(self):
        q = mv(0, coeff=x(1))
        beta = dx(0, coeff=x(0))
        assert contract(q, beta) == unit() * (x(0) * x(1))

    def test_matches_decomposable_oracle(self, make_tensor, rng):
        for _ in range(40):
            k = rng.randint(1, 8)
            l = rng.randint(1, k)
            q = make_tensor(MULTIVECTOR, l)
            beta = make_tensor(FORM, k)
            assert contract(q, beta) == contraction_oracle(q, beta)


class TestHodge:
    def test_unit_to_volume(self):
        assert hodge(unit()) == vol()
        assert hodge(vol()) == unit()

    def test_identity_permutation(self):
        assert hodge(dx(0, 1, 2, 3)) == dx(4, 5, 6, 7)

    def test_involution_sign(self, make_tensor):
        for k in range(9):
            beta = make_tensor(FORM, k)
            assert hodge(hodge(beta)) == beta * ((-1) ** k)

    def test_inner_consistency(self, make_tensor):
        for k in range(9):
            beta = make_tensor(FORM, k)
            assert wedge(beta, hodge(beta)) == vol() * inner(beta, beta)

    def test_pairing_orthogonality(self):
        assert wedge(dx(0, 1), hodge(dx(0, 2))).is_zero()

    def test_wedge_star_computes_inner(self, make_tensor):
        a, b = make_tensor(FORM, 3), make_tensor(FORM, 3)
        assert wedge(a, hodge(b)) == vol() * inner(a, b)


class TestMusical:
    def test_examples(self):
        assert flat(mv(0)) == dx(0)
        assert flat(mv(0, 3)) == dx(0, 3)
        assert sharp(dx(2, 5)) == mv(2, 5)

    def test_involution(self, make_tensor):
        q = make_tensor(MULTIVECTOR, 3)
        assert sharp(flat(q)) == q
        assert musical(musical(q)) == q

    def test_variance_guards(self):
        with pytest.raises(VarianceMismatch):
            flat(dx(0))
        with pytest.raises(VarianceMismatch):
            sharp(mv(0))


class TestInner:
    def test_orthonormal_basis(self):
        assert inner(dx(0), dx(0)) == Polynomial.one()
        assert inner(dx(0), dx(1)).is_zero()

    def test_sorted_basis_forms_are_orthonormal(self):
        from cayley8.multiindex import basis

        for i in basis(3):
            for j in basis(3):
                value = inner(dx(*i), dx(*j))
                assert value == (Polynomial.one() if i == j else Polynomial.zero())

    def test_volume_has_unit_coefficient(self):
        assert vol().coefficient(tuple(range(8))) == Polynomial.one()

    def test_symmetric_bilinear(self, make_tensor):
        a, b = make_tensor(FORM, 2), make_tensor(FORM, 2)
        assert inner(a, b) == inner(b, a)

    def test_shape_mismatch(self):
        with pytest.raises(VarianceMismatch):
            inner(dx(0), mv(0))
        with pytest.raises(DegreeMismatch):
            inner(dx(0), dx(0, 1))


class TestPullback:
    def identity_rows(self):
        return [[Fraction(int(i == j)) for j in range(8)] for i in range(8)]

    def test_identity(self, make_tensor):
        beta = make_tensor(FORM, 2)
        assert pullback_linear(self.identity_rows(), beta) == beta

    def test_diagonal_scaling(self):
        rows = self.identity_rows()
        rows[0][0] = Fraction(2)
        assert pullback_linear(rows, dx(0, 1)) == dx(0, 1) * 2

    def test_functorial(self, make_tensor, rng):
        a = self.identity_rows()
        b = self.identity_rows()
        a[0][3] = Fraction(1, 2)
        b[2][1] = Fraction(-3)
        ab = (ExactMatrix(a) @ ExactMatrix(b)).rows
        beta = make_tensor(FORM, 2)
        assert pullback_linear(ab, beta) == pullback_linear(b, pullback_linear(a, beta))

    def test_commutes_with_wedge(self, make_tensor):
        rows = self.identity_rows()
        rows[4][5] = Fraction(7, 3)
        a, b = make_tensor(FORM, 1), make_tensor(FORM, 2)
        assert pullback_linear(rows, wedge(a, b)) == wedge(
            pullback_linear(rows, a), pullback_linear(rows, b)
        )

    def test_rotation_commutes_with_hodge(self, make_tensor):
        rows = self.identity_rows()
        rows[0][0], rows[0][1] = Fraction(3, 5), Fraction(-4, 5)
        rows[1][0], rows[1][1] = Fraction(4, 5), Fraction(3, 5)
        for k in (1, 2, 4):
            beta = make_tensor(FORM, k)
            assert hodge(pullback_linear(rows, beta)) == pullback_linear(rows, hodge(beta))

    def test_contraction_invariance(self, make_tensor):
        rows = self.identity_rows()
        rows[0][1] = Fraction(5)
        rows[3][3] = Fraction(1, 2)
        q = make_tensor(MULTIVECTOR, 2)
        beta = make_tensor(FORM, 3)
        assert contract(
            pullback_linear(rows, q), pullback_linear(rows, beta)
        ) == pullback_linear(rows, contract(q, beta))

    def test_singular_pushforward_errors(self):
        rows = self.identity_rows()
        rows[0][0] = Fraction(0)
        with pytest.raises(SingularMatrixError):
            pullback_linear(rows, mv(0, 1))
        # forms do not need invertibility
        assert pullback_linear(rows, dx(0)).is_zero()

    def test_coefficients_compose(self):
        rows = self.identity_rows()
        rows[0][0] = Fraction(2)
        beta = dx(1, coeff=x(0))
        assert pullback_linear(rows, beta) == dx(1, coeff=2 * x(0))
