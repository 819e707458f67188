import pytest
from hypothesis import given, settings, strategies as st

from chargebasis.bases import charge_basis
from chargebasis.combinatorics import (
    QPolynomial,
    enumerate_compositions,
    enumerate_partitions,
    transpose,
)
from chargebasis.combinatorics.enumeration import syt_count_by_shape
from chargebasis.symmetric import (
    SymmetricFunction,
    complete,
    e_coeff_combinatorial,
    e_coeff_symmetric,
    elementary,
    evaluate_at_one,
    hall_inner_product,
    inverse_kostka_matrix,
    kostka,
    kostka_by_permutations,
    kostka_descent,
    kostka_matrix,
    kostka_ssyt,
    modified_hl,
    modified_hl_by_qkostka,
    monomial,
    monomial_coefficient,
    omega,
    qkostka,
    qkostka_modified,
    schur,
    to_basis,
)
from chargebasis.utils import InvalidPartitionError


def q(*coeffs):
    return QPolynomial(tuple(coeffs))


def symmetric_functions(degree):
    parts = enumerate_partitions(degree)
    coefficients = st.lists(st.integers(-3, 3), max_size=3).map(lambda c: QPolynomial(tuple(c)))
    return st.builds(
        SymmetricFunction,
        st.just(degree),
        st.sampled_from(["m", "e", "h", "s"]),
        st.dictionaries(st.sampled_from(parts), coefficients, max_size=len(parts)),
    )


class TestKostka:
    def test_goldens(self):
        assert kostka((2, 2), (2, 1, 1)) == 1
        assert kostka((4,), (1, 2, 1)) == 1
        assert kostka((2, 1), (1, 1, 1)) == 2

    @pytest.mark.parametrize("n", range(1, 6))
    def test_routes_agree(self, n):
        for lam in enumerate_partitions(n):
            for gamma in enumerate_compositions(n):
                by_ssyt = kostka_ssyt(lam, gamma)
                assert kostka_descent(lam, gamma) == by_ssyt
                assert kostka_by_permutations(lam, gamma) == by_ssyt

    @pytest.mark.parametrize("n", range(1, 8))
    def test_standard_weight_counts_syt(self, n):
        counts = syt_count_by_shape(n)
        for lam in enumerate_partitions(n):
            assert kostka(lam, (1,) * n) == counts[lam]

    def test_size_mismatch(self):
        with pytest.raises(InvalidPartitionError):
            kostka((2, 1), (2, 2))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_inverse_matrix(self, n):
        k, inverse = kostka_matrix(n), inverse_kostka_matrix(n)
        for lam in k:
            for mu in k:
                entry = sum(k[lam][nu] * inverse[nu][mu] for nu in k)
                assert entry == (1 if lam == mu else 0)


class TestQKostka:
    def test_goldens(self):
        assert qkostka_modified((2, 1), (1, 1, 1)) == q(0, 1, 1)
        assert qkostka_modified((2, 1), (2, 1)) == q(0, 1)
        assert qkostka_modified((3,), (1, 1, 1)) == q(1)
        assert qkostka((3,), (1, 1, 1)) == q(0, 0, 0, 1)
        assert qkostka((2, 1), (1, 1, 1)) == q(0, 1, 1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_single_row_is_one(self, n):
        for mu in enumerate_partitions(n):
            assert qkostka_modified((n,), mu) == q(1)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_unimodular_at_q_one(self, n):
        for lam in enumerate_partitions(n):
            for mu in enumerate_partitions(n):
                assert qkostka_modified(lam, mu).evaluate(1) == kostka(lam, mu)


class TestModifiedHallLittlewood:
    def test_extremes(self):
        assert modified_hl((1,)) == schur((1,))
        assert modified_hl((4,)) == schur((4,))

    def test_two_column_example(self):
        assert modified_hl((1, 1, 1)).coeffs == {
            (3,): q(1),
            (2, 1): q(0, 1, 1),
            (1, 1, 1): q(0, 0, 0, 1),
        }

    @pytest.mark.parametrize("n", range(1, 6))
    def test_routes_agree(self, n):
        for mu in enumerate_partitions(n):
            assert modified_hl(mu) == modified_hl_by_qkostka(mu)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_specializes_to_complete(self, n):
        for mu in enumerate_partitions(n):
            assert evaluate_at_one(modified_hl(mu)) == complete(mu)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_graded_dimension(self, n):
        # <H~_mu, h_(1^n)> is the Hilbert series of R_mu
        for mu in enumerate_partitions(n):
            series = hall_inner_product(modified_hl(mu), complete((1,) * n))
            assert series == charge_basis(transpose(mu)).hilbert_series()


class TestInnerProduct:
    def test_schur_orthonormal(self):
        parts = enumerate_partitions(4)
        for a in parts:
            for b in parts:
                expected = q(1) if a == b else q()
                assert hall_inner_product(schur(a), schur(b)) == expected

    def test_e_against_h(self):
        assert hall_inner_product(elementary((2, 2)), complete((2, 1, 1))) == q(2)
        assert hall_inner_product(elementary((2, 2)), complete((3, 1))) == q()

    def test_monomial_coefficient(self):
        assert monomial_coefficient(complete((2, 1)), (1, 1, 1)) == q(3)
        assert monomial_coefficient(schur((2, 1)), (1, 2)) == q(1)

    def test_m_h_duality(self):
        assert hall_inner_product(monomial((2, 1)), complete((2, 1))) == q(1)
        assert hall_inner_product(monomial((2, 1)), complete((1, 1, 1))) == q()

    def test_degree_mismatch(self):
        with pytest.raises(InvalidPartitionError):
            hall_inner_product(schur((2,)), schur((2, 1)))


class TestOmega:
    def test_schur(self):
        assert omega(schur((3, 1))) == schur((2, 1, 1))

    def test_e_to_h(self):
        assert omega(elementary((2, 1))) == complete((2, 1))

    @settings(max_examples=30, deadline=None)
    @given(symmetric_functions(4))
    def test_involution(self, f):
        assert omega(omega(f)) == f

    @settings(max_examples=30, deadline=None)
    @given(symmetric_functions(5), symmetric_functions(5))
    def test_isometry(self, f, g):
        assert hall_inner_product(omega(f), omega(g)) == hall_inner_product(f, g)

    @settings(max_examples=30, deadline=None)
    @given(symmetric_functions(4), st.sampled_from(["m", "e", "h", "s"]))
    def test_basis_change_preserves_value(self, f, basis):
        assert to_basis(f, basis).to_basis(f.basis).coeffs == f.coeffs

    def test_unknown_basis(self):
        with pytest.raises(InvalidPartitionError):
            SymmetricFunction(2, "p", {})


class TestECoefficient:
    def test_golden(self):
        assert e_coeff_combinatorial((3, 1), (2, 2)) == q(0, 0, 1, 1)
        assert e_coeff_symmetric((3, 1), (2, 2)) == q(0, 0, 1, 1)

    def test_all_ones_gamma_is_hilbert_series(self):
        assert e_coeff_combinatorial((3, 1), (1, 1, 1, 1)) == charge_basis((3, 1)).hilbert_series()

    @pytest.mark.parametrize("n", range(1, 6))
    def test_routes_agree(self, n):
        for mu in enumerate_partitions(n):
            for gamma in enumerate_compositions(n):
                combinatorial = e_coeff_combinatorial(mu, gamma)
                assert combinatorial == e_coeff_symmetric(mu, gamma)
                at_one = hall_inner_product(elementary(gamma), complete(transpose(mu)))
                assert combinatorial.evaluate(1) == at_one.evaluate(1)

    @pytest.mark.slow
    def test_routes_agree_n6(self):
        for mu in enumerate_partitions(6):
            for gamma in enumerate_partitions(6):
                assert e_coeff_combinatorial(mu, gamma) == e_coeff_symmetric(mu, gamma)
