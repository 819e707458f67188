import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.polys.groebnertools import groebner, is_groebner, is_reduced

from chargebasis.bases import charge_basis
from chargebasis.combinatorics import enumerate_partitions
from chargebasis.quotient import (
    QuotientVerifier,
    apply_antisymmetrizer,
    bareiss_rank,
    boxes_outside_columns,
    buchberger,
    certify_antisym_basis,
    certify_basis,
    elementary_symmetric,
    expected_dimension,
    format_polynomial,
    monomial,
    permute_variables,
    polynomial_ring,
    quotient_dimension,
    tanisaki_basis,
    tanisaki_generators,
    variable,
)
from chargebasis.utils import ChargeBasisError, ConfigurationError, InvalidPartitionError
from chargebasis.utils.config import RunConfig

integer_matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda width: st.lists(
        st.lists(st.integers(-6, 6), min_size=width, max_size=width), min_size=1, max_size=6
    )
)


def as_strings(polys):
    return sorted(str(p) for p in polys)


class TestPolynomials:
    def test_variable_order(self):
        R = polynomial_ring(3)
        assert [str(g) for g in R.gens] == ["x3", "x2", "x1"]
        assert str(variable(R, 1)) == "x1"

    def test_monomial_rendering(self):
        R = polynomial_ring(4)
        assert format_polynomial(monomial(R, (0, 1, 0, 2))) == "x2 x4^2"
        assert format_polynomial(R.zero) == "0"
        assert format_polynomial(monomial(R, (0, 0, 0, 0), -3)) == "-3"

    def test_wrong_length(self):
        with pytest.raises(ChargeBasisError):
            monomial(polynomial_ring(2), (1, 0, 0))

    def test_unknown_order(self):
        with pytest.raises(ChargeBasisError):
            polynomial_ring(2, "deglex")

    def test_elementary_symmetric(self):
        R = polynomial_ring(3)
        x1, x2, x3 = (variable(R, i) for i in (1, 2, 3))
        assert elementary_symmetric(R, [1, 2, 3], 2) == x1 * x2 + x1 * x3 + x2 * x3
        assert elementary_symmetric(R, [2], 0) == R.one
        assert elementary_symmetric(R, [2], 2) == R.zero

    def test_permute_variables(self):
        R = polynomial_ring(3)
        p = monomial(R, (2, 1, 0))
        assert permute_variables(p, (3, 1, 2)) == monomial(R, (1, 0, 2))


class TestBuchberger:
    def test_two_variable_coinvariants(self):
        R = polynomial_ring(2)
        x1, x2 = variable(R, 1), variable(R, 2)
        basis = buchberger([x1 + x2, x1 * x2])
        assert basis.polynomials == (x2 + x1, x1**2)
        assert basis.leading_monomials() == ((0, 1), (2, 0))
        assert basis.standard_monomials() == ((0, 0), (1, 0))
        assert basis.graded_standard_counts() == [1, 1]

    def test_empty_ideal(self):
        with pytest.raises(ChargeBasisError):
            buchberger([])
        basis = buchberger([], n=2)
        assert len(basis) == 0
        with pytest.raises(ChargeBasisError):
            basis.standard_monomials()

    def test_membership(self):
        R = polynomial_ring(2)
        x1, x2 = variable(R, 1), variable(R, 2)
        basis = buchberger([x1 + x2, x1 * x2])
        assert basis.contains(x1**2 + x1 * x2)
        assert not basis.contains(x1)

    @pytest.mark.parametrize("order", ["grevlex", "lex"])
    @pytest.mark.parametrize("n", range(1, 5))
    def test_matches_sympy(self, n, order):
        for mu in enumerate_partitions(n):
            R = polynomial_ring(n, order)
            generators = tanisaki_generators(mu, order=order)
            ours = buchberger(generators, order=order)
            reference = groebner(generators, R)
            assert as_strings(ours.polynomials) == as_strings(reference)
            assert is_groebner(list(ours.polynomials), R)
            assert is_reduced(list(ours.polynomials), R)


class TestTanisaki:
    def test_boxes_outside_columns(self):
        assert boxes_outside_columns((2, 1), 0) == 3
        assert boxes_outside_columns((2, 1), 1) == 1
        assert boxes_outside_columns((2, 1), 2) == 0

    def test_generators(self):
        assert len(tanisaki_generators((2, 1))) == 6
        assert len(tanisaki_generators((1, 1, 1))) == 3
        assert len(tanisaki_generators((3,))) == 12

    def test_pruned_generators(self):
        assert len(tanisaki_generators((3,), prune=True)) == 9
        assert len(tanisaki_generators((2, 1), prune=True)) == 6
        assert len(tanisaki_generators((2, 2), prune=True)) < len(tanisaki_generators((2, 2)))

    @pytest.mark.parametrize("order", ["grevlex", "lex"])
    @pytest.mark.parametrize("n", range(1, 5))
    def test_pruning_keeps_ideal(self, n, order):
        for mu in enumerate_partitions(n):
            full = buchberger(tanisaki_generators(mu, order=order), order=order)
            pruned = buchberger(tanisaki_generators(mu, order=order, prune=True), order=order)
            assert as_strings(pruned.polynomials) == as_strings(full.polynomials)
            assert as_strings(tanisaki_basis(mu, order).polynomials) == as_strings(full.polynomials)

    def test_generators_size_mismatch(self):
        with pytest.raises(InvalidPartitionError):
            tanisaki_generators((2, 1), n=4)

    def test_extremes(self):
        assert quotient_dimension((1, 1, 1)) == 6
        assert tanisaki_basis((1, 1, 1)).graded_standard_counts() == [1, 2, 2, 1]
        assert quotient_dimension((3,)) == 1

    def test_hook(self):
        assert tanisaki_basis((2, 1)).graded_standard_counts() == [1, 2]

    @pytest.mark.parametrize("n", range(1, 5))
    def test_dimension(self, n):
        for mu in enumerate_partitions(n):
            assert quotient_dimension(mu) == expected_dimension(mu)
            assert quotient_dimension(mu, "lex") == expected_dimension(mu)

    @pytest.mark.slow
    def test_dimension_n5(self):
        for mu in enumerate_partitions(5):
            assert quotient_dimension(mu) == expected_dimension(mu)


class TestCertification:
    def test_charge_basis(self):
        result = certify_basis(charge_basis((3, 1)), (3, 1))
        assert result.passed
        assert result.ring == (2, 1, 1)
        assert result.rank == result.size == result.dimension == 12
        assert result.graded_ranks == [1, 3, 5, 3]
        assert result.expected_graded == [1, 3, 5, 3]

    def test_lex_order(self):
        assert certify_basis(charge_basis((2, 2)), (2, 2), order="lex").passed

    def test_missing_monomial_fails(self):
        members = charge_basis((3, 1)).ordered()[1:]
        result = certify_basis(members, (3, 1))
        assert not result.passed
        assert result.rank == 11

    def test_dependent_set_fails(self):
        # x1 + x2 + x3 lies in the ideal of R_(1,1,1)
        result = certify_basis([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], (3,))
        assert not result.passed

    @pytest.mark.parametrize("n", range(1, 5))
    def test_every_charge_basis(self, n):
        for mu in enumerate_partitions(n):
            assert certify_basis(charge_basis(mu), mu).passed

    def test_antisymmetrizer(self):
        R = polynomial_ring(4)
        p = apply_antisymmetrizer(monomial(R, (0, 1, 0, 2)), (2, 2))
        expected = (
            monomial(R, (0, 1, 0, 2))
            - monomial(R, (1, 0, 0, 2))
            - monomial(R, (0, 1, 2, 0))
            + monomial(R, (1, 0, 2, 0))
        )
        assert p == expected

    def test_antisymmetrizer_size_mismatch(self):
        with pytest.raises(InvalidPartitionError):
            apply_antisymmetrizer(monomial(polynomial_ring(3), (0, 1, 2)), (2, 2))

    def test_antisymmetric_basis(self):
        result = certify_antisym_basis((3, 1), (2, 2))
        assert result.passed
        assert result.rank == result.size == result.expected_dimension == 2
        assert result.graded_ranks == [0, 0, 1, 1]
        assert len(result.polynomials) == 2
        assert result.to_dict(include_timings=False)["kind"] == "antisym"

    def test_trivial_gamma_is_plain_basis(self):
        result = certify_antisym_basis((3, 1), (1, 1, 1, 1))
        assert result.passed
        assert result.size == 12

    @pytest.mark.parametrize("n", range(2, 5))
    def test_every_antisymmetric_basis(self, n):
        for mu in enumerate_partitions(n):
            for gamma in enumerate_partitions(n):
                assert certify_antisym_basis(mu, gamma).passed


class TestBareiss:
    def test_examples(self):
        assert bareiss_rank([[1, 2], [2, 4]]) == 1
        assert bareiss_rank([[0, 0], [0, 0]]) == 0
        assert bareiss_rank([[0, 1], [1, 0], [1, 1]]) == 2

    @settings(max_examples=60, deadline=None)
    @given(integer_matrices)
    def test_matches_sympy(self, rows):
        assert bareiss_rank(rows) == Matrix(rows).rank()


class TestQuotientVerifier:
    def test_ring_index(self):
        result = QuotientVerifier().verify_ring((1, 1))
        assert result.passed
        assert result.dimension == 2
        assert result.basis_index == (2,)

    def test_size_limit(self):
        with pytest.raises(ConfigurationError):
            QuotientVerifier().verify_ring((2, 2, 1, 1))

    def test_verify_many(self):
        verifier = QuotientVerifier(run_config=RunConfig(workers=2))
        results = verifier.verify_many([((2, 1), None), ((2, 1, 1), (2, 2))])
        assert [r.kind for r in results] == ["basis", "antisym"]
        assert all(r.passed for r in results)
