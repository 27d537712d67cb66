"""Unit tests for the integration engine."""

import math
import random
from fractions import Fraction

import pytest

from simplex_integrals.errors import DomainError
from simplex_integrals.integrate import (
    LinearFormPower,
    RealExponentSum,
    WaringDecomposition,
    e_t,
    integrate_canonical,
    integrate_canonical_exact,
    integrate_canonical_xi,
    integrate_linear_form_power,
    integrate_many,
    integrate_real_exponents,
    integrate_scaled,
    integrate_scaled_real,
    integrate_simplex,
    integrate_waring,
    laplace_identity_check,
)
from simplex_integrals.models import IntegrationMode
from simplex_integrals.poly import Polynomial, parse
from simplex_integrals.simplex import Simplex, canonical_simplex, from_vertices


class TestCanonical:
    """Tests for integration over the canonical simplex."""

    def test_example_exact(self, example_poly: Polynomial) -> None:
        result = integrate_canonical_exact(example_poly)
        assert result.exact == Fraction(7, 24)
        assert result.approx == 7 / 24
        assert result.mode is IntegrationMode.EXACT

    def test_example_xi(self, example_poly: Polynomial) -> None:
        result = integrate_canonical_xi(example_poly)
        assert result.exact is None
        assert result.approx == pytest.approx(7 / 24, abs=1e-12)
        assert result.mode is IntegrationMode.XI

    @pytest.mark.parametrize(
        "expr, n, value",
        [
            ("1", 3, Fraction(1, 6)),
            ("x1*x2", 2, Fraction(1, 24)),
            ("x1^2", 3, Fraction(1, 60)),
            ("x1^2*x2", 3, Fraction(1, 360)),
            ("0", 5, Fraction(0)),
        ],
    )
    def test_monomials(self, expr: str, n: int, value: Fraction) -> None:
        f = parse(expr, n)
        assert integrate_canonical(f).exact == value
        assert integrate_canonical(f, IntegrationMode.XI).approx == pytest.approx(
            float(value), rel=1e-12, abs=1e-15
        )

    def test_gamma_mode_rejected_for_polynomials(self, example_poly: Polynomial) -> None:
        with pytest.raises(DomainError):
            integrate_canonical(example_poly, IntegrationMode.GAMMA)

    def test_linearity(self, make_polynomial) -> None:
        f, g = make_polynomial(3, 4), make_polynomial(3, 6)
        a, b = Fraction(2, 3), Fraction(-5, 7)
        lhs = integrate_canonical_exact(a * f + b * g).exact
        rhs = a * integrate_canonical_exact(f).exact + b * integrate_canonical_exact(g).exact
        assert lhs == rhs

    def test_rational_coefficients(self) -> None:
        f = parse("(1/2)*x1^3 - x2", 2)
        # (1/2)·3!/5! − 1/3!
        assert integrate_canonical_exact(f).exact == Fraction(1, 40) - Fraction(1, 6)

    def test_integrate_many_preserves_order(self, make_polynomial) -> None:
        polys = [make_polynomial(2, d) for d in range(1, 6)]
        serial = [integrate_canonical_exact(f) for f in polys]
        assert integrate_many(polys) == serial
        assert integrate_many(polys, workers=2) == serial

    def test_integrate_many_xi(self, make_polynomial) -> None:
        polys = [make_polynomial(3, 3) for _ in range(3)]
        results = integrate_many(polys, mode=IntegrationMode.XI)
        assert [r.mode for r in results] == [IntegrationMode.XI] * 3


class TestScaled:
    """Tests for the scaled simplex and the Laplace identity."""

    def test_constant(self) -> None:
        assert integrate_scaled(Polynomial.constant(2, 1), (2, 2)).exact == Fraction(1, 8)

    def test_linear(self) -> None:
        assert integrate_scaled(parse("x1", 1), (3,)).exact == Fraction(1, 18)

    def test_unit_weights_match_canonical(self, make_polynomial) -> None:
        f = make_polynomial(3, 5)
        assert integrate_scaled(f, (1, 1, 1)).exact == integrate_canonical_exact(f).exact

    def test_matches_vertex_simplex(self, make_polynomial) -> None:
        z = (Fraction(1, 2), 3, Fraction(5, 4))
        f = make_polynomial(3, 4)
        s = from_vertices([(0, 0, 0), (2, 0, 0), (0, Fraction(1, 3), 0), (0, 0, Fraction(4, 5))])
        assert integrate_scaled(f, z).exact == integrate_simplex(s, f).exact

    def test_homogeneous_scaling(self, make_polynomial) -> None:
        lam = Fraction(3, 2)
        for n, t in [(2, 3), (3, 2)]:
            top = {a: c for a, c in make_polynomial(n, t).terms if sum(a) == t}
            f = Polynomial.from_mapping(n, top)
            scaled = integrate_scaled(f, (1 / lam,) * n).exact
            assert scaled == lam ** (n + t) * integrate_canonical_exact(f).exact

    @pytest.mark.parametrize("z", [(0, 1), (-1, 2)])
    def test_rejects_non_positive_weights(self, z) -> None:
        with pytest.raises(DomainError):
            integrate_scaled(parse("x1", 2), z)

    def test_rejects_wrong_length(self) -> None:
        with pytest.raises(DomainError):
            integrate_scaled(parse("x1", 2), (1, 1, 1))

    def test_value_beyond_float_range(self) -> None:
        r = integrate_scaled(parse("x1^200", 1), (Fraction(1, 100000),))
        assert r.exact == Fraction(10**1005, 201)
        assert r.approx == math.inf

    @pytest.mark.parametrize(
        "alpha, z",
        [((0,), (1,)), ((1, 1), (1, 1)), ((2, 0), (1, 2)), ((1, 2, 0), (Fraction(1, 3), 2, 5))],
    )
    def test_laplace_identity(self, alpha, z) -> None:
        lhs, rhs = laplace_identity_check(alpha, z)
        assert lhs == rhs

    def test_laplace_identity_value(self) -> None:
        assert laplace_identity_check((2, 0), (1, 2)) == (1, 1)


class TestLinearForms:
    """Tests for E_t and powers of linear forms."""

    def test_e_t_values(self) -> None:
        assert e_t((1, 1), 2) == 3
        assert e_t((1, 1, 1), 0) == 1
        assert e_t((1, 2), 3) == 15

    def test_e_t_at_ones_is_binomial(self) -> None:
        for n in range(1, 6):
            for t in range(0, 8):
                assert e_t((1,) * n, t) == math.comb(n + t - 1, t)

    def test_e_t_negative(self) -> None:
        with pytest.raises(DomainError):
            e_t((1, 2), -1)

    @pytest.mark.parametrize(
        "ell, t, value",
        [((1, 1), 2, Fraction(1, 4)), ((1, 2), 2, Fraction(7, 12)), ((0, 0), 3, Fraction(0))],
    )
    def test_closed_form(self, ell, t: int, value: Fraction) -> None:
        assert integrate_linear_form_power(LinearFormPower(ell, t)).exact == value

    def test_matches_expansion(self) -> None:
        r = random.Random(8)
        for _ in range(20):
            n, t = r.randint(1, 4), r.randint(0, 5)
            ell = tuple(Fraction(r.randint(-4, 4), r.randint(1, 3)) for _ in range(n))
            lp = LinearFormPower(ell, t)
            expanded = integrate_canonical_exact(lp.expand()).exact
            assert integrate_linear_form_power(lp).exact == expanded

    def test_rejects_negative_power(self) -> None:
        with pytest.raises(DomainError):
            LinearFormPower((1, 2), -1)


class TestSimplex:
    """Tests for integration over vertex-defined simplices."""

    def test_translated(self, translated_triangle: Simplex) -> None:
        assert integrate_simplex(translated_triangle, parse("x1", 2)).exact == Fraction(2, 3)

    def test_canonical_vertices_match_canonical_path(self, example_poly: Polynomial) -> None:
        assert integrate_simplex(canonical_simplex(2), example_poly).exact == Fraction(7, 24)

    def test_doubled_area(self, doubled_triangle: Simplex) -> None:
        assert integrate_simplex(doubled_triangle, Polynomial.constant(2, 1)).exact == 2

    def test_xi_mode(self, translated_triangle: Simplex, example_poly: Polynomial) -> None:
        exact = integrate_simplex(translated_triangle, example_poly).exact
        approx = integrate_simplex(translated_triangle, example_poly, IntegrationMode.XI)
        assert approx.approx == pytest.approx(float(exact), rel=1e-12)

    def test_orientation_does_not_matter(self, make_simplex, make_polynomial) -> None:
        s = make_simplex(3)
        f = make_polynomial(3, 3)
        flipped = from_vertices([s.vertices[1], s.vertices[0], *s.vertices[2:]])
        assert flipped.det == -s.det
        assert integrate_simplex(flipped, f).exact == integrate_simplex(s, f).exact

    def test_huge_vertices(self) -> None:
        s = from_vertices([(0,), (10**200,)])
        f = parse("x1^2", 1)
        r = integrate_simplex(s, f)
        assert r.exact == Fraction(10**600, 3)
        assert r.approx == math.inf
        assert integrate_simplex(s, f, IntegrationMode.XI).approx == math.inf


class TestWaring:
    """Tests for Waring decompositions."""

    def test_single_term_on_canonical(self) -> None:
        w = WaringDecomposition(terms=((1, (1, 2)),), power=2)
        assert integrate_waring(canonical_simplex(2), w).exact == Fraction(7, 12)

    def test_cancelling_terms(self) -> None:
        w = WaringDecomposition(terms=((1, (1, 3)), (-1, (1, 3))), power=3)
        assert integrate_waring(canonical_simplex(2), w).exact == 0

    def test_doubled_triangle(self, doubled_triangle: Simplex) -> None:
        w = WaringDecomposition(terms=((1, (1, 0)),), power=1)
        assert integrate_waring(doubled_triangle, w).exact == Fraction(4, 3)

    def test_matches_expansion(self, translated_triangle: Simplex) -> None:
        terms = ((1, (1, 2)), (-1, (Fraction(1, 2), -1)), (1, (0, 3)))
        w = WaringDecomposition(terms=terms, power=4)
        direct = integrate_waring(translated_triangle, w).exact
        assert direct == integrate_simplex(translated_triangle, w.expand()).exact

    def test_xy_identity(self) -> None:
        # 4·x1·x2 = (x1 + x2)^2 − (x1 − x2)^2
        w = WaringDecomposition(terms=((1, (1, 1)), (-1, (1, -1))), power=2)
        assert w.expand() == parse("4*x1*x2", 2)
        assert integrate_waring(canonical_simplex(2), w).exact == Fraction(1, 6)

    def test_bad_sign(self) -> None:
        with pytest.raises(DomainError):
            WaringDecomposition(terms=((2, (1, 1)),), power=2)

    def test_ragged_vectors(self) -> None:
        with pytest.raises(DomainError):
            WaringDecomposition(terms=((1, (1, 1)), (1, (1,))), power=2)

    def test_dimension_mismatch(self, translated_triangle: Simplex) -> None:
        w = WaringDecomposition(terms=((1, (1, 1, 1)),), power=2)
        with pytest.raises(DomainError):
            integrate_waring(translated_triangle, w)


class TestRealExponents:
    """Tests for real-exponent sums."""

    def test_inverse_square_root(self) -> None:
        f = RealExponentSum(1, ((1.0, (-0.5,)),))
        assert integrate_real_exponents(f).approx == pytest.approx(2.0, rel=1e-12)
        xi = integrate_real_exponents(f, IntegrationMode.XI)
        assert xi.approx == pytest.approx(2.0, rel=1e-12)

    def test_half_powers(self) -> None:
        f = RealExponentSum(2, ((1.0, (0.5, 0.5)),))
        assert integrate_real_exponents(f).approx == pytest.approx(math.pi / 24, rel=1e-12)
        assert integrate_real_exponents(f, IntegrationMode.XI).approx == pytest.approx(
            math.pi / 24, rel=1e-12
        )

    def test_integer_exponents_match_exact(self, make_polynomial) -> None:
        for n, t in [(2, 2), (3, 4), (4, 3)]:
            base = make_polynomial(n, t, 10)
            f = Polynomial.from_mapping(n, {a: c for a, c in base.terms if sum(a) == t})
            exact = float(integrate_canonical_exact(f).exact)
            real = integrate_real_exponents(RealExponentSum.from_polynomial(f)).approx
            assert real == pytest.approx(exact, rel=1e-10, abs=1e-14)

    def test_degree_zero_gamma_mode(self) -> None:
        f = RealExponentSum(2, ((1.0, (0.5, -0.5)),))
        assert integrate_real_exponents(f).approx == pytest.approx(math.pi / 4, rel=1e-12)

    def test_degree_zero_xi_mode(self) -> None:
        f = RealExponentSum(2, ((1.0, (0.5, -0.5)),))
        with pytest.raises(DomainError):
            integrate_real_exponents(f, IntegrationMode.XI)

    def test_signed_coefficients(self) -> None:
        f = RealExponentSum(2, ((2.0, (1.5, 0.5)), (-1.0, (0.5, 1.5))))
        # both terms share Γ(5/2)Γ(3/2)/Γ(5)
        weight = math.gamma(2.5) * math.gamma(1.5) / math.gamma(5.0)
        assert integrate_real_exponents(f).approx == pytest.approx(weight, rel=1e-12)

    def test_rejects_exponent_at_minus_one(self) -> None:
        with pytest.raises(DomainError):
            RealExponentSum(1, ((1.0, (-1.0,)),))

    def test_rejects_mixed_degrees(self) -> None:
        with pytest.raises(DomainError, match="total degree"):
            RealExponentSum(2, ((1.0, (0.5, 0.5)), (1.0, (0.5, 1.0))))

    def test_from_polynomial_requires_homogeneous(self, example_poly: Polynomial) -> None:
        with pytest.raises(DomainError):
            RealExponentSum.from_polynomial(example_poly)

    def test_scaled(self) -> None:
        f = RealExponentSum(1, ((1.0, (-0.5,)),))
        assert integrate_scaled_real(f, (4.0,)).approx == pytest.approx(1.0, rel=1e-12)

    def test_scaled_matches_polynomial(self) -> None:
        f = parse("x1*x2^2", 2)
        exact = float(integrate_scaled(f, (2, 3)).exact)
        real = integrate_scaled_real(RealExponentSum.from_polynomial(f), (2.0, 3.0)).approx
        assert real == pytest.approx(exact, rel=1e-12)
