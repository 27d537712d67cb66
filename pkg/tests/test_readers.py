"""Unit tests for the vertex, Waring and real-term file formats."""

from fractions import Fraction

import pytest

from simplex_integrals.errors import DegenerateSimplexError, DomainError, ExpressionSyntaxError
from simplex_integrals.readers import (
    parse_real_terms,
    parse_vector,
    parse_vertices,
    parse_waring,
    read_vertices,
)


class TestParseVector:
    """Tests for parse_vector()."""

    def test_rationals(self) -> None:
        assert parse_vector("1, 2/3,-1") == (1, Fraction(2, 3), -1)

    @pytest.mark.parametrize("text", ["", "1,,2", "1,a", "0.5"])
    def test_malformed(self, text: str) -> None:
        with pytest.raises(ExpressionSyntaxError):
            parse_vector(text)


class TestParseVertices:
    """Tests for parse_vertices()."""

    def test_translated_triangle(self) -> None:
        s = parse_vertices("1 1\n2 1\n1 2\n")
        assert s.base == (1, 1)
        assert s.volume == Fraction(1, 2)

    def test_comments_and_blank_lines(self) -> None:
        text = "# unit triangle\n0 0\n\n1 0  # x-axis\n0 1\n"
        assert parse_vertices(text).volume == Fraction(1, 2)

    def test_rational_coordinates(self) -> None:
        s = parse_vertices("0 0\n1/2 0\n0 1/2\n")
        assert s.volume == Fraction(1, 8)

    def test_wrong_line_count(self) -> None:
        with pytest.raises(ExpressionSyntaxError, match="Expected 3 vertices"):
            parse_vertices("0 0\n1 0\n")

    def test_ragged_rows(self) -> None:
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_vertices("0 0\n1 0 0\n0 1\n")
        assert exc_info.value.line == 2

    def test_bad_number(self) -> None:
        with pytest.raises(ExpressionSyntaxError, match="rational"):
            parse_vertices("0 0\n1 x\n0 1\n")

    def test_empty(self) -> None:
        with pytest.raises(ExpressionSyntaxError, match="empty"):
            parse_vertices("# nothing\n")

    def test_degenerate(self) -> None:
        with pytest.raises(DegenerateSimplexError):
            parse_vertices("0 0\n1 1\n2 2\n")

    def test_dimension_cap(self) -> None:
        with pytest.raises(DomainError):
            parse_vertices("0 0 0\n1 0 0\n0 1 0\n0 0 1\n", max_dimension=2)

    def test_read_from_file(self, write_file) -> None:
        path = write_file("tri.txt", "0 0\n2 0\n0 2\n")
        assert read_vertices(path).volume == 2


class TestParseWaring:
    """Tests for parse_waring()."""

    def test_terms(self) -> None:
        w = parse_waring("+1 1 1\n-1 1 -1\n", power=2)
        assert w.terms == ((1, (1, 1)), (-1, (1, -1)))
        assert w.power == 2
        assert w.dimension == 2

    def test_bad_sign(self) -> None:
        with pytest.raises(ExpressionSyntaxError, match="Sign"):
            parse_waring("2 1 1\n", power=2)

    def test_ragged(self) -> None:
        with pytest.raises(ExpressionSyntaxError):
            parse_waring("1 1 1\n1 1\n", power=2)

    def test_sign_only(self) -> None:
        with pytest.raises(ExpressionSyntaxError):
            parse_waring("1\n", power=2)


class TestParseRealTerms:
    """Tests for parse_real_terms()."""

    def test_rational_and_decimal_fields(self) -> None:
        f = parse_real_terms("1 -1/2\n")
        assert f.dimension == 1
        assert f.terms == ((1.0, (-0.5,)),)
        g = parse_real_terms("2.5 0.5 0.5\n-1e0 1 0\n")
        assert g.terms[0] == (2.5, (0.5, 0.5))
        assert g.degree == pytest.approx(1.0)

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DomainError):
            parse_real_terms("1 0.5 0.5\n", dimension=3)

    def test_exponent_at_minus_one(self) -> None:
        with pytest.raises(DomainError):
            parse_real_terms("1 -1\n")

    def test_mixed_degrees(self) -> None:
        with pytest.raises(DomainError):
            parse_real_terms("1 0.5 0.5\n1 1 1\n")

    def test_malformed(self) -> None:
        with pytest.raises(ExpressionSyntaxError):
            parse_real_terms("1 abc\n")

    def test_coefficient_only(self) -> None:
        with pytest.raises(ExpressionSyntaxError):
            parse_real_terms("1\n")
