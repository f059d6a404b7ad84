"""
Input file parsing and rendering
"""

from fractions import Fraction

import pytest

from src.core.exceptions import ParseError
from src.nonassoc.algebras import sample_algebra
from src.nonassoc.formats import (
    parse_algebra,
    parse_endomorphism,
    parse_identities,
    parse_identity,
    parse_lambda,
    parse_law,
    parse_signed,
    read_file,
    render_algebra,
    render_endomorphism,
    render_identity,
    render_signed,
)
from src.nonassoc.homlie import gv_basis, heisenberg
from src.nonassoc.identities import JACOBI, POISSON
from src.nonassoc.superalgebra import SUPER_POISSON, transposed_super_axioms, sp_family


class TestIdentities:
    def test_pairs_and_comments(self):
        text = """
        # two identities
        left: 1 0 0 0 1 1   # jacobi
        right: 0 0 0 0 0 0

        left: 1/2 0 0 0 0 0
        right: -1/2 0 0 0 0 0
        """
        first, second = parse_identities(text)
        assert first.left.coords == (1, 0, 0, 0, 1, 1)
        assert second.left.coords[0] == Fraction(1, 2)
        assert second.right.coords[0] == Fraction(-1, 2)

    def test_named(self):
        assert parse_identity("named: jacobi") == JACOBI
        assert parse_identity(render_identity(POISSON)) == POISSON

    def test_short_row_column(self):
        with pytest.raises(ParseError) as info:
            parse_identities("left: 1 2 3\nright: 0 0 0 0 0 0", path="short.id")
        assert info.value.line == 1
        assert info.value.column == 12
        assert info.value.message.startswith("short.id:1:12: ")

    def test_bad_rational_column(self):
        with pytest.raises(ParseError) as info:
            parse_identities("left: 1 2 x 4 5 6\nright: 0 0 0 0 0 0")
        assert (info.value.line, info.value.column) == (1, 11)

    @pytest.mark.parametrize(
        "text",
        [
            "right: 0 0 0 0 0 0",
            "left: 1 0 0 0 0 0",
            "left: 1 0 0 0 0 0\nleft: 1 0 0 0 0 0",
            "named: octonion",
            "middle: 1 2 3 4 5 6",
            "# nothing here",
            "left: 1 0 0 0 0 0\nright: 1/0 0 0 0 0 0",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(ParseError):
            parse_identities(text)

    def test_single_expected(self):
        with pytest.raises(ParseError):
            parse_identity("named: jacobi\nnamed: poisson")


class TestOtherFormats:
    def test_lambda(self):
        polarized = parse_lambda("lambda: 4 -4 0 4 2 0 2 4 -2 2 -2 -2")
        assert polarized.lambdas[4] == 2
        with pytest.raises(ParseError):
            parse_lambda("lambda: 1 2 3")

    def test_law(self):
        law = parse_law("alpha: 0 0 2\nbeta: 0 1 -1")
        assert law == parse_law("named: transposed_leibniz")
        with pytest.raises(ParseError):
            parse_law("alpha: 0 0 2")
        with pytest.raises(ParseError):
            parse_law("alpha: 0 0 2\nalpha: 0 0 2\nbeta: 0 1 -1")

    def test_algebra(self):
        text = "dim 3\ne 1 2 = 0 0 1\ne 2 1 = 0 0 -1\n"
        assert parse_algebra(text) == sample_algebra("heisenberg")
        assert render_algebra(sample_algebra("heisenberg")) == text

    def test_graded_algebra(self):
        alg = sp_family("SP2,4", 2, 7)
        assert parse_algebra(render_algebra(alg)) == alg

    def test_algebra_index_out_of_range(self):
        with pytest.raises(ParseError) as info:
            parse_algebra("dim 2\ne 1 3 = 0 1")
        assert (info.value.line, info.value.column) == (2, 5)

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "e 1 1 = 1",
            "dim 0",
            "dim 2\ne 1 1 = 1 0\ne 1 1 = 0 1",
            "dim 2\ne 1 1 1 0",
            "dim 2\ndeg 0 2",
            "dim 2\ndeg 0 1\ne 1 1 = 0 1",
            "dim 2\ne 1 1 = 1 0\ndeg 0 1",
        ],
    )
    def test_algebra_rejected(self, text):
        with pytest.raises(ParseError):
            parse_algebra(text)

    def test_signed(self):
        for sid in [SUPER_POISSON] + transposed_super_axioms():
            assert parse_signed(render_signed(sid)) == sid
        with pytest.raises(ParseError):
            parse_signed("term 1 coeff 1 signs ab")
        with pytest.raises(ParseError):
            parse_signed("term 1 coeff 1 signs -\nterm 1 coeff 2 signs -")
        with pytest.raises(ParseError):
            parse_signed("term 13 coeff 1 signs -")

    def test_endomorphism(self):
        f = gv_basis(heisenberg())[0]
        assert parse_endomorphism(render_endomorphism(f)) == f
        with pytest.raises(ParseError) as info:
            parse_endomorphism("1 0\n0")
        assert info.value.line == 2

    def test_read_file(self, write_file):
        path = write_file("jacobi.id", "named: jacobi\n")
        assert read_file(path, parse_identity) == JACOBI
        broken = write_file("broken.id", "left: 1\n")
        with pytest.raises(ParseError) as info:
            read_file(broken, parse_identity)
        assert info.value.path == broken
        assert info.value.message.startswith(broken)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            read_file(tmp_path / "absent.id", parse_identity)
