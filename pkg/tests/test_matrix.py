"""Scalar coercion, ExactMatrix invariants, and the matrix text format."""

from fractions import Fraction

import pytest

from treecount import (
    ExactMatrix,
    MatrixFormatError,
    as_scalar,
    format_scalar,
    parse_matrix,
    parse_scalar,
    serialize_matrix,
)


def test_as_scalar_normalises_integral_fractions():
    assert as_scalar(Fraction(4, 2)) == 2
    assert isinstance(as_scalar(Fraction(4, 2)), int)
    assert as_scalar(Fraction(1, 3)) == Fraction(1, 3)


def test_as_scalar_rejects_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        as_scalar("3")


@pytest.mark.parametrize(
    "token,value",
    [
        ("5", 5),
        ("-12", -12),
        ("+7", 7),
        ("3/4", Fraction(3, 4)),
        ("-3/4", Fraction(-3, 4)),
        ("6/4", Fraction(3, 2)),
        ("8/2", 4),
        ("3/-4", Fraction(-3, 4)),
    ],
)
def test_parse_scalar(token, value):
    got = parse_scalar(token)
    assert got == value
    assert type(got) is type(value)


@pytest.mark.parametrize("token", ["1.5", "1/0", "abc", "1/2/3", "", "2 3"])
def test_parse_scalar_rejects(token):
    with pytest.raises(ValueError):
        parse_scalar(token)


def test_format_scalar_round_trips():
    for value in (0, -17, 123456789, Fraction(3, 4), Fraction(-22, 7)):
        assert parse_scalar(format_scalar(value)) == value


def test_matrix_requires_square():
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        ExactMatrix([[1, 2, 3]])
    with pytest.raises(ValueError):
        ExactMatrix([])


def test_matrix_basics():
    m = ExactMatrix([[1, 2], [3, 4]])
    assert m.order == 2
    assert m[1] == (3, 4)
    assert m.rows == ((1, 2), (3, 4))
    assert m.is_integer()
    assert m.transpose().rows == ((1, 3), (2, 4))
    assert ExactMatrix.identity(3).rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert not ExactMatrix([[Fraction(1, 2)]]).is_integer()


def test_matrix_equality_and_hash():
    a = ExactMatrix([[1, 2], [3, 4]])
    b = ExactMatrix([[Fraction(2, 2), 2], [3, 4]])
    assert a == b
    assert hash(a) == hash(b)
    assert a != ExactMatrix([[1]])


def test_submatrix():
    m = ExactMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m.submatrix({0}, {0}).rows == ((5, 6), (8, 9))
    assert m.submatrix({2}, {1}).rows == ((1, 3), (4, 6))
    assert m.submatrix({0, 2}, {0, 2}).rows == ((5,),)
    with pytest.raises(ValueError):
        m.submatrix({0, 1, 2}, {0, 1, 2})


def test_parse_matrix_with_comments_and_fractions():
    text = "# laplacian cofactor\n3\n2 -1 -1\n-1 2 -1\n\n-1 -1 1/2\n"
    m = parse_matrix(text)
    assert m.order == 3
    assert m[2] == (-1, -1, Fraction(1, 2))


def test_parse_matrix_line_numbers():
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix("x\n1\n")
    assert err.value.line == 1
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix("2\n1 2\n3 oops\n")
    assert err.value.line == 3
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix("2\n1 2 3\n4 5 6\n")
    assert err.value.line == 2
    with pytest.raises(MatrixFormatError) as err:
        parse_matrix("2\n1 2\n")
    assert err.value.line == 2
    with pytest.raises(MatrixFormatError):
        parse_matrix("0\n")
    with pytest.raises(MatrixFormatError):
        parse_matrix("# nothing\n")


def test_matrix_serialize_round_trip():
    m = ExactMatrix([[Fraction(1, 2), -3], [0, Fraction(-7, 3)]])
    text = serialize_matrix(m)
    assert text == "2\n1/2 -3\n0 -7/3\n"
    assert parse_matrix(text) == m
