"""
Round-trip and error checks for the text and JSON codecs.

* Matrix text: plain and graded matrices, comments, errors with line numbers,
  ring checks.
* Complex and filtration text with and without an ``@order`` header.
* Barcode JSON and text output for the square filtration.
"""

from __future__ import annotations

import json

import pytest

from snfpers.barcode import Interval, barcode
from snfpers.catalog import square_filtration, two_triangles
from snfpers.errors import ClosureError, DuplicateSimplexError, ParseError, RingMismatchError
from snfpers.formats import (
    barcode_to_dict,
    dump_barcode_json,
    format_barcode_text,
    format_complex,
    format_filtration,
    format_matrix,
    parse_barcode_json,
    parse_complex,
    parse_filtration,
    parse_matrix,
)
from snfpers.matrices import GradedMatrix, Matrix
from snfpers.rings import IntegerRing, PolynomialRing, PrimeField, RationalField
from snfpers.simplicial import Simplex

Z = IntegerRing()
Q = RationalField()

_MATRIX_TEXT = """\
# the worked 3x4 example
3 4 z
1 2 0 1
0 3 0 3   # second row
0 0 1 1
"""

_GRADED_TEXT = """\
2 2 qx
x 0
-1 x^2
rowdeg 1 2
coldeg 2 4
"""

_SQUARE_TEXT = """\
@order a b c d
0 a
0 b
1 c
1 d
1 a b
1 b c
2 a d
2 c d
3 a c
4 a b c
5 a c d
"""


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

def test_parse_matrix() -> None:
    m = parse_matrix(_MATRIX_TEXT)
    assert m == Matrix.from_rows(Z, [[1, 2, 0, 1], [0, 3, 0, 3], [0, 0, 1, 1]])


def test_format_matrix_parses_back() -> None:
    m = parse_matrix(_MATRIX_TEXT)
    text = format_matrix(m)
    assert text.splitlines()[0] == "3 4 z"
    assert parse_matrix(text) == m


def test_parse_graded_matrix() -> None:
    g = parse_matrix(_GRADED_TEXT)
    qx = PolynomialRing(Q)
    assert isinstance(g, GradedMatrix)
    assert g.row_degrees == (1, 2)
    assert g.col_degrees == (2, 4)
    assert g.base[1, 1] == qx.monomial(1, 2)
    assert parse_matrix(format_matrix(g)) == g


def test_parse_prime_field_matrix() -> None:
    m = parse_matrix("2 2 z5\n1 7\n-1 0\n")
    f5 = PrimeField(5)
    assert m.ring == f5
    assert m == Matrix.from_rows(f5, [[f5.parse("1"), f5.parse("2")], [f5.parse("4"), f5.zero()]])


def test_empty_columns() -> None:
    m = parse_matrix("2 0 q\n")
    assert m.shape == (2, 0)


_BAD_MATRICES = [
    ("", "empty"),
    ("3 4\n", "line 1"),
    ("2 2 z\n1 2\n3\n", "line 3: expected 2 entries"),
    ("1 2 z\n1 x\n", "line 2"),
    ("2 1 z\n1\n", "expected 2 matrix rows"),
    ("1 1 w\n1\n", "line 1"),
    ("1 1 qx\nx\nrowdeg 0\n", "both"),
    ("1 1 qx\nx\nrowdeg 0\nrowdeg 0\ncoldeg 1\n", "line 4: duplicate"),
    ("x 1 z\n1\n", "row count"),
]


@pytest.mark.parametrize("text,message", _BAD_MATRICES)
def test_bad_matrix_text(text: str, message: str) -> None:
    with pytest.raises(ParseError, match=message):
        parse_matrix(text)


def test_requested_ring_must_match_header() -> None:
    with pytest.raises(RingMismatchError, match="line 2"):
        parse_matrix(_MATRIX_TEXT, RationalField())
    assert parse_matrix(_MATRIX_TEXT, Z).ring == Z


# ---------------------------------------------------------------------------
# Complexes and filtrations
# ---------------------------------------------------------------------------

def test_parse_complex_round_trip() -> None:
    k = two_triangles()
    text = format_complex(k)
    assert text.splitlines()[0] == "@order a b c d"
    assert parse_complex(text) == k


def test_parse_complex_without_order() -> None:
    k = parse_complex("a\nb\nc\na b\nb c   # path\n")
    assert k.vertices == ("a", "b", "c")
    assert k.count(1) == 2


def test_parse_complex_auto_close() -> None:
    with pytest.raises(ClosureError):
        parse_complex("a b c\n")
    assert len(parse_complex("a b c\n", auto_close=True)) == 7


@pytest.mark.parametrize(
    "text",
    ["a\n@order a\n", "@order a b\n@order a b\na\n", "@order a a\na\n"],
)
def test_bad_order_header(text: str) -> None:
    with pytest.raises(ParseError):
        parse_complex(text)


def test_parse_square_filtration() -> None:
    filt = parse_filtration(_SQUARE_TEXT)
    expected = square_filtration()
    assert dict(filt.birth) == dict(expected.birth)
    assert filt.complex.vertices == ("a", "b", "c", "d")


def test_format_filtration_parses_back() -> None:
    filt = square_filtration()
    again = parse_filtration(format_filtration(filt))
    assert dict(again.birth) == dict(filt.birth)


def test_order_header_changes_orientation() -> None:
    filt = parse_filtration("@order b a\n0 a\n0 b\n1 a b\n")
    assert Simplex(("b", "a")) in filt.birth


@pytest.mark.parametrize(
    "text,message",
    [("a\n", "line 1: expected"), ("x a\n", "line 1: birth time"), ("-1 a\n", "birth time")],
)
def test_bad_filtration_text(text: str, message: str) -> None:
    with pytest.raises(ParseError, match=message):
        parse_filtration(text)


def test_filtration_duplicates_follow_strictness() -> None:
    text = "0 a\n2 a\n"
    with pytest.raises(DuplicateSimplexError):
        parse_filtration(text, strict=True)
    assert parse_filtration(text, strict=False).birth[Simplex(("a",))] == 0


# ---------------------------------------------------------------------------
# Barcodes
# ---------------------------------------------------------------------------

def test_barcode_json_round_trip() -> None:
    bc = barcode(square_filtration(), Q)
    assert parse_barcode_json(dump_barcode_json(bc)) == bc


def test_barcode_json_round_trip_over_prime_field() -> None:
    bc = barcode(square_filtration(), PrimeField(3))
    assert parse_barcode_json(dump_barcode_json(bc)) == bc


def test_barcode_dict_layout() -> None:
    data = barcode_to_dict(barcode(square_filtration(), Q))
    assert data["field"] == "Q"
    assert data["max_dim"] == 2
    first = data["bars"][0]
    assert (first["dim"], first["birth"], first["death"]) == (0, 0, 1)
    assert first["rep"] == [["-1", "a"], ["1", "b"]]
    essential = data["bars"][1]
    assert essential["death"] is None
    json.dumps(data)


def test_barcode_json_without_reps() -> None:
    text = json.dumps({"field": "Z2", "bars": [{"dim": 1, "birth": 2, "death": 5}]})
    bc = parse_barcode_json(text)
    assert bc.field == PrimeField(2)
    assert bc.max_dim == 1
    assert bc.intervals(1) == [Interval(2, 5)]
    assert bc.bars[0].representative is None


@pytest.mark.parametrize(
    "text",
    ["not json", "{}", '{"field": "Q", "bars": [{"dim": 0}]}', '{"field": "Q", "bars": 3}'],
)
def test_bad_barcode_json(text: str) -> None:
    with pytest.raises(ParseError):
        parse_barcode_json(text)


def test_barcode_text() -> None:
    text = format_barcode_text(barcode(square_filtration(), Q))
    assert text.splitlines() == [
        "field: Q",
        "dim 0: [0, 1)",
        "dim 0: [0, inf)",
        "dim 0: [1, 2)",
        "dim 1: [2, 5)",
        "dim 1: [3, 4)",
    ]


def test_barcode_text_with_reps() -> None:
    lines = format_barcode_text(barcode(square_filtration(), Q), reps=True).splitlines()
    assert lines[1] == "dim 0: [0, 1)  rep -[a] + [b]"
    assert lines[5] == "dim 1: [3, 4)  rep -[a b] - [b c] + [a c]"
