"""
Text and JSON codecs for matrices, complexes, filtrations and barcodes.

Matrix text::

    3 4 z
    1 2 0 1
    0 3 0 3
    0 0 1 1

A graded matrix over ``qx`` or ``z<p>x`` adds ``rowdeg d_1 … d_m`` and
``coldeg d_1 … d_n`` lines.  Complexes list one simplex per line as vertex
tokens; filtrations prefix each simplex with its birth time.  Both accept an
``@order v_1 v_2 …`` header fixing the orientation.  ``#`` starts a comment
everywhere.

Barcode JSON::

    {"field": "Q", "max_dim": 1,
     "bars": [{"dim": 0, "birth": 0, "death": null, "rep": [["1", "a"]]}]}
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Mapping
from typing import Any

from snfpers.barcode import Bar, Barcode, Cycle, Interval
from snfpers.errors import ParseError, RingMismatchError
from snfpers.filtration import Filtration
from snfpers.matrices import GradedMatrix, Matrix
from snfpers.rings import EuclideanRing, Field, get_field, get_ring
from snfpers.simplicial import (
    Orientation,
    Simplex,
    SimplicialComplex,
    standard_basis,
    validate_complex,
)

_ORDER = "@order"


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    """Non-empty lines as ``(line number, tokens)`` with comments removed."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _natural(token: str, lineno: int, what: str) -> int:
    if not token.isdigit():
        raise ParseError(f"line {lineno}: {what} must be a natural number, got {token!r}")
    return int(token)


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

def parse_matrix(text: str, ring: EuclideanRing | None = None) -> Matrix | GradedMatrix:
    """Parse the matrix text format; returns a :class:`GradedMatrix` when degrees are given.

    When *ring* is given the header must name the same ring.
    """
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty matrix input")
    lineno, header = lines[0]
    if len(header) != 3:
        raise ParseError(f"line {lineno}: expected header 'm n ring', got {' '.join(header)!r}")
    m = _natural(header[0], lineno, "row count")
    n = _natural(header[1], lineno, "column count")
    try:
        declared = get_ring(header[2])
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from None
    if ring is not None and declared != ring:
        raise RingMismatchError(
            f"line {lineno}: matrix is over {declared.label} but {ring.label} was requested"
        )
    ring = declared

    rows: list[list[Any]] = []
    degrees: dict[str, list[int]] = {}
    for lineno, tokens in lines[1:]:
        if tokens[0] in ("rowdeg", "coldeg"):
            if tokens[0] in degrees:
                raise ParseError(f"line {lineno}: duplicate {tokens[0]} line")
            degrees[tokens[0]] = [_natural(t, lineno, "degree") for t in tokens[1:]]
            continue
        if len(tokens) != n:
            raise ParseError(f"line {lineno}: expected {n} entries, got {len(tokens)}")
        try:
            rows.append([ring.parse(t) for t in tokens])
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if n == 0 and not rows:
        rows = [[] for _ in range(m)]
    if len(rows) != m:
        raise ParseError(f"expected {m} matrix rows, got {len(rows)}")

    matrix = Matrix.from_rows(ring, rows, ncols=n)
    if not degrees:
        return matrix
    if set(degrees) != {"rowdeg", "coldeg"}:
        raise ParseError("graded matrices need both 'rowdeg' and 'coldeg' lines")
    return GradedMatrix(matrix, tuple(degrees["rowdeg"]), tuple(degrees["coldeg"]))


def format_matrix(m: Matrix | GradedMatrix) -> str:
    base = m.base if isinstance(m, GradedMatrix) else m
    out = [f"{base.nrows} {base.ncols} {base.ring.name}"]
    out += [" ".join(row) for row in base.format_rows() if row]
    if isinstance(m, GradedMatrix):
        out.append(" ".join(["rowdeg", *map(str, m.row_degrees)]))
        out.append(" ".join(["coldeg", *map(str, m.col_degrees)]))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Complexes and filtrations
# ---------------------------------------------------------------------------

def _split_order(text: str) -> tuple[Orientation | None, list[tuple[int, list[str]]]]:
    orientation = None
    body = []
    for lineno, tokens in _lines(text):
        if tokens[0] == _ORDER:
            if orientation is not None:
                raise ParseError(f"line {lineno}: second {_ORDER} header")
            if body:
                raise ParseError(f"line {lineno}: {_ORDER} must come before any simplex")
            try:
                orientation = Orientation(tuple(tokens[1:]))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
            continue
        body.append((lineno, tokens))
    return orientation, body


def parse_complex(text: str, auto_close: bool = False) -> SimplicialComplex:
    orientation, body = _split_order(text)
    return validate_complex([tokens for _, tokens in body], orientation, auto_close=auto_close)


def format_complex(k: SimplicialComplex) -> str:
    out = [" ".join([_ORDER, *k.vertices])]
    for n in range(k.dim + 1):
        out += [str(s) for s in standard_basis(k, n)]
    return "\n".join(out) + "\n"


def parse_filtration(text: str, strict: bool = True) -> Filtration:
    orientation, body = _split_order(text)
    events = []
    for lineno, tokens in body:
        if len(tokens) < 2:
            raise ParseError(f"line {lineno}: expected 't v_0 … v_k', got {' '.join(tokens)!r}")
        events.append((_natural(tokens[0], lineno, "birth time"), tokens[1:]))
    return Filtration.from_events(events, orientation=orientation, strict=strict)


def format_filtration(filt: Filtration) -> str:
    out = [" ".join([_ORDER, *filt.complex.vertices])]
    for n in range(filt.dim + 1):
        out += [f"{t} {s}" for s, t in filt.graded_basis(n).entries]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Barcodes
# ---------------------------------------------------------------------------

def format_chain(chain: Mapping[Simplex, Any] | Cycle, field: Field) -> str:
    """Human-readable chain such as ``[a b] + [b c] - [a d]``."""
    items = chain.chain if isinstance(chain, Cycle) else tuple(chain.items())
    out = ""
    for s, c in items:
        coef = field.format(c)
        negative = coef.startswith("-")
        coef = coef.lstrip("-")
        term = f"[{s}]" if coef == "1" else f"{coef}*[{s}]"
        if not out:
            out = f"-{term}" if negative else term
        else:
            out += f" - {term}" if negative else f" + {term}"
    return out or "0"


def barcode_to_dict(bc: Barcode) -> dict[str, Any]:
    bars = []
    for bar in bc.bars:
        entry: dict[str, Any] = {
            "dim": bar.dim,
            "birth": bar.interval.birth,
            "death": bar.interval.death,
        }
        if bar.representative is not None:
            entry["rep"] = [[bc.field.format(c), str(s)] for s, c in bar.representative.chain]
        bars.append(entry)
    return {"field": bc.field.label, "max_dim": bc.max_dim, "bars": bars}


def dump_barcode_json(bc: Barcode) -> str:
    return json.dumps(barcode_to_dict(bc), indent=2)


def parse_barcode_json(text: str) -> Barcode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid barcode JSON: {exc}") from None
    try:
        field = get_field(str(data["field"]))
        bars = []
        for entry in data["bars"]:
            interval = Interval(int(entry["birth"]), entry["death"])
            rep = None
            if entry.get("rep") is not None:
                chain = tuple(
                    (Simplex(tuple(simplex.split())), field.parse(coef))
                    for coef, simplex in entry["rep"]
                )
                rep = Cycle(chain, interval.birth)
            bars.append(Bar(int(entry["dim"]), interval, rep))
        max_dim = int(data.get("max_dim", max((b.dim for b in bars), default=-1)))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed barcode JSON: bad or missing field {exc}") from None
    return Barcode(field, tuple(bars), max_dim)


def format_barcode_text(bc: Barcode, reps: bool = False) -> str:
    out = [f"field: {bc.field.label}"]
    for bar in bc.bars:
        line = f"dim {bar.dim}: {bar.interval}"
        if reps and bar.representative is not None:
            line += f"  rep {format_chain(bar.representative, bc.field)}"
        out.append(line)
    return "\n".join(out) + "\n"
