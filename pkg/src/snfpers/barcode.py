"""
Persistent homology barcodes from graded Smith Normal Decompositions.

For each dimension n the persistent homology module H_n^gr = ker ∂_n^gr /
im ∂_{n+1}^gr is a graded 𝔽[x]-module.  The graded SND of ∂_{n+1}^gr gives a
homogeneous basis ``β_j`` (columns of U, degree ``s_j``) with ``im ∂_{n+1}``
spanned by ``β_j·x^{t_j}``, so H_n^gr splits into

* torsion summands ``Σ^{s_j} 𝔽[x]/(x^{t_j})`` for every diagonal entry with
  ``t_j > 0`` (the bar ``[s_j, s_j + t_j)``), and
* free summands ``Σ^s 𝔽[x]``, one per essential birth s (the bar ``[s, ∞)``).

The essential births are found twice and must agree: as the multiset
difference between the kernel-basis degrees of ∂_n^gr and the generator
degrees ``s_j``, and greedily, by walking the kernel basis in degree order and
keeping every cycle that is not in the span of the generators and the cycles
already kept.  The greedy pass also supplies the essential representatives.

Representatives are scaled so that the simplex born last has coefficient 1.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field as dc_field
from typing import Any

from snfpers.errors import InvariantViolation, RingMismatchError
from snfpers.filtration import Filtration, GradedChainBasis
from snfpers.linalg import in_span, solve
from snfpers.matrices import graded_snd, kernel_columns
from snfpers.rings import Field, PolynomialRing, degh
from snfpers.simplicial import Simplex, boundary_matrix, chain_boundary

_logger = logging.getLogger(__name__)

Vector = tuple[Any, ...]


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Interval:
    """``[birth, death)``, or ``[birth, ∞)`` when *death* is ``None``."""

    birth: int
    death: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.birth, int) or self.birth < 0:
            raise ValueError(f"interval birth must be a natural number, got {self.birth!r}")
        if self.death is not None and (not isinstance(self.death, int) or self.death <= self.birth):
            raise ValueError(f"empty interval [{self.birth}, {self.death})")

    @property
    def is_finite(self) -> bool:
        return self.death is not None

    def contains(self, t: int) -> bool:
        return self.birth <= t and (self.death is None or t < self.death)

    def covers(self, t: int, s: int) -> bool:
        """True iff ``[t, s] ⊆ self``."""
        return self.contains(t) and self.contains(s)

    def sort_key(self) -> tuple[int, float]:
        return self.birth, math.inf if self.death is None else self.death

    def __str__(self) -> str:
        return f"[{self.birth}, {'inf' if self.death is None else self.death})"


@dataclass(frozen=True)
class Cycle:
    """Homogeneous cycle ``chain·x^degree``; ``chain`` lists ``(simplex, coefficient)``."""

    chain: tuple[tuple[Simplex, Any], ...]
    degree: int

    def as_dict(self) -> dict[Simplex, Any]:
        return dict(self.chain)


@dataclass(frozen=True)
class Bar:
    dim: int
    interval: Interval
    representative: Cycle | None = None


@dataclass(frozen=True)
class Torsion:
    """Summand ``Σ^shift 𝔽[x]/(x^exponent)``."""

    shift: int
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent <= 0:
            raise ValueError(f"torsion exponent must be positive, got {self.exponent}")

    def interval(self) -> Interval:
        return Interval(self.shift, self.shift + self.exponent)


@dataclass(frozen=True)
class Free:
    """Summand ``Σ^shift 𝔽[x]``."""

    shift: int

    def interval(self) -> Interval:
        return Interval(self.shift, None)


GradedIfdSummand = Torsion | Free


@dataclass(frozen=True)
class Barcode:
    """Bars of dimensions ``0 … max_dim`` over *field*, in deterministic order."""

    field: Field
    bars: tuple[Bar, ...] = ()
    max_dim: int = -1

    def in_dim(self, n: int) -> list[Bar]:
        return [b for b in self.bars if b.dim == n]

    def intervals(self, n: int) -> list[Interval]:
        return [b.interval for b in self.bars if b.dim == n]

    def counts(self) -> dict[int, int]:
        return {n: len(self.in_dim(n)) for n in range(self.max_dim + 1)}


# ---------------------------------------------------------------------------
# Essential births
# ---------------------------------------------------------------------------

def essential_births_by_difference(
    kernel_degrees: Iterable[int], generator_degrees: Iterable[int]
) -> list[int]:
    """Kernel-basis degrees minus generator degrees, as a sorted multiset."""
    kernel = Counter(kernel_degrees)
    generators = Counter(generator_degrees)
    if generators - kernel:
        raise InvariantViolation(
            f"generator degrees {sorted(generators.elements())} do not fit inside "
            f"kernel degrees {sorted(kernel.elements())}"
        )
    return sorted((kernel - generators).elements())


def essential_births_by_membership(
    field: Field,
    kernel: Sequence[tuple[int, Vector]],
    generators: Sequence[tuple[int, Vector]],
) -> list[tuple[int, Vector]]:
    """Greedy choice of essential cycles.

    *kernel* and *generators* are ``(degree, chain vector)`` pairs in one
    common basis.  A kernel vector of degree d is kept iff it is not in the
    span of the generators of degree ≤ d and the vectors kept before it.
    """
    accepted: list[tuple[int, Vector]] = []
    for d, z in sorted(kernel, key=lambda item: item[0]):
        span = [g for s, g in generators if s <= d] + [a for _, a in accepted]
        if not in_span(field, span, z):
            accepted.append((d, z))
    return accepted


# ---------------------------------------------------------------------------
# Per-dimension decomposition
# ---------------------------------------------------------------------------

def _require_field(field: Any) -> Field:
    if not isinstance(field, Field):
        label = getattr(field, "label", field)
        raise RingMismatchError(f"persistent homology needs a field coefficient ring, not {label}")
    return field


def _specialize(ring: PolynomialRing, coords: Sequence[Any]) -> Vector:
    return tuple(ring.evaluate(c, 1) for c in coords)


def _as_cycle(field: Field, basis: GradedChainBasis, vector: Vector, degree: int) -> Cycle:
    terms = [(s, c) for s, c in zip(basis.simplices, vector) if c]
    if terms:
        scale = field.inverse(terms[-1][1])
        terms = [(s, c * scale) for s, c in terms]
    return Cycle(tuple(terms), degree)


@dataclass
class _Decomposition:
    torsion: list[tuple[Torsion, Cycle]] = dc_field(default_factory=list)
    free: list[tuple[Free, Cycle]] = dc_field(default_factory=list)


def _decompose(filt: Filtration, n: int, field: Field) -> _Decomposition:
    ring = PolynomialRing(field)
    basis = filt.graded_basis(n)
    out = _Decomposition()
    if not len(basis):
        return out

    upper = graded_snd(filt.graded_boundary_matrix(n + 1, field))
    u = upper.snd.u
    generators: list[tuple[int, Vector]] = []
    for j, dj in enumerate(upper.snd.diagonal):
        s = upper.new_row_degrees[j]
        vector = _specialize(ring, u.column(j))
        generators.append((s, vector))
        t = degh(dj)
        if t > 0:
            out.torsion.append((Torsion(s, t), _as_cycle(field, basis, vector, s)))

    lower = graded_snd(filt.graded_boundary_matrix(n, field))
    kernel = [(kc.degree, _specialize(ring, kc.coords)) for kc in kernel_columns(lower)]

    by_difference = essential_births_by_difference(
        (d for d, _ in kernel), (s for s, _ in generators)
    )
    chosen = essential_births_by_membership(field, kernel, generators)
    by_membership = [d for d, _ in chosen]
    if by_difference != by_membership:
        raise InvariantViolation(
            f"dim {n}: essential births {by_difference} by degree count but "
            f"{by_membership} by span membership"
        )
    out.free = [(Free(d), _as_cycle(field, basis, z, d)) for d, z in chosen]
    _logger.debug(
        "dim %d over %s: %d torsion summands, essential births %s",
        n, field.label, len(out.torsion), by_difference,
    )
    return out


def graded_ifd(filt: Filtration, n: int, field: Field) -> list[GradedIfdSummand]:
    """Graded invariant factor decomposition of ``H_n^gr`` (unit factors dropped)."""
    dec = _decompose(filt, n, _require_field(field))
    return [t for t, _ in dec.torsion] + [f for f, _ in dec.free]


def _bar_key(filt: Filtration, field: Field):
    key = filt.complex.orientation.key

    def bar_key(bar: Bar) -> tuple:
        rep = bar.representative
        rep_key = () if rep is None else tuple((key(s), field.format(c)) for s, c in rep.chain)
        return (bar.dim, *bar.interval.sort_key(), rep_key)

    return bar_key


def persistent_homology(filt: Filtration, n: int, field: Field) -> list[Bar]:
    """Bars of ``H_n(K_•; field)`` with homogeneous cycle representatives."""
    field = _require_field(field)
    dec = _decompose(filt, n, field)
    bars = [Bar(n, t.interval(), rep) for t, rep in dec.torsion]
    bars += [Bar(n, f.interval(), rep) for f, rep in dec.free]
    return sorted(bars, key=_bar_key(filt, field))


def _interval_of(item: Bar | Interval) -> Interval:
    return item.interval if isinstance(item, Bar) else item


def betti_at(bars: Iterable[Bar | Interval], t: int) -> int:
    """Number of bars alive at *t*."""
    return sum(1 for b in bars if _interval_of(b).contains(t))


def p_persistent_betti(bars: Iterable[Bar | Interval], t: int, p: int) -> int:
    """Number of bars containing ``[t, t + p]``: the rank of ``H_n(K_t) → H_n(K_{t+p})``."""
    if t < 0 or p < 0:
        raise ValueError(f"t and p must be natural numbers, got t={t}, p={p}")
    return sum(1 for b in bars if _interval_of(b).covers(t, t + p))


def persistence_pairs(bars: Iterable[Bar | Interval]) -> tuple[list[tuple[int, int]], list[int]]:
    """Split bars into index persistence pairs ``(birth, death)`` and essential births."""
    pairs: list[tuple[int, int]] = []
    essential: list[int] = []
    for b in bars:
        iv = _interval_of(b)
        if iv.death is None:
            essential.append(iv.birth)
        else:
            pairs.append((iv.birth, iv.death))
    return sorted(pairs), sorted(essential)


def barcode(
    filt: Filtration, field: Field, max_dim: int | None = None, verify: bool = False
) -> Barcode:
    """Bars of every dimension ``0 … max_dim`` (default: the complex's dimension).

    With ``verify=True`` :func:`check_barcode` runs on the result.
    """
    field = _require_field(field)
    if max_dim is None:
        max_dim = filt.dim
    elif max_dim < 0:
        raise ValueError(f"max_dim must be a natural number, got {max_dim}")
    bars: list[Bar] = []
    for n in range(max_dim + 1):
        bars.extend(persistent_homology(filt, n, field))
    result = Barcode(field, tuple(sorted(bars, key=_bar_key(filt, field))), max_dim)
    _logger.info(
        "barcode over %s: %s",
        field.label, ", ".join(f"dim {n}: {c} bars" for n, c in result.counts().items()) or "empty",
    )
    if verify:
        check_barcode(filt, result)
    return result


# ---------------------------------------------------------------------------
# Cross-checks
# ---------------------------------------------------------------------------

def is_cycle_at(filt: Filtration, n: int, chain: Mapping[Simplex, Any], t: int, field: Field) -> bool:
    """True iff *chain* is an n-cycle of ``K_t``."""
    for s in chain:
        if s.dim != n or s not in filt.birth or filt.birth[s] > t:
            return False
    return not chain_boundary(chain, field)


def is_boundary_at(
    filt: Filtration, n: int, chain: Mapping[Simplex, Any], t: int, field: Field
) -> bool:
    """True iff *chain* bounds in ``K_t``."""
    if not is_cycle_at(filt, n, chain, t, field):
        return False
    vector = filt.chain_vector(chain, n, field, t)
    if not any(vector):
        return True
    d = boundary_matrix(filt.complex_at(t), n + 1, field)
    return solve(d, vector) is not None


def check_barcode(filt: Filtration, bc: Barcode) -> None:
    """Raise :class:`InvariantViolation` unless *bc* passes the structural checks.

    Checked: ∂_{n-1}^gr·∂_n^gr = 0; the Euler characteristic of every K_t
    matches the alternating bar count (when every dimension is present); each
    representative is a cycle at its birth, is not a boundary just before its
    death and is one at its death.
    """
    field = bc.field
    for n in range(1, filt.dim + 1):
        lower = filt.graded_boundary_matrix(n - 1, field).base
        upper = filt.graded_boundary_matrix(n, field).base
        if not (lower @ upper).is_zero():
            raise InvariantViolation(f"graded boundary matrices compose to nonzero in dim {n}")

    if bc.max_dim >= filt.dim:
        for t in range(filt.horizon + 1):
            k_t = filt.complex_at(t)
            chi = sum((-1) ** n * k_t.count(n) for n in range(filt.dim + 1))
            alt = sum((-1) ** n * betti_at(bc.in_dim(n), t) for n in range(bc.max_dim + 1))
            if chi != alt:
                raise InvariantViolation(
                    f"Euler characteristic {chi} of K_{t} but bars give {alt}"
                )

    for bar in bc.bars:
        rep = bar.representative
        if rep is None:
            continue
        chain = rep.as_dict()
        iv = bar.interval
        if not is_cycle_at(filt, bar.dim, chain, iv.birth, field):
            raise InvariantViolation(f"representative of dim {bar.dim} bar {iv} is not a cycle at birth")
        last_alive = filt.horizon if iv.death is None else iv.death - 1
        if is_boundary_at(filt, bar.dim, chain, last_alive, field):
            raise InvariantViolation(f"representative of dim {bar.dim} bar {iv} dies early")
        if iv.death is not None and not is_boundary_at(filt, bar.dim, chain, iv.death, field):
            raise InvariantViolation(f"representative of dim {bar.dim} bar {iv} survives its death")
