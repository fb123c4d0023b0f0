"""Exact sparse linear algebra over the rationals.

Vectors are plain ``dict`` objects mapping a column index to a nonzero
rational.  Subspaces are held in reduced row echelon form (leftmost pivot,
pivot entry 1), which makes the representation of a subspace unique.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

Vector = dict

__all__ = [
    "Q",
    "SuperDim",
    "Echelon",
    "TrackedEchelon",
    "scalar",
    "format_scalar",
    "axpy",
    "scaled",
    "split_homogeneous",
    "kernel",
    "kernel_of_images",
    "intersection",
]

_SCALAR_RE = re.compile(r"^\s*[+-]?\d+\s*(/\s*\d+\s*)?$")


def scalar(value) -> Q:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact rational."""
    if isinstance(value, str):
        if not _SCALAR_RE.match(value):
            raise ValueError(f"not a rational literal: {value!r}")
        num, _, den = value.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return Q(int(num), int(den) if den else 1)
    if isinstance(value, float):
        raise TypeError("floating point scalars are not accepted")
    if isinstance(value, Fraction):
        return Q(value.numerator, value.denominator)
    return Q(value)


def format_scalar(c) -> str:
    c = scalar(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class SuperDim:
    """A superdimension ``(even | odd)``."""

    even: int = 0
    odd: int = 0

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"negative superdimension ({self.even}|{self.odd})")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperDim") -> "SuperDim":
        even, odd = self.even - other.even, self.odd - other.odd
        if even < 0 or odd < 0:
            raise ValueError(f"cannot subtract {other} from {self}")
        return SuperDim(even, odd)

    def tensor(self, other: "SuperDim") -> "SuperDim":
        a, b, c, d = self.even, self.odd, other.even, other.odd
        return SuperDim(a * c + b * d, a * d + b * c)

    def __iter__(self):
        yield self.even
        yield self.odd

    def __str__(self) -> str:
        return f"({self.even}|{self.odd})"

    def as_dict(self) -> dict:
        return {"even": self.even, "odd": self.odd}


def axpy(v: Vector, c, w: Mapping) -> None:
    """In place ``v += c * w``, dropping entries that cancel."""
    if not c:
        return
    for k, x in w.items():
        y = v.get(k)
        if y is None:
            v[k] = c * x
        else:
            y += c * x
            if y:
                v[k] = y
            else:
                del v[k]


def scaled(v: Mapping, c) -> Vector:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def split_homogeneous(v: Mapping, parity: Sequence[int]) -> list[Vector]:
    """Split ``v`` into its even and odd components (empty ones dropped)."""
    parts: list[Vector] = [{}, {}]
    for k, x in v.items():
        parts[parity[k]][k] = x
    return [p for p in parts if p]


class Echelon:
    """A subspace stored as sparse rows in reduced row echelon form.

    ``rows`` maps each pivot column to its row; the pivot entry is 1 and every
    other row is zero in that column.
    """

    __slots__ = ("rows",)

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self.rows: dict[int, Vector] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    def __bool__(self) -> bool:
        return bool(self.rows)

    def copy(self) -> "Echelon":
        e = Echelon()
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        return e

    def reduce(self, v: Mapping) -> Vector:
        """Return the normal form of ``v`` modulo the subspace."""
        out = dict(v)
        rows = self.rows
        for p in [k for k in v if k in rows]:
            c = out.get(p)
            if c:
                axpy(out, -c, rows[p])
        return out

    def add(self, v: Mapping) -> bool:
        """Adjoin ``v``; return False when it was already in the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        c = r[p]
        if c != 1:
            inv = 1 / c
            r = {k: x * inv for k, x in r.items()}
        for row in self.rows.values():
            x = row.get(p)
            if x:
                axpy(row, -x, r)
        self.rows[p] = r
        return True

    def extend(self, vectors: Iterable[Mapping]) -> "Echelon":
        for v in vectors:
            self.add(v)
        return self

    def __contains__(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[Vector]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]

    def contains_space(self, other: "Echelon") -> bool:
        return all(not self.reduce(r) for r in other.rows.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Echelon):
            return NotImplemented
        return self.rows == other.rows

    def superdim(self, parity: Sequence[int] | Callable[[int], int]) -> SuperDim:
        """Superdimension, assuming every row is homogeneous."""
        get = parity if callable(parity) else parity.__getitem__
        odd = sum(get(p) for p in self.rows)
        return SuperDim(len(self.rows) - odd, odd)

    def __repr__(self) -> str:
        return f"Echelon(rank={len(self.rows)})"


class TrackedEchelon:
    """Echelon form that remembers how each row was assembled.

    Every vector added carries a label; rows store the combination of labels
    they equal, so that any vector in the span can be written in terms of the
    labelled vectors.
    """

    __slots__ = ("rows", "combos")

    def __init__(self):
        self.rows: dict[int, Vector] = {}
        self.combos: dict[int, Vector] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping) -> tuple[Vector, Vector]:
        """Return ``(residual, combo)`` with ``v = residual + sum(combo)``."""
        out = dict(v)
        combo: Vector = {}
        rows = self.rows
        for p in [k for k in v if k in rows]:
            c = out.get(p)
            if c:
                axpy(out, -c, rows[p])
                axpy(combo, c, self.combos[p])
        return out, combo

    def coordinates(self, v: Mapping) -> Vector:
        residual, combo = self.reduce(v)
        if residual:
            raise ValueError("vector is not in the span")
        return combo

    def add(self, v: Mapping, label) -> bool:
        r, combo = self.reduce(v)
        if not r:
            return False
        combo = scaled(combo, -1)
        combo[label] = combo.get(label, 0) + 1
        p = min(r)
        c = r[p]
        if c != 1:
            inv = 1 / c
            r = {k: x * inv for k, x in r.items()}
            combo = {k: x * inv for k, x in combo.items()}
        for q, row in self.rows.items():
            x = row.get(p)
            if x:
                axpy(row, -x, r)
                axpy(self.combos[q], -x, combo)
        self.rows[p] = r
        self.combos[p] = combo
        return True


def kernel(rows: Iterable[Mapping], ncols: int) -> list[Vector]:
    """Basis of the null space of the matrix with the given sparse rows.

    One basis vector per free column, in increasing column order.
    """
    ech = Echelon(rows)
    out = []
    for f in range(ncols):
        if f in ech.rows:
            continue
        v = {f: Q(1)}
        for p, row in ech.rows.items():
            x = row.get(f)
            if x:
                v[p] = -x
        out.append(v)
    return out


def kernel_of_images(images: Sequence[Mapping], columns: Sequence[int] | None = None) -> list[Vector]:
    """Null space of the map sending domain vector ``e_i`` to ``images[i]``.

    If ``columns`` is given, only the listed domain coordinates are free to
    vary; the kernel vectors are then expressed in the original indices.
    """
    cols = list(range(len(images))) if columns is None else list(columns)
    local: dict = {}
    for j, i in enumerate(cols):
        for t, c in images[i].items():
            local.setdefault(t, {})[j] = c
    return [{cols[j]: c for j, c in v.items()} for v in kernel(local.values(), len(cols))]


def intersection(a: Iterable[Mapping], b: Iterable[Mapping], ncols: int) -> Echelon:
    """Intersection of two spans (Zassenhaus), returned in echelon form."""
    ech = Echelon()
    for v in a:
        w = dict(v)
        for k, x in v.items():
            w[k + ncols] = x
        ech.add(w)
    for v in b:
        ech.add(v)
    return Echelon(
        {k - ncols: x for k, x in row.items()}
        for p, row in ech.rows.items()
        if p >= ncols
    )
