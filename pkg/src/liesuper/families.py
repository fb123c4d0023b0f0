"""Abelian and Heisenberg Lie superalgebras, and the structure of their ideals."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GradedIdeal,
    LieSuperalgebra,
    NotAnIdealError,
    as_ideal,
    center,
    central_product,
    centralizer,
    commutator,
    derived_subalgebra,
    span,
)
from .linalg import Q, SuperDim


def abelian(m: int, n: int) -> LieSuperalgebra:
    """``A(m|n)`` with basis ``a1..am`` (even) and ``b1..bn`` (odd)."""
    if m < 0 or n < 0:
        raise ValueError("dimensions must be non-negative")
    return LieSuperalgebra(
        [f"a{i}" for i in range(1, m + 1)],
        [f"b{j}" for j in range(1, n + 1)],
        name=f"A({m}|{n})",
    )


def heisenberg_even(m: int, n: int) -> LieSuperalgebra:
    """``H(m,n)``: ``[x_i, x_{m+i}] = z`` and ``[y_j, y_j] = z``, with ``z`` even."""
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("H(m,n) needs m, n >= 0 and m + n >= 1")
    even = [f"x{i}" for i in range(1, 2 * m + 1)] + ["z"]
    odd = [f"y{j}" for j in range(1, n + 1)]
    brackets = [(f"x{i}", f"x{m + i}", {"z": 1}) for i in range(1, m + 1)]
    brackets += [(y, y, {"z": 1}) for y in odd]
    return LieSuperalgebra(even, odd, brackets, name=f"H({m},{n})")


def heisenberg_odd(m: int) -> LieSuperalgebra:
    """``H_m``: ``[x_j, y_j] = z`` with ``x`` even and ``y``, ``z`` odd."""
    if m < 1:
        raise ValueError("H_m needs m >= 1")
    even = [f"x{j}" for j in range(1, m + 1)]
    odd = [f"y{j}" for j in range(1, m + 1)] + ["z"]
    brackets = [(f"x{j}", f"y{j}", {"z": 1}) for j in range(1, m + 1)]
    return LieSuperalgebra(even, odd, brackets, name=f"H_{m}")


@dataclass(frozen=True)
class HeisenbergKind:
    """``even_center`` with parameters ``(m, n)`` or ``odd_center`` with ``(m,)``."""

    kind: str
    m: int
    n: int = 0

    def __post_init__(self):
        if self.kind == "even_center":
            if self.m < 0 or self.n < 0 or self.m + self.n < 1:
                raise ValueError("even_center needs m + n >= 1")
        elif self.kind == "odd_center":
            if self.m < 1 or self.n:
                raise ValueError("odd_center needs m >= 1")
        else:
            raise ValueError(f"unknown Heisenberg kind {self.kind!r}")

    def build(self) -> LieSuperalgebra:
        if self.kind == "even_center":
            return heisenberg_even(self.m, self.n)
        return heisenberg_odd(self.m)

    def __str__(self) -> str:
        if self.kind == "even_center":
            return f"H({self.m},{self.n})"
        return f"H_{self.m}"


def recognize_heisenberg(L: LieSuperalgebra) -> HeisenbergKind | None:
    Z = center(L)
    if Z.dim.total != 1 or derived_subalgebra(L) != Z:
        return None
    p, q = L.dim
    if Z.dim.even:
        # dim (2m+1 | n)
        if p % 2 == 0:
            return None
        return HeisenbergKind("even_center", (p - 1) // 2, q)
    # dim (m | m+1)
    if q != p + 1:
        return None
    return HeisenbergKind("odd_center", p)


def _form(L: LieSuperalgebra, z: dict):
    """The bilinear form ``[u, v] = B(u, v) z`` on basis indices (in full)."""
    (k, c), = ((k, c) for k, c in z.items() if k == min(z))

    def B(u: dict, v: dict):
        w = L.bracket_vectors(u, v)
        return w.get(k, 0) / c

    return B


def central_decomposition(H: LieSuperalgebra) -> list[GradedIdeal]:
    """Split a Heisenberg superalgebra into Heisenberg ideals meeting in its center.

    Returns ``H(1,0)`` blocks plus at most one ``H(0,n)`` block for the even
    kind, and ``H_1`` blocks for the odd kind.  Works on any basis by building
    a symplectic (or dual) basis of ``H / Z(H)``.
    """
    kind = recognize_heisenberg(H)
    if kind is None:
        raise ValueError(f"{H!r} is not a Heisenberg superalgebra")
    Z = center(H)
    z = Z.vectors()[0]
    B = _form(H, z)
    n = len(H)
    comp = [{i: Q(1)} for i in range(n) if i not in Z.echelon.rows]
    evens = [v for v in comp if not H.parities[min(v)]]
    odds = [v for v in comp if H.parities[min(v)]]
    if kind.kind == "even_center":
        # symplectic Gram-Schmidt on the even part; the odd part is one block
        pairs = _dual_pairs(evens, evens, B)
        blocks = [GradedIdeal(H, [u, w, z]) for u, w in pairs]
        if odds:
            blocks.append(GradedIdeal(H, odds + [z]))
    else:
        pairs = _dual_pairs(evens, odds, B)
        blocks = [GradedIdeal(H, [u, w, z]) for u, w in pairs]
    return blocks


def _combine(r: dict, a, u: dict, b, w: dict) -> dict:
    out = dict(r)
    for k, c in u.items():
        out[k] = out.get(k, 0) + a * c
    for k, c in w.items():
        out[k] = out.get(k, 0) + b * c
    return {k: c for k, c in out.items() if c}


def _dual_pairs(left: list, right: list, B) -> list:
    """Pairs ``(u_i, w_i)`` with ``B(u_i, w_j) = delta_ij`` and the rest orthogonal.

    ``left is right`` means one space with an alternating form; otherwise a
    pairing between two complementary spaces.
    """
    same = left is right
    us = list(left)
    ws = us if same else list(right)
    out = []
    while us:
        u = us.pop(0)
        j = next((j for j, w in enumerate(ws) if B(u, w)), None)
        if j is None:
            raise AssertionError("degenerate form on the complement of the center")
        w = ws.pop(j)
        w = {k: c / B(u, w) for k, c in w.items()}
        out.append((u, w))
        us[:] = [_combine(r, -B(r, w), u, B(r, u), w) for r in us] if same else [
            _combine(r, -B(r, w), u, 0, {}) for r in us
        ]
        if not same:
            ws[:] = [_combine(r, 0, {}, -B(u, r), w) for r in ws]
    return out


@dataclass(frozen=True)
class IdealStructure:
    """Tag for the isomorphism type of an ideal of a Heisenberg superalgebra.

    ``kind`` is ``abelian``, ``heisenberg`` or ``heisenberg_plus_abelian``.
    ``heis`` is the Heisenberg factor (None for abelian ideals) and
    ``abelian`` the superdimension of the abelian factor.
    """

    kind: str
    heis: HeisenbergKind | None
    abelian: SuperDim

    def __str__(self) -> str:
        if self.kind == "abelian":
            return f"A{self.abelian}"
        if self.kind == "heisenberg":
            return str(self.heis)
        return f"{self.heis}+A{self.abelian}"


def classify_ideal(H: LieSuperalgebra, I) -> IdealStructure:
    """Decide the type of a graded ideal from ``dim I``, ``dim I^2`` and ``dim Z(I)``."""
    if recognize_heisenberg(H) is None:
        raise ValueError(f"{H!r} is not a Heisenberg superalgebra")
    I = as_ideal(H, I)
    I2 = commutator(H, I, I)
    dim = I.dim
    if I2.is_zero():
        return IdealStructure("abelian", None, dim)
    ZI = centralizer(H, I, within=I)
    # I/Z(I) carries a nondegenerate form; its superdimension fixes the factor
    quo = dim - ZI.dim
    a = ZI.dim - I2.dim
    if I2.dim.even:
        heis = HeisenbergKind("even_center", quo.even // 2, quo.odd)
    else:
        heis = HeisenbergKind("odd_center", quo.even)
    if a.total == 0:
        return IdealStructure("heisenberg", heis, a)
    return IdealStructure("heisenberg_plus_abelian", heis, a)


def coordinate_ideals(H: LieSuperalgebra, max_dim: int | None = None) -> list[GradedIdeal]:
    """Every ideal spanned by a subset of the standard basis.

    Exponential in ``dim H``; intended for small test algebras.
    """
    n = len(H)
    out = []
    for mask in range(1 << n):
        names = [H.names[i] for i in range(n) if mask >> i & 1]
        if max_dim is not None and len(names) > max_dim:
            continue
        try:
            out.append(GradedIdeal(H, [H[x] for x in names]))
        except NotAnIdealError:
            continue
    return out


def derived_dim_one_signature(L: LieSuperalgebra) -> tuple[SuperDim, SuperDim, SuperDim]:
    """``(dim L, dim L^2, dim Z(L))`` for an algebra with one-dimensional derived part."""
    L2 = derived_subalgebra(L)
    if L2.dim.total != 1:
        raise ValueError("derived subalgebra is not one-dimensional")
    return L.dim, L2.dim, center(L).dim


__all__ = [
    "abelian",
    "heisenberg_even",
    "heisenberg_odd",
    "HeisenbergKind",
    "recognize_heisenberg",
    "central_decomposition",
    "IdealStructure",
    "classify_ideal",
    "coordinate_ideals",
    "derived_dim_one_signature",
    "span",
    "central_product",
]
