"""Closed-form multiplier dimensions and capability criteria for the standard families.

Each function is plain arithmetic on family parameters.  Pair formulas for
Heisenberg superalgebras return a :class:`FormulaResult` that carries the
raw (possibly non-integral) value and a caveat flag, so that callers can
compare them with brute force without the comparison hiding anomalies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import SuperDim


@dataclass(frozen=True)
class FormulaResult:
    """A formula evaluation.

    ``value`` is a SuperDim, an int (total dimension) or a bool, or None
    when the raw evaluation is not a valid dimension.  ``raw`` keeps the
    exact evaluation, ``alternatives`` lists the admissible totals when the
    formula leaves a choice open.
    """

    value: object
    source: str
    caveat: str | None = None
    raw: tuple | None = None
    alternatives: tuple = field(default_factory=tuple)

    @property
    def total(self) -> int | None:
        if isinstance(self.value, SuperDim):
            return self.value.total
        if isinstance(self.value, bool):
            return None
        return self.value

    def as_dict(self) -> dict:
        v = self.value
        if isinstance(v, SuperDim):
            v = v.as_dict()
        out = {"value": v, "source": self.source, "caveat": self.caveat}
        if self.raw is not None:
            out["raw"] = [str(x) for x in self.raw]
        if self.alternatives:
            out["alternatives"] = list(self.alternatives)
        return out


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _as_dim(even: Fraction, odd: Fraction) -> SuperDim | None:
    if even.denominator != 1 or odd.denominator != 1 or even < 0 or odd < 0:
        return None
    return SuperDim(int(even), int(odd))


# -- multipliers of whole algebras ---------------------------------------------


def dim_mult_abelian(m: int, n: int) -> SuperDim:
    _check(m >= 0 and n >= 0, "m and n must be non-negative")
    return SuperDim((m * m + n * n + n - m) // 2, m * n)


def dim_mult_heis_even(m: int, n: int) -> SuperDim:
    _check(m >= 0 and n >= 0 and m + n >= 1, "H(m,n) needs m + n >= 1")
    if m == 0 and n == 1:
        return SuperDim(0, 0)
    if m == 1 and n == 0:
        return SuperDim(2, 0)
    return SuperDim(2 * m * m - m + n * (n + 1) // 2 - 1, 2 * m * n)


def dim_mult_heis_odd(m: int) -> SuperDim:
    _check(m >= 1, "H_m needs m >= 1")
    if m == 1:
        return SuperDim(1, 1)
    return SuperDim(m * m, m * m - 1)


# -- multipliers of pairs ---------------------------------------------------------


def dim_mult_pair_abelian(m: int, n: int, k: int, h: int) -> SuperDim:
    """``(k(2m-k-1)/2 + h(2n-h+1)/2 | mn - (m-k)(n-h))`` for a ``(k|h)`` ideal of ``A(m|n)``."""
    _check(m >= 0 and n >= 0, "m and n must be non-negative")
    _check(0 <= k <= m and 0 <= h <= n, f"no ({k}|{h}) ideal in A({m}|{n})")
    return SuperDim((k * (2 * m - k - 1) + h * (2 * n - h + 1)) // 2, m * n - (m - k) * (n - h))


def dim_mult_pair_heis_even(m: int, n: int, k: int, h: int) -> FormulaResult:
    """Pair multiplier of ``H(m,n)`` with a ``(k|h)`` ideal.

    One-dimensional ideals give a total of ``2m + n``; larger ones use the
    general expression, which is flagged whenever it is not a valid
    superdimension.
    """
    _check(m >= 0 and n >= 0 and m + n >= 1, "H(m,n) needs m + n >= 1")
    _check(0 <= k <= 2 * m + 1 and 0 <= h <= n and k + h >= 1, f"no ({k}|{h}) ideal in H({m},{n})")
    if k + h == 1:
        return FormulaResult(2 * m + n, "pair multiplier of H(m,n), one-dimensional ideal")
    even = Fraction((k - 1) * (4 * m - k) + h * (2 * n - h + 1) - 1, 2)
    odd = Fraction(2 * m * n - (2 * m - k + 1) * (n - h))
    value = _as_dim(even, odd)
    caveat = None
    if value is None:
        caveat = "non-integral" if even.denominator != 1 or odd.denominator != 1 else "negative"
    return FormulaResult(value, "pair multiplier of H(m,n), ideal of dimension >= 2", caveat, (even, odd))


def dim_mult_pair_heis_odd(m: int, k: int) -> FormulaResult:
    """Pair multiplier of ``H_m`` with a ``(k|k+1)`` ideal."""
    _check(m >= 1, "H_m needs m >= 1")
    _check(0 <= k <= m, f"no ({k}|{k + 1}) ideal in H_{m}")
    if k == 0:
        return FormulaResult(2 * m, "pair multiplier of H_m, ideal (0|1)")
    even = Fraction(k * ((2 * m - k - 1) + (2 * m - k + 1)), 2)
    odd = Fraction(m * m - (m - k) ** 2 - 1)
    value = _as_dim(even, odd)
    if m == 1 and k == 1:
        return FormulaResult(
            None,
            "pair multiplier of H_1, ideal (1|2)",
            "ambiguous: stated as 1 or 2",
            (even, odd),
            (1, 2),
        )
    caveat = None if value is not None else "invalid dimension"
    return FormulaResult(value, "pair multiplier of H_m, ideal (k|k+1)", caveat, (even, odd))


# -- capability --------------------------------------------------------------------


def capable_abelian(m: int, n: int) -> bool:
    _check(m >= 0 and n >= 0, "m and n must be non-negative")
    return (m == 0 and n == 1) or m + n >= 2


def capable_abelian_pair(m: int, n: int, k: int, h: int) -> bool:
    _check(0 <= k <= m and 0 <= h <= n and k + h >= 1, f"no nonzero ({k}|{h}) ideal in A({m}|{n})")
    return capable_abelian(m, n)


def _total(dimI) -> int:
    return dimI.total if isinstance(dimI, SuperDim) else int(dimI)


def capable_heis_even_pair(m: int, n: int, dimI) -> bool:
    _check(m >= 0 and n >= 0 and m + n >= 1, "H(m,n) needs m + n >= 1")
    d = _total(dimI)
    _check(1 <= d <= 2 * m + 1 + n, "ideal dimension out of range")
    return (m == 1 and n == 0) or d == 1


def capable_heis_odd_pair(m: int, dimI) -> bool:
    _check(m >= 1, "H_m needs m >= 1")
    d = _total(dimI)
    _check(1 <= d <= 2 * m + 1, "ideal dimension out of range")
    return m == 1 or d == 1


def capable_heis(m: int, n: int) -> bool:
    _check(m >= 0 and n >= 0 and m + n >= 1, "H(m,n) needs m + n >= 1")
    return m == 1 and n == 0


def capable_heis_odd(m: int) -> bool:
    _check(m >= 1, "H_m needs m >= 1")
    return m == 1


def capable_derived_dim_one(k: int, l: int, r: int, s: int, center: SuperDim) -> bool:
    """Capability of a nilpotent ``(k|l)`` algebra with ``dim L^2 = (r|s)``, ``r + s = 1``.

    The center's superdimension fixes the Heisenberg factor: ``H(m,n) ⊕ A``
    has center ``(k-2m | l-n)`` and ``H_m ⊕ A`` has center ``(k-m | l-m)``.
    """
    _check(r + s == 1 and r >= 0 and s >= 0, "derived subalgebra must be one-dimensional")
    ce, co = center
    if r == 1:
        twice_m, n = k - ce, l - co
        _check(twice_m >= 0 and twice_m % 2 == 0 and n >= 0 and twice_m // 2 + n >= 1, "inconsistent signature")
        return twice_m // 2 == 1 and n == 0
    m = k - ce
    _check(m >= 1 and l - co == m, "inconsistent signature")
    return m == 1


__all__ = [
    "FormulaResult",
    "dim_mult_abelian",
    "dim_mult_heis_even",
    "dim_mult_heis_odd",
    "dim_mult_pair_abelian",
    "dim_mult_pair_heis_even",
    "dim_mult_pair_heis_odd",
    "capable_abelian",
    "capable_abelian_pair",
    "capable_heis_even_pair",
    "capable_heis_odd_pair",
    "capable_heis",
    "capable_heis_odd",
    "capable_derived_dim_one",
]
