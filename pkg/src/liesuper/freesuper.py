"""Free Lie superalgebras truncated at a degree bound, and their dimension counts.

The truncated free algebra is realised inside the free associative algebra
on the same letters, where the bracket is the supercommutator
``ab - (-1)^{|a||b|} ba``.  In characteristic zero this embedding is
faithful, so the degree ``d`` component is spanned by ``[x, b]`` with ``x``
a letter and ``b`` running over a basis of degree ``d - 1``.  Exact echelon
reduction picks a basis among these products and records the ``ad x``
matrices as a by-product.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, gcd, prod
from typing import Sequence

from .core import LieSuperalgebra, NotNilpotentError
from .linalg import Echelon, Q, SuperDim, TrackedEchelon, axpy

# -- counting formulas -----------------------------------------------------


def mobius(k: int) -> int:
    if k < 1:
        raise ValueError("mobius is defined for positive integers")
    result, p = 1, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    return -result if k > 1 else result


def _divisors(n: int) -> list[int]:
    return [e for e in range(1, n + 1) if n % e == 0]


def witt(alpha: Sequence[int]) -> int:
    """Dimension of the multidegree ``alpha`` part of the free Lie algebra."""
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha) or not any(alpha):
        raise ValueError("multidegree must be non-negative and nonzero")
    total = sum(alpha)
    g = 0
    for a in alpha:
        g = gcd(g, a)
    acc = 0
    for e in _divisors(g):
        mu = mobius(e)
        if mu:
            acc += mu * factorial(total // e) // prod(factorial(a // e) for a in alpha)
    assert acc % total == 0
    return acc // total


def super_witt(alpha: Sequence[int], parities: Sequence[int]) -> int:
    """Dimension of the multidegree ``alpha`` part of the free Lie superalgebra.

    ``W(alpha) + beta * W(alpha / 2)`` where ``beta = 1`` exactly when every
    entry is even and half of ``alpha`` has odd parity.
    """
    alpha = tuple(alpha)
    if len(alpha) != len(parities):
        raise ValueError("alpha and parities differ in length")
    value = witt(alpha)
    if all(a % 2 == 0 for a in alpha):
        half = tuple(a // 2 for a in alpha)
        if sum(h for h, p in zip(half, parities) if p) % 2 == 1:
            value += witt(half)
    return value


def dim_multidegree(alpha: Sequence[int], parities: Sequence[int]) -> int:
    """Petrogradsky's signed necklace formula for ``dim L_alpha``."""
    alpha = tuple(alpha)
    total = sum(alpha)
    odd = sum(a for a, p in zip(alpha, parities) if p)
    g = 0
    for a in alpha:
        g = gcd(g, a)
    acc = 0
    for e in _divisors(g):
        mu = mobius(e)
        if mu:
            term = factorial(total // e) // prod(factorial(a // e) for a in alpha)
            acc += mu * term * (-1) ** (odd // e)
    acc *= (-1) ** odd
    assert acc % total == 0
    return acc // total


@dataclass(frozen=True)
class DegreeDims:
    dim_r: int
    dim_r_plus: int
    dim_r_minus: int
    sdim_r: int


def dims_petrogradsky(m: int, n: int, r: int) -> DegreeDims:
    """Dimensions of the degree ``r`` component of the free Lie superalgebra on ``(m|n)`` letters."""
    if r < 1:
        raise ValueError("degree must be positive")
    total = plus2 = minus2 = sdim = 0
    for a in _divisors(r):
        mu = mobius(a)
        if not mu:
            continue
        t = (m - (-1) ** a * n) ** (r // a)
        s = (m - n) ** (r // a)
        total += mu * t
        plus2 += mu * (t + s)
        minus2 += mu * (t - s)
        sdim += mu * s
    assert total % r == 0 and plus2 % (2 * r) == 0 and minus2 % (2 * r) == 0 and sdim % r == 0
    return DegreeDims(total // r, plus2 // (2 * r), minus2 // (2 * r), sdim // r)


def multidegrees(k: int, d: int) -> list[tuple[int, ...]]:
    """All length ``k`` compositions of ``d`` (zeros allowed), in decreasing lex order."""
    if k == 0:
        return [] if d else [()]
    out = []
    for first in range(d, -1, -1):
        for rest in multidegrees(k - 1, d - first):
            out.append((first,) + rest)
    return out


# -- alphabets and monomials ---------------------------------------------------


@dataclass(frozen=True)
class GradedAlphabet:
    even: tuple[str, ...] = ()
    odd: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "even", tuple(self.even))
        object.__setattr__(self, "odd", tuple(self.odd))
        if len(set(self.names)) != len(self.names):
            raise ValueError("letter names must be distinct")

    @classmethod
    def standard(cls, m: int, n: int) -> "GradedAlphabet":
        if m + n == 1:
            return cls(("x",) * m, ("y",) * n)
        return cls(tuple(f"x{i}" for i in range(1, m + 1)), tuple(f"y{j}" for j in range(1, n + 1)))

    @property
    def names(self) -> tuple[str, ...]:
        return self.even + self.odd

    @property
    def parities(self) -> tuple[int, ...]:
        return (0,) * len(self.even) + (1,) * len(self.odd)

    def __len__(self) -> int:
        return len(self.even) + len(self.odd)


class Monomial:
    """A bracket tree over letter indices.

    ``tree`` is an int for a letter or a pair ``(left, right)`` of Monomials.
    """

    __slots__ = ("tree", "word", "multideg", "parity", "degree", "_hash")

    def __init__(self, tree, alphabet: GradedAlphabet):
        self.tree = tree
        k = len(alphabet)
        if isinstance(tree, int):
            self.word = (tree,)
            md = [0] * k
            md[tree] = 1
            self.multideg = tuple(md)
            self.parity = alphabet.parities[tree]
        else:
            u, v = tree
            self.word = u.word + v.word
            self.multideg = tuple(a + b for a, b in zip(u.multideg, v.multideg))
            self.parity = u.parity ^ v.parity
        self.degree = len(self.word)
        self._hash = hash(self._shape())

    def _shape(self):
        if isinstance(self.tree, int):
            return self.tree
        return (self.tree[0]._shape(), self.tree[1]._shape())

    @classmethod
    def bracket(cls, u: "Monomial", v: "Monomial", alphabet: GradedAlphabet) -> "Monomial":
        return cls((u, v), alphabet)

    @property
    def is_letter(self) -> bool:
        return isinstance(self.tree, int)

    @property
    def left(self) -> "Monomial":
        return self.tree[0]

    @property
    def right(self) -> "Monomial":
        return self.tree[1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._shape() == other._shape()

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        """Multidegree (decreasing), then word, then the tree shape."""
        return (tuple(-a for a in self.multideg), self.word, _shape_key(self))

    def to_string(self, names: Sequence[str]) -> str:
        if self.is_letter:
            return names[self.tree]
        return f"[{self.left.to_string(names)},{self.right.to_string(names)}]"

    def __repr__(self) -> str:
        return f"Monomial({self._shape()!r})"


def _shape_key(u: Monomial):
    if u.is_letter:
        return (0, u.tree)
    return (1, _shape_key(u.left), _shape_key(u.right))


def generate_monomials(alphabet: GradedAlphabet, d: int) -> list[Monomial]:
    """Every bracketing of every word of length ``d``."""
    if d < 1:
        raise ValueError("degree must be positive")
    return list(_monomials(alphabet, d))


@lru_cache(maxsize=64)
def _monomials(alphabet: GradedAlphabet, d: int) -> tuple[Monomial, ...]:
    if d == 1:
        return tuple(Monomial(i, alphabet) for i in range(len(alphabet)))
    out = []
    for p in range(1, d):
        for u in _monomials(alphabet, p):
            for v in _monomials(alphabet, d - p):
                out.append(Monomial((u, v), alphabet))
    return tuple(out)


def _word_gt(a: tuple, b: tuple) -> bool:
    """Lexicographic order in which a proper prefix is the larger word."""
    for x, y in zip(a, b):
        if x != y:
            return x > y
    return len(a) < len(b)


def is_regular(u: Monomial) -> bool:
    if u.is_letter:
        return True
    u1, u2 = u.left, u.right
    if not (is_regular(u1) and is_regular(u2) and _word_gt(u1.word, u2.word)):
        return False
    if not u1.is_letter and _word_gt(u1.right.word, u2.word):
        return False
    return True


def is_s_regular(u: Monomial) -> bool:
    if is_regular(u):
        return True
    return (
        not u.is_letter
        and u.left == u.right
        and u.left.parity == 1
        and is_regular(u.left)
    )


def s_regular_counts(alphabet: GradedAlphabet, d: int) -> dict[tuple, int]:
    counts: dict = {}
    for u in _monomials(alphabet, d):
        if is_s_regular(u):
            counts[u.multideg] = counts.get(u.multideg, 0) + 1
    return counts


# -- the truncated free algebra ------------------------------------------------


class DegreeOverflowError(ValueError):
    pass


class CountMismatchError(AssertionError):
    pass


def _supercommutator(a: dict, pa: int, b: dict, pb: int) -> dict:
    out: dict = {}
    sign = 1 if pa and pb else -1
    for u, x in a.items():
        for v, y in b.items():
            axpy(out, x * y, {u + v: 1})
            axpy(out, sign * x * y, {v + u: 1})
    return out


class TruncatedFreeAlgebra:
    """The free Lie superalgebra on ``alphabet`` modulo brackets of degree above ``D``.

    Attributes
    ----------
    monomials : list of Monomial, one per basis element, ordered by degree
    degrees, parities : per basis element
    ad : ``ad[a][j]`` is ``[x_a, b_j]`` in coordinates (empty past degree D)
    """

    def __init__(self, alphabet: GradedAlphabet, D: int):
        if D < 1:
            raise ValueError("truncation degree must be positive")
        self.alphabet = alphabet
        self.D = D
        k = len(alphabet)
        apar = alphabet.parities
        self.monomials: list[Monomial] = []
        self._assoc: list[dict] = []
        self.by_degree: list[list[int]] = [[]]
        # construction[j] = (a, i) when b_j = [x_a, b_i]; None for letters
        self.construction: list = []
        self._echelons: dict[tuple, TrackedEchelon] = {}
        for a in range(k):
            self._push(Monomial(a, alphabet), {(a,): Q(1)}, None, None)
        self.by_degree.append(list(range(k)))
        for d in range(2, D + 1):
            candidates = []
            for a in range(k):
                for j in self.by_degree[d - 1]:
                    mono = Monomial((self.monomials[a], self.monomials[j]), alphabet)
                    vec = _supercommutator({(a,): Q(1)}, apar[a], self._assoc[j], mono.parity ^ apar[a])
                    candidates.append((mono.sort_key(), a, j, mono, vec))
            candidates.sort(key=lambda c: c[0])
            new = []
            for _, a, j, mono, vec in candidates:
                idx = len(self.monomials)
                if self._push(mono, vec, idx, (a, j)):
                    new.append(idx)
            self.by_degree.append(new)
            self._check_counts(d)
        self._check_counts(1)
        # ad matrices
        n = len(self.monomials)
        self.ad = [[{} for _ in range(n)] for _ in range(k)]
        for a in range(k):
            for j in range(n):
                if self.degrees[j] < D:
                    vec = _supercommutator({(a,): Q(1)}, apar[a], self._assoc[j], self.parities[j])
                    self.ad[a][j] = self.coordinates(vec, self.multidegs[j], a)
        self.names = tuple(m.to_string(alphabet.names) for m in self.monomials)
        self._index = {nm: i for i, nm in enumerate(self.names)}
        self._bracket_cache: dict = {}

    def _push(self, mono: Monomial, vec: dict, idx, how) -> bool:
        if not vec:
            return False
        key = mono.multideg
        ech = self._echelons.setdefault(key, TrackedEchelon())
        if idx is None:
            idx = len(self.monomials)
        if not ech.add(vec, idx):
            return False
        self.monomials.append(mono)
        self._assoc.append(vec)
        self.construction.append(how)
        return True

    def coordinates(self, vec: dict, md: tuple | None = None, letter: int | None = None) -> dict:
        """Coordinates of an associative Lie element of a single multidegree."""
        if not vec:
            return {}
        if md is not None and letter is not None:
            md = tuple(c + (i == letter) for i, c in enumerate(md))
        else:
            w = next(iter(vec))
            md = tuple(w.count(i) for i in range(len(self.alphabet)))
        ech = self._echelons.get(md)
        if ech is None:
            raise AssertionError("element outside the free Lie superalgebra")
        return dict(ech.coordinates(vec))

    def _check_counts(self, d: int) -> None:
        counts: dict = {}
        for i in self.by_degree[d]:
            md = self.monomials[i].multideg
            counts[md] = counts.get(md, 0) + 1
        par = self.alphabet.parities
        for md in multidegrees(len(self.alphabet), d):
            want = super_witt(md, par)
            if counts.get(md, 0) != want:
                raise CountMismatchError(
                    f"multidegree {md}: basis has {counts.get(md, 0)} elements, expected {want}"
                )

    # -- host interface for Element / Subspace --------------------------------
    @property
    def degrees(self) -> list[int]:
        return [m.degree for m in self.monomials]

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(m.parity for m in self.monomials)

    @property
    def multidegs(self) -> list[tuple]:
        return [m.multideg for m in self.monomials]

    def __len__(self) -> int:
        return len(self.monomials)

    @property
    def dim(self) -> SuperDim:
        odd = sum(self.parities)
        return SuperDim(len(self) - odd, odd)

    def index(self, name) -> int:
        if isinstance(name, int):
            return name
        return self._index[name]

    def degree_dims(self) -> list[int]:
        return [len(self.by_degree[d]) for d in range(1, self.D + 1)]

    def multidegree_dims(self, d: int) -> dict[tuple, int]:
        counts: dict = {}
        for i in self.by_degree[d]:
            md = self.monomials[i].multideg
            counts[md] = counts.get(md, 0) + 1
        return counts

    # -- brackets --------------------------------------------------------------
    def bracket(self, i: int, j: int) -> dict:
        """``[b_i, b_j]`` in coordinates; zero past the truncation degree."""
        key = (i, j)
        if key not in self._bracket_cache:
            mi, mj = self.monomials[i], self.monomials[j]
            if mi.degree + mj.degree > self.D:
                val = {}
            else:
                vec = _supercommutator(self._assoc[i], mi.parity, self._assoc[j], mj.parity)
                md = tuple(a + b for a, b in zip(mi.multideg, mj.multideg))
                val = self.coordinates(vec, md) if vec else {}
            self._bracket_cache[key] = val
        return self._bracket_cache[key]

    def bracket_vectors(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                w = self.bracket(i, j)
                if w:
                    axpy(out, a * b, w)
        return out

    def ad_letter(self, a: int, v: dict) -> dict:
        out: dict = {}
        row = self.ad[a]
        for j, c in v.items():
            w = row[j]
            if w:
                axpy(out, c, w)
        return out

    def bracket_string(self, i: int) -> str:
        return self.names[i]

    def to_algebra(self) -> LieSuperalgebra:
        """The truncated algebra as a structure-constant model (even basis first)."""
        order = [i for i in range(len(self)) if not self.parities[i]]
        order += [i for i in range(len(self)) if self.parities[i]]
        even = [self.names[i] for i in order if not self.parities[i]]
        odd = [self.names[i] for i in order if self.parities[i]]
        brackets = []
        for a, i in enumerate(order):
            for j in order[a:]:
                if i == j and not self.parities[i]:
                    continue
                val = self.bracket(i, j)
                if val:
                    brackets.append((self.names[i], self.names[j], {self.names[k]: c for k, c in val.items()}))
        return LieSuperalgebra(even, odd, brackets, name=f"F{self.alphabet_dim}/deg>{self.D}")

    @property
    def alphabet_dim(self) -> SuperDim:
        return SuperDim(len(self.alphabet.even), len(self.alphabet.odd))

    # -- expressions -------------------------------------------------------------
    def normal_form(self, expr) -> dict:
        """Coordinates of a bracket expression.

        ``expr`` is a letter name, a nested pair ``(a, b)``, or a string such
        as ``"[x,[y,y]]"``.
        """
        tree = parse_bracket(expr) if isinstance(expr, str) else expr
        if _tree_degree(tree) > self.D:
            raise DegreeOverflowError(f"expression has degree above {self.D}")
        return self._evaluate(tree)

    def _evaluate(self, tree) -> dict:
        if isinstance(tree, str):
            try:
                a = self.alphabet.names.index(tree)
            except ValueError:
                raise ValueError(f"unknown letter {tree!r}") from None
            return {a: Q(1)}
        left, right = tree
        return self.bracket_vectors(self._evaluate(left), self._evaluate(right))

    def __repr__(self) -> str:
        return f"<TruncatedFreeAlgebra on {self.alphabet_dim} letters, degree <= {self.D}, dim {self.dim}>"


def _tree_degree(tree) -> int:
    if isinstance(tree, str):
        return 1
    return _tree_degree(tree[0]) + _tree_degree(tree[1])


_TOKEN = re.compile(r"\s*(\[|\]|,|[A-Za-z_][A-Za-z0-9_']*)")


def parse_bracket(text: str):
    """Parse ``"[x,[y,z]]"`` into nested pairs of letter names."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse bracket expression at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()

    def parse(i):
        if i >= len(tokens):
            raise ValueError("unexpected end of bracket expression")
        t = tokens[i]
        if t == "[":
            left, i = parse(i + 1)
            if i >= len(tokens) or tokens[i] != ",":
                raise ValueError("expected ',' in bracket expression")
            right, i = parse(i + 1)
            if i >= len(tokens) or tokens[i] != "]":
                raise ValueError("expected ']' in bracket expression")
            return (left, right), i + 1
        if t in ",]":
            raise ValueError(f"unexpected {t!r} in bracket expression")
        return t, i + 1

    tree, end = parse(0)
    if end != len(tokens):
        raise ValueError("trailing tokens in bracket expression")
    return tree


_CACHE: dict = {}


def build_truncated(alphabet: GradedAlphabet, D: int) -> TruncatedFreeAlgebra:
    key = (alphabet, D)
    if key not in _CACHE:
        _CACHE[key] = TruncatedFreeAlgebra(alphabet, D)
    return _CACHE[key]


# -- relation-quotient oracle -----------------------------------------------------


def relation_quotient_dims(alphabet: GradedAlphabet, D: int) -> list[int]:
    """Degree dimensions of the free nonassociative superalgebra modulo the
    ideal generated by graded skew-symmetry and graded Jacobi.

    Independent of the associative embedding; cost grows like
    ``Catalan(D-1) * k^D`` so keep ``D`` small.
    """
    par = alphabet.parities
    relations: list[Echelon] = [Echelon()]
    mons: list[tuple[Monomial, ...]] = [()]
    dims = []

    def key(u: Monomial):
        return u._shape()

    for d in range(1, D + 1):
        md = _monomials(alphabet, d)
        mons.append(md)
        ech = Echelon()
        col = {key(u): i for i, u in enumerate(md)}
        pair = lambda u, v: col[(key(u), key(v))]
        for p in range(1, d):
            for u in mons[p]:
                for v in mons[d - p]:
                    s = -1 if u.parity and v.parity else 1
                    vec = {}
                    axpy(vec, Q(1), {pair(u, v): 1})
                    axpy(vec, Q(s), {pair(v, u): 1})
                    ech.add(vec)
        for p in range(1, d - 1):
            for q in range(1, d - p):
                r = d - p - q
                for u in mons[p]:
                    for v in mons[q]:
                        for w in mons[r]:
                            # [u,[v,w]] - [[u,v],w] - (-1)^{|u||v|} [v,[u,w]]
                            s = -1 if u.parity and v.parity else 1
                            uv = Monomial((u, v), alphabet)
                            vw = Monomial((v, w), alphabet)
                            uw = Monomial((u, w), alphabet)
                            vec: dict = {}
                            axpy(vec, Q(1), {pair(u, vw): 1})
                            axpy(vec, Q(-1), {pair(uv, w): 1})
                            axpy(vec, Q(-s), {pair(v, uw): 1})
                            ech.add(vec)
        # ideal generated by lower-degree relations
        for p in range(1, d):
            lower = relations[p]
            if not lower:
                continue
            idx_p = {i: u for i, u in enumerate(mons[p])}
            for row in lower.basis():
                for v in mons[d - p]:
                    left = {pair(idx_p[i], v): c for i, c in row.items()}
                    right = {pair(v, idx_p[i]): c for i, c in row.items()}
                    ech.add(left)
                    ech.add(right)
        relations.append(ech)
        dims.append(len(md) - len(ech))
    return dims


__all__ = [
    "mobius",
    "witt",
    "super_witt",
    "dim_multidegree",
    "dims_petrogradsky",
    "DegreeDims",
    "multidegrees",
    "GradedAlphabet",
    "Monomial",
    "generate_monomials",
    "is_regular",
    "is_s_regular",
    "s_regular_counts",
    "TruncatedFreeAlgebra",
    "build_truncated",
    "DegreeOverflowError",
    "CountMismatchError",
    "parse_bracket",
    "relation_quotient_dims",
    "NotNilpotentError",
]
