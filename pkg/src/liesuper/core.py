"""Finite-dimensional Lie superalgebras given by structure constants.

Basis vectors are ordered with every even vector ahead of every odd one.
Structure constants are stored once per unordered pair: ``(i, j)`` with
``i < j``, plus ``(i, i)`` for odd ``i``; the opposite orientation is obtained
from graded skew-symmetry.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .linalg import (
    Echelon,
    Q,
    SuperDim,
    axpy,
    format_scalar,
    intersection,
    kernel_of_images,
    scalar,
    split_homogeneous,
)

EVEN, ODD = 0, 1


class NotAnIdealError(ValueError):
    pass


class NotNilpotentError(ValueError):
    pass


class AlgebraFormatError(ValueError):
    """Raised for malformed algebra descriptions; ``field`` names the culprit."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


def _sign(p: int, q: int) -> int:
    return -1 if p and q else 1


class Element:
    """A linear combination of the basis vectors of ``host``."""

    __slots__ = ("host", "coeffs")

    def __init__(self, host, coeffs: Mapping | None = None):
        self.host = host
        self.coeffs = {}
        for k, c in (coeffs or {}).items():
            if isinstance(k, str):
                k = host.index(k)
            c = scalar(c)
            if c:
                self.coeffs[k] = self.coeffs.get(k, 0) + c
                if not self.coeffs[k]:
                    del self.coeffs[k]

    @classmethod
    def _raw(cls, host, coeffs: dict) -> "Element":
        e = cls.__new__(cls)
        e.host = host
        e.coeffs = coeffs
        return e

    def _check(self, other: "Element") -> None:
        if other.host is not self.host:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.coeffs)
        axpy(out, 1, other.coeffs)
        return Element._raw(self.host, out)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.coeffs)
        axpy(out, -1, other.coeffs)
        return Element._raw(self.host, out)

    def __neg__(self) -> "Element":
        return Element._raw(self.host, {k: -c for k, c in self.coeffs.items()})

    def __mul__(self, c) -> "Element":
        c = scalar(c)
        if not c:
            return Element._raw(self.host, {})
        return Element._raw(self.host, {k: c * x for k, x in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, Element):
            return NotImplemented
        return self.host is other.host and self.coeffs == other.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def parity(self) -> int | None:
        """0 or 1 for homogeneous elements (0 for zero), None otherwise."""
        ps = {self.host.parities[k] for k in self.coeffs}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else EVEN

    def components(self) -> list["Element"]:
        return [Element._raw(self.host, v) for v in split_homogeneous(self.coeffs, self.host.parities)]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            name = self.host.names[k]
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            elif c < 0:
                parts.append(f"- {format_scalar(-c)}*{name}")
            else:
                parts.append(f"+ {format_scalar(c)}*{name}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[1:]


class LieSuperalgebra:
    """Structure-constant model of a finite-dimensional Lie superalgebra.

    ``brackets`` is an iterable of ``(x, y, value)`` triples where ``x`` and
    ``y`` are basis names and ``value`` maps basis names to rationals.  Pairs
    not mentioned bracket to zero.
    """

    def __init__(
        self,
        even: Sequence[str],
        odd: Sequence[str] = (),
        brackets: Iterable = (),
        name: str = "",
        summands: tuple = (),
    ):
        self.name = name
        self.names = tuple(even) + tuple(odd)
        self.parities = (EVEN,) * len(even) + (ODD,) * len(odd)
        self.n_even = len(even)
        self._index = {}
        for i, nm in enumerate(self.names):
            if not isinstance(nm, str) or not nm:
                raise AlgebraFormatError(f"invalid basis name {nm!r}", "basis")
            if nm in self._index:
                raise AlgebraFormatError(f"duplicate basis name {nm!r}", "basis")
            self._index[nm] = i
        self.summands = summands
        self._table: dict[tuple[int, int], dict] = {}
        self._defects: list[str] = []
        for x, y, value in brackets:
            self._store(x, y, value)
        self._full = self._expand()

    # -- construction ---------------------------------------------------
    def _store(self, x, y, value) -> None:
        i, j = self.index(x), self.index(y)
        vec = {}
        for k, c in dict(value).items():
            c = scalar(c)
            if c:
                vec[self.index(k)] = c
        if i == j and not self.parities[i]:
            if vec:
                self._defects.append(f"graded skew-symmetry violated at ({self.names[i]},{self.names[i]})")
            return
        if i > j:
            s = -_sign(self.parities[i], self.parities[j])
            i, j = j, i
            vec = {k: s * c for k, c in vec.items()}
        if (i, j) in self._table and self._table[(i, j)] != vec:
            a, b = self.names[i], self.names[j]
            self._defects.append(f"graded skew-symmetry violated at ({a},{b})")
            return
        self._table[(i, j)] = vec

    def _expand(self) -> dict:
        full = {}
        for (i, j), vec in self._table.items():
            if not vec:
                continue
            full[(i, j)] = vec
            if i != j:
                s = -_sign(self.parities[i], self.parities[j])
                full[(j, i)] = {k: s * c for k, c in vec.items()}
        return full

    # -- basic access -----------------------------------------------------
    @property
    def dim(self) -> SuperDim:
        return SuperDim(self.n_even, len(self.names) - self.n_even)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, x) -> int:
        if isinstance(x, int):
            if not 0 <= x < len(self.names):
                raise AlgebraFormatError(f"basis index {x} out of range", "basis")
            return x
        try:
            return self._index[x]
        except KeyError:
            raise AlgebraFormatError(f"unknown basis name {x!r}", "basis") from None

    def basis(self) -> list[Element]:
        return [Element._raw(self, {i: Q(1)}) for i in range(len(self.names))]

    def element(self, coeffs: Mapping | str | None = None) -> Element:
        if isinstance(coeffs, str):
            return parse_element(self, coeffs)
        return Element(self, coeffs)

    def __getitem__(self, name: str) -> Element:
        return Element._raw(self, {self.index(name): Q(1)})

    def structure_constants(self) -> dict:
        """Canonical stored brackets as ``{(i, j): {k: c}}``."""
        return {k: dict(v) for k, v in sorted(self._table.items()) if v}

    def basis_bracket(self, i: int, j: int) -> dict:
        return self._full.get((i, j), {})

    def bracket_vectors(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        full = self._full
        for i, a in u.items():
            for j, b in v.items():
                w = full.get((i, j))
                if w:
                    axpy(out, a * b, w)
        return out

    def bracket(self, x, y) -> Element:
        x = self[x] if isinstance(x, str) else x
        y = self[y] if isinstance(y, str) else y
        if x.host is not self or y.host is not self:
            raise ValueError("bracket arguments must belong to this algebra")
        return Element._raw(self, self.bracket_vectors(x.coeffs, y.coeffs))

    def is_abelian(self) -> bool:
        return not self._full

    def __repr__(self) -> str:
        label = self.name or "LieSuperalgebra"
        return f"<{label} dim {self.dim}>"


def bracket(L: LieSuperalgebra, x: Element, y: Element) -> Element:
    return L.bracket(x, y)


def check_axioms(L: LieSuperalgebra) -> list[str]:
    """List every violated axiom; an empty list means ``L`` is a Lie superalgebra."""
    report = list(L._defects)
    par = L.parities
    for (i, j), vec in sorted(L._table.items()):
        want = par[i] ^ par[j]
        if any(par[k] != want for k in vec):
            report.append(f"grading violated at ({L.names[i]},{L.names[j]})")
    n = len(L)
    full = L._full
    for i, j, k in combinations_with_replacement(range(n), 3):
        pi, pj, pk = par[i], par[j], par[k]
        acc: dict = {}
        for a, b, c, s in (
            (i, j, k, _sign(pi, pk)),
            (j, k, i, _sign(pj, pi)),
            (k, i, j, _sign(pk, pj)),
        ):
            inner = full.get((b, c))
            if inner:
                axpy(acc, s, L.bracket_vectors({a: 1}, inner))
        if acc:
            report.append(f"graded Jacobi identity violated at ({L.names[i]},{L.names[j]},{L.names[k]})")
    return report


class Subspace:
    """A subspace of an algebra, kept in canonical echelon form.

    For graded subspaces the spanning vectors are split into homogeneous
    components before reduction, so every echelon row is homogeneous.
    """

    def __init__(self, host, vectors: Iterable = (), graded: bool = True):
        self.host = host
        self.graded = graded
        ech = Echelon()
        for v in vectors:
            v = v.coeffs if isinstance(v, Element) else v
            if graded:
                for part in split_homogeneous(v, host.parities):
                    ech.add(part)
            else:
                ech.add(v)
        self.echelon = ech

    @classmethod
    def _from_echelon(cls, host, ech: Echelon, graded: bool = True):
        s = Subspace.__new__(cls)
        s.host, s.graded, s.echelon = host, graded, ech
        return s

    @property
    def dim(self) -> SuperDim:
        if not self.graded:
            raise ValueError("superdimension of an ungraded subspace")
        return self.echelon.superdim(self.host.parities)

    def __len__(self) -> int:
        return len(self.echelon)

    def vectors(self) -> list[dict]:
        return self.echelon.basis()

    def basis(self) -> list[Element]:
        return [Element._raw(self.host, v) for v in self.echelon.basis()]

    def __contains__(self, v) -> bool:
        v = v.coeffs if isinstance(v, Element) else v
        return not self.echelon.reduce(v)

    def reduce(self, v) -> dict:
        v = v.coeffs if isinstance(v, Element) else v
        return self.echelon.reduce(v)

    def __le__(self, other: "Subspace") -> bool:
        return other.echelon.contains_space(self.echelon)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.host is other.host and self.echelon == other.echelon

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.host, self.vectors() + other.vectors(), self.graded and other.graded)

    def intersect(self, other: "Subspace") -> "Subspace":
        ech = intersection(self.vectors(), other.vectors(), len(self.host.names))
        if self.graded and other.graded:
            return Subspace(self.host, ech.basis())
        return Subspace._from_echelon(self.host, ech, False)

    def is_zero(self) -> bool:
        return not self.echelon

    def __repr__(self) -> str:
        names = ", ".join(repr(e) for e in self.basis())
        return f"<{type(self).__name__} {self.dim if self.graded else len(self)}: {names}>"


class GradedIdeal(Subspace):
    """A graded subspace closed under bracketing with the whole algebra."""

    closed = True

    def __init__(self, host, vectors: Iterable = ()):
        super().__init__(host, vectors, graded=True)
        self._verify()

    @classmethod
    def _from_echelon(cls, host, ech, graded=True):
        s = super()._from_echelon(host, ech, True)
        s._verify()
        return s

    def _verify(self) -> None:
        L = self.host
        for v in self.echelon.rows.values():
            for i in range(len(L.names)):
                w = L.bracket_vectors({i: 1}, v)
                if w and self.echelon.reduce(w):
                    raise NotAnIdealError(f"[{L.names[i]}, {Element._raw(L, v)!r}] leaves the subspace")


def as_ideal(L: LieSuperalgebra, spec) -> GradedIdeal:
    """Accept a GradedIdeal, Subspace, a string ``"x1, 2*x2 + z"`` or an iterable
    of elements, coordinate dicts, names or expressions."""
    if isinstance(spec, str):
        return GradedIdeal(L, [e.coeffs for e in parse_elements(L, spec)])
    if isinstance(spec, GradedIdeal):
        if spec.host is not L:
            raise ValueError("ideal belongs to a different algebra")
        return spec
    if isinstance(spec, Subspace):
        return GradedIdeal(L, spec.vectors())
    vecs = []
    for item in spec:
        if isinstance(item, str):
            item = L[item] if item in L._index else parse_element(L, item)
        vecs.append(item)
    return GradedIdeal(L, vecs)


def span(L: LieSuperalgebra, items: Iterable) -> Subspace:
    vecs = [L[x] if isinstance(x, str) else x for x in items]
    return Subspace(L, vecs)


def commutator(L: LieSuperalgebra, A: Subspace, B: Subspace) -> Subspace:
    """The span of ``[a, b]`` over bases of ``A`` and ``B``."""
    return Subspace(L, [L.bracket_vectors(a, b) for a in A.vectors() for b in B.vectors()])


def centralizer(L: LieSuperalgebra, X: Subspace, within: Subspace | None = None) -> Subspace:
    """Elements of ``within`` (default ``L``) that bracket to zero with ``X``."""
    n = len(L)
    xs = X.vectors()
    dom = within.vectors() if within is not None else [{i: Q(1)} for i in range(n)]
    images = []
    for d in dom:
        stacked: dict = {}
        for t, x in enumerate(xs):
            for k, c in L.bracket_vectors(d, x).items():
                stacked[t * n + k] = c
        images.append(stacked)
    par = [0 if not d else L.parities[min(d)] for d in dom]
    out = []
    for p in (EVEN, ODD):
        cols = [i for i in range(len(dom)) if par[i] == p]
        for kv in kernel_of_images(images, cols):
            v: dict = {}
            for i, c in kv.items():
                axpy(v, c, dom[i])
            out.append(v)
    return Subspace(L, out)


def center(L: LieSuperalgebra) -> GradedIdeal:
    everything = Subspace(L, [{i: Q(1)} for i in range(len(L))])
    return GradedIdeal._from_echelon(L, centralizer(L, everything).echelon)


def whole(L: LieSuperalgebra) -> GradedIdeal:
    return GradedIdeal._from_echelon(L, Echelon({i: Q(1)} for i in range(len(L))))


def zero_ideal(L: LieSuperalgebra) -> GradedIdeal:
    return GradedIdeal._from_echelon(L, Echelon())


def derived_subalgebra(L: LieSuperalgebra) -> GradedIdeal:
    return GradedIdeal._from_echelon(L, Subspace(L, L._full.values()).echelon)


def lower_central_series(L: LieSuperalgebra) -> list[GradedIdeal]:
    """``[L^1, L^2, ...]`` ending at the first zero term or where it stabilises."""
    terms = [whole(L)]
    while not terms[-1].is_zero():
        nxt = Subspace(L, [L.bracket_vectors({i: 1}, v) for i in range(len(L)) for v in terms[-1].vectors()])
        if nxt.echelon == terms[-1].echelon:
            break
        terms.append(GradedIdeal._from_echelon(L, nxt.echelon))
    return terms


def nilpotency_class(L: LieSuperalgebra) -> int:
    """Smallest ``c`` with ``L^{c+1} = 0``; raises for non-nilpotent algebras."""
    terms = lower_central_series(L)
    if not terms[-1].is_zero():
        raise NotNilpotentError(f"{L!r} is not nilpotent")
    return len(terms) - 1


def is_nilpotent(L: LieSuperalgebra) -> bool:
    return lower_central_series(L)[-1].is_zero()


def ideal_closure(L: LieSuperalgebra, elements: Iterable) -> GradedIdeal:
    """Smallest graded ideal containing ``elements``."""
    ech = Echelon()
    todo = []
    for e in elements:
        e = L[e] if isinstance(e, str) else e
        v = e.coeffs if isinstance(e, Element) else e
        for part in split_homogeneous(v, L.parities):
            if ech.add(part):
                todo.append(part)
    while todo:
        v = todo.pop()
        for i in range(len(L)):
            w = L.bracket_vectors({i: 1}, v)
            if w and ech.add(w):
                todo.append(w)
    return GradedIdeal._from_echelon(L, Echelon(ech.basis()))


class Projection:
    """The quotient map ``L -> L/I`` on coordinates."""

    def __init__(self, source: LieSuperalgebra, target: LieSuperalgebra, ideal: GradedIdeal, keep: list[int]):
        self.source, self.target, self.ideal = source, target, ideal
        self.keep = keep
        self._pos = {k: t for t, k in enumerate(keep)}

    def vector(self, v: Mapping) -> dict:
        r = self.ideal.echelon.reduce(v)
        return {self._pos[k]: c for k, c in r.items()}

    def __call__(self, x) -> Element:
        if isinstance(x, Element):
            if x.host is not self.source:
                raise ValueError("element is not in the source algebra")
            x = x.coeffs
        return Element._raw(self.target, self.vector(x))

    def image(self, S: Subspace) -> Subspace:
        return Subspace(self.target, [self.vector(v) for v in S.vectors()])


def quotient(L: LieSuperalgebra, I) -> tuple[LieSuperalgebra, Projection]:
    """``L/I`` on the non-pivot basis vectors of ``I``, with the projection."""
    I = as_ideal(L, I)
    keep = [k for k in range(len(L)) if k not in I.echelon.rows]
    even = [L.names[k] for k in keep if not L.parities[k]]
    odd = [L.names[k] for k in keep if L.parities[k]]
    pos = {k: t for t, k in enumerate(keep)}
    brackets = []
    for a, i in enumerate(keep):
        for j in keep[a:]:
            if i == j and not L.parities[i]:
                continue
            r = I.echelon.reduce(L.basis_bracket(i, j))
            if r:
                brackets.append((L.names[i], L.names[j], {L.names[k]: c for k, c in r.items()}))
    label = f"{L.name}/I" if L.name else ""
    Qa = LieSuperalgebra(even, odd, brackets, name=label)
    assert [Qa.index(L.names[k]) for k in keep] == [pos[k] for k in keep]
    return Qa, Projection(L, Qa, I, keep)


def _fresh(name: str, taken: set) -> str:
    while name in taken:
        name += "'"
    return name


def direct_sum(L1: LieSuperalgebra, L2: LieSuperalgebra, name: str | None = None) -> LieSuperalgebra:
    """``L1 ⊕ L2``; colliding names in ``L2`` get primes appended.

    ``summands`` on the result records the basis names coming from each side.
    """
    taken = set(L1.names)
    rename = {}
    for nm in L2.names:
        rename[nm] = _fresh(nm, taken)
        taken.add(rename[nm])
    even = list(L1.names[: L1.n_even]) + [rename[n] for n in L2.names[: L2.n_even]]
    odd = list(L1.names[L1.n_even :]) + [rename[n] for n in L2.names[L2.n_even :]]
    brackets = []
    for (i, j), vec in L1.structure_constants().items():
        brackets.append((L1.names[i], L1.names[j], {L1.names[k]: c for k, c in vec.items()}))
    for (i, j), vec in L2.structure_constants().items():
        brackets.append(
            (rename[L2.names[i]], rename[L2.names[j]], {rename[L2.names[k]]: c for k, c in vec.items()})
        )
    if name is None:
        name = f"{L1.name}+{L2.name}" if L1.name and L2.name else ""
    summands = (tuple(L1.names), tuple(rename[n] for n in L2.names))
    return LieSuperalgebra(even, odd, brackets, name=name, summands=summands)


@dataclass(frozen=True)
class CentralProductReport:
    spans: bool
    commute: bool
    central_intersection: bool

    @property
    def ok(self) -> bool:
        return self.spans and self.commute and self.central_intersection


def central_product(L: LieSuperalgebra, I, J) -> CentralProductReport:
    """Check ``L = I + J``, ``[I, J] = 0`` and ``I ∩ J ⊆ Z(L)``."""
    I, J = as_ideal(L, I), as_ideal(L, J)
    spans = len(I + J) == len(L)
    commute = commutator(L, I, J).is_zero()
    central = I.intersect(J) <= center(L)
    return CentralProductReport(spans, commute, central)


# -- text formats ----------------------------------------------------------

_TERM_RE = re.compile(
    r"\s*([+-])?\s*(?:(\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?([A-Za-z_][A-Za-z0-9_']*)?\s*"
)


def parse_element(L: LieSuperalgebra, text: str) -> Element:
    """Parse ``"x1 + 2*x2 - 1/2*z"`` into an element of ``L``."""
    s = text.strip()
    if not s:
        raise AlgebraFormatError("empty element expression", "ideal")
    pos = 0
    coeffs: dict = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise AlgebraFormatError(f"cannot parse {s[pos:]!r}", "ideal")
        sign, num, name = m.groups()
        if sign is None and not first:
            raise AlgebraFormatError(f"missing operator before {s[pos:]!r}", "ideal")
        if name is None:
            raise AlgebraFormatError(f"coefficient without basis name in {text!r}", "ideal")
        c = scalar(num.replace(" ", "")) if num else Q(1)
        if sign == "-":
            c = -c
        axpy(coeffs, c, {L.index(name): Q(1)})
        pos = m.end()
        first = False
    return Element._raw(L, coeffs)


def parse_elements(L: LieSuperalgebra, text: str) -> list[Element]:
    return [parse_element(L, part) for part in text.split(",") if part.strip()]


def to_dict(L: LieSuperalgebra) -> dict:
    brackets = []
    for (i, j), vec in L.structure_constants().items():
        brackets.append(
            {
                "x": L.names[i],
                "y": L.names[j],
                "value": [[L.names[k], format_scalar(vec[k])] for k in sorted(vec)],
            }
        )
    return {
        "name": L.name,
        "even_basis": list(L.names[: L.n_even]),
        "odd_basis": list(L.names[L.n_even :]),
        "brackets": brackets,
    }


def to_json(L: LieSuperalgebra) -> str:
    return json.dumps(to_dict(L), indent=2, ensure_ascii=False) + "\n"


def from_dict(data) -> LieSuperalgebra:
    if not isinstance(data, dict):
        raise AlgebraFormatError("top level must be an object")
    for key in ("even_basis", "odd_basis"):
        if key not in data:
            raise AlgebraFormatError("missing", key)
        if not isinstance(data[key], list) or not all(isinstance(x, str) for x in data[key]):
            raise AlgebraFormatError("must be a list of strings", key)
    name = data.get("name", "")
    if not isinstance(name, str):
        raise AlgebraFormatError("must be a string", "name")
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise AlgebraFormatError("must be a list", "brackets")
    brackets = []
    for n, entry in enumerate(raw):
        where = f"brackets[{n}]"
        if not isinstance(entry, dict) or not {"x", "y", "value"} <= set(entry):
            raise AlgebraFormatError("needs keys x, y, value", where)
        value = entry["value"]
        if not isinstance(value, list):
            raise AlgebraFormatError("value must be a list of [name, scalar] pairs", where)
        vec: dict = {}
        for m, term in enumerate(value):
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[0], str)):
                raise AlgebraFormatError("expected [name, scalar]", f"{where}.value[{m}]")
            coeff = term[1]
            if not isinstance(coeff, (str, int)) or isinstance(coeff, bool):
                raise AlgebraFormatError("scalar must be a \"p/q\" string", f"{where}.value[{m}]")
            try:
                c = scalar(str(coeff))
            except (ValueError, ZeroDivisionError) as exc:
                raise AlgebraFormatError(str(exc), f"{where}.value[{m}]") from None
            vec[term[0]] = vec.get(term[0], 0) + c
        brackets.append((entry["x"], entry["y"], vec))
    try:
        return LieSuperalgebra(data["even_basis"], data["odd_basis"], brackets, name=name)
    except AlgebraFormatError as exc:
        if exc.field is None or exc.field == "basis":
            raise AlgebraFormatError(str(exc).split(": ", 1)[-1], "brackets/basis") from None
        raise


def from_json(text: str) -> LieSuperalgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def load(path) -> LieSuperalgebra:
    with open(path, encoding="utf-8") as fh:
        return from_json(fh.read())


def dump(L: LieSuperalgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json(L))
