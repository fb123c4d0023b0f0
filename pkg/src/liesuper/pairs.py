"""Schur multipliers, exterior products and exterior centers of pairs.

Everything is computed from a free presentation ``0 -> R -> F -> L``
inside a truncation of the free Lie superalgebra ``F``.  If ``L`` has class
``c`` then ``F^{c+1}`` lies in ``R``, so ``F^{c+2}`` lies in ``[F, R]`` and
the quotients

    M(L, I) = (R ∩ [F, S]) / [F, R],      L ∧ I = [F, S] / [F, R]

can be read off in any truncation keeping degrees up to ``c + 1``.  The
default keeps one degree more, ``c + 2``, so that ``F^{c+2}`` itself is
visible; both give the same dimensions.
Since ``R`` and ``S`` are ideals, ``[F, R]`` is spanned by ``[x, r]`` with
``x`` a letter, which keeps every step a sparse echelon computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import (
    GradedIdeal,
    LieSuperalgebra,
    NotNilpotentError,
    as_ideal,
    commutator,
    derived_subalgebra,
    nilpotency_class,
    whole,
)
from .freesuper import GradedAlphabet, TruncatedFreeAlgebra, build_truncated
from .linalg import Echelon, Q, SuperDim, TrackedEchelon, axpy, kernel_of_images

__all__ = [
    "FreePresentation",
    "PairPresentation",
    "present",
    "extend_to_pair",
    "multiplier_pair",
    "multiplier_pair_basis",
    "multiplier",
    "exterior_product_pair",
    "exterior_center",
    "is_capable_pair",
    "multiplier_central_ideal",
    "permuted",
    "NotNilpotentError",
]


def _superdim(ech: Echelon, parities) -> SuperDim:
    return ech.superdim(parities)


def _ad_span(F: TruncatedFreeAlgebra, rows) -> Echelon:
    """``[F, V]`` for an ideal ``V`` of ``F`` given by spanning rows."""
    ech = Echelon()
    for v in rows:
        for a in range(len(F.alphabet)):
            w = F.ad_letter(a, v)
            if w:
                ech.add(w)
    return ech


@dataclass
class FreePresentation:
    """``F -> L`` with kernel ``R``, computed inside ``F / F^{D+1}``.

    ``lifts[a]`` is the element of ``L`` that letter ``a`` maps to and
    ``pi[j]`` the image of the ``j``-th basis element of ``F``.
    """

    target: LieSuperalgebra
    F: TruncatedFreeAlgebra
    lifts: list[dict]
    pi: list[dict]
    R: Echelon
    c: int
    D: int
    _pi_solver: TrackedEchelon = field(repr=False, default=None)
    _FR: Echelon | None = field(repr=False, default=None)

    def __post_init__(self):
        solver = TrackedEchelon()
        for j, img in enumerate(self.pi):
            solver.add(img, j)
        self._pi_solver = solver
        if len(solver) != len(self.target):
            raise AssertionError("the chosen lifts do not generate the algebra")
        if self.F.dim - _superdim(self.R, self.F.parities) != self.target.dim:
            raise AssertionError("dim F/R differs from dim L")

    @property
    def parities(self):
        return self.F.parities

    def lift(self, v: dict) -> dict:
        """Some preimage of ``v`` in ``F``."""
        return dict(self._pi_solver.coordinates(v))

    def project(self, s: dict) -> dict:
        out: dict = {}
        for j, c in s.items():
            axpy(out, c, self.pi[j])
        return out

    @property
    def FR(self) -> Echelon:
        if self._FR is None:
            self._FR = _ad_span(self.F, self.R.rows.values())
        return self._FR


@dataclass
class PairPresentation:
    base: FreePresentation
    ideal: GradedIdeal
    S: Echelon
    _FS: Echelon | None = field(repr=False, default=None)

    @property
    def FS(self) -> Echelon:
        if self._FS is None:
            self._FS = _ad_span(self.base.F, self.S.rows.values())
        return self._FS


def _random_lifts(L: LieSuperalgebra, letters: list[int], L2: GradedIdeal, rng: random.Random) -> list[dict]:
    """Parity-preserving random generators of ``L`` modulo ``L^2``."""
    par = L.parities
    L2rows = L2.vectors()
    out = []
    for p in (0, 1):
        block = [k for k in letters if par[k] == p]
        while True:
            mat = [[Q(rng.randint(-3, 3)) for _ in block] for _ in block]
            if len(Echelon({j: c for j, c in enumerate(row) if c} for row in mat)) == len(block):
                break
        for row in mat:
            v = {k: c for k, c in zip(block, row) if c}
            for w in L2rows:
                if par[min(w)] == p:
                    axpy(v, Q(rng.randint(-2, 2)), w)
            out.append(v)
    return out


_PRESENTATIONS: dict = {}


def present(L: LieSuperalgebra, degree: int | None = None, rng: random.Random | None = None) -> FreePresentation:
    """A free presentation of the nilpotent algebra ``L``.

    ``degree`` overrides the truncation degree (default: class + 2).  With
    ``rng`` the generator lifts are randomised.
    """
    key = (id(L), degree)
    if rng is None and key in _PRESENTATIONS and _PRESENTATIONS[key].target is L:
        return _PRESENTATIONS[key]
    c = nilpotency_class(L)
    D = c + 2 if degree is None else degree
    if D < c + 1:
        raise ValueError(f"truncation degree {D} is below class + 1 = {c + 1}")
    D = max(D, 1)
    L2 = derived_subalgebra(L)
    letters = [k for k in range(len(L)) if k not in L2.echelon.rows]
    if rng is None:
        lifts = [{k: Q(1)} for k in letters]
    else:
        lifts = _random_lifts(L, letters, L2, rng)
    even = tuple(L.names[k] for k in letters if not L.parities[k])
    odd = tuple(L.names[k] for k in letters if L.parities[k])
    F = build_truncated(GradedAlphabet(even, odd), D)
    pi: list[dict] = []
    for j, how in enumerate(F.construction):
        if how is None:
            pi.append(lifts[j])
        else:
            a, i = how
            pi.append(L.bracket_vectors(lifts[a], pi[i]))
    R = Echelon()
    for p in (0, 1):
        cols = [j for j in range(len(F)) if F.parities[j] == p]
        R.extend(kernel_of_images(pi, cols))
    P = FreePresentation(L, F, lifts, pi, R, c, D)
    if rng is None:
        _PRESENTATIONS[key] = P
    return P


def extend_to_pair(P: FreePresentation, I) -> PairPresentation:
    """``S`` is the full preimage of ``I``: ``R`` plus lifts of a basis of ``I``."""
    I = as_ideal(P.target, I)
    S = P.R.copy()
    for v in I.vectors():
        S.add(P.lift(v))
    if _superdim(S, P.parities) - _superdim(P.R, P.parities) != I.dim:
        raise AssertionError("dim S/R differs from dim I")
    return PairPresentation(P, I, S)


def _pair(L: LieSuperalgebra, I, P: FreePresentation | None) -> PairPresentation:
    if I is None:
        I = whole(L)
    return extend_to_pair(P if P is not None else present(L), I)


def multiplier_pair(L: LieSuperalgebra, I=None, presentation: FreePresentation | None = None) -> SuperDim:
    """``dim M(L, I) = dim (R ∩ [F, S]) - dim [F, R]``."""
    PP = _pair(L, I, presentation)
    P = PP.base
    par = P.parities
    R, FS, FR = P.R, PP.FS, P.FR
    both = R.copy().extend(FS.rows.values())
    cap = _superdim(R, par) + _superdim(FS, par) - _superdim(both, par)
    return cap - _superdim(FR, par)


def multiplier_pair_basis(L: LieSuperalgebra, I=None, presentation: FreePresentation | None = None) -> list[str]:
    """Representatives in ``F`` of a basis of ``M(L, I)``, as bracket expressions."""
    from .core import Element
    from .linalg import intersection

    PP = _pair(L, I, presentation)
    P = PP.base
    F = P.F
    cap = intersection(P.R.basis(), PP.FS.basis(), len(F))
    acc = P.FR.copy()
    reps = []
    for v in cap.basis():
        r = acc.reduce(v)
        if r:
            acc.add(r)
            reps.append(repr(Element._raw(F, r)))
    return reps


def multiplier(L: LieSuperalgebra, presentation: FreePresentation | None = None) -> SuperDim:
    return multiplier_pair(L, whole(L), presentation)


def exterior_product_pair(L: LieSuperalgebra, I=None, presentation: FreePresentation | None = None) -> SuperDim:
    """``dim L ∧ I = dim [F, S] - dim [F, R]``."""
    PP = _pair(L, I, presentation)
    par = PP.base.parities
    return _superdim(PP.FS, par) - _superdim(PP.base.FR, par)


def exterior_center(L: LieSuperalgebra, I=None, presentation: FreePresentation | None = None) -> GradedIdeal:
    """Elements ``i`` of ``I`` with ``l ∧ i = 0`` for every ``l`` in ``L``.

    A lift ``s`` of ``i`` must satisfy ``[x, s] ∈ [F, R]`` for every letter
    ``x``; this is one linear system over the basis of ``S``, solved parity
    by parity.
    """
    PP = _pair(L, I, presentation)
    P = PP.base
    F = P.F
    n = len(F)
    k = len(F.alphabet)
    FR = P.FR
    basis = PP.S.basis()
    images = []
    for s in basis:
        stacked: dict = {}
        for a in range(k):
            r = FR.reduce(F.ad_letter(a, s))
            for j, c in r.items():
                stacked[a * n + j] = c
        images.append(stacked)
    found = []
    for p in (0, 1):
        cols = [t for t, s in enumerate(basis) if F.parities[min(s)] == p]
        for kv in kernel_of_images(images, cols):
            s: dict = {}
            for t, c in kv.items():
                axpy(s, c, basis[t])
            v = P.project(s)
            if v:
                found.append(v)
    return GradedIdeal(L, found)


def is_capable_pair(L: LieSuperalgebra, I=None, presentation: FreePresentation | None = None) -> bool:
    return exterior_center(L, I, presentation).is_zero()


def multiplier_central_ideal(L: LieSuperalgebra, I) -> SuperDim:
    """``dim (L/L^2 ⊗ I) / <x̄ ⊗ y + (-1)^{|x||y|} ȳ ⊗ x>`` for a central ideal ``I``.

    The relations run over a homogeneous basis of ``I``; for an odd ``x`` the
    diagonal relation vanishes identically.
    """
    I = as_ideal(L, I)
    if not commutator(L, whole(L), I).is_zero():
        raise ValueError("the ideal is not central")
    L2 = derived_subalgebra(L)
    letters = [k for k in range(len(L)) if k not in L2.echelon.rows]
    pos = {k: t for t, k in enumerate(letters)}
    Ib = I.vectors()
    par = L.parities
    ipar = [par[min(v)] for v in Ib]
    m = len(Ib)

    def bar_tensor(x: dict, b: int) -> dict:
        r = L2.echelon.reduce(x)
        return {pos[k] * m + b: c for k, c in r.items()}

    ech = Echelon()
    for a in range(m):
        for b in range(a, m):
            s = -1 if ipar[a] and ipar[b] else 1
            v = bar_tensor(Ib[a], b)
            axpy(v, s, bar_tensor(Ib[b], a))
            if v:
                ech.add(v)
    tensor_par = [par[k] ^ ipar[b] for k in letters for b in range(m)]
    full = SuperDim(tensor_par.count(0), tensor_par.count(1))
    return full - ech.superdim(tensor_par)


def permuted(L: LieSuperalgebra, rng: random.Random) -> LieSuperalgebra:
    """The same algebra with its basis shuffled within each parity."""
    even = list(L.names[: L.n_even])
    odd = list(L.names[L.n_even :])
    rng.shuffle(even)
    rng.shuffle(odd)
    brackets = [
        (L.names[i], L.names[j], {L.names[k]: c for k, c in v.items()})
        for (i, j), v in L.structure_constants().items()
    ]
    return LieSuperalgebra(even, odd, brackets, name=L.name)

