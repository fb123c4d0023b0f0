"""Cross-check grid: brute-force pair computations against the closed forms.

Every check becomes a :class:`Check` row with status ``pass``, ``fail`` or
``caveat``.  Caveated rows are formula evaluations that are not valid
dimensions (or leave a choice open); they are reported but never count as
failures.  The report fails iff some row has status ``fail``.
"""

from __future__ import annotations

import random
import sys
from dataclasses import asdict, dataclass, field

from . import formulas as fm
from .core import (
    GradedIdeal,
    LieSuperalgebra,
    center,
    central_product,
    commutator,
    direct_sum,
    quotient,
    whole,
)
from .families import (
    abelian,
    central_decomposition,
    coordinate_ideals,
    derived_dim_one_signature,
    heisenberg_even,
    heisenberg_odd,
)
from .linalg import SuperDim
from .pairs import (
    exterior_center,
    exterior_product_pair,
    is_capable_pair,
    multiplier,
    multiplier_central_ideal,
    multiplier_pair,
    multiplier_pair_basis,
    permuted,
    present,
)

SECTIONS = (
    "examples",
    "multiplier",
    "abelian",
    "heis-even",
    "heis-odd",
    "derived-one",
    "structure",
    "central-tensor",
    "invariance",
)

# largest bounds accepted without --override
ENVELOPE = {
    "abelian_max": 3,
    "heis_even_total": 4,
    "heis_odd_max": 3,
    "derived_dim_max": 7,
    "invariance_dim_max": 6,
    "invariance_trials": 10,
}


class EnvelopeError(ValueError):
    pass


@dataclass(frozen=True)
class GridBounds:
    abelian_max: int = 3
    heis_even_total: int = 3
    heis_odd_max: int = 2
    derived_dim_max: int = 6
    invariance_dim_max: int = 5
    invariance_trials: int = 5
    seed: int = 0
    sections: tuple = SECTIONS

    def check(self, override: bool = False) -> list[str]:
        """Names of bounds beyond the envelope; raises unless ``override``."""
        over = [k for k, cap in ENVELOPE.items() if getattr(self, k) > cap]
        unknown = [s for s in self.sections if s not in SECTIONS]
        if unknown:
            raise ValueError(f"unknown sections: {', '.join(unknown)}")
        if over and not override:
            raise EnvelopeError("bounds beyond the supported envelope: " + ", ".join(over))
        return over


def _dim(d) -> dict | int | bool | None:
    if isinstance(d, SuperDim):
        return d.as_dict()
    return d


@dataclass
class Check:
    section: str
    subject: str
    ideal: str
    quantity: str
    computed: object
    expected: object
    source: str
    status: str
    caveat: str | None = None
    note: str | None = None

    def as_dict(self) -> dict:
        out = asdict(self)
        out["computed"] = _dim(self.computed)
        out["expected"] = _dim(self.expected)
        return {k: v for k, v in out.items() if v is not None or k in ("expected", "caveat")}


@dataclass
class Report:
    bounds: GridBounds
    rows: list[Check] = field(default_factory=list)
    ledger: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [r for r in self.rows if r.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        out = {"checks": len(self.rows)}
        for s in ("pass", "fail", "caveat"):
            out[s] = sum(r.status == s for r in self.rows)
        out["ledger"] = len(self.ledger)
        return out

    def as_dict(self) -> dict:
        b = asdict(self.bounds)
        b["sections"] = list(self.bounds.sections)
        return {
            "bounds": b,
            "summary": self.summary(),
            "rows": [r.as_dict() for r in self.rows],
            "ledger": self.ledger,
        }

    def to_text(self) -> str:
        lines = []
        for r in self.rows:
            tag = r.status.upper()
            extra = f"  [{r.caveat}]" if r.caveat else ""
            lines.append(
                f"{tag:6} {r.section:14} {r.subject:16} {r.ideal:24} {r.quantity:22} "
                f"got {_show(r.computed)}  want {_show(r.expected)}{extra}"
            )
        if self.ledger:
            lines.append("")
            lines.append("discrepancy ledger:")
            for e in self.ledger:
                lines.append("  " + ", ".join(f"{k}={_show(v)}" for k, v in e.items()))
        s = self.summary()
        lines.append("")
        lines.append(
            f"{s['checks']} checks: {s['pass']} pass, {s['fail']} fail, {s['caveat']} caveat; "
            f"{s['ledger']} ledger entries"
        )
        return "\n".join(lines) + "\n"


def _show(v) -> str:
    if isinstance(v, dict) and set(v) == {"even", "odd"}:
        return f"({v['even']}|{v['odd']})"
    return str(v)


def ideal_label(I: GradedIdeal) -> str:
    if I.is_zero():
        return "0"
    return ", ".join(repr(e) for e in I.basis())


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _grid_algebras(b: GridBounds):
    ab = [abelian(m, n) for m in range(b.abelian_max + 1) for n in range(b.abelian_max + 1)]
    he = [
        heisenberg_even(m, n)
        for t in range(1, b.heis_even_total + 1)
        for m in range(t + 1)
        for n in [t - m]
    ]
    ho = [heisenberg_odd(m) for m in range(1, b.heis_odd_max + 1)]
    return ab, he, ho


class _Builder:
    def __init__(self, bounds: GridBounds):
        self.b = bounds
        self.report = Report(bounds)
        self.ab, self.he, self.ho = _grid_algebras(bounds)
        self._params: dict = {}
        for L in self.ab:
            self._params[id(L)] = ("abelian", L.dim.even, L.dim.odd)
        for L in self.he:
            self._params[id(L)] = ("heis-even", (L.dim.even - 1) // 2, L.dim.odd)
        for L in self.ho:
            self._params[id(L)] = ("heis-odd", L.dim.even)
        self._ideals: dict = {}
        self._quotients: dict = {}

    def add(self, *args, **kw) -> Check:
        row = Check(*args, **kw)
        self.report.rows.append(row)
        return row

    def ideals(self, L: LieSuperalgebra, nonzero: bool = True) -> list[GradedIdeal]:
        if id(L) not in self._ideals:
            self._ideals[id(L)] = coordinate_ideals(L)
        ids = self._ideals[id(L)]
        return [I for I in ids if not I.is_zero()] if nonzero else ids

    def pairs(self):
        for L in self.ab + self.he + self.ho:
            for I in self.ideals(L):
                yield L, I

    # -- sections ---------------------------------------------------------------

    def examples(self) -> None:
        cases = [
            (heisenberg_even(1, 0), 2, "worked example, H(1,0) with I = L^2"),
            (heisenberg_even(0, 1), 1, "worked example, H(0,1) with I = L^2"),
            (heisenberg_odd(1), 1, "worked example, H_1 with I = L^2"),
        ]
        for L, want, src in cases:
            I = commutator(L, whole(L), whole(L))
            got = multiplier_pair(L, I).total
            self.add("examples", L.name, ideal_label(I), "multiplier total", got, want, src, _status(got == want))
        L = heisenberg_odd(1)
        I = commutator(L, whole(L), whole(L))
        got = representative_survives(L, I, "[x1,[x1,y1]]")
        self.add(
            "examples", L.name, ideal_label(I), "[x,[x,y]] nonzero in M", got, True,
            "worked example, H_1 representative", _status(got),
        )

    def multiplier(self) -> None:
        for L in self.ab:
            _, m, n = self._params[id(L)]
            got, want = multiplier(L), fm.dim_mult_abelian(m, n)
            self.add("multiplier", L.name, "L", "multiplier", got, want, "abelian multiplier", _status(got == want))
            if len(L) == 0:
                # the zero algebra is capable vacuously; the classification starts at dim 1
                continue
            cap, fcap = is_capable_pair(L), fm.capable_abelian(m, n)
            self.add("multiplier", L.name, "L", "capable", cap, fcap, "abelian capability", _status(cap == fcap))
        for L in self.he:
            _, m, n = self._params[id(L)]
            got, want = multiplier(L), fm.dim_mult_heis_even(m, n)
            self.add("multiplier", L.name, "L", "multiplier", got, want, "H(m,n) multiplier", _status(got == want))
            cap, fcap = is_capable_pair(L), fm.capable_heis(m, n)
            self.add("multiplier", L.name, "L", "capable", cap, fcap, "H(m,n) capability", _status(cap == fcap))
        for L in self.ho:
            _, m = self._params[id(L)]
            got, want = multiplier(L), fm.dim_mult_heis_odd(m)
            self.add("multiplier", L.name, "L", "multiplier", got, want, "H_m multiplier", _status(got == want))
            cap, fcap = is_capable_pair(L), fm.capable_heis_odd(m)
            self.add("multiplier", L.name, "L", "capable", cap, fcap, "H_m capability", _status(cap == fcap))

    def abelian_pairs(self) -> None:
        for L in self.ab:
            _, m, n = self._params[id(L)]
            for I in self.ideals(L, nonzero=False):
                k, h = I.dim
                got, want = multiplier_pair(L, I), fm.dim_mult_pair_abelian(m, n, k, h)
                lab = ideal_label(I)
                self.add("abelian", L.name, lab, "pair multiplier", got, want, "abelian pair multiplier", _status(got == want))
                if I.is_zero():
                    continue
                cap, fcap = is_capable_pair(L, I), fm.capable_abelian_pair(m, n, k, h)
                self.add("abelian", L.name, lab, "capable", cap, fcap, "abelian pair capability", _status(cap == fcap))

    def _formula_row(self, section, L, I, got: SuperDim, res: fm.FormulaResult) -> None:
        lab = ideal_label(I)
        if res.caveat:
            status = "caveat"
            expected = res.value if res.value is not None else (
                list(res.alternatives) if res.alternatives else [str(x) for x in res.raw]
            )
            agree = got.total in res.alternatives if res.alternatives else False
        elif isinstance(res.value, SuperDim):
            expected, agree = res.value, got == res.value
            status = _status(agree)
        else:
            expected, agree = res.value, got.total == res.value
            status = _status(agree)
        quantity = "pair multiplier" if isinstance(res.value, SuperDim) or res.raw else "pair multiplier total"
        computed = got if quantity == "pair multiplier" else got.total
        self.add(section, L.name, lab, quantity, computed, expected, res.source, status, res.caveat)
        if res.caveat or not agree:
            entry = {
                "algebra": L.name,
                "ideal": lab,
                "ideal_dim": I.dim.as_dict(),
                "brute_force": got.as_dict(),
                "brute_force_total": got.total,
                "formula": res.as_dict(),
                "caveated": res.caveat is not None,
            }
            self.report.ledger.append(entry)

    def heis_even_pairs(self) -> None:
        for L in self.he:
            _, m, n = self._params[id(L)]
            for I in self.ideals(L):
                k, h = I.dim
                self._formula_row("heis-even", L, I, multiplier_pair(L, I), fm.dim_mult_pair_heis_even(m, n, k, h))
                cap, fcap = is_capable_pair(L, I), fm.capable_heis_even_pair(m, n, I.dim)
                self.add("heis-even", L.name, ideal_label(I), "capable", cap, fcap, "H(m,n) pair capability", _status(cap == fcap))

    def heis_odd_pairs(self) -> None:
        for L in self.ho:
            _, m = self._params[id(L)]
            for I in self.ideals(L):
                k, h = I.dim
                got = multiplier_pair(L, I)
                if h == k + 1:
                    self._formula_row("heis-odd", L, I, got, fm.dim_mult_pair_heis_odd(m, k))
                elif m == 1:
                    # outside the formula's hypothesis, but part of the H_1 ambiguity record
                    self.report.ledger.append({
                        "algebra": L.name,
                        "ideal": ideal_label(I),
                        "ideal_dim": I.dim.as_dict(),
                        "brute_force": got.as_dict(),
                        "brute_force_total": got.total,
                        "formula": None,
                        "caveated": True,
                        "note": "H_1 ideal outside the (k|k+1) hypothesis",
                    })
                cap, fcap = is_capable_pair(L, I), fm.capable_heis_odd_pair(m, I.dim)
                self.add("heis-odd", L.name, ideal_label(I), "capable", cap, fcap, "H_m pair capability", _status(cap == fcap))

    def derived_one(self) -> None:
        top = self.b.derived_dim_max
        cases = []
        for t in range(1, top):
            for m in range(t + 1):
                n = t - m
                if 2 * m + 1 + n <= top:
                    cases.append(heisenberg_even(m, n))
        for m in range(1, top):
            if 2 * m + 1 <= top:
                cases.append(heisenberg_odd(m))
        for H in cases:
            room = top - len(H)
            for p in range(room + 1):
                for q in range(room - p + 1):
                    L = H if p + q == 0 else direct_sum(H, abelian(p, q))
                    dim, d2, zc = derived_dim_one_signature(L)
                    cap = is_capable_pair(L)
                    fcap = fm.capable_derived_dim_one(dim.even, dim.odd, d2.even, d2.odd, zc)
                    self.add("derived-one", L.name, "L", "capable", cap, fcap, "derived dimension one capability", _status(cap == fcap))

    # -- structural identities ----------------------------------------------------

    def _quotient(self, L, K):
        key = (id(L), tuple(sorted(K.echelon.rows)), tuple(map(str, K.vectors())))
        if key not in self._quotients:
            self._quotients[key] = quotient(L, K)
        return self._quotients[key]

    def _central_relation(self, L, I, K) -> tuple[SuperDim, SuperDim]:
        """``(M(L,I) + dim(K ∩ [L,I]), M(L/K, I/K))``."""
        Qa, proj = self._quotient(L, K)
        IK = GradedIdeal(Qa, proj.image(I).vectors())
        lhs = multiplier_pair(L, I) + K.intersect(commutator(L, whole(L), I)).dim
        return lhs, multiplier_pair(Qa, IK)

    def structure(self) -> None:
        for L, I in self.pairs():
            lab = ideal_label(I)
            M = multiplier_pair(L, I)
            ext = exterior_product_pair(L, I)
            LI = commutator(L, whole(L), I).dim
            self.add("structure", L.name, lab, "exterior = M + [L,I]", ext, M + LI, "central extension identity", _status(ext == M + LI))
            Z = exterior_center(L, I)
            ZL = exterior_center(L)
            self.add("structure", L.name, lab, "Z^(L,I) in Z^(L)", Z <= ZL, True, "exterior center containment", _status(Z <= ZL))
            Zc = center(L)
            if not Z.is_zero() and Z <= Zc:
                lhs, rhs = self._central_relation(L, I, Z)
                self.add("structure", L.name, lab, "central quotient", lhs, rhs, "central quotient relation, K = Z^(L,I)", _status(lhs == rhs))
            for k in sorted(I.echelon.rows):
                e = {k: 1}
                if e not in I or e not in Zc:
                    continue
                K = GradedIdeal(L, [e])
                inside = K <= Z
                lhs, rhs = self._central_relation(L, I, K)
                self.add(
                    "structure", L.name, f"{lab} / {L.names[k]}", "K in Z^ iff relation",
                    inside, lhs == rhs, "monomorphism criterion", _status(inside == (lhs == rhs)),
                )
        self._splitting()
        self._central_products()

    def _splitting(self) -> None:
        parts = [abelian(1, 0), abelian(0, 1), heisenberg_even(1, 0), heisenberg_even(0, 1), heisenberg_odd(1)]
        for A in parts:
            for B in parts:
                L = direct_sum(A, B)
                I = GradedIdeal(L, [L[x].coeffs for x in L.summands[0]])
                got = multiplier_pair(L, I) + multiplier(B)
                want = multiplier(L)
                self.add("structure", L.name, ideal_label(I), "M(L) = M(L,I) + M(I')", got, want, "direct sum splitting", _status(got == want))

    def _central_products(self) -> None:
        for H in self.he + self.ho:
            units = []
            for block in central_decomposition(H):
                vecs = [v for v in block.vectors() if v not in center(H)]
                if self._params[id(H)][0] == "heis-even" and H.parities[min(vecs[0])]:
                    units.extend([v] for v in vecs)
                else:
                    units.append(vecs)
            if len(units) < 2:
                continue
            z = center(H).vectors()
            for mask in range(1, (1 << len(units)) - 1):
                left = [v for t, u in enumerate(units) if mask >> t & 1 for v in u]
                right = [v for t, u in enumerate(units) if not mask >> t & 1 for v in u]
                I, J = GradedIdeal(H, left + z), GradedIdeal(H, right + z)
                cp = central_product(H, I, J)
                common = commutator(H, I, I).intersect(commutator(H, J, J))
                if not cp.ok or common.is_zero():
                    continue
                flagged = [I, J] + [
                    K for K in self.ideals(H)
                    if common <= K and K <= I and commutator(H, K, I) <= common and K != I
                ]
                for P in flagged:
                    cap = is_capable_pair(H, P)
                    self.add(
                        "structure", H.name, ideal_label(P), "central product non-capable",
                        cap, False, f"central product {ideal_label(I)} | {ideal_label(J)}", _status(not cap),
                    )

    def central_tensor(self) -> None:
        for L in self.ab + self.he + self.ho:
            Zc = center(L)
            for I in self.ideals(L):
                if not I <= Zc:
                    continue
                got, want = multiplier_pair(L, I), multiplier_central_ideal(L, I)
                self.add("central-tensor", L.name, ideal_label(I), "pair multiplier", got, want, "central ideal tensor description", _status(got == want))

    def invariance(self) -> None:
        b = self.b
        for L, I in self.pairs():
            if len(L) > b.invariance_dim_max:
                continue
            base = multiplier_pair(L, I)
            seen = []
            for t in range(b.invariance_trials):
                rng = random.Random(f"{b.seed}:{L.name}:{ideal_label(I)}:{t}")
                L2 = permuted(L, rng)
                I2 = GradedIdeal(L2, [{L2.index(L.names[k]): c for k, c in v.items()} for v in I.vectors()])
                seen.append(multiplier_pair(L2, I2, present(L2, rng=rng)))
            bad = [d for d in seen if d != base]
            self.add(
                "invariance", L.name, ideal_label(I), f"{b.invariance_trials} random presentations",
                bad[0] if bad else base, base, "presentation independence", _status(not bad),
            )


def representative_survives(L: LieSuperalgebra, I, expr: str) -> bool:
    """Whether the bracket ``expr`` in the free algebra gives a nonzero class in ``M(L, I)``.

    The class is nonzero iff the element lies in ``R ∩ [F, S]`` but not in ``[F, R]``.
    """
    from .pairs import extend_to_pair

    P = present(L)
    PP = extend_to_pair(P, I)
    v = P.F.normal_form(expr)
    in_R = not P.R.reduce(v)
    in_FS = not PP.FS.reduce(v)
    return in_R and in_FS and bool(P.FR.reduce(v))


def build_report(bounds: GridBounds | None = None, override: bool = False) -> Report:
    bounds = bounds or GridBounds()
    over = bounds.check(override)
    if over:
        print(f"warning: bounds beyond the tested envelope ({', '.join(over)}); this may be slow", file=sys.stderr)
    B = _Builder(bounds)
    steps = {
        "examples": B.examples,
        "multiplier": B.multiplier,
        "abelian": B.abelian_pairs,
        "heis-even": B.heis_even_pairs,
        "heis-odd": B.heis_odd_pairs,
        "derived-one": B.derived_one,
        "structure": B.structure,
        "central-tensor": B.central_tensor,
        "invariance": B.invariance,
    }
    for name in SECTIONS:
        if name in bounds.sections:
            steps[name]()
    return B.report


__all__ = [
    "SECTIONS",
    "ENVELOPE",
    "EnvelopeError",
    "GridBounds",
    "Check",
    "Report",
    "build_report",
    "ideal_label",
    "representative_survives",
    "multiplier_pair_basis",
]
