"""Command-line front end.

Every subcommand prints JSON (default) or a plain text rendering with
``--format text``.  Output depends only on the arguments, so repeated runs
are byte-identical.

Exit codes: 0 success, 1 a check failed (axioms, report), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas as fm
from .core import AlgebraFormatError, GradedIdeal, check_axioms, load, parse_elements, to_dict, to_json, whole
from .families import abelian, heisenberg_even, heisenberg_odd
from .freesuper import (
    GradedAlphabet,
    build_truncated,
    dims_petrogradsky,
    multidegrees,
    super_witt,
)
from .pairs import exterior_center, exterior_product_pair, multiplier_pair, multiplier_pair_basis
from .report import SECTIONS, EnvelopeError, GridBounds, build_report


class UsageError(ValueError):
    pass


def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return vals


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- subcommands --------------------------------------------------------------


def cmd_verify(args) -> int:
    L = load(args.algebra)
    problems = check_axioms(L)
    payload = {"name": L.name, "dim": L.dim.as_dict(), "ok": not problems, "violations": problems}
    text = "\n".join(problems) if problems else f"{L.name or 'algebra'} {L.dim}: axioms hold"
    _emit(args, payload, text)
    return 1 if problems else 0


def _family(args):
    if args.family == "abelian":
        return abelian(args.m, args.n)
    if args.family == "heis-even":
        return heisenberg_even(args.m, args.n)
    if args.n:
        raise UsageError("heis-odd takes only --m")
    return heisenberg_odd(args.m)


def cmd_construct(args) -> int:
    L = _family(args)
    if args.format == "json":
        sys.stdout.write(to_json(L))
    else:
        lines = [f"{L.name}  dim {L.dim}", "even: " + " ".join(L.names[: L.n_even]), "odd: " + " ".join(L.names[L.n_even :])]
        for b in to_dict(L)["brackets"]:
            val = " + ".join(f"{c}*{k}" for k, c in b["value"])
            lines.append(f"[{b['x']},{b['y']}] = {val}")
        _emit(args, {}, "\n".join(lines))
    return 0


def _ideal(L, spec: str | None) -> GradedIdeal:
    if spec is None:
        return whole(L)
    try:
        elems = parse_elements(L, spec)
    except (KeyError, ValueError) as exc:
        raise AlgebraFormatError(str(exc), "ideal") from None
    return GradedIdeal(L, [e.coeffs for e in elems])


def _pair_payload(L, I, with_basis: bool) -> dict:
    M = multiplier_pair(L, I)
    Z = exterior_center(L, I)
    out = {
        "algebra": L.name,
        "ideal_dim": I.dim.as_dict(),
        "multiplier": M.as_dict(),
        "exterior_product": exterior_product_pair(L, I).as_dict(),
        "exterior_center_dim": Z.dim.as_dict(),
        "capable": Z.is_zero(),
    }
    if with_basis:
        out["multiplier_basis"] = multiplier_pair_basis(L, I)
        out["exterior_center"] = [repr(e) for e in Z.basis()]
    return out


def _pair_text(p: dict) -> str:
    fmt = lambda d: f"({d['even']}|{d['odd']})"  # noqa: E731
    lines = [
        f"algebra            {p['algebra']}",
        f"ideal dim          {fmt(p['ideal_dim'])}",
        f"multiplier         {fmt(p['multiplier'])}",
        f"exterior product   {fmt(p['exterior_product'])}",
        f"exterior center    {fmt(p['exterior_center_dim'])}",
        f"capable            {'yes' if p['capable'] else 'no'}",
    ]
    for r in p.get("multiplier_basis", []):
        lines.append(f"  M basis: {r}")
    return "\n".join(lines)


def cmd_multiplier(args) -> int:
    L = load(args.algebra)
    p = _pair_payload(L, _ideal(L, args.ideal), args.basis)
    _emit(args, p, _pair_text(p))
    return 0


cmd_capability = cmd_multiplier


def cmd_free_basis(args) -> int:
    if args.max_degree < 1 or args.even < 0 or args.odd < 0:
        raise UsageError("need --max-degree >= 1 and non-negative letter counts")
    alpha = GradedAlphabet.standard(args.even, args.odd)
    F = build_truncated(alpha, args.max_degree)
    pars = alpha.parities
    dims = F.degree_dims()
    degrees = []
    for d in range(1, args.max_degree + 1):
        md = F.multidegree_dims(d)
        entry = {
            "degree": d,
            "dim": dims[d - 1],
            "multidegrees": [
                {"alpha": list(a), "dim": md.get(a, 0), "super_witt": super_witt(a, pars)}
                for a in multidegrees(len(alpha), d)
            ],
        }
        if args.monomials:
            entry["basis"] = [F.bracket_string(j) for j in range(len(F)) if F.degrees[j] == d]
        degrees.append(entry)
    payload = {
        "alphabet": {"even": list(alpha.even), "odd": list(alpha.odd)},
        "max_degree": args.max_degree,
        "dims": dims,
        "degrees": degrees,
    }
    lines = [f"free Lie superalgebra on ({args.even}|{args.odd}) letters, degrees 1..{args.max_degree}"]
    lines.append("dims " + " ".join(map(str, dims)))
    for e in degrees:
        for m in e["multidegrees"]:
            if m["dim"] or m["super_witt"]:
                lines.append(f"  alpha {tuple(m['alpha'])}: {m['dim']} (SW {m['super_witt']})")
        for b in e.get("basis", []):
            lines.append(f"    {b}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_witt(args) -> int:
    if args.alpha is not None:
        alpha = _ints(args.alpha, args.even + args.odd)
        pars = [0] * args.even + [1] * args.odd
        val = super_witt(alpha, pars)
        _emit(args, {"alpha": alpha, "parities": pars, "super_witt": val}, f"SW{tuple(alpha)} = {val}")
        return 0
    if args.degree is None or args.degree < 1:
        raise UsageError("give --alpha or a positive --degree")
    d = dims_petrogradsky(args.even, args.odd, args.degree)
    payload = {"even": args.even, "odd": args.odd, "degree": args.degree, **d.__dict__}
    text = f"degree {args.degree}: dim {d.dim_r} = {d.dim_r_plus} even + {d.dim_r_minus} odd, sdim {d.sdim_r}"
    _emit(args, payload, text)
    return 0


def cmd_oracle(args) -> int:
    p = _ints(args.params)
    pair = _ints(args.pair, 2) if args.pair else None
    out: dict = {"family": args.family, "params": p}
    if args.family == "abelian":
        if len(p) != 2:
            raise UsageError("abelian takes --params m,n")
        m, n = p
        if pair:
            out["multiplier"] = {"value": fm.dim_mult_pair_abelian(m, n, *pair).as_dict(), "source": "abelian pair multiplier", "caveat": None}
            if sum(pair):
                out["capable"] = fm.capable_abelian_pair(m, n, *pair)
        else:
            out["multiplier"] = {"value": fm.dim_mult_abelian(m, n).as_dict(), "source": "abelian multiplier", "caveat": None}
            out["capable"] = fm.capable_abelian(m, n)
    elif args.family == "heis-even":
        if len(p) != 2:
            raise UsageError("heis-even takes --params m,n")
        m, n = p
        if pair:
            out["multiplier"] = fm.dim_mult_pair_heis_even(m, n, *pair).as_dict()
            out["capable"] = fm.capable_heis_even_pair(m, n, sum(pair))
        else:
            out["multiplier"] = {"value": fm.dim_mult_heis_even(m, n).as_dict(), "source": "H(m,n) multiplier", "caveat": None}
            out["capable"] = fm.capable_heis(m, n)
    else:
        if len(p) != 1:
            raise UsageError("heis-odd takes --params m")
        (m,) = p
        if pair:
            k, h = pair
            if h != k + 1:
                raise UsageError("the H_m pair formula covers ideals of dimension (k|k+1)")
            out["multiplier"] = fm.dim_mult_pair_heis_odd(m, k).as_dict()
            out["capable"] = fm.capable_heis_odd_pair(m, k + h)
        else:
            out["multiplier"] = {"value": fm.dim_mult_heis_odd(m).as_dict(), "source": "H_m multiplier", "caveat": None}
            out["capable"] = fm.capable_heis_odd(m)
    mv = out["multiplier"]["value"]
    if isinstance(mv, dict):
        shown = f"({mv['even']}|{mv['odd']})"
    elif mv is None and out["multiplier"].get("alternatives"):
        shown = " or ".join(map(str, out["multiplier"]["alternatives"]))
    elif mv is None:
        shown = "raw " + ", ".join(out["multiplier"].get("raw", []))
    else:
        shown = str(mv)
    lines = [f"multiplier {shown}  [{out['multiplier']['source']}]"]
    if out["multiplier"].get("caveat"):
        lines.append(f"caveat: {out['multiplier']['caveat']}")
    if "capable" in out:
        lines.append(f"capable {'yes' if out['capable'] else 'no'}")
    _emit(args, out, "\n".join(lines))
    return 0


def cmd_report(args) -> int:
    sections = SECTIONS if args.sections is None else tuple(s for s in args.sections.split(",") if s.strip())
    bounds = GridBounds(
        abelian_max=args.abelian_max,
        heis_even_total=args.heis_even_total,
        heis_odd_max=args.heis_odd_max,
        derived_dim_max=args.derived_dim_max,
        invariance_dim_max=args.invariance_dim_max,
        invariance_trials=args.trials,
        seed=args.seed,
        sections=sections,
    )
    try:
        rep = build_report(bounds, override=args.override)
    except EnvelopeError as exc:
        raise UsageError(f"{exc} (pass --override to run anyway)") from None
    _emit(args, rep.as_dict(), rep.to_text())
    return 0 if rep.ok else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="liesuper", description="Multipliers and capability of pairs of Lie superalgebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.set_defaults(fn=fn)
        return p

    p = add("verify", cmd_verify, "check the superalgebra axioms of a JSON file")
    p.add_argument("algebra")

    p = add("construct", cmd_construct, "emit a family member as JSON")
    p.add_argument("--family", choices=("abelian", "heis-even", "heis-odd"), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=0)

    for name, fn in (("multiplier", cmd_multiplier), ("capability", cmd_capability)):
        p = add(name, fn, f"{name} of a pair (L, I)")
        p.add_argument("--algebra", required=True)
        p.add_argument("--ideal", help='comma-separated elements, e.g. "x1+2*x2, z"; default: all of L')
        p.add_argument("--basis", action="store_true", help="also list multiplier representatives")

    p = add("free-basis", cmd_free_basis, "basis dimensions of the free Lie superalgebra")
    p.add_argument("--even", type=int, required=True)
    p.add_argument("--odd", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--monomials", action="store_true", help="list basis elements as bracket strings")

    p = add("witt", cmd_witt, "super-Witt and degree dimension formulas")
    p.add_argument("--even", type=int, required=True)
    p.add_argument("--odd", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--alpha", help="multidegree, comma-separated (even letters first)")
    g.add_argument("--degree", type=int)

    p = add("oracle", cmd_oracle, "closed-form dimension and capability formulas")
    p.add_argument("--family", choices=("abelian", "heis-even", "heis-odd"), required=True)
    p.add_argument("--params", required=True, help="m,n (or m for heis-odd)")
    p.add_argument("--pair", help="ideal dimension k,h")

    p = add("report", cmd_report, "run the cross-check grid")
    d = GridBounds()
    p.add_argument("--sections", help=f"comma-separated subset of: {', '.join(SECTIONS)} (empty string: none)")
    p.add_argument("--abelian-max", type=int, default=d.abelian_max)
    p.add_argument("--heis-even-total", type=int, default=d.heis_even_total)
    p.add_argument("--heis-odd-max", type=int, default=d.heis_odd_max)
    p.add_argument("--derived-dim-max", type=int, default=d.derived_dim_max)
    p.add_argument("--invariance-dim-max", type=int, default=d.invariance_dim_max)
    p.add_argument("--trials", type=int, default=d.invariance_trials)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--override", action="store_true", help="allow bounds beyond the supported envelope")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (AlgebraFormatError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
