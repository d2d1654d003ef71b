"""Command-line interface: lattice | spectrum | jumping | chi | verify | example.

Exit codes: 0 success, 1 validation or check failure, 2 unsupported combination.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .arrangement import Arrangement, ArrangementError, parse_arrangement, serialize, validate
from .examples import BUILTIN_NAMES, builtin
from .harness import verify
from .jumping import JumpReport, jc_cor1, jc_cor2, jc_unit_interval
from .lattice import Lattice, betti_complement, build, moebius_ranks, nu_tables
from .linalg import fmt_rational
from .spectrum import (FULL, UNIT, SpectrumTable, check_sum_rule, compare_tables, spectrum_hrr,
                       spectrum_n3, spectrum_n4_low, spectrum_unit_general)

SUBCOMMANDS = ("lattice", "spectrum", "jumping", "chi", "verify", "example")
SPECTRUM_METHODS = ("formula", "oracle", "hrr")
JUMPING_METHODS = ("prop1", "cor1", "cor2")
CHI_METHODS = ("hrr", "formula")


class Unsupported(Exception):
    """A (subcommand, method, range, n) combination that is not implemented."""


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    methods: tuple[str, ...] = ()
    range: str = FULL
    seed: int = 0
    trials: int = 20
    dmax: int = 7
    n: int = 3
    input: str | None = None
    example: str | None = None
    bundle: str | None = None
    json: bool = False


# -- argument parsing ---------------------------------------------------------

def _common(p: argparse.ArgumentParser, suppress: bool):
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="arrangement record (JSON)", **kw)
    src.add_argument("--example", metavar="NAME", help=f"builtin: {', '.join(BUILTIN_NAMES)}", **kw)
    p.add_argument("--method", help="comma-separated method list", **kw)
    p.add_argument("--range", choices=(UNIT, FULL), **kw)
    p.add_argument("--seed", type=int, **kw)
    p.add_argument("--trials", type=int, **kw)
    p.add_argument("--dmax", type=int, **kw)
    p.add_argument("--n", type=int, **kw)
    p.add_argument("--bundle", metavar="PATH", help="line-bundle record for chi (JSON)", **kw)
    p.add_argument("--json", action="store_true", **kw)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrspec", description=__doc__.splitlines()[0])
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        _common(sub.add_parser(name), suppress=True)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    methods = tuple(m.strip() for m in ns.method.split(",") if m.strip()) if ns.method else ()
    return RunConfig(
        subcommand=ns.subcommand,
        methods=methods,
        range=ns.range or FULL,
        seed=0 if ns.seed is None else ns.seed,
        trials=20 if ns.trials is None else ns.trials,
        dmax=7 if ns.dmax is None else ns.dmax,
        n=3 if ns.n is None else ns.n,
        input=ns.input,
        example=ns.example,
        bundle=ns.bundle,
        json=bool(ns.json),
    )


def load_arrangement(cfg: RunConfig) -> Arrangement:
    if cfg.input:
        try:
            text = Path(cfg.input).read_text()
        except OSError as exc:
            raise ArrangementError(f"cannot read {cfg.input}: {exc.strerror}") from None
        return parse_arrangement(text)
    if cfg.example:
        return builtin(cfg.example, cfg.seed)
    raise ArrangementError("no input: pass --input PATH or --example NAME")


# -- compatibility ------------------------------------------------------------

def spectrum_methods(cfg: RunConfig, arr: Arrangement) -> tuple[str, ...]:
    methods = cfg.methods or (("formula",) if arr.n == 3 and arr.is_reduced else ("hrr",))
    for m in methods:
        if m not in SPECTRUM_METHODS:
            raise Unsupported(f"unknown spectrum method {m!r}")
        if m == "formula":
            if not arr.is_reduced or arr.n not in (3, 4):
                raise Unsupported("formula method needs a reduced arrangement with n = 3 or 4")
            if arr.n == 4 and cfg.range == FULL:
                raise Unsupported("formula method for n = 4 covers only --range unit")
        if m == "oracle" and cfg.range == FULL:
            raise Unsupported("oracle method covers only --range unit")
        if m == "hrr" and arr.n < 2:
            raise Unsupported("hrr method needs n >= 2")
    return methods


def jumping_methods(cfg: RunConfig, arr: Arrangement) -> tuple[str, ...]:
    methods = cfg.methods or ("prop1",)
    for m in methods:
        if m not in JUMPING_METHODS:
            raise Unsupported(f"unknown jumping method {m!r}")
        if m == "cor1" and (arr.n != 3 or not arr.is_reduced):
            raise Unsupported("cor1 needs a reduced arrangement with n = 3")
        if m == "cor2" and (arr.n != 4 or not arr.is_reduced):
            raise Unsupported("cor2 needs a reduced arrangement with n = 4")
    return methods


def chi_methods(cfg: RunConfig, arr: Arrangement, p: int) -> tuple[str, ...]:
    methods = cfg.methods or ("hrr",)
    for m in methods:
        if m not in CHI_METHODS:
            raise Unsupported(f"unknown chi method {m!r}")
        if m == "formula":
            ok = arr.is_reduced and ((arr.n == 3 and p in (0, 1)) or (arr.n == 4 and p == 0))
            if not ok:
                raise Unsupported("formula method for chi needs reduced n = 3 (p = 0, 1) or n = 4 (p = 0)")
    return methods


def require_essential(arr: Arrangement):
    if not arr.is_essential:
        raise ArrangementError("arrangement is not essential")


# -- subcommands --------------------------------------------------------------

def _fmt_map(m: dict) -> str:
    if not m:
        return "{}"
    return "{" + ", ".join(f"{k}: {v}" for k, v in m.items()) + "}"


def cmd_lattice(cfg: RunConfig, arr: Arrangement, out) -> int:
    rep = validate(arr)
    lat = build(arr)
    nu = nu_tables(lat)
    mt = moebius_ranks(lat)
    betti = betti_complement(lat)
    if cfg.json:
        rec = {
            "arrangement": arr.to_record(), "essential": rep.essential, "warnings": list(rep.warnings),
            "edges": [{"eqns": [list(r) for r in e.eqns], "gamma": e.gamma, "mu": e.mu, "mu_red": e.mu_red,
                       "hyperplanes": list(e.hyperplanes), "nnc": e.is_nnc, "nrnc": e.is_nrnc, "r": mt[i]}
                      for i, e in enumerate(lat.edges)],
            "nu": {str(k): {str(m): c for m, c in v.items()} for k, v in nu.single.items()},
            "nu_pairs": {f"{a},{b}": {f"{m},{m2}": c for (m, m2), c in v.items()}
                         for (a, b), v in nu.pairs.items()},
            "betti": list(betti.betti), "chi": betti.chi,
        }
        print(json.dumps(rec, sort_keys=True), file=out)
        return 0
    print(f"n={arr.n} d={arr.d} d_red={arr.d_red} essential={'yes' if rep.essential else 'no'}", file=out)
    for w in rep.warnings:
        print(f"warning: {w}", file=out)
    print("edges (codim, mu, mu_red, flags, r, hyperplanes, equations):", file=out)
    for i, e in enumerate(lat.edges):
        flags = ",".join(f for f, on in (("nnc", e.is_nnc), ("nrnc", e.is_nrnc)) if on) or "nc"
        eq = "; ".join(" ".join(str(x) for x in row) for row in e.eqns)
        print(f"  {e.gamma} {e.mu} {e.mu_red} {flags} r={mt[i]} {e.describe()} [{eq}]", file=out)
    nnc = [e.describe() for e in lat.nnc]
    print(f"S^nnc: {', '.join(nnc) if nnc else 'empty'}", file=out)
    for k, v in nu.single.items():
        print(f"nu^({k}): {_fmt_map(v)}", file=out)
    for (a, b), v in nu.pairs.items():
        print(f"nu^({a},{b}): " + _fmt_map({f'({m},{m2})': c for (m, m2), c in v.items()}), file=out)
    print(f"betti: {' '.join(map(str, betti.betti))}", file=out)
    print(f"chi(U): {betti.chi}", file=out)
    return 0


def _spectrum_table(method: str, arr: Arrangement, lat: Lattice, rng: str) -> SpectrumTable:
    if method == "formula":
        t = spectrum_n3(lat) if arr.n == 3 else spectrum_n4_low(lat)
        return t.unit() if rng == UNIT else t
    if method == "oracle":
        return spectrum_unit_general(arr, lat)
    return spectrum_hrr(arr, rng)


def cmd_spectrum(cfg: RunConfig, arr: Arrangement, out) -> int:
    methods = spectrum_methods(cfg, arr)
    require_essential(arr)
    lat = build(arr)
    tables = {m: _spectrum_table(m, arr, lat, cfg.range) for m in methods}
    first = tables[methods[0]]
    diffs = []
    for m in methods[1:]:
        for a, x, y in compare_tables(first, tables[m]):
            diffs.append({"alpha": fmt_rational(a), methods[0]: x, m: y})
    sum_rule = None
    if first.is_full:
        sr = check_sum_rule(first, lat)
        sum_rule = {"chi": sr.chi, "violations": [list(v) for v in sr.violations]}
    if cfg.json:
        rec = {"tables": {m: t.to_record() for m, t in tables.items()}, "diff": diffs, "sum_rule": sum_rule}
        print(json.dumps(rec, sort_keys=True), file=out)
    else:
        print(f"spectrum n={arr.n} d={arr.d} range={cfg.range} methods={','.join(methods)}", file=out)
        for w in first.warnings:
            print(f"warning: {w}", file=out)
        for a in first.alphas():
            vals = "  ".join(f"{m}={tables[m].entries[a]}" for m in methods if a in tables[m].entries)
            print(f"  {fmt_rational(a):>8}  {vals}", file=out)
        if len(methods) > 1:
            print("diff: " + ("none" if not diffs else json.dumps(diffs, sort_keys=True)), file=out)
        if sum_rule is not None:
            status = "ok" if not sum_rule["violations"] else f"violations {sum_rule['violations']}"
            print(f"sum rule (chi(U)={sum_rule['chi']}): {status}", file=out)
    bad = diffs or (sum_rule is not None and sum_rule["violations"])
    return 1 if bad else 0


def _jump_report(method: str, arr: Arrangement, lat: Lattice) -> JumpReport:
    if method == "cor1":
        return jc_cor1(lat)
    if method == "cor2":
        return jc_cor2(lat)
    return jc_unit_interval(arr, lat)


def cmd_jumping(cfg: RunConfig, arr: Arrangement, out) -> int:
    methods = jumping_methods(cfg, arr)
    require_essential(arr)
    lat = build(arr)
    reports = {m: _jump_report(m, arr, lat) for m in methods}
    base = reports[methods[0]].as_set
    diffs = {m: sorted(fmt_rational(a) for a in base ^ r.as_set) for m, r in reports.items() if r.as_set != base}
    if cfg.json:
        rec = {"reports": {m: r.to_record() for m, r in reports.items()}, "diff": diffs}
        print(json.dumps(rec, sort_keys=True), file=out)
    else:
        for m, r in reports.items():
            coeffs = ", ".join(fmt_rational(a) for a in r.coefficients)
            print(f"{m}: {{{coeffs}}}  (1 is always a jumping coefficient)", file=out)
            for a in r.coefficients:
                w = r.witnesses[a]
                print(f"  {fmt_rational(a):>6}  edge {w.edge.describe()} codim={w.edge.gamma} "
                      f"mu={w.edge.mu} n={w.value}", file=out)
        if len(methods) > 1:
            print("diff: " + ("none" if not diffs else json.dumps(diffs, sort_keys=True)), file=out)
    return 1 if diffs else 0


def parse_bundle(text: str) -> dict:
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArrangementError(f"malformed bundle record: {exc}") from None
    if not isinstance(rec, dict):
        raise ArrangementError("bundle record must be an object")
    p, h = rec.get("p", 0), rec.get("H", 0)
    edges = rec.get("edges", [])
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in (p, h)) or not isinstance(edges, list):
        raise ArrangementError("bundle record needs integer 'p', 'H' and a list 'edges'")
    for e in edges:
        if not isinstance(e, dict) or not isinstance(e.get("hyperplanes"), list) \
                or not isinstance(e.get("coeff"), int):
            raise ArrangementError("each edge entry needs 'hyperplanes' (index list) and integer 'coeff'")
    return {"p": p, "H": h, "edges": edges}


def cmd_chi(cfg: RunConfig, arr: Arrangement, out) -> int:
    from .wonderful.closed_forms import chi_closed_n3, chi_closed_n4, chi_line_bundle, nnc_of_codim
    from .wonderful.hrr import engine_for

    if not cfg.bundle:
        raise ArrangementError("chi needs --bundle PATH")
    try:
        rec = parse_bundle(Path(cfg.bundle).read_text())
    except OSError as exc:
        raise ArrangementError(f"cannot read {cfg.bundle}: {exc.strerror}") from None
    p = rec["p"]
    if not 0 <= p <= arr.n - 1:
        raise ArrangementError(f"p={p} outside [0, {arr.n - 1}]")
    methods = chi_methods(cfg, arr, p)
    require_essential(arr)
    lat = build(arr)
    coeffs = {}
    for e in rec["edges"]:
        edge = lat.edge_for(e["hyperplanes"])
        if edge.is_origin:
            raise ArrangementError("the origin enters through 'H', not as an edge")
        if not edge.is_nnc:
            raise ArrangementError(f"edge {edge.describe()} is normal crossing and has no exceptional divisor")
        coeffs[edge] = coeffs.get(edge, 0) + e["coeff"]
    values = {}
    for m in methods:
        if m == "hrr":
            values[m] = chi_line_bundle(engine_for(arr), coeffs, rec["H"], p)
        elif arr.n == 3:
            A = [coeffs.get(e, 0) for e in nnc_of_codim(lat, 2)]
            values[m] = chi_closed_n3(lat, A, rec["H"])[p]
        else:
            A = [coeffs.get(e, 0) for e in nnc_of_codim(lat, 2)]
            B = [coeffs.get(e, 0) for e in nnc_of_codim(lat, 3)]
            values[m] = chi_closed_n4(lat, A, B, rec["H"])
    agree = len(set(values.values())) == 1
    if cfg.json:
        print(json.dumps({"chi": values, "agree": agree}, sort_keys=True), file=out)
    else:
        for m, v in values.items():
            print(f"chi ({m}) = {v}", file=out)
        if len(methods) > 1:
            print("diff: " + ("none" if agree else "methods disagree"), file=out)
    return 0 if agree else 1


def cmd_verify(cfg: RunConfig, out) -> int:
    if cfg.n not in (3, 4):
        raise Unsupported("verify supports --n 3 or --n 4")
    if cfg.trials < 0:
        raise ArrangementError("--trials must be >= 0")
    if cfg.trials and cfg.dmax < cfg.n + 1:
        raise ArrangementError(f"--dmax must be at least n + 1 = {cfg.n + 1}")
    rep = verify(cfg.seed, cfg.trials, cfg.dmax, cfg.n)
    if cfg.json:
        print(json.dumps(rep.to_record(), sort_keys=True), file=out)
    else:
        print("\n".join(rep.lines()), file=out)
    return 0 if rep.ok else 1


def cmd_example(cfg: RunConfig, out) -> int:
    if not cfg.example:
        print("builtin examples: " + ", ".join(BUILTIN_NAMES), file=out)
        return 0
    print(serialize(builtin(cfg.example, cfg.seed), indent=None if cfg.json else 2), file=out)
    return 0


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    if cfg.subcommand == "verify":
        return cmd_verify(cfg, out)
    if cfg.subcommand == "example":
        return cmd_example(cfg, out)
    arr = load_arrangement(cfg)
    handler = {"lattice": cmd_lattice, "spectrum": cmd_spectrum, "jumping": cmd_jumping, "chi": cmd_chi}
    return handler[cfg.subcommand](cfg, arr, out)


def main(argv=None) -> int:
    ns = make_parser().parse_args(argv)
    cfg = config_from_args(ns)
    try:
        return run(cfg)
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except (ArrangementError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
