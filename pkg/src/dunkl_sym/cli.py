"""Command-line interface: ``dunkl-sym <command> ...``.

Every line written to stdout is a JSON object (or LaTeX text when
``--format latex`` is requested). Failures are reported as a JSON object
with an ``error`` key; exit status 0 means pass, 1 a failed verification
or certification, 2 a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .config import ConfigError, SessionConfig, parse_kappa

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUITES = ("osp12", "thm25", "symmetries", "actions", "all")


class UsageError(Exception):
    pass


class Writer:
    """Single serialized output channel."""

    def __init__(self, stream, fmt: str = "json"):
        self.stream = stream
        self.fmt = fmt

    def emit(self, obj: dict) -> None:
        self.stream.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")
        self.stream.flush()

    def text(self, line: str) -> None:
        self.stream.write(line + "\n")
        self.stream.flush()

    def error(self, kind: str, message: str, code: int) -> int:
        self.emit({"error": {"type": kind, "message": message}, "exit_code": code})
        return code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_kappa(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kappa0", default="1/2", help='exact fraction "p/q"')
    p.add_argument("--kappa1", default="1/3", help='exact fraction "p/q"')
    p.add_argument("--kappam", default=None, help="defaults to kappa1")


def _add_delta(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=int, choices=(1, -1), default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dunkl-sym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity ledgers")
    v.add_argument("--m", type=int, required=True)
    _add_kappa(v)
    _add_delta(v)
    v.add_argument("--both-deltas", action="store_true", help="run delta = 1 and delta = -1")
    v.add_argument("--max-degree", type=int, default=4)
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--random-kappa", type=int, default=0, metavar="K",
                   help="replace the given kappa by K seeded random triples")

    rep = sub.add_parser("rep", help="representations")
    rsub = rep.add_subparsers(dest="rep_command", required=True, parser_class=_Parser)
    b = rsub.add_parser("build", help="build and certify one representation")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--N", type=int, required=True)
    b.add_argument("--ell", type=int, default=0)
    _add_delta(b)
    b.add_argument("--case", required=True)
    b.add_argument("--lambda-branch", type=int, default=None)
    b.add_argument("--Lambda-branch", type=int, choices=(1, 2), default=1)
    _add_kappa(b)
    b.add_argument("--out", default=None, help="also write the representation JSON to this file")
    b.add_argument("--format", choices=("json", "latex", "text"), default="json")
    c = rsub.add_parser("classify", help="compare the admissibility tables with the oracle")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--N-max", type=int, required=True)
    c.add_argument("--grid-size", type=int, default=4, help="number of seeded generic kappa points")
    c.add_argument("--grid", default=None, help='explicit generic points "k0,k1,km;k0,k1,km;..."')
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--no-excluded", action="store_true", help="skip the table-excluded points")
    c.add_argument("--critical", action="store_true", help="add points where A(k) or a denominator vanishes")
    c.add_argument("--summary-only", action="store_true")
    c.add_argument("--strict-unitary", action="store_true",
                   help="also fail when a table-unitary cell has A(k) <= 0 or fails the Gram check")

    mo = sub.add_parser("monogenics", help="basis of monogenic polynomials")
    mo.add_argument("--m", type=int, required=True)
    mo.add_argument("--n", type=int, required=True)
    _add_delta(mo)
    _add_kappa(mo)
    mo.add_argument("--construction", choices=("ck", "closed"), default="ck")
    mo.add_argument("--format", choices=("json", "latex"), default="json")
    mo.add_argument("--verify", action="store_true", help="also certify the induced representation")

    g = sub.add_parser("group", help="double covers")
    gsub = g.add_subparsers(dest="group_command", required=True, parser_class=_Parser)
    t = gsub.add_parser("tables", help="irreducible representations of a cover")
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--cover", choices=("plus", "minus"), default="plus")
    t.add_argument("--generators", action="store_true", help="include generator matrices")
    return parser


def _config(args, **kw) -> SessionConfig:
    return SessionConfig.from_strings(args.m, args.kappa0, args.kappa1, args.kappam, **kw)


# ---------------------------------------------------------------- verify

def _ledger(cfg: SessionConfig, suite: str):
    from .dunkl import RootSystem, verify_osp12, verify_thm25
    from .symalg import LEDGERS, build_symmetries, verify_symmetries

    rs = RootSystem(cfg.m, *cfg.kappa)
    if suite in ("osp12", "all"):
        for r in verify_osp12(rs, cfg.delta, cfg.max_degree):
            yield r | {"suite": "osp12"}
    if suite in ("thm25", "all"):
        for r in verify_thm25(rs, cfg.max_degree, cfg.delta):
            yield r | {"suite": "thm25"}
    names = {"symmetries": [n for n in LEDGERS if n != "actions"], "actions": ["actions"],
             "all": list(LEDGERS)}.get(suite)
    if names:
        sym = build_symmetries(rs, cfg.delta, check_degree=min(cfg.max_degree, 2))
        yield from verify_symmetries(sym, cfg.max_degree, names)


def cmd_verify(args, w: Writer) -> int:
    from .reps import sample_kappas
    from .symalg import ConstructionMismatch

    base = _config(args, delta=args.delta, max_degree=args.max_degree, seed=args.seed)
    kappas = sample_kappas(base.m, args.random_kappa, base.seed) if args.random_kappa > 0 else [base.kappa]
    deltas = (1, -1) if args.both_deltas else (base.delta,)
    total = failed = 0
    for kappa in kappas:
        for delta in deltas:
            cfg = SessionConfig(base.m, kappa, delta, base.max_degree, base.seed)
            head = {"m": cfg.m, "kappa": [str(k) for k in kappa], "delta": delta}
            try:
                for r in _ledger(cfg, args.suite):
                    total += 1
                    failed += r["status"] != "pass"
                    w.emit(head | r)
            except ConstructionMismatch as exc:
                failed += 1
                w.emit(head | {"identity": "construction", "status": "fail", "message": str(exc)})
    status = "pass" if failed == 0 else "fail"
    w.emit({"summary": {"suite": args.suite, "identities": total, "failed": failed,
                        "max_degree": base.max_degree, "status": status}})
    return EXIT_OK if failed == 0 else EXIT_FAIL


# ------------------------------------------------------------------- rep

def _matrix_latex(M) -> str:
    rows = [" & ".join(M.entry(i, j).latex() for j in range(M.cols)) for i in range(M.rows)]
    return r"\begin{pmatrix}" + r" \\ ".join(rows) + r"\end{pmatrix}"


def cmd_rep_build(args, w: Writer) -> int:
    from .reps import GENERATORS, LAMBDA_BRANCHES, RepSpec, build_rep, certify, check_admissibility

    cfg = _config(args, delta=args.delta, output=args.format)
    parity = "odd" if cfg.m % 2 else "even"
    if args.case not in LAMBDA_BRANCHES[parity]:
        raise ConfigError(f"case must be one of {tuple(LAMBDA_BRANCHES[parity])} for m = {cfg.m}")
    lb = args.lambda_branch if args.lambda_branch is not None else LAMBDA_BRANCHES[parity][args.case][0]
    if not 0 <= args.ell < cfg.m:
        raise ConfigError(f"ell must lie in 0..{cfg.m - 1}")
    try:
        spec = RepSpec(cfg.m, args.N, args.ell, cfg.delta, args.case, lb, args.Lambda_branch, cfg.kappa)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    rep = build_rep(spec, limits=True)
    cert = certify(rep)
    verdict = check_admissibility(spec)
    payload = rep.to_json() | {"certificate": cert.to_json(), "table": verdict.to_json(),
                               "limits": rep.limits, "inconsistent": [list(x) for x in rep.inconsistent]}
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, sort_keys=True, indent=1)
    if args.format == "latex":
        for name in GENERATORS:
            w.text(rf"{name} = {_matrix_latex(rep.gens[name])}")
    elif args.format == "text":
        w.text(f"dim {rep.dim}  lambda {rep.lam}  Lambda {rep.Lam}")
        w.text(f"representation {cert.is_representation}  irreducible {cert.irreducible}  unitary {cert.unitary}")
        w.text(f"table: irreducible {verdict.irreducible}  unitary {verdict.unitary_sufficient}")
    else:
        w.emit(payload)
    ok = cert.is_representation and not rep.inconsistent
    return EXIT_OK if ok else EXIT_FAIL


def _parse_grid(text: str, m: int) -> list[tuple]:
    pts = []
    for chunk in text.split(";"):
        parts = [p for p in chunk.split(",") if p.strip()]
        if len(parts) not in (2, 3):
            raise ConfigError(f"grid point {chunk!r} needs kappa0,kappa1[,kappam]")
        k = [parse_kappa(p) for p in parts]
        if len(k) == 2:
            k.append(k[1])
        SessionConfig(m, tuple(k))
        pts.append(tuple(k))
    return pts


def cmd_rep_classify(args, w: Writer) -> int:
    from .reps import classify, classify_summary, sample_kappas

    if args.m < 2:
        raise ConfigError("m must be at least 2")
    if args.N_max < 0 or args.grid_size < 1:
        raise ConfigError("N-max must be non-negative and grid-size positive")
    generic = _parse_grid(args.grid, args.m) if args.grid else sample_kappas(args.m, args.grid_size, args.seed)
    records = classify(args.m, args.N_max, generic, excluded=not args.no_excluded, critical=args.critical)
    for r in records:
        if not args.summary_only or not r["agree"]:
            w.emit({"cell": r["spec"], "point": r["point"], "row": r["row"],
                    "table_irreducible": r["table_irreducible"], "violated": r["violated"],
                    "oracle_irreducible": r["oracle"]["irreducible"],
                    "commutant_dim": r["oracle"]["commutant_dim"], "algebra_dim": r["oracle"]["algebra_dim"],
                    "A_signs": r["oracle"]["A_signs"], "limits": len(r["oracle"]["limits"]),
                    "inconsistent": r["oracle"]["inconsistent"], "unitary_sufficient": r["unitary_sufficient"],
                    "unitary_consistent": r["unitary_consistent"], "agree": r["agree"]})
    summary = classify_summary(records) | {"m": args.m, "N_max": args.N_max,
                                           "generic": [[str(x) for x in k] for k in generic]}
    ok = summary["disagree"] == 0 and (summary["unitary_inconsistent"] == 0 or not args.strict_unitary)
    w.emit({"summary": summary | {"status": "pass" if ok else "fail"}})
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------ monogenics

def _spinor_latex(b) -> str:
    s = "+" if b.sign > 0 else "-"
    return (rf"\psi_{{{b.n},{b.k}}}^{{{s}}} = \left({b.psi.up.latex()}\right)\chi^{{+}}"
            rf" + \left({b.psi.down.latex()}\right)\chi^{{-}}")


def cmd_monogenics(args, w: Writer) -> int:
    from .dunkl import RootSystem
    from .monogenics import explicit_basis_prop56, is_monogenic, monogenic_basis, verify_monogenic_rep

    cfg = _config(args, delta=args.delta, output=args.format)
    if any(k <= 0 for k in cfg.kappa):
        raise ConfigError("monogenic bases need positive kappa")
    if args.n < 0:
        raise ConfigError("n must be non-negative")
    rs = RootSystem(cfg.m, *cfg.kappa)
    build = monogenic_basis if args.construction == "ck" else explicit_basis_prop56
    basis = build(rs, cfg.delta, args.n)
    annihilated = all(is_monogenic(rs, cfg.delta, b.psi) for b in basis)
    if args.format == "latex":
        for b in basis:
            w.text(_spinor_latex(b))
    else:
        for b in basis:
            w.emit(b.to_json())
    ok = annihilated
    summary = {"m": cfg.m, "n": args.n, "delta": cfg.delta, "kappa": [str(k) for k in cfg.kappa],
               "construction": args.construction, "count": len(basis), "annihilated": annihilated}
    if args.verify:
        report = verify_monogenic_rep(rs, cfg.delta, args.n)
        summary["report"] = report.to_json()
        ok = ok and report.ok
    if args.format == "json":
        w.emit({"summary": summary | {"status": "pass" if ok else "fail"}})
    return EXIT_OK if ok else EXIT_FAIL


# ----------------------------------------------------------------- group

def cmd_group_tables(args, w: Writer) -> int:
    from .grp import irrep_table, make_cover, table_report

    if args.m < 2:
        raise ConfigError("m must be at least 2")
    g = make_cover(args.m, args.cover)
    report = table_report(g)
    for r in irrep_table(g).irreps:
        obj = r.to_json()
        if not args.generators:
            obj.pop("generators")
        w.emit({"irrep": obj})
    ok = (report["n_classes"] == report["n_irreps"] and report["sum_dim_sq"] == g.order
          and report["class_functions"] and report["relations"] and report["orthonormal"])
    w.emit({"summary": report | {"status": "pass" if ok else "fail"}})
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------------ main

def _dispatch(args):
    if args.command == "verify":
        return cmd_verify
    if args.command == "rep":
        return cmd_rep_build if args.rep_command == "build" else cmd_rep_classify
    if args.command == "monogenics":
        return cmd_monogenics
    return cmd_group_tables


@contextmanager
def _no_traceback_on_pipe():
    try:
        yield
    except BrokenPipeError:
        sys.stderr.close()


def main(argv=None, stdout=None) -> int:
    from .reps import IncompatibleCase, NoRepresentation

    w = Writer(stdout or sys.stdout)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return w.error("usage", str(exc), EXIT_USAGE)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    with _no_traceback_on_pipe():
        try:
            return _dispatch(args)(args, w)
        except (ConfigError, UsageError) as exc:
            return w.error("usage", str(exc), EXIT_USAGE)
        except NoRepresentation as exc:
            return w.error("no_representation", str(exc), EXIT_USAGE)
        except IncompatibleCase as exc:
            return w.error("incompatible_case", str(exc), EXIT_USAGE)
        except ArithmeticError as exc:
            return w.error("arithmetic", str(exc), EXIT_FAIL)
    return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
