"""Command-line certification surface.

Every subcommand emits a residual report and exits 0 exactly when the
requested checks all pass (2 on usage or input errors). Two renderings:
human text and line-delimited records with stable field names

    entry=... check=... residual_nonzero_count=... status=...

Identical invocations produce byte-identical output; all iteration
orders are pinned.
"""

import argparse
import os
import sys
from fractions import Fraction

from . import catalog
from .bialgebra import (
    algebra_as_dual,
    build_double,
    dual_jacobi_residual,
    pairing_ad_invariance,
)
from .errors import SuperBialgError
from .morphism import bialgebra_equivalent, verify_automorphism, verify_isomorphism
from .parser import format_algebra, format_dual, parse_dual_statements, parse_file
from .scalars import GradedDims
from .solver import solve_duals
from .supermatrix import SuperMatrix, parse_matrix

__all__ = ["main", "run_command"]


class _Report:
    """Ordered check rows plus text commentary, rendered per --format."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.rows = []
        self.lines = []

    def add(self, entry, check, count, ok, extra=""):
        self.rows.append((str(entry), str(check), int(count), bool(ok), extra))

    def say(self, line):
        self.lines.append(line)

    @property
    def ok(self):
        return all(ok for _, _, _, ok, _ in self.rows)

    def render(self, out):
        if self.fmt == "records":
            for entry, check, count, ok, extra in self.rows:
                status = "pass" if ok else "fail"
                line = (f"entry={entry} check={check} "
                        f"residual_nonzero_count={count} status={status}")
                if extra:
                    line += f" {extra}"
                print(line, file=out)
            return
        if self.rows:
            we = max(len(r[0]) for r in self.rows)
            wc = max(len(r[1]) for r in self.rows)
            for entry, check, count, ok, extra in self.rows:
                status = "pass" if ok else "FAIL"
                line = (f"{entry:<{we}}  {check:<{wc}}  "
                        f"residual_nonzero_count={count:<4} {status}")
                if extra:
                    line += f"  {extra}"
                print(line, file=out)
        for line in self.lines:
            print(line, file=out)


def _parse_sets(items):
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise SuperBialgError(f"bad --set {item!r}; expected name=value")
        try:
            out[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SuperBialgError(f"bad --set value {value!r}: {exc}") from exc
    return out


def _plain_names(dims):
    return tuple(f"X{i}" for i in dims.indices())


def _resolve(ident, sets):
    name, adef = catalog.resolve_algebra(ident)
    g = adef.build()
    sub = {k: v for k, v in sets.items() if k in g.params}
    return name, (g.subs_params(sub) if sub else g)


def _dual_from_spec(spec, primal, sets):
    d = parse_dual_statements(spec, primal, gen_names=_plain_names(primal.dims))
    return d.subs_params(sets) if sets else d


def _structure_rows(rep, tag, g, as_dual):
    if as_dual:
        d = algebra_as_dual(g)
        v = d.validate_structure()
        rep.add(tag, "dual_structure", len(v), not v)
        r = dual_jacobi_residual(d)
        rep.add(tag, "dual_super_jacobi", len(r), not r)
    else:
        v = g.validate_structure()
        rep.add(tag, "structure", len(v), not v)
        r = g.super_jacobi_residual()
        rep.add(tag, "super_jacobi", len(r), not r)


def _add_entry_report(rep, er):
    # aggregate each check over the entry's sample grid
    order, agg = [], {}
    for _, checks in er.rows:
        for c in checks:
            if c.name not in agg:
                agg[c.name] = [0, True]
                order.append(c.name)
            agg[c.name][0] += c.nonzero_count
            agg[c.name][1] = agg[c.name][1] and c.ok
    for name in order:
        count, ok = agg[name]
        rep.add(er.entry_id, name, count, ok)


def _cmd_check(args, rep):
    sets = _parse_sets(args.set)
    if os.path.exists(args.target):
        parsed = parse_file(args.target)
        for name in sorted(parsed.algebras):
            g = parsed.algebras[name].build()
            sub = {k: v for k, v in sets.items() if k in g.params}
            if sub:
                g = g.subs_params(sub)
            _structure_rows(rep, name, g, args.as_dual)
        for eid in sorted(parsed.pairs):
            pd = parsed.pairs[eid]
            if pd.primal_name in parsed.algebras:
                g0 = parsed.algebras[pd.primal_name].build()
            else:
                g0 = catalog.resolve_algebra(pd.primal_name)[1].build()
            er = catalog.verify_entry(pd, primal=g0)
            _add_entry_report(rep, er)
    else:
        name, g = _resolve(args.target, sets)
        _structure_rows(rep, name, g, args.as_dual)


def _cmd_duals(args, rep):
    sets = _parse_sets(args.set)
    name, g = _resolve(args.algebra, sets)
    families = solve_duals(g)
    for idx, fam in enumerate(families, start=1):
        rep.add(name, f"family{idx}", 0, True,
                extra=f"dim={fam.dimension} constraints={len(fam.constraints)}")
        rep.say(f"family {idx}: {fam.describe()}")
        stmts = format_dual(fam.dual())
        if stmts:
            rep.say(f"  {stmts}")
        else:
            rep.say("  (zero cobracket)")
    rep.say(f"{len(families)} famil{'y' if len(families) == 1 else 'ies'}")


def _pair_objects(args, sets):
    name, adef = catalog.resolve_algebra(args.algebra)
    g0 = adef.build()
    d = _dual_from_spec(args.dual, g0, sets)
    sub = {k: v for k, v in sets.items() if k in g0.params}
    g = g0.subs_params(sub) if sub else g0
    return name, g, d


def _cmd_pair(args, rep):
    sets = _parse_sets(args.set)
    name, g, d = _pair_objects(args, sets)
    for c in catalog.entry_checks(g, d):
        rep.add(name, c.name, c.nonzero_count, c.ok)


def _cmd_double(args, rep):
    sets = _parse_sets(args.set)
    name, g, d = _pair_objects(args, sets)
    dbl = build_double(g, d, name=f"double({name})")
    rep.add(name, "double_closure", 0 if dbl.valid else 1, dbl.valid)
    r = dbl.algebra.super_jacobi_residual()
    rep.add(name, "double_super_jacobi", len(r), not r)
    r = pairing_ad_invariance(dbl)
    rep.add(name, "pairing_ad_invariance", len(r), not r)
    if args.emit:
        names = [""] * dbl.algebra.dims.total
        for i, pos in sorted(dbl.primal_positions.items()):
            names[pos - 1] = f"X{i}"
        for i, pos in sorted(dbl.dual_positions.items()):
            names[pos - 1] = f"Xt{i}"
        rep.say(format_algebra(dbl.algebra, gen_names=names,
                               name=f"double_{name}").rstrip("\n"))


def _cmd_aut(args, rep):
    sets = _parse_sets(args.set)
    name, g = _resolve(args.algebra, sets)
    if args.family_verify:
        if name not in catalog.AUT_FAMILIES:
            known = ", ".join(sorted(catalog.AUT_FAMILIES))
            raise SuperBialgError(
                f"no automorphism family shipped for {name!r}; have: {known}")
        res = catalog.verify_family(g, catalog.AUT_FAMILIES[name],
                                    sample_count=args.count)
        rep.add(name, "aut_family_symbolic",
                len(res["symbolic_residual"]), res["symbolic_ok"])
        rep.add(name, "aut_family_members",
                len(res["member_failures"]), res["members_ok"])
        rep.add(name, "aut_family_closure",
                len(res["closure_failures"]), res["closure_ok"])
    else:
        M = parse_matrix(args.matrix, g.dims)
        res = verify_automorphism(g, M)
        extra = "" if res["matrix_ok"] else "matrix=invalid"
        rep.add(name, "automorphism",
                res["residual_nonzero_count"], res["ok"], extra=extra)
        for prob in res["matrix_problems"]:
            rep.say(f"matrix: {prob}")


def _cmd_iso(args, rep):
    sets = _parse_sets(args.set)
    sname, gs = _resolve(args.src, sets)
    dname, gd = _resolve(args.dst, sets)
    C = parse_matrix(args.matrix, gs.dims)
    res = verify_isomorphism(gs, gd, C)
    extra = "" if res["matrix_ok"] else "matrix=invalid"
    rep.add(f"{sname}->{dname}", "isomorphism",
            res["residual_nonzero_count"], res["ok"], extra=extra)
    for prob in res["matrix_problems"]:
        rep.say(f"matrix: {prob}")


def _cmd_equiv(args, rep):
    sets = _parse_sets(args.set)
    name, adef = catalog.resolve_algebra(args.algebra)
    g0 = adef.build()
    d1 = _dual_from_spec(args.d1, g0, sets)
    d2 = _dual_from_spec(args.d2, g0, sets)
    sub = {k: v for k, v in sets.items() if k in g0.params}
    g = g0.subs_params(sub) if sub else g0
    if name not in catalog.AUT_FAMILIES:
        known = ", ".join(sorted(catalog.AUT_FAMILIES))
        raise SuperBialgError(
            f"no automorphism family shipped for {name!r}; have: {known}")
    b1 = parse_matrix(args.b1, g.dims)
    b2 = parse_matrix(args.b2, g.dims)
    res = bialgebra_equivalent(g, d1, d2, b1, b2, catalog.AUT_FAMILIES[name])
    extra = (f"same_reference={str(res['same_reference']).lower()} "
             f"connector_in_family={str(res['connector_in_family']).lower()}")
    rep.add(name, "bialgebra_equivalent",
            0 if res["equivalent"] else 1, res["equivalent"], extra=extra)
    if res["detail"]:
        detail = res["detail"]
        if isinstance(detail, dict):
            detail = " ".join(f"{k}={v}" for k, v in sorted(detail.items()))
        rep.say(f"detail: {detail}")


def _cmd_catalog(args, rep):
    overrides = None
    if args.samples:
        with open(args.samples, encoding="utf-8") as fh:
            overrides = catalog.parse_sample_overrides(fh.read())
    reports = catalog.verify_catalog(
        table=args.table, entry_id=args.entry, sample_overrides=overrides)
    if not reports:
        raise SuperBialgError("no catalog entries matched the filter")
    for er in reports:
        _add_entry_report(rep, er)
    passed = sum(1 for er in reports if er.ok)
    rep.say(f"{passed}/{len(reports)} pass")
    if args.figures:
        from .report import render_catalog_figures
        for path in render_catalog_figures(reports, args.figures):
            rep.say(f"figure: {path}")


def _cmd_sdet(args, rep):
    rows = parse_matrix(args.matrix)
    if args.dims:
        try:
            m, n = (int(x) for x in args.dims.split(","))
        except ValueError as exc:
            raise SuperBialgError(f"bad --dims {args.dims!r}; expected m,n") from exc
        dims = GradedDims(m, n)
    else:
        dims = GradedDims(len(rows), 0)
    M = SuperMatrix(dims, rows)
    value = M.sdet()
    rep.add("matrix", "sdet", 0, not value.is_zero(), extra=f"value={value}")
    rep.say(f"sdet = {value}")


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text",
                        help="report rendering (default text)")
    setter = argparse.ArgumentParser(add_help=False)
    setter.add_argument("--set", action="append", metavar="NAME=VALUE",
                        help="pin a parameter to an exact rational")

    top = argparse.ArgumentParser(
        prog="superbialg",
        description="exact certification of Lie superalgebra / super-bialgebra data",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common, setter],
                       help="validate structure and super Jacobi for a file or catalog id")
    p.add_argument("target", help="definition file path or shipped algebra id")
    p.add_argument("--as-dual", action="store_true",
                   help="read the structure as a dual (check the dual identities)")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("duals", parents=[common, setter],
                       help="solve the compatible-dual system for a shipped algebra")
    p.add_argument("algebra")
    p.set_defaults(fn=_cmd_duals)

    p = sub.add_parser("pair", parents=[common, setter],
                       help="full residual battery for an algebra with an explicit dual")
    p.add_argument("algebra")
    p.add_argument("--dual", required=True, metavar="STMTS",
                   help='dual statements on plain names, e.g. "{X2,X2} = i*X1"')
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("double", parents=[common, setter],
                       help="build the double and certify its closure")
    p.add_argument("algebra")
    p.add_argument("--dual", required=True, metavar="STMTS")
    p.add_argument("--emit", action="store_true",
                   help="print the double as a definition block")
    p.set_defaults(fn=_cmd_double)

    p = sub.add_parser("aut", parents=[common, setter],
                       help="verify one automorphism matrix or a whole shipped family")
    p.add_argument("algebra")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--matrix", metavar="M",
                     help='matrix literal "[a,b; c,d]", rows ; separated')
    grp.add_argument("--family-verify", action="store_true")
    p.add_argument("--count", type=int, default=5,
                   help="samples per parameter for --family-verify (default 5)")
    p.set_defaults(fn=_cmd_aut)

    p = sub.add_parser("iso", parents=[common, setter],
                       help="verify an isomorphism matrix between two shipped algebras")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--matrix", required=True, metavar="C")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("equiv", parents=[common, setter],
                       help="one-sided bialgebra equivalence certificate (true => equivalent)")
    p.add_argument("algebra")
    p.add_argument("--d1", required=True, metavar="STMTS")
    p.add_argument("--d2", required=True, metavar="STMTS")
    p.add_argument("--b1", required=True, metavar="M")
    p.add_argument("--b2", required=True, metavar="M")
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("catalog", parents=[],
                       help="operations on the shipped pair catalog")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    pv = csub.add_parser("verify", parents=[common],
                         help="certify catalog entries over their sample grids")
    pv.add_argument("--table", type=int, choices=(4, 5, 6))
    pv.add_argument("--entry", help="single entry id, e.g. t4-01")
    pv.add_argument("--samples", metavar="FILE",
                    help="sample override file: 'entry: param = v1, v2' per line")
    pv.add_argument("--figures", metavar="DIR",
                    help="also render pass/fail figures into DIR")
    pv.set_defaults(fn=_cmd_catalog)

    p = sub.add_parser("sdet", parents=[common],
                       help="superdeterminant of a matrix literal")
    p.add_argument("matrix", metavar="M")
    p.add_argument("--dims", metavar="m,n",
                   help="graded shape; default treats all rows as bosonic")
    p.set_defaults(fn=_cmd_sdet)
    return top


def run_command(argv, out=None) -> int:
    """Parse argv, run the subcommand, render the report. 0 iff all pass."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    rep = _Report(args.format)
    try:
        args.fn(args, rep)
    except SuperBialgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rep.render(out)
    return 0 if rep.ok else 1


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
