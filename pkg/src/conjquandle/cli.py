"""Command-line front end.

Exit codes: 0 all verdicts positive and audits clean, 1 some negative verdict
or audit violation, 2 usage or input error, 3 enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from . import perm as P
from . import report
from .checks import witness_bruteforce
from .errors import BoundExceeded, DegreeTooSmall, QuandleError
from .groups import DEFAULT_BOUND, FiniteGroup
from .quandle import ConjugationQuandle, product_quandle
from .survey import SurveyConfig, build_group, class_record, run_survey
from .symwitness import construct_sym_witness

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, multi: bool = False) -> None:
    action = "append" if multi else "store"
    p.add_argument("--catalog", action=action, metavar="FAMILY:PARAM",
                   help="catalog group, e.g. symmetric:5, dihedral:10, cyclic:6, symmetric:3*cyclic:2")
    p.add_argument("--file", action=action, metavar="PATH", help="group file")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, metavar="N", help="enumeration bound")
    p.add_argument("--audit", action="store_true", help="run all cross-checks")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--json", metavar="PATH", help="write the JSON report here instead of stdout")
    p.add_argument("--csv", metavar="PATH", help="write a CSV summary (one row per class)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="conjquandle", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"conjquandle {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="list conjugacy classes of a group")
    _common(p)

    p = sub.add_parser("check", help="check the class quandle of one element")
    _common(p)
    p.add_argument("--element", required=True, metavar="CYCLES")

    p = sub.add_parser("witness", help="build the explicit S_n/A_n witness for an element")
    _common(p)
    p.add_argument("--element", required=True, metavar="CYCLES")

    p = sub.add_parser("survey", help="check every class of many groups")
    _common(p, multi=True)
    p.add_argument("--max-order", type=int, default=500, metavar="N")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--samples", type=int, default=0, metavar="N",
                   help="seeded random product-quandle pairs to check")
    p.add_argument("--figures", metavar="DIR", help="render summary figures into DIR")

    p = sub.add_parser("product-check", help="Hayashi property of a product of two class quandles")
    _common(p, multi=True)
    p.add_argument("--element", action="append", metavar="CYCLES",
                   help="give twice, pairing with --catalog/--file in order")
    return ap


def _source(args) -> str:
    if bool(args.catalog) == bool(args.file):
        raise UsageError("give exactly one of --catalog or --file")
    return args.catalog if args.catalog else f"file:{args.file}"


def _emit(doc: dict, args) -> None:
    if args.json:
        report.write_json(doc, args.json)
    else:
        sys.stdout.write(report.dumps(doc))
    if args.csv:
        report.write_csv(doc["groups"], args.csv)


def _config(args, **extra) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k not in ("json", "csv", "figures")}
    cfg.update(extra)
    return cfg


def cmd_classes(args) -> int:
    spec = _source(args)
    G = build_group(spec, args.bound)
    classes = [{"index": i, "representative": G.fmt(C.representative), "size": len(C),
                "element_order": G.element_order(C.representative)}
               for i, C in enumerate(G.conjugacy_classes())]
    groups = [{"source": spec, "name": G.name, "order": G.order(), "classes": classes, "error": None}]
    doc = report.document("classes", _config(args), groups,
                          {"classes": len(classes), "sizes": [c["size"] for c in classes]})
    _emit(doc, args)
    return EXIT_OK


def cmd_check(args) -> int:
    spec = _source(args)
    G = build_group(spec, args.bound)
    e = G.parse_element(args.element)
    C = G.conjugacy_class(e)
    rec = class_record(G, C, 0, audit=args.audit)
    Q = ConjugationQuandle(G, C.members)
    rec["connected_criterion"] = Q.is_connected_criterion()
    rec["blocks_in_h"] = [len(b) for b in G.split_class_in_subgroup(C, Q.generated)]
    try:
        rec["h_order"] = Q.generated.order()
        rec["center_order"] = len(Q.generated.center())
    except BoundExceeded:
        pass
    groups = [{"source": spec, "name": G.name, "order": G.order(), "classes": [rec], "error": None}]
    negative = (not rec["hayashi"] or rec["goodness"]["verdict"] != "good"
                or rec["connected_direct"] != rec["connected_criterion"]
                or bool(rec["audit"] and rec["audit"]["issues"]))
    summary = {"connected": rec["connected_direct"], "hayashi": rec["hayashi"],
               "good": rec["goodness"]["verdict"] == "good", "h_order": rec["h_order"]}
    _emit(report.document("check", _config(args), groups, summary), args)
    return EXIT_NEGATIVE if negative else EXIT_OK


def cmd_witness(args) -> int:
    spec = _source(args)
    G = build_group(spec, args.bound)
    if not (G.family and G.family[0] in ("symmetric", "alternating")):
        raise UsageError("witness needs --catalog symmetric:N or alternating:N")
    n = G.family[1]
    if n < 5:
        raise DegreeTooSmall(f"the construction needs n >= 5, got n = {n}")
    e = G.parse_element(args.element)
    w = construct_sym_witness(e, n)
    body = {
        "element": P.format_cycles(e),
        "order": P.order(e),
        "case": w.case,
        "relabel": P.format_cycles(w.relabel),
        "sigma": P.format_cycles(w.sigma),
        "sigma_parity": w.sigma_parity,
        "z": P.format_cycles(w.z),
        "z_in_class": P.cycle_structure(w.z) == P.cycle_structure(e),
        "checks": [{"k": c.k, "point": c.point, "z_ek": c.z_ek, "ek_z": c.ek_z} for c in w.checks],
    }
    if args.audit:
        C = G.conjugacy_class(e)
        H = G.generated_subgroup(C.members)
        zb = witness_bruteforce(e, C, G, H)
        body["bruteforce_witness"] = None if zb is None else P.format_cycles(zb)
    ok = body["sigma_parity"] == "even" and len(w.checks) == body["order"] - 1
    doc = report.document("witness", _config(args), [], {"ok": ok, "checks": len(w.checks)},
                          extra={"witness": body})
    _emit(doc, args)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_survey(args) -> int:
    sources = list(args.catalog or []) + [f"file:{f}" for f in (args.file or [])]
    if not sources:
        raise UsageError("survey needs at least one --catalog or --file source")
    cfg = SurveyConfig(sources=sources, max_order=args.max_order, enumeration_bound=args.bound,
                       audit_mode=args.audit, seed=args.seed, parallelism=args.jobs,
                       product_samples=args.samples)
    result = run_survey(cfg)
    groups, summary = result["groups"], result["summary"]
    doc = report.document("survey", _config(args), groups, summary,
                          extra={"product_samples": result["product_samples"]})
    if args.json:
        report.write_json(doc, args.json)
    if args.csv:
        report.write_csv(groups, args.csv)
    if args.figures:
        from .plotting import write_figures

        summary["figures"] = write_figures(groups, args.figures)
    for g in groups:
        if g["error"]:
            print(f"{g['name']}\terror\t{g['error']['message']}")
            continue
        verdicts = {c["goodness"]["verdict"] for c in g["classes"]}
        print(f"{g['name']}\torder={g['order']}\tclasses={len(g['classes'])}\t{'/'.join(sorted(verdicts))}")
    print("summary\t" + "\t".join(f"{k}={v}" for k, v in summary.items() if k not in ("methods", "figures")))
    if summary["groups_failed"] == summary["groups"]:
        return EXIT_BOUND if summary["bound_exceeded"] else EXIT_USAGE
    if summary["not_good"] or summary["audit_failures"] or summary["product_failures"] \
            or summary["hayashi"] != summary["classes"]:
        return EXIT_NEGATIVE
    if summary["groups_failed"]:
        return EXIT_BOUND if summary["bound_exceeded"] else EXIT_USAGE
    return EXIT_OK


def cmd_product_check(args) -> int:
    cats, files, elems = args.catalog or [], args.file or [], args.element or []
    sources = cats + [f"file:{f}" for f in files]
    if len(sources) != 2 or len(elems) != 2:
        raise UsageError("product-check needs two group sources and two --element values")
    quandles = []
    groups = []
    for spec, text in zip(sources, elems):
        G: FiniteGroup = build_group(spec, args.bound)
        e = G.parse_element(text)
        C = G.conjugacy_class(e)
        quandles.append((spec, G, e, ConjugationQuandle(G, C.members)))
        groups.append({"source": spec, "name": G.name, "order": G.order(),
                       "classes": [class_record(G, C, 0, audit=False)], "error": None})
    (s1, G1, e1, Q1), (s2, G2, e2, Q2) = quandles
    try:
        Qp = product_quandle(Q1, Q2)
    except BoundExceeded as exc:
        raise BoundExceeded(exc.bound, f"product of quandles of sizes {len(Q1)} and {len(Q2)}") from None
    from .checks import product_cycle_lengths_ok

    h1, h2, hp = Q1.has_hayashi_property(), Q2.has_hayashi_property(), Qp.has_hayashi_property()
    body = {"left_size": len(Q1), "right_size": len(Q2), "product_size": len(Qp),
            "left_hayashi": h1, "right_hayashi": h2, "product_hayashi": hp,
            "lcm_cycle_lengths": product_cycle_lengths_ok(Q1, Q2, Qp)}
    implication = (not (h1 and h2)) or hp
    doc = report.document("product-check", _config(args), groups,
                          {"implication_holds": implication, "product_hayashi": hp},
                          extra={"product": body})
    _emit(doc, args)
    return EXIT_OK if implication and body["lcm_cycle_lengths"] and hp else EXIT_NEGATIVE


COMMANDS = {"classes": cmd_classes, "check": cmd_check, "witness": cmd_witness,
            "survey": cmd_survey, "product-check": cmd_product_check}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, QuandleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
