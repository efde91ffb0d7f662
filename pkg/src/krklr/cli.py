"""Command line entry point: ``krklr <command> ...``.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
"""
import argparse
import json
import sys

from .cartan import FAMILIES, MIN_RANK, CartanError, build_cartan

FORMATS = ("dot", "json", "text")


class UsageError(Exception):
    pass


def _common(p, typed=True, depth=True):
    if typed:
        p.add_argument("--type", choices=FAMILIES, dest="family")
        p.add_argument("--rank", type=int)
    if depth:
        p.add_argument("--depth", type=int, default=6)
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--out")


def build_parser():
    ap = argparse.ArgumentParser(prog="krklr", description="Crystal and KLR-module verification tools.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify-all", help="run every suite")
    _common(p)
    p.add_argument("--maxlen", type=int, default=10)
    p.add_argument("--i", type=int, dest="i")
    p.add_argument("--no-timing", action="store_true")

    p = sub.add_parser("cartan", help="Cartan data")
    p.add_argument("action", choices=["dump"])
    _common(p, depth=False)

    p = sub.add_parser("kr", help="the B^{1,1} graphs")
    p.add_argument("action", choices=["dump"])
    _common(p, depth=False)

    p = sub.add_parser("paths", help="paths on B^{1,1}")
    p.add_argument("action", choices=["enumerate"])
    _common(p, depth=False)
    p.add_argument("--maxlen", type=int, default=10)
    p.add_argument("--cyclotomic-only", action="store_true")

    p = sub.add_parser("tmod", help="the modules T(p,k)")
    p.add_argument("action", choices=["check"])
    _common(p, depth=False)
    p.add_argument("--path", required=True, help="comma separated colors, e.g. 0,2,3")

    p = sub.add_parser("crystal", help="highest-weight crystals")
    p.add_argument("action", choices=["build"])
    _common(p)
    p.add_argument("--weight", required=True, help="L<i>, e.g. L0")

    p = sub.add_parser("categorify", help="node decompositions")
    p.add_argument("action", choices=["verify", "decompose"])
    _common(p)
    p.add_argument("--i", type=int, dest="i")
    p.add_argument("--node", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("appendix", help="rank-2 catalog")
    p.add_argument("action", choices=["b2"])
    _common(p, typed=False, depth=False)
    return ap


def _datum(args, need=True):
    if args.family is None:
        if need:
            raise UsageError("--type is required")
        if args.rank is not None:
            raise UsageError("--rank needs --type")
        return None
    rank = args.rank if args.rank is not None else MIN_RANK[args.family]
    try:
        return build_cartan(args.family, rank)
    except CartanError as exc:
        raise UsageError(str(exc))


def _emit(args, text):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _level_one_index(D, i):
    from .paths import forbidden
    if i is None:
        return None
    if i not in D.I:
        raise UsageError("index %d out of range for %s" % (i, D.name()))
    if i in forbidden(D.family, D.rank):
        raise UsageError("forbidden index %d for %s" % (i, D.name()))
    if D.levels[i] != 1:
        raise UsageError("Lambda_%d is not level 1 for %s" % (i, D.name()))
    return i


# ---- commands ---------------------------------------------------------------

def cmd_verify_all(args):
    from . import suites
    D = _datum(args, need=False)
    if D is None and args.i is not None:
        raise UsageError("--i needs --type")
    if args.depth < 1 or args.maxlen < 2:
        raise UsageError("--depth must be >= 1 and --maxlen >= 2")
    i = _level_one_index(D, args.i) if D is not None else None
    targets = [(D.family, D.rank)] if D is not None else [(f, MIN_RANK[f]) for f in FAMILIES]
    reports = []
    for f, r in targets:
        for rep in suites.type_suite(f, r, args.depth, args.maxlen, only=i):
            d = rep.as_dict(timing=not args.no_timing)
            d["type"] = "%s_%d" % (f, r)
            reports.append(d)
    for fn in (suites.anchors_suite, suites.appendix_suite):
        reports.append(fn().as_dict(timing=not args.no_timing))
    ok = all(r["ok"] for r in reports)
    out = {"command": "verify-all", "depth": args.depth, "maxlen": args.maxlen,
           "types": ["%s_%d" % t for t in targets], "ok": ok, "reports": reports}
    if args.format == "json" or args.out:
        _emit(args, json.dumps(out, indent=1, sort_keys=True, ensure_ascii=False))
    if args.format != "json":
        for r in reports:
            line = "%-7s %-14s %s" % ("PASS" if r["ok"] else "FAIL", r["suite"], r.get("type", ""))
            if not args.no_timing:
                line += "  %.2fs" % r["seconds"]
            if r["first_failure"]:
                line += "  first failure: %s" % r["first_failure"]
            print(line.rstrip())
        print("verify-all: %s" % ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def cmd_cartan(args):
    D = _datum(args)
    _emit(args, D.to_json())
    return 0


def cmd_kr(args):
    from .kr import build_b11
    D = _datum(args)
    B = build_b11(D.family, D.rank)
    if args.format == "text":
        raise UsageError("kr dump supports dot and json")
    _emit(args, B.to_dot() if args.format == "dot" else B.to_json())
    return 0


def cmd_paths(args):
    from .paths import enumerate_cyclotomic, enumerate_paths
    D = _datum(args)
    gen = enumerate_cyclotomic if args.cyclotomic_only else enumerate_paths
    lines = [json.dumps(x, ensure_ascii=False) for x in gen(D.family, D.rank, args.maxlen)]
    _emit(args, "\n".join(lines))
    return 0


def cmd_tmod(args):
    from .characters import jump, serre_all
    from .trivial import build_T, building_T_check, closed_form_char, verify_relations
    D = _datum(args)
    try:
        word = tuple(int(x) for x in args.path.split(",") if x.strip())
    except ValueError:
        raise UsageError("--path must be comma separated integers")
    if any(x not in D.I for x in word):
        raise UsageError("color out of range in --path")
    try:
        m = build_T(D.family, D.rank, word)
    except ValueError as exc:
        raise UsageError(str(exc))
    c = m.char()
    errs = verify_relations(m)
    checks = {
        "relations": not errs,
        "closed_form": c.same(closed_form_char(D.family, D.rank, word)),
        "building_T": building_T_check(D.family, D.rank, word)[0],
        "serre": serre_all(c),
    }
    ok = all(checks.values())
    jumps = [jump(c, j) for j in D.I]
    if args.format == "json":
        _emit(args, json.dumps({"path": list(word), "dim": m.dim, "character": c.to_text().split("\n"),
                                "jump": jumps, "checks": checks, "errors": errs, "ok": ok},
                               indent=1, sort_keys=True))
    else:
        lines = ["T(%s), dim %d" % (",".join(map(str, word)), m.dim), c.to_text(),
                 "jump: %s" % " ".join(map(str, jumps))]
        lines += ["%s: %s" % (k, "ok" if v else "FAIL") for k, v in checks.items()]
        lines += errs[:10]
        _emit(args, "\n".join(lines))
    return 0 if ok else 1


def _weight(D, s):
    if not s.startswith("L"):
        raise UsageError("--weight must look like L0")
    try:
        i = int(s[1:])
    except ValueError:
        raise UsageError("--weight must look like L0")
    return _level_one_index(D, i)


def cmd_crystal(args):
    from .hw import BootstrapError, build_cached
    D = _datum(args)
    i = _weight(D, args.weight)
    try:
        G = build_cached(D.family, D.rank, i, args.depth)
    except BootstrapError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    if args.format == "dot":
        _emit(args, G.to_dot("B_L%d" % i, max_depth=args.depth, labels=False))
    elif args.format == "text":
        lines = ["%d depth=%d wt=%s" % (b, G.depth[b], list(G.wt(b))) for b in
                 sorted(G.nodes(), key=lambda b: (G.depth[b], b)) if G.depth[b] <= args.depth]
        lines += ["%d -%d-> %d" % e for e in G.edges() if G.depth[e[2]] <= args.depth]
        _emit(args, "\n".join(lines))
    else:
        _emit(args, G.to_json(max_depth=args.depth))
    return 0


def cmd_categorify(args):
    from .categorify import PsiMap, TheoremFailure, theorem_suite
    from .paths import forbidden
    D = _datum(args)
    i = _level_one_index(D, args.i)
    if args.action == "verify":
        skip = set(forbidden(D.family, D.rank))
        if i is not None:
            skip |= {t for t in D.level_one() if t != i}
        rep = theorem_suite(D.family, D.rank, args.depth, tuple(sorted(skip)))
        if args.json or args.format == "json":
            _emit(args, json.dumps(rep.as_dict(), indent=1, sort_keys=True))
        else:
            lines = ["%s: %d" % kv for kv in sorted(rep.counts.items())]
            lines += rep.failures[:10]
            lines.append("categorify verify: %s" % ("PASS" if rep.ok else "FAIL"))
            _emit(args, "\n".join(lines))
        return 0 if rep.ok else 1
    if i is None or args.node is None:
        raise UsageError("decompose needs --i and --node")
    psi = PsiMap(D.family, D.rank, args.depth + 1)
    G = psi.crystal(i)
    if not 0 <= args.node < len(G):
        raise UsageError("node %d not in the truncated crystal" % args.node)
    if G.depth[args.node] > args.depth:
        raise UsageError("node %d lies below --depth" % args.node)
    try:
        dec = psi.decompose(i, args.node)
    except TheoremFailure as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    d = dec.as_dict(psi.B)
    d["source"] = psi.source(i)
    if args.json or args.format == "json":
        _emit(args, json.dumps(d, indent=1, sort_keys=True, ensure_ascii=False))
    else:
        _emit(args, "b = %s\nR = %d in B(Lambda_%d)\np = (%s)\nk = %d" % (
            d["b"], d["R"], d["source"], ",".join(map(str, d["path"])), d["k"]))
    return 0


def cmd_appendix(args):
    from .appendix import table_rows, verify_catalog, verify_thick_arrows
    rows = table_rows()
    cat = verify_catalog()
    arrows = verify_thick_arrows()
    ok = all(r["ok"] for r in rows) and all(a[4] for a in arrows) and cat["max_depth"] == 7 and all(
        v for k, v in cat.items() if k != "max_depth")
    if args.format == "json":
        _emit(args, json.dumps({"rows": rows, "catalog": cat,
                                "arrows": [list(a) for a in arrows], "ok": ok},
                               indent=1, sort_keys=True, ensure_ascii=False))
    else:
        lines = ["%2d  %-26s %-3d %-3d %-4s  %s" % (r["n"], r["name"], r["jump_i"], r["jump_h"],
                                                    "ok" if r["ok"] else "FAIL", r["char"]) for r in rows]
        lines.insert(0, " n  %-26s %-3s %-3s %-4s  %s" % ("module", "j_i", "j_h", "", "character"))
        _emit(args, "\n".join(lines))
    return 0 if ok else 1


COMMANDS = {
    "verify-all": cmd_verify_all, "cartan": cmd_cartan, "kr": cmd_kr, "paths": cmd_paths,
    "tmod": cmd_tmod, "crystal": cmd_crystal, "categorify": cmd_categorify,
    "appendix": cmd_appendix,
}


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return COMMANDS[args.cmd](args)
    except UsageError as exc:
        print("krklr %s: error: %s" % (args.cmd, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
