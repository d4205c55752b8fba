"""Command-line entry point and JSON report serialization.

Exit codes: 0 every check passed, 1 findings present, 2 usage or input error.
The census report schema is
{"schema_version": 1, "group": {"type","rank","q"}, "classes": [...],
 "findings": [...]}, with matrices as row-major integer arrays.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

SCHEMA_VERSION = 1


def _field(args):
    from .gfq import make_field

    q = args.q
    p, k = _prime_power(q)
    return make_field(p, k)


def _prime_power(q: int):
    from .gfq import is_prime

    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1 or not is_prime(p):
                raise ValueError("q must be a prime power")
            return p, k
    raise ValueError("q must be a prime power")


def _group(args):
    from .matgroup import build_group

    return build_group(args.type, args.rank, _field(args))


def census_payload(result) -> dict:
    from .sphericity import group_descriptor

    return {
        "schema_version": SCHEMA_VERSION,
        "group": group_descriptor(result.group),
        "classes": [r.to_json() for r in result.reports],
        "findings": result.findings,
    }


def write_report(payload: dict, path: str | None):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def cmd_roots(args) -> int:
    from .rootsys import build_root_system

    rs = build_root_system(args.type, args.rank)
    print(f"{args.type}{args.rank}: {len(rs.positive_roots)} positive roots")
    for g in rs.positive_roots:
        kind = "long" if rs.is_long(g) else "short"
        print(f"  {g}  height {rs.height(g)}  {kind}")
    if args.out:
        write_report(
            {
                "schema_version": SCHEMA_VERSION,
                "type": args.type,
                "rank": args.rank,
                "positive_roots": [list(g) for g in rs.positive_roots],
                "cartan_matrix": [list(r) for r in rs.cartan],
            },
            args.out,
        )
    return 0


def cmd_weyl(args) -> int:
    from .rootsys import build_root_system
    from .weyl import WeylGroup

    W = WeylGroup(build_root_system(args.type, args.rank))
    elements = W.elements()
    involutions = [w for w in elements if W.is_involution(w)]
    print(f"|W| = {len(elements)}, involutions: {len(involutions)}")
    print(f"longest element length: {W.length(W.longest())}")
    for pi, w in W.standard_involutions():
        print(
            f"  w0*w_Pi for Pi = {sorted(pi)}: length {W.length(w)},"
            f" rk(1-w) = {W.rank_one_minus(w)}"
        )
    return 0


def cmd_census(args) -> int:
    from .sphericity import census

    G = _group(args)
    result = census(G, budget=args.budget)
    payload = census_payload(result)
    for rep in result.reports:
        status = "ok " if rep.theorem_ok else "FAIL"
        print(
            f"[{status}] class {rep.class_id}: size {rep.class_size},"
            f" dim {rep.dim_class}, z length {len(rep.z)},"
            f" involutions-only {rep.all_involutions},"
            f" spherical-by-dim {rep.spherical_by_dim}"
        )
    for f in result.findings:
        print(f"finding: {json.dumps(f, sort_keys=True)}")
    write_report(payload, args.out)
    print(f"{len(result.reports)} classes, {len(result.findings)} findings")
    return 0 if result.all_ok else 1


def cmd_check_theorem(args) -> int:
    return cmd_census(args)


def cmd_class(args) -> int:
    from . import bruhat, conjclass
    from .sphericity import theorem_check

    G = _group(args)
    with open(args.rep) as fh:
        data = json.load(fh)
    entries = data["matrix"] if isinstance(data, dict) else data
    rep = np.array(entries, dtype=np.int64).reshape(G.d, G.d)
    codes = G.enumerate_elements(budget=args.budget)
    code = G.pack(rep[None])[0]
    idx = np.searchsorted(codes, code)
    if idx >= len(codes) or codes[idx] != code:
        print("matrix is not an element of the group", file=sys.stderr)
        return 2
    classes = conjclass.conjugacy_classes(G, budget=args.budget)
    cls = next(c for c in classes if code in set(int(v) for v in c.codes))
    report = theorem_check(G, cls)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "group": report.group,
        "classes": [report.to_json()],
        "findings": [] if report.theorem_ok else [{"check": "theorem", "class_id": 0}],
    }
    print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    write_report(payload, args.out)
    return 0 if report.theorem_ok else 1


def cmd_cases(args) -> int:
    findings = []
    lines = []
    if args.case == "g2":
        from .cases.g2 import g2_trace

        for v in g2_trace(args.q):
            lines.append(f"[{'ok ' if v.ok else 'FAIL'}] (F{v.q}) {v.chain}: {v.step}")
            if not v.ok:
                findings.append(
                    {"check": "g2-chain", "chain": v.chain, "step": v.step, "q": v.q}
                )
    elif args.case == "spn":
        from .cases.families import sp_char_poly_count

        npolys, nmulti = sp_char_poly_count(args.n, _field(args))
        ok = npolys == nmulti
        lines.append(
            f"[{'ok ' if ok else 'FAIL'}] x(D,A) family: {npolys} characteristic"
            f" polynomials vs {nmulti} diagonal multisets"
        )
        if not ok:
            findings.append({"check": "sp-family", "q": args.q, "n": args.n})
    elif args.case == "son":
        from .cases.families import so_witnesses

        for w in so_witnesses(args.n, _field(args)):
            ok = w.in_big_cell and w.dim_class == args.n * args.n + args.n
            lines.append(
                f"[{'ok ' if ok else 'FAIL'}] {w.name}: big cell {w.in_big_cell},"
                f" dim {w.dim_class}, unipotent {w.unipotent}, jordan {w.jordan}"
            )
            if not ok:
                findings.append({"check": "so-witness", "name": w.name, "q": args.q})
    elif args.case == "bigcell":
        from .cases.bigcell import scan_group

        G = _group(args)
        for rep in scan_group(G, budget=args.budget):
            lines.append(
                f"[{'ok ' if rep.ok else 'FAIL'}] big-cell class with"
                f" {rep.n_big_cell_reps} representatives"
            )
            if not rep.ok:
                findings.append({"check": "bigcell-scan", "group": rep.group})
    elif args.case == "curves":
        from . import conjclass, sphericity
        from .cases.curves import applicable_roots, curve_check

        G = _group(args)
        for cls in conjclass.conjugacy_classes(G, budget=args.budget):
            conjclass.analyze_class(G, cls)
            if not sphericity.is_spherical_by_dim(G, cls):
                continue
            x = conjclass.max_cell_representative(G, cls)
            if x is None:
                findings.append({"check": "curves", "error": "no representative"})
                continue
            for gamma in applicable_roots(G, x):
                v = curve_check(G, x, gamma)
                lines.append(
                    f"[{'ok ' if v.ok else 'FAIL'}] class size {cls.size},"
                    f" root {gamma}: {v.case} ({v.failures}/{v.tested} failures)"
                )
                if not v.ok:
                    findings.append(
                        {"check": "curves", "root": list(gamma), "case": v.case}
                    )
    for line in lines:
        print(line)
    if args.out:
        write_report(
            {"schema_version": SCHEMA_VERSION, "case": args.case, "findings": findings},
            args.out,
        )
    return 1 if findings else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borbits",
        description="Bruhat cells and spherical conjugacy classes over small finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_flags(p, need_q=True):
        p.add_argument("--type", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)
        if need_q:
            p.add_argument("--q", required=True, type=int)
        p.add_argument("--budget", type=int, default=10**7)
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for compatibility; kernels are vectorized")
        p.add_argument("--out", default=None)

    p = sub.add_parser("roots", help="list the positive roots of a type")
    p.add_argument("--type", required=True, choices=list("ABCDEFG"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("weyl", help="Weyl group summary and standard involutions")
    p.add_argument("--type", required=True, choices=list("ABCDEFG"))
    p.add_argument("--rank", required=True, type=int)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("census", help="full conjugacy-class census of a group")
    add_group_flags(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("check-theorem", help="census plus theorem verdict per class")
    add_group_flags(p)
    p.set_defaults(func=cmd_check_theorem)

    p = sub.add_parser("class", help="analyze the class of one matrix")
    add_group_flags(p)
    p.add_argument("--rep", required=True, help="JSON file with a row-major matrix")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser(
        "cases", aliases=["paperlab"], help="explicit case replications"
    )
    p.add_argument("case", choices=["g2", "spn", "son", "bigcell", "curves"])
    p.add_argument("--q", type=int, default=5)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--type", default="C", choices=list("ABCDG"))
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_cases)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
