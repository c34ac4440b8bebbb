"""Batch command-line front end.

Commands: qspace, frame (build/classify/census/orbifold/pair), lie
(solve/ledger/tables) and verify.  JSON is the canonical output format;
csv and markdown render the same rows for eyeballing.  Exit codes:
0 success, 1 falsification or mismatch, 2 usage, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import codes as codes_mod
from . import framed, liesolver, modlabels, quadspace, tables
from .gf2 import FalsificationError, ResourceLimitError, UsageError

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _workers() -> int:
    raw = os.environ.get("SF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(payload: dict, rows: list[dict] | None, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    if rows is None:
        rows = [payload]
    headers: list[str] = []
    for row in rows:
        for key in row:
            if key not in headers:
                headers.append(key)
    if fmt == "csv":
        print(",".join(headers))
        for row in rows:
            print(",".join(str(row.get(h, "")) for h in headers))
    else:  # markdown
        print("| " + " | ".join(headers) + " |")
        print("|" + "|".join("---" for _ in headers) + "|")
        for row in rows:
            print("| " + " | ".join(str(row.get(h, "")) for h in headers) + " |")


# ---------------------------------------------------------------------------
# qspace
# ---------------------------------------------------------------------------


def cmd_qspace(args) -> int:
    if args.dim % 2 or args.dim <= 0:
        raise UsageError("--dim must be even and positive")
    space = (
        quadspace.standard_plus(args.dim)
        if args.type == "plus"
        else quadspace.standard_minus(args.dim)
    )
    singular, nonsingular = quadspace.singular_census(space, workers=_workers())
    expect = quadspace.lnum_closed(args.dim // 2, args.type == "plus")
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "qspace",
        "dim": args.dim,
        "type": args.type,
        "singular_nonzero": singular,
        "nonsingular": nonsingular,
        "closed_form_match": (singular, nonsingular) == expect,
        "arf_type": str(quadspace.type_of(space)),
    }
    _emit(payload, [payload], args.format)
    return EXIT_OK if payload["closed_form_match"] else EXIT_FALSIFIED


# ---------------------------------------------------------------------------
# frame
# ---------------------------------------------------------------------------


def _parse_case_token(token: str) -> framed.TCCase:
    kind, _, rest = token.partition(":")
    bits = rest.split(",")
    if kind == "even":
        return framed.even_case(int(bits[0]), int(bits[1]), int(bits[2]), bits[3])
    if kind == "odd":
        return framed.odd_case(int(bits[0]), int(bits[1]), int(bits[2]))
    raise UsageError(f"bad case token {token!r}; use even:m,k1,k2,[+-] or odd:m,k1,k2")


def cmd_frame_build(args) -> int:
    if args.type is None:
        case = framed.odd_case(args.m, args.k1, args.k2)
    else:
        eps = {"plus": "+", "minus": "-"}[args.type]
        case = framed.even_case(args.m, args.k1, args.k2, eps)
    sub = framed.build_case(case, seed=args.seed)
    n1, n2 = framed.profile(sub)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "frame build",
        "case": str(case),
        "profile": [n1, n2],
        "profile_closed_form": list(framed.lnumber_closed(case)),
        "weight1": 8 * n1 + n2,
        "classified": str(framed.classify_triple(sub)),
        "subspace": framed.to_text(sub).splitlines(),
    }
    _emit(payload, [payload], args.format)
    ok = payload["classified"] == str(case) and payload["profile"] == payload[
        "profile_closed_form"
    ]
    return EXIT_OK if ok else EXIT_FALSIFIED


def cmd_frame_classify(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    sub = framed.from_text(text)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "frame classify",
        "classified": str(framed.classify_triple(sub)),
        "profile": list(framed.profile(sub)),
    }
    _emit(payload, [payload], args.format)
    return EXIT_OK


def cmd_frame_census(args) -> int:
    report = framed.census_small(args.m)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "frame census",
        "m": report.m,
        "total": report.total,
        "product_formula": framed.mts_count_formula(args.m),
        "per_case": report.per_case,
        "orbit_count": report.orbit_count,
        "per_case_orbits": report.per_case_orbits,
        "built_cases_in_distinct_orbits": report.built_distinct,
    }
    rows = [
        {"case": c, "count": n, "orbits": report.per_case_orbits.get(c, 0)}
        for c, n in report.per_case.items()
    ]
    _emit(payload, rows, args.format)
    return EXIT_OK if report.built_distinct else EXIT_FALSIFIED


def cmd_frame_orbifold(args) -> int:
    base = _parse_case_token(args.base)
    sub = framed.build_case(base, seed=args.seed)
    if args.w != "section47":
        raise UsageError("only the prescribed --w section47 construction is available")
    choices = framed.section47_orbifold_choices(sub, limit=args.choices)
    if not choices:
        raise UsageError("no valid orbifold vector for this base case")
    rows = []
    for s0, t0, w in choices:
        out = framed.z2_orbifold(sub, w)
        rows.append(
            {
                "t0": t0,
                "s0": s0,
                "classified": str(framed.classify_triple(out)),
            }
        )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "frame orbifold",
        "base": str(base),
        "results": rows,
    }
    _emit(payload, rows, args.format)
    return EXIT_OK


def cmd_frame_pair(args) -> int:
    sub = framed.build_pair_case(args.case, seed=args.seed)
    inv = framed.rho_invariants(sub)
    data = framed.weight1_dim_pair(sub)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "frame pair",
        "case": args.case,
        "dim_rho1": inv["rho1"].dim,
        "dim_rho1_of_kernel": inv["rho1_of_kernel2"].dim,
        "dim_rho2_of_kernel": inv["rho2_of_kernel1"].dim,
        "weight1_formula": sum(data["terms"]),
        "weight1_direct": data["direct"],
        "terms": list(data["terms"]),
        "row3_in_rho1": data["row3_in_rho1"],
        "kernel_rows": {str(k): v for k, v in data["kernel_rows"].items() if v},
        "subspace": framed.to_text(sub).splitlines(),
    }
    _emit(payload, [payload], args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# lie
# ---------------------------------------------------------------------------


def _parse_constraint_token(token: str) -> liesolver.Constraint:
    kind, _, rest = token.partition(":")
    if kind == "rank":
        return liesolver.TotalRank(int(rest))
    if kind == "ideal":
        bits = rest.split(":")
        return liesolver.IdealExists(
            int(bits[0]), int(bits[1]) if len(bits) > 1 else None
        )
    if kind == "rootideal":
        return liesolver.RootSpaceIdeal(int(rest))
    if kind == "rootpart":
        return liesolver.RootSpacePartition(tuple(int(x) for x in rest.split(",")))
    if kind == "partition":
        blocks = tuple(
            (int(b.split("/")[0]), int(b.split("/")[1])) for b in rest.split(",")
        )
        return liesolver.PartitionDims(blocks)
    raise UsageError(f"unknown constraint {token!r}")


def cmd_lie_solve(args) -> int:
    constraints = [_parse_constraint_token(t) for t in args.constraint]
    sols = liesolver.decompose(args.dim, constraints)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "lie solve",
        "dim": args.dim,
        "ratio": str(liesolver.ratio_from_dim(args.dim)),
        "constraints": args.constraint,
        "solutions": [str(s) for s in sols],
        "unique": len(sols) == 1,
    }
    rows = [{"solution": str(s), "rank": s.total_rank} for s in sols]
    _emit(payload, rows, args.format)
    return EXIT_OK


def cmd_lie_ledger(args) -> int:
    reports = liesolver.run_ledger(args.ledger)
    rows = [
        {
            "case": r.case_id,
            "dim": r.dim_computed,
            "published_dim": r.dim_published,
            "answer": r.answer,
            "solutions": len(r.solutions),
            "uniqueness": r.uniqueness,
            "status": "MATCH" if r.ok else "MISMATCH: " + "; ".join(r.problems),
        }
        for r in reports
    ]
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "lie ledger",
        "cases": rows,
        "identification_notes": [
            {"case": r.case_id, "identified": r.identified}
            for r in reports
            if r.identified
        ],
        "all_match": all(r.ok for r in reports),
    }
    _emit(payload, rows, args.format)
    return EXIT_OK if payload["all_match"] else EXIT_FALSIFIED


def cmd_lie_tables(args) -> int:
    ok = True
    if args.which in ("ta8", "ta16"):
        published = tables.TA8_ROWS if args.which == "ta8" else tables.TA16_ROWS
        reports = {r.case_id: r for r in liesolver.run_ledger(args.ledger)}
        rows = []
        for case_id, dim, alg, number, ref in published:
            rep = reports[case_id]
            match = (
                rep.ok
                and rep.dim_computed == dim
                and liesolver.parse_decomposition(alg)
                == liesolver.parse_decomposition(rep.answer)
                and rep.schellekens == number
            )
            ok &= match
            rows.append(
                {
                    "case": case_id,
                    "dim": dim,
                    "algebra": alg,
                    "no": number,
                    "ref": ref,
                    "status": "MATCH" if match else "MISMATCH",
                }
            )
    elif args.which == "lieframed":
        cov = liesolver.lieframed_coverage()
        rows = [
            {
                "no": c["no"],
                "dim": c["dim"],
                "algebra": c["algebra"],
                "sources": "; ".join(c["sources"]),
                "status": "COVERED" if c["ok"] else "UNCOVERED",
            }
            for c in cov
        ]
        ok = all(c["ok"] for c in cov)
    else:
        raise UsageError(f"unknown table {args.which!r}")
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": "lie tables",
        "which": args.which,
        "rows": rows,
        "all_match": ok,
    }
    _emit(payload, rows, args.format)
    return EXIT_OK if ok else EXIT_FALSIFIED


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def _verify_checks(quick: bool, ledger_path: str | None):
    """Yield (name, callable) pairs; callables raise on failure."""
    from fractions import Fraction

    from .modlabels import (
        ZERO_PLUS,
        coordinatize,
        orbit_class,
        random_label,
        rx_add,
        rx_census,
    )

    published = {row[0]: row[1] for row in tables.TA8_ROWS}

    def weight_one(case_str):
        case = _parse_case_token(case_str.replace("(", ":").replace(")", ""))
        sub = framed.build_case(case, seed=0)
        n1, n2 = framed.profile(sub)
        assert (n1, n2) == framed.lnumber_closed(case), "profile vs closed form"
        assert 8 * n1 + n2 == published[str(case)], "published weight-one value"
        assert framed.classify_triple(sub) == case, "classification round-trip"

    for case_str in published:
        yield f"weight_one_{case_str}", (lambda c=case_str: weight_one(c))

    def lnum(dim, plus):
        space = (
            quadspace.standard_plus(dim) if plus else quadspace.standard_minus(dim)
        )
        got = quadspace.singular_census(space)
        assert got == quadspace.lnum_closed(dim // 2, plus), got

    for dim in range(2, 19, 2):
        for plus in (True, False):
            name = f"lnum_{'plus' if plus else 'minus'}_{dim}"
            yield name, (lambda d=dim, p=plus: lnum(d, p))

    if not quick:
        yield "table2_census", lambda: rx_census()

    def minnorm_sample():
        import random as _r

        rng = _r.Random(20260810)
        n = 0
        while n < 10**4:
            lbl = random_label(rng, twisted=False)
            if lbl.lam() == (0, 0, 0):
                continue  # the zero coset is split by sign, not by norms
            orbit_class(lbl, verify=True)
            n += 1

    yield "table2_minnorm_sample", minnorm_sample

    pair_expect = {
        "pcl5_3": (132, 36),
        "pcl4_3": (288, 192),
        "pcl4_4": (216, 144),
        "pcl4_5": (144, 96),
        "pcl4_6": (72, 48),
        "niemeier_a17e7": (456, 144),
    }

    def pair(case_id):
        value, row3 = pair_expect[case_id]
        sub = framed.build_pair_case(case_id, seed=0)
        data = framed.weight1_dim_pair(sub)
        assert data["value"] == value and data["direct"] == value, data["terms"]
        assert data["row3_in_rho1"] == row3, data["row3_in_rho1"]

    for case_id in pair_expect:
        yield f"pair_{case_id}", (lambda c=case_id: pair(c))

    def census(m):
        report = framed.census_small(m)
        assert report.total == framed.mts_count_formula(m), report.total
        assert report.built_distinct, report.built_case_orbits

    yield "census_m1", lambda: census(1)
    if not quick:
        yield "census_m2", lambda: census(2)

    def orbifold():
        sub = framed.build_odd(5, 4, 0, seed=0)
        choices = framed.section47_orbifold_choices(sub, limit=3)
        assert len(choices) >= 3
        for _, _, w in choices:
            out = framed.z2_orbifold(sub, w)
            assert framed.classify_triple(out) == framed.even_case(5, 3, 0, "+")

    yield "orbifold_section47", orbifold

    def candidate_tables():
        rep = liesolver.candidate_table_report()
        bad = [r["case"] for r in rep if not r["ok"]]
        assert not bad, bad

    yield "lie_candidate_tables", candidate_tables

    def ledger():
        reports = liesolver.run_ledger(ledger_path)
        bad = [(r.case_id, r.problems) for r in reports if not r.ok]
        assert not bad, bad

    yield "lie_ledger", ledger

    def coverage():
        cov = liesolver.lieframed_coverage()
        assert all(c["ok"] for c in cov), [c for c in cov if not c["ok"]]

    yield "lie_lieframed_coverage", coverage

    def codes_rm():
        assert codes_mod.dual(codes_mod.reed_muller(1, 4)) == codes_mod.reed_muller(2, 4)

    yield "codes_rm_duality", codes_rm

    def codes_doubling():
        d = codes_mod.doubling(codes_mod.builtin("e8"))
        assert d.length == 16 and d.dim == 5
        assert codes_mod.is_triply_even(d) and codes_mod.contains_all_ones(d)

    yield "codes_doubling_e8", codes_doubling

    def codes_48():
        de8 = codes_mod.doubling(codes_mod.builtin("e8"))
        trip = codes_mod.direct_sum(codes_mod.direct_sum(de8, de8), de8)
        mixed = codes_mod.direct_sum(de8, codes_mod.doubling(codes_mod.builtin("d16plus")))
        for c in (trip, mixed):
            assert c.length == 48
            assert codes_mod.is_triply_even(c) and codes_mod.contains_all_ones(c)

    yield "codes_length48_conditions", codes_48

    def codes_d16plus():
        c = codes_mod.builtin("d16plus")
        assert codes_mod.is_self_dual(c) and codes_mod.is_doubly_even(c) and c.dim == 8

    yield "codes_d16plus", codes_d16plus

    def codes_golay():
        we = codes_mod.weight_enumerator(codes_mod.builtin("g24"))
        assert we[0] == 1 and we[8] == 759 and we[12] == 2576 and we[16] == 759 and we[24] == 1

    yield "codes_golay_enumerator", codes_golay

    def fusion_laws():
        import random as _r

        rng = _r.Random(7)
        for _ in range(2000):
            a, b, c = (random_label(rng) for _ in range(3))
            assert rx_add(a, b) == rx_add(b, a)
            assert rx_add(rx_add(a, b), c) == rx_add(a, rx_add(b, c))
            assert rx_add(a, a) == ZERO_PLUS

    yield "fusion_group_laws", fusion_laws

    def polarization():
        import random as _r

        rng = _r.Random(8)
        for dim in (10, 18, 28):
            space = quadspace.standard_plus(dim)
            for _ in range(500):
                a, b = rng.getrandbits(dim), rng.getrandbits(dim)
                assert space.bilinear(a, b) == space.q(a ^ b) ^ space.q(a) ^ space.q(b)

    yield "polarization_identity", polarization

    if not quick:

        def coords_census():
            got = quadspace.singular_census(coordinatize().space)
            assert got == (131327, 130816), got

        yield "label_coordinates_census", coords_census

    def rv_check():
        rv = modlabels.rv_model()
        assert quadspace.singular_census(rv.space) == (527, 496)
        counts = {}
        for v in range(1 << 10):
            lw, _ = rv.lowest(v)
            counts[lw] = counts.get(lw, 0) + 1
        assert counts == {Fraction(0): 1, Fraction(1): 527, Fraction(1, 2): 496}

    yield "small_label_classifier", rv_check

    def seeds():
        for seed in range(3):
            assert framed.weight1_dim_triple(framed.build_even(5, 4, 1, "+", seed)) == 384
        for seed in range(2):
            assert framed.build_pair_case_weight1("pcl4_6", seed) == 72

    yield "seed_invariance", seeds

    def roundtrips():
        sub = framed.build_even(2, 0, 0, "-", seed=0)
        assert framed.from_text(framed.to_text(sub)).sub.rows == sub.sub.rows
        code = codes_mod.builtin("g24")
        assert codes_mod.from_text(codes_mod.to_text(code)) == code
        lbl = modlabels.RXLabel(1, 0, 0b0110, 1, 1)
        assert modlabels.parse_label(modlabels.format_label(lbl)) == lbl

    yield "serialization_roundtrips", roundtrips


def cmd_verify(args) -> int:
    t0 = time.time()
    passed = failed = 0
    for name, fn in _verify_checks(args.quick, args.ledger):
        try:
            fn()
        except Exception as exc:  # report and continue: the summary decides
            failed += 1
            print(f"FAIL {name}: {exc}")
        else:
            passed += 1
            print(f"PASS {name}")
    total = passed + failed
    print(
        f"verify: {passed}/{total} checks passed in {time.time() - t0:.1f}s"
        + (" [quick]" if args.quick else "")
    )
    return EXIT_OK if failed == 0 else EXIT_FALSIFIED


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framedlie",
        description="GF(2) quadratic-space classification toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "csv", "markdown"), default="json")
        p.add_argument("--seed", type=int, default=0)

    q = sub.add_parser("qspace", help="singular census of a standard space")
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--type", choices=("plus", "minus"), required=True)
    add_common(q)
    q.set_defaults(fn=cmd_qspace)

    f = sub.add_parser("frame", help="subspace builders and censuses")
    fsub = f.add_subparsers(dest="subcommand", required=True)

    fb = fsub.add_parser("build")
    fb.add_argument("--m", type=int, required=True)
    fb.add_argument("--k1", type=int, required=True)
    fb.add_argument("--k2", type=int, required=True)
    fb.add_argument("--type", choices=("plus", "minus"))
    add_common(fb)
    fb.set_defaults(fn=cmd_frame_build)

    fc = fsub.add_parser("classify")
    fc.add_argument("--input", required=True, help="subspace text file, or - for stdin")
    add_common(fc)
    fc.set_defaults(fn=cmd_frame_classify)

    fcen = fsub.add_parser("census")
    fcen.add_argument("--m", type=int, required=True)
    add_common(fcen)
    fcen.set_defaults(fn=cmd_frame_census)

    fo = fsub.add_parser("orbifold")
    fo.add_argument("--base", required=True, help="e.g. odd:5,4,0")
    fo.add_argument("--w", default="section47")
    fo.add_argument("--choices", type=int, default=3)
    add_common(fo)
    fo.set_defaults(fn=cmd_frame_orbifold)

    fp = fsub.add_parser("pair")
    fp.add_argument("--case", required=True, choices=framed.PAIR_CASE_IDS)
    add_common(fp)
    fp.set_defaults(fn=cmd_frame_pair)

    l = sub.add_parser("lie", help="affine type identification")
    lsub = l.add_subparsers(dest="subcommand", required=True)

    ls = lsub.add_parser("solve")
    ls.add_argument("--dim", type=int, required=True)
    ls.add_argument("--constraint", action="append", default=[])
    add_common(ls)
    ls.set_defaults(fn=cmd_lie_solve)

    ll = lsub.add_parser("ledger")
    ll.add_argument("--ledger", default=None)
    add_common(ll)
    ll.set_defaults(fn=cmd_lie_ledger)

    lt = lsub.add_parser("tables")
    lt.add_argument("--which", required=True, choices=("ta8", "ta16", "lieframed"))
    lt.add_argument("--ledger", default=None)
    add_common(lt)
    lt.set_defaults(fn=cmd_lie_tables)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("--quick", action="store_true")
    v.add_argument("--ledger", default=None)
    add_common(v)
    v.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FalsificationError, framed.ConstructionError) as exc:
        print(f"falsification: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED


if __name__ == "__main__":
    sys.exit(main())
