"""Command-line front end.

Subcommands: reduce, basis, tableaux, rep, jm, baxter, check.  Output is
human-readable text by default and JSON with --json; matrices are always
emitted as nested arrays of scalar strings.  `--out FILE` writes the
output to a file instead of stdout (a relative path is placed under
$CYCLOHECKE_OUTPUT_DIR when that is set).

Exit codes: 0 success, 1 assertion/check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import Algebra, NormalWord
from .exprparse import (
    ExpressionRangeError,
    ParseError,
    TauInverseError,
    parse_to_element,
)
from .h2bax import baxter_report, h2_one_dim, h2_two_dim
from .scalars import Field, ParamSpec, is_semisimple_spec
from .seminormal import (
    build_representation,
    jm_matrix,
    representation_to_jsonable,
    verify_defining_relations,
)
from .tableaux import (
    as_mpartition,
    content_string,
    enumerate_mpartitions,
    enumerate_standard_tableaux,
)
from .verify import (
    GlobalRep,
    NonSemisimpleSpecError,
    basis_image_rank,
    completeness_report,
    default_spec,
    flatness_certificate,
    morphism_check,
    spectrum_report,
)

OUTPUT_DIR_ENV = "CYCLOHECKE_OUTPUT_DIR"


def _add_common(p, need_n=True):
    p.add_argument("-m", type=int, required=True, help="cyclotomic degree (>= 1)")
    if need_n:
        p.add_argument("-n", type=int, required=True, help="number of strands (>= 0)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", help="write output to this file")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cyclohecke",
        description="exact computations in the cyclotomic Hecke algebras H(m,1,n)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="normal form of a word/expression")
    _add_common(p)
    p.add_argument("expression", help="e.g. 's1 s2 s1' or 't^2 + (q - q^-1) s1'")
    p.add_argument("--allow-tau-inverse", action="store_true",
                   help="permit t^-1 (assumes every v_j is nonzero)")

    p = sub.add_parser("basis", help="enumerate the normal-word basis")
    _add_common(p)
    p.add_argument("--count", action="store_true", help="print only the count")

    p = sub.add_parser("tableaux", help="m-partitions, tableaux, content strings")
    _add_common(p)
    p.add_argument("--shape", help="restrict to one shape, e.g. '[[2,1],[]]'")

    p = sub.add_parser("rep", help="seminormal representation matrices")
    _add_common(p, need_n=False)
    p.add_argument("--shape", required=True, help="m-partition as JSON, e.g. '[[2],[1]]'")

    p = sub.add_parser("jm", help="Jucys-Murphy element and matrices")
    _add_common(p)
    p.add_argument("-i", type=int, required=True, help="JM index, 1..n")

    p = sub.add_parser("baxter", help="verify the Baxterized-element identities")
    _add_common(p)

    p = sub.add_parser("check", help="run the verification suites for (m, n)")
    _add_common(p)
    p.add_argument("--q", default="2", help="numeric q for the oracle (default 2)")
    p.add_argument("--v", help="comma-separated v values (default 1,3,7 truncated)")
    p.add_argument("--pairs", type=int, default=50,
                   help="random pairs for the morphism check (default 50)")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument("--skip-rank", action="store_true",
                   help="skip the basis-image rank computation")
    return ap


def _emit(args, text_lines, payload):
    if args.json:
        body = json.dumps(payload, indent=2, default=str)
    else:
        body = "\n".join(text_lines)
    if args.out:
        path = args.out
        base = os.environ.get(OUTPUT_DIR_ENV)
        if base and not os.path.isabs(path):
            path = os.path.join(base, path)
        with open(path, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _spec_from_args(args):
    m = args.m
    if args.v:
        v_vals = [Fraction(x) for x in args.v.split(",")]
    else:
        v_vals = list((1, 3, 7)[:m])
    return ParamSpec(m, Fraction(args.q), v_vals)


def _word_str(w: NormalWord) -> str:
    return str(w)


def cmd_reduce(args):
    algebra = Algebra(args.m, args.n)
    elem = parse_to_element(args.expression, algebra, args.allow_tau_inverse)
    payload = {
        "m": args.m,
        "n": args.n,
        "expression": args.expression,
        "normal_form": str(elem),
        "terms": [
            {"word": _word_str(w), "factors": [list(p) for p in reversed(w)],
             "coefficient": str(c)}
            for w, c in sorted(elem.items(), key=lambda kv: kv[0].sort_key())
        ],
    }
    _emit(args, [str(elem)], payload)
    return 0


def cmd_basis(args):
    algebra = Algebra(args.m, args.n)
    words = algebra.enumerate_basis()
    if args.count:
        _emit(args, [str(len(words))], {"m": args.m, "n": args.n, "count": len(words)})
        return 0
    lines = [f"[{w}]" for w in words]
    payload = {
        "m": args.m,
        "n": args.n,
        "count": len(words),
        "words": [{"word": _word_str(w), "factors": [list(p) for p in reversed(w)]}
                  for w in words],
    }
    _emit(args, lines, payload)
    return 0


def cmd_tableaux(args):
    m, n = args.m, args.n
    shapes = [as_mpartition(json.loads(args.shape), m)] if args.shape \
        else enumerate_mpartitions(m, n)
    lines = []
    items = []
    for shape in shapes:
        tabs = enumerate_standard_tableaux(shape)
        lines.append(f"shape {list(map(list, shape))}: {len(tabs)} standard tableaux")
        entry = {"shape": [list(c) for c in shape], "count": len(tabs), "tableaux": []}
        for t in tabs:
            cs = content_string(t)
            lines.append(f"  {t.to_rows()}  contents {cs}")
            entry["tableaux"].append({
                "rows": t.to_rows(),
                "content_pairs": [list(p) for p in cs.pairs],
            })
        items.append(entry)
    payload = {"m": m, "n": n, "shapes": items}
    _emit(args, lines, payload)
    return 0


def cmd_rep(args):
    shape = as_mpartition(json.loads(args.shape), args.m)
    rep = build_representation(shape, Field(args.m))
    payload = representation_to_jsonable(rep)
    lines = [json.dumps(payload, indent=2)]
    _emit(args, lines, payload)
    return 0


def cmd_jm(args):
    algebra = Algebra(args.m, args.n)
    elem = algebra.jm_element(args.i)
    field = algebra.field
    blocks = []
    for shape in enumerate_mpartitions(args.m, args.n):
        rep = build_representation(shape, field)
        mat = jm_matrix(rep, args.i)
        blocks.append({
            "shape": [list(c) for c in shape],
            "matrix": [[str(c) for c in row] for row in mat],
        })
    payload = {
        "m": args.m, "n": args.n, "i": args.i,
        "element": str(elem),
        "blocks": blocks,
    }
    lines = [f"J_{args.i} = {elem}"]
    for b in blocks:
        lines.append(f"shape {b['shape']}: diag "
                     + ", ".join(b["matrix"][k][k] for k in range(len(b["matrix"]))))
    _emit(args, lines, payload)
    return 0


def cmd_baxter(args):
    report = baxter_report(args.m, args.n)
    field = Field(args.m)

    def mats(rep):
        return {
            "X": [[str(c) for c in row] for row in rep.x_matrix],
            "Y": [[str(c) for c in row] for row in rep.y_matrix],
            "sigma": [[str(c) for c in row] for row in rep.sigma_matrix],
        }

    rank2 = {
        "one_dim_plus": mats(h2_one_dim(field.v(1), 1)),
        "one_dim_minus": mats(h2_one_dim(field.v(1), -1)),
    }
    if args.m >= 2:
        rank2["two_dim"] = mats(h2_two_dim(field.v(1), field.v(2)))
    report["rank_two_representations"] = rank2
    lines = [f"{name}: {'ok' if ok else 'FAILED'}" for name, ok in report["checks"].items()]
    lines.append("all ok" if report["ok"] else "FAILED")
    _emit(args, lines, report)
    return 0 if report["ok"] else 1


def cmd_check(args):
    m, n = args.m, args.n
    spec = _spec_from_args(args)
    lines = []
    results = {"m": m, "n": n, "spec": repr(spec)}
    if not is_semisimple_spec(spec, n):
        msg = f"spec {spec} fails the semisimplicity conditions for n={n}; refusing to run"
        _emit(args, [msg], {**results, "semisimple": False, "ok": False})
        return 1
    results["semisimple"] = True
    ok = True

    comp = completeness_report(m, n)
    results["completeness"] = comp
    ok &= comp["equal"]
    lines.append(f"completeness: sum d^2 = {comp['sum_of_squares']} vs n! m^n = "
                 f"{comp['group_order']} -> {'ok' if comp['equal'] else 'FAILED'}")

    field = Field(m)
    rel_ok = True
    for shape in enumerate_mpartitions(m, n):
        rep = build_representation(shape, field)
        if not verify_defining_relations(rep):
            rel_ok = False
            lines.append(f"relations FAILED for shape {shape}")
    results["representation_relations"] = rel_ok
    ok &= rel_ok
    lines.append(f"representation relations: {'ok' if rel_ok else 'FAILED'}")

    spect = spectrum_report(GlobalRep(m, n, field=field))
    results["spectrum"] = {k: spect[k] for k in
                           ("jm_diagonal", "all_content_strings",
                            "pairwise_distinct", "matches_tableau_strings", "ok")}
    ok &= spect["ok"]
    lines.append(f"spectrum structure: {'ok' if spect['ok'] else 'FAILED'}")

    g = GlobalRep(m, n, spec, field)
    algebra = Algebra(m, n, field)
    mc = morphism_check(g, algebra, pairs=args.pairs, seed=args.seed)
    results["morphism"] = mc
    ok &= mc["ok"]
    lines.append(f"oracle morphism on {mc['pairs']} pairs: "
                 f"{'ok' if mc['ok'] else 'FAILED'}")

    if not args.skip_rank:
        rk = basis_image_rank(g, algebra)
        results["rank"] = rk
        ok &= rk["full_rank"]
        lines.append(f"basis image rank: {rk['rank']}/{rk['basis_size']} "
                     f"-> {'ok' if rk['full_rank'] else 'FAILED'}")

    if n <= 3:
        fc = flatness_certificate(algebra)
        results["flatness"] = fc
        ok &= fc["ok"]
        lines.append(f"flatness certificate on {fc['checked']} products: "
                     f"{'ok' if fc['ok'] else 'FAILED'}")

    results["ok"] = ok
    lines.append("all checks passed" if ok else "CHECKS FAILED")
    _emit(args, lines, results)
    return 0 if ok else 1


_COMMANDS = {
    "reduce": cmd_reduce,
    "basis": cmd_basis,
    "tableaux": cmd_tableaux,
    "rep": cmd_rep,
    "jm": cmd_jm,
    "baxter": cmd_baxter,
    "check": cmd_check,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, ExpressionRangeError, TauInverseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NonSemisimpleSpecError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
