"""Command-line surface: verdicts, tables, Chow arithmetic, bundle classes,
and Pfaffian tools, in text or machine-readable JSON.

Exit codes: 0 for success/affirmative verdicts, 1 for negative verdicts,
2 for usage or validation errors. JSON output is canonical (sorted keys,
no whitespace) so that parse + re-serialize round-trips byte-identically;
rationals are emitted as {"num": ..., "den": ...} string pairs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .bundles import ch_tangent, chern_tangent, todd_tangent
from .chow import (
    ChowElement,
    NonHomogeneousError,
    build_h_matrices,
    from_terms,
    multiply,
    pieri,
    reduce_mod_h,
    schubert,
)
from .cone import roberts_verdict, verdict_table
from .partitions import GrassmannShape, enumerate_box, fits_box, normalize_partition
from .pfaffian import AntisymmetricMatrix, classify_B, determinant, pfaffian

GUARD_N = 12


class UsageError(Exception):
    pass


# -- parsing helpers ----------------------------------------------------------


def parse_partition(text: str) -> tuple:
    """Accepts "2,1", "[2,1]", "(2,1)", or "" / "[]" / "0" for the empty one."""
    s = text.strip().strip("[]()")
    if s in ("", "0"):
        return ()
    try:
        parts = tuple(int(p) for p in s.split(","))
    except ValueError:
        raise UsageError(f"malformed partition {text!r}") from None
    try:
        return normalize_partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_class(shape: GrassmannShape, specs: list) -> ChowElement:
    """Terms like "[2,1]:-3/4"; a bare "[2,1]" means coefficient 1.

    Each --class flag may carry several terms separated by whitespace or ';'.
    """
    terms: dict = {}
    for spec in specs:
        for chunk in spec.replace(";", " ").split():
            part, _, coeff = chunk.partition(":")
            lam = parse_partition(part)
            if not fits_box(lam, shape):
                raise UsageError(f"partition {lam} does not fit the box of {shape}")
            try:
                q = Fraction(coeff) if coeff else Fraction(1)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"malformed coefficient in {chunk!r}") from None
            terms[lam] = terms.get(lam, Fraction(0)) + q
    return from_terms(shape, terms)


def make_shape(d: int, n: int) -> GrassmannShape:
    try:
        return GrassmannShape(d, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def check_guard(n: int, force: bool) -> None:
    if n > GUARD_N and not force:
        raise UsageError(
            f"n = {n} exceeds the default guard of {GUARD_N}; pass --force to proceed"
        )


# -- serialization ------------------------------------------------------------


def ser_fraction(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def ser_class(a: ChowElement) -> list:
    ordered = sorted(a.terms, key=lambda p: (sum(p), tuple(-x for x in p)))
    return [
        {"partition": list(lam), "coefficient": ser_fraction(a.terms[lam])}
        for lam in ordered
    ]


def emit_json(command: str, parameters: dict, result) -> None:
    env = {
        "command": command,
        "parameters": parameters,
        "result": result,
        "engine_version": __version__,
        "exact": True,
    }
    print(json.dumps(env, sort_keys=True, separators=(",", ":")))


def diagram(lam: tuple) -> str:
    if not lam:
        return "  (empty)"
    return "\n".join("  " + "[]" * p for p in lam)


def print_class(a: ChowElement, diagrams: bool = False) -> None:
    print(a)
    if diagrams:
        for lam in sorted(a.terms, key=lambda p: (sum(p), tuple(-x for x in p))):
            print(f"  {list(lam)}:")
            for line in diagram(lam).splitlines():
                print("  " + line)


# -- subcommands --------------------------------------------------------------


def cmd_roberts(args) -> int:
    shape = make_shape(args.d, args.n)
    check_guard(args.n, args.force)
    mode = "verdict" if args.verdict_only else "report"
    report = roberts_verdict(shape, mode=mode)
    if args.json:
        payload = {
            "shape": {"d": shape.d, "n": shape.n, "t": shape.dim},
            "cone_dim": report.cone_dim,
            "roberts": report.verdict,
            "witness_degree": report.witness,
            "tau": [
                {
                    "degree": r.degree,
                    "tau_index": r.tau_index,
                    "representative": ser_class(r.representative),
                    "is_zero": r.is_zero,
                }
                for r in report.records
            ],
        }
        emit_json("roberts", {"d": args.d, "n": args.n}, payload)
    else:
        print(f"G_{shape.d}({shape.n}): t = {shape.dim}, cone dimension {report.cone_dim}")
        print(f"Roberts: {'yes' if report.verdict else 'no'}")
        if report.witness is not None:
            rec = report.record(report.witness)
            print(f"witness degree {report.witness}: tau = {rec.representative}")
        print(f"{'degree':>6}  {'tau-index':>9}  {'zero':>4}  representative")
        for r in report.records:
            print(f"{r.degree:>6}  {r.tau_index:>9}  {'yes' if r.is_zero else 'no':>4}  {r.representative}")
    return 0 if report.verdict else 1


def cmd_table(args) -> int:
    if args.max_n < 2:
        raise UsageError("max_n must be at least 2")
    check_guard(args.max_n, args.force)
    try:
        entries = verdict_table(args.max_n, jobs=args.jobs)
    except OSError:
        entries = verdict_table(args.max_n, jobs=None)
    roberts_count = sum(1 for e in entries if e.roberts)
    if args.json:
        payload = {
            "entries": [
                {"d": e.d, "n": e.n, "roberts": e.roberts, "witness_degree": e.witness}
                for e in entries
            ],
            "roberts_count": roberts_count,
            "total": len(entries),
        }
        emit_json("table", {"max_n": args.max_n}, payload)
    else:
        print(f"{'d':>3} {'n':>3}  {'roberts':7}  witness")
        for e in entries:
            w = "-" if e.witness is None else str(e.witness)
            print(f"{e.d:>3} {e.n:>3}  {'yes' if e.roberts else 'no':7}  {w}")
        print(f"Roberts cases: {roberts_count} of {len(entries)}")
    return 0


def cmd_chow(args) -> int:
    shape = make_shape(args.d, args.n)
    params = {"d": args.d, "n": args.n}
    if args.chow_op == "basis":
        if not 0 <= args.degree <= shape.dim:
            raise UsageError(f"degree must lie in [0, {shape.dim}]")
        basis = enumerate_box(shape, args.degree)
        if args.json:
            emit_json("chow.basis", {**params, "degree": args.degree},
                      {"partitions": [list(lam) for lam in basis], "count": len(basis)})
        else:
            print(f"degree {args.degree} basis of G_{shape.d}({shape.n}): {len(basis)} classes")
            for lam in basis:
                print(f"  {list(lam)}")
                if args.diagrams:
                    print(diagram(lam))
        return 0
    if args.chow_op == "pieri":
        lam = parse_partition(args.partition)
        if not fits_box(lam, shape):
            raise UsageError(f"partition {lam} does not fit the box of {shape}")
        result = pieri(schubert(shape, lam), args.m)
        if args.json:
            emit_json("chow.pieri", {**params, "partition": list(lam), "m": args.m},
                      {"class": ser_class(result)})
        else:
            print_class(result, args.diagrams)
        return 0
    if args.chow_op == "multiply":
        lam = parse_partition(args.lam)
        mu = parse_partition(args.mu)
        for p in (lam, mu):
            if not fits_box(p, shape):
                raise UsageError(f"partition {p} does not fit the box of {shape}")
        result = multiply(schubert(shape, lam), schubert(shape, mu))
        if args.json:
            emit_json("chow.multiply", {**params, "lam": list(lam), "mu": list(mu)},
                      {"class": ser_class(result)})
        else:
            print_class(result, args.diagrams)
        return 0
    # reduce
    element = parse_class(shape, args.cls)
    hm = build_h_matrices(shape)
    try:
        rep, is_zero = reduce_mod_h(element, hm)
    except NonHomogeneousError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        emit_json("chow.reduce", {**params, "class": ser_class(element)},
                  {"representative": ser_class(rep), "is_zero": is_zero})
    else:
        print(f"representative: {rep}")
        print(f"zero mod h: {'yes' if is_zero else 'no'}")
    return 0


def cmd_bundle(args) -> int:
    shape = make_shape(args.d, args.n)
    check_guard(args.n, args.force)
    cap = shape.dim if args.max_degree is None else args.max_degree
    if not 0 <= cap <= shape.dim:
        raise UsageError(f"--max-degree must lie in [0, {shape.dim}]")
    hm = build_h_matrices(shape) if args.mod_h else None

    if args.which == "todd":
        td = todd_tangent(shape, max_degree=cap)
        rows = [(k, td.component(k)) for k in range(cap + 1)]
    elif args.which == "ch":
        cht = ch_tangent(shape, max_degree=cap)
        rows = [(k, cht.component(k)) for k in range(cap + 1)]
    else:
        ct = chern_tangent(shape, max_degree=cap)
        rows = [(k, ct.component(k)) for k in range(1, cap + 1)]

    out = []
    for k, cls in rows:
        entry = {"degree": k, "class": ser_class(cls)}
        shown = cls
        if hm is not None and k >= 1:
            rep, is_zero = reduce_mod_h(cls, hm)
            entry["reduced"] = ser_class(rep)
            entry["is_zero"] = is_zero
            shown = rep
        out.append((k, cls, entry, shown))

    if args.json:
        emit_json(
            f"bundle.{args.which}",
            {"d": args.d, "n": args.n, "max_degree": cap, "mod_h": bool(args.mod_h)},
            {"components": [e for _, _, e, _ in out]},
        )
    else:
        label = {"todd": "td", "ch": "ch", "chern": "c"}[args.which]
        suffix = " (reduced mod h)" if args.mod_h else ""
        print(f"{label} of the tangent bundle on G_{shape.d}({shape.n}){suffix}")
        for k, _, _, shown in out:
            print(f"deg {k}: {shown}")
    return 0


def cmd_pfaffian(args) -> int:
    if args.pf_op == "classify":
        try:
            c = classify_B(args.m, args.n2)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.json:
            emit_json("pfaffian.classify", {"m": args.m, "n": args.n2}, {
                "generators": str(c.generators),
                "height": str(c.height),
                "dimension_deficit": str(c.dimension_deficit),
                "is_complete_intersection": c.is_complete_intersection,
                "is_roberts": c.is_roberts,
            })
        else:
            print(f"B_{c.m}({c.n}): generators = {c.generators}, height = {c.height}")
            print(f"CI: {'yes' if c.is_complete_intersection else 'no'}; "
                  f"Roberts: {'yes' if c.is_roberts else 'no'}")
        return 0 if c.is_roberts else 1
    # eval
    try:
        with open(args.file, encoding="utf-8") as fh:
            tokens = fh.read().split()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    if not tokens:
        raise UsageError("empty matrix file")
    try:
        k = int(tokens[0])
        vals = [Fraction(tok) for tok in tokens[1 : 1 + k * k]]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed matrix file: {exc}") from None
    if k < 0 or len(vals) != k * k:
        raise UsageError(f"expected {k}x{k} entries after the size line")
    rows = [vals[i * k : (i + 1) * k] for i in range(k)]
    try:
        z = AntisymmetricMatrix.from_rows(rows)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    pf = pfaffian(z)
    det = determinant(rows)
    if args.json:
        emit_json("pfaffian.eval", {"file": args.file, "size": k}, {
            "pfaffian": ser_fraction(pf),
            "determinant": ser_fraction(det),
            "square_check": pf * pf == det,
        })
    else:
        print(f"Pf  = {pf}")
        print(f"det = {det}")
        print(f"Pf^2 == det: {'yes' if pf * pf == det else 'no'}")
    return 0


# -- argument wiring ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="grasstodd",
        description="Exact Schubert calculus and Roberts-ring verdicts for Grassmannian cones.",
    )
    top.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roberts", help="Roberts-ring verdict for the cone over G_d(n)")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--verdict-only", action="store_true",
                   help="stop at the first nonzero component")
    p.add_argument("--json", action="store_true")
    p.add_argument("--force", action="store_true", help=f"lift the n <= {GUARD_N} guard")
    p.set_defaults(func=cmd_roberts)

    p = sub.add_parser("table", help="verdict grid for all shapes up to max_n")
    p.add_argument("max_n", type=int)
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes for the grid (default: sequential)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--force", action="store_true", help=f"lift the n <= {GUARD_N} guard")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("chow", help="Chow-ring arithmetic on the Schubert basis")
    ops = p.add_subparsers(dest="chow_op", required=True)

    q = ops.add_parser("basis", help="graded basis partitions")
    q.add_argument("d", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--diagrams", action="store_true")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_chow)

    q = ops.add_parser("pieri", help="multiply a Schubert class by sigma_m")
    q.add_argument("d", type=int)
    q.add_argument("n", type=int)
    q.add_argument("partition")
    q.add_argument("m", type=int)
    q.add_argument("--diagrams", action="store_true")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_chow)

    q = ops.add_parser("multiply", help="product of two Schubert classes")
    q.add_argument("d", type=int)
    q.add_argument("n", type=int)
    q.add_argument("lam")
    q.add_argument("mu")
    q.add_argument("--diagrams", action="store_true")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_chow)

    q = ops.add_parser("reduce", help="canonical representative modulo h")
    q.add_argument("d", type=int)
    q.add_argument("n", type=int)
    q.add_argument("--class", dest="cls", action="append", required=True,
                   metavar="TERMS", help='e.g. "[2]:1" or "[2,1]:-3/4 [1,1]:2"')
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_chow)

    p = sub.add_parser("bundle", help="tangent-bundle classes on G_d(n)")
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--todd", dest="which", action="store_const", const="todd")
    which.add_argument("--chern", dest="which", action="store_const", const="chern")
    which.add_argument("--ch", dest="which", action="store_const", const="ch")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--mod-h", action="store_true", help="print components reduced mod h")
    p.add_argument("--json", action="store_true")
    p.add_argument("--force", action="store_true", help=f"lift the n <= {GUARD_N} guard")
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("pfaffian", help="Pfaffian evaluation and ring classification")
    ops = p.add_subparsers(dest="pf_op", required=True)

    q = ops.add_parser("classify", help="complete-intersection / Roberts flags for B_m(n)")
    q.add_argument("m", type=int)
    q.add_argument("n2", type=int, metavar="n")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_pfaffian)

    q = ops.add_parser("eval", help="Pfaffian and determinant of a matrix file")
    q.add_argument("file")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_pfaffian)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
