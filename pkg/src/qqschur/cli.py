"""Command line front end: ``qqschur <command> [flags]``.

Commands: shapes, tableaux, dims, hom, gram, verify.  Output is JSON, CSV
or plain text and is deterministic for a given set of flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Optional

from .bitableaux import (Bicomposition, bipartitions, bitabloid_count, shapes, tableau_json,
                         tableau_str, typed_tableaux)
from .coeff_ring import GENERIC, ModP, Specialization

R_CAP = 5


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------

def _parse_value(text: str, what: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--{what}: cannot read {text!r} as a rational number")


def domain_from_args(args):
    if args.q is None and args.Q is None and not args.char:
        return GENERIC
    q = _parse_value(args.q if args.q is not None else "1", "q")
    Q = _parse_value(args.Q if args.Q is not None else "1", "Q")
    if args.char and (q.denominator != 1 or Q.denominator != 1):
        raise UsageError("over a prime field give integer values for --q and --Q")
    try:
        return Specialization(q, Q, char=args.char or 0)
    except ValueError as e:
        raise UsageError(str(e))


def params_json(domain):
    return domain.describe()


def spec_name(domain):
    return "generic" if domain.is_generic else domain.name


def coeff_str(c) -> str:
    if isinstance(c, ModP):
        return str(int(c))
    return str(c)


def _shape(text: Optional[str], flag: str) -> Optional[Bicomposition]:
    if text is None:
        return None
    try:
        return Bicomposition.parse(text)
    except ValueError as e:
        raise UsageError(f"--{flag}: {e}")


def _check_r(args, r: int):
    if r < 0:
        raise UsageError("--r must be non-negative")
    if r > R_CAP and not args.allow_large:
        raise UsageError(f"r={r} exceeds the default cap of {R_CAP}; pass --allow-large to override")
    if r >= 4:
        from math import factorial
        order = 2 ** r * factorial(r)
        # dense generic matrices dominate: |W_r|^2 coefficient cells
        print(f"note: |W_{r}| = {order}; largest module has {order} bitabloids; "
              f"dense elimination may touch ~{order * order:,} Laurent coefficients",
              file=sys.stderr)


def _n(args, r: int) -> int:
    n = r if args.n is None else args.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    return n


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def emit(args, payload, text_lines: List[str], csv_rows: Optional[List[list]] = None):
    out = sys.stdout
    if args.format == "json":
        json.dump(payload, out, indent=1, sort_keys=False)
        out.write("\n")
    elif args.format == "csv":
        if csv_rows is None:
            raise UsageError(f"{args.command} has no CSV form")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(csv_rows)
        out.write(buf.getvalue())
    else:
        for line in text_lines:
            out.write(line + "\n")


def _pool_map(func, items, jobs: int):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(func, items))
    return [func(x) for x in items]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_shapes(args):
    r = args.r
    _check_r(args, r)
    n = _n(args, r)
    items = bipartitions(r, n) if args.bipartitions else shapes(n, r)
    payload = {"command": "shapes", "r": r, "n": n, "bipartitions_only": bool(args.bipartitions),
               "count": len(items), "shapes": [s.to_json() for s in items]}
    rows = [["first", "second"]] + [[" ".join(map(str, s.first)), " ".join(map(str, s.second))] for s in items]
    emit(args, payload, [str(s) for s in items], rows)
    return 0


def cmd_tableaux(args):
    lam, mu = _shape(args.lam or args.shape, "lambda"), _shape(args.mu, "mu")
    if lam is None or mu is None:
        raise UsageError("tableaux needs --lambda (or --shape) and --mu")
    if lam.size != mu.size:
        raise UsageError("λ and μ must have the same size")
    _check_r(args, lam.size)
    n = mu.n if args.n is None else args.n
    if n < mu.n:
        mu = mu
    elif n > mu.n:
        mu = mu.padded(n)
    Ts = typed_tableaux(lam, mu, args.kind)
    payload = {"command": "tableaux", "lambda": lam.to_json(), "mu": mu.to_json(), "n": n,
               "kind": args.kind, "count": len(Ts), "tableaux": [tableau_json(T) for T in Ts]}
    rows = [["tableau"]] + [[tableau_str(T)] for T in Ts]
    emit(args, payload, [tableau_str(T) for T in Ts], rows)
    return 0


def _dims_job(job):
    lam, n, domain = job
    from .weyl_specht import gram_rank, specht_rank, weyl_dimension

    rec = {"shape": lam.to_json(), "shape_str": str(lam), "params": params_json(domain),
           "dim_M": bitabloid_count(lam)}
    if lam.stripped().is_bipartition():
        s = lam.stripped()
        rec["dim_S"] = specht_rank(s, domain)
        rec["dim_W"] = weyl_dimension(s, n)
        rec["dim_F"] = gram_rank(s, n, domain)
    return rec


def cmd_dims(args):
    domain = domain_from_args(args)
    shape = _shape(args.shape or args.lam, "shape")
    if shape is not None:
        r = shape.size
        lams = [shape]
    else:
        r = args.r
        lams = bipartitions(r)
    _check_r(args, r)
    n = _n(args, r)
    recs = _pool_map(_dims_job, [(lam, n, domain) for lam in lams], args.jobs)
    payload = {"command": "dims", "r": r, "n": n, "params": params_json(domain), "records": recs}
    keys = ["dim_M", "dim_S", "dim_W", "dim_F"]
    text = [f"{rec['shape_str']}: " + " ".join(f"{k[4:]}={rec[k]}" for k in keys if k in rec) for rec in recs]
    rows = [["shape"] + keys] + [[rec["shape_str"]] + [rec.get(k, "") for k in keys] for rec in recs]
    emit(args, payload, text, rows)
    return 0


def _hom_job(job):
    lam, mu, domain, with_basis = job
    from .schur import hom_oracle, standard_basis

    spec = None if domain.is_generic else domain
    basis = standard_basis(lam, mu, domain)
    dim = hom_oracle(lam, mu, spec)[0]
    rec = {"lambda": lam.to_json(), "mu": mu.to_json(), "pair": f"{lam} -> {mu}",
           "params": params_json(domain), "basis_size": len(basis), "oracle_dim": dim,
           "agree": dim == len(basis)}
    if with_basis:
        items = []
        for t, phi in basis:
            d, v, u = t.windows()
            items.append({"d": list(d.window), "v": list(v.window), "u": list(u.window),
                          "gen_image": [[tableau_json(phi.tgt.basis[k]), coeff_str(c)]
                                        for k, c in sorted(phi.gen_image.items())]})
        rec["basis"] = items
    return rec


def cmd_hom(args):
    domain = domain_from_args(args)
    lam, mu = _shape(args.lam, "lambda"), _shape(args.mu, "mu")
    if (lam is None) != (mu is None):
        raise UsageError("give both --lambda and --mu, or neither (all pairs for --r)")
    if lam is not None:
        if lam.size != mu.size:
            raise UsageError("λ and μ must have the same size")
        r = lam.size
        pairs = [(lam, mu)]
    else:
        r = args.r
        n = _n(args, r)
        S = shapes(n, r)
        pairs = [(a, b) for a in S for b in S]
    _check_r(args, r)
    recs = _pool_map(_hom_job, [(a, b, domain, args.basis) for a, b in pairs], args.jobs)
    ok = all(rec["agree"] for rec in recs)
    payload = {"command": "hom", "r": r, "params": params_json(domain), "all_agree": ok, "records": recs}
    text = [f"{rec['pair']}: basis {rec['basis_size']}, oracle {rec['oracle_dim']}"
            + ("" if rec["agree"] else "  MISMATCH") for rec in recs]
    rows = [["lambda", "mu", "basis_size", "oracle_dim", "agree"]] + [
        [str(Bicomposition.parse(rec["lambda"])), str(Bicomposition.parse(rec["mu"])),
         rec["basis_size"], rec["oracle_dim"], rec["agree"]] for rec in recs]
    emit(args, payload, text, rows)
    return 0 if ok else 1


def cmd_gram(args):
    from .coeff_ring import matrix_rank
    from .weyl_specht import gram

    domain = domain_from_args(args)
    lam = _shape(args.shape or args.lam, "shape")
    if lam is None:
        raise UsageError("gram needs --shape")
    lam = lam.stripped()
    if not lam.is_bipartition():
        raise UsageError(f"{lam} is not a bipartition")
    r = lam.size
    _check_r(args, r)
    n = _n(args, r)
    labels, mat = gram(lam, n, domain)
    rank = matrix_rank(mat, None if domain.is_generic else domain) if labels else 0
    names = [f"{mu}:{tableau_str(T)}" for mu, T in labels]
    cells = [[coeff_str(c) for c in row] for row in mat]
    payload = {"command": "gram", "shape": lam.to_json(), "n": n, "params": params_json(domain),
               "labels": [{"mu": mu.to_json(), "tableau": tableau_json(T)} for mu, T in labels],
               "matrix": cells, "rank": rank, "dim_W": len(labels), "dim_F": rank}
    rows = [[""] + names] + [[names[i]] + cells[i] for i in range(len(names))]
    text = [f"Gram matrix of {lam} ({len(labels)}x{len(labels)}, generic)" if domain.is_generic
            else f"Gram matrix of {lam} ({len(labels)}x{len(labels)}) at {spec_name(domain)}",
            f"rank (dim F) = {rank}, dim W = {len(labels)}"]
    text += [f"{names[i]}: " + ", ".join(cells[i]) for i in range(len(names))]
    emit(args, payload, text, rows)
    return 0


def _verify_job(job):
    from .verify import run_suite

    name, r = job
    return run_suite(name, r)


def cmd_verify(args):
    from .verify import suite_names

    name = args.suite_pos or args.suite
    if not name:
        raise UsageError("verify needs a suite name or 'all'")
    names = suite_names() if name == "all" else [name]
    unknown = [x for x in names if x not in suite_names()]
    if unknown:
        raise UsageError(f"unknown suite {unknown[0]!r}; known: all, {', '.join(suite_names())}")
    if args.r is not None:
        _check_r(args, args.r)
    results = _pool_map(_verify_job, [(x, args.r) for x in names], args.jobs)
    ok = all(res.passed for res in results)
    payload = {"command": "verify", "r": args.r, "passed": ok, "results": [res.to_json() for res in results]}
    rows = [["suite", "passed", "checks", "failures", "counterexample"]] + [
        [res.name, res.passed, res.checks, res.failures, res.counterexample or ""] for res in results]
    emit(args, payload, [res.line() for res in results], rows)
    return 0 if ok else 1


COMMANDS = {"shapes": cmd_shapes, "tableaux": cmd_tableaux, "dims": cmd_dims, "hom": cmd_hom,
            "gram": cmd_gram, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=None, help="rank r (size of the shapes)")
    common.add_argument("--n", type=int, default=None, help="number of parts (default n = r)")
    common.add_argument("--q", default=None, help="value of q (rational); omit q, Q, char for generic parameters")
    common.add_argument("--Q", default=None, help="value of Q (rational)")
    common.add_argument("--char", type=int, default=0, help="prime characteristic (0 = rationals)")
    common.add_argument("--format", choices=["json", "csv", "text"], default="json")
    common.add_argument("--shape", default=None, help='a bicomposition such as "((2,1),(1))"')
    common.add_argument("--lambda", dest="lam", default=None, help="source shape λ")
    common.add_argument("--mu", default=None, help="target shape μ")
    common.add_argument("--suite", default=None, help="verification suite (or 'all')")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--allow-large", action="store_true", help=f"allow r > {R_CAP}")

    p = argparse.ArgumentParser(prog="qqschur", description="Exact computations in type B Hecke algebras, "
                                "their permutation modules, (Q,q)-Schur algebras and Weyl modules.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("shapes", parents=[common], help="list bicompositions of r with n parts")
    s.add_argument("--bipartitions", action="store_true", help="bipartitions only")
    t = sub.add_parser("tableaux", parents=[common], help="λ-bitableaux of type μ")
    t.add_argument("--kind", choices=["all", "positive", "semistandard"], default="semistandard")
    sub.add_parser("dims", parents=[common], help="dimensions of M, S, W, F")
    h = sub.add_parser("hom", parents=[common], help="standard basis size against the commutant oracle")
    h.add_argument("--basis", action="store_true", help="include the standard basis maps")
    sub.add_parser("gram", parents=[common], help="Gram matrix of the contracted form on W")
    v = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    v.add_argument("suite_pos", nargs="?", default=None, metavar="SUITE")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.r is None and args.command in ("shapes",):
        args.r = 2
    if args.r is None and args.command in ("dims", "hom") and not (args.shape or args.lam):
        parser.error(f"{args.command} needs --r or a shape")
    if args.jobs is not None and args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
