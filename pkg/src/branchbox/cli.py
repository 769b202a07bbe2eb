"""Batch front door: multiplicity tables, verification suites, reports.

Exit status: 0 on success (and all-PASS for verification suites), 1 when any
verification entry fails, 2 on usage or stable-range errors.  Table rows are
always assembled and sorted by graded-revlex label keys before emission, so
output is byte-identical for identical inputs regardless of --jobs, and a
cache can only speed things up, never change a value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import branch, jsonio, lr
from .dims import hilbert_check
from .dualpair import (FULL, MOD_IDEAL, MatrixSpaceShape, ProductO,
                       hwv_multiplicities, verify_brackets)
from .errors import BudgetError, StableRangeError, UsageError
from .partitions import (IrrepLabel, Partition, enumerate_partitions,
                         grevlex_key, is_admissible_o, partitions_of)
from .reports import MultiplicityEntry, labels_sort_key, sorted_entries

_POLICIES = {"enforce": branch.ENFORCE, "warn": branch.WARN_AND_COMPUTE}


@dataclass(frozen=True)
class RunConfig:
    output_format: str = "json"
    stable_policy: str = "enforce"
    max_degree: int = 6
    jobs: int = 1
    cache_path: str | None = None


# ---------------------------------------------------------------------------
# formula evaluation, parallelizable over independent table keys

def _formula_value(name: str, key, params: dict) -> int:
    policy = _POLICIES[params["policy"]] if "policy" in params else branch.ENFORCE
    if name == "lr":
        lam, mu, nu = key
        return lr.lr_coefficient(lam, mu, nu)
    if name == "gl-o":
        mu, lam = key
        return branch.gl_to_o(lam, mu, params["n"], policy)
    if name == "gl-sp":
        mu, lam = key
        return branch.gl_to_sp(lam, mu, params["n"], policy)
    if name == "o-tensor":
        mu, nu, lam = key
        return branch.o_tensor_stable(mu, nu, lam, params["n"], policy)
    if name == "sp-tensor":
        mu, nu, lam = key
        return branch.sp_tensor_stable(mu, nu, lam, params["n"], policy)
    if name == "o-restrict":
        mu, nu, lam = key
        return branch.o_restrict_stable(lam, mu, nu, params["n"], params["m"], policy)
    raise UsageError(f"unknown formula {name!r}")


def _formula_chunk(task):
    name, params, keys = task
    values = [(key, _formula_value(name, key, params)) for key in keys]
    return values, list(lr.cache_snapshot().items())


def _compute_formula(name: str, params: dict, keys: Iterable, jobs: int) -> dict:
    keys = list(keys)
    if jobs <= 1 or len(keys) <= 8:
        return {key: _formula_value(name, key, params) for key in keys}
    chunk = max(8, -(-len(keys) // (4 * jobs)))
    tasks = [(name, params, keys[i:i + chunk]) for i in range(0, len(keys), chunk)]
    out: dict = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for values, memo in pool.map(_formula_chunk, tasks):
            out.update(values)
            lr.preload_cache(dict(memo))
    return out


# ---------------------------------------------------------------------------
# persistent LR cache (append-only JSON lines)

def _load_cache(path: str) -> None:
    if not os.path.exists(path):
        return
    loaded: dict = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                lam, mu, nu = (tuple(int(a) for a in part) for part in rec["key"])
                loaded[(lam, mu, nu)] = int(rec["value"])
            except (ValueError, KeyError, TypeError, json.JSONDecodeError):
                print(f"warning: skipping corrupt cache line {lineno} in {path}",
                      file=sys.stderr)
    try:
        lr.preload_cache(loaded)
    except UsageError:
        print(f"warning: discarding malformed cache entries from {path}",
              file=sys.stderr)


def _save_cache(path: str, baseline: set) -> None:
    new = {k: v for k, v in lr.cache_snapshot().items() if k not in baseline}
    if not new:
        open(path, "a", encoding="utf-8").close()
        return

    def entry_key(item):
        lam, mu, nu = item[0]
        return (grevlex_key(lam), grevlex_key(mu), grevlex_key(nu))

    with open(path, "a", encoding="utf-8") as fh:
        for (lam, mu, nu), v in sorted(new.items(), key=entry_key):
            rec = {"key": [list(lam), list(mu), list(nu)], "value": v}
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")


# ---------------------------------------------------------------------------
# output helpers

def _emit(cfg: RunConfig, json_obj, csv_text: str) -> None:
    if cfg.output_format == "json":
        sys.stdout.write(jsonio.dumps(json_obj) + "\n")
    else:
        sys.stdout.write(csv_text)


def _emit_entries(cfg: RunConfig, entries: Sequence[MultiplicityEntry]) -> None:
    entries = sorted_entries(entries)
    _emit(cfg, [jsonio.entry_json(e) for e in entries], jsonio.entries_csv(entries))


def _require_positive(**named: int) -> None:
    for flag, value in named.items():
        if value < 1:
            raise UsageError(f"--{flag} must be a positive integer")


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_lr(args, cfg: RunConfig) -> int:
    lam = jsonio.parse_partition(args.lam)
    mu = jsonio.parse_partition(args.mu)
    nu = jsonio.parse_partition(args.nu)
    value = lr.lr_coefficient(lam, mu, nu)
    _emit(cfg, jsonio.value_json(value), jsonio.value_csv(value))
    return 0


def _cmd_branch(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n)
    lam = jsonio.parse_partition(args.lam)
    mu = jsonio.parse_partition(args.mu)
    policy = _POLICIES[cfg.stable_policy]
    if args.pair == "gl-o":
        value = branch.gl_to_o(lam, mu, args.n, policy)
        stable = branch.gl_to_o_stable(lam, args.n)
    else:
        value = branch.gl_to_sp(lam, mu, args.n, policy)
        stable = branch.gl_to_sp_stable(lam, args.n)
    _emit(cfg, jsonio.value_json(value, stable), jsonio.value_csv(value, stable))
    return 0


def _cmd_tensor(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n)
    mu = jsonio.parse_partition(args.mu)
    nu = jsonio.parse_partition(args.nu)
    n = args.n
    if args.family == "o":
        formula, fam, rank = "o-tensor", "O", n
        stable = branch.o_tensor_stable_range(mu, nu, n)
        bound = branch.o_tensor_bound(mu, nu)
        admissible = lambda lam: is_admissible_o(lam, n)
    else:
        formula, fam, rank = "sp-tensor", "Sp", 2 * n
        stable = branch.sp_tensor_stable_range(mu, nu, n)
        bound = branch.sp_tensor_bound(mu, nu)
        admissible = lambda lam: len(lam) <= n
    policy = _POLICIES[cfg.stable_policy]
    if args.lam is not None:
        lam = jsonio.parse_partition(args.lam)
        value = _formula_value(formula, (mu, nu, lam), {"n": n, "policy": cfg.stable_policy})
        _emit(cfg, jsonio.value_json(value, stable), jsonio.value_csv(value, stable))
        return 0
    if cfg.stable_policy == "enforce" and not stable:
        raise StableRangeError(f"outside the stable range: requires {bound}")
    total = sum(mu) + sum(nu)
    keys = [(mu, nu, lam)
            for lam in enumerate_partitions(total, max_length=len(mu) + len(nu))
            if (total - sum(lam)) % 2 == 0 and admissible(lam)]
    values = _compute_formula(formula, {"n": n, "policy": cfg.stable_policy}, keys, cfg.jobs)
    entries = [MultiplicityEntry((IrrepLabel(fam, rank, lam),), v, stable)
               for (_, _, lam), v in values.items() if v]
    _emit_entries(cfg, entries)
    return 0


def _cmd_tensor_rational(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n)
    mu = jsonio.parse_signature(args.mu)
    nu = jsonio.parse_signature(args.nu)
    lam = jsonio.parse_signature(args.lam)
    value = branch.gl_tensor_rational(mu, nu, lam, args.n)
    _emit(cfg, jsonio.value_json(value), jsonio.value_csv(value))
    return 0


def _cmd_restrict(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n, m=args.m)
    lam = jsonio.parse_partition(args.lam)
    n, m = args.n, args.m
    stable = branch.o_restrict_stable_range(lam, n, m)
    if (args.mu is None) != (args.nu is None):
        raise UsageError("provide both --mu and --nu for a single value, or neither for the table")
    if args.mu is not None:
        mu = jsonio.parse_partition(args.mu)
        nu = jsonio.parse_partition(args.nu)
        value = _formula_value("o-restrict", (mu, nu, lam),
                               {"n": n, "m": m, "policy": cfg.stable_policy})
        _emit(cfg, jsonio.value_json(value, stable), jsonio.value_csv(value, stable))
        return 0
    if cfg.stable_policy == "enforce" and not stable:
        raise StableRangeError(
            f"outside the stable range: requires {branch.o_restrict_bound(lam)}")
    size, rows = sum(lam), len(lam)
    keys = [(mu, nu, lam)
            for mu in enumerate_partitions(size, max_length=rows)
            if is_admissible_o(mu, n)
            for rest in [size - sum(mu)]
            for nu in enumerate_partitions(rest, max_length=rows)
            if (rest - sum(nu)) % 2 == 0 and is_admissible_o(nu, m)]
    values = _compute_formula("o-restrict", {"n": n, "m": m, "policy": cfg.stable_policy},
                              keys, cfg.jobs)
    entries = [MultiplicityEntry((IrrepLabel("O", n, mu), IrrepLabel("O", m, nu)), v, stable)
               for (mu, nu, _), v in values.items() if v]
    _emit_entries(cfg, entries)
    return 0


# ---------------------------------------------------------------------------
# verification suites: formula vs. brute-force oracle, entry by entry

def _emit_verify(cfg: RunConfig, name: str, params: dict, rows) -> int:
    rows = sorted(rows, key=lambda row: labels_sort_key(row[0]))
    report = jsonio.verify_json(name, params, rows)
    _emit(cfg, report, jsonio.verify_csv(rows))
    ok = report["ok"]
    total = len(rows)
    failed = sum(1 for e in report["entries"] if not e["pass"])
    print(f"verify {name}: {total} entries, "
          + ("all PASS" if ok else f"{failed} FAIL"), file=sys.stderr)
    return 0 if ok else 1


def _verify_seesaw_a(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n, m=args.m)
    n, m, deg = args.n, args.m, cfg.max_degree
    oracle_entries = hwv_multiplicities(MatrixSpaceShape("A", n, m), deg, FULL)
    oracle = {tuple(lab.weight for lab in e.labels): e.mult for e in oracle_entries}
    lmax = min(n, m)
    grid = {(mu, lam)
            for lam in enumerate_partitions(deg, max_length=lmax)
            for mu in enumerate_partitions(sum(lam), max_length=lmax)
            if is_admissible_o(mu, n)}
    keys = sorted(grid | set(oracle))
    values = _compute_formula("gl-o", {"n": n, "policy": cfg.stable_policy}, keys, cfg.jobs)
    rows = [((IrrepLabel("O", n, mu), IrrepLabel("GL", m, lam)),
             values[(mu, lam)], oracle.get((mu, lam), 0))
            for mu, lam in keys]
    return _emit_verify(cfg, "seesaw-a", {"n": n, "m": m, "max_degree": deg}, rows)


def _verify_seesaw_c(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n, m=args.m, l=args.l)
    n, m, l, deg = args.n, args.m, args.l, cfg.max_degree
    shape = MatrixSpaceShape("C", n, m, l, split_columns=True)
    oracle_entries = hwv_multiplicities(shape, deg, FULL)
    oracle = {tuple(lab.weight for lab in e.labels): e.mult for e in oracle_entries}
    grid = {(lam, mu, nu)
            for lam in enumerate_partitions(deg, max_length=min(n, m + l))
            for mu in enumerate_partitions(sum(lam), max_length=min(n, m))
            for nu in partitions_of(sum(lam) - sum(mu), max_length=min(n, l))}
    keys = sorted(grid | set(oracle))
    values = _compute_formula("lr", {}, keys, cfg.jobs)
    rows = [((IrrepLabel("GL", n, lam), IrrepLabel("GL", m, mu), IrrepLabel("GL", l, nu)),
             values[(lam, mu, nu)], oracle.get((lam, mu, nu), 0))
            for lam, mu, nu in keys]
    return _emit_verify(cfg, "seesaw-c", {"n": n, "m": m, "l": l, "max_degree": deg}, rows)


def _verify_tensor_o(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n, m=args.m, l=args.l)
    n, m, l, deg = args.n, args.m, args.l, cfg.max_degree
    shape = MatrixSpaceShape("A", n, m, l, split_columns=True)
    oracle_entries = hwv_multiplicities(shape, deg, MOD_IDEAL)
    oracle = {tuple(lab.weight for lab in e.labels): e.mult for e in oracle_entries}
    grid = set()
    for mu in enumerate_partitions(deg, max_length=m):
        for nu in enumerate_partitions(deg - sum(mu), max_length=l):
            total = sum(mu) + sum(nu)
            for lam in enumerate_partitions(total, max_length=len(mu) + len(nu)):
                if (total - sum(lam)) % 2 == 0 and is_admissible_o(lam, n):
                    grid.add((lam, mu, nu))
    keys = sorted(grid | set(oracle))
    values = _compute_formula("o-tensor", {"n": n, "policy": cfg.stable_policy},
                              [(mu, nu, lam) for lam, mu, nu in keys], cfg.jobs)
    rows = [((IrrepLabel("O", n, lam), IrrepLabel("GL", m, mu), IrrepLabel("GL", l, nu)),
             values[(mu, nu, lam)], oracle.get((lam, mu, nu), 0))
            for lam, mu, nu in keys]
    return _emit_verify(cfg, "tensor-o", {"n": n, "m": m, "l": l, "max_degree": deg}, rows)


def _verify_restrict_o(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n, m=args.m, l=args.l)
    n1, n2, m, deg = args.n, args.l, args.m, cfg.max_degree
    shape = MatrixSpaceShape("A", n1 + n2, m)
    oracle_entries = hwv_multiplicities(shape, deg, ProductO(n1, n2))
    oracle = {tuple(lab.weight for lab in e.labels): e.mult for e in oracle_entries}
    grid = set()
    for lam in enumerate_partitions(deg, max_length=min(n1 + n2, m)):
        for mu in enumerate_partitions(sum(lam), max_length=len(lam)):
            if not is_admissible_o(mu, n1):
                continue
            rest = sum(lam) - sum(mu)
            for nu in enumerate_partitions(rest, max_length=len(lam)):
                if (rest - sum(nu)) % 2 == 0 and is_admissible_o(nu, n2):
                    grid.add((mu, nu, lam))
    keys = sorted(grid | set(oracle))
    values = _compute_formula("o-restrict", {"n": n1, "m": n2, "policy": cfg.stable_policy},
                              keys, cfg.jobs)
    rows = [((IrrepLabel("O", n1, mu), IrrepLabel("O", n2, nu), IrrepLabel("GL", m, lam)),
             values[(mu, nu, lam)], oracle.get((mu, nu, lam), 0))
            for mu, nu, lam in keys]
    return _emit_verify(cfg, "restrict-o",
                        {"n": n1, "l": n2, "m": m, "max_degree": deg}, rows)


def _cmd_verify_brackets(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n, m=args.m)
    shape = MatrixSpaceShape(args.case.upper(), args.n, args.m, args.l or 0)
    report = verify_brackets(shape)
    _emit(cfg, jsonio.bracket_report_json(report), jsonio.bracket_report_csv(report))
    failed = len(report.failures)
    print(f"verify brackets: {len(report.entries)} entries, "
          + ("all PASS" if report.ok else f"{failed} FAIL"), file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_hilbert(args, cfg: RunConfig) -> int:
    _require_positive(n=args.n, m=args.m)
    ok, series = hilbert_check(args.n, args.m, cfg.max_degree)
    _emit(cfg, jsonio.hilbert_json(ok, series), jsonio.hilbert_csv(ok, series))
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output-format", choices=("json", "csv"), default="json")
    common.add_argument("--stable-policy", choices=("enforce", "warn"), default="enforce")
    common.add_argument("--max-degree", type=int, default=6,
                        help="degree bound for oracle computations (default 6)")
    common.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for independent table entries")
    common.add_argument("--cache", dest="cache_path", default=None,
                        help="JSON-lines cache of LR coefficients "
                             "(default: $BRANCHBOX_CACHE if set)")

    parser = argparse.ArgumentParser(
        prog="branchbox",
        description="Exact stable-range branching multiplicities with brute-force verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[common],
                       help="single Littlewood-Richardson coefficient")
    p.add_argument("--lam", required=True, help="partition, e.g. 3,2,1 (empty string = empty)")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(handler=_cmd_lr)

    p = sub.add_parser("branch", help="stable branching multiplicity GL to O/Sp")
    pair_sub = p.add_subparsers(dest="pair", required=True)
    for pair in ("gl-o", "gl-sp"):
        q = pair_sub.add_parser(pair, parents=[common])
        q.add_argument("--lam", required=True, help="GL highest weight (partition)")
        q.add_argument("--mu", required=True, help="O/Sp highest weight (partition)")
        q.add_argument("--n", type=int, required=True)
        q.set_defaults(handler=_cmd_branch, pair=pair)

    p = sub.add_parser("tensor", help="stable tensor product multiplicities")
    fam_sub = p.add_subparsers(dest="family", required=True)
    for family in ("o", "sp"):
        q = fam_sub.add_parser(family, parents=[common])
        q.add_argument("--mu", required=True)
        q.add_argument("--nu", required=True)
        q.add_argument("--lam", default=None,
                       help="target label; omit for the full table")
        q.add_argument("--n", type=int, required=True)
        q.set_defaults(handler=_cmd_tensor, family=family)
    q = fam_sub.add_parser("gl-rational", parents=[common])
    q.add_argument("--mu", required=True, help="signature plus;minus, e.g. 2,1;1")
    q.add_argument("--nu", required=True)
    q.add_argument("--lam", required=True)
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(handler=_cmd_tensor_rational, family="gl-rational")

    p = sub.add_parser("restrict", help="stable restriction O_{n+m} to O_n x O_m")
    r_sub = p.add_subparsers(dest="target", required=True)
    q = r_sub.add_parser("o", parents=[common])
    q.add_argument("--lam", required=True, help="O_{n+m} highest weight")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--mu", default=None, help="O_n label (with --nu for a single value)")
    q.add_argument("--nu", default=None, help="O_m label")
    q.set_defaults(handler=_cmd_restrict)

    p = sub.add_parser("verify", help="formula vs. brute-force oracle suites")
    v_sub = p.add_subparsers(dest="suite", required=True)
    q = v_sub.add_parser("seesaw-a", parents=[common],
                         help="GL to O branching vs. joint highest weight vectors")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.set_defaults(handler=_verify_seesaw_a)
    q = v_sub.add_parser("seesaw-c", parents=[common],
                         help="LR coefficients vs. stacked two-block model")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--l", type=int, default=1)
    q.set_defaults(handler=_verify_seesaw_c)
    q = v_sub.add_parser("tensor-o", parents=[common],
                         help="stable O tensor product vs. harmonics of the split model")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--l", type=int, default=1)
    q.set_defaults(handler=_verify_tensor_o)
    q = v_sub.add_parser("restrict-o", parents=[common],
                         help="stable O restriction vs. the product-group model")
    q.add_argument("--n", type=int, required=True, help="first orthogonal block size")
    q.add_argument("--m", type=int, required=True, help="column count of the matrix space")
    q.add_argument("--l", type=int, default=1, help="second orthogonal block size")
    q.set_defaults(handler=_verify_restrict_o)
    q = v_sub.add_parser("brackets", parents=[common],
                         help="commutation relations of the model operators")
    q.add_argument("--case", choices=("a", "b", "c"), required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--l", type=int, default=0)
    q.set_defaults(handler=_cmd_verify_brackets)

    p = sub.add_parser("hilbert", parents=[common],
                       help="graded dimension identity for the harmonic decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_hilbert)

    return parser


def _config(args) -> RunConfig:
    cache = args.cache_path
    if cache is None:
        cache = os.environ.get("BRANCHBOX_CACHE") or None
    if args.max_degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    if args.jobs < 1:
        raise UsageError("--jobs must be a positive integer")
    return RunConfig(args.output_format, args.stable_policy,
                     args.max_degree, args.jobs, cache)


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if cfg.cache_path:
            _load_cache(cfg.cache_path)
            baseline = set(lr.cache_snapshot())
        code = args.handler(args, cfg)
        if cfg.cache_path:
            _save_cache(cfg.cache_path, baseline)
        return code
    except (UsageError, StableRangeError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
