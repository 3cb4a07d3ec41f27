"""Command-line front end: ``lcsapprox {gen,approx,exact,compare,bench}``.

Input files hold one sequence each.  ``--format tokens`` (default) splits
UTF-8 text on whitespace; ``--format u32`` expects one unsigned 32-bit integer
per nonblank line.  Generated files use one integer per line, which both
formats read identically.

Exit status: 0 on success, 1 on I/O, parse or budget errors, 2 when a witness
fails validation or an approximation bound is violated.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import logging
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import alds
from .approx import BETTER, V1, bound_4n45, bound_n34log, run
from .errors import BudgetExceeded, LcsApproxError, ParseError
from .generate import KINDS, InstanceSpec, generate
from .oracle import DEFAULT_BUDGET, lcs_exact, lcs_length, validate_witness
from .seqcore import intern

log = logging.getLogger("lcsapprox")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2

U32_MAX = 2**32 - 1


# -- file formats ---------------------------------------------------------------

def read_tokens(path, fmt: str = "tokens") -> list:
    path = Path(path)
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(path, raw.count(b"\n", 0, e.start) + 1, "invalid UTF-8") from None
    if fmt == "tokens":
        return text.split()
    if fmt != "u32":
        raise ValueError(f"unknown format {fmt!r}")
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if not line.isdigit():
            raise ParseError(path, lineno, f"not an unsigned integer: {line!r}")
        v = int(line)
        if v > U32_MAX:
            raise ParseError(path, lineno, f"{v} does not fit in 32 bits")
        out.append(v)
    return out


def write_sequence(path, seq) -> None:
    Path(path).write_text("".join(f"{c}\n" for c in seq), encoding="utf-8")


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


# -- run records ----------------------------------------------------------------

@dataclass
class RunRecord:
    instance: dict
    algorithm: str
    alds: Optional[str]
    n: int
    output_len: int
    exact_len: Optional[int] = None
    wall_time: float = 0.0
    iterations: object = None
    trace: object = None
    witness: Optional[dict] = None
    valid: Optional[bool] = None
    bound_ok: Optional[bool] = None
    extra: dict = field(default_factory=dict)

    @property
    def ratio(self) -> Optional[float]:
        if self.exact_len is None or self.output_len < 1:
            return None
        return self.exact_len / self.output_len

    def to_dict(self) -> dict:
        d = {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "alds": self.alds,
            "n": self.n,
            "output_len": self.output_len,
            "exact_len": self.exact_len,
            "ratio": self.ratio,
            "bounds": {
                "bound_4n45": bound_4n45(self.n),
                "bound_n34log": bound_n34log(self.n),
            },
            "wall_time": self.wall_time,
            "iterations": self.iterations,
            "valid": self.valid,
            "bound_ok": self.bound_ok,
            "trace": self.trace,
            "witness": self.witness,
        }
        d.update(self.extra)
        return d


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def emit_json(obj, path=None) -> None:
    text = json.dumps(_jsonable(obj), indent=2, sort_keys=False) + "\n"
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_pair(args):
    tx = read_tokens(args.x, args.format)
    ty = read_tokens(args.y, args.format)
    x, y, vocab = intern(tx, ty)
    instance = {"x": str(args.x), "y": str(args.y),
                "sha256_x": file_digest(args.x), "sha256_y": file_digest(args.y)}
    return x, y, vocab, instance


def approx_record(x, y, vocab, instance, algorithm, variant, exact=False, budget=DEFAULT_BUDGET) -> RunRecord:
    start = time.perf_counter()
    report = run(x, y, algorithm, variant)
    elapsed = time.perf_counter() - start
    w = report.output
    rec = RunRecord(
        instance=instance,
        algorithm=algorithm,
        alds=variant,
        n=report.n,
        output_len=len(w),
        wall_time=elapsed,
        iterations=report.iterations,
        trace=report.trace(),
        witness=w.to_dict(vocab),
        valid=validate_witness(w, x, y),
    )
    if exact:
        if len(x) * len(y) <= budget:
            rec.exact_len = lcs_exact(x, y, budget).length
        else:
            rec.exact_len = lcs_length(x, y)
        rec.bound_ok = _bound_holds(rec.exact_len, rec.output_len, rec.n)
    return rec


def _bound_holds(exact_len: int, output_len: int, n: int) -> bool:
    if exact_len == 0:
        return output_len == 0
    return output_len >= 1 and exact_len <= bound_4n45(n) * output_len


# -- subcommands ----------------------------------------------------------------

def cmd_gen(args) -> int:
    spec = InstanceSpec(args.kind, args.nx, args.ny, args.alphabet, args.seed, args.planted_len)
    x, y = generate(spec)
    write_sequence(args.out_x, x)
    write_sequence(args.out_y, y)
    emit_json({"spec": spec.to_dict(), "files": [str(args.out_x), str(args.out_y)]}, args.report)
    return EXIT_OK


def cmd_approx(args) -> int:
    x, y, vocab, instance = _load_pair(args)
    rec = approx_record(x, y, vocab, instance, args.algorithm, args.alds, args.exact, args.budget)
    emit_json(rec.to_dict(), args.report)
    if args.witness:
        emit_json(rec.witness, args.witness)
    if not rec.valid or rec.bound_ok is False:
        return EXIT_INVALID
    return EXIT_OK


def cmd_exact(args) -> int:
    x, y, vocab, instance = _load_pair(args)
    start = time.perf_counter()
    if args.method == "length":
        length, witness = lcs_length(x, y), None
    else:
        res = lcs_exact(x, y, args.budget, args.method)
        length, witness = res.length, res.witness.to_dict(vocab)
    emit_json({
        "instance": instance,
        "algorithm": f"exact-{args.method}",
        "n": len(x) + len(y),
        "exact_len": length,
        "wall_time": time.perf_counter() - start,
        "witness": witness,
    }, args.report)
    return EXIT_OK


def cmd_compare(args) -> int:
    x, y, vocab, instance = _load_pair(args)
    if len(x) * len(y) > args.budget:
        raise BudgetExceeded(f"{len(x)}*{len(y)} cells exceed budget {args.budget}")
    rec = approx_record(x, y, vocab, instance, args.algorithm, args.alds, True, args.budget)
    emit_json(rec.to_dict(), args.report)
    if not rec.valid or not rec.bound_ok:
        log.error("compare failed: valid=%s bound_ok=%s", rec.valid, rec.bound_ok)
        return EXIT_INVALID
    return EXIT_OK


def _alphabet_for(expr: str, n: int) -> int:
    if expr == "n":
        return max(1, n)
    if expr == "sqrt":
        return max(1, math.isqrt(max(n - 1, 0)) + 1)
    return int(expr)


BENCH_COLUMNS = [
    "kind", "n", "n_x", "n_y", "alphabet", "seed", "rep", "algorithm", "alds",
    "output_len", "iterations", "wall_time", "time_per_n", "time_per_nlogn",
]


def bench_row(kind, exp, alphabet_expr, rep, seed, algorithm, variant) -> dict:
    n = 1 << exp
    n_x = n // 2
    spec = InstanceSpec(kind, n_x, n - n_x, _alphabet_for(alphabet_expr, n_x), seed + rep,
                        planted_len=math.ceil(n ** 0.8) // 2 if kind == "planted" else None)
    xs, ys = generate(spec)
    x, y, _ = intern(xs, ys)
    start = time.perf_counter()
    report = run(x, y, algorithm, variant)
    elapsed = time.perf_counter() - start
    iters = report.iterations
    total = sum(iters.values()) if isinstance(iters, dict) else iters
    return {
        "kind": kind, "n": n, "n_x": spec.n_x, "n_y": spec.n_y, "alphabet": spec.alphabet,
        "seed": spec.seed, "rep": rep, "algorithm": algorithm, "alds": variant,
        "output_len": report.output_len, "iterations": total,
        "wall_time": elapsed,
        "time_per_n": elapsed / n,
        "time_per_nlogn": elapsed / (n * math.log2(n)),
    }


def bench_table(kinds, min_exp, max_exp, alphabet, reps, seed, algorithm, variant, jobs=1) -> list[dict]:
    tasks = [(k, e, alphabet, r, seed, algorithm, variant)
             for k in kinds for e in range(min_exp, max_exp + 1) for r in range(reps)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(bench_row, *zip(*tasks)))
    rows = []
    for t in tasks:
        rows.append(bench_row(*t))
        log.info("bench %s n=%d rep=%d: %.3fs", t[0], 1 << t[1], t[3], rows[-1]["wall_time"])
    return rows


def write_bench(rows, fmt, path=None) -> None:
    if fmt == "json":
        emit_json(rows, path)
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    if path is None or str(path) == "-":
        sys.stdout.write(buf.getvalue())
    else:
        Path(path).write_text(buf.getvalue(), encoding="utf-8")


def cmd_bench(args) -> int:
    if not 1 <= args.min_exp <= args.max_exp:
        raise ValueError("need 1 <= --min-exp <= --max-exp")
    rows = bench_table(args.kinds, args.min_exp, args.max_exp, args.alphabet, args.reps,
                       args.seed, args.algorithm, args.alds, args.jobs)
    write_bench(rows, args.table_format, args.report)
    return EXIT_OK


# -- argument parsing -----------------------------------------------------------

def _add_algo(p):
    p.add_argument("--algorithm", choices=(V1, BETTER), default=BETTER)
    p.add_argument("--alds", choices=alds.VARIANTS, default=alds.TRIGGERED)


def _add_pair(p):
    p.add_argument("x", type=Path)
    p.add_argument("y", type=Path)
    p.add_argument("--format", choices=("tokens", "u32"), default="tokens")
    p.add_argument("--report", default=None, help="write JSON here instead of stdout")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max DP cells for exact traceback")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcsapprox", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a seeded instance pair")
    p.add_argument("out_x", type=Path)
    p.add_argument("out_y", type=Path)
    p.add_argument("--kind", choices=KINDS, default="uniform")
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--ny", type=int, default=None)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--planted-len", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("approx", help="run an approximation algorithm")
    _add_pair(p)
    _add_algo(p)
    p.add_argument("--exact", action="store_true", help="also compute the exact LCS and the ratio")
    p.add_argument("--witness", default=None, help="write the witness JSON here as well")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("exact", help="exact LCS by dynamic programming")
    _add_pair(p)
    p.add_argument("--method", choices=("table", "hirschberg", "length"), default="table")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("compare", help="approximate vs exact, with bound check")
    _add_pair(p)
    _add_algo(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="timing sweep over n = 2^min-exp .. 2^max-exp")
    _add_algo(p)
    p.add_argument("--kinds", nargs="+", choices=KINDS, default=["uniform"])
    p.add_argument("--min-exp", type=int, default=10)
    p.add_argument("--max-exp", type=int, default=14)
    p.add_argument("--alphabet", default="1000", help="integer, 'sqrt' or 'n' (relative to n_x)")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--table-format", choices=("csv", "json"), default="csv")
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "ny", None) is None and args.command == "gen":
        args.ny = args.nx
    try:
        return args.func(args)
    except (OSError, LcsApproxError, ValueError) as e:
        log.error("%s", e)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
