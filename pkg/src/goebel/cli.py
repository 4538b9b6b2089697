"""Command-line front end.

Every subcommand writes ASCII CSV (or a JSON mirror of the same records)
with LF line endings, byte-identical across repeated runs and across
worker counts.  Exit codes: 0 success, 1 domain or I/O error, 2 usage.
"""

import argparse
import json
import os
import random
import sys

from . import billiards, exact, reduced, sieve
from .errors import GoebelError
from .modarith import is_prime
from .reduced import classify_l

CACHE_ENV = "GOEBEL_CACHE"


def parse_krange(text: str) -> range:
    """"A..B" (inclusive) or a single "K"."""
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            r = range(int(lo), int(hi) + 1)
        else:
            r = range(int(lo), int(lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k range {text!r}") from None
    if len(r) == 0 or r.start < 1:
        raise argparse.ArgumentTypeError(f"bad k range {text!r}")
    return r


def cache_dir(args) -> str:
    if args.cache_dir:
        return args.cache_dir
    if os.environ.get(CACHE_ENV):
        return os.environ[CACHE_ENV]
    return os.path.join(os.path.expanduser("~"), ".local", "share", "goebel")


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="ascii", newline="\n"), True


def write_rows(path, header, rows, fmt: str) -> None:
    """rows are tuples matching header; None fields serialize as empty/null."""
    fh, close = _open_out(path)
    try:
        if fmt == "csv":
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join("" if v is None else str(v) for v in row) + "\n")
        else:
            records = [dict(zip(header, row)) for row in rows]
            fh.write(json.dumps(records, indent=2) + "\n")
    finally:
        if close:
            fh.close()


def write_text(path, lines) -> None:
    fh, close = _open_out(path)
    try:
        for line in lines:
            fh.write(line + "\n")
    finally:
        if close:
            fh.close()


# ---------------------------------------------------------------- exact

_CACHE_HEADER = "k,l,N,status,limit"


def _load_nk_cache(path) -> dict:
    cached = {}
    if not os.path.exists(path):
        return cached
    with open(path, "r", encoding="ascii") as fh:
        next(fh, None)
        for line in fh:
            k_s, l_s, n_s, status, limit_s = line.strip().split(",")
            n = int(n_s) if n_s else None
            cached[int(k_s)] = exact.NkResult(
                k=int(k_s), l=int(l_s), n=n, limit=int(limit_s)
            )
    return cached


def _save_nk_cache(path, cached: dict) -> None:
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(_CACHE_HEADER + "\n")
        for k in sorted(cached):
            r = cached[k]
            n = "" if r.n is None else str(r.n)
            fh.write(f"{r.k},{r.l},{n},{r.status},{r.limit}\n")


def cmd_exact(args) -> int:
    ks = list(args.k)
    path = os.path.join(cache_dir(args), f"nk_l{args.l}.csv")
    cached = {} if args.no_cache else _load_nk_cache(path)
    # a cached exceeded outcome is only reusable at or below its own limit
    todo = [
        k
        for k in ks
        if k not in cached or (cached[k].exceeded and cached[k].limit < args.limit)
    ]
    for r in exact.exact_N_range(todo, args.l, args.limit, workers=args.threads):
        cached[r.k] = r
    if not args.no_cache:
        _save_nk_cache(path, cached)
    rows = []
    for k in sorted(set(ks)):
        r = cached[k]
        rows.append((k, args.l, r.n, "exceeded" if r.exceeded else "exact"))
    write_rows(args.output, ["k", "l", "N", "status"], rows, args.format)
    return 0


# ---------------------------------------------------------------- stats

def _read_dataset(path) -> list[tuple[int, int, int | None]]:
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        next(fh)
        for line in fh:
            parts = line.strip().split(",")
            if len(parts) < 4:
                continue
            k_s, l_s, n_s, status = parts[:4]
            rows.append((int(k_s), int(l_s), int(n_s) if n_s else None))
    rows.sort()
    return rows


def cmd_stats(args) -> int:
    data = _read_dataset(args.dataset)
    exact_rows = [(k, n) for k, _, n in data if n is not None]
    if args.mean_mod:
        d = args.mean_mod
        sums = [0] * d
        counts = [0] * d
        for k, n in exact_rows:
            sums[k % d] += n
            counts[k % d] += 1
        rows = [
            (a, counts[a], f"{sums[a] / counts[a]:.6f}" if counts[a] else None)
            for a in range(d)
        ]
        write_rows(args.output, ["class", "count", "mean"], rows, args.format)
    elif args.records:
        best = 0
        rows = []
        for k, n in exact_rows:
            if n > best:
                best = n
                rows.append((k, n))
        write_rows(args.output, ["k", "N"], rows, args.format)
    else:
        prime_count = sum(1 for _, n in exact_rows if is_prime(n))
        total = len(exact_rows)
        share = f"{prime_count / total:.6f}" if total else None
        write_rows(
            args.output, ["prime_N", "total", "share"], [(prime_count, total, share)], args.format
        )
    return 0


# ---------------------------------------------------------------- sieve

def cmd_sieve(args) -> int:
    tables = {}
    if args.tables and os.path.exists(args.tables):
        tables = sieve.read_sieve_tables(args.tables)
    tables = sieve.sieve_tables(args.p_max, args.l, tables, workers=args.threads)
    if args.tables:
        sieve.write_sieve_tables(args.tables, tables)
    outcome = sieve.sieve_range(args.k_lo, args.k_hi, args.p_max, args.l, tables)
    if args.spot_check:
        rng = random.Random(args.seed)
        survivors = set(outcome.survivors)
        sieved = [k for k in range(args.k_lo, args.k_hi + 1) if k not in survivors]
        sample = rng.sample(sieved, min(args.spot_check, len(sieved)))
        for k in sorted(sample):
            bound = sieve.smallest_sieving_prime(k, args.l, args.p_max, tables)
            result = exact.exact_N(k, args.l, bound)
            if result.exceeded:
                print(f"sieve unsound at k={k}: no break up to {bound}", file=sys.stderr)
                return 1
        print(f"spot-check OK ({len(sample)} sieved k confirmed)", file=sys.stderr)
    if args.format == "json":
        payload = {
            "k_lo": outcome.k_lo,
            "k_hi": outcome.k_hi,
            "bound": outcome.bound,
            "survivors": outcome.survivors,
        }
        write_text(args.output, [json.dumps(payload, indent=2)])
    else:
        write_rows(args.output, ["k"], [(k,) for k in outcome.survivors], "csv")
    return 0


# ---------------------------------------------------------------- grids and J_p

def cmd_grid(args) -> int:
    pairs = sieve.grid_scan(args.p)
    write_rows(args.output, ["p", "k", "l"], [(args.p, k, l) for k, l in pairs], args.format)
    return 0


def cmd_jp(args) -> int:
    if args.classify is not None:
        p = args.classify
        rows = [(l, classify_l(p, l).value) for l in range(p)]
        write_rows(args.output, ["l", "classification"], rows, args.format)
        return 0
    rows = reduced.jp_ratio_table(args.p_max, args.p_min, workers=args.threads)
    write_rows(args.output, ["p", "l_L", "l_R", "J_size", "ratio"], rows, args.format)
    return 0


def cmd_two_in_jp(args) -> int:
    ps = reduced.scan_two_in_jp(args.p_max, workers=args.threads)
    write_rows(args.output, ["p"], [(p,) for p in ps], args.format)
    return 0


# ---------------------------------------------------------------- billiards and verification

def _dump_line(p: int, l: int) -> str:
    seq = billiards.construct_a(p, l)
    return f"{p},{l}:" + "".join("+" if v == 1 else "-" for v in seq.values)


def cmd_billiards(args) -> int:
    ls = [args.l] if args.l is not None else list(range(0, args.p - 2, 2))
    write_text(args.output, [_dump_line(args.p, l) for l in ls])
    return 0


def cmd_verify(args) -> int:
    witnesses = billiards.verify_range(args.p_min, args.p_max, workers=args.threads)
    rows = [(w.p, w.l, w.m) for w in witnesses]
    write_rows(args.output, ["p", "l", "m"], rows, args.format)
    return 0


# ---------------------------------------------------------------- wiring

def _add_common(sp, cache=False, seed=False):
    sp.add_argument("-o", "--output", default="-", help="output path, '-' for stdout")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--threads", type=int, default=1, help="worker processes")
    if cache:
        sp.add_argument("--cache-dir", default=None, help=f"cache directory (or ${CACHE_ENV})")
    if seed:
        sp.add_argument("--seed", type=int, default=0, help="sampling seed")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="goebel", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("exact", help="exact integrality breakdown points over a k range")
    sp.add_argument("--k", type=parse_krange, required=True, help="k or k_lo..k_hi")
    sp.add_argument("--l", type=int, default=2)
    sp.add_argument("--limit", type=int, default=exact.DEFAULT_N_LIMIT)
    sp.add_argument("--no-cache", action="store_true")
    _add_common(sp, cache=True)
    sp.set_defaults(fn=cmd_exact)

    sp = sub.add_parser("stats", help="statistics over a computed dataset")
    sp.add_argument("--dataset", required=True)
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--mean-mod", type=int, metavar="D")
    mode.add_argument("--records", action="store_true")
    mode.add_argument("--prime-share", action="store_true")
    _add_common(sp)
    sp.set_defaults(fn=cmd_stats)

    sp = sub.add_parser("sieve", help="sieve a k range by bad residue classes")
    sp.add_argument("--k-lo", type=int, required=True)
    sp.add_argument("--k-hi", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--l", type=int, default=2)
    sp.add_argument("--tables", default=None, help="sieve-table cache file")
    sp.add_argument("--spot-check", type=int, default=0, metavar="N")
    _add_common(sp, seed=True)
    sp.set_defaults(fn=cmd_sieve)

    sp = sub.add_parser("grid", help="non-integral (k, l) pairs for one prime")
    sp.add_argument("--p", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_grid)

    sp = sub.add_parser("jp", help="left/right block boundaries and J_p sizes")
    sp.add_argument("--p-max", type=int)
    sp.add_argument("--p-min", type=int, default=13)
    sp.add_argument("--classify", type=int, metavar="P", help="diagnostic: classify every l for one prime")
    _add_common(sp)
    sp.set_defaults(fn=cmd_jp)

    sp = sub.add_parser("two-in-jp", help="primes whose middle block starts at l = 2")
    sp.add_argument("--p-max", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(fn=cmd_two_in_jp)

    sp = sub.add_parser("billiards", help="dump billiard sign sequences")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--l", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(fn=cmd_billiards)

    sp = sub.add_parser("verify", help="machine-verify the non-multiplicativity theorem")
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--p-min", type=int, default=13)
    _add_common(sp)
    sp.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "command", None) == "jp" and args.classify is None and args.p_max is None:
        ap.error("jp requires --p-max or --classify")
    try:
        return args.fn(args)
    except GoebelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
