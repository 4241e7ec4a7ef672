"""Command-line front end.

Subcommands: hk-functional, hk-scan, beta, sturmian, complexity,
return-times.  Every run is reproducible: identical argv (seeds included)
produce byte-identical output files.  A JSON config file may mirror any
flag (--config); explicit flags win on conflict.  HKDYN_OUT_DIR, when set,
is the directory for relative output paths.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 runtime error.
"""

import argparse
import csv
import json
import math
import os
import sys
from fractions import Fraction

from . import beta as betamod
from . import complexity as cxmod
from . import returntimes as rtmod
from . import sturmian as stmod
from .arith import is_prime
from .hkmap import (
    DigitSequence,
    PartitionPair,
    arithmetic_scan_rows,
    digits_to_point,
    functional_scan_rows,
)

HK_COLUMNS = ["p", "c", "d", "a_p", "phi", "T_re", "theta", "a_digit", "b_digit"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(x):
    """Angles and other reals at 12 significant digits; integers exact."""
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    return f"{float(x):.12g}"


def _resolve_out(path):
    base = os.environ.get("HKDYN_OUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _write_csv(path, header, rows):
    with open(_resolve_out(path), "w", newline="\n") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) for v in row])


def _write_json(path, obj):
    with open(_resolve_out(path), "w", newline="\n") as fh:
        json.dump(obj, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _emit(args, header, rows, extra=None):
    if args.format == "csv":
        _write_csv(args.out, header, rows)
    else:
        obj = {"rows": [dict(zip(header, row)) for row in rows]}
        obj["rows"] = [
            {k: (str(v) if isinstance(v, Fraction) else v) for k, v in r.items()}
            for r in obj["rows"]
        ]
        if extra:
            obj.update(extra)
        _write_json(args.out, obj)


def _merged(args, config, key, fallback=None):
    v = getattr(args, key.replace("-", "_"), None)
    if v is not None:
        return v
    return config.get(key, fallback)


def _load_config(path):
    if not path:
        return {}
    with open(path) as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise ValueError("config file must hold a JSON object")
    return cfg


def _partitions(cells, config):
    hb = config.get("horizontal-bounds")
    vb = config.get("vertical-bounds")
    if hb or vb:
        hb = tuple(hb) if hb else tuple(PartitionPair.uniform(cells).horizontal)
        vb = tuple(vb) if vb else tuple(PartitionPair.uniform(cells).vertical)
        return PartitionPair(horizontal=hb, vertical=vb)
    return PartitionPair.uniform(cells)


def _check_odd_prime_arg(p):
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def _digitize(parts, phis, thetas, finite):
    a = tuple(parts.horizontal_cell(v) for v in phis)
    b = tuple(parts.vertical_cell(v) for v in thetas)
    return DigitSequence(a_digits=a, b_digits=b, base=parts.cardinality, finite=finite)


def cmd_hk_functional(args, config):
    p = _merged(args, config, "p")
    if p is None:
        raise UsageError("hk-functional requires --p")
    _check_odd_prime_arg(p)
    cells = _merged(args, config, "cells", 2)
    workers = _merged(args, config, "workers", os.cpu_count() or 1)
    parts = _partitions(cells, config)
    scan = functional_scan_rows(p, workers=workers)
    code = _digitize(parts, [r[4] for r in scan], [r[5] for r in scan], finite=True)
    rows = [
        [p, c, d, a_p, phi, t_re, theta, code.a_digits[i], code.b_digits[i]]
        for i, (c, d, a_p, t_re, phi, theta) in enumerate(scan)
    ]
    x, y = digits_to_point(code)
    _emit(args, HK_COLUMNS, rows, extra={"x": str(x), "y": str(y), "base": cells})
    return 0


def cmd_hk_scan(args, config):
    c = _merged(args, config, "c")
    d = _merged(args, config, "d")
    pmax = _merged(args, config, "pmax")
    if c is None or d is None or pmax is None:
        raise UsageError("hk-scan requires --c, --d and --pmax")
    if c == 0 or d == 0:
        raise ValueError("c and d must be nonzero")
    cells = _merged(args, config, "cells", 2)
    workers = _merged(args, config, "workers", os.cpu_count() or 1)
    parts = _partitions(cells, config)
    scan = arithmetic_scan_rows(c, d, pmax, workers=workers)
    code = _digitize(parts, [r[3] for r in scan], [r[4] for r in scan], finite=False)
    rows = [
        [p, c, d, a_p, phi, t_re, theta, code.a_digits[i], code.b_digits[i]]
        for i, (p, a_p, t_re, phi, theta) in enumerate(scan)
    ]
    extra = {"base": cells}
    if rows:
        x, y = digits_to_point(code)
        extra.update({"x": str(x), "y": str(y)})
    _emit(args, HK_COLUMNS, rows, extra=extra)
    return 0


def cmd_beta(args, config):
    b = _merged(args, config, "beta")
    if b is None:
        raise UsageError("beta requires --beta")
    orbit_steps = _merged(args, config, "orbit", 0)
    if orbit_steps:
        x0 = _merged(args, config, "x0", 0.41)
        y0 = _merged(args, config, "y0", 0.13)
        burn = _merged(args, config, "burn-in", 0)
        bf = float(betamod.resolve_beta(b))
        pts = betamod.natural_extension_orbit((x0, y0), bf, orbit_steps, burn)
        rows = [[i, x, y] for i, (x, y) in enumerate(pts)]
        _emit(args, ["step", "x", "y"], rows, extra={"beta": bf})
        return 0
    x = _merged(args, config, "x", 1.0)
    n = _merged(args, config, "digits", 20)
    exp = betamod.beta_expansion(x, b, n)
    adm = betamod.is_admissible(exp.digits, b)
    rows = [[i + 1, dgt] for i, dgt in enumerate(exp.digits)]
    _emit(
        args,
        ["i", "digit"],
        rows,
        extra={"beta": exp.beta, "x": exp.x, "admissible": adm},
    )
    return 0


def cmd_sturmian(args, config):
    rho = _merged(args, config, "rho")
    enum = _merged(args, config, "enumerate", None)
    optimize = _merged(args, config, "optimize", None)
    if optimize:
        max_period = _merged(args, config, "max-period", 10)
        mode = _merged(args, config, "mode", "min" if optimize == "square" else "max")
        cycles = stmod.enumerate_cycles(max_period)
        if optimize == "square":
            center = Fraction(_merged(args, config, "center", "3/5"))
            theta = Fraction(_merged(args, config, "theta", 0))
            f = lambda t: (t - center) ** 2
        elif optimize == "cos":
            omega = float(_merged(args, config, "omega", 0.0))
            theta = float(_merged(args, config, "theta", 0))
            f = lambda t: math.cos(2.0 * math.pi * (float(t) - omega))
        else:
            raise ValueError(f"unknown objective {optimize!r}")
        best, best_val = stmod.ergodic_optimize(f, theta, cycles, mode=mode)
        rows = []
        for mu in cycles:
            val = sum(f(x) + theta * x for x in mu.points) / mu.period
            rows.append(
                ["".join(map(str, mu.word.symbols)), mu.period, float(val),
                 int(mu is best), int(stmod.is_balanced(mu.word))]
            )
        _emit(args, ["word", "period", "value", "selected", "balanced"], rows,
              extra={"best_value": float(best_val), "mode": mode})
        return 0
    if enum is not None:
        rows = []
        for mu in stmod.enumerate_cycles(enum):
            s = stmod.orbit_stats(mu)
            rows.append(
                ["".join(map(str, mu.word.symbols)), mu.period, s["barycentre"],
                 s["variance"], s["geometric_mean"], int(stmod.is_balanced(mu.word))]
            )
        _emit(args, ["word", "period", "barycentre", "variance", "geometric_mean", "balanced"], rows)
        return 0
    if rho is None:
        raise UsageError("sturmian requires --rho, --enumerate or --optimize")
    phase = Fraction(_merged(args, config, "phase", 0))
    word = stmod.sturmian_word(Fraction(rho), phase)
    orb = stmod.word_to_orbit(word)
    s = stmod.orbit_stats(orb)
    rows = [[i, str(x), float(x)] for i, x in enumerate(orb.points)]
    _emit(args, ["i", "point", "point_float"], rows, extra={
        "word": "".join(map(str, word.symbols)),
        "barycentre": str(s["barycentre"]),
        "variance": str(s["variance"]),
        "geometric_mean": s["geometric_mean"],
        "balanced": stmod.is_balanced(word),
    })
    return 0


def _read_symbols(path):
    with open(path) as fh:
        text = fh.read()
    toks = text.replace(",", " ").split()
    if len(toks) == 1 and len(toks[0]) > 1:
        return [int(ch) for ch in toks[0]]
    return [int(t) for t in toks]


def _read_column(path, column):
    with open(path) as fh:
        rd = csv.DictReader(fh)
        if rd.fieldnames is None or column not in rd.fieldnames:
            raise ValueError(f"column {column!r} not found in {path}")
        return [float(row[column]) for row in rd]


def cmd_complexity(args, config):
    stat = _merged(args, config, "stat", "blocks")
    infile = _merged(args, config, "infile")
    if infile is None:
        raise UsageError("complexity requires --infile")
    bits = bool(_merged(args, config, "bits", False))
    unit = (lambda h: cxmod.entropy_to_bits(h)) if bits else (lambda h: h)
    if stat == "ks":
        column = _merged(args, config, "column", "theta")
        reference = _merged(args, config, "reference", "uniform")
        values = _read_column(infile, column)
        ks = cxmod.equidistribution_stat(values, reference)
        _emit(args, ["reference", "count", "ks"], [[reference, len(values), ks]])
        return 0
    alphabet = _merged(args, config, "alphabet")
    symbols = _read_symbols(infile)
    if alphabet is None:
        alphabet = max(symbols) + 1 if symbols else 2
    seq = cxmod.SymbolSequence.from_digits(symbols, max(2, alphabet))
    if stat == "blocks":
        nmax = _merged(args, config, "nmax", 10)
        rows = []
        for n in range(1, nmax + 1):
            pn = cxmod.block_complexity(seq, n)
            rows.append([n, pn, unit(math.log(pn) / n), int(len(seq) < 100 * n)])
        _emit(args, ["n", "block_count", "entropy_at_n", "undersampled"], rows)
        return 0
    if stat == "entropy":
        block_len = _merged(args, config, "block-len", 8)
        est = cxmod.empirical_entropy_rate(seq, block_len)
        _emit(args, ["block_len", "entropy_rate", "undersampled"],
              [[block_len, unit(est.value), int(est.undersampled)]])
        return 0
    raise ValueError(f"unknown stat {stat!r}")


def cmd_return_times(args, config):
    system = _merged(args, config, "system")
    if system is None:
        raise UsageError("return-times requires --system")
    depth = _merged(args, config, "depth", 8)
    samples = _merged(args, config, "samples", 1000)
    seed = _merged(args, config, "seed", 0)
    mode = _merged(args, config, "mode", "return")
    p_one = _merged(args, config, "p-one", 0.5)
    word = _merged(args, config, "word", None)
    if word is not None:
        word = tuple(int(ch) for ch in str(word))
    sample = rtmod.return_time_samples(
        system, depth, samples, seed, mode=mode, p_one=p_one, word=word
    )
    ks = rtmod.ks_vs_exponential(sample)
    kac = rtmod.kac_report(sample)
    rows = [[i, sample.steps[i], sample.normalized_times[i]] for i in range(samples)]
    _emit(args, ["index", "steps", "normalized"], rows, extra={
        "ks_vs_exponential": ks,
        "kac_mean": kac["mean"],
        "kac_se": kac["se"],
        "system": system,
        "depth": depth,
        "seed": seed,
        "mode": mode,
    })
    return 0


def build_parser():
    parser = _Parser(prog="hkdyn", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command")

    def common(sp):
        sp.add_argument("--out", required=True, help="output file path")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--config", help="JSON file mirroring flags (flags win)")

    sp = sub.add_parser("hk-functional", help="angle pairs over (F_p*)^2 at one prime")
    sp.add_argument("--p", type=int)
    sp.add_argument("--cells", type=int)
    sp.add_argument("--workers", type=int)
    common(sp)
    sp.set_defaults(func=cmd_hk_functional)

    sp = sub.add_parser("hk-scan", help="angle pairs over primes at fixed (c,d)")
    sp.add_argument("--c", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--pmax", type=int)
    sp.add_argument("--cells", type=int)
    sp.add_argument("--workers", type=int)
    common(sp)
    sp.set_defaults(func=cmd_hk_scan)

    sp = sub.add_parser("beta", help="beta-expansions and natural-extension orbits")
    sp.add_argument("--beta", help="number, decimal string, or 'golden'")
    sp.add_argument("--x", type=float)
    sp.add_argument("--digits", type=int)
    sp.add_argument("--orbit", type=int, help="emit an orbit of this many steps instead")
    sp.add_argument("--burn-in", type=int)
    sp.add_argument("--x0", type=float)
    sp.add_argument("--y0", type=float)
    common(sp)
    sp.set_defaults(func=cmd_beta)

    sp = sub.add_parser("sturmian", help="mechanical words, cycles, optimization")
    sp.add_argument("--rho", help="rotation number as p/q")
    sp.add_argument("--phase")
    sp.add_argument("--enumerate", type=int, help="list all cycles up to this period")
    sp.add_argument("--optimize", choices=("square", "cos"))
    sp.add_argument("--theta")
    sp.add_argument("--center")
    sp.add_argument("--omega", type=float)
    sp.add_argument("--mode", choices=("min", "max"))
    sp.add_argument("--max-period", type=int)
    common(sp)
    sp.set_defaults(func=cmd_sturmian)

    sp = sub.add_parser("complexity", help="block complexity, entropy, KS diagnostics")
    sp.add_argument("--infile")
    sp.add_argument("--stat", choices=("blocks", "entropy", "ks"))
    sp.add_argument("--alphabet", type=int)
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--block-len", type=int)
    sp.add_argument("--bits", action="store_const", const=True)
    sp.add_argument("--column")
    sp.add_argument("--reference", choices=("uniform", "sine_squared"))
    common(sp)
    sp.set_defaults(func=cmd_complexity)

    sp = sub.add_parser("return-times", help="return/hitting time statistics")
    sp.add_argument("--system", choices=rtmod.SYSTEMS)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--mode", choices=("return", "hitting"))
    sp.add_argument("--p-one", type=float)
    sp.add_argument("--word", help="cylinder word as a 0/1 string")
    common(sp)
    sp.set_defaults(func=cmd_return_times)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    if not getattr(args, "command", None):
        parser.print_help()
        return 1
    try:
        config = _load_config(getattr(args, "config", None))
        return args.func(args, config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError) as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
