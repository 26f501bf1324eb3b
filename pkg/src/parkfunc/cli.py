"""Command-line surface: seeded, reproducible runs serialized as JSON or CSV."""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import completions as completions_mod
from . import distributions, moments, stein
from .errors import GuardError, InternalConsistencyError
from .exact_math import format_exact
from .parking import (PrefSeq, count_parking_functions, enumerate_parking_functions,
                      is_parking_function, iter_sample_successors)
from .structure import cycle_profile

SEED_ENV_VAR = "PARKFUNC_SEED"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_INTERNAL = 4


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; (command, options, seed, workers) fixes the output."""

    command: str
    n: Optional[int] = None
    d: Optional[int] = None
    k: Optional[int] = None
    v: Optional[tuple[int, ...]] = None
    seq: Optional[str] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    workers: int = 1
    method: Optional[str] = None
    exact: bool = False
    fmt: str = "json"
    out: Optional[str] = None
    force: bool = False
    c_b_denominator: int = 3


def _jsonify(value):
    """Recursively convert report values to JSON-safe primitives.

    Integers become decimal strings (they routinely exceed the safe float
    range) and rationals become "num/den"; floats pass through.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (float, str)):
        return value
    if isinstance(value, Fraction):
        return format_exact(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if dataclasses.is_dataclass(value):
        return _jsonify(dataclasses.asdict(value))
    if hasattr(value, "value"):  # enums
        return value.value
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _dump_json(payload) -> str:
    return json.dumps(_jsonify(payload), sort_keys=True)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _cmd_count(cfg: RunConfig) -> str:
    return _dump_json({"n": cfg.n, "count": count_parking_functions(cfg.n)})


def _cmd_enumerate(cfg: RunConfig) -> str:
    lines = [",".join(str(v) for v in prefs)
             for prefs in enumerate_parking_functions(cfg.n, force=cfg.force)]
    return "\n".join(lines)


def _cmd_check(cfg: RunConfig) -> str:
    seq = PrefSeq.from_text(cfg.seq)
    return _dump_json({"n": seq.n, "seq": seq.text(),
                       "is_parking_function": is_parking_function(seq)})


def _cmd_completions(cfg: RunConfig) -> str:
    occ = completions_mod.OccupiedVector(cfg.n, cfg.v)
    if cfg.method == "formula":
        count = completions_mod.completions_count(occ)
    elif cfg.method == "block":
        ell = len(occ.v)
        first = occ.v[0]
        _require(occ.v == tuple(range(first, first + ell)),
                 "block method needs contiguous occupied spots")
        count = completions_mod.completions_count_block(cfg.n, first - 1, ell)
    elif cfg.method == "brute":
        count = completions_mod.completions_count_bruteforce(occ, force=cfg.force)
    else:
        raise ValueError(f"unknown method {cfg.method!r}")
    return _dump_json({"n": cfg.n, "v": list(occ.v), "method": cfg.method,
                       "count": count})


def _cmd_profile(cfg: RunConfig) -> str:
    seq = PrefSeq.from_text(cfg.seq)
    prof = cycle_profile(seq)
    return _dump_json({"n": prof.n, "counts": prof.sparse(), "total": prof.total})


def _cmd_sample(cfg: RunConfig) -> str:
    _require(cfg.samples is not None and cfg.seed is not None,
             "sample requires --samples and --seed")
    lines = []
    for succ in iter_sample_successors(cfg.n, cfg.samples, cfg.seed, cfg.workers):
        for row in succ + 1:
            lines.append(",".join(str(int(v)) for v in row))
    return "\n".join(lines)


def _moment_rows(cfg: RunConfig) -> list[tuple]:
    n = cfg.n
    if cfg.method == "enum":
        k_max = cfg.k if cfg.k is not None else n
        _require(1 <= k_max <= n, f"need 1 <= k <= n, got k={k_max}")
        enum = moments.enumeration_cycle_means(n, force=cfg.force)
        return [(n, k, "enum", enum.means[k - 1], "") for k in range(1, k_max + 1)]
    if cfg.method == "formula":
        k_max = cfg.k if cfg.k is not None else n
        _require(1 <= k_max <= n, f"need 1 <= k <= n, got k={k_max}")
        return [(n, k, "formula", moments.expected_k_cycles_exact(n, k, force=cfg.force), "")
                for k in range(1, k_max + 1)]
    if cfg.method == "mc":
        _require(cfg.samples is not None and cfg.seed is not None,
                 "mc method requires --samples and --seed")
        k_max = cfg.k if cfg.k is not None else min(n, 10)
        ests = moments.expected_k_cycles_mc(n, k_max, cfg.samples, cfg.seed, cfg.workers)
        return [(n, e.k, "mc", repr(e.mean), repr(e.stderr)) for e in ests]
    raise ValueError(f"unknown method {cfg.method!r}")


def _cmd_moments(cfg: RunConfig) -> str:
    rows = _moment_rows(cfg)
    lines = ["n,k,method,value,stderr"]
    for n, k, method, value, stderr in rows:
        if isinstance(value, Fraction):
            value = format_exact(value)
        lines.append(f"{n},{k},{method},{value},{stderr}")
    return "\n".join(lines)


def _cmd_stein(cfg: RunConfig) -> str:
    _require(cfg.d is not None, "stein requires --d")
    if cfg.exact:
        report = stein.stein_terms(cfg.n, cfg.d, mode="exact",
                                   c_b_denominator=cfg.c_b_denominator,
                                   force=cfg.force)
    else:
        _require(cfg.samples is not None and cfg.seed is not None,
                 "stein requires --exact or (--samples and --seed)")
        report = stein.stein_terms(cfg.n, cfg.d, mode="mc", samples=cfg.samples,
                                   seed=cfg.seed, workers=cfg.workers,
                                   c_b_denominator=cfg.c_b_denominator)
    return _dump_json(report)


def _tv_distribution(cfg: RunConfig) -> distributions.JointDistribution:
    if cfg.exact:
        return distributions.exact_joint_distribution(cfg.n, cfg.d, force=cfg.force)
    _require(cfg.samples is not None and cfg.seed is not None,
             "tv requires --exact or (--samples and --seed)")
    return distributions.empirical_joint_distribution(
        cfg.n, cfg.d, cfg.samples, cfg.seed, cfg.workers)


def _cmd_tv(cfg: RunConfig) -> str:
    _require(cfg.d is not None, "tv requires --d")
    dist = _tv_distribution(cfg)
    if cfg.fmt == "csv":
        header = ",".join(f"c_{k}" for k in range(1, cfg.d + 1)) + ",mass"
        lines = [header]
        for w in sorted(dist.mass):
            mass = dist.mass[w]
            mass_text = format_exact(mass) if isinstance(mass, Fraction) else repr(mass)
            lines.append(",".join(str(c) for c in w) + f",{mass_text}")
        return "\n".join(lines)
    tv = distributions.tv_distance_to_poisson(dist)
    return _dump_json({"n": cfg.n, "d": cfg.d, "tv": tv,
                       "bound": stein.tv_upper_bound(cfg.n, cfg.d),
                       "method": "exact" if cfg.exact else "mc"})


_DISPATCH = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "check": _cmd_check,
    "completions": _cmd_completions,
    "profile": _cmd_profile,
    "sample": _cmd_sample,
    "moments": _cmd_moments,
    "stein": _cmd_stein,
    "tv": _cmd_tv,
}


def run(cfg: RunConfig) -> int:
    """Dispatch a parsed invocation; returns the process exit status."""
    try:
        text = _DISPATCH[cfg.command](cfg)
    except GuardError as exc:
        _fail("guard", str(exc))
        return EXIT_GUARD
    except InternalConsistencyError as exc:
        _fail("internal-consistency", str(exc))
        return EXIT_INTERNAL
    except (ValueError, KeyError) as exc:
        _fail("usage", str(exc))
        return EXIT_USAGE
    _emit(text, cfg.out)
    return EXIT_OK


def _fail(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": {"type": kind, "message": message}},
                                sort_keys=True) + "\n")


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parkfunc",
        description="Cycle structure of uniformly random parking functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n=True, seeded=False, forceable=False, dim=False):
        if n:
            p.add_argument("--n", type=int, required=True)
        if dim:
            p.add_argument("--d", type=int, required=True)
        if seeded:
            p.add_argument("--samples", type=int)
            p.add_argument("--seed", type=int)
            p.add_argument("--workers", type=int, default=1)
        if forceable:
            p.add_argument("--force", action="store_true")
        p.add_argument("--out")

    common(sub.add_parser("count", help="number of parking functions"))
    common(sub.add_parser("enumerate", help="list all parking functions"),
           forceable=True)

    p = sub.add_parser("check", help="test the parking property of a sequence")
    p.add_argument("seq")
    p.add_argument("--out")

    p = sub.add_parser("completions", help="count completions of occupied spots")
    p.add_argument("--v", type=_int_list, required=True)
    p.add_argument("--method", choices=("formula", "block", "brute"),
                   default="formula")
    common(p, forceable=True)

    p = sub.add_parser("profile", help="cycle profile of a sequence")
    p.add_argument("seq")
    p.add_argument("--out")

    common(sub.add_parser("sample", help="draw uniform parking functions"),
           seeded=True)

    p = sub.add_parser("moments", help="cycle-count means (CSV)")
    p.add_argument("--k", type=int)
    p.add_argument("--method", choices=("enum", "formula", "mc"), default="enum")
    common(p, seeded=True, forceable=True)

    p = sub.add_parser("stein", help="exchangeable-pair discrepancy report")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--c-b-denominator", type=int, default=3, choices=(3, 4))
    common(p, seeded=True, forceable=True, dim=True)

    p = sub.add_parser("tv", help="total variation distance to product Poisson")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")
    common(p, seeded=True, forceable=True, dim=True)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = vars(args)
    seed = values.get("seed")
    if seed is None and values.get("samples") is not None:
        env = os.environ.get(SEED_ENV_VAR)
        if env is not None:
            seed = int(env)
    fields = {f.name for f in dataclasses.fields(RunConfig)}
    kwargs = {k: v for k, v in values.items() if k in fields and v is not None}
    kwargs["seed"] = seed
    kwargs["c_b_denominator"] = values.get("c_b_denominator", 3)
    return RunConfig(**kwargs)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
