"""Command-line front end: compute elements, run verification suites, and
manage the on-disk rewrite-system cache.

Exit codes: 0 success, 1 a verification check failed, 2 invalid weight or
arguments, 3 a computation exceeded the rewrite cap (the message names the
cap needed).  Output is deterministic for a fixed argument vector (sampling
is seeded, never wall-clock)."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import freealg
from .freealg import (
    CacheCorrupt,
    CapExceeded,
    RewriteSystem,
    complete,
    default_cap,
    serre_relations,
)
from .shapovalov import (
    InductionPreconditionError,
    WeightError,
    theta_det,
    theta_inductive,
    theta_power,
    theta_sum,
)
from .suites import SUITES, run_suite
from .verma import HighestWeight

ENV_CACHE = "QSHAPO_CACHE"


@dataclass
class JobConfig:
    command: str
    n: int = 1
    m: int = 1
    lam: tuple | None = None
    mode: str = "symbolic"
    samples: int = 5
    seed: int = 0
    fmt: str = "text"
    method: str = "sum"
    suite: str = "hwv"
    cap: int | None = None
    cache_dir: str | None = None


# ----------------------------------------------------------------------------
# Cache management
# ----------------------------------------------------------------------------

def resolve_cache_dir(cfg_dir: str | None) -> Path:
    if cfg_dir:
        return Path(cfg_dir)
    env = os.environ.get(ENV_CACHE)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "qshapo"


def cache_path(cache_dir: Path, n: int, cap: int) -> Path:
    return cache_dir / f"rws_n{n}_cap{cap}.txt"


def load_or_build(n: int, cap: int, cache_dir: Path):
    """Return (system, status) with status in built/loaded/rebuilt."""
    path = cache_path(cache_dir, n, cap)
    if path.exists():
        try:
            rs = RewriteSystem.from_text(path.read_text())
            if rs.n == n and rs.cap == cap:
                return rs, "loaded"
            raise CacheCorrupt("header mismatch")
        except CacheCorrupt as exc:
            print(f"warning: cache {path} is corrupt ({exc}); rebuilding", file=sys.stderr)
            rs = complete(serre_relations(n), cap, n=n)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(rs.to_text())
            return rs, "rebuilt"
    rs = complete(serre_relations(n), cap, n=n)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(rs.to_text())
    return rs, "built"


def _register_system(n: int, cap: int, cache_dir: Path) -> RewriteSystem:
    """Load (or build) the system and make it the process-wide default so
    downstream code picks it up."""
    rs, _ = load_or_build(n, cap, cache_dir)
    freealg._SYSTEMS[(n, cap)] = rs
    return rs


# ----------------------------------------------------------------------------
# theta
# ----------------------------------------------------------------------------

def _render_evaluated(coords: dict, cfg: JobConfig) -> str:
    items = sorted(coords.items())
    if cfg.fmt == "json":
        obj = {
            "n": cfg.n,
            "m": cfg.m,
            "method": cfg.method,
            "lambda": list(cfg.lam) if cfg.lam is not None else None,
            "terms": [
                {"pbw": [list(p) for p in pbw], "coeff": str(c)} for pbw, c in items
            ],
        }
        return json.dumps(obj, indent=2)
    if cfg.fmt == "latex":
        parts = []
        for pbw, c in items:
            fs = "".join(f"f_{{{i},{j}}}" for (i, j) in pbw) or "1"
            parts.append(f"\\left({c}\\right) {fs}")
        body = " + ".join(parts)
        return (
            "\\documentclass{article}\n\\begin{document}\n"
            f"\\[ {body} \\]\n\\end{{document}}\n"
        )
    parts = []
    for pbw, c in items:
        fs = "".join(f"f[{i},{j}]" for (i, j) in pbw) or "1"
        cs = str(c)
        parts.append(fs if cs == "1" else f"({cs})\u00b7{fs}")
    return " + ".join(parts)


def cmd_theta(cfg: JobConfig) -> int:
    cache_dir = resolve_cache_dir(cfg.cache_dir)
    cap = cfg.cap if cfg.cap is not None else default_cap(cfg.n)
    if cfg.lam is not None and len(cfg.lam) != cfg.n:
        print(f"error: lambda must have {cfg.n} entries", file=sys.stderr)
        return 2
    if cfg.method in ("sum", "det") and cfg.m != 1:
        print("error: the sum and determinant forms are level-one; use "
              "--method power or inductive for m > 1", file=sys.stderr)
        return 2
    if cfg.method == "sum":
        element = theta_sum(cfg.n)
        if cfg.fmt == "json":
            print(json.dumps(element.to_json_obj(), indent=2))
        elif cfg.fmt == "latex":
            print(element.to_latex(), end="")
        else:
            print(element.to_text())
        return 0
    if cfg.method == "det":
        if cfg.lam is not None:
            hw = HighestWeight.numeric(cfg.lam)
        else:
            hw = HighestWeight.symbolic(cfg.n, hyperplane_m=cfg.m)
        coords = theta_det(cfg.n, hw)
        print(_render_evaluated(coords, cfg))
        return 0
    if cfg.method in ("inductive", "power"):
        if cfg.lam is None:
            print("error: this method needs --lambda", file=sys.stderr)
            return 2
        rs = _register_system(cfg.n, cap, cache_dir)
        if cfg.method == "inductive":
            coords = theta_inductive(cfg.n, cfg.m, cfg.lam, rs).normalized()
        else:
            coords = theta_power(cfg.n, cfg.m, cfg.lam, rs)
        print(_render_evaluated(coords, cfg))
        return 0
    print(f"error: unknown method {cfg.method}", file=sys.stderr)
    return 2


# ----------------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------------

def cmd_verify(cfg: JobConfig) -> int:
    cache_dir = resolve_cache_dir(cfg.cache_dir)
    _register_system(cfg.n, default_cap(cfg.n), cache_dir)
    checks = run_suite(
        cfg.suite,
        cfg.n,
        m=cfg.m,
        mode=cfg.mode,
        lam=cfg.lam,
        samples=cfg.samples,
        seed=cfg.seed,
    )
    all_pass = all(c["status"] == "pass" for c in checks)
    obj = {
        "suite": cfg.suite,
        "n": cfg.n,
        "m": cfg.m,
        "checks": checks,
        "all_pass": all_pass,
    }
    print(json.dumps(obj, indent=2, default=str))
    return 0 if all_pass else 1


# ----------------------------------------------------------------------------
# cache
# ----------------------------------------------------------------------------

def cmd_cache(cfg: JobConfig) -> int:
    cache_dir = resolve_cache_dir(cfg.cache_dir)
    cap = cfg.cap if cfg.cap is not None else default_cap(cfg.n)
    rs, status = load_or_build(cfg.n, cap, cache_dir)
    path = cache_path(cache_dir, cfg.n, cap)
    if status == "loaded":
        print(f"loaded from cache: {len(rs.rules)} rules (n={cfg.n}, cap={cap}) at {path}")
    else:
        print(f"{status}: {len(rs.rules)} rules (n={cfg.n}, cap={cap}), cached at {path}")
    return 0


# ----------------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------------

def _parse_lambda(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("lambda must be comma-separated integers")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qshapo",
        description="Exact Shapovalov-element computations for quantized sl(N+1).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("theta", help="compute a Shapovalov element")
    t.add_argument("--n", type=int, required=True, help="rank N")
    t.add_argument("--m", type=int, default=1, help="level m")
    t.add_argument(
        "--method", choices=["sum", "det", "inductive", "power"], default="sum"
    )
    t.add_argument("--lambda", dest="lam", type=_parse_lambda, default=None)
    t.add_argument("--format", dest="fmt", choices=["text", "json", "latex"], default="text")
    t.add_argument("--cap", type=int, default=None)
    t.add_argument("--cache-dir", default=None)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=sorted(SUITES), required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, default=1)
    v.add_argument("--mode", choices=["symbolic", "sampled"], default="symbolic")
    v.add_argument("--samples", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--lambda", dest="lam", type=_parse_lambda, default=None)
    v.add_argument("--cache-dir", default=None)

    c = sub.add_parser("cache", help="build or inspect the rewrite-system cache")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--cap", type=int, default=None)
    c.add_argument("--cache-dir", default=None)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = JobConfig(command=args.command)
    for field in (
        "n",
        "m",
        "lam",
        "mode",
        "samples",
        "seed",
        "fmt",
        "method",
        "suite",
        "cap",
        "cache_dir",
    ):
        if hasattr(args, field):
            setattr(cfg, field, getattr(args, field))
    if cfg.n < 1 or cfg.m < 1 or cfg.samples < 1:
        print("error: n, m and samples must be positive", file=sys.stderr)
        return 2
    try:
        if cfg.command == "theta":
            return cmd_theta(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg)
        if cfg.command == "cache":
            return cmd_cache(cfg)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (WeightError, InductionPreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"error: unknown command {cfg.command}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
