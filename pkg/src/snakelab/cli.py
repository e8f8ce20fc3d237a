"""Command-line front end: ``snakelab <command> ...``.

Exit status is 0 on success, 1 when the mathematical verdict is negative
(reducible, identity fails, criterion fails) and 2 on usage errors,
including cap violations and malformed monomials.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Sequence

from . import qcharacter
from .cache import CharacterCache, default_cache_dir
from .imaginary import ImaginaryInput, certify, imaginary_weight
from .inflation import (
    InflationTriple,
    check_identity,
    indstep_i,
    indstep_ii,
    indstep_iii,
    inflate_path,
    phi,
    truncate_H,
    verify_inflpaths,
)
from .lweight import DEFAULT_MAX_TERMS, CharacterTooLarge, LWeight, parse_monomial
from .paths import Path, enumerate_paths
from .qcharacter import NotCertified, ext_tsystem, simple_char, verify_identity
from .segments import factorize, position
from . import verify as acceptance

DEFAULT_MAX_RANK = 12


class UsageError(Exception):
    pass


@dataclass
class Config:
    max_rank: int = DEFAULT_MAX_RANK
    max_terms: int = DEFAULT_MAX_TERMS
    cache_dir: str | None = None
    use_cache: bool = True
    jobs: int = 1
    json: bool = False

    def check_rank(self, n: int) -> None:
        if n < 1:
            raise UsageError(f"rank must be positive, got {n}")
        if n > self.max_rank:
            raise UsageError(f"rank cap exceeded: n={n} > --max-rank {self.max_rank}")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


def _monomial(text: str, n: int) -> LWeight:
    try:
        return parse_monomial(text, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(cfg: Config, payload: dict, text: str) -> None:
    if cfg.json:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


# -- subcommands --------------------------------------------------------

def cmd_factorize(args, cfg: Config) -> int:
    cfg.check_rank(args.n)
    segs = factorize(args.values, args.i, args.n)
    _emit(cfg, {"i": args.i, "n": args.n, "segments": [list(s) for s in segs]},
          "\n".join("(" + ",".join(map(str, s)) + ")" for s in segs))
    return 0


def cmd_position(args, cfg: Config) -> int:
    cfg.check_rank(args.n)
    try:
        v = position(_ints(args.a), _ints(args.b), args.i, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"general": v.general, "clause": v.clause, "evidence": list(v.evidence) if v.evidence else None}
    _emit(cfg, payload, str(v))
    return 0 if v.general else 1


def _svg(paths: Sequence[Path], scale: int = 30) -> str:
    lo = min(min(p.values) for p in paths)
    hi = max(max(p.values) for p in paths)
    n = paths[0].n
    w, h = (n + 1) * scale + 2 * scale, (hi - lo) * scale + 2 * scale
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">']
    out.append(f'<rect width="{w}" height="{h}" fill="white"/>')
    for x in range(n + 2):
        for y in range(lo, hi + 1):
            out.append(f'<circle cx="{scale + x * scale}" cy="{scale + (hi - y) * scale}" r="1.5" fill="#bbb"/>')
    for k, p in enumerate(paths):
        pts = " ".join(f"{scale + x * scale},{scale + (hi - y) * scale}" for x, y in enumerate(p.values))
        hue = (k * 47) % 360
        out.append(f'<polyline points="{pts}" fill="none" stroke="hsl({hue},60%,40%)" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out)


def cmd_paths(args, cfg: Config) -> int:
    cfg.check_rank(args.n)
    if not 1 <= args.i <= args.n:
        raise UsageError(f"node {args.i} out of range [1,{args.n}]")
    paths = enumerate_paths(args.i, args.a, args.n)
    rows = []
    for p in paths:
        row = {"values": list(p.values)}
        if args.monomials:
            row["monomial"] = str(p.monomial())
        rows.append(row)
    lines = [",".join(map(str, p.values)) + (f"  {p.monomial()}" if args.monomials else "") for p in paths]
    if args.plot:
        FsPath(args.plot).write_text(_svg(paths))
        lines.append(f"wrote {args.plot}")
    _emit(cfg, {"i": args.i, "a": args.a, "n": args.n, "paths": rows}, "\n".join(lines))
    return 0


def _truncation(spec: str):
    kind, _, rest = spec.partition(":")
    if kind == "dominant" and not rest:
        return "dominant", None
    if kind not in ("H", "H1") or not rest:
        raise UsageError(f"--truncate expects H:ibar,n, H1:ibar,n or dominant; got {spec!r}")
    vals = _ints(rest)
    if len(vals) != 2:
        raise UsageError(f"--truncate {kind} needs ibar,n")
    ibar, n = vals
    if (n + 1) % (ibar + 1):
        raise UsageError(f"no inflation triple with ibar={ibar}, n={n}")
    return kind, InflationTriple(ibar, (n + 1) // (ibar + 1), n)


def cmd_qchar(args, cfg: Config) -> int:
    cfg.check_rank(args.n)
    x = _monomial(args.snake, args.n)
    try:
        ch = simple_char(x, cfg.max_terms)
    except NotCertified as exc:
        raise UsageError(str(exc)) from None
    route = qcharacter.certified_route(x)
    if args.truncate:
        kind, t = _truncation(args.truncate)
        if kind == "dominant":
            ch = ch.truncate(lambda m: m.is_dominant())
        else:
            if t.n != args.n:
                raise UsageError(f"truncation rank {t.n} differs from --n {args.n}")
            ch = truncate_H(ch, t, kind)
    payload = {"n": args.n, "highest": x.to_json(), "route": route, "terms": len(ch),
               "dimension": ch.dimension(), "character": ch.to_json()}
    text = "\n".join(
        [f"V({x})  route={route}  terms={len(ch)}  dim={ch.dimension()}"]
        + [(str(m) if c == 1 else f"{c}*{m}") for m, c in ch.sorted_terms()]
    )
    _emit(cfg, payload, text)
    return 0


def cmd_tensor(args, cfg: Config) -> int:
    cfg.check_rank(args.n)
    segs = [_ints(s) for s in args.segments]
    try:
        verdicts = [
            (p, q, position(segs[p], segs[q], args.i, args.n))
            for p in range(len(segs))
            for q in range(p + 1, len(segs))
        ]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    irreducible = all(v.general for _, _, v in verdicts)
    payload = {
        "irreducible": irreducible,
        "pairs": [{"p": p, "q": q, "general": v.general, "clause": v.clause} for p, q, v in verdicts],
    }
    lines = [f"{segs[p]} vs {segs[q]}: {v}" for p, q, v in verdicts]
    lines.append("irreducible" if irreducible else "reducible")
    _emit(cfg, payload, "\n".join(lines))
    return 0 if irreducible else 1


def cmd_tsys(args, cfg: Config) -> int:
    cfg.check_rank(args.n)
    x, y = _monomial(args.omega, args.n), _monomial(args.omega2, args.n)
    try:
        t = ext_tsystem(x, y)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        ok = verify_identity(t.lhs, t.rhs)
    except NotCertified as exc:
        raise UsageError(str(exc)) from None
    payload = {"lhs": str(t.lhs), "rhs": str(t.rhs), "omega_plus": str(t.omega_plus),
               "omega_minus": str(t.omega_minus), "holds": ok}
    _emit(cfg, payload, f"{t.lhs}\n= {t.rhs}\n{'holds' if ok else 'FAILS'}")
    return 0 if ok else 1


def _triple(args) -> InflationTriple:
    try:
        return InflationTriple(args.ibar, args.i, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_inflate(args, cfg: Config) -> int:
    cfg.check_rank(args.n)
    t = _triple(args)
    payload: dict = {"triple": list(t.astuple())}
    lines = []
    if args.monomial is not None:
        x = _monomial(args.monomial, t.ibar)
        y = phi(x, t)
        payload["monomial"] = str(x)
        payload["image"] = str(y)
        lines.append(f"{x} -> {y}")
    if args.path is not None:
        vals = tuple(_ints(args.path))
        if len(vals) != t.ibar + 2:
            raise UsageError(f"a rank {t.ibar} path has {t.ibar + 2} values")
        node = (vals[0] - vals[-1] + t.ibar + 1)
        if node % 2:
            raise UsageError("path endpoints have the wrong parity")
        node //= 2
        try:
            p = Path(t.ibar, node, vals[0] - node, vals)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        g = inflate_path(p, t)
        payload["path"] = list(p.values)
        payload["inflated_path"] = list(g.values)
        lines.append(f"{','.join(map(str, p.values))} -> {','.join(map(str, g.values))}")
    if not lines:
        raise UsageError("give --monomial and/or --path")
    _emit(cfg, payload, "\n".join(lines))
    return 0


def cmd_imaginary(args, cfg: Config) -> int:
    if args.type.upper() != "A":
        raise UsageError(
            f"type {args.type} is not supported: only type A families are implemented "
            "(the D4 example needs type-D characters; see the README)"
        )
    cfg.check_rank(args.n)
    try:
        inp = ImaginaryInput(args.n, args.i, tuple(_ints(args.b)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not args.certify:
        w = imaginary_weight(inp)
        _emit(cfg, {"omega": str(w), "omega_json": w.to_json()}, str(w))
        return 0
    cert = certify(inp)
    payload = cert.to_json()
    c = payload["certificates"]
    text = "\n".join(
        [f"omega = {cert.omega}"]
        + [f"  {k}: {c[k]}" for k in sorted(c)]
        + [f"verdict: {payload['verdict']}"]
    )
    _emit(cfg, payload, text)
    return 0 if cert.ok else 1


def _run_one(args: tuple[int, str]) -> acceptance.CriterionResult:
    return acceptance.run_criterion(*args)


def cmd_verify(args, cfg: Config) -> int:
    what = args.what
    if what in ("inflpaths", "indstep"):
        return _verify_inflation(args, cfg)
    try:
        selection = acceptance.parse_selection(what)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_one, [(k, args.profile) for k in selection]))
    else:
        results = acceptance.run(selection, args.profile)
    if cfg.json:
        print(acceptance.report_json(results, args.profile))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def _verify_inflation(args, cfg: Config) -> int:
    if None in (args.ibar, args.i, args.n):
        raise UsageError(f"verify {args.what} needs --ibar, --i and --n")
    cfg.check_rank(args.n)
    t = _triple(args)
    checks: dict[str, object] = {}
    if args.what == "inflpaths":
        snakes = acceptance._small_snakes(t.ibar)
        for w in snakes:
            checks[str(w)] = verify_inflpaths(w, t)
        ok = all(checks.values())
    else:
        for p in t.nodes:
            checks[f"i:{p}"] = check_identity(*indstep_i(p, t))
        for j in t.nodes:
            for k in t.nodes:
                if j < k:
                    checks[f"ii:{j},{k}"] = check_identity(*indstep_ii(j, k, t))
                if k >= j + t.i:
                    checks[f"iii:{j},{k}"] = check_identity(*indstep_iii(j, k, t))
        ok = all(v != "fail" for v in checks.values())
    payload = {"triple": list(t.astuple()), "check": args.what, "passed": ok, "results": checks}
    text = "\n".join(f"{k}: {v}" for k, v in checks.items()) + f"\n{'pass' if ok else 'fail'}"
    _emit(cfg, payload, text)
    return 0 if ok else 1


# -- parser -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="snakelab", description="Snake modules, KR segments and q-characters for type A.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
    p.add_argument("--cache-dir", default=None, help=f"character cache (default {default_cache_dir()})")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    # --json is also accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    s = sub.add_parser("factorize", parents=[common], help="split a multiset of shifts into segments")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("values", type=int, nargs="+")
    s.set_defaults(func=cmd_factorize)

    s = sub.add_parser("position", parents=[common], help="general position test for two segments")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_position)

    s = sub.add_parser("paths", parents=[common], help="list the paths of one family")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--monomials", action="store_true")
    s.add_argument("--plot", metavar="FILE.svg")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("qchar", parents=[common], help="q-character of a simple module")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--snake", required=True, help="node:shift[,node:shift...]")
    s.add_argument("--truncate", help="H:ibar,n | H1:ibar,n | dominant")
    s.set_defaults(func=cmd_qchar)

    s = sub.add_parser("tensor", parents=[common], help="irreducibility of a tensor product of KR modules on one node")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("segments", nargs="+", help="segments as comma-separated shifts")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("tsys", parents=[common], help="extended T-system for two overlapping snakes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--omega", required=True)
    s.add_argument("--omega2", required=True)
    s.set_defaults(func=cmd_tsys)

    s = sub.add_parser("inflate", parents=[common], help="apply the inflation map")
    s.add_argument("--ibar", type=int, required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--monomial")
    s.add_argument("--path", help="path values in rank ibar")
    s.set_defaults(func=cmd_inflate)

    s = sub.add_parser("imaginary", parents=[common], help="highest weight and certificates of an imaginary module")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--type", default="A")
    s.add_argument("--certify", action="store_true")
    s.set_defaults(func=cmd_imaginary)

    s = sub.add_parser("verify", parents=[common], help="acceptance criteria (all, 3, 1-5, ...) or inflpaths/indstep")
    s.add_argument("what", nargs="?", default="all")
    s.add_argument("--profile", choices=acceptance.PROFILES, default="smoke")
    s.add_argument("--ibar", type=int)
    s.add_argument("--i", type=int)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.max_rank < 1 or args.max_terms < 1 or args.jobs < 1:
            raise UsageError("caps and --jobs must be positive")
        cfg = Config(args.max_rank, args.max_terms, args.cache_dir, not args.no_cache, args.jobs, args.json)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
        qcharacter.use_cache(CharacterCache(cfg.cache_dir) if cfg.use_cache else None)
        try:
            return args.func(args, cfg)
        finally:
            qcharacter.use_cache(None)
    except UsageError as exc:
        print(f"snakelab: error: {exc}", file=sys.stderr)
        return 2
    except CharacterTooLarge as exc:
        print(f"snakelab: error: character size cap exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"snakelab: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
