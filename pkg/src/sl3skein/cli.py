"""Command-line entry point: ``sl3skein {jones,tail,twist,reduce,verify}``.

Exit status is 0 on success, 1 when a computation fails (or a verification
check fails), and 2 on a usage error.  ``--format machine`` prints JSON in
which every polynomial is a list of ``[exponent, coefficient]`` pairs with
exponents in sixths of a power of q (``[6, 1]`` is ``q``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .invariants import LITERAL, VERIFIED, ColoredLinkSpec, jones_torus
from .qlaurent import QLaurent, QRational
from .tails import tail_series
from .twist import ANTIPARALLEL, K_FORM, L_FORM, PARALLEL, twist_expansion
from .verify import SUITES, Check, run_suite
from .webcore import ParseError, ValidationError, evaluate, format_web, parse_web

__all__ = ["CliConfig", "main", "build_parser", "parse_pairs"]

TEXT = "text"
MACHINE = "machine"


@dataclass(frozen=True)
class CliConfig:
    command: str
    fmt: str
    args: argparse.Namespace


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so ``main`` owns the exit status."""

    def error(self, message: str) -> None:   # type: ignore[override]
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _pos(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sl3skein", description="Exact sl3 skein computations.")
    p.add_argument("--format", choices=[TEXT, MACHINE], default=TEXT, dest="fmt")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    j = sub.add_parser("jones", help="colored invariant of a (2,2m) torus link")
    j.add_argument("--orientation", choices=[PARALLEL, ANTIPARALLEL], required=True)
    j.add_argument("--m", type=_pos, required=True)
    j.add_argument("--s", type=_nonneg, required=True)
    j.add_argument("--t", type=_nonneg, required=True)
    j.add_argument("--variant", choices=[VERIFIED, LITERAL], default=VERIFIED)

    t = sub.add_parser("tail", help="truncated tail series")
    t.add_argument("--orientation", choices=[PARALLEL, ANTIPARALLEL], required=True)
    t.add_argument("--m", type=_pos, required=True)
    t.add_argument("--order", type=_nonneg, required=True)
    t.add_argument("--variant", choices=[LITERAL, VERIFIED], default=LITERAL)

    w = sub.add_parser("twist", help="twisted clasped tangle in the basis webs")
    w.add_argument("--kind", choices=[PARALLEL, ANTIPARALLEL], required=True)
    w.add_argument("--s", type=_nonneg, required=True)
    w.add_argument("--t", type=_nonneg, required=True)
    w.add_argument("--m", type=_pos, default=1)
    w.add_argument("--convention", choices=[K_FORM, L_FORM], default=K_FORM)

    r = sub.add_parser("reduce", help="reduce a web description file ('-' for stdin)")
    r.add_argument("file")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--max-color", type=_nonneg, default=2)
    v.add_argument("--max-twists", type=_pos, default=2)
    v.add_argument("--tail-variant", choices=[LITERAL, VERIFIED], default=LITERAL,
                   help="tail compared against in the tails suite")
    return p


def _pairs(p: QLaurent) -> list[list[int]]:
    return [[e, c] for e, c in p.to_pairs()]


def parse_pairs(pairs: Sequence[Sequence[int]]) -> QLaurent:
    """Inverse of the machine rendering of a polynomial."""
    return QLaurent.from_pairs(pairs)


def _rational(r: QRational) -> dict[str, list[list[int]]]:
    return {"num": _pairs(r.num), "den": _pairs(r.den)}


def _emit(obj: object) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_jones(cfg: CliConfig) -> int:
    a = cfg.args
    spec = ColoredLinkSpec(a.orientation, a.m, a.s, a.t)
    j = jones_torus(spec, a.variant)
    if cfg.fmt == MACHINE:
        _emit({"orientation": a.orientation, "m": a.m, "s": a.s, "t": a.t,
               "variant": a.variant, "pairs": _pairs(j)})
    else:
        print(j)
    return 0


def _cmd_tail(cfg: CliConfig) -> int:
    a = cfg.args
    ts = tail_series(a.orientation, a.m, a.order, a.variant)
    if cfg.fmt == MACHINE:
        _emit({"orientation": a.orientation, "m": a.m, "order": a.order,
               "variant": a.variant, "pairs": _pairs(ts.series)})
    else:
        print(f"{ts.series} + O(q^{a.order + 1})")
    return 0


def _cmd_twist(cfg: CliConfig) -> int:
    a = cfg.args
    exp = twist_expansion(a.kind, a.s, a.t, a.m).as_convention(a.convention)
    recs = exp.records()
    if cfg.fmt == MACHINE:
        _emit({**exp.header(), "entries": [[i, _pairs(c)] for i, c in recs]})
    else:
        idx = "k" if a.convention == K_FORM else "l"
        print(f"kind={a.kind} s={a.s} t={a.t} m={a.m} convention={a.convention}")
        for i, c in recs:
            print(f"{idx}={i}: {c}")
    return 0


def _cmd_reduce(cfg: CliConfig) -> int:
    a = cfg.args
    if a.file == "-":
        text = sys.stdin.read()
    else:
        with open(a.file, encoding="utf-8") as fh:
            text = fh.read()
    d = parse_web(text)
    s = evaluate(d)
    if not d.boundary:
        c = s.scalar()
        if cfg.fmt == MACHINE:
            _emit({"scalar": _rational(c)})
        else:
            print(c)
        return 0
    terms = sorted(s.items(), key=lambda wc: wc[0].key)
    if cfg.fmt == MACHINE:
        _emit({"terms": [{"coefficient": _rational(c), "web": format_web(w)} for w, c in terms]})
    else:
        print(f"{len(terms)} basis term(s)")
        for w, c in terms:
            print(f"coefficient: {c}")
            print(format_web(w), end="")
    return 0


def _cmd_verify(cfg: CliConfig) -> int:
    a = cfg.args
    names = list(SUITES) if a.suite == "all" else [a.suite]
    checks: list[Check] = []
    for n in names:
        kw = {"variant": a.tail_variant} if n == "tails" else {}
        checks.extend(run_suite(n, a.max_color, a.max_twists, **kw))
    failed = sum(not c.ok for c in checks)
    if cfg.fmt == MACHINE:
        _emit({"checks": [{"suite": c.suite, "name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
               "failed": failed})
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


_COMMANDS = {
    "jones": _cmd_jones,
    "tail": _cmd_tail,
    "twist": _cmd_twist,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except _UsageError as exc:
        sys.stderr.write(str(exc))
        return 2
    except SystemExit as exc:   # --help
        return 0 if exc.code in (0, None) else 2
    cfg = CliConfig(ns.command, ns.fmt, ns)
    try:
        return _COMMANDS[cfg.command](cfg)
    except (ParseError, ValidationError, OSError) as exc:
        sys.stderr.write(f"sl3skein: {exc}\n")
        return 1
    except (ArithmeticError, ValueError) as exc:
        sys.stderr.write(f"sl3skein: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
