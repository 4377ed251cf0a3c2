"""Verification suites: closed formulas against the web-reduction engine.

Each suite returns a list of :class:`Check` records; nothing is asserted
here, so callers decide how to report failures.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .invariants import (
    LITERAL, VERIFIED, ColoredLinkSpec, build_basis_closure, closure_eval, delta, jones_torus,
    torus_oracle,
)
from .qcomb import q_binom, q_multinom, quantum_binom
from .qlaurent import qpow
from .tails import stabilization_report
from .twist import (
    ANTIPARALLEL, PARALLEL, antiparallel_full, antiparallel_multi, check_commutation,
    oracle_check, parallel_full, parallel_multi, recurrence_coeffs, verify_recurrence,
)
from .webcore import WebSum, evaluate, evaluate_closed
from .webcore import builder as tb
from .webcore import corpus

__all__ = [
    "Check", "SUITES", "run_suite", "run_all",
    "braiding_parallel", "braiding_antiparallel", "clasp_annihilators",
    "suite_qcomb", "suite_skein", "suite_clasp", "suite_twist", "suite_torus", "suite_tails",
]

Q3 = qpow(6) + 1 + qpow(-6)
Q2 = qpow(3) + qpow(-3)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail and not self.ok else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.suite} {self.name}{tail}"


def _guard(suite: str, name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Check:
    try:
        r = fn()
    except Exception as exc:   # a crash is a failed check, not a crashed suite
        return Check(suite, name, False, f"{type(exc).__name__}: {exc}")
    ok, detail = r if isinstance(r, tuple) else (r, "")
    return Check(suite, name, bool(ok), detail)


# ----------------------------------------------------------------------
# shared constructions


def _at(word: str, p: int, piece: tb.Tangle) -> tb.Tangle:
    n = len(piece.bottom)
    return tb.tensor(tb.ident(word[:p]), piece, tb.ident(word[p + n:]))


def braiding_parallel(m: int, n: int, over: bool) -> tuple[WebSum, WebSum]:
    """``(crossing on top of JW(m+n, 0), JW(m+n, 0))`` as reduced sums."""
    box = tb.box(m + n, 0)
    c = tb.bundle_crossing("+" * m, "+" * n, over)
    return evaluate(tb.compose(box, c).diagram), evaluate(box.diagram)


def braiding_antiparallel(m: int, n: int, over: bool) -> tuple[WebSum, WebSum]:
    """Crossing after the H-web rearrangement of ``JW(m, n)``, clasped again, and ``JW(m, n)``."""
    box = tb.box(m, n)
    s = tb.web_bundle_crossing("+" * m, "-" * n)
    c = tb.bundle_crossing("-" * n, "+" * m, over)
    return evaluate(tb.compose(box, s, c, box).diagram), evaluate(box.diagram)


def clasp_annihilators(a: int, b: int) -> list[tuple[str, tb.Tangle]]:
    """Clasp ``JW(a, b)`` with a turnback or a trivalent vertex touching it directly."""
    word = "+" * a + "-" * b
    box = tb.box(a, b)
    out = []
    for p in range(len(word) - 1):
        x, y = word[p], word[p + 1]
        if x == y:
            out.append((f"merge above at {p}", tb.compose(box, _at(word, p, tb.merge(x)))))
            out.append((f"split below at {p}", tb.compose(_at(word[:p] + tb.flip(x) + word[p + 2:], p, tb.split(x)), box)))
        else:
            out.append((f"cap above at {p}", tb.compose(box, _at(word, p, tb.cap(x + y)))))
            out.append((f"cup below at {p}", tb.compose(_at(word[:p] + word[p + 2:], p, tb.cup(x + y)), box)))
    return out


# ----------------------------------------------------------------------
# suites


def suite_qcomb(max_color: int = 2, max_twists: int = 2) -> list[Check]:
    s = "qcomb"
    checks = []

    def pascal() -> bool:
        return all(q_binom(n, k) == q_binom(n - 1, k - 1) + qpow(6 * k) * q_binom(n - 1, k)
                   for n in range(1, 13) for k in range(n + 1))

    def symmetry() -> bool:
        return all(q_binom(n, k) == q_binom(n, n - k) and quantum_binom(n, k) == quantum_binom(n, n - k)
                   for n in range(13) for k in range(n + 1))

    def balancing() -> bool:
        return all(quantum_binom(n, k) == qpow(-3 * k * (n - k)) * q_binom(n, k)
                   for n in range(13) for k in range(n + 1))

    def chained() -> bool:
        return all(q_multinom(n, [a, b, n - a - b]) == q_binom(n, a) * q_binom(n - a, b)
                   for n in range(9) for a in range(n + 1) for b in range(n - a + 1))

    for name, fn in [("pascal", pascal), ("symmetry", symmetry), ("balancing", balancing),
                     ("multinomial chain", chained)]:
        checks.append(_guard(s, name, fn))
    return checks


def suite_skein(max_color: int = 2, max_twists: int = 2, seed: int = 0, confluence: int = 20) -> list[Check]:
    s = "skein"
    checks = [
        _guard(s, "circle", lambda: evaluate_closed(tb.trace(tb.ident("+")).diagram) == Q3),
        _guard(s, "bigon", lambda: evaluate(tb.compose(tb.split("-"), tb.merge("-")).diagram)
               == evaluate(tb.ident("+").diagram).scale(Q2)),
        _guard(s, "square", lambda: evaluate(tb.compose(tb.web_crossing("+", "-"), tb.web_crossing("-", "+")).diagram)
               == evaluate(tb.ident("+-").diagram) + evaluate(tb.compose(tb.cap("+-"), tb.cup("+-")).diagram)),
    ]
    for over, e in ((True, -8), (False, 8)):
        checks.append(_guard(s, f"kink over={over}",
                             lambda over=over, e=e: evaluate_closed(tb.trace(corpus.kink("+", over)).diagram)
                             == qpow(e) * Q3))
    pairs = corpus.move_corpus(seed)

    def moves() -> tuple[bool, str]:
        bad = [n for n, a, b in pairs if evaluate_closed(a) != evaluate_closed(b)]
        return not bad, f"{len(bad)} of {len(pairs)} differ, first {bad[:1]}"

    checks.append(_guard(s, f"moves ({len(pairs)} pairs)", moves))

    def confl() -> tuple[bool, str]:
        rng = random.Random(seed)
        for i in range(confluence):
            d = corpus.random_closed(rng)
            ref = evaluate_closed(d)
            for k in range(2):
                if evaluate_closed(d, random.Random(1000 * i + k)) != ref:
                    return False, f"diagram {i} depends on the reduction order"
        return True, ""

    checks.append(_guard(s, f"confluence ({confluence} diagrams)", confl))
    return checks


def suite_clasp(max_color: int = 2, max_twists: int = 2) -> list[Check]:
    s = "clasp"
    top = min(max_color, 3)
    checks = []
    for n in range(top + 1):
        checks.append(_guard(s, f"clasped circle {n}",
                             lambda n=n: evaluate_closed(tb.trace(tb.box(n, 0)).diagram) == delta(n)))
    colors = [(a, b) for a in range(top + 1) for b in range(top + 1) if 0 < a + b <= top]
    for a, b in colors:
        def absorb(a=a, b=b) -> bool:
            box = tb.box(a, b)
            return evaluate(tb.compose(box, box).diagram) == evaluate(box.diagram)
        checks.append(_guard(s, f"absorption ({a},{b})", absorb))

        def annihilate(a=a, b=b) -> tuple[bool, str]:
            bad = [name for name, t in clasp_annihilators(a, b) if len(evaluate(t.diagram))]
            return not bad, f"nonzero: {bad}"
        if a + b >= 2:
            checks.append(_guard(s, f"annihilation ({a},{b})", annihilate))
    # braiding stays at bundle sizes <= 2: (3,3) clasps of size 6 are far slower
    braid = min(max_color, 2)
    for m in range(1, braid + 1):
        for n in range(1, braid + 1):
            for over in (True, False):
                e = 2 * m * n if over else -2 * m * n
                checks.append(_guard(s, f"braiding parallel {m},{n} over={over}",
                                     lambda m=m, n=n, over=over, e=e: (lambda l, r: l == r.scale(qpow(e)))(
                                         *braiding_parallel(m, n, over))))
                # the right-hand bundle over (the builder's under flag) is a positive crossing here
                lam = (-qpow(1 if over else -1)) ** (m * n)
                checks.append(_guard(s, f"braiding antiparallel {m},{n} over={over}",
                                     lambda m=m, n=n, over=over, lam=lam: (lambda l, r: l == r.scale(lam))(
                                         *braiding_antiparallel(m, n, over))))
    return checks


def suite_twist(max_color: int = 2, max_twists: int = 2) -> list[Check]:
    s = "twist"
    checks = []

    def forms() -> bool:
        return all(f(a, b).forms_agree() for f in (antiparallel_full, parallel_full)
                   for a in range(6) for b in range(6))

    def special() -> bool:
        return all(antiparallel_multi(a, b, 1).entries == antiparallel_full(a, b).entries
                   and parallel_multi(a, b, 1).entries == parallel_full(a, b).entries
                   for a in range(6) for b in range(6))

    checks.append(_guard(s, "l-form equals k-form (s,t <= 5)", forms))
    checks.append(_guard(s, "m=1 specialization (s,t <= 5)", special))
    for kind in (PARALLEL, ANTIPARALLEL):
        for a in range(max_color + 1):
            for b in range(max_color + 1):
                for m in range(1, max_twists + 1):
                    def oracle(kind=kind, a=a, b=b, m=m) -> tuple[bool, str]:
                        rows = oracle_check(kind, a, b, m)
                        bad = [j for j, lhs, rhs in rows if lhs != rhs]
                        return not bad, f"closures {bad} differ"
                    checks.append(_guard(s, f"oracle {kind} s={a} t={b} m={m}", oracle))

    def commutation() -> tuple[bool, str]:
        bad = [(d, d + de) for d in range(7) for de in range(7 - d)
               if check_commutation(d + de, recurrence_coeffs(d, d + de))]
        return not bad, f"fails for (s, t) in {bad}"

    checks.append(_guard(s, "commutation condition (d+delta <= 6)", commutation))
    for a in range(1, max_color + 1):
        for b in range(a, max_color + 1):
            checks.append(_guard(s, f"recurrence s={a} t={b}", lambda a=a, b=b: verify_recurrence(a, b).ok))
    return checks


def suite_torus(max_color: int = 2, max_twists: int = 2, variant: str = VERIFIED) -> list[Check]:
    s = "torus"
    checks = []
    for kind in (PARALLEL, ANTIPARALLEL):
        for a in range(max_color + 1):
            for b in range(max_color + 1):
                def closure(kind=kind, a=a, b=b) -> tuple[bool, str]:
                    bad = [k for k in range(min(a, b) + 1)
                           if evaluate_closed(build_basis_closure(kind, a, b, k)) != closure_eval(a, b, k, kind)]
                    return not bad, f"basis indices {bad} differ"
                checks.append(_guard(s, f"closure {kind} s={a} t={b}", closure))
        for a in range(max_color + 1):
            for b in range(a, max_color + 1):
                for m in range(1, max_twists + 1):
                    def link(kind=kind, a=a, b=b, m=m) -> tuple[bool, str]:
                        f, e = torus_oracle(ColoredLinkSpec(kind, m, a, b), variant)
                        return f == e, f"formula {f} engine {e}"
                    checks.append(_guard(s, f"jones {kind} s={a} t={b} m={m} ({variant})", link))

        def symmetric(kind=kind) -> bool:
            return all(jones_torus(ColoredLinkSpec(kind, m, a, b), variant)
                       == jones_torus(ColoredLinkSpec(kind, m, b, a), variant)
                       for a in range(5) for b in range(5) for m in range(1, max_twists + 1))
        checks.append(_guard(s, f"color symmetry {kind}", symmetric))
    return checks


def suite_tails(max_color: int = 2, max_twists: int = 2, n_max: int = 8, variant: str = LITERAL) -> list[Check]:
    s = "tails"
    checks = []
    for kind in (PARALLEL, ANTIPARALLEL):
        for m in range(1, max_twists + 1):
            def stab(kind=kind, m=m) -> tuple[bool, str]:
                rep = stabilization_report(kind, m, n_max, variant)
                bad = [(n, e) for n, ok, e in rep.rows if not ok]
                return rep.ok, f"(n, first differing q-power): {bad}"
            checks.append(_guard(s, f"stabilization {kind} m={m} n<={n_max} ({variant} tail)", stab))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "qcomb": suite_qcomb,
    "skein": suite_skein,
    "clasp": suite_clasp,
    "twist": suite_twist,
    "torus": suite_torus,
    "tails": suite_tails,
}


def run_suite(name: str, max_color: int = 2, max_twists: int = 2, **kw) -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](max_color, max_twists, **kw)


def run_all(max_color: int = 2, max_twists: int = 2) -> list[Check]:
    out = []
    for name in SUITES:
        out.extend(run_suite(name, max_color, max_twists))
    return out
