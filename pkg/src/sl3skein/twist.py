"""Full-twist expansions of two clasped bundles in basis webs.

Basis web ``k`` (``0 <= k <= d = min(s, t)``) has ``k`` strands of the shorter
bundle running straight through and ``l = d - k`` strands involved in the
stair (parallel) or the turnbacks (antiparallel).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .qcomb import q_binom, q_multinom, q_pochhammer
from .qlaurent import QLaurent, QRational, qpow
from .webcore import evaluate_closed
from .webcore import webs

__all__ = [
    "PARALLEL", "ANTIPARALLEL", "K_FORM", "L_FORM",
    "TwistExpansion", "LatticeCoeffFns", "CommutationViolated",
    "lattice_expand", "check_commutation", "antiparallel_full", "antiparallel_multi",
    "parallel_full", "parallel_multi", "twist_expansion", "chains",
    "recurrence_coeffs", "RecurrenceReport", "verify_recurrence",
    "oracle_check",
]

PARALLEL = webs.PARALLEL
ANTIPARALLEL = webs.ANTIPARALLEL
K_FORM = "k_form"
L_FORM = "l_form"

ZERO = QLaurent.zero()


class CommutationViolated(ValueError):
    pass


def _poch_ratio(a: int, b: int) -> QLaurent:
    """``(q)_a / (q)_b`` for ``a >= b``."""
    return q_pochhammer(a).exact_div(q_pochhammer(b))


@dataclass(frozen=True)
class TwistExpansion:
    """Coefficients of a twisted clasped tangle in the basis webs.

    ``entries`` is keyed by ``k``.  ``l_entries``, when present, holds the
    coefficients computed independently from the loop-indexed formula.
    """

    kind: str
    s: int
    t: int
    m: int
    entries: dict[int, QLaurent]
    l_entries: dict[int, QLaurent] | None = None
    basis_convention: str = K_FORM

    @property
    def d(self) -> int:
        return min(self.s, self.t)

    @property
    def delta(self) -> int:
        return abs(self.s - self.t)

    def coefficient(self, k: int) -> QLaurent:
        return self.entries.get(k, ZERO)

    def form(self, convention: str = K_FORM) -> dict[int, QLaurent]:
        """Entries indexed by ``k`` or by ``l = d - k``."""
        if convention == K_FORM:
            return dict(self.entries)
        if convention == L_FORM:
            return {self.d - k: c for k, c in self.entries.items()}
        raise ValueError(f"unknown basis convention {convention!r}")

    def as_convention(self, convention: str) -> TwistExpansion:
        return TwistExpansion(self.kind, self.s, self.t, self.m, self.entries,
                              self.l_entries, convention)

    def forms_agree(self) -> bool:
        if self.l_entries is None:
            return True
        return all(self.l_entries.get(self.d - k, ZERO) == self.coefficient(k)
                   for k in range(self.d + 1))

    def header(self) -> dict[str, object]:
        return {"kind": self.kind, "s": self.s, "t": self.t, "m": self.m,
                "basis_convention": self.basis_convention}

    def records(self) -> list[tuple[int, QLaurent]]:
        f = self.form(self.basis_convention)
        return [(i, f[i]) for i in sorted(f)]


@dataclass(frozen=True)
class LatticeCoeffFns:
    X: Callable[[int, int], QLaurent]
    Y: Callable[[int, int], QLaurent]


def check_commutation(n: int, fns: LatticeCoeffFns) -> list[tuple[int, int]]:
    """Lattice points ``k + l <= n - 2`` where ``X(k,l) Y(k+1,l) = q Y(k,l) X(k,l+1)`` fails."""
    q = qpow(6)
    bad = []
    for k in range(n - 1):
        for l in range(n - 1 - k):
            if fns.X(k, l) * fns.Y(k + 1, l) != q * fns.Y(k, l) * fns.X(k, l + 1):
                bad.append((k, l))
    return bad


def lattice_expand(n: int, fns: LatticeCoeffFns) -> dict[tuple[int, int], QLaurent]:
    """Coefficients of the end points ``(k, n - k)`` of all lattice paths."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    bad = check_commutation(n, fns)
    if bad:
        raise CommutationViolated(f"commutation condition fails at {bad[0]}")
    out = {}
    for k in range(n + 1):
        l = n - k
        c = QLaurent.one()
        for j in range(l):
            c = c * fns.Y(0, j)
        for i in range(k):
            c = c * fns.X(i, l)
        out[(k, l)] = c * q_binom(n, k)
    return out


# ----------------------------------------------------------------------
# single full twist


def antiparallel_full(s: int, t: int) -> TwistExpansion:
    d, de = min(s, t), abs(s - t)
    kf = {}
    lf = {}
    for k in range(d + 1):
        e = -4 * d * (d + de) - 6 * d + 6 * k * (k + de) + 6 * k
        kf[k] = qpow(e) * _poch_ratio(d + de, k + de) * q_binom(d, k)
    for l in range(d + 1):
        e = 2 * s * t + 6 * (l * l - l) - 6 * (s + t) * l
        lf[l] = qpow(e) * q_pochhammer(l) * q_binom(s, l) * q_binom(t, l)
    return TwistExpansion(ANTIPARALLEL, s, t, 1, kf, lf)


def parallel_full(s: int, t: int) -> TwistExpansion:
    d, de = min(s, t), abs(s - t)
    kf = {}
    lf = {}
    for k in range(d + 1):
        e = -2 * d * (d + de) - 3 * d + 6 * k * (k + de) + 3 * k
        kf[k] = qpow(e) * _poch_ratio(d + de, k + de) * q_binom(d, k)
    for l in range(d + 1):
        e = 4 * s * t + 6 * l * l - 3 * l - 6 * (s + t) * l
        lf[l] = qpow(e) * q_pochhammer(l) * q_binom(s, l) * q_binom(t, l)
    return TwistExpansion(PARALLEL, s, t, 1, kf, lf)


# ----------------------------------------------------------------------
# m full twists


def chains(d: int, m: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing ``(k_1, ..., k_m)`` with ``d >= k_1``."""
    for c in itertools.combinations_with_replacement(range(d, -1, -1), m):
        yield c


def _chain_multinom(d: int, ks: tuple[int, ...]) -> QLaurent:
    parts = [d - ks[0]] + [ks[i - 1] - ks[i] for i in range(1, len(ks))] + [ks[-1]]
    return q_multinom(d, parts)


def _multi(kind: str, s: int, t: int, m: int) -> TwistExpansion:
    if m < 1:
        raise ValueError("m must be at least 1")
    d, de = min(s, t), abs(s - t)
    anti = kind == ANTIPARALLEL
    lin = 2 if anti else 1
    if anti:
        pre = -4 * m * d * (d + de) - 12 * m * d
    else:
        pre = -2 * m * d * (d + de) - 6 * m * d
    acc: dict[int, QLaurent] = {}
    for ks in chains(d, m):
        km = ks[-1]
        e = pre + sum(6 * (k * (k + de) + lin * k) for k in ks)
        e += 6 * (d - km) if anti else 3 * (d - km)
        c = qpow(e) * _poch_ratio(d + de, km + de) * _chain_multinom(d, ks)
        acc[km] = acc.get(km, ZERO) + c
    entries = {k: acc.get(k, ZERO) for k in range(d + 1)}
    return TwistExpansion(kind, s, t, m, entries)


def antiparallel_multi(s: int, t: int, m: int) -> TwistExpansion:
    return _multi(ANTIPARALLEL, s, t, m)


def parallel_multi(s: int, t: int, m: int) -> TwistExpansion:
    return _multi(PARALLEL, s, t, m)


def twist_expansion(kind: str, s: int, t: int, m: int = 1) -> TwistExpansion:
    if kind not in (PARALLEL, ANTIPARALLEL):
        raise ValueError(f"unknown orientation {kind!r}")
    if m == 1:
        return antiparallel_full(s, t) if kind == ANTIPARALLEL else parallel_full(s, t)
    return _multi(kind, s, t, m)


# ----------------------------------------------------------------------
# oracle comparisons


def oracle_check(kind: str, s: int, t: int, m: int) -> list[tuple[int, QRational, QRational]]:
    """``(j, engine, formula)`` for each test closure ``j = 0..d``."""
    exp = twist_expansion(kind, s, t, m)
    d = exp.d
    core = webs.twist_core(kind, s, t, m)
    basis = {k: webs.basis_core(kind, s, t, k) for k in range(d + 1)}
    rows = []
    for j in range(d + 1):
        lhs = evaluate_closed(webs.test_closure(kind, s, t, core, j))
        rhs = QRational(0)
        for k, c in exp.entries.items():
            if c:
                rhs = rhs + c * evaluate_closed(webs.test_closure(kind, s, t, basis[k], j))
        rows.append((j, lhs, rhs))
    return rows


def recurrence_coeffs(s: int, t: int, variant: str = "shifted") -> LatticeCoeffFns:
    """``X`` and ``Y`` of the parallel recurrence.

    ``shifted`` uses ``q^((k+delta)/3)`` and ``d+delta-l``; ``unshifted`` uses
    ``q^(k/3)`` and ``d-l``, which fails once the colors differ.
    """
    d, de = min(s, t), abs(s - t)

    def X(k: int, l: int) -> QLaurent:
        return qpow(4 * (d + de - l))

    if variant == "shifted":
        def Y(k: int, l: int) -> QLaurent:
            n = d + de - l
            return qpow(-1 + 2 * (k + de) - 4 * n) * (QLaurent.one() - qpow(6 * n))
    elif variant == "unshifted":
        def Y(k: int, l: int) -> QLaurent:
            n = d - l
            return qpow(-1 + 2 * k - 4 * n) * (QLaurent.one() - qpow(6 * n))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return LatticeCoeffFns(X, Y)


@dataclass
class RecurrenceReport:
    s: int
    t: int
    variant: str
    commutation_failures: list[tuple[int, int]] = field(default_factory=list)
    instances: list[tuple[int, int, int, bool]] = field(default_factory=list)   # (k, l, j, ok)

    @property
    def ok(self) -> bool:
        return not self.commutation_failures and all(r[3] for r in self.instances)


def verify_recurrence(s: int, t: int, variant: str = "shifted", engine: bool = True) -> RecurrenceReport:
    """Check the parallel recurrence symbolically and under engine test closures.

    Colors are ordered so that the shorter bundle is ``s`` (the full twist is
    symmetric in the two colors).
    """
    if s > t:
        s, t = t, s
    d = s
    fns = recurrence_coeffs(s, t, variant)
    rep = RecurrenceReport(s, t, variant, check_commutation(d + abs(s - t), fns))
    if not engine:
        return rep
    vals: dict[tuple[int, int, int], QRational] = {}

    def val(k: int, l: int, j: int) -> QRational:
        key = (k, l, j)
        if key not in vals:
            core = webs.sigma_web(s, t, k, l, outer_clasps=False)
            vals[key] = evaluate_closed(webs.test_closure(PARALLEL, s, t, core, j))
        return vals[key]

    for k in range(d):
        for l in range(d - k):
            for j in range(d + 1):
                lhs = val(k, l, j)
                rhs = fns.X(k, l) * val(k + 1, l, j) + fns.Y(k, l) * val(k, l + 1, j)
                rep.instances.append((k, l, j, lhs == rhs))
    return rep
