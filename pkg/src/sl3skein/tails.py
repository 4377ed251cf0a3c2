"""Tail q-series of (2, 2m)-torus links and their stabilization checks.

With both colors equal to ``n`` the suitably normalized invariant ``f_n``
is a polynomial in q whose low-order coefficients freeze as ``n`` grows;
the limiting series is the tail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .invariants import LITERAL, VERIFIED, ColoredLinkSpec, jones_torus
from .qcomb import one_minus_q, q_pochhammer
from .qlaurent import QLaurent, QRational, qpow, series_truncate
from .twist import ANTIPARALLEL, PARALLEL

__all__ = [
    "TailSeries", "FractionalResidue", "tail_chains", "tail_series",
    "normalized_jones", "StabilizationReport", "stabilization_report",
]


class FractionalResidue(ArithmeticError):
    """The normalized invariant is not a power series in q."""


def _check_orientation(orientation: str) -> None:
    if orientation not in (PARALLEL, ANTIPARALLEL):
        raise ValueError(f"unknown orientation {orientation!r}")


@dataclass(frozen=True)
class TailSeries:
    orientation: str
    m: int
    order: int
    series: QLaurent

    def coefficients(self) -> list[int]:
        """Coefficients of ``q^0 .. q^order``."""
        return [self.series.coeff(6 * j) for j in range(self.order + 1)]

    def truncate(self, order: int) -> TailSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TailSeries(self.orientation, self.m, order, self.series.truncate(6 * order))


def _lin(orientation: str) -> int:
    return 2 if orientation == ANTIPARALLEL else 1


def tail_chains(orientation: str, m: int, order: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Chains ``k_1 >= ... >= k_m >= 0`` whose term can reach ``q^order``, with its valuation.

    The valuation ``sum(k_i^2 + c k_i) - c k_m`` is at least ``sum(k_i^2)``,
    so a partial chain is dropped once its squares exceed ``order``.
    """
    c = _lin(orientation)

    def rec(prefix: list[int], sq: int, top: int) -> Iterator[tuple[tuple[int, ...], int]]:
        if len(prefix) == m:
            v = sum(k * k + c * k for k in prefix) - c * prefix[-1]
            if v <= order:
                yield tuple(prefix), v
            return
        for k in range(top + 1):
            if sq + k * k > order:
                break
            prefix.append(k)
            yield from rec(prefix, sq + k * k, k)
            prefix.pop()

    if m < 1:
        raise ValueError("m must be at least 1")
    k1 = 0
    while k1 * k1 <= order:
        k1 += 1
    # k_1 ranges up to the largest value with k_1^2 <= order
    yield from rec([], 0, k1 - 1)


def tail_series(orientation: str, m: int, order: int, variant: str = LITERAL) -> TailSeries:
    """The chain-sum tail truncated at ``q^order``.

    ``literal`` sums ``q^v / ((q)_{k_1-k_2} ... (q)_{k_m})``.  ``verified``
    keeps the factor ``(q)_n / (q)_{k_m}`` of the finite invariant, whose
    limit ``(q)_inf / (q)_{k_m}`` is what ``f_n`` actually converges to.
    """
    _check_orientation(orientation)
    if variant not in (LITERAL, VERIFIED):
        raise ValueError(f"unknown variant {variant!r}")
    if order < 0:
        raise ValueError("order must be nonnegative")
    acc = QLaurent.zero()
    for ks, v in tail_chains(orientation, m, order):
        parts = [ks[i] - ks[i + 1] for i in range(m - 1)] + [ks[-1]]
        den = q_pochhammer(ks[-1]) if variant == VERIFIED else QLaurent.one()
        for p in parts:
            den = den * q_pochhammer(p)
        acc = acc + series_truncate(QRational(qpow(6 * v), den), order)
    if variant == VERIFIED:
        # (q)_order agrees with (q)_inf below q^(order+1)
        acc = acc * q_pochhammer(order)
    outer = one_minus_q(1) * one_minus_q(2)
    if orientation == PARALLEL:
        outer = outer * one_minus_q(1)
    return TailSeries(orientation, m, order, series_truncate(QRational(acc, outer), order))


def normalized_jones(orientation: str, m: int, n: int, variant: str = VERIFIED) -> QLaurent:
    """The framing-normalized invariant ``f_n`` with both colors ``n``."""
    _check_orientation(orientation)
    if n < 0:
        raise ValueError("n must be nonnegative")
    j = jones_torus(ColoredLinkSpec(orientation, m, n, n), variant)
    if orientation == ANTIPARALLEL:
        e = 4 * m * n * n + 12 * m * n
    else:
        e = 2 * m * n * n + 6 * m * n + 6 * n
    f = j.shift(e)
    if not f.q_exponents_integral() or (f and f.valuation < 0):
        raise FractionalResidue(f"normalized invariant {f} is not in Z[[q]]")
    return f


@dataclass
class StabilizationReport:
    orientation: str
    m: int
    n_max: int
    variant: str = LITERAL
    rows: list[tuple[int, bool, int | None]] = field(default_factory=list)   # (n, ok, first bad q-exponent)

    @property
    def ok(self) -> bool:
        return all(r[1] for r in self.rows)

    @property
    def first_failure(self) -> int | None:
        for n, ok, _ in self.rows:
            if not ok:
                return n
        return None

    def render(self) -> str:
        lines = [f"orientation={self.orientation} m={self.m} n_max={self.n_max} tail={self.variant}",
                 "n\tresult\tfirst_diff"]
        for n, ok, e in self.rows:
            lines.append(f"{n}\t{'pass' if ok else 'fail'}\t{'-' if e is None else e}")
        return "\n".join(lines)


def stabilization_report(orientation: str, m: int, n_max: int, variant: str = LITERAL) -> StabilizationReport:
    """Compare ``f_n`` with the tail modulo ``q^(n+1)`` for ``n = 0..n_max``."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    tail = tail_series(orientation, m, n_max, variant).series
    rep = StabilizationReport(orientation, m, n_max, variant)
    for n in range(n_max + 1):
        f = normalized_jones(orientation, m, n).truncate(6 * n)
        diff = f - tail.truncate(6 * n)
        bad = None if not diff else diff.valuation // 6
        rep.rows.append((n, bad is None, bad))
    return rep
