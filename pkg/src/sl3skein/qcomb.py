"""Quantum integers, q-Pochhammer symbols and q-binomial coefficients.

Balanced quantum objects (``[n]``, ``[n]!``, quantum binomials) live in
Z[q^(1/2), q^(-1/2)]; the q-Pochhammer family are honest polynomials in q.
All results are :class:`~sl3skein.qlaurent.QLaurent` values.
"""

from __future__ import annotations

import functools
import os
import threading
from typing import Sequence

from .qlaurent import QLaurent

__all__ = [
    "NegativeArgument",
    "PartsSumMismatch",
    "QCombCache",
    "quantum_int",
    "quantum_factorial",
    "quantum_binom",
    "q_pochhammer",
    "q_binom",
    "q_multinom",
    "one_minus_q",
]

ONE = QLaurent.one()


class NegativeArgument(ValueError):
    pass


class PartsSumMismatch(ValueError):
    pass


def _check(n: int, name: str = "n") -> None:
    if n < 0:
        raise NegativeArgument(f"{name} must be nonnegative, got {n}")


def one_minus_q(i: int) -> QLaurent:
    """``1 - q^i``."""
    return QLaurent({0: 1, 6 * i: -1}) if i else QLaurent.zero()


class QCombCache:
    """Memo tables for quantum factorials and q-Pochhammer symbols.

    Each table is grown incrementally under a lock, so a shared instance can
    serve several threads; results are identical to uncached computation.
    """

    def __init__(self, maxsize: int | None = None):
        if maxsize is None:
            env = os.environ.get("SL3SKEIN_CACHE_SIZE")
            maxsize = int(env) if env else 4096
        self.maxsize = maxsize
        self._lock = threading.Lock()
        self._qfact: list[QLaurent] = [ONE]
        self._poch: list[QLaurent] = [ONE]

    def quantum_factorial(self, n: int) -> QLaurent:
        _check(n)
        if n >= self.maxsize:
            return _quantum_factorial_uncached(n)
        with self._lock:
            table = self._qfact
            while len(table) <= n:
                k = len(table)
                table.append(table[-1] * _quantum_int(k))
            return table[n]

    def q_pochhammer(self, n: int) -> QLaurent:
        _check(n)
        if n >= self.maxsize:
            return _q_pochhammer_uncached(n)
        with self._lock:
            table = self._poch
            while len(table) <= n:
                k = len(table)
                table.append(table[-1] * one_minus_q(k))
            return table[n]

    def clear(self) -> None:
        with self._lock:
            self._qfact = [ONE]
            self._poch = [ONE]

    def sizes(self) -> tuple[int, int]:
        return len(self._qfact), len(self._poch)


_cache = QCombCache()


def default_cache() -> QCombCache:
    return _cache


@functools.lru_cache(maxsize=None)
def _quantum_int(n: int) -> QLaurent:
    # [n] = q^((n-1)/2) + q^((n-3)/2) + ... + q^(-(n-1)/2)
    return QLaurent({3 * (n - 1 - 2 * j): 1 for j in range(n)})


def _quantum_factorial_uncached(n: int) -> QLaurent:
    r = ONE
    for k in range(2, n + 1):
        r = r * _quantum_int(k)
    return r


def _q_pochhammer_uncached(n: int) -> QLaurent:
    r = ONE
    for k in range(1, n + 1):
        r = r * one_minus_q(k)
    return r


def quantum_int(n: int) -> QLaurent:
    """The balanced quantum integer ``[n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))``."""
    _check(n)
    return _quantum_int(n)


def quantum_factorial(n: int) -> QLaurent:
    return _cache.quantum_factorial(n)


def quantum_binom(n: int, k: int) -> QLaurent:
    """``[n]! / ([k]! [n-k]!)``; zero outside ``0 <= k <= n``."""
    _check(n)
    if k < 0 or k > n:
        return QLaurent.zero()
    return _quantum_binom(n, k)


@functools.lru_cache(maxsize=None)
def _quantum_binom(n: int, k: int) -> QLaurent:
    den = quantum_factorial(k) * quantum_factorial(n - k)
    return quantum_factorial(n).exact_div(den)


def q_pochhammer(n: int) -> QLaurent:
    """``(q)_n = (1 - q)(1 - q^2)...(1 - q^n)``."""
    return _cache.q_pochhammer(n)


def q_binom(n: int, k: int) -> QLaurent:
    """Gaussian binomial ``(q)_n / ((q)_k (q)_(n-k))``; zero outside ``0 <= k <= n``."""
    _check(n)
    if k < 0 or k > n:
        return QLaurent.zero()
    return _q_binom(n, k)


@functools.lru_cache(maxsize=None)
def _q_binom(n: int, k: int) -> QLaurent:
    return q_pochhammer(n).exact_div(q_pochhammer(k) * q_pochhammer(n - k))


def q_multinom(n: int, parts: Sequence[int]) -> QLaurent:
    """q-multinomial ``(q)_n / prod (q)_(k_i)``."""
    _check(n)
    for p in parts:
        _check(p, "part")
    if sum(parts) != n:
        raise PartsSumMismatch(f"parts {list(parts)} do not sum to {n}")
    return _q_multinom(n, tuple(sorted(parts)))


@functools.lru_cache(maxsize=None)
def _q_multinom(n: int, parts: tuple[int, ...]) -> QLaurent:
    den = ONE
    for p in parts:
        den = den * q_pochhammer(p)
    return q_pochhammer(n).exact_div(den)
