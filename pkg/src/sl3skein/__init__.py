"""Exact A2 (sl3) skein computations: twist formulas, torus-link invariants and tails."""

from __future__ import annotations

__version__ = "0.1.0"
