"""A2 webs in a disk and the skein rewriting engine."""

from __future__ import annotations

from .diagram import (
    BOUNDARY, CLASP, CROSSING, SINK, SOURCE, ValidationError, WebDiagram,
)
from .engine import (
    ClaspPresent, StuckDiagram, WebSum, clasp_expansion, evaluate, evaluate_closed,
    expand_clasp, reduce_to_basis, resolve_crossings,
)
from .parser import ParseError, build_web, format_web, parse_web

__all__ = [
    "BOUNDARY", "CLASP", "CROSSING", "SINK", "SOURCE",
    "ValidationError", "WebDiagram", "WebSum", "ClaspPresent", "StuckDiagram",
    "clasp_expansion", "evaluate", "evaluate_closed", "expand_clasp",
    "reduce_to_basis", "resolve_crossings",
    "ParseError", "build_web", "format_web", "parse_web",
]
