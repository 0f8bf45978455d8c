"""Python front end to the listfold core.

Graphs, lists and colorings cross the boundary as the same JSON documents
the CLI reads and writes; this module decodes them into plain Python values.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional

from . import _listfold
from ._listfold import ColorError, GadgetError, GraphError, SolverError

__all__ = [
    "ColorError",
    "GadgetError",
    "GraphError",
    "SolverError",
    "audit_coloring",
    "audit_exhaustive",
    "check_certificate",
    "chi_f_bounds",
    "composed_counts",
    "epsilon",
    "gadget_dot",
    "gadget_graph",
    "gadget_lists",
    "independence_number",
    "solve",
    "verify_coloring",
    "verify_lemma1",
    "verify_theorem1",
]


def _text(doc: Any) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def epsilon(m: int) -> Fraction:
    """(ceil(m/17) - 1) / m as an exact fraction."""
    return Fraction(*_listfold.epsilon(m))


def gadget_graph() -> dict:
    return json.loads(_listfold.gadget_graph("json"))


def gadget_dot() -> str:
    return _listfold.gadget_graph("dot")


def gadget_lists(m: int, e: Optional[int] = None) -> dict:
    return json.loads(_listfold.gadget_lists(m, e))


def composed_counts(m: int) -> dict:
    raw = _listfold.composed_counts(m)
    return {k: int(v) for k, v in raw.items()}


def solve(graph, lists, b: int, *, seconds: Optional[float] = None, nodes: Optional[int] = None,
          orbit_symmetry: bool = True, odd_cycle_cut: bool = False, method: str = "search") -> dict:
    out = _listfold.solve(_text(graph), _text(lists), b, seconds, nodes, orbit_symmetry, odd_cycle_cut, method)
    if out["witness"] is not None:
        out["witness"] = json.loads(out["witness"])
    return out


def verify_coloring(graph, lists, coloring) -> tuple[bool, str]:
    return _listfold.verify_coloring(_text(graph), _text(lists), _text(coloring))


def verify_lemma1(m: int, seconds: Optional[float] = None) -> tuple[str, dict]:
    status, cert = _listfold.verify_lemma1(m, seconds)
    return status, json.loads(cert)


def verify_theorem1(m: int, mode: str = "exhaustive", seconds: Optional[float] = None, cap: int = 100) -> tuple[str, dict]:
    verdict, cert = _listfold.verify_theorem1(m, mode, seconds, cap)
    return verdict, json.loads(cert)


def check_certificate(cert) -> dict:
    return _listfold.check_certificate(_text(cert))


def audit_exhaustive(m: int, e: Optional[int] = None, seconds: Optional[float] = None) -> dict:
    return _listfold.audit_exhaustive(m, e, seconds)


def audit_coloring(m: int, e: Optional[int], coloring) -> dict:
    return json.loads(_listfold.audit_coloring(m, e, _text(coloring)))


def chi_f_bounds(graph, max_b: int = 4, seconds: Optional[float] = None) -> dict:
    out = _listfold.chi_f_bounds(_text(graph), max_b, seconds)
    out["lower"] = Fraction(*out["lower"])
    if out["upper"] is not None:
        out["upper"] = Fraction(*out["upper"])
    return out


def independence_number(graph) -> int:
    return _listfold.independence_number(_text(graph))
