"""Dominating 2-broadcasts in graphs."""

import json

from ._core import *  # noqa: F401,F403
from ._core import GuardError, InputError, audit_bounds as _audit_bounds, reduce_dimacs as _reduce_dimacs

__all__ = [name for name in dir() if not name.startswith("_")]


def audit(tree):
    """Bound audit of a tree as a dict."""
    return json.loads(_audit_bounds(tree))


def reduce(dimacs_text):
    """Gadget graph and role map for a 3-CNF in DIMACS form."""
    graph, roles = _reduce_dimacs(dimacs_text)
    return graph, json.loads(roles)
