"""Python front end for the tdlc library.

Inputs are plain dicts in the same shapes the command line tool reads from
JSON files. Rational values come back as strings such as "-1/6".
"""

import json as _json

from ._core import TdlcError
from . import _core

__all__ = [
    "TdlcError",
    "run",
    "homology",
    "cohomology_compact",
    "relative_cohomology",
    "graph_invariants",
    "euler_characteristic",
    "unimodular",
    "tree_action_cohomology",
    "aut_tree_chi",
    "chevalley_chi",
    "davis_verdict",
]


def run(*args):
    """Runs the command line tool in process. Returns (exit code, stdout, stderr)."""
    return _core.run([str(a) for a in args])


def homology(complex_):
    return _core.homology(_json.dumps(complex_))


def cohomology_compact(complex_):
    return _core.cohomology_compact(_json.dumps(complex_))


def relative_cohomology(complex_, subcomplex):
    return _core.relative_cohomology(_json.dumps(complex_), _json.dumps(subcomplex))


def graph_invariants(graph):
    return _json.loads(_core.graph_invariants(_json.dumps(graph)))


def euler_characteristic(gog):
    return _json.loads(_core.euler_characteristic(_json.dumps(gog)))


def unimodular(gog):
    return _core.unimodular(_json.dumps(gog))


def tree_action_cohomology(gog, representation):
    return _json.loads(_core.tree_action_cohomology(_json.dumps(gog), _json.dumps(representation)))


def aut_tree_chi(d):
    return _json.loads(_core.aut_tree_chi(d))


def chevalley_chi(cartan_type, q):
    return _json.loads(_core.chevalley_chi(cartan_type, q))


def davis_verdict(coxeter, skip_empty_t=False, jobs=1):
    return _json.loads(_core.davis_verdict(_json.dumps(coxeter), skip_empty_t, jobs))
