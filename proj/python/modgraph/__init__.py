"""Intersection graphs of submodules of finite modules."""

import json

from ._modgraph import CapExceeded, Error, InvalidInput
from . import _modgraph

__all__ = [
    "CapExceeded",
    "Error",
    "InvalidInput",
    "chromatic_number",
    "clique_number",
    "graph",
    "instance_id",
    "invariants",
    "lattice",
    "normalize",
    "verify",
    "zoo",
]


def _text(spec):
    return spec if isinstance(spec, str) else json.dumps(spec)


def _caps(caps):
    if not caps:
        return ""
    return ",".join(f"{k}={v}" for k, v in sorted(caps.items()))


def normalize(spec):
    return json.loads(_modgraph.normalize(_text(spec)))


def instance_id(spec):
    return _modgraph.instance_id(_text(spec))


def lattice(spec, format="text", caps=None):
    out = _modgraph.lattice(_text(spec), format, _caps(caps))
    return json.loads(out) if format == "json" else out


def graph(spec, format="dot", caps=None):
    out = _modgraph.graph(_text(spec), format, _caps(caps))
    return json.loads(out) if format == "json" else out


def invariants(spec, caps=None):
    return json.loads(_modgraph.invariants(_text(spec), _caps(caps)))


def verify(family="named", checks="all", caps=None, timing=False):
    """Run checks over a family; returns (records, failed)."""
    records, _, failed = _modgraph.verify(family, checks, _caps(caps), timing)
    return [json.loads(line) for line in records.splitlines() if line], failed


def zoo(family="named"):
    return json.loads(_modgraph.zoo(family))


def clique_number(order, edges):
    """Maximum clique as a list of vertices."""
    return _modgraph.clique_number(order, [tuple(e) for e in edges])


def chromatic_number(order, edges):
    """Optimal coloring as a list of colors; the count is max + 1."""
    colors = _modgraph.chromatic_number(order, [tuple(e) for e in edges])
    return max(colors, default=-1) + 1, colors
