"""JSON reading and writing for tables, phi-systems, near-domains and permutation groups.

Files are written with one top-level key per line and every table on a
single line, so output is byte-identical for identical structures.
"""
from __future__ import annotations

import json
from pathlib import Path

from .core import GroupTable, StructureError
from .near_domain import NearDomain
from .phi import PhiSystem
from .two_transitive import PermutationAction


def kind_of(data: dict) -> str:
    if "degree" in data:
        return "action"
    if "add" in data:
        return "near-domain"
    if "phi" in data:
        return "phi"
    if "mul" in data:
        return "group"
    raise StructureError(f"unrecognised structure with keys {sorted(data)}")


def _group(data) -> GroupTable:
    g = GroupTable(data["mul"], data["inv"])
    if "n" in data and data["n"] != g.n:
        raise StructureError(f"n = {data['n']} disagrees with a {g.order}x{g.order} table")
    return g


def from_dict(data: dict):
    try:
        kind = kind_of(data)
        if kind == "action":
            return PermutationAction(data["degree"], data["perms"], tuple(data.get("base", (1, 0))))
        g = _group(data)
        if kind == "group":
            return g
        if kind == "phi":
            return PhiSystem(g, data["phi"])
        return NearDomain(g, data["add"], data["sub"], data["L"], data.get("zero_mul"))
    except KeyError as exc:
        raise StructureError(f"missing key {exc}") from exc


def load(path):
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise StructureError(f"{path}: expected a JSON object")
    return from_dict(data)


def dumps(obj) -> str:
    data = obj if isinstance(obj, dict) else obj.to_dict()
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in data.items())
    return "{\n" + body + "\n}\n"


def dump(obj, path):
    Path(path).write_text(dumps(obj))
