"""Canonical JSON for cones, p-cones, contexts and reports.

Every integer is written as a decimal string so values beyond 53 bits
survive any JSON reader.  Keys are sorted and lists are in canonical order,
so equal inputs give byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

from .cyclic import IndexSet
from .pcone import PCone, PExpression, StratumContext
from .polycone import PolyCone
from .ppoly import PPoly


def _ints(v) -> list[str]:
    return [str(int(x)) for x in v]


def _p_json(p) -> str:
    return "symbolic" if isinstance(p, PPoly) else str(p)


def _p_load(s: str):
    from .ppoly import P
    return P if s == "symbolic" else int(s)


def ctx_to_json(ctx: StratumContext) -> dict:
    return {"n": str(ctx.n), "R": _ints(ctx.R), "S": _ints(ctx.S), "p": _p_json(ctx.p)}


def ctx_from_json(d: dict) -> StratumContext:
    n = int(d["n"])
    return StratumContext.make(n, [int(x) for x in d["R"]], [int(x) for x in d["S"]], _p_load(d["p"]))


def cone_to_json(cone: PolyCone) -> dict:
    c = cone.canonical()
    return {
        "n": str(c.n),
        "hrep": [_ints(f) for f in c.hrep],
        "rays": [_ints(r) for r in c.rays],
        "lineality": [_ints(l) for l in c.lineality_generators],
    }


def cone_from_json(d: dict) -> PolyCone:
    def rows(key):
        return [tuple(int(x) for x in r) for r in d[key]]
    return PolyCone(int(d["n"]), hrep=rows("hrep"), rays=rows("rays"), lineality=rows("lineality"))


def pcone_to_json(c: PCone) -> dict:
    out = ctx_to_json(c.context)
    out["expressions"] = [{"d": str(e.d), "T": _ints(e.T)} for e in c.expressions]
    out.update({k: v for k, v in cone_to_json(c.realized).items() if k != "n"})
    return out


def pcone_from_json(d: dict) -> PCone:
    ctx = ctx_from_json(d)
    exprs = tuple(
        PExpression(int(e["d"]), IndexSet.of(ctx.n, [int(x) for x in e["T"]]), ctx.n, ctx.p)
        for e in d["expressions"]
    )
    return PCone(ctx, exprs)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"
