"""JSON and text renderings of pipeline results.

Every JSON document carries ``schema_version`` and a ``kind`` tag
(``le``, ``compare``, ``newton``, ``diagram``, ``euler``, ``error``);
:func:`loads` inverts :func:`dumps` exactly.  Rationals are written as
strings such as ``"16/3"``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .geometry import NewtonDiagram
from .lenumbers import Check, CompareReport, LeResult
from .newton import NewtonNumber

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DiagramReport:
    diagram: NewtonDiagram
    polynomial: str
    J: tuple = ()
    table: tuple | None = None


@dataclass(frozen=True)
class EulerReport:
    euler: int
    nu0: int
    lambdas: tuple
    alphas: tuple


@dataclass(frozen=True)
class ErrorReport:
    reason: str
    message: str


def _table_to_json(rows) -> list:
    def simplices(items):
        return [{"verts": [list(v) for v in verts], "volume": str(vol)} for verts, vol in items]

    return [
        {
            "I": list(r["I"]),
            "weight": r["weight"],
            "reduced": {str(i0): simplices(items) for i0, items in r["reduced"].items()},
            "zero": simplices(r["zero"]),
        }
        for r in rows
    ]


def _table_from_json(rows) -> tuple:
    def simplices(items):
        return [(tuple(tuple(v) for v in s["verts"]), Fraction(s["volume"])) for s in items]

    return tuple(
        {
            "I": tuple(r["I"]),
            "weight": r["weight"],
            "reduced": {int(i0): simplices(items) for i0, items in r["reduced"].items()},
            "zero": simplices(r["zero"]),
        }
        for r in rows
    )


def to_dict(obj) -> dict:
    if isinstance(obj, LeResult):
        body = {
            "kind": "le",
            "n": obj.n,
            "d": obj.d,
            "d_source": obj.d_source,
            "variables": list(obj.variables),
            "alphas": list(obj.alphas),
            "boosted_alphas": list(obj.boosted_alphas),
            "lambdas": list(obj.lambdas),
            "nu0": obj.nu0,
            "nutilde": list(obj.nutilde),
            "euler": obj.euler,
            "mu_fd": obj.mu_fd,
            "newton_fd": obj.newton_fd,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in obj.checks],
            "assumptions": list(obj.assumptions),
        }
    elif isinstance(obj, CompareReport):
        body = {
            "kind": "compare",
            "diagrams_equal": obj.diagrams_equal,
            "d_f": obj.d_f,
            "d_g": obj.d_g,
            "lambda_f": None if obj.lambda_f is None else list(obj.lambda_f),
            "lambda_g": None if obj.lambda_g is None else list(obj.lambda_g),
            "verdict": obj.verdict,
        }
    elif isinstance(obj, NewtonNumber):
        body = {
            "kind": "newton",
            "value": "INFINITE" if obj.value is None else obj.value,
            "evaluations": [list(e) for e in obj.evaluations],
        }
    elif isinstance(obj, DiagramReport):
        body = {
            "kind": "diagram",
            "polynomial": obj.polynomial,
            "diagram": obj.diagram.to_dict(),
            "J": list(obj.J),
            "decomposition": None if obj.table is None else _table_to_json(obj.table),
        }
    elif isinstance(obj, EulerReport):
        body = {"kind": "euler", "euler": obj.euler, "nu0": obj.nu0,
                "lambdas": list(obj.lambdas), "alphas": list(obj.alphas)}
    elif isinstance(obj, ErrorReport):
        body = {"kind": "error", "reason": obj.reason, "message": obj.message}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {"schema_version": SCHEMA_VERSION, **body}


def from_dict(data: dict):
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema version {data.get('schema_version')!r}")
    kind = data["kind"]
    if kind == "le":
        return LeResult(
            n=data["n"], d=data["d"], alphas=tuple(data["alphas"]),
            boosted_alphas=tuple(data["boosted_alphas"]), lambdas=tuple(data["lambdas"]),
            nu0=data["nu0"], nutilde=tuple(data["nutilde"]), euler=data["euler"],
            mu_fd=data["mu_fd"], newton_fd=data["newton_fd"],
            checks=tuple(Check(c["name"], c["passed"], c["detail"]) for c in data["checks"]),
            d_source=data["d_source"], variables=tuple(data["variables"]),
            assumptions=tuple(data["assumptions"]),
        )
    if kind == "compare":
        return CompareReport(
            data["diagrams_equal"], data["d_f"], data["d_g"],
            None if data["lambda_f"] is None else tuple(data["lambda_f"]),
            None if data["lambda_g"] is None else tuple(data["lambda_g"]),
            data["verdict"],
        )
    if kind == "newton":
        value = None if data["value"] == "INFINITE" else data["value"]
        return NewtonNumber(value, tuple(tuple(e) for e in data["evaluations"]))
    if kind == "diagram":
        table = data["decomposition"]
        return DiagramReport(
            NewtonDiagram.from_dict(data["diagram"]), data["polynomial"], tuple(data["J"]),
            None if table is None else _table_from_json(table),
        )
    if kind == "euler":
        return EulerReport(data["euler"], data["nu0"], tuple(data["lambdas"]),
                           tuple(data["alphas"]))
    if kind == "error":
        return ErrorReport(data["reason"], data["message"])
    raise ValueError(f"unknown report kind {kind!r}")


def dumps(obj) -> str:
    return json.dumps(to_dict(obj), indent=2, sort_keys=True)


def loads(text: str):
    return from_dict(json.loads(text))


def _label(v) -> str:
    if not any(v):
        return "O"
    return "(" + ",".join(str(a) for a in v) + ")"


def _pairs(items) -> str:
    if not items:
        return "(∅;0)"
    return ", ".join(
        "({" + ",".join(["O"] + [_label(v) for v in verts]) + "};" + str(vol) + ")"
        for verts, vol in items
    )


def format_table(rows, J) -> str:
    """Aligned table of the decomposition data, one line per subset ``I``."""
    header = ["I", "(-1)^(n-|I|)|I|!"] + [f"reduced, i0={i0}" for i0 in J] + ["class 0"]
    lines = []
    for r in rows:
        lines.append(
            ["{" + ",".join(map(str, r["I"])) + "}", str(r["weight"])]
            + [_pairs(r["reduced"][i0]) for i0 in J]
            + [_pairs(r["zero"])]
        )
    widths = [max(len(row[k]) for row in [header] + lines) for k in range(len(header))]
    fmt = lambda row: "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()
    return "\n".join([fmt(header)] + [fmt(row) for row in lines])


def format_text(obj) -> str:
    if isinstance(obj, LeResult):
        out = [
            f"variables: {', '.join(obj.variables)}",
            f"d = {obj.d} ({obj.d_source})",
            f"exponents: {list(obj.alphas)} (boosted {list(obj.boosted_alphas)})",
        ]
        out += [f"lambda^{k} = {lam}" for k, lam in enumerate(obj.lambdas)]
        out.append(f"nu_0(f_d) = {obj.nu0}")
        out += [f"nu~_{k}(f_d) = {v}" for k, v in enumerate(obj.nutilde, 1)]
        out.append(f"reduced Euler characteristic = {obj.euler}")
        out.append(f"mu(f_d) = {obj.mu_fd}")
        out.append("checks:")
        out += [f"  {'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in obj.checks]
        out.append("assuming: " + "; ".join(obj.assumptions))
        return "\n".join(out)
    if isinstance(obj, CompareReport):
        out = [f"diagrams equal: {'yes' if obj.diagrams_equal else 'no'}"]
        if obj.diagrams_equal:
            out.append(f"f: d = {obj.d_f}, lambdas = {list(obj.lambda_f)}")
            out.append(f"g: d = {obj.d_g}, lambdas = {list(obj.lambda_g)}")
        out.append(f"verdict: {obj.verdict}")
        return "\n".join(out)
    if isinstance(obj, NewtonNumber):
        return str(obj)
    if isinstance(obj, DiagramReport):
        d = obj.diagram
        verts = list(d.vertices)
        out = [f"Newton diagram of {obj.polynomial}", "vertices:"]
        out += [f"  v{i} = {_label(v)}" for i, v in enumerate(verts)]
        out.append("maximal faces:")
        for face in d.maximal_faces:
            idx = ",".join(f"v{verts.index(v)}" for v in face.vertices)
            out.append(f"  dim {face.dim}: {{{idx}}}  normal {list(face.normal)}  level {face.level}")
        if obj.table is not None:
            out.append("")
            out.append(format_table(obj.table, obj.J))
        return "\n".join(out)
    if isinstance(obj, EulerReport):
        return str(obj.euler)
    if isinstance(obj, ErrorReport):
        return f"error ({obj.reason}): {obj.message}"
    raise TypeError(f"cannot format {type(obj).__name__}")


def format_report(obj, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(obj)
    if fmt == "text":
        return format_text(obj)
    raise ValueError(f"unknown format {fmt!r}")
