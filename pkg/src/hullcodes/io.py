"""Code files and report documents.

A code file holds ``q n k`` on its first line (``q`` may carry a modulus as
``q:c0,c1,...``) followed by k rows of n element codes.  Blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Optional

import numpy as np

from .code import CodeReport, LinearCode
from .errors import CodingError, ParseError
from .field import Field, parse_field

REPORT_FLAGS = (
    "lcd_e", "lcd_h", "so_e", "so_h", "sd_e", "sd_h",
    "almost_so_e", "almost_sd_e", "fsd_e", "fsd_h", "even_like", "odd_like",
)


@dataclass
class CodeFile:
    field: Field
    rows: np.ndarray
    code: LinearCode
    warnings: list[str] = dc_field(default_factory=list)


def parse_code_text(text: str) -> CodeFile:
    lines = [
        (i + 1, ln.split())
        for i, ln in enumerate(text.splitlines())
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty code file")
    lineno, header = lines[0]
    if len(header) != 3:
        raise ParseError("header must be 'q n k'", lineno)
    try:
        F = parse_field(header[0])
        n, k = int(header[1]), int(header[2])
    except CodingError as exc:
        raise ParseError(str(exc), lineno) from exc
    except ValueError as exc:
        raise ParseError(f"bad header: {exc}", lineno) from exc
    if n < 1 or k < 0:
        raise ParseError("need n >= 1 and k >= 0", lineno)
    body = lines[1:]
    if len(body) != k:
        where = body[k][0] if len(body) > k else (body[-1][0] if body else lineno)
        raise ParseError(f"expected {k} rows, found {len(body)}", where)
    rows = np.zeros((k, n), dtype=np.int64)
    for r, (ln, tokens) in enumerate(body):
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, found {len(tokens)}", ln)
        try:
            vals = [int(t) for t in tokens]
        except ValueError as exc:
            raise ParseError(f"non-integer entry: {exc}", ln) from exc
        if any(not 0 <= v < F.q for v in vals):
            raise ParseError(f"entries must lie in [0, {F.q})", ln)
        rows[r] = vals
    code = LinearCode(F, rows if k else np.zeros((0, n), dtype=np.int64))
    warnings = []
    if code.k < k:
        warnings.append(f"generator has rank {code.k} < {k}; reduced to the row space")
    return CodeFile(F, rows, code, warnings)


def read_code_file(path) -> CodeFile:
    cf = parse_code_text(Path(path).read_text())
    from .recipe import ConstructionRecipe

    cf.code.recipe = ConstructionRecipe("file", (), {"path": str(path)})
    return cf


def format_code(C: LinearCode) -> str:
    head = f"{C.field.spec_string()} {C.n} {C.k}"
    body = [" ".join(str(int(x)) for x in row) for row in C.G]
    return "\n".join([head] + body) + "\n"


def write_code_file(C: LinearCode, path) -> None:
    Path(path).write_text(format_code(C))


# -- reports -----------------------------------------------------------------------

def report_document(rep: CodeReport, recipe=None) -> dict:
    """JSON-ready dict; every key is present, unknowns are null with a reason."""
    reasons = dict(rep.reasons)
    flags = {key: rep.flags.get(key) for key in REPORT_FLAGS}
    for key, val in flags.items():
        if val is None and key not in reasons:
            reasons[key] = "not computed"
    return {
        "params": [rep.q, rep.n, rep.k, rep.d],
        "distance_mode": rep.distance_mode,
        "hull_e": rep.hull_e,
        "hull_h": rep.hull_h,
        "flags": flags,
        "griesmer": {"bound": rep.griesmer_bound, "meets": rep.griesmer_meets},
        "recipe": recipe.to_dict() if recipe is not None else None,
        "reasons": dict(sorted(reasons.items())),
    }


def _flatten(doc: dict, prefix: str = "") -> dict:
    out = {}
    for key, val in doc.items():
        name = f"{prefix}{key}"
        if key == "params":
            out.update(dict(zip(("q", "n", "k", "d"), val)))
        elif key in ("recipe",):
            out[name] = json.dumps(val, sort_keys=True) if val is not None else None
        elif isinstance(val, dict):
            out.update(_flatten(val, name + "."))
        else:
            out[name] = val
    return out


def _tsv_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_report(doc: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "tsv":
        flat = _flatten(doc)
        return "\t".join(flat) + "\n" + "\t".join(_tsv_value(v) for v in flat.values()) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def render_rows(rows: list[dict], fmt: str = "json") -> str:
    """Several flat records: a JSON array or a TSV table with one header."""
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if not rows:
        return ""
    keys = list(rows[0])
    lines = ["\t".join(keys)]
    lines += ["\t".join(_tsv_value(r.get(k)) for k in keys) for r in rows]
    return "\n".join(lines) + "\n"
