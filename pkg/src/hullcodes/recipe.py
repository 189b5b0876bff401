"""Construction provenance trees and their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import ParseError, UnsupportedKind

LEAF_KINDS = {"file", "grs", "repetition", "simplex", "even_weight", "toeplitz_fsd"}
INNER_KINDS = {"direct_sum", "u_uv", "matrix_product", "dual", "uuv_repetition", "fsd_double"}
KINDS = LEAF_KINDS | INNER_KINDS


@dataclass(frozen=True)
class ConstructionRecipe:
    """One node of a provenance tree: a rule, its inputs and its parameters."""

    kind: str
    children: tuple["ConstructionRecipe", ...] = ()
    parameters: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedKind(f"unknown recipe kind {self.kind!r}")
        object.__setattr__(self, "children", tuple(self.children))

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind}
        if self.parameters:
            out["parameters"] = self.parameters
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "ConstructionRecipe":
        if not isinstance(d, dict) or "kind" not in d:
            raise ParseError("recipe node needs a 'kind'")
        return cls(
            d["kind"],
            tuple(cls.from_dict(c) for c in d.get("children", [])),
            dict(d.get("parameters", {})),
        )

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)


def load_recipe(path) -> ConstructionRecipe:
    try:
        return ConstructionRecipe.from_dict(json.loads(Path(path).read_text()))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc


class RecipeError(Exception):
    """A constructor failed; ``path`` locates the failing node."""

    def __init__(self, path: str, cause: Exception):
        super().__init__(f"{path}: {type(cause).__name__}: {cause}")
        self.path = path
        self.cause = cause


def build_recipe(recipe: ConstructionRecipe, field=None, base_dir=None, _path="root"):
    """Materialise a recipe bottom-up and return the LinearCode.

    ``field`` is the default field for leaves that do not name one.
    """
    from . import constructions as cons
    from . import fsd, grs
    from .field import parse_field
    from .io import read_code_file

    p = recipe.parameters
    try:
        kids = [
            build_recipe(c, field, base_dir, f"{_path}/{i}:{c.kind}")
            for i, c in enumerate(recipe.children)
        ]
        F = parse_field(str(p["field"])) if "field" in p else field
        kind = recipe.kind
        if kind == "file":
            path = Path(p["path"])
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            C = read_code_file(path).code
        elif kind == "repetition":
            C = cons.repetition(F, int(p["n"]))
        elif kind == "simplex":
            C = cons.simplex(int(p["t"]))
        elif kind == "even_weight":
            C = cons.even_weight(int(p["n"]))
        elif kind == "grs":
            C = grs.grs_from_parameters(p, F)
        elif kind == "toeplitz_fsd":
            C = fsd.seed_from_dict(p).code
        elif kind == "direct_sum":
            C = kids[0]
            for other in kids[1:]:
                C = cons.direct_sum(C, other)
        elif kind == "u_uv":
            C = cons.u_uv(kids[0], kids[1])
        elif kind == "uuv_repetition":
            C, _ = cons.uuv_repetition_binary(kids[0])
        elif kind == "dual":
            C = kids[0].dual(p.get("flavor", "euclidean"))
        elif kind == "matrix_product":
            from .matrix import Matrix

            C = cons.matrix_product(kids, Matrix(kids[0].field, p["A"]))
        elif kind == "fsd_double":
            from .code import apply_permutation

            half = kids[0].k
            if any(c.n != 2 * half or c.k != half for c in kids):
                raise ValueError("fsd_double needs [2n, n] children of one half-length")
            C = kids[0]
            for other in kids[1:]:
                C = cons.direct_sum(C, other)
            C = apply_permutation(C, fsd.doubling_permutation(half, len(kids)))
        else:  # pragma: no cover - guarded by KINDS
            raise UnsupportedKind(kind)
    except RecipeError:
        raise
    except (KeyError, TypeError) as exc:
        raise RecipeError(_path, ValueError(f"missing or bad parameter {exc}")) from exc
    except Exception as exc:
        raise RecipeError(_path, exc) from exc
    C.recipe = recipe
    return C
