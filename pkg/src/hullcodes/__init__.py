"""Hull dimensions, LCD and self-orthogonal codes over finite fields."""

from .code import (
    DEFAULT_CAP,
    CodeReport,
    LinearCode,
    apply_permutation,
    classify,
    code_from_generator,
    dual,
    dual_euclidean,
    dual_hermitian,
    griesmer,
    hull,
    hull_dim,
    intersect,
    intersection_dim,
    is_even_like,
    is_fsd,
    min_distance,
    weight_distribution,
)
from .constructions import (
    HullPrediction,
    direct_sum,
    lcd_bound_combine,
    matrix_product,
    predict_direct_sum_hull,
    predict_uuv_hull,
    u_uv,
)
from .field import Field, FieldElement, field_from_order, field_make, parse_field
from .matrix import Matrix, ToeplitzSpec
from .recipe import ConstructionRecipe, build_recipe

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP", "CodeReport", "ConstructionRecipe", "Field", "FieldElement",
    "HullPrediction", "LinearCode", "Matrix", "ToeplitzSpec", "apply_permutation",
    "build_recipe", "classify", "code_from_generator", "direct_sum", "dual",
    "dual_euclidean", "dual_hermitian", "field_from_order", "field_make", "griesmer",
    "hull", "hull_dim", "intersect", "intersection_dim", "is_even_like", "is_fsd",
    "lcd_bound_combine", "matrix_product", "min_distance", "parse_field",
    "predict_direct_sum_hull", "predict_uuv_hull", "u_uv", "weight_distribution",
]
