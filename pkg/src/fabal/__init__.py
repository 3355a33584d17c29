"""Faithfully balanced modules over ``Lambda_n`` and quadratic Nakayama algebras."""
from .errors import ResourceLimitError
from .modcat import (
    BasicModule, Interval, Leaf, NakayamaPresentation, cogen_closure, cohook,
    dual, dual_lambda_module, ext_dim, gen_closure, hom_dim, indecomposables,
    lambda_module, linear,
)
from .approx import gen1_category, gen1_critical, in_cogen1, in_gen1
from .fbcheck import is_balanced, is_faithful, is_fb, is_minimal_fb, oracle
from .count import fb_count, fb_enumerate, nakayama_count, size_polynomial

__all__ = [
    "ResourceLimitError", "BasicModule", "Interval", "Leaf", "NakayamaPresentation",
    "cogen_closure", "cohook", "dual", "dual_lambda_module", "ext_dim", "gen_closure",
    "hom_dim", "indecomposables", "lambda_module", "linear", "gen1_category",
    "gen1_critical", "in_cogen1", "in_gen1", "is_balanced", "is_faithful", "is_fb",
    "is_minimal_fb", "oracle", "fb_count", "fb_enumerate", "nakayama_count",
    "size_polynomial",
]
__version__ = "0.1.0"
