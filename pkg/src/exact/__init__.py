"""Exact scalar arithmetic and expression parsing"""
from .scalar import ParamSpace, Scalar, scalar_add, scalar_mul, scalar_eval
from .expression_parser import ExpressionParser, Tokenizer, parse_expr

__all__ = [
    "ParamSpace",
    "Scalar",
    "scalar_add",
    "scalar_mul",
    "scalar_eval",
    "ExpressionParser",
    "Tokenizer",
    "parse_expr",
]
