"""Exact divisor calculus on rational normal scrolls."""

from .core import (
    ConeClass,
    PairClass,
    PicClass,
    Regime,
    ScrollType,
    binom,
    canonical_class,
    classify,
    exceptional_class,
    parse_scroll,
    pic_intersect,
    strict_image,
)
from .errors import ScrollError

__all__ = [
    "ConeClass",
    "PairClass",
    "PicClass",
    "Regime",
    "ScrollError",
    "ScrollType",
    "binom",
    "canonical_class",
    "classify",
    "exceptional_class",
    "parse_scroll",
    "pic_intersect",
    "strict_image",
]
