from .base import (Biproduct, Cofiber, DualityDatum, ModelCategory,
                   UnsupportedShape, biproduct_equations_hold,
                   triangle_equations_hold)
from .evconst import (UNIT, ZERO, EvConst, EvMorphism, EvObject,
                      enumerate_homs, ev_morphism, ev_object,
                      hom_group_structure)
from .product import ProductCategory, product_category
from .spanfin import SpanFin, SpanMorphism, span

__all__ = [
    "Biproduct", "Cofiber", "DualityDatum", "ModelCategory",
    "UnsupportedShape", "biproduct_equations_hold", "triangle_equations_hold",
    "UNIT", "ZERO", "EvConst", "EvMorphism", "EvObject", "enumerate_homs",
    "ev_morphism", "ev_object", "hom_group_structure",
    "ProductCategory", "product_category",
    "SpanFin", "SpanMorphism", "span",
]
