from .base import BuilderRegistry, RingBuilder, builder_registry
from .manager import (
    ConstructionManager,
    build,
    build_corner,
    build_d3_pattern,
    build_dorroh,
    build_hst,
    build_hurwitz_trunc,
    build_ks,
    build_local16,
    build_lst,
    build_matrix_family,
    build_product,
    build_skewpower_trunc,
    build_t_trunc,
    build_table_ring,
    build_zn,
    construction_manager,
    parse_descriptor,
    zn,
)
from .corner import CornerRing
from .dorroh import DorrohRing
from .generalized import GeneralizedMatrixRing
from .local16 import Local16Ring
from .matrix import HstRing, LstRing, MatrixPatternRing
from .scalar import ProductRing, TruncatedSequenceRing, ZnRing
from .series import EndomorphismMap, TruncatedSeriesRing
from .table import TableRing, table_descriptor

__all__ = [
    "BuilderRegistry",
    "RingBuilder",
    "builder_registry",
    "ConstructionManager",
    "build",
    "build_corner",
    "build_d3_pattern",
    "build_dorroh",
    "build_hst",
    "build_hurwitz_trunc",
    "build_ks",
    "build_local16",
    "build_lst",
    "build_matrix_family",
    "build_product",
    "build_skewpower_trunc",
    "build_t_trunc",
    "build_table_ring",
    "build_zn",
    "construction_manager",
    "parse_descriptor",
    "zn",
    "CornerRing",
    "DorrohRing",
    "GeneralizedMatrixRing",
    "Local16Ring",
    "HstRing",
    "LstRing",
    "MatrixPatternRing",
    "ProductRing",
    "TruncatedSequenceRing",
    "ZnRing",
    "EndomorphismMap",
    "TruncatedSeriesRing",
    "TableRing",
    "table_descriptor",
]
