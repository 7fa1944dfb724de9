"""
Construction manager: realizes descriptors through the builder registry.
"""
import threading
import time
from typing import Any, Dict, List, Optional, Sequence

import structlog
from pydantic import ValidationError

from src.config.settings import settings
from src.core.errors import CapExceededError, DescriptorError
from src.core.ring import FiniteRing
from src.models.descriptor import ElementLiteral, RingDescriptor, RingKind
from .base import RingBuilder, builder_registry
from .corner import CornerBuilder
from .dorroh import DorrohBuilder
from .generalized import GeneralizedMatrixBuilder
from .local16 import Local16Builder
from .matrix import D3PatternBuilder, HstBuilder, LstBuilder, MatrixFamilyBuilder
from .scalar import ProductBuilder, TruncatedSequenceBuilder, ZnBuilder
from .series import SeriesBuilder
from .table import TableBuilder

logger = structlog.get_logger()


def parse_descriptor(data: Any) -> RingDescriptor:
    """Validate raw JSON data into a descriptor, raising DescriptorError on failure."""
    if isinstance(data, RingDescriptor):
        return data
    try:
        return RingDescriptor.model_validate(data)
    except ValidationError as e:
        messages = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'descriptor'}: {err['msg']}" for err in e.errors()
        )
        raise DescriptorError(f"invalid ring descriptor: {messages}") from e


class ConstructionManager:
    """Builds rings from descriptors and caches them by descriptor digest."""

    def __init__(self):
        self._register_builtin_builders()
        self._cache: Dict[str, FiniteRing] = {}
        self._lock = threading.Lock()

    def _register_builtin_builders(self):
        """Register built-in builders."""
        for builder in (
            ZnBuilder(),
            ProductBuilder(),
            TruncatedSequenceBuilder(),
            MatrixFamilyBuilder(RingKind.MN),
            MatrixFamilyBuilder(RingKind.UN),
            MatrixFamilyBuilder(RingKind.DN),
            MatrixFamilyBuilder(RingKind.VN),
            LstBuilder(),
            HstBuilder(),
            D3PatternBuilder(),
            GeneralizedMatrixBuilder(),
            DorrohBuilder(),
            SeriesBuilder(RingKind.HURWITZ_TRUNC),
            SeriesBuilder(RingKind.SKEW_POWER_TRUNC),
            CornerBuilder(),
            Local16Builder(),
            TableBuilder(),
        ):
            builder_registry.register(builder)

    def builder_for(self, descriptor: RingDescriptor) -> RingBuilder:
        return builder_registry.get(descriptor.kind)

    def build(self, descriptor: Any, order_cap: Optional[int] = None) -> FiniteRing:
        """
        Realize a descriptor, building base rings first.

        Args:
            descriptor: RingDescriptor or raw descriptor data
            order_cap: Override for the configured order cap

        Returns:
            The realized ring (shared with later calls for the same descriptor)
        """
        descriptor = parse_descriptor(descriptor)
        cap = settings.order_cap if order_cap is None else order_cap
        key = descriptor.digest()
        cached = self._cache.get(key)
        if cached is not None:
            if cached.order > cap:
                raise CapExceededError(
                    f"{cached.name} has {cached.order} elements, above the order cap {cap}",
                    order=cached.order, cap=cap,
                )
            return cached

        builder = self.builder_for(descriptor)
        bases = [self.build(dep, order_cap=cap) for dep in builder.dependencies(descriptor)]
        order = builder.predicted_order(descriptor, bases)
        if order > cap:
            raise CapExceededError(
                f"{descriptor.display_name()} would have {order} elements, above the order cap {cap}",
                order=order, cap=cap,
            )

        start = time.perf_counter()
        ring = builder.realize(descriptor, bases)
        logger.info("Built ring", ring=ring.name, kind=descriptor.kind.value, order=ring.order,
                    elapsed_ms=round((time.perf_counter() - start) * 1000, 3))
        with self._lock:
            return self._cache.setdefault(key, ring)

    def clear_cache(self):
        with self._lock:
            self._cache.clear()


# Global manager instance
construction_manager = ConstructionManager()


def build(descriptor: Any, order_cap: Optional[int] = None) -> FiniteRing:
    return construction_manager.build(descriptor, order_cap=order_cap)


def zn(n: int) -> RingDescriptor:
    return RingDescriptor(kind=RingKind.ZN, n=n)


def build_zn(n: int) -> FiniteRing:
    return build(zn(n))


def build_product(factors: Sequence[RingDescriptor]) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.PRODUCT, factors=list(factors)))


def build_matrix_family(kind: str, base: RingDescriptor, n: int) -> FiniteRing:
    kind = RingKind(kind)
    if kind not in (RingKind.MN, RingKind.UN, RingKind.DN, RingKind.VN):
        raise DescriptorError(f"{kind.value} is not a matrix family")
    return build(RingDescriptor(kind=kind, base=base, n=n))


def build_lst(base: RingDescriptor, s: ElementLiteral, t: ElementLiteral) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.LST, base=base, s=s, t=t))


def build_hst(base: RingDescriptor, s: ElementLiteral, t: ElementLiteral) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.HST, base=base, s=s, t=t))


def build_ks(base: RingDescriptor, s: ElementLiteral) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.KS, base=base, s=s))


def build_dorroh(algebra: RingDescriptor, scalars_n: int) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.DORROH, base=algebra, n=scalars_n))


def build_hurwitz_trunc(base: RingDescriptor, alpha: Optional[List[int]], k: int) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.HURWITZ_TRUNC, base=base, alpha=alpha, degree=k))


def build_skewpower_trunc(base: RingDescriptor, alpha: Optional[List[int]], k: int) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.SKEW_POWER_TRUNC, base=base, alpha=alpha, degree=k))


def build_t_trunc(r_desc: RingDescriptor, s_desc: RingDescriptor, n: int) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.T_TRUNC, base=r_desc, sub=s_desc, n=n))


def build_corner(base: RingDescriptor, e: ElementLiteral) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.CORNER, base=base, e=e))


def build_local16() -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.LOCAL16))


def build_d3_pattern(base: RingDescriptor) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.D3_PATTERN, base=base))


def build_table_ring(add_table: List[List[int]], mul_table: List[List[int]]) -> FiniteRing:
    return build(RingDescriptor(kind=RingKind.TABLE, add_table=add_table, mul_table=mul_table))
