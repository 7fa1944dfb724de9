"""
Shared helpers and ad hoc instances for theorem cases.
"""
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.constructions.corner import CornerRing
from src.constructions.manager import zn
from src.constructions.scalar import ProductRing
from src.core.derived import center, idempotents, qnil_set
from src.core.element_set import ElementSet
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind

_M2Z2 = RingDescriptor(kind=RingKind.MN, base=zn(2), n=2)
_U2Z2 = RingDescriptor(kind=RingKind.UN, base=zn(2), n=2)

# Products with a non-qnil-duo factor, used for the "only if" directions.
EXTRA_PRODUCTS: List[RingDescriptor] = [
    RingDescriptor(kind=RingKind.PRODUCT, factors=[zn(2), _M2Z2]),
    RingDescriptor(kind=RingKind.PRODUCT, factors=[_U2Z2, zn(3)]),
]

EXTRA_TRUNCATIONS: List[RingDescriptor] = [
    RingDescriptor(kind=RingKind.T_TRUNC, base=_M2Z2, sub=zn(2), n=1),
]


def mul(ring: FiniteRing, left: Index, right: Index) -> np.ndarray:
    """Vectorized product, read from the cached table when there is one."""
    if ring.has_table:
        return ring.mul_table()[left, right]
    return np.asarray(ring._mul(left, right), dtype=np.int64)


def image_mask(ring: FiniteRing, values: np.ndarray) -> np.ndarray:
    mask = np.zeros(ring.order, dtype=bool)
    mask[values] = True
    return mask


def coordinate_mask(masks: Sequence[np.ndarray]) -> np.ndarray:
    """Membership mask of the coordinatewise product of factor subsets."""
    grids = np.meshgrid(*masks, indexing="ij")
    return np.logical_and.reduce(grids).ravel()


def product_qnil_mask(ring: ProductRing) -> np.ndarray:
    return coordinate_mask([qnil_set(factor).mask for factor in ring.factors])


def corner_ring(ring: FiniteRing, e: int) -> CornerRing:
    descriptor = RingDescriptor(kind=RingKind.CORNER, base=ring.descriptor, e=list(ring.params(e)))
    return CornerRing(descriptor, ring, e)


def proper_idempotents(ring: FiniteRing, central_only: bool = False) -> List[int]:
    members = idempotents(ring).mask
    if central_only:
        members = members & center(ring).mask
    return [int(e) for e in np.flatnonzero(members) if e not in (ring.zero, ring.one)]


def corners(ring: FiniteRing, central_only: bool = False) -> Iterator[Tuple[int, CornerRing]]:
    for e in proper_idempotents(ring, central_only):
        yield e, corner_ring(ring, e)


def qnil_square_witness(ring: FiniteRing) -> Optional[Tuple[int, int]]:
    """First pair a, b of quasinilpotents with ab != 0, or None when (qnil)² = 0."""
    members = qnil_set(ring).indexes
    for a in members:
        products = ring.mul_row(int(a))[members]
        nonzero = np.flatnonzero(products != ring.zero)
        if nonzero.size:
            return int(a), int(members[nonzero[0]])
    return None


def subset_of(inner: ElementSet, outer: ElementSet) -> Optional[int]:
    """First member of ``inner`` outside ``outer``."""
    outside = np.flatnonzero(inner.mask & ~outer.mask)
    return int(outside[0]) if outside.size else None


def same_arithmetic(left: FiniteRing, right: FiniteRing) -> bool:
    """Identical addition and multiplication tables on the shared index set."""
    return (left.order == right.order
            and np.array_equal(left._build_table(left._add), right._build_table(right._add))
            and np.array_equal(left._build_table(left._mul), right._build_table(right._mul)))
