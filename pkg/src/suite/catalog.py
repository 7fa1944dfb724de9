"""
Ring catalog: the built-in instance set and user catalogs loaded from JSON.
"""
import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import orjson as json
import structlog

from src.constructions.manager import parse_descriptor, zn
from src.core.errors import DescriptorError
from src.models.descriptor import RingDescriptor, RingKind
from src.models.report import CatalogEntry

logger = structlog.get_logger()

BUILTIN_PREFIX = "builtin:"


def _matrix(kind: RingKind, base: RingDescriptor, n: int) -> RingDescriptor:
    return RingDescriptor(kind=kind, base=base, n=n)


def _builtin_rings() -> Dict[str, RingDescriptor]:
    z2, z3, z4 = zn(2), zn(3), zn(4)
    m2z2 = _matrix(RingKind.MN, z2, 2)
    rings: Dict[str, RingDescriptor] = {f"z{n}": zn(n) for n in range(2, 10)}
    rings.update({
        "z2xz3": RingDescriptor(kind=RingKind.PRODUCT, factors=[z2, z3]),
        "z4xz4": RingDescriptor(kind=RingKind.PRODUCT, factors=[z4, z4]),
        "m2-z2": m2z2,
        "m2-z4": _matrix(RingKind.MN, z4, 2),
        "u2-z2": _matrix(RingKind.UN, z2, 2),
        "u2-z4": _matrix(RingKind.UN, z4, 2),
        "d2-z4": _matrix(RingKind.DN, z4, 2),
        "d3-z2": _matrix(RingKind.DN, z2, 3),
        "v3-z2": _matrix(RingKind.VN, z2, 3),
        "v3-z4": _matrix(RingKind.VN, z4, 3),
        "l11-z4": RingDescriptor(kind=RingKind.LST, base=z4, s=1, t=1),
        "l01-z4": RingDescriptor(kind=RingKind.LST, base=z4, s=0, t=1),
        "l10-z4": RingDescriptor(kind=RingKind.LST, base=z4, s=1, t=0),
        "l00-z4": RingDescriptor(kind=RingKind.LST, base=z4, s=0, t=0),
        "h11-z4": RingDescriptor(kind=RingKind.HST, base=z4, s=1, t=1),
        "h13-z4": RingDescriptor(kind=RingKind.HST, base=z4, s=1, t=3),
        "k0-z2": RingDescriptor(kind=RingKind.KS, base=z2, s=0),
        "k0-z4": RingDescriptor(kind=RingKind.KS, base=z4, s=0),
        "k1-z2": RingDescriptor(kind=RingKind.KS, base=z2, s=1),
        "dorroh-m2z2-z2": RingDescriptor(kind=RingKind.DORROH, base=m2z2, n=2),
        "dorroh-z4-z4": RingDescriptor(kind=RingKind.DORROH, base=z4, n=4),
        "hurwitz-z2-2": RingDescriptor(kind=RingKind.HURWITZ_TRUNC, base=z2, degree=2),
        "hurwitz-z4-2": RingDescriptor(kind=RingKind.HURWITZ_TRUNC, base=z4, degree=2),
        "skew-z2xz2-swap-2": RingDescriptor(
            kind=RingKind.SKEW_POWER_TRUNC,
            base=RingDescriptor(kind=RingKind.PRODUCT, factors=[z2, z2]),
            alpha=[0, 2, 1, 3],
            degree=2,
        ),
        "t2-z4-z4": RingDescriptor(kind=RingKind.T_TRUNC, base=z4, sub=z4, n=2),
        "local16": RingDescriptor(kind=RingKind.LOCAL16),
        "d3pattern-z4": RingDescriptor(kind=RingKind.D3_PATTERN, base=z4),
        "corner-m2z2-e11": RingDescriptor(kind=RingKind.CORNER, base=m2z2, e=[1, 0, 0, 0]),
        "corner-m2z2-e11e12": RingDescriptor(kind=RingKind.CORNER, base=m2z2, e=[1, 1, 0, 0]),
    })
    return rings


BUILTIN_RINGS: Dict[str, RingDescriptor] = _builtin_rings()


def default_catalog() -> List[RingDescriptor]:
    return list(BUILTIN_RINGS.values())


def builtin_descriptor(slug: str) -> RingDescriptor:
    if slug.startswith(BUILTIN_PREFIX):
        slug = slug[len(BUILTIN_PREFIX):]
    try:
        return BUILTIN_RINGS[slug]
    except KeyError:
        raise DescriptorError(
            f"unknown built-in ring {slug!r}; known: {', '.join(BUILTIN_RINGS)}"
        ) from None


@dataclass(frozen=True)
class CatalogItem:
    """A catalog slot; the descriptor data is validated only when built."""

    slug: str
    data: Any

    def descriptor(self) -> RingDescriptor:
        return parse_descriptor(self.data)

    @property
    def digest(self) -> str:
        if isinstance(self.data, RingDescriptor):
            return self.data.digest()
        return hashlib.sha256(json.dumps(self.data, option=json.OPT_SORT_KEYS)).hexdigest()

    @property
    def name(self) -> str:
        try:
            return self.descriptor().display_name()
        except DescriptorError:
            return self.slug


class Catalog:
    """Ordered set of catalog items addressed by slug."""

    def __init__(self, items: List[CatalogItem], source: str = "default"):
        slugs = [item.slug for item in items]
        duplicates = sorted({slug for slug in slugs if slugs.count(slug) > 1})
        if duplicates:
            raise DescriptorError(f"duplicate catalog slugs: {', '.join(duplicates)}")
        self.items = list(items)
        self.source = source
        self._by_slug = {item.slug: item for item in self.items}

    @classmethod
    def default(cls) -> "Catalog":
        return cls([CatalogItem(slug, descriptor) for slug, descriptor in BUILTIN_RINGS.items()])

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def get(self, slug: str) -> Optional[CatalogItem]:
        return self._by_slug.get(slug)

    @property
    def digest(self) -> str:
        hasher = hashlib.sha256()
        for item in self.items:
            hasher.update(f"{item.slug}:{item.digest}\n".encode())
        return hasher.hexdigest()

    def manifest(self) -> List[CatalogEntry]:
        return [CatalogEntry(slug=item.slug, name=item.name, digest=item.digest) for item in self.items]


def catalog_digest(catalog: Optional[Catalog] = None) -> str:
    return (catalog or Catalog.default()).digest


def load_catalog(source: Union[str, Path]) -> Catalog:
    """Load ``default`` or a JSON catalog file.

    The file holds a list (or ``{"rings": [...]}``) whose entries are either
    bare descriptors or ``{"slug": ..., "descriptor": ...}``; a bare
    ``"builtin:<slug>"`` string pulls in a built-in ring.
    """
    if str(source) == "default":
        return Catalog.default()
    path = Path(source)
    try:
        raw = json.loads(path.read_bytes())
    except OSError as e:
        raise DescriptorError(f"cannot read catalog {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DescriptorError(f"catalog {path} is not valid JSON: {e}") from e
    if isinstance(raw, dict):
        raw = raw.get("rings")
    if not isinstance(raw, list):
        raise DescriptorError(f"catalog {path} must be a list of ring descriptors")

    items = []
    for position, entry in enumerate(raw):
        if isinstance(entry, str):
            slug = entry[len(BUILTIN_PREFIX):] if entry.startswith(BUILTIN_PREFIX) else entry
            items.append(CatalogItem(slug, builtin_descriptor(slug)))
        elif isinstance(entry, dict) and "descriptor" in entry:
            items.append(CatalogItem(str(entry.get("slug") or f"ring-{position}"), entry["descriptor"]))
        else:
            items.append(CatalogItem(f"ring-{position}", entry))
    logger.info("Loaded ring catalog", path=str(path), rings=len(items))
    return Catalog(items, source=str(path))
