"""
Abstract finite ring over dense element indexes.

Every construction supplies vectorized kernels ``_add``, ``_mul`` and ``_neg``
that accept plain integers or numpy index arrays and broadcast like numpy
arithmetic. The public ``add``/``mul``/``neg`` wrappers return plain ints for
scalar arguments.
"""
import threading
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import orjson as json
import structlog

from src.config.settings import settings
from src.core.encoding import MixedRadix
from src.core.errors import DomainError
from src.models.descriptor import ElementLiteral, RingDescriptor

logger = structlog.get_logger()

Index = Union[int, np.ndarray]


def lift(value: Any) -> Any:
    """Turn 0-d numpy results into plain ints, pass arrays through."""
    if np.ndim(value) == 0:
        return int(value)
    return value


class FiniteRing(ABC):
    """Unital ring whose elements are the indexes ``0..order-1``."""

    formula: str = ""

    def __init__(
        self,
        descriptor: Optional[RingDescriptor],
        radices: Sequence[int],
        coordinate_names: Sequence[str],
    ):
        self.descriptor = descriptor
        self.radix = MixedRadix(radices)
        self.order = self.radix.size
        self.coordinate_names: Tuple[str, ...] = tuple(coordinate_names)
        self.name = descriptor.display_name() if descriptor is not None else type(self).__name__
        self.elements = np.arange(self.order, dtype=np.int64)
        self.elements.setflags(write=False)
        self.notes: List[str] = []
        self.zero = 0
        self.one = 0
        self._memo: Dict[str, Any] = {}
        self._memo_lock = threading.Lock()

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name} order={self.order}>"

    # Kernels

    @abstractmethod
    def _add(self, i: Index, j: Index) -> Index:
        pass

    @abstractmethod
    def _mul(self, i: Index, j: Index) -> Index:
        pass

    @abstractmethod
    def _neg(self, i: Index) -> Index:
        pass

    def _sub(self, i: Index, j: Index) -> Index:
        return self._add(i, self._neg(j))

    def _times(self, k: Index, a: Index) -> Index:
        """Integer multiple ``k·a`` for non-negative ``k`` by double-and-add."""
        k = np.asarray(k, dtype=np.int64)
        result: Index = np.broadcast_to(np.int64(self.zero), np.broadcast(k, np.asarray(a)).shape)
        step: Index = a
        while np.any(k > 0):
            bit = (k & 1).astype(bool)
            result = np.where(bit, self._add(result, step), result)
            step = self._add(step, step)
            k = k >> 1
        return result

    # Public arithmetic

    def add(self, i: Index, j: Index) -> Index:
        return lift(self._add(i, j))

    def mul(self, i: Index, j: Index) -> Index:
        return lift(self._mul(i, j))

    def neg(self, i: Index) -> Index:
        return lift(self._neg(i))

    def sub(self, i: Index, j: Index) -> Index:
        return lift(self._sub(i, j))

    def times(self, k: Index, a: Index) -> Index:
        return lift(self._times(k, a))

    def power(self, a: Index, k: int) -> Index:
        if k < 0:
            raise DomainError("negative exponents are not defined")
        result: Index = np.broadcast_to(np.int64(self.one), np.shape(a))
        base: Index = a
        while k:
            if k & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            k >>= 1
        return lift(result)

    # Rendering and coordinates

    def coords(self, index: int) -> Tuple[int, ...]:
        return self.radix.decode_tuple(index)

    def label(self, index: int) -> str:
        return "(" + ", ".join(str(c) for c in self.coords(index)) + ")"

    def labels(self, indexes: Iterable[int]) -> List[str]:
        return [self.label(int(i)) for i in indexes]

    @property
    def param_names(self) -> Tuple[str, ...]:
        return self.coordinate_names

    def params(self, index: int) -> Tuple[int, ...]:
        return self.coords(index)

    def element(self, params: Sequence[int]) -> int:
        try:
            return self.radix.encode_tuple(params)
        except ValueError as e:
            raise DomainError(f"{self.name}: invalid element literal {list(params)}: {e}") from e

    def resolve_literal(self, literal: ElementLiteral) -> int:
        if isinstance(literal, int):
            if len(self.param_names) != 1:
                raise DomainError(
                    f"{self.name}: literal needs {len(self.param_names)} coordinates "
                    f"({', '.join(self.param_names)}), got a single integer"
                )
            return self.element((literal,))
        return self.element(list(literal))

    def parse_literal(self, text: str) -> int:
        """Parse ``"a=2,b=1"``, ``"2,1"``, ``"2"`` or a nested JSON list."""
        text = text.strip()
        if not text:
            raise DomainError("empty element literal")
        if text.startswith("["):
            try:
                values = list(_flatten(json.loads(text)))
            except json.JSONDecodeError as e:
                raise DomainError(f"malformed element literal {text!r}") from e
            return self.element(values)
        parts = [part.strip() for part in text.split(",") if part.strip()]
        if all("=" in part for part in parts):
            values = [0] * len(self.param_names)
            for part in parts:
                key, _, raw = part.partition("=")
                key = key.strip()
                if key not in self.param_names:
                    raise DomainError(
                        f"{self.name}: unknown coordinate {key!r}, expected one of {', '.join(self.param_names)}"
                    )
                values[self.param_names.index(key)] = _parse_int(raw)
            return self.element(values)
        if any("=" in part for part in parts):
            raise DomainError(f"cannot mix named and positional coordinates in {text!r}")
        return self.element([_parse_int(part) for part in parts])

    # Memoization

    def memo(self, key: str, factory: Callable[[], Any]) -> Any:
        """Compute-once cache; racing threads may both compute, one result wins."""
        if key in self._memo:
            return self._memo[key]
        value = factory()
        with self._memo_lock:
            return self._memo.setdefault(key, value)

    # Rows of products

    @property
    def has_table(self) -> bool:
        return self.order <= settings.table_cap

    def mul_table(self) -> np.ndarray:
        return self.memo("mul_table", lambda: self._build_table(self._mul))

    def add_table(self) -> np.ndarray:
        return self.memo("add_table", lambda: self._build_table(self._add))

    def _build_table(self, kernel: Callable[[Index, Index], Index]) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        block = max(1, 65536 // n)
        for start in range(0, n, block):
            rows = self.elements[start:start + block]
            table[start:start + len(rows)] = kernel(rows[:, None], self.elements[None, :])
        table.setflags(write=False)
        logger.debug("Cached operation table", ring=self.name, order=n)
        return table

    def mul_row(self, a: int) -> np.ndarray:
        """``a·x`` for every element ``x``."""
        if self.has_table:
            return self.mul_table()[a]
        return np.broadcast_to(np.asarray(self._mul(a, self.elements), dtype=np.int64), (self.order,))

    def mul_col(self, a: int) -> np.ndarray:
        """``x·a`` for every element ``x``."""
        if self.has_table:
            return self.mul_table()[:, a]
        return np.broadcast_to(np.asarray(self._mul(self.elements, a), dtype=np.int64), (self.order,))

    def add_row(self, a: int) -> np.ndarray:
        return np.broadcast_to(np.asarray(self._add(a, self.elements), dtype=np.int64), (self.order,))

    def commutes(self, a: int, b: int) -> bool:
        return self.mul(a, b) == self.mul(b, a)

    @property
    def characteristic(self) -> int:
        def compute() -> int:
            k, value = 1, self.one
            while value != self.zero:
                value = self.add(value, self.one)
                k += 1
            return k
        return self.memo("characteristic", compute)

    def is_commutative(self) -> bool:
        def compute() -> bool:
            if self.has_table:
                table = self.mul_table()
                return bool((table == table.T).all())
            return all(bool((self.mul_row(a) == self.mul_col(a)).all()) for a in range(self.order))
        return self.memo("is_commutative", compute)


def _parse_int(raw: str) -> int:
    try:
        return int(raw.strip())
    except ValueError as e:
        raise DomainError(f"coordinate value {raw!r} is not an integer") from e


def _flatten(value: Any) -> Iterable[int]:
    if isinstance(value, list):
        for item in value:
            yield from _flatten(item)
    elif isinstance(value, int):
        yield value
    else:
        raise DomainError(f"element literal entries must be integers, got {value!r}")
