"""
Matrix subrings described by an entry pattern over a base ring.

A pattern lists the coordinate slots (one matrix position each, with the base
values that position may take) and, for every nonzero position, the entry as a
linear combination of slot values with central coefficients. Products are
computed as ordinary matrix products and read back at the slot positions.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from src.config.settings import settings
from src.constructions.base import RingBuilder
from src.core.derived import center, units
from src.core.errors import DescriptorError, DomainError
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind

logger = structlog.get_logger()

Position = Tuple[int, int]
Term = Tuple[Optional[int], int]


@dataclass(frozen=True)
class Slot:
    name: str
    position: Position
    values: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class MatrixPattern:
    size: int
    slots: Tuple[Slot, ...]
    entries: Dict[Position, Tuple[Term, ...]]


class MatrixPatternRing(FiniteRing):
    """Subring of M_n(base) given by a ``MatrixPattern``."""

    def __init__(self, descriptor: RingDescriptor, base: FiniteRing, pattern: MatrixPattern):
        self.base = base
        self.size = pattern.size
        self.pattern = pattern
        self._values: List[np.ndarray] = []
        self._lookups: List[np.ndarray] = []
        for slot in pattern.slots:
            values = base.elements if slot.values is None else np.asarray(slot.values, dtype=np.int64)
            lookup = np.full(base.order, -1, dtype=np.int64)
            lookup[values] = np.arange(len(values))
            self._values.append(values)
            self._lookups.append(lookup)
        super().__init__(descriptor, [len(v) for v in self._values], [s.name for s in pattern.slots])
        self.zero = int(self._encode_values([base.zero] * len(pattern.slots)))
        self.one = int(self._encode_values([base.one if s.position[0] == s.position[1] else base.zero
                                            for s in pattern.slots]))
        self.check_closure()

    def _encode_values(self, values: Sequence[Index]) -> Index:
        slots = [lookup[v] for lookup, v in zip(self._lookups, values)]
        return self.radix.encode(slots)

    def _slot_values(self, index: Index) -> List[Index]:
        return [values[c] for values, c in zip(self._values, self.radix.decode(index))]

    def _matrix(self, index: Index) -> Dict[Position, Index]:
        slot_values = self._slot_values(index)
        matrix: Dict[Position, Index] = {}
        for position, terms in self.pattern.entries.items():
            acc: Optional[Index] = None
            for coefficient, k in terms:
                value = slot_values[k] if coefficient is None else self.base._mul(coefficient, slot_values[k])
                acc = value if acc is None else self.base._add(acc, value)
            matrix[position] = acc
        return matrix

    def _product_entry(self, left: Dict[Position, Index], right: Dict[Position, Index],
                       position: Position) -> Index:
        p, q = position
        acc: Optional[Index] = None
        for k in range(self.size):
            a = left.get((p, k))
            b = right.get((k, q))
            if a is None or b is None:
                continue
            term = self.base._mul(a, b)
            acc = term if acc is None else self.base._add(acc, term)
        return self.base.zero if acc is None else acc

    def _add(self, i: Index, j: Index) -> Index:
        left, right = self._slot_values(i), self._slot_values(j)
        return self._encode_values([self.base._add(x, y) for x, y in zip(left, right)])

    def _neg(self, i: Index) -> Index:
        return self._encode_values([self.base._neg(x) for x in self._slot_values(i)])

    def _mul(self, i: Index, j: Index) -> Index:
        left, right = self._matrix(i), self._matrix(j)
        return self._encode_values([self._product_entry(left, right, s.position) for s in self.pattern.slots])

    def matrix_entries(self, index: int) -> List[List[int]]:
        """Full matrix of an element as base indexes."""
        matrix = self._matrix(int(index))
        return [[int(matrix.get((p, q), self.base.zero)) for q in range(self.size)]
                for p in range(self.size)]

    def diagonal(self, index: int) -> Tuple[int, ...]:
        entries = self.matrix_entries(index)
        return tuple(entries[k][k] for k in range(self.size))

    def from_matrix(self, entries: Sequence[Sequence[int]]) -> int:
        """Index of the element with the given full matrix; DomainError if off-pattern."""
        values = []
        for slot, lookup in zip(self.pattern.slots, self._lookups):
            p, q = slot.position
            value = int(entries[p][q])
            if not 0 <= value < self.base.order or lookup[value] < 0:
                raise DomainError(f"{self.name}: entry {value} not allowed at {slot.position}")
            values.append(value)
        index = int(self._encode_values(values))
        if self.matrix_entries(index) != [[int(v) for v in row] for row in entries]:
            raise DomainError(f"{self.name}: matrix does not match the entry pattern")
        return index

    def label(self, index: int) -> str:
        rows = self.matrix_entries(index)
        return "[" + ",".join("[" + ",".join(self.base.label(v) for v in row) + "]" for row in rows) + "]"

    def element(self, params: Sequence[int]) -> int:
        if len(params) != len(self.pattern.slots):
            raise DomainError(f"{self.name}: expected {len(self.pattern.slots)} coordinates "
                              f"({', '.join(self.param_names)}), got {len(params)}")
        values = []
        for slot, lookup, raw in zip(self.pattern.slots, self._lookups, params):
            value = int(raw)
            if not 0 <= value < self.base.order or lookup[value] < 0:
                raise DomainError(f"{self.name}: value {raw} not allowed for coordinate {slot.name}")
            values.append(value)
        return int(self._encode_values(values))

    def params(self, index: int) -> Tuple[int, ...]:
        return tuple(int(v) for v in self._slot_values(int(index)))

    def check_closure(self):
        """Spot-check that products stay inside the pattern.

        Checks every pair of generators (one slot set to a unit value, the
        rest zero) plus a seeded random sample of pairs.
        """
        generators = [self.zero, self.one]
        for k, values in enumerate(self._values):
            target = self.base.one if self._lookups[k][self.base.one] >= 0 else int(values[-1])
            slot_values = [self.base.zero] * len(self._values)
            slot_values[k] = target
            if self._lookups[k][self.base.zero] < 0:
                continue
            generators.append(int(self._encode_values(slot_values)))
        gens = np.asarray(generators, dtype=np.int64)
        left = np.repeat(gens, len(gens))
        right = np.tile(gens, len(gens))
        rng = np.random.default_rng(settings.closure_seed)
        sample = settings.closure_sample_size
        left = np.concatenate([left, rng.integers(0, self.order, size=sample)])
        right = np.concatenate([right, rng.integers(0, self.order, size=sample)])

        a, b = self._matrix(left), self._matrix(right)
        products = {(p, q): np.broadcast_to(np.asarray(self._product_entry(a, b, (p, q))), left.shape)
                    for p in range(self.size) for q in range(self.size)}
        slot_indexes = []
        for slot, lookup in zip(self.pattern.slots, self._lookups):
            slot_index = lookup[products[slot.position]]
            bad = np.flatnonzero(slot_index < 0)
            if bad.size:
                k = int(bad[0])
                raise DescriptorError(
                    f"{self.name} is not closed under multiplication: "
                    f"{self.label(int(left[k]))}·{self.label(int(right[k]))} leaves the pattern at {slot.position}"
                )
            slot_indexes.append(slot_index)
        rebuilt = self._matrix(self.radix.encode(slot_indexes))
        for position, values in products.items():
            expected = rebuilt.get(position, self.base.zero)
            bad = np.flatnonzero(np.broadcast_to(np.asarray(expected), left.shape) != values)
            if bad.size:
                k = int(bad[0])
                raise DescriptorError(
                    f"{self.name} is not closed under multiplication: "
                    f"{self.label(int(left[k]))}·{self.label(int(right[k]))} breaks the entry at {position}"
                )
        if self.matrix_entries(self.one) != [[self.base.one if p == q else self.base.zero
                                              for q in range(self.size)] for p in range(self.size)]:
            raise DescriptorError(f"{self.name} does not contain the identity matrix")
        logger.debug("Closure spot check passed", ring=self.name, pairs=int(left.size))


# Patterns

def full_pattern(n: int) -> MatrixPattern:
    slots = tuple(Slot(f"a{p + 1}{q + 1}", (p, q)) for p in range(n) for q in range(n))
    entries = {slot.position: ((None, k),) for k, slot in enumerate(slots)}
    return MatrixPattern(n, slots, entries)


def upper_pattern(n: int) -> MatrixPattern:
    slots = tuple(Slot(f"a{p + 1}{q + 1}", (p, q)) for p in range(n) for q in range(p, n))
    entries = {slot.position: ((None, k),) for k, slot in enumerate(slots)}
    return MatrixPattern(n, slots, entries)


def equal_diagonal_pattern(n: int) -> MatrixPattern:
    slots = (Slot("a", (0, 0)),) + tuple(
        Slot(f"a{p + 1}{q + 1}", (p, q)) for p in range(n) for q in range(p + 1, n))
    entries: Dict[Position, Tuple[Term, ...]] = {(p, p): ((None, 0),) for p in range(n)}
    for k, slot in enumerate(slots[1:], start=1):
        entries[slot.position] = ((None, k),)
    return MatrixPattern(n, slots, entries)


def toeplitz_pattern(n: int) -> MatrixPattern:
    slots = tuple(Slot(f"a{k}", (0, k)) for k in range(n))
    entries = {(p, p + k): ((None, k),) for k in range(n) for p in range(n - k)}
    return MatrixPattern(n, slots, entries)


def d3_pattern() -> MatrixPattern:
    slots = (Slot("a", (0, 0)), Slot("b", (0, 1)), Slot("c", (0, 2)))
    entries = {(0, 0): ((None, 0),), (1, 1): ((None, 0),), (2, 2): ((None, 0),),
               (0, 1): ((None, 1),), (0, 2): ((None, 2),)}
    return MatrixPattern(3, slots, entries)


def lst_pattern(base: FiniteRing, s: int, t: int) -> MatrixPattern:
    s_values = tuple(int(v) for v in np.unique(base.mul_row(s)))
    t_values = tuple(int(v) for v in np.unique(base.mul_row(t)))
    slots = (Slot("a", (0, 0)), Slot("c", (1, 0), s_values), Slot("d", (1, 1)),
             Slot("e", (1, 2), t_values), Slot("f", (2, 2)))
    entries = {slot.position: ((None, k),) for k, slot in enumerate(slots)}
    return MatrixPattern(3, slots, entries)


def hst_pattern(base: FiniteRing, s: int, t: int) -> MatrixPattern:
    minus_s, minus_t = base.neg(s), base.neg(t)
    slots = (Slot("a", (0, 0)), Slot("c", (1, 0)), Slot("e", (1, 2)))
    entries = {
        (0, 0): ((None, 0),),
        (1, 0): ((None, 1),),
        (1, 2): ((None, 2),),
        (1, 1): ((None, 0), (minus_s, 1)),
        (2, 2): ((None, 0), (minus_s, 1), (minus_t, 2)),
    }
    return MatrixPattern(3, slots, entries)


class LstRing(MatrixPatternRing):
    """L_(s,t)(R): matrices [[a,0,0],[sc,d,te],[0,0,f]] inside M_3(R)."""

    formula = "L_(s,t)(R) = {[[a,0,0],[sc,d,te],[0,0,f]]} ⊆ M_3(R), s,t ∈ C(R)"

    def __init__(self, descriptor: RingDescriptor, base: FiniteRing, s: int, t: int):
        self.s = s
        self.t = t
        super().__init__(descriptor, base, lst_pattern(base, s, t))

    def element(self, params: Sequence[int]) -> int:
        if len(params) != 5:
            raise DomainError(f"{self.name}: expected coordinates a,c,d,e,f")
        a, c, d, e, f = (int(v) for v in params)
        for value in (a, c, d, e, f):
            if not 0 <= value < self.base.order:
                raise DomainError(f"{self.name}: value {value} outside the base ring")
        return super().element([a, self.base.mul(self.s, c), d, self.base.mul(self.t, e), f])

    def params(self, index: int) -> Tuple[int, ...]:
        a, sc, d, te, f = super().params(index)
        c = int(np.flatnonzero(self.base.mul_row(self.s) == sc)[0])
        e = int(np.flatnonzero(self.base.mul_row(self.t) == te)[0])
        return (a, c, d, e, f)


class HstRing(MatrixPatternRing):
    """H_(s,t)(R): [[a,0,0],[c,d,e],[0,0,f]] with a−d = sc and d−f = te."""

    formula = "H_(s,t)(R) = {[[a,0,0],[c,d,e],[0,0,f]] : a-d = sc, d-f = te}, s,t central units"

    def __init__(self, descriptor: RingDescriptor, base: FiniteRing, s: int, t: int):
        self.s = s
        self.t = t
        super().__init__(descriptor, base, hst_pattern(base, s, t))


# Builders

_FAMILY_PATTERNS = {
    RingKind.MN: full_pattern,
    RingKind.UN: upper_pattern,
    RingKind.DN: equal_diagonal_pattern,
    RingKind.VN: toeplitz_pattern,
}

_FAMILY_FORMULAS = {
    RingKind.MN: "M_n(R): all n×n matrices over R",
    RingKind.UN: "U_n(R): upper triangular n×n matrices over R",
    RingKind.DN: "D_n(R): upper triangular matrices with constant diagonal",
    RingKind.VN: "V_n(R): upper triangular matrices constant along every superdiagonal",
}

_FAMILY_REFS = {
    RingKind.MN: '§1, "upper triangular) matrix ring over $R$ by $M_n(R)$ (resp.,"',
    RingKind.UN: '§1, "upper triangular) matrix ring over $R$ by $M_n(R)$ (resp.,"',
    RingKind.DN: '§1, "consisting of  all matrices which have equal diagonal entries and"',
    RingKind.VN: r'§1, "$V_n(R) = \{(a_{ij})\in D_n(R)\mid a_{ij} = a_{(i+1)(j+1)}$ for $i"',
}


class MatrixFamilyBuilder(RingBuilder):
    def __init__(self, kind: RingKind):
        self.kind = kind
        self.formula = _FAMILY_FORMULAS[kind]
        self.ref = _FAMILY_REFS[kind]

    def _pattern(self, descriptor) -> MatrixPattern:
        n = int(descriptor.n)
        if n < 2:
            raise DescriptorError(f"{self.kind.value} needs n >= 2, got {n}")
        return _FAMILY_PATTERNS[self.kind](n)

    def predicted_order(self, descriptor, bases) -> int:
        return bases[0].order ** len(self._pattern(descriptor).slots)

    def realize(self, descriptor, bases) -> FiniteRing:
        ring = MatrixPatternRing(descriptor, bases[0], self._pattern(descriptor))
        ring.formula = self.formula
        return ring


def central_parameter(base: FiniteRing, literal, label: str, unit: bool = False) -> int:
    value = base.resolve_literal(literal)
    if value not in center(base):
        raise DescriptorError(f"{label} = {base.label(value)} is not central in {base.name}")
    if unit and value not in units(base):
        raise DescriptorError(f"{label} = {base.label(value)} is not a unit of {base.name}")
    return value


class LstBuilder(RingBuilder):
    kind = RingKind.LST
    formula = LstRing.formula
    ref = '§4, "Then $L_{(s,t)}(R)$ is a subring of $M_3(R)$"'

    def predicted_order(self, descriptor, bases) -> int:
        base = bases[0]
        s = central_parameter(base, descriptor.s, "s")
        t = central_parameter(base, descriptor.t, "t")
        return (base.order ** 3 * len(np.unique(base.mul_row(s)))
                * len(np.unique(base.mul_row(t))))

    def realize(self, descriptor, bases) -> FiniteRing:
        base = bases[0]
        s = central_parameter(base, descriptor.s, "s")
        t = central_parameter(base, descriptor.t, "t")
        return LstRing(descriptor, base, s, t)


class HstBuilder(RingBuilder):
    kind = RingKind.HST
    formula = HstRing.formula
    ref = '§4, "a - d = sc, d - f = te"'

    def predicted_order(self, descriptor, bases) -> int:
        return bases[0].order ** 3

    def realize(self, descriptor, bases) -> FiniteRing:
        base = bases[0]
        s = central_parameter(base, descriptor.s, "s", unit=True)
        t = central_parameter(base, descriptor.t, "t", unit=True)
        return HstRing(descriptor, base, s, t)


class D3PatternBuilder(RingBuilder):
    kind = RingKind.D3_PATTERN
    formula = "{[[a,b,c],[0,a,0],[0,0,a]]} ⊆ D_3(R)"
    ref = r'§3, "\begin{bmatrix}a&b&c\\0&a&0\\0&0&a\end{bmatrix}\in D_3(\Bbb Z_4)\right\}$"'

    def predicted_order(self, descriptor, bases) -> int:
        return bases[0].order ** 3

    def realize(self, descriptor, bases) -> FiniteRing:
        ring = MatrixPatternRing(descriptor, bases[0], d3_pattern())
        ring.formula = self.formula
        return ring
