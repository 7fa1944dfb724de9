"""
Truncated Hurwitz series and truncated skew power series.
"""
from math import comb
from typing import List, Optional, Sequence

import numpy as np

from src.config.settings import settings
from src.constructions.base import RingBuilder
from src.core.errors import DescriptorError
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind


class EndomorphismMap:
    """Unital ring endomorphism of a finite ring, given as an index table."""

    def __init__(self, base: FiniteRing, image: Optional[Sequence[int]] = None):
        self.base = base
        if image is None:
            table = base.elements.copy()
        else:
            table = np.asarray(list(image), dtype=np.int64)
        if table.shape != (base.order,):
            raise DescriptorError(f"endomorphism table needs {base.order} entries, got {table.size}")
        if table.size and (table.min() < 0 or table.max() >= base.order):
            raise DescriptorError("endomorphism table entries must be element indexes of the base")
        table.setflags(write=False)
        self.image = table
        self.validate()

    @property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.image, self.base.elements))

    def validate(self):
        base, alpha = self.base, self.image
        if alpha[base.zero] != base.zero:
            raise DescriptorError("α must send 0 to 0")
        if alpha[base.one] != base.one:
            raise DescriptorError("α must send 1 to 1")
        if base.order > settings.axiom_check_cap:
            raise DescriptorError(f"base of order {base.order} is too large to verify α")
        for i in range(base.order):
            sums = np.asarray(base._add(i, base.elements), dtype=np.int64)
            bad = np.flatnonzero(alpha[sums] != base._add(alpha[i], alpha))
            if bad.size:
                raise DescriptorError(f"α does not preserve addition at ({i}, {int(bad[0])})")
            products = base.mul_row(i)
            bad = np.flatnonzero(alpha[products] != base._mul(alpha[i], alpha))
            if bad.size:
                raise DescriptorError(f"α does not preserve multiplication at ({i}, {int(bad[0])})")

    def powers(self, count: int) -> List[np.ndarray]:
        """Tables of α^0 .. α^(count-1)."""
        tables = [self.base.elements]
        for _ in range(1, count):
            tables.append(self.image[tables[-1]])
        return tables


class TruncatedSeriesRing(FiniteRing):
    """Coefficient vectors (a_0, ..., a_k) multiplied modulo x^(k+1)."""

    def __init__(self, descriptor: RingDescriptor, base: FiniteRing, alpha: EndomorphismMap,
                 degree: int, hurwitz: bool):
        self.base = base
        self.alpha = alpha
        self.degree = degree
        self.hurwitz = hurwitz
        super().__init__(descriptor, (base.order,) * (degree + 1), [f"a{i}" for i in range(degree + 1)])
        self.zero = self.radix.encode_tuple((base.zero,) * (degree + 1))
        self.one = self.radix.encode_tuple((base.one,) + (base.zero,) * degree)
        self._alpha_powers = alpha.powers(degree + 1)
        char = base.characteristic
        self._coefficients = [[comb(n, i) % char if hurwitz else 1 for i in range(n + 1)]
                              for n in range(degree + 1)]
        if hurwitz:
            self.formula = "c_n = Σ_{i=0..n} C(n,i)·a_i·α^i(b_{n-i}), truncated at degree k"
        else:
            self.formula = "c_n = Σ_{i=0..n} a_i·α^i(b_{n-i}), truncated at degree k"
        if not alpha.is_identity:
            self.notes.append("α acts on the right factor: x·r = α(r)·x")

    def _add(self, i: Index, j: Index) -> Index:
        return self.radix.encode([self.base._add(u, v) for u, v in zip(self.radix.decode(i), self.radix.decode(j))])

    def _neg(self, i: Index) -> Index:
        return self.radix.encode([self.base._neg(u) for u in self.radix.decode(i)])

    def _mul(self, i: Index, j: Index) -> Index:
        R = self.base
        left = self.radix.decode(i)
        right = self.radix.decode(j)
        out = []
        for n in range(self.degree + 1):
            acc: Index = R.zero
            for k in range(n + 1):
                coefficient = self._coefficients[n][k]
                if coefficient == 0:
                    continue
                term = R._mul(left[k], self._alpha_powers[k][right[n - k]])
                if coefficient != 1:
                    term = R._times(coefficient, term)
                acc = R._add(acc, term)
            out.append(acc)
        return self.radix.encode(out)

    def epsilon(self, index: Index) -> Index:
        """Constant term a_0."""
        return self.radix.decode(index)[0]

    def constant(self, r: int) -> int:
        return self.radix.encode_tuple((r,) + (self.base.zero,) * self.degree)

    def label(self, index: int) -> str:
        terms = []
        for power, coefficient in enumerate(self.coords(index)):
            if coefficient == self.base.zero:
                continue
            text = self.base.label(coefficient)
            if power == 0:
                terms.append(text)
            else:
                monomial = "x" if power == 1 else f"x^{power}"
                terms.append(monomial if coefficient == self.base.one else f"{text}{monomial}")
        return " + ".join(terms) if terms else self.base.label(self.base.zero)


class SeriesBuilder(RingBuilder):
    def __init__(self, kind: RingKind):
        self.kind = kind
        self.hurwitz = kind == RingKind.HURWITZ_TRUNC
        if self.hurwitz:
            self.formula = "HurwitzTrunc(R, α, k): c_n = Σ C(n,i)·a_i·α^i(b_{n-i}) mod x^(k+1)"
            self.ref = '§2, "except that binomial"'
        else:
            self.formula = "SkewPowerTrunc(R, α, k): c_n = Σ a_i·α^i(b_{n-i}) mod x^(k+1)"
            self.ref = '§2, "be the skew formal power series ring over $R$"'

    def predicted_order(self, descriptor, bases) -> int:
        return bases[0].order ** (int(descriptor.degree) + 1)

    def realize(self, descriptor, bases) -> FiniteRing:
        base = bases[0]
        alpha = EndomorphismMap(base, descriptor.alpha)
        return TruncatedSeriesRing(descriptor, base, alpha, int(descriptor.degree), self.hurwitz)
