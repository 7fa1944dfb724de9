"""
The 16-element local ring Z_4<x,y>/(x^3, y^2, yx, x^2-xy, x^2-2, 2x, 2y).
"""
from src.constructions.base import RingBuilder
from src.core.ring import FiniteRing, Index
from src.models.descriptor import RingDescriptor, RingKind


class Local16Ring(FiniteRing):
    """Normal forms a + bx + cy with a ∈ Z_4 and b, c ∈ {0, 1}.

    x² = xy = 2, yx = y² = 0, 2x = 2y = 0.
    """

    formula = ("(a+bx+cy)(a'+b'x+c'y) = (aa' + 2bb' + 2bc') + (ab'+a'b)x + (ac'+a'c)y, "
               "a ∈ Z_4, b,c ∈ Z_2")

    def __init__(self, descriptor: RingDescriptor = None):
        super().__init__(descriptor or RingDescriptor(kind=RingKind.LOCAL16), (4, 2, 2), ("a", "b", "c"))
        self.zero = 0
        self.one = self.radix.encode_tuple((1, 0, 0))
        self.x = self.radix.encode_tuple((0, 1, 0))
        self.y = self.radix.encode_tuple((0, 0, 1))

    def _add(self, i: Index, j: Index) -> Index:
        a1, b1, c1 = self.radix.decode(i)
        a2, b2, c2 = self.radix.decode(j)
        return self.radix.encode([(a1 + a2) % 4, (b1 + b2) % 2, (c1 + c2) % 2])

    def _neg(self, i: Index) -> Index:
        a, b, c = self.radix.decode(i)
        return self.radix.encode([(-a) % 4, b, c])

    def _mul(self, i: Index, j: Index) -> Index:
        a1, b1, c1 = self.radix.decode(i)
        a2, b2, c2 = self.radix.decode(j)
        return self.radix.encode([
            (a1 * a2 + 2 * b1 * b2 + 2 * b1 * c2) % 4,
            (a1 * b2 + a2 * b1) % 2,
            (a1 * c2 + a2 * c1) % 2,
        ])

    def label(self, index: int) -> str:
        a, b, c = self.coords(index)
        terms = [str(a)] if a else []
        if b:
            terms.append("x")
        if c:
            terms.append("y")
        return "+".join(terms) if terms else "0"


class Local16Builder(RingBuilder):
    kind = RingKind.LOCAL16
    formula = Local16Ring.formula
    ref = r'§3, "Let $A= \Bbb Z_4[x, y]$ be the"'

    def predicted_order(self, descriptor, bases) -> int:
        return 16

    def realize(self, descriptor, bases) -> FiniteRing:
        return Local16Ring(descriptor)
