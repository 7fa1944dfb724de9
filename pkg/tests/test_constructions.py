import pytest

from src.constructions.manager import (
    build,
    construction_manager,
    parse_descriptor,
    zn,
)
from src.constructions.matrix import MatrixPatternRing, upper_pattern
from src.constructions.table import table_descriptor
from src.core import CapExceededError, DescriptorError, DomainError
from src.models.descriptor import RingDescriptor, RingKind
from src.suite.cases.common import same_arithmetic
from src.suite.catalog import BUILTIN_RINGS


EXPECTED_ORDERS = {
    "z2xz3": 6,
    "m2-z2": 16,
    "u2-z2": 8,
    "d3-z2": 16,
    "v3-z2": 8,
    "v3-z4": 64,
    "l01-z4": 256,
    "l10-z4": 256,
    "l00-z4": 64,
    "h11-z4": 64,
    "k0-z2": 16,
    "k0-z4": 256,
    "dorroh-m2z2-z2": 32,
    "dorroh-z4-z4": 16,
    "hurwitz-z2-2": 8,
    "skew-z2xz2-swap-2": 64,
    "t2-z4-z4": 64,
    "local16": 16,
    "d3pattern-z4": 64,
    "corner-m2z2-e11": 2,
    "corner-m2z2-e11e12": 2,
}


class TestDescriptors:
    """Descriptor parsing and naming."""

    def test_missing_parameter(self):
        with pytest.raises(DescriptorError, match="base"):
            parse_descriptor({"kind": "Mn", "n": 2})

    def test_unknown_kind(self):
        with pytest.raises(DescriptorError):
            parse_descriptor({"kind": "Quaternion"})

    def test_empty_product(self):
        with pytest.raises(DescriptorError):
            parse_descriptor({"kind": "Product", "factors": []})

    def test_display_names(self):
        assert BUILTIN_RINGS["m2-z2"].display_name() == "M_2(Z_2)"
        assert BUILTIN_RINGS["l11-z4"].display_name() == "L_(1,1)(Z_4)"
        assert BUILTIN_RINGS["k0-z2"].display_name() == "K_0(Z_2)"
        assert BUILTIN_RINGS["dorroh-m2z2-z2"].display_name() == "I(M_2(Z_2), Z_2)"
        assert RingDescriptor(kind=RingKind.ZN, n=5, name="five").display_name() == "five"

    def test_digest_is_stable(self):
        data = {"kind": "Lst", "base": {"kind": "Zn", "n": 4}, "s": 1, "t": 1}
        assert parse_descriptor(data).digest() == BUILTIN_RINGS["l11-z4"].digest()
        assert parse_descriptor(data).digest() != BUILTIN_RINGS["l10-z4"].digest()

    def test_parse_passes_descriptors_through(self):
        descriptor = zn(7)
        assert parse_descriptor(descriptor) is descriptor


class TestBuilding:
    """Construction manager behavior."""

    @pytest.mark.parametrize("slug,order", sorted(EXPECTED_ORDERS.items()))
    def test_builtin_orders(self, builtin, slug, order):
        assert builtin(slug).order == order

    def test_rings_are_cached(self, builtin):
        assert builtin("m2-z2") is construction_manager.build(BUILTIN_RINGS["m2-z2"])

    def test_order_cap(self):
        with pytest.raises(CapExceededError) as excinfo:
            build(BUILTIN_RINGS["m2-z4"], order_cap=100)
        assert excinfo.value.order == 256
        assert excinfo.value.cap == 100

    def test_order_cap_applies_to_cached_rings(self, builtin):
        assert builtin("k0-z2").order == 16
        with pytest.raises(CapExceededError):
            build(BUILTIN_RINGS["k0-z2"], order_cap=8)

    def test_zn_needs_modulus_above_one(self):
        with pytest.raises(DescriptorError):
            build({"kind": "Zn", "n": 1})

    def test_matrix_size_at_least_two(self):
        with pytest.raises(DescriptorError):
            build({"kind": "Mn", "base": {"kind": "Zn", "n": 2}, "n": 1})


class TestScalarRings:
    """Z_n, products and truncated sequences."""

    def test_product_componentwise(self, builtin):
        ring = builtin("z2xz3")
        a = ring.element((1, 2))
        assert ring.one == ring.element((1, 1))
        assert ring.mul(a, a) == ring.one
        assert ring.project(a, 1) == 2
        assert ring.label(a) == "(1, 2)"

    def test_truncated_sequence_layout(self, builtin):
        ring = builtin("t2-z4-z4")
        assert ring.length == 2
        assert ring.prefix_ring.order == 4
        assert ring.tail_ring.order == 4
        assert ring.label(ring.one) == "(1, 1; 1, 1, ...)"


class TestMatrixRings:
    """Matrix patterns, L_(s,t) and H_(s,t)."""

    def test_matrix_units(self, m2z2):
        e11 = m2z2.element([1, 0, 0, 0])
        e12 = m2z2.element([0, 1, 0, 0])
        e21 = m2z2.element([0, 0, 1, 0])
        assert e11 == 8
        assert m2z2.one == 9
        assert m2z2.mul(e12, e21) == e11
        assert m2z2.mul(e21, e12) == m2z2.element([0, 0, 0, 1])
        assert m2z2.matrix_entries(e12) == [[0, 1], [0, 0]]

    def test_upper_triangular_rejects_lower_entry(self, builtin):
        ring = builtin("u2-z2")
        with pytest.raises(DomainError):
            ring.from_matrix([[1, 0], [1, 1]])

    def test_lst_element_and_params(self, builtin):
        ring = builtin("l01-z4")
        index = ring.element([1, 3, 2, 1, 0])
        assert ring.matrix_entries(index) == [[1, 0, 0], [0, 2, 1], [0, 0, 0]]
        assert ring.params(index) == (1, 0, 2, 1, 0)

    def test_lst_rejects_entries_outside_ideal(self, builtin):
        ring = builtin("l01-z4")
        with pytest.raises(DomainError):
            ring.from_matrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]])

    def test_lst_parameters_must_be_central(self):
        m2 = {"kind": "Mn", "base": {"kind": "Zn", "n": 2}, "n": 2}
        with pytest.raises(DescriptorError, match="central"):
            build({"kind": "Lst", "base": m2, "s": [1, 0, 0, 0], "t": [0, 0, 0, 0]})

    def test_hst_entries(self, builtin):
        ring = builtin("h11-z4")
        index = ring.element([1, 1, 1])
        assert ring.matrix_entries(index) == [[1, 0, 0], [1, 0, 1], [0, 0, 3]]

    def test_hst_parameters_must_be_units(self):
        with pytest.raises(DescriptorError, match="unit"):
            build({"kind": "Hst", "base": {"kind": "Zn", "n": 4}, "s": 2, "t": 1})

    def test_d3_pattern_is_commutative(self, builtin):
        ring = builtin("d3pattern-z4")
        assert ring.is_commutative()
        b = ring.element([0, 1, 0])
        c = ring.element([0, 0, 1])
        assert ring.mul(b, c) == ring.zero

    def test_pattern_not_closed_is_rejected(self, builtin, open_pattern):
        descriptor = RingDescriptor(kind=RingKind.MN, base=zn(2), n=2)
        with pytest.raises(DescriptorError, match=r"not closed under multiplication: .* at \(1, 1\)"):
            MatrixPatternRing(descriptor, builtin("z2"), open_pattern)

    def test_closed_pattern_is_accepted(self, builtin):
        ring = MatrixPatternRing(RingDescriptor(kind=RingKind.UN, base=zn(2), n=2), builtin("z2"), upper_pattern(2))
        assert ring.order == 8


class TestGeneralizedMatrixRings:
    """K_s(R)."""

    def test_k0_square_of_all_ones(self, k0z2):
        ones = k0z2.from_blocks([1, 1, 1, 1])
        assert k0z2.mul(ones, ones) == k0z2.one
        assert k0z2.blocks(k0z2.one) == (1, 0, 0, 1)

    def test_k1_is_full_matrix_ring(self, builtin):
        assert same_arithmetic(builtin("k1-z2"), builtin("m2-z2"))


class TestDorrohExtensions:
    """I(R, Z_n)."""

    def test_identity_and_fold(self, builtin):
        ring = builtin("dorroh-z4-z4")
        element = ring.pair(1, 2)
        assert ring.one == ring.pair(0, 1)
        assert ring.mul(element, ring.one) == element
        assert ring.mul(ring.one, element) == element
        assert ring.fold(element) == 3
        assert ring.split(element) == (1, 2)

    def test_exponent_must_divide_n(self):
        with pytest.raises(DescriptorError):
            build({"kind": "Dorroh", "base": {"kind": "Zn", "n": 4}, "n": 2})


class TestSeriesRings:
    """Truncated Hurwitz and skew power series."""

    def test_hurwitz_x_squared_vanishes_over_z2(self, builtin):
        ring = builtin("hurwitz-z2-2")
        x = ring.element([0, 1, 0])
        assert ring.label(x) == "x"
        assert ring.mul(x, x) == ring.zero

    def test_hurwitz_over_z4_doubles(self, builtin):
        ring = builtin("hurwitz-z4-2")
        x = ring.element([0, 1, 0])
        assert ring.mul(x, x) == ring.element([0, 0, 2])

    def test_power_series_x_squared(self):
        ring = build({"kind": "SkewPowerTrunc", "base": {"kind": "Zn", "n": 2}, "degree": 2})
        x = ring.element([0, 1, 0])
        assert ring.mul(x, x) == ring.element([0, 0, 1])

    def test_skew_twist(self, builtin):
        ring = builtin("skew-z2xz2-swap-2")
        base = ring.base
        r = base.element((1, 0))
        twisted = base.element((0, 1))
        x = ring.element([0, base.one, 0])
        assert ring.mul(x, ring.constant(r)) == ring.mul(ring.constant(twisted), x)
        assert ring.mul(x, ring.constant(r)) != ring.mul(ring.constant(r), x)
        assert ring.epsilon(ring.constant(r)) == r

    def test_alpha_must_be_an_endomorphism(self):
        base = {"kind": "Product", "factors": [{"kind": "Zn", "n": 2}, {"kind": "Zn", "n": 2}]}
        with pytest.raises(DescriptorError):
            build({"kind": "SkewPowerTrunc", "base": base, "alpha": [0, 1, 1, 3], "degree": 2})


class TestSmallRings:
    """Corners, the local ring of order 16 and table rings."""

    def test_corner_embedding(self, builtin, m2z2):
        ring = builtin("corner-m2z2-e11")
        assert ring.embed(ring.one) == 8
        assert ring.restrict(m2z2.zero) == ring.zero
        with pytest.raises(DomainError):
            ring.restrict(m2z2.one)

    def test_corner_needs_idempotent(self):
        m2 = {"kind": "Mn", "base": {"kind": "Zn", "n": 2}, "n": 2}
        with pytest.raises(DescriptorError, match="idempotent"):
            build({"kind": "Corner", "base": m2, "e": [1, 1, 1, 1]})

    def test_local16_relations(self, local16):
        x, y = local16.x, local16.y
        two = local16.element((2, 0, 0))
        assert (x, y, two) == (2, 1, 8)
        assert local16.mul(x, x) == two
        assert local16.mul(x, y) == two
        assert local16.mul(y, x) == local16.zero
        assert local16.mul(y, y) == local16.zero
        assert local16.label(11) == "2+x+y"

    def test_table_export_preserves_arithmetic(self, local16):
        ring = build(table_descriptor(local16))
        assert ring.order == 16
        assert same_arithmetic(ring, local16)
