import numpy as np
import pytest

from src.constructions.manager import build, build_table_ring
from src.core import (
    AxiomViolationError,
    DomainError,
    ElementSet,
    center,
    commutant,
    double_commutant,
    idempotents,
    inverse,
    jacobson_radical,
    nilpotents,
    qnil_set,
    units,
    verify_axioms,
)
from src.models.descriptor import RingDescriptor, RingKind


def members(element_set):
    return list(element_set.members)


class TestArithmetic:
    """Kernels and public arithmetic."""

    def test_zn_operations(self, z4):
        assert z4.add(3, 2) == 1
        assert z4.mul(3, 3) == 1
        assert z4.neg(1) == 3
        assert z4.sub(0, 1) == 3
        assert z4.times(3, 3) == 1
        assert z4.power(2, 2) == 0
        assert z4.power(3, 0) == z4.one

    def test_kernels_accept_arrays(self, z4):
        products = np.asarray(z4._mul(z4.elements, 2))
        assert products.tolist() == [0, 2, 0, 2]
        assert z4.mul_row(3).tolist() == [0, 3, 2, 1]

    def test_negative_power_rejected(self, z4):
        with pytest.raises(DomainError):
            z4.power(1, -1)

    def test_characteristic(self, builtin):
        assert builtin("z4").characteristic == 4
        assert builtin("m2-z4").characteristic == 4
        assert builtin("z2xz3").characteristic == 6

    def test_commutativity(self, z4, m2z2):
        assert z4.is_commutative()
        assert not m2z2.is_commutative()

    def test_table_cache_matches_kernel(self, m2z2):
        table = m2z2.mul_table()
        assert table.shape == (16, 16)
        assert table[8, 9] == m2z2.mul(8, 9) == 8

    def test_matrix_coordinates(self, m2z2):
        e11 = m2z2.parse_literal("[[1,0],[0,0]]")
        assert e11 == 8
        assert m2z2.parse_literal("a11=1,a22=1") == m2z2.one == 9
        assert m2z2.label(8) == "[[1,0],[0,0]]"


class TestElementLiterals:
    """Construction-native element literals."""

    def test_named_coordinates(self, local16):
        assert local16.parse_literal("a=2,b=1,c=0") == 10
        assert local16.parse_literal("b=1") == local16.x

    def test_positional_and_json(self, local16):
        assert local16.parse_literal("2,1,0") == 10
        assert local16.parse_literal("[0,0,1]") == local16.y

    @pytest.mark.parametrize("text", ["", "a=1,2", "q=1", "1,x,0", "2,1"])
    def test_malformed_literals(self, local16, text):
        with pytest.raises(DomainError):
            local16.parse_literal(text)

    def test_value_outside_coordinate_range(self, local16):
        with pytest.raises(DomainError):
            local16.element([0, 2, 0])


class TestDerivedSets:
    """Units, quasinilpotents and the other structural sets."""

    def test_z4(self, z4):
        assert members(units(z4)) == [1, 3]
        assert members(qnil_set(z4)) == [0, 2]
        assert members(jacobson_radical(z4)) == [0, 2]
        assert members(nilpotents(z4)) == [0, 2]
        assert members(idempotents(z4)) == [0, 1]
        assert len(center(z4)) == 4

    def test_z6(self):
        z6 = build(RingDescriptor(kind=RingKind.ZN, n=6))
        assert members(units(z6)) == [1, 5]
        assert members(qnil_set(z6)) == [0]
        assert members(idempotents(z6)) == [0, 1, 3, 4]

    def test_m2z2(self, m2z2):
        assert len(units(m2z2)) == 6
        assert len(idempotents(m2z2)) == 8
        assert qnil_set(m2z2) == nilpotents(m2z2)
        assert len(qnil_set(m2z2)) == 4
        assert members(jacobson_radical(m2z2)) == [0]
        assert members(center(m2z2)) == [0, 9]

    def test_commutant_of_matrix_unit(self, m2z2):
        assert members(commutant(m2z2, 8)) == [0, 1, 8, 9]
        assert members(double_commutant(m2z2, 8)) == [0, 1, 8, 9]

    def test_local16_qnil_labels(self, local16):
        q = qnil_set(local16)
        assert len(q) == 8
        assert set(q.labels()) == {"0", "2", "x", "y", "2+x", "2+y", "x+y", "2+x+y"}

    def test_inverse(self, z4, m2z2):
        assert inverse(z4, 3) == 3
        with pytest.raises(DomainError):
            inverse(z4, 2)
        u = m2z2.parse_literal("[[1,1],[0,1]]")
        assert m2z2.mul(u, inverse(m2z2, u)) == m2z2.one

    def test_element_out_of_range(self, z4):
        with pytest.raises(DomainError):
            commutant(z4, 4)

    def test_sets_are_memoized(self, m2z2):
        assert qnil_set(m2z2) is qnil_set(m2z2)

    def test_commutants_are_not_memoized(self, m2z2):
        for a in range(m2z2.order):
            double_commutant(m2z2, a)
        assert commutant(m2z2, 8) is not commutant(m2z2, 8)
        assert commutant(m2z2, 8) == commutant(m2z2, 8)
        assert double_commutant(m2z2, 8) is not double_commutant(m2z2, 8)


class TestElementSet:
    def test_membership_and_algebra(self, z4):
        evens = ElementSet.from_indexes(z4, [0, 2])
        odd = ElementSet.from_indexes(z4, [1, 3])
        assert 2 in evens and 1 not in evens and "x" not in evens
        assert (evens | odd) == ElementSet.full(z4)
        assert len(evens & odd) == 0
        assert (ElementSet.full(z4) - evens) == odd
        assert evens.complement() == odd
        assert evens.issubset(ElementSet.full(z4))

    def test_rejects_foreign_shapes(self, z4):
        with pytest.raises(ValueError):
            ElementSet(z4, np.ones(5, dtype=bool))
        with pytest.raises(ValueError):
            ElementSet.from_indexes(z4, [4])

    def test_masks_are_read_only(self, z4):
        with pytest.raises(ValueError):
            units(z4).mask[0] = True


class TestAxioms:
    """Exhaustive ring-law scans."""

    def test_builtin_rings_pass(self, z4, m2z2, local16):
        for ring in (z4, m2z2, local16):
            assert verify_axioms(ring).ok

    def test_cap_reports_unchecked(self, m2z2):
        report = verify_axioms(m2z2, cap=8)
        assert report.status == "unchecked"
        assert verify_axioms(m2z2, cap=8, force=True).ok

    def test_broken_table_rejected(self):
        add = [[0, 1], [1, 0]]
        mul = [[1, 0], [0, 1]]
        with pytest.raises(AxiomViolationError) as excinfo:
            build_table_ring(add, mul)
        assert excinfo.value.report is not None
        assert excinfo.value.report.status == "violation"

    def test_table_without_additive_identity(self):
        with pytest.raises(AxiomViolationError):
            build_table_ring([[1, 1], [1, 1]], [[0, 0], [0, 1]])
