import pytest
from pydantic import ValidationError

from src.checkers import (
    PROPERTY_CHECKERS,
    Side,
    evaluate,
    k0_kernel_condition,
    one_sided_normality,
    recheck_witness,
)
from src.core import DomainError, ElementSet, qnil_set
from src.models.verdict import PredicateVerdict, WitnessElement


class TestNormality:
    """One-sided normality and the duo family."""

    def test_commutative_ring_is_duo(self, z4):
        for name in ("right-duo", "left-duo", "right-qnil-duo", "left-qnil-duo", "qnil-duo"):
            verdict = evaluate(z4, name)
            assert verdict.holds, name
            assert verdict.witness is None

    def test_local16_right_witness(self, local16):
        verdict = evaluate(local16, "right-qnil-duo")
        assert not verdict.holds
        assert verdict.witness_index("a") == local16.y
        assert verdict.witness_index("b") == local16.x
        assert verdict.witness_index("product") == local16.element((2, 0, 0))
        assert recheck_witness(local16, verdict)

    def test_qnil_duo_reports_right_failure(self, local16):
        verdict = evaluate(local16, "qnil-duo")
        assert verdict.predicate == "qnil-duo"
        assert not verdict.holds
        assert recheck_witness(local16, verdict)

    def test_matrix_ring_is_not_qnil_duo(self, m2z2):
        verdict = evaluate(m2z2, "right-qnil-duo")
        assert not verdict.holds
        assert recheck_witness(m2z2, verdict)

    def test_trivial_subset(self, m2z2):
        verdict = one_sided_normality(m2z2, ElementSet.from_indexes(m2z2, [m2z2.zero]), Side.RIGHT)
        assert verdict.holds
        assert verdict.detail == "trivial subset"

    def test_side_accepts_strings(self, z4):
        verdict = one_sided_normality(z4, qnil_set(z4), "left", "left-qnil-duo")
        assert verdict.holds

    def test_verdicts_are_memoized(self, m2z2):
        assert evaluate(m2z2, "abelian") is evaluate(m2z2, "abelian")

    def test_unknown_predicate(self, z4):
        with pytest.raises(KeyError):
            evaluate(z4, "noetherian")


class TestStructure:
    """Ring-theoretic predicates on small rings."""

    @pytest.mark.parametrize("name,expected", [
        ("local", False),
        ("abelian", False),
        ("directly-finite", True),
        ("exchange", True),
        ("clean", True),
        ("stable-range-one", True),
        ("regular", True),
        ("strongly-regular", False),
        ("qnil-central", False),
        ("right-unit-duo", False),
        ("right-normal-on-jacobson", True),
    ])
    def test_m2z2_profile(self, m2z2, name, expected):
        verdict = evaluate(m2z2, name)
        assert verdict.holds is expected
        if not expected:
            assert recheck_witness(m2z2, verdict)

    @pytest.mark.parametrize("name,expected", [
        ("local", True),
        ("abelian", True),
        ("regular", False),
        ("qnil-central", True),
        ("exchange", True),
    ])
    def test_z4_profile(self, z4, name, expected):
        assert evaluate(z4, name).holds is expected

    def test_z6_is_strongly_regular(self, builtin):
        ring = builtin("z2xz3")
        assert evaluate(ring, "strongly-regular").holds
        local = evaluate(ring, "local")
        assert not local.holds
        assert recheck_witness(ring, local)

    def test_upper_triangular_is_not_abelian(self, builtin):
        ring = builtin("u2-z2")
        verdict = evaluate(ring, "abelian")
        assert not verdict.holds
        assert recheck_witness(ring, verdict)

    def test_local16_is_local(self, local16):
        assert evaluate(local16, "local").holds
        qnil_central = evaluate(local16, "qnil-central")
        assert not qnil_central.holds
        assert recheck_witness(local16, qnil_central)

    def test_every_checker_runs(self, builtin):
        ring = builtin("u2-z2")
        for name, checker in PROPERTY_CHECKERS.items():
            verdict = checker(ring)
            assert verdict.predicate == name
            assert verdict.elapsed_ms >= 0


class TestKernelCondition:
    """Kernel condition on K_0 rings."""

    def test_zero_satisfies_condition(self, k0z2):
        verdict = k0_kernel_condition(k0z2, k0z2.zero)
        assert verdict.holds
        assert verdict.consequence_holds is True

    def test_corner_entry_breaks_condition(self, k0z2):
        A = k0z2.from_blocks([0, 1, 0, 0])
        assert A in qnil_set(k0z2)
        verdict = k0_kernel_condition(k0z2, A)
        assert not verdict.holds
        assert {w.role for w in verdict.witness} == {"x", "y"}

    def test_requires_k0_ring(self, m2z2):
        with pytest.raises(DomainError):
            k0_kernel_condition(m2z2, m2z2.zero)

    def test_requires_quasinilpotent(self, k0z2):
        with pytest.raises(DomainError):
            k0_kernel_condition(k0z2, k0z2.one)


class TestVerdicts:
    """Verdict model and witness re-checks."""

    def test_witness_required_on_failure(self):
        with pytest.raises(ValidationError):
            PredicateVerdict(predicate="local", ring="Z_4", holds=False)

    def test_witness_forbidden_on_success(self):
        with pytest.raises(ValidationError):
            PredicateVerdict(predicate="local", ring="Z_4", holds=True,
                             witness=[WitnessElement(role="a", index=0, label="0")])

    def test_recheck_of_holding_verdict(self, z4):
        assert recheck_witness(z4, evaluate(z4, "local")) is False

    def test_recheck_rejects_forged_witness(self, m2z2):
        forged = PredicateVerdict(
            predicate="directly-finite", ring=m2z2.name, holds=False,
            witness=[WitnessElement(role="a", index=m2z2.one, label="1"),
                     WitnessElement(role="b", index=m2z2.one, label="1")],
        )
        assert recheck_witness(m2z2, forged) is False

    def test_recheck_unknown_predicate(self, z4):
        verdict = PredicateVerdict(predicate="noetherian", ring="Z_4", holds=False,
                                   witness=[WitnessElement(role="a", index=0, label="0")])
        with pytest.raises(KeyError):
            recheck_witness(z4, verdict)


@pytest.mark.slow
class TestLargeRings:
    """Checks on the order 1024 ring."""

    def test_l11_is_not_right_qnil_duo(self, builtin):
        ring = builtin("l11-z4")
        verdict = evaluate(ring, "right-qnil-duo")
        assert not verdict.holds
        assert recheck_witness(ring, verdict)
