"""
Cases on the matrix families L_(s,t)(R), H_(s,t)(R) and K_s(R).
"""
from typing import Tuple

import numpy as np

from src.checkers import k0_kernel_condition
from src.constructions.manager import zn
from src.core.derived import center, qnil_set, units
from src.core.ring import FiniteRing
from src.models.descriptor import RingDescriptor, RingKind
from src.models.report import CaseKind
from ..case import CaseContext, Checklist, Finding, Implication, case_registry
from .common import same_arithmetic

L_RINGS = ("l11-z4", "l01-z4", "l10-z4", "l00-z4")
H_RINGS = ("h11-z4", "h13-z4")
K0_RINGS = ("k0-z2", "k0-z4")

# A and B of the L_(1,1)(Z_4) counterexample, and their product BA.
L11_A = [[0, 0, 0], [1, 2, 1], [0, 0, 3]]
L11_B = [[2, 0, 0], [1, 2, 3], [0, 0, 2]]
L11_BA = [[0, 0, 0], [2, 0, 3], [0, 0, 2]]


def diagonals(ring: FiniteRing) -> np.ndarray:
    """Diagonal entries of every element, one row per index."""
    return ring.memo("diagonals", lambda: np.array([ring.diagonal(i) for i in range(ring.order)], dtype=np.int64))


def outer_blocks(ring: FiniteRing) -> Tuple[np.ndarray, np.ndarray]:
    """Corner entries a and d of every element of a generalized matrix ring."""
    blocks = np.array([ring.blocks(i) for i in range(ring.order)], dtype=np.int64)
    return blocks[:, 0], blocks[:, 3]


def no_zero_divisors(ring: FiniteRing) -> bool:
    nonzero = np.arange(ring.order) != ring.zero
    return not (ring.mul_table()[np.ix_(nonzero, nonzero)] == ring.zero).any()


def _first_mismatch(actual: np.ndarray, expected: np.ndarray) -> int:
    return int(np.argmax(actual != expected))


@case_registry.register(
    "lst.units-diagonal",
    "A ∈ L_(s,t)(R) is invertible iff a, d and f are invertible in R",
    inputs=L_RINGS,
    ref='§4, "$d$ and $f$ are invertible in $R$"',
)
def lst_units_diagonal(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in L_RINGS:
        ring = ctx.ring(slug)
        expected = units(ring.base).mask[diagonals(ring)].all(axis=1)
        actual = units(ring).mask
        checks.expect(np.array_equal(actual, expected), f"{ring.name}: units are not the invertible-diagonal elements",
                      ring, a=_first_mismatch(actual, expected))
    return checks.finding()


@case_registry.register(
    "lst.qnil-diagonal-sufficient",
    "If a, d, f ∈ R^qnil then A ∈ L_(s,t)(R)^qnil",
    inputs=L_RINGS,
    ref=r'§4, "then $A\in L_{(s,t)}(R)^{qnil}$"',
)
def lst_qnil_diagonal_sufficient(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in L_RINGS:
        ring = ctx.ring(slug)
        sufficient = qnil_set(ring.base).mask[diagonals(ring)].all(axis=1)
        outside = np.flatnonzero(sufficient & ~qnil_set(ring).mask)
        checks.expect(outside.size == 0, f"{ring.name}: qnil diagonal without qnil matrix", ring,
                      a=int(outside[0]) if outside.size else 0)
    return checks.finding()


@case_registry.register(
    "lst.qnil-characterization",
    "A ∈ L_(0,t)(R)^qnil ⇒ a ∈ R^qnil; A ∈ L_(s,0)(R)^qnil ⇒ f ∈ R^qnil; "
    "A ∈ L_(0,0)(R)^qnil iff a, d, f ∈ R^qnil",
    inputs=("l01-z4", "l10-z4", "l00-z4"),
    ref=r'§4, "$A\in L_{(0,0)}(R)^{qnil}$ if and only if"',
)
def lst_qnil_characterization(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in ("l01-z4", "l10-z4", "l00-z4"):
        ring = ctx.ring(slug)
        base_qnil = qnil_set(ring.base).mask[diagonals(ring)]
        q = qnil_set(ring).mask
        if ring.s == ring.base.zero:
            bad = np.flatnonzero(q & ~base_qnil[:, 0])
            checks.expect(bad.size == 0, f"{ring.name}: qnil A with a ∉ R^qnil", ring, a=int(bad[0]) if bad.size else 0)
        if ring.t == ring.base.zero:
            bad = np.flatnonzero(q & ~base_qnil[:, 2])
            checks.expect(bad.size == 0, f"{ring.name}: qnil A with f ∉ R^qnil", ring, a=int(bad[0]) if bad.size else 0)
        if ring.s == ring.t == ring.base.zero:
            expected = base_qnil.all(axis=1)
            checks.expect(np.array_equal(q, expected), f"{ring.name}: qnil is not the qnil-diagonal set",
                          ring, a=_first_mismatch(q, expected))
    return checks.finding()


@case_registry.register(
    "lst.l0t-descent",
    "If L_(0,t)(R) is right qnil-duo then R is right qnil-duo",
    kind=CaseKind.IMPLICATION,
    inputs=("l01-z4", "l00-z4"),
    ref='§4, "If $L_{(0, t)}(R)$ is right qnil-duo, then $R$ is a right qnil-duo ring"',
)
def lst_l0t_descent(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug in ("l01-z4", "l00-z4"):
        ring = ctx.ring(slug)
        tally.check(slug, ctx.holds(ring, "right-qnil-duo"), ctx.holds(ring.base, "right-qnil-duo"))
    return tally.finding()


@case_registry.register(
    "lst.l11-z4-right-qnil-duo",
    "L_(1,1)(Z_4) is right qnil-duo",
    inputs=("l11-z4",),
    expected=False,
    ref=r'§4, "The ring $L_{(1,1)}(\Bbb Z_4)$ is not"',
)
def lst_l11_right_qnil_duo(ctx: CaseContext) -> Finding:
    return Finding.from_verdict(ctx.verdict(ctx.ring("l11-z4"), "right-qnil-duo"))


@case_registry.register(
    "lst.l11-z4-witness",
    "In L_(1,1)(Z_4), B ∈ qnil and A give BA with no C ∈ qnil satisfying AC = BA",
    inputs=("l11-z4",),
    ref='§4, "such that $BA = AC$"',
)
def lst_l11_witness(ctx: CaseContext) -> Finding:
    ring = ctx.ring("l11-z4")
    checks = Checklist()
    A, B, BA = ring.from_matrix(L11_A), ring.from_matrix(L11_B), ring.from_matrix(L11_BA)
    q = qnil_set(ring)
    checks.expect(B in q, "B is not quasinilpotent", ring, b=B)
    checks.expect(ring.mul(B, A) == BA, "BA is not the expected matrix", ring, a=A, b=B)
    row = ring.mul_row(A)
    solutions = np.flatnonzero(row == BA)
    checks.expect(not q.mask[solutions].any(), "some C ∈ qnil has AC = BA", ring,
                  c=int(solutions[q.mask[solutions]][0]) if q.mask[solutions].any() else 0)
    checks.observations["solutions_in_ring"] = int(solutions.size)
    return checks.finding()


def _diagonal_commute(ring: FiniteRing) -> np.ndarray:
    diag = diagonals(ring)
    table = ring.base.mul_table()
    left = table[diag[:, None, :], diag[None, :, :]]
    right = table[diag[None, :, :], diag[:, None, :]]
    return (left == right).all(axis=2)


@case_registry.register(
    "hst.characterization",
    "In H_(s,t)(R): AB = BA iff the diagonals commute entrywise; A is invertible iff a, d, f are; "
    "A ∈ qnil iff a, d, f ∈ R^qnil",
    inputs=H_RINGS,
    ref='§4, "$AB = BA$ if and only if $ax = xa$, $dz = zd$, $fv = vf$"',
)
def hst_characterization(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in H_RINGS:
        ring = ctx.ring(slug)
        table = ring.mul_table()
        commute = table == table.T
        checks.expect(np.array_equal(commute, _diagonal_commute(ring)),
                      f"{ring.name}: commuting pairs differ from diagonal-commuting pairs")
        diag = diagonals(ring)
        for name, ring_set, base_set in (("units", units(ring), units(ring.base)),
                                         ("qnil", qnil_set(ring), qnil_set(ring.base))):
            expected = base_set.mask[diag].all(axis=1)
            checks.expect(np.array_equal(ring_set.mask, expected), f"{ring.name}: {name} differ from the diagonal rule",
                          ring, a=_first_mismatch(ring_set.mask, expected))
    return checks.finding()


@case_registry.register(
    "hst.equivalence",
    "R is right qnil-duo iff H_(s,t)(R) is right qnil-duo",
    inputs=H_RINGS,
    ref='§4, "Then $R$ is right qnil-duo if and only if $H_{(s, t)}(R)$ is right qnil-duo"',
)
def hst_equivalence(ctx: CaseContext) -> Finding:
    checks = Checklist()
    rings = [ctx.ring(slug) for slug in H_RINGS]
    upper = ctx.build(RingDescriptor(kind=RingKind.UN, base=zn(2), n=2))
    identity = list(upper.params(upper.one))
    rings.append(ctx.build(RingDescriptor(kind=RingKind.HST, base=upper.descriptor, s=identity, t=identity)))
    for ring in rings:
        whole, base = ctx.holds(ring, "right-qnil-duo"), ctx.holds(ring.base, "right-qnil-duo")
        checks.observations[ring.name] = whole
        checks.expect(whole == base, f"{ring.name}: right qnil-duo differs from its base")
    return checks.finding()


@case_registry.register(
    "ks.k0-units-center",
    "U(K_0(R)) = {A : a, d ∈ U(R)} and C(K_0(R)) = {diag(a, a) : a ∈ C(R)}",
    inputs=K0_RINGS,
    ref=r'§4, "$U(K_0(R)) = \left"',
)
def ks_k0_units_center(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in K0_RINGS:
        ring = ctx.ring(slug)
        a, d = outer_blocks(ring)
        base_units = units(ring.base).mask
        expected = base_units[a] & base_units[d]
        actual = units(ring).mask
        checks.expect(np.array_equal(actual, expected), f"{ring.name}: units differ from the a, d ∈ U(R) rule",
                      ring, a=_first_mismatch(actual, expected))
        zero = ring.base.zero
        scalars = sorted(ring.from_blocks([c, zero, zero, c]) for c in center(ring.base).members)
        checks.expect(list(center(ring).members) == scalars, f"{ring.name}: center is not the scalar diagonals")
    return checks.finding()


@case_registry.register(
    "ks.k1-is-m2",
    "K_1(R) has the arithmetic of M_2(R)",
    inputs=("k1-z2", "m2-z2"),
    ref='derived: K_1(R) against M_2(R)',
)
def ks_k1_is_m2(ctx: CaseContext) -> Finding:
    return Finding(holds=same_arithmetic(ctx.ring("k1-z2"), ctx.ring("m2-z2")))


@case_registry.register(
    "ks.qnil-sufficiency",
    "If a, d ∈ R^qnil then A ∈ K_0(R)^qnil",
    inputs=K0_RINGS,
    ref=r'§4, "If $a$, $d\in R^{qnil}$, then $A\in K_0(R)^{qnil}$"',
)
def ks_qnil_sufficiency(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in K0_RINGS:
        ring = ctx.ring(slug)
        a, d = outer_blocks(ring)
        base_qnil = qnil_set(ring.base).mask
        outside = np.flatnonzero(base_qnil[a] & base_qnil[d] & ~qnil_set(ring).mask)
        checks.expect(outside.size == 0, f"{ring.name}: a, d quasinilpotent but A is not", ring,
                      a=int(outside[0]) if outside.size else 0)
    return checks.finding()


@case_registry.register(
    "ks.kernel-condition",
    "For A ∈ K_0(R)^qnil, b ∈ Ker(l_x - r_y) and c ∈ Ker(l_y - r_x) for all x ∈ comm(a), y ∈ comm(d) "
    "implies a, d ∈ R^qnil",
    kind=CaseKind.IMPLICATION,
    inputs=K0_RINGS,
    ref=r'§4, "$b\in$ Ker$(l_x - r_y)$ and $c\in$ Ker$(l_y - r_x)$"',
)
def ks_kernel_condition(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in K0_RINGS:
        ring = ctx.ring(slug)
        satisfied = 0
        for A in qnil_set(ring).members:
            verdict = k0_kernel_condition(ring, A)
            if verdict.holds:
                satisfied += 1
                checks.expect(bool(verdict.consequence_holds), f"{ring.name}: condition holds but a or d is not qnil",
                              ring, A=A)
        checks.observations[slug] = {"qnil": len(qnil_set(ring)), "condition_holds": satisfied}
    return checks.finding()


@case_registry.register(
    "ks.local-characterization",
    "Over a local ring R, A ∈ K_0(R)^qnil iff a, d ∈ R^qnil",
    inputs=K0_RINGS,
    ref='§4, "If $R$ is a local ring, then $A ="',
)
def ks_local_characterization(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in K0_RINGS:
        ring = ctx.ring(slug)
        if not ctx.holds(ring.base, "local"):
            continue
        a, d = outer_blocks(ring)
        base_qnil = qnil_set(ring.base).mask
        expected = base_qnil[a] & base_qnil[d]
        actual = qnil_set(ring).mask
        checks.expect(np.array_equal(actual, expected), f"{ring.name}: qnil differs from the a, d ∈ R^qnil rule",
                      ring, a=_first_mismatch(actual, expected))
    return checks.finding()


@case_registry.register(
    "ks.diagonal-characterization",
    "diag(a, d) ∈ K_0(R)^qnil iff a, d ∈ R^qnil",
    inputs=K0_RINGS,
    ref=r'§4, "Then $A = \begin{bmatrix}a&0\\0&d\end{bmatrix}\in K_0(R)^{qnil}$ if and only if"',
)
def ks_diagonal_characterization(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in K0_RINGS:
        ring = ctx.ring(slug)
        R = ring.base
        q, base_qnil = qnil_set(ring), qnil_set(R)
        for a in range(R.order):
            for d in range(R.order):
                A = ring.from_blocks([a, R.zero, R.zero, d])
                checks.expect((A in q) == (a in base_qnil and d in base_qnil),
                              f"{ring.name}: diagonal rule fails", ring, A=A)
    return checks.finding()


@case_registry.register(
    "ks.k0-descent",
    "If R is local or has no zero divisors and K_0(R) is right qnil-duo, then R is right qnil-duo",
    kind=CaseKind.IMPLICATION,
    inputs=K0_RINGS,
    ref='§4, "$K_0(R)$ being a right qnil-duo ring implies $R$ being a right qnil-duo ring"',
)
def ks_k0_descent(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug in K0_RINGS:
        ring = ctx.ring(slug)
        R = ring.base
        eligible = ctx.holds(R, "local") or no_zero_divisors(R)
        tally.check(slug, eligible and ctx.holds(ring, "right-qnil-duo"), ctx.holds(R, "right-qnil-duo"))
    return tally.finding()
