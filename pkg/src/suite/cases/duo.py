"""
Cases on qnil-duo rings and the rest of the duo family.
"""
from typing import Dict, List

import numpy as np

from src.checkers import PROPERTY_CHECKERS, recheck_witness
from src.constructions.scalar import ProductRing, TruncatedSequenceRing
from src.core.derived import qnil_set
from src.models.report import CaseKind
from ..case import CaseContext, Checklist, Finding, Implication, case_registry
from .common import (
    EXTRA_PRODUCTS,
    EXTRA_TRUNCATIONS,
    corner_ring,
    corners,
    image_mask,
    proper_idempotents,
    qnil_square_witness,
)
from .constructions import DORROH_RINGS, SERIES_RINGS

PROFILE = (
    "right-duo", "left-duo",
    "right-qnil-duo", "left-qnil-duo",
    "right-unit-duo", "left-unit-duo",
    "right-nilpotent-duo", "left-nilpotent-duo",
    "right-normal-on-jacobson", "left-normal-on-jacobson",
    "abelian", "local",
)


@case_registry.register(
    "duo.definition",
    "The normality checker agrees with R^qnil·a ⊆ a·R^qnil (and its mirror) computed as plain sets",
    ref=r'§3, "if $R^{qnil}a\subseteq aR^{qnil}$ for every $a\in R$"',
)
def definition(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        if ring.order > 64:
            continue
        members = qnil_set(ring).members
        right = left = True
        for a in range(ring.order):
            q_a = {ring.mul(b, a) for b in members}
            a_q = {ring.mul(a, b) for b in members}
            right = right and q_a <= a_q
            left = left and a_q <= q_a
        checks.expect(right == ctx.holds(ring, "right-qnil-duo"), f"{ring.name}: right qnil-duo verdict disagrees")
        checks.expect(left == ctx.holds(ring, "left-qnil-duo"), f"{ring.name}: left qnil-duo verdict disagrees")
    return checks.finding()


@case_registry.register(
    "duo.two-sided",
    "R is qnil-duo iff R^qnil·a = a·R^qnil for every a",
    ref='§3, "If $R$ is both right and left"',
)
def two_sided(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        members = qnil_set(ring).indexes
        equal = all(
            np.array_equal(image_mask(ring, ring.mul_col(a)[members]), image_mask(ring, ring.mul_row(a)[members]))
            for a in range(ring.order)
        )
        checks.expect(equal == ctx.holds(ring, "qnil-duo"), f"{ring.name}: two-sided characterization fails")
    return checks.finding()


@case_registry.register(
    "duo.central-qnil",
    "If R^qnil is central then R is right and left qnil-duo",
    kind=CaseKind.IMPLICATION,
    ref='§3, "Let $R$ be a ring with $R^{qnil}$ central in $R$"',
)
def central_qnil(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        tally.check(slug, ctx.holds(ring, "qnil-central"),
                    ctx.holds(ring, "right-qnil-duo") and ctx.holds(ring, "left-qnil-duo"))
    return tally.finding()


@case_registry.register(
    "duo.commutative",
    "Commutative rings are qnil-duo",
    kind=CaseKind.IMPLICATION,
    ref='§3, "All commutative rings, all division rings are qnil-duo"',
)
def commutative(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        tally.check(slug, ring.is_commutative(), ctx.holds(ring, "qnil-duo"))
    return tally.finding()


def _product_rings(ctx: CaseContext) -> List[ProductRing]:
    rings = [ring for _, ring in ctx.catalog_rings()
             if isinstance(ring, ProductRing) and not isinstance(ring, TruncatedSequenceRing)]
    return rings + [ctx.build(descriptor) for descriptor in EXTRA_PRODUCTS]


@case_registry.register(
    "duo.products",
    "A finite product is right (left) qnil-duo iff every factor is",
    ref=r'§3, "Then $R_i$ is right (resp., left) qnil-duo for each $i\in I$ if and only if"',
)
def products(ctx: CaseContext) -> Finding:
    checks = Checklist()
    seen: Dict[str, Dict[str, bool]] = {}
    for ring in _product_rings(ctx):
        for side in ("right-qnil-duo", "left-qnil-duo"):
            whole = ctx.holds(ring, side)
            factors = all(ctx.holds(factor, side) for factor in ring.factors)
            seen.setdefault(ring.name, {})[side] = whole
            checks.expect(whole == factors, f"{ring.name}: {side} of the product and of the factors disagree")
    checks.observations["products"] = seen
    return checks.finding()


@case_registry.register(
    "duo.abelian",
    "Right or left qnil-duo rings are abelian",
    kind=CaseKind.IMPLICATION,
    ref='§3, "Right (resp., left) qnil-duo rings are abelian"',
)
def abelian(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        for side in ("right-qnil-duo", "left-qnil-duo"):
            verdict = ctx.verdict(ring, "abelian")
            tally.check(f"{slug} ({side})", ctx.holds(ring, side), verdict.holds, witness=verdict.witness)
    return tally.finding()


@case_registry.register(
    "duo.corner",
    "If R is right qnil-duo then so is eRe for every idempotent e",
    kind=CaseKind.IMPLICATION,
    ref='§3, "Then the corner ring $eRe$ is a right (resp., left) qnil-duo ring"',
)
def corner(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        hypothesis = ctx.holds(ring, "right-qnil-duo")
        for e, sub in corners(ring):
            tally.check(f"{slug} e={ring.label(e)}", hypothesis, ctx.holds(sub, "right-qnil-duo"))
    return tally.finding()


@case_registry.register(
    "duo.central-idempotent-split",
    "For a central idempotent e, R is right qnil-duo iff eRe and (1-e)R(1-e) are",
    ref='§3, "The converse holds if $e$ is central"',
)
def central_idempotent_split(ctx: CaseContext) -> Finding:
    checks = Checklist()
    instances = 0
    rings = [ring for _, ring in ctx.catalog_rings()] + [ctx.build(d) for d in EXTRA_PRODUCTS]
    for ring in rings:
        whole = ctx.holds(ring, "right-qnil-duo")
        for e in proper_idempotents(ring, central_only=True):
            instances += 1
            parts = (ctx.holds(corner_ring(ring, e), "right-qnil-duo")
                     and ctx.holds(corner_ring(ring, ring.sub(ring.one, e)), "right-qnil-duo"))
            checks.expect(whole == parts, f"{ring.name}: split at a central idempotent disagrees", ring, e=e)
    checks.observations["instances"] = instances
    return checks.finding()


@case_registry.register(
    "duo.directly-finite",
    "Right qnil-duo rings are directly finite",
    kind=CaseKind.IMPLICATION,
    ref='§3, "Every right (resp., left) qnil-duo ring is directly finite"',
)
def directly_finite(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        tally.check(slug, ctx.holds(ring, "right-qnil-duo"), ctx.holds(ring, "directly-finite"))
    finding = tally.finding()
    finding.observations["all_directly_finite"] = all(
        ctx.holds(ring, "directly-finite") for _, ring in ctx.catalog_rings())
    return finding


NEGATIVE_MATRIX_RINGS = ("m2-z2", "m2-z4", "u2-z2", "u2-z4")
POSITIVE_TOEPLITZ_RINGS = ("d2-z4", "v3-z2", "v3-z4")


@case_registry.register(
    "duo.matrix-negative",
    "M_n(R) and U_n(R) are neither right nor left qnil-duo",
    inputs=NEGATIVE_MATRIX_RINGS,
    ref='§3, "$M_n(R)$ and $U_n(R)$ are neither right nor left qnil-duo"',
)
def matrix_negative(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in NEGATIVE_MATRIX_RINGS:
        ring = ctx.ring(slug)
        for side in ("right-qnil-duo", "left-qnil-duo"):
            checks.expect(not ctx.holds(ring, side), f"{ring.name} is {side}")
    return checks.finding()


@case_registry.register(
    "duo.toeplitz-positive",
    "V_n(R) over a commutative ring is qnil-duo",
    inputs=POSITIVE_TOEPLITZ_RINGS,
    ref='§3, "If $R$ is commutative, then $V_n(R)$ is qnil-duo"',
)
def toeplitz_positive(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in POSITIVE_TOEPLITZ_RINGS:
        ring = ctx.ring(slug)
        checks.expect(ctx.holds(ring, "qnil-duo"), f"{ring.name} is not qnil-duo")
    return checks.finding()


@case_registry.register(
    "duo.local-square-zero",
    "A local ring with (R^qnil)² = 0 is right and left qnil-duo",
    kind=CaseKind.IMPLICATION,
    ref='§3, "Let $R$ be a local ring with $(R^{qnil})^2 = 0$"',
)
def local_square_zero(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        hypothesis = ctx.holds(ring, "local") and qnil_square_witness(ring) is None
        tally.check(slug, hypothesis, ctx.holds(ring, "qnil-duo"))
    return tally.finding()


@case_registry.register(
    "duo.local16-right-qnil-duo",
    "Local16 is right qnil-duo",
    inputs=("local16",),
    expected=False,
    ref='§3, "There are local rings that are not right qnil-duo"',
)
def local16_right_qnil_duo(ctx: CaseContext) -> Finding:
    ring = ctx.ring("local16")
    verdict = ctx.verdict(ring, "right-qnil-duo")
    return Finding.from_verdict(verdict, left_qnil_duo=ctx.holds(ring, "left-qnil-duo"))


@case_registry.register(
    "duo.local16-witness",
    "In Local16, x ∈ R^qnil and x·y = 2 but no t ∈ R^qnil has y·t = 2",
    inputs=("local16",),
    ref=r'§3, "there is no $t\in R^{qnil}$ such that $xy = yt\in yR^{qnil}$"',
)
def local16_witness(ctx: CaseContext) -> Finding:
    ring = ctx.ring("local16")
    checks = Checklist()
    two = ring.element([2, 0, 0])
    q = qnil_set(ring)
    checks.expect(ring.x in q, "x is not quasinilpotent")
    checks.expect(ring.mul(ring.x, ring.y) == two, "xy != 2")
    checks.expect(not (ring.mul_row(ring.y)[q.indexes] == two).any(), "some t ∈ R^qnil has yt = 2")
    verdict = ctx.verdict(ring, "right-qnil-duo")
    if checks.expect(not verdict.holds, "Local16 is right qnil-duo"):
        checks.expect(verdict.witness_index("a") == ring.y and verdict.witness_index("b") == ring.x,
                      "the first violation is not (a, b) = (y, x)")
        checks.expect(recheck_witness(ring, verdict), "the witness does not re-verify")
    return checks.finding()


@case_registry.register(
    "duo.d3-pattern",
    "The D_3-pattern ring over Z_4 has 64 elements, 32 quasinilpotents (a ∈ 2Z_4) and is qnil-duo",
    inputs=("d3pattern-z4",),
    ref=r'§3, "\begin{bmatrix}a&b&c\\0&a&0\\0&0&a\end{bmatrix}\in D_3(\Bbb Z_4)\right\}$"',
)
def d3_pattern(ctx: CaseContext) -> Finding:
    ring = ctx.ring("d3pattern-z4")
    checks = Checklist()
    q = qnil_set(ring)
    even = tuple(i for i in range(ring.order) if ring.params(i)[0] % 2 == 0)
    checks.expect(ring.order == 64, "order is not 64")
    checks.expect(q.members == even and len(q) == 32, "R^qnil is not the 32 elements with a ∈ 2Z_4")
    checks.expect(ctx.holds(ring, "right-qnil-duo") and ctx.holds(ring, "left-qnil-duo"), "not qnil-duo")
    checks.expect(ctx.holds(ring, "qnil-central"), "R^qnil is not central")
    return checks.finding()


@case_registry.register(
    "duo.d3-pattern-square",
    "Whether (R^qnil)² = 0 in the D_3-pattern ring over Z_4",
    kind=CaseKind.OBSERVATION,
    inputs=("d3pattern-z4",),
    ref='§3, "So $(R^{qnil})^2 = 0$"',
)
def d3_pattern_square(ctx: CaseContext) -> Finding:
    ring = ctx.ring("d3pattern-z4")
    pair = qnil_square_witness(ring)
    if pair is None:
        return Finding(holds=True, observations={"square_zero": True})
    a, b = pair
    return Finding(holds=False, detail=f"{ring.label(a)}·{ring.label(b)} = {ring.label(ring.mul(a, b))}",
                   observations={"square_zero": False})


@case_registry.register(
    "duo.d2-domain",
    "D_2(R) right qnil-duo over a domain R implies R right qnil-duo",
    skip_reason="finite domains are fields, so the hypothesis only meets rings whose conclusion is trivial",
    ref='§3, "Let $R$ be a domain. If $D_2(R)$ is right (resp., left) qnil-duo"',
)
def d2_domain(ctx: CaseContext) -> Finding:
    return Finding(holds=True)


@case_registry.register(
    "duo.exchange-stable-range",
    "A right qnil-duo exchange ring has stable range 1",
    kind=CaseKind.IMPLICATION,
    ref='§3, "qnil-duo exchange rings have stable range 1"',
)
def exchange_stable_range(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        hypothesis = ctx.holds(ring, "right-qnil-duo") and ctx.holds(ring, "exchange")
        tally.check(slug, hypothesis, ctx.holds(ring, "stable-range-one"))
    return tally.finding()


@case_registry.register(
    "duo.regular-strongly-regular",
    "A right qnil-duo regular ring is strongly regular",
    kind=CaseKind.IMPLICATION,
    ref='§3, "qnil-duo regular rings (in the sense of von Neumann) are strongly regular"',
)
def regular_strongly_regular(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        hypothesis = ctx.holds(ring, "right-qnil-duo") and ctx.holds(ring, "regular")
        tally.check(slug, hypothesis, ctx.holds(ring, "strongly-regular"))
    return tally.finding()


@case_registry.register(
    "duo.stable-range-constant",
    "Every catalog ring has stable range 1",
    ref='derived: stable range of every catalog ring',
)
def stable_range_constant(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        verdict = ctx.verdict(ring, "stable-range-one")
        if not verdict.holds and checks.failure is None:
            checks.failure = Finding.from_verdict(verdict)
    return checks.finding()


@case_registry.register(
    "duo.abelian-exchange-clean",
    "An abelian ring is exchange iff it is clean",
    kind=CaseKind.IMPLICATION,
    ref='§3, "exchange if and only if it is clean"',
)
def abelian_exchange_clean(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        tally.check(slug, ctx.holds(ring, "abelian"), ctx.holds(ring, "exchange") == ctx.holds(ring, "clean"))
    return tally.finding()


@case_registry.register(
    "duo.dorroh-descent",
    "If I(R,S) is right qnil-duo then R is right qnil-duo",
    kind=CaseKind.IMPLICATION,
    inputs=DORROH_RINGS,
    ref='§3, "If $I(R, S)$ is right qnil-duo, then so is $R$"',
)
def dorroh_descent(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug in DORROH_RINGS:
        ring = ctx.ring(slug)
        tally.check(slug, ctx.holds(ring, "right-qnil-duo"), ctx.holds(ring.algebra, "right-qnil-duo"))
    return tally.finding()


@case_registry.register(
    "duo.ttrunc-both-directions",
    "T[R,S] (at finite truncation) is right qnil-duo iff R and S are",
    inputs=("t2-z4-z4",),
    ref='§3, "If $T[R, S]$ is right qnil-duo, then so are $R$ and $S$"',
)
def ttrunc_both_directions(ctx: CaseContext) -> Finding:
    checks = Checklist()
    rings = [ctx.ring("t2-z4-z4")] + [ctx.build(d) for d in EXTRA_TRUNCATIONS]
    for ring in rings:
        whole = ctx.holds(ring, "right-qnil-duo")
        parts = ctx.holds(ring.prefix_ring, "right-qnil-duo") and ctx.holds(ring.tail_ring, "right-qnil-duo")
        checks.observations[ring.name] = whole
        checks.expect(whole == parts, f"{ring.name}: T and (R, S) disagree")
    return checks.finding()


@case_registry.register(
    "duo.series-descent",
    "If a truncated Hurwitz or skew power series ring is right qnil-duo then so is its base",
    kind=CaseKind.IMPLICATION,
    inputs=SERIES_RINGS,
    ref=r'§3, "If $H(R; \alpha)$ is right qnil-duo, then $R$ is right"',
)
def series_descent(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug in SERIES_RINGS:
        ring = ctx.ring(slug)
        tally.check(slug, ctx.holds(ring, "right-qnil-duo"), ctx.holds(ring.base, "right-qnil-duo"))
    return tally.finding()


@case_registry.register(
    "duo.witness-soundness",
    "Every negative verdict on a catalog ring carries a witness that re-verifies from the definitions",
    ref='derived: re-verification of every negative verdict',
)
def witness_soundness(ctx: CaseContext) -> Finding:
    checks = Checklist()
    negatives = 0
    for _, ring in ctx.catalog_rings():
        for predicate in PROPERTY_CHECKERS:
            verdict = ctx.verdict(ring, predicate)
            if verdict.holds:
                continue
            negatives += 1
            if not recheck_witness(ring, verdict) and checks.failure is None:
                checks.failure = Finding(holds=False, detail=f"{ring.name}: {predicate} witness does not re-verify",
                                         witness=verdict.witness)
    checks.observations["negative_verdicts"] = negatives
    return checks.finding()


@case_registry.register(
    "duo.one-sidedness",
    "Catalog rings on which right and left qnil-duo differ",
    kind=CaseKind.OBSERVATION,
    ref='derived: survey of the catalog',
)
def one_sidedness(ctx: CaseContext) -> Finding:
    differing = {
        slug: {"right": ctx.holds(ring, "right-qnil-duo"), "left": ctx.holds(ring, "left-qnil-duo")}
        for slug, ring in ctx.catalog_rings()
        if ctx.holds(ring, "right-qnil-duo") != ctx.holds(ring, "left-qnil-duo")
    }
    return Finding(holds=True, observations={"one_sided": differing})


@case_registry.register(
    "duo.profile",
    "Duo-family profile of every catalog ring",
    kind=CaseKind.OBSERVATION,
    ref='derived: survey of the catalog',
)
def profile(ctx: CaseContext) -> Finding:
    table = {slug: {name: ctx.holds(ring, name) for name in PROFILE} for slug, ring in ctx.catalog_rings()}
    return Finding(holds=True, observations={"profile": table})
