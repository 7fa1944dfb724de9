"""
Cases on the derived sets: quasinilpotents, radical, units, idempotents, center.
"""
import numpy as np

from src.config.settings import settings
from src.constructions.scalar import ProductRing
from src.core.axioms import verify_axioms
from src.core.derived import (
    center,
    commutant,
    double_commutant,
    idempotents,
    inverse,
    jacobson_radical,
    nilpotents,
    qnil_set,
    units,
)
from src.models.report import CaseKind
from ..case import CATALOG, CaseContext, Checklist, Finding, Implication, SkipCase, case_registry
from .common import corners, mul, product_qnil_mask, qnil_square_witness, subset_of


@case_registry.register(
    "catalog.builds",
    "Every catalog descriptor validates and builds under the order cap",
    ref='derived: build of every catalog descriptor',
)
def catalog_builds(ctx: CaseContext) -> Finding:
    failed = [f"{item.slug}: {ctx.failures[item.slug]}" for item in ctx.catalog if item.slug in ctx.failures]
    if failed:
        raise SkipCase("; ".join(failed), incomplete=True)
    return Finding(holds=True, observations={"rings": len(ctx.catalog)})


@case_registry.register(
    "axioms.catalog-rings",
    "Every catalog ring is an associative unital ring with 1 != 0 (exhaustive scan up to the suite axiom cap)",
    ref='§1, "all rings are associative with identity"',
)
def catalog_axioms(ctx: CaseContext) -> Finding:
    checks = Checklist()
    unchecked = []
    for slug, ring in ctx.catalog_rings():
        report = verify_axioms(ring, cap=settings.suite_axiom_cap)
        if report.status == "unchecked":
            unchecked.append(slug)
            continue
        checks.expect(report.ok, f"{ring.name}: {report.law} fails at {report.triple}")
    checks.observations["unchecked"] = unchecked
    return checks.finding()


@case_registry.register(
    "qnil.zero-one-units",
    "0 is quasinilpotent, 1 is not, and no unit is quasinilpotent",
    ref=r'§2, "does not contain invertible elements, $0\in R^{qnil}$ but the"',
)
def zero_one_units(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        q = qnil_set(ring)
        checks.expect(ring.zero in q, f"{ring.name}: 0 is not quasinilpotent")
        checks.expect(ring.one not in q, f"{ring.name}: 1 is quasinilpotent")
        both = q.mask & units(ring).mask
        checks.expect(not both.any(), f"{ring.name}: a quasinilpotent unit exists", ring,
                      element=int(np.argmax(both)))
    return checks.finding()


@case_registry.register(
    "qnil.radicals-inside",
    "J(R) and N(R) are contained in R^qnil",
    ref=r'§2, "$J(R)\subseteq R^{qnil}$, $N(R)\subseteq R^{qnil}$"',
)
def radicals_inside(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        q = qnil_set(ring)
        for name, subset in (("J(R)", jacobson_radical(ring)), ("N(R)", nilpotents(ring))):
            outside = subset_of(subset, q)
            checks.expect(outside is None, f"{ring.name}: {name} element outside R^qnil", ring,
                          element=outside or 0)
    return checks.finding()


@case_registry.register(
    "qnil.jacobson-ideal",
    "J(R), computed from 1 + ax invertible for all x, is a two-sided ideal",
    ref=r'§2, "Note that $J(R) = \{a\in R\mid 1"',
)
def jacobson_ideal(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        radical = jacobson_radical(ring)
        mask = radical.mask
        for j in radical.indexes:
            j = int(j)
            sums = np.asarray(ring._add(j, radical.indexes), dtype=np.int64)
            ok = (checks.expect(mask[sums].all(), f"{ring.name}: J(R) not closed under addition", ring, j=j)
                  and checks.expect(mask[ring.mul_row(j)].all(), f"{ring.name}: jR leaves J(R)", ring, j=j)
                  and checks.expect(mask[ring.mul_col(j)].all(), f"{ring.name}: Rj leaves J(R)", ring, j=j))
            if not ok:
                break
    return checks.finding()


@case_registry.register(
    "qnil.power-closure",
    "For every a and k >= 1: a^k ∈ R^qnil iff a ∈ R^qnil",
    ref=r'§2, "If $a^n\in R^{qnil}$, then $a\in R^{qnil}$"',
)
def power_closure(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        mask = qnil_set(ring).mask
        power = ring.elements
        # the powers of any element repeat within ring.order steps
        for k in range(1, ring.order + 1):
            if k > 1:
                power = mul(ring, power, ring.elements)
            bad = mask[power] != mask
            if bad.any():
                a = int(np.argmax(bad))
                checks.expect(False, f"{ring.name}: a^{k} and a disagree on membership in R^qnil", ring, a=a)
                break
    return checks.finding()


@case_registry.register(
    "qnil.swap",
    "ab ∈ R^qnil iff ba ∈ R^qnil",
    ref=r'§2, "Then $ab\in R^{qnil}$ if and only if $ba\in R^{qnil}$"',
)
def swap(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        mask = qnil_set(ring).mask
        for a in range(ring.order):
            bad = mask[ring.mul_row(a)] != mask[ring.mul_col(a)]
            if bad.any():
                checks.expect(False, f"{ring.name}: ab and ba disagree on membership in R^qnil", ring,
                              a=a, b=int(np.argmax(bad)))
                break
    return checks.finding()


@case_registry.register(
    "qnil.conjugation",
    "a ∈ R^qnil and r ∈ U(R) imply r^-1·a·r ∈ R^qnil",
    ref=r'§2, "Then $r^{-1}ar\in R^{qnil}$"',
)
def conjugation(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        q = qnil_set(ring)
        for r in units(ring).indexes:
            r = int(r)
            conjugates = mul(ring, mul(ring, inverse(ring, r), q.indexes), r)
            bad = ~q.mask[conjugates]
            if bad.any():
                checks.expect(False, f"{ring.name}: conjugate leaves R^qnil", ring,
                              a=int(q.indexes[np.argmax(bad)]), r=r)
                break
    return checks.finding()


@case_registry.register(
    "qnil.local-partition",
    "A local ring is the disjoint union of U(R) and R^qnil",
    kind=CaseKind.IMPLICATION,
    ref=r'§2, "If $R$ is a local ring, then $U(R)\cap"',
)
def local_partition(ctx: CaseContext) -> Finding:
    tally = Implication()
    for slug, ring in ctx.catalog_rings():
        unit, q = units(ring).mask, qnil_set(ring).mask
        tally.check(slug, ctx.holds(ring, "local"), bool((unit ^ q).all()))
    return tally.finding()


@case_registry.register(
    "qnil.idempotent-defect",
    "ex - exe and xe - exe lie in R^qnil for every x and every idempotent e",
    ref=r'§3, "$ex - exe$ and $xe - exe\in R^{qnil}$"',
)
def idempotent_defect(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for _, ring in ctx.catalog_rings():
        mask = qnil_set(ring).mask
        for e in idempotents(ring).indexes:
            e = int(e)
            ex, xe = ring.mul_row(e), ring.mul_col(e)
            exe = mul(ring, ex, e)
            left = np.asarray(ring._sub(ex, exe), dtype=np.int64)
            right = np.asarray(ring._sub(xe, exe), dtype=np.int64)
            bad = ~(mask[left] & mask[right])
            if bad.any():
                checks.expect(False, f"{ring.name}: idempotent defect outside R^qnil", ring,
                              e=e, x=int(np.argmax(bad)))
                break
    return checks.finding()


@case_registry.register(
    "qnil.corner-equality",
    "(eRe)^qnil = eRe ∩ R^qnil for every idempotent e",
    ref='§2, "Then $(eRe)^{qnil} ="',
)
def corner_equality(ctx: CaseContext) -> Finding:
    checks = Checklist()
    corner_count = 0
    for _, ring in ctx.catalog_rings():
        base_mask = qnil_set(ring).mask
        for e, corner in corners(ring):
            corner_count += 1
            bad = qnil_set(corner).mask != base_mask[corner.members]
            if bad.any():
                checks.expect(False, f"{ring.name}: (eRe)^qnil differs from eRe ∩ R^qnil", ring,
                              e=e, element=int(corner.members[np.argmax(bad)]))
                break
    checks.observations["corners"] = corner_count
    return checks.finding()


@case_registry.register(
    "qnil.product-rule",
    "The quasinilpotents of a finite product are the products of the factors' quasinilpotents",
    ref=r'§2, "Then $R^{qnil} = \prod_{i\in"',
)
def product_rule(ctx: CaseContext) -> Finding:
    checks = Checklist()
    products = []
    for slug, ring in ctx.catalog_rings():
        if not isinstance(ring, ProductRing):
            continue
        products.append(slug)
        bad = qnil_set(ring).mask != product_qnil_mask(ring)
        checks.expect(not bad.any(), f"{ring.name}: product rule fails", ring, element=int(np.argmax(bad)))
    checks.observations["products"] = products
    return checks.finding()


@case_registry.register(
    "qnil.equals-nilpotents",
    "Whether R^qnil coincides with N(R) on each catalog ring",
    kind=CaseKind.OBSERVATION,
    ref='derived: R^qnil against N(R) on every catalog ring',
)
def equals_nilpotents(ctx: CaseContext) -> Finding:
    differing = [slug for slug, ring in ctx.catalog_rings() if qnil_set(ring) != nilpotents(ring)]
    return Finding(holds=not differing, observations={"differing": differing})


@case_registry.register(
    "qnil.square-zero",
    "Whether (R^qnil)² = 0 on each catalog ring",
    kind=CaseKind.OBSERVATION,
    ref='§3, "So $(R^{qnil})^2 = 0$"',
)
def square_zero(ctx: CaseContext) -> Finding:
    square_zero = [slug for slug, ring in ctx.catalog_rings() if qnil_square_witness(ring) is None]
    return Finding(holds=True, observations={"square_zero": square_zero})


@case_registry.register(
    "derived.z4",
    "Z_4: U = {1,3} with 3^-1 = 3, J = N = R^qnil = {0,2}, Id = {0,1}, C = Z_4",
    inputs=("z4",),
    ref='derived: exhaustive computation on Z_4',
)
def z4_sets(ctx: CaseContext) -> Finding:
    ring = ctx.ring("z4")
    checks = Checklist()
    checks.expect(units(ring).members == (1, 3), "units of Z_4 are not {1,3}")
    checks.expect(inverse(ring, 3) == 3, "3 is not its own inverse")
    for name, subset in (("J", jacobson_radical(ring)), ("N", nilpotents(ring)), ("qnil", qnil_set(ring))):
        checks.expect(subset.members == (0, 2), f"{name}(Z_4) is not {{0,2}}")
    checks.expect(idempotents(ring).members == (0, 1), "Id(Z_4) is not {0,1}")
    checks.expect(len(center(ring)) == 4, "Z_4 is not its own center")
    return checks.finding()


@case_registry.register(
    "derived.fields",
    "Fields have no nonzero quasinilpotents",
    inputs=("z2", "z3", "z5", "z7"),
    ref=r'§3, "If $R$ is a division ring, then $R^{qnil}=\{0\}$"',
)
def fields(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in ("z2", "z3", "z5", "z7"):
        ring = ctx.ring(slug)
        checks.expect(qnil_set(ring).members == (ring.zero,), f"{ring.name}: R^qnil != {{0}}")
    return checks.finding()


@case_registry.register(
    "derived.m2-z2",
    "M_2(Z_2): comm(E11) = comm²(E11) = diagonal matrices, R^qnil = N(R) has 4 elements, "
    "J = 0 with E12 ∈ R^qnil \\ J, |Id| = 8, C = {0, I}",
    inputs=("m2-z2",),
    ref='§2, "the matrix unit $E_{1n}$ belongs to $R^{qnil}$ but not $J(R)$"',
)
def m2_z2_sets(ctx: CaseContext) -> Finding:
    ring = ctx.ring("m2-z2")
    checks = Checklist()
    e11 = ring.element([1, 0, 0, 0])
    e12 = ring.element([0, 1, 0, 0])
    diagonal = tuple(i for i in range(ring.order) if ring.params(i)[1:3] == (0, 0))
    checks.expect(commutant(ring, e11).members == diagonal, "comm(E11) is not the diagonal matrices")
    checks.expect(double_commutant(ring, e11).members == diagonal, "comm²(E11) is not the diagonal matrices")
    q = qnil_set(ring)
    checks.expect(len(q) == 4 and q == nilpotents(ring), "R^qnil is not the 4 nilpotent matrices")
    checks.expect(jacobson_radical(ring).members == (ring.zero,), "J(M_2(Z_2)) != 0")
    checks.expect(e12 in q and e12 not in jacobson_radical(ring), "E12 is not in R^qnil \\ J", ring, e12=e12)
    checks.expect(len(idempotents(ring)) == 8, "M_2(Z_2) does not have 8 idempotents")
    checks.expect(center(ring).members == tuple(sorted((ring.zero, ring.one))), "C(M_2(Z_2)) != {0, I}")
    return checks.finding()


LOCAL16_QNIL = {"0", "2", "x", "y", "2+x", "2+y", "x+y", "2+x+y"}


@case_registry.register(
    "derived.local16",
    "Local16: U = {a+bx+cy : a odd}, R^qnil = J(R) = {0,2,x,y,2+x,2+y,x+y,2+x+y}, "
    "the ring is local, xy = 2 and (R^qnil)² != 0",
    inputs=("local16",),
    ref='§3, "$R$ is a local ring. It is easily checked that $R^{qnil} ="',
)
def local16_sets(ctx: CaseContext) -> Finding:
    ring = ctx.ring("local16")
    checks = Checklist()
    odd = tuple(i for i in range(ring.order) if ring.coords(i)[0] % 2 == 1)
    checks.expect(units(ring).members == odd, "units are not the elements with odd constant term")
    q = qnil_set(ring)
    checks.expect(set(ring.labels(q)) == LOCAL16_QNIL, f"R^qnil = {ring.labels(q)}")
    checks.expect(jacobson_radical(ring) == q, "J(R) != R^qnil")
    checks.expect(ctx.holds(ring, "local"), "Local16 is not local")
    two = ring.element([2, 0, 0])
    checks.expect(ring.mul(ring.x, ring.y) == two, "xy != 2", ring, x=ring.x, y=ring.y)
    checks.expect(qnil_square_witness(ring) is not None, "(R^qnil)² = 0")
    return checks.finding()


@case_registry.register(
    "derived.k0-z2",
    "K_0(Z_2): C = the two scalar matrices, |U| = 4 and [[1,1],[1,1]]² = I",
    inputs=("k0-z2",),
    ref=r'§4, "\begin{bmatrix}a&0\\0&a\end{bmatrix}\in K_0(R)\mid a\in C(R)"',
)
def k0_z2_sets(ctx: CaseContext) -> Finding:
    ring = ctx.ring("k0-z2")
    checks = Checklist()
    scalars = tuple(sorted(ring.from_blocks([a, 0, 0, a]) for a in range(2)))
    checks.expect(center(ring).members == scalars, "C(K_0(Z_2)) is not the scalar matrices")
    checks.expect(len(units(ring)) == 4, "|U(K_0(Z_2))| != 4")
    ones = ring.from_blocks([1, 1, 1, 1])
    checks.expect(ring.mul(ones, ones) == ring.one, "[[1,1],[1,1]]² != I", ring, A=ones)
    return checks.finding()
