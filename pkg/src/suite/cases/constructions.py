"""
Cases on the constructions: products, matrix shapes, Dorroh extensions,
truncated series and truncated sequence rings.
"""
import numpy as np

from src.constructions.manager import zn
from src.constructions.table import table_descriptor
from src.core.derived import DERIVED_SETS, commutant, double_commutant, idempotents, qnil_set, units
from src.models.descriptor import RingDescriptor, RingKind
from src.models.report import CaseKind
from ..case import CaseContext, Checklist, Finding, Implication, case_registry
from .common import coordinate_mask, product_qnil_mask, same_arithmetic

EXPECTED_ORDERS = {
    "z4": 4,
    "z2xz3": 6,
    "z4xz4": 16,
    "m2-z2": 16,
    "d2-z4": 16,
    "v3-z2": 8,
    "l11-z4": 1024,
    "l01-z4": 256,
    "l00-z4": 64,
    "h11-z4": 64,
    "k0-z2": 16,
    "dorroh-m2z2-z2": 32,
    "hurwitz-z2-2": 8,
    "t2-z4-z4": 64,
    "local16": 16,
    "d3pattern-z4": 64,
    "corner-m2z2-e11": 2,
}

DORROH_RINGS = ("dorroh-m2z2-z2", "dorroh-z4-z4")
SERIES_RINGS = ("hurwitz-z2-2", "hurwitz-z4-2", "skew-z2xz2-swap-2")


@case_registry.register(
    "build.orders",
    "Constructions realize the expected number of elements",
    inputs=tuple(EXPECTED_ORDERS),
    ref='derived: realized order of every catalog construction',
)
def build_orders(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug, order in EXPECTED_ORDERS.items():
        ring = ctx.ring(slug)
        checks.expect(ring.order == order, f"{ring.name} has {ring.order} elements, expected {order}")
    return checks.finding()


@case_registry.register(
    "products.z2xz3-like-z6",
    "Z_2 × Z_3 has the unit and idempotent counts of Z_6",
    inputs=("z2xz3",),
    ref='derived: exhaustive comparison of Z_2 × Z_3 with Z_6',
)
def z2xz3_like_z6(ctx: CaseContext) -> Finding:
    product, z6 = ctx.ring("z2xz3"), ctx.build(zn(6))
    checks = Checklist()
    checks.expect(len(units(product)) == len(units(z6)) == 2, "unit counts differ")
    checks.expect(len(idempotents(product)) == len(idempotents(z6)) == 4, "idempotent counts differ")
    return checks.finding()


@case_registry.register(
    "products.one-factor",
    "A one-factor product has the arithmetic of its factor",
    inputs=("z4",),
    ref='derived: a one-factor product against its factor',
)
def one_factor(ctx: CaseContext) -> Finding:
    single = ctx.build(RingDescriptor(kind=RingKind.PRODUCT, factors=[zn(4)]))
    return Finding(holds=same_arithmetic(single, ctx.ring("z4")))


@case_registry.register(
    "products.z4xz4-qnil",
    "qnil(Z_4 × Z_4) = qnil(Z_4) × qnil(Z_4), 4 elements",
    inputs=("z4xz4",),
    ref=r'§2, "Then $R^{qnil} = \prod_{i\in"',
)
def z4xz4_qnil(ctx: CaseContext) -> Finding:
    ring = ctx.ring("z4xz4")
    q = qnil_set(ring)
    return Finding(holds=len(q) == 4 and bool((q.mask == product_qnil_mask(ring)).all()),
                   observations={"qnil": ring.labels(q)})


@case_registry.register(
    "matrix.triangular-qnil-diagonal",
    "Upper triangular matrices over R with quasinilpotent diagonal are quasinilpotent in U_2(R) and D_2(R)",
    inputs=("u2-z2", "u2-z4", "d2-z4"),
    ref=r'§2, "\subseteq U_2(R)^{qnil}$"',
)
def triangular_qnil_diagonal(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in ("u2-z2", "u2-z4", "d2-z4"):
        ring = ctx.ring(slug)
        base_q = qnil_set(ring.base)
        q = qnil_set(ring)
        for index in range(ring.order):
            if all(d in base_q for d in ring.diagonal(index)):
                if not checks.expect(index in q, f"{ring.name}: qnil diagonal but not quasinilpotent",
                                     ring, A=index):
                    break
    return checks.finding()


@case_registry.register(
    "matrix.d2-extraction",
    "In D_2(R): [[a,b],[0,a]] ∈ qnil and b ∈ comm²(a) imply a ∈ R^qnil",
    kind=CaseKind.IMPLICATION,
    inputs=("d2-z4",),
    ref=r'§2, "with $b\in $ comm$^2(a)$. Then $a\in R^{qnil}$"',
)
def d2_extraction(ctx: CaseContext) -> Finding:
    ring = ctx.ring("d2-z4")
    base = ring.base
    q, base_q = qnil_set(ring), qnil_set(base)
    tally = Implication()
    for index in range(ring.order):
        a, b = ring.params(index)
        hypothesis = index in q and b in double_commutant(base, a)
        tally.check(ring.label(index), hypothesis, a in base_q)
    return tally.finding()


@case_registry.register(
    "matrix.v3-z2",
    "V_3(Z_2) has 8 elements, is commutative and is qnil-duo",
    inputs=("v3-z2",),
    ref='§3, "If $R$ is commutative, then $V_n(R)$ is qnil-duo"',
)
def v3_z2(ctx: CaseContext) -> Finding:
    ring = ctx.ring("v3-z2")
    checks = Checklist()
    checks.expect(ring.order == 8, "V_3(Z_2) does not have 8 elements")
    checks.expect(ring.is_commutative(), "V_3(Z_2) is not commutative")
    checks.expect(ctx.holds(ring, "qnil-duo"), "V_3(Z_2) is not qnil-duo")
    return checks.finding()


def _dorroh_columns(ring):
    a_coords, b_coords = ring.radix.decode(ring.elements)
    return np.asarray(a_coords, dtype=np.int64), np.asarray(b_coords, dtype=np.int64)


@case_registry.register(
    "dorroh.commutant",
    "(c,d) commutes with (a,b) in I(R,S) iff c commutes with a in R",
    inputs=DORROH_RINGS,
    ref=r'§2, "$(c, d)\in $ comm$(a, b)$ if and only if $c\in $ comm$(a)$"',
)
def dorroh_commutant(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in DORROH_RINGS:
        ring = ctx.ring(slug)
        a_coords, _ = _dorroh_columns(ring)
        for x in range(ring.order):
            a, _ = ring.split(x)
            lhs = ring.mul_row(x) == ring.mul_col(x)
            rhs = commutant(ring.algebra, a).mask[a_coords]
            bad = lhs != rhs
            if bad.any():
                checks.expect(False, f"{ring.name}: commutant lemma fails", ring, x=x, y=int(np.argmax(bad)))
                break
    return checks.finding()


@case_registry.register(
    "dorroh.inverse",
    "(a,b) is invertible in I(R,S) iff some (c,d) has (a+b)(c+d) = 1 = (c+d)(a+b) and bd = db = 1",
    inputs=DORROH_RINGS,
    ref='§2, "has an inverse $(c, d)$ in $I(R, S)$ if and only if"',
)
def dorroh_inverse(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in DORROH_RINGS:
        ring = ctx.ring(slug)
        R = ring.algebra
        _, d_coords = _dorroh_columns(ring)
        folds = np.asarray(ring.fold(ring.elements), dtype=np.int64)
        unit = units(ring).mask
        for x in range(ring.order):
            _, b = ring.split(x)
            fx = int(folds[x])
            partner = ((np.asarray(R._mul(fx, folds)) == R.one)
                       & (np.asarray(R._mul(folds, fx)) == R.one)
                       & ((b * d_coords) % ring.n == 1))
            if not checks.expect(bool(partner.any()) == bool(unit[x]),
                                 f"{ring.name}: inverse criterion disagrees with U(I(R,S))", ring, x=x):
                break
    return checks.finding()


@case_registry.register(
    "dorroh.algebra-part",
    "(a,0) ∈ I(R,S)^qnil iff a ∈ R^qnil",
    inputs=DORROH_RINGS,
    ref=r'§2, "$(R, 0)^{qnil} = (R, 0)\cap I(R, S)^{qnil}$"',
)
def dorroh_algebra_part(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in DORROH_RINGS:
        ring = ctx.ring(slug)
        q, base_q = qnil_set(ring), qnil_set(ring.algebra)
        for a in range(ring.algebra.order):
            x = ring.pair(a, 0)
            checks.expect((x in q) == (a in base_q), f"{ring.name}: (a,0) and a disagree", ring, x=x)
    return checks.finding()


@case_registry.register(
    "dorroh.scalar-part",
    "(0,i) ∈ I(R,S)^qnil implies i ∈ S^qnil",
    inputs=DORROH_RINGS,
    ref=r'§2, "$(0, S)\cap I(R, S)^{qnil}\subseteq (0, S)^{qnil}$"',
)
def dorroh_scalar_part(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in DORROH_RINGS:
        ring = ctx.ring(slug)
        q, scalar_q = qnil_set(ring), qnil_set(ctx.build(zn(ring.n)))
        for i in range(ring.n):
            x = ring.pair(ring.algebra.zero, i)
            checks.expect(x not in q or i in scalar_q, f"{ring.name}: (0,{i}) quasinilpotent but {i} is not",
                          ring, x=x)
    return checks.finding()


@case_registry.register(
    "dorroh.unit-criterion",
    "(0,i) ∈ I(R,S)^qnil iff for every (a,b) ∈ comm((0,i)) some (u,v) has "
    "(i(a+b)+1)(u+v) = 1 and (1+ib)v = 1",
    inputs=DORROH_RINGS,
    ref=r'§2, "there exists $(u, v)\in I(R, S)$ such that"',
)
def dorroh_unit_criterion(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in DORROH_RINGS:
        ring = ctx.ring(slug)
        R = ring.algebra
        _, v_coords = _dorroh_columns(ring)
        folds = np.asarray(ring.fold(ring.elements), dtype=np.int64)
        q = qnil_set(ring)
        for i in range(ring.n):
            x = ring.pair(R.zero, i)
            criterion = True
            for y in commutant(ring, x).indexes:
                y = int(y)
                _, b = ring.split(y)
                w = R.add(R.times(i, int(folds[y])), R.one)
                solvable = ((np.asarray(R._mul(w, folds)) == R.one)
                            & (((1 + i * b) * v_coords) % ring.n == 1))
                if not solvable.any():
                    criterion = False
                    break
            checks.expect(criterion == (x in q), f"{ring.name}: criterion disagrees for (0,{i})", ring, x=x)
    return checks.finding()


def _epsilon(ring) -> np.ndarray:
    return np.asarray(ring.epsilon(ring.elements), dtype=np.int64)


@case_registry.register(
    "series.units",
    "Truncated Hurwitz and skew power series: U = ε^-1(U(R))",
    inputs=SERIES_RINGS,
    ref=r'§2, "$U(H(R; \alpha)) = \epsilon^{-1}U(R)$"',
)
def series_units(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in SERIES_RINGS:
        ring = ctx.ring(slug)
        bad = units(ring).mask != units(ring.base).mask[_epsilon(ring)]
        checks.expect(not bad.any(), f"{ring.name}: U != ε^-1(U(R))", ring, f=int(np.argmax(bad)))
    return checks.finding()


@case_registry.register(
    "series.qnil-inclusion",
    "Truncated Hurwitz and skew power series: ε^-1(R^qnil) is contained in the quasinilpotents",
    inputs=SERIES_RINGS,
    ref=r'§2, "Then $H(R; \alpha)^{qnil} = \epsilon^{-1}R^{qnil}$"',
)
def series_qnil_inclusion(ctx: CaseContext) -> Finding:
    checks = Checklist()
    for slug in SERIES_RINGS:
        ring = ctx.ring(slug)
        bad = qnil_set(ring.base).mask[_epsilon(ring)] & ~qnil_set(ring).mask
        checks.expect(not bad.any(), f"{ring.name}: ε^-1(R^qnil) not inside the quasinilpotents", ring,
                      f=int(np.argmax(bad)))
    return checks.finding()


@case_registry.register(
    "series.hurwitz-equality",
    "Whether the quasinilpotents of each truncation equal ε^-1(R^qnil)",
    kind=CaseKind.OBSERVATION,
    inputs=SERIES_RINGS,
    ref=r'§2, "Then $H(R; \alpha)^{qnil} = \epsilon^{-1}R^{qnil}$"',
)
def series_equality(ctx: CaseContext) -> Finding:
    status = {}
    for slug in SERIES_RINGS:
        ring = ctx.ring(slug)
        status[slug] = bool((qnil_set(ring.base).mask[_epsilon(ring)] == qnil_set(ring).mask).all())
    return Finding(holds=all(status.values()), observations={"equal": status})


@case_registry.register(
    "series.hurwitz-z2",
    "HurwitzTrunc(Z_2, id, 2): 4 units and R^qnil = ε^-1(0), 4 elements",
    inputs=("hurwitz-z2-2",),
    ref='derived: exhaustive computation on HurwitzTrunc(Z_2, id, 2)',
)
def hurwitz_z2(ctx: CaseContext) -> Finding:
    ring = ctx.ring("hurwitz-z2-2")
    checks = Checklist()
    checks.expect(len(units(ring)) == 4, "HurwitzTrunc(Z_2, id, 2) does not have 4 units")
    q = qnil_set(ring)
    expected = tuple(int(i) for i in np.flatnonzero(_epsilon(ring) == ring.base.zero))
    checks.expect(q.members == expected and len(q) == 4, f"R^qnil = {ring.labels(q)}")
    return checks.finding()


@case_registry.register(
    "series.degree-zero",
    "A degree-0 truncation with the identity endomorphism has the arithmetic of its base",
    inputs=("z4",),
    ref='derived: a degree-0 truncation against its base',
)
def series_degree_zero(ctx: CaseContext) -> Finding:
    ring = ctx.build(RingDescriptor(kind=RingKind.HURWITZ_TRUNC, base=zn(4), degree=0))
    return Finding(holds=same_arithmetic(ring, ctx.ring("z4")))


@case_registry.register(
    "ttrunc.coordinates",
    "T_2[Z_4, Z_4]: an element is quasinilpotent iff every coordinate is; 8 quasinilpotents",
    inputs=("t2-z4-z4",),
    ref=r'§2, "then $a_i\in R^{qnil}$ for $i = 1, 2, 3, \dots, n$ and $s\in S^{qnil}$"',
)
def ttrunc_coordinates(ctx: CaseContext) -> Finding:
    ring = ctx.ring("t2-z4-z4")
    q = qnil_set(ring)
    expected = coordinate_mask([qnil_set(factor).mask for factor in ring.factors])
    return Finding(holds=len(q) == 8 and bool((q.mask == expected).all()),
                   observations={"qnil": len(q)})


@case_registry.register(
    "table.local16-export",
    "The table export of Local16 has the same derived sets",
    inputs=("local16",),
    ref='derived: table export of Local16 against the construction',
)
def table_export(ctx: CaseContext) -> Finding:
    ring = ctx.ring("local16")
    table = ctx.build(table_descriptor(ring))
    checks = Checklist()
    for name, compute in DERIVED_SETS.items():
        checks.expect(compute(table).members == compute(ring).members, f"{name} differs after table export")
    return checks.finding()
