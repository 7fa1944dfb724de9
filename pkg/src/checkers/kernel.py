"""
Kernel condition for quasinilpotents of K_0(R).
"""
import numpy as np

from src.constructions.generalized import GeneralizedMatrixRing
from src.core.derived import commutant, qnil_set
from src.core.errors import DomainError
from src.core.ring import FiniteRing
from src.models.verdict import PredicateVerdict
from .verdicts import Stopwatch, fails, holds


def k0_kernel_condition(ring: FiniteRing, A: int) -> PredicateVerdict:
    """For A = [[a,b],[c,d]] ∈ qnil(K_0(R)): xb = by and yc = cx for all x ∈ comm(a), y ∈ comm(d).

    ``consequence_holds`` reports whether a and d are quasinilpotent in R.
    """
    if not isinstance(ring, GeneralizedMatrixRing) or ring.s != ring.base.zero:
        raise DomainError(f"{ring.name} is not a K_0 ring")
    if A not in qnil_set(ring):
        raise DomainError(f"{ring.label(A)} is not quasinilpotent in {ring.name}")
    clock = Stopwatch()
    R = ring.base
    a, b, c, d = ring.blocks(A)
    xs = commutant(R, a).indexes
    ys = commutant(R, d).indexes
    xb = np.asarray(R._mul(xs, b), dtype=np.int64)
    by = np.asarray(R._mul(b, ys), dtype=np.int64)
    yc = np.asarray(R._mul(ys, c), dtype=np.int64)
    cx = np.asarray(R._mul(c, xs), dtype=np.int64)
    ok = (xb[:, None] == by[None, :]) & (yc[None, :] == cx[:, None])
    base_qnil = qnil_set(R)
    consequence = a in base_qnil and d in base_qnil
    if ok.all():
        return holds(ring, "k0-kernel-condition", clock, consequence=consequence)
    i, j = (int(v) for v in np.argwhere(~ok)[0])
    x, y = int(xs[i]), int(ys[j])
    return fails(ring, "k0-kernel-condition", clock, [("x", x), ("y", y)],
                 f"for A = {ring.label(A)}: x = {R.label(x)}, y = {R.label(y)} break xb = by or yc = cx",
                 witness_ring=R)
