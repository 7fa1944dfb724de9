"""
Property tests over small catalog rings.
"""
import pytest
from hypothesis import given, settings, strategies as st

from src.core import inverse, qnil_set, units

RINGS = ["z6", "z2xz3", "m2-z2", "u2-z4", "local16", "k0-z2", "dorroh-z4-z4", "hurwitz-z4-2", "corner-m2z2-e11e12"]

ring_slugs = st.sampled_from(RINGS)


def draw_elements(data, ring, count):
    return [data.draw(st.integers(min_value=0, max_value=ring.order - 1)) for _ in range(count)]


class TestRingLaws:
    """Ring axioms on random triples."""

    @settings(max_examples=60, deadline=None)
    @given(slug=ring_slugs, data=st.data())
    def test_associativity_and_distributivity(self, builtin, slug, data):
        ring = builtin(slug)
        a, b, c = draw_elements(data, ring, 3)
        assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
        assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
        assert ring.mul(ring.add(a, b), c) == ring.add(ring.mul(a, c), ring.mul(b, c))

    @settings(max_examples=60, deadline=None)
    @given(slug=ring_slugs, data=st.data())
    def test_identities_and_negation(self, builtin, slug, data):
        ring = builtin(slug)
        (a,) = draw_elements(data, ring, 1)
        assert ring.mul(ring.one, a) == ring.mul(a, ring.one) == a
        assert ring.add(a, ring.zero) == a
        assert ring.add(a, ring.neg(a)) == ring.zero


class TestQuasinilpotents:
    """Closure facts about R^qnil."""

    @settings(max_examples=80, deadline=None)
    @given(slug=ring_slugs, data=st.data())
    def test_swap(self, builtin, slug, data):
        ring = builtin(slug)
        a, b = draw_elements(data, ring, 2)
        q = qnil_set(ring)
        assert (ring.mul(a, b) in q) == (ring.mul(b, a) in q)

    @settings(max_examples=80, deadline=None)
    @given(slug=ring_slugs, data=st.data())
    def test_unit_conjugation(self, builtin, slug, data):
        ring = builtin(slug)
        unit = units(ring).members
        u = unit[data.draw(st.integers(min_value=0, max_value=len(unit) - 1))]
        (a,) = draw_elements(data, ring, 1)
        q = qnil_set(ring)
        conjugate = ring.mul(ring.mul(u, a), inverse(ring, u))
        assert (a in q) == (conjugate in q)

    @pytest.mark.parametrize("slug", RINGS)
    def test_one_minus_qnil_is_unit(self, builtin, slug):
        ring = builtin(slug)
        unit = units(ring)
        assert all(ring.sub(ring.one, a) in unit for a in qnil_set(ring))
