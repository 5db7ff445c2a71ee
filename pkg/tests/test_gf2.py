from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pogcut.gf2 import (
    ContainmentError,
    DimensionError,
    EdgeVector,
    full_space,
    intersect,
    orth_complement,
    orthogonal,
    quotient_dim,
    span,
    sym_diff,
    zero_space,
)


def ev(edges, n=5):
    return EdgeVector.from_edges(edges, n)


def brute_span(vectors, n):
    """Every GF(2) combination of the inputs, as a set of ints."""
    out = {0}
    for v in vectors:
        out |= {x ^ v.bits for x in out}
    return out


def vectors(n):
    return st.lists(st.integers(0, (1 << n) - 1).map(lambda b: EdgeVector(b, n)), max_size=6)


def test_sym_diff_examples():
    assert sym_diff(ev([1, 2]), ev([2, 3])) == ev([1, 3])
    a = ev([0, 2, 4])
    assert sym_diff(a, a) == ev([])
    assert sym_diff(a, ev([])) == a
    assert a ^ ev([0]) == ev([2, 4])


def test_orthogonal_examples():
    assert not orthogonal(ev([1, 2]), ev([2, 3]))
    assert orthogonal(ev([1, 2]), ev([1, 2]))
    assert orthogonal(ev([0, 1, 3]), ev([]))


def test_length_mismatch():
    with pytest.raises(DimensionError):
        sym_diff(ev([1], 4), ev([1], 5))
    with pytest.raises(DimensionError):
        orthogonal(ev([1], 4), ev([1], 5))
    with pytest.raises(DimensionError):
        span([ev([1], 4)], 5)
    with pytest.raises(DimensionError):
        EdgeVector(1 << 6, 5)


def test_span_examples():
    # coboundaries of the four vertices of K4; they sum to zero
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    cobs = [EdgeVector.from_edges([k for k, e in enumerate(edges) if v in e], 6) for v in range(4)]
    assert span(cobs, 6).dim == 3
    assert span([], 6).dim == 0
    assert span([ev([e], 6) for e in range(6)], 6).dim == 6


def test_intersect_examples():
    w = span([ev([0, 1]), ev([2, 3])], 5)
    assert intersect(w, w) == w
    assert intersect(w, zero_space(5)) == zero_space(5)


def test_orth_complement_examples():
    assert orth_complement(zero_space(7)) == full_space(7)
    assert orth_complement(full_space(7)) == zero_space(7)


def test_quotient_dim():
    w = span([ev([0, 1]), ev([2, 3])], 5)
    assert quotient_dim(w, w) == 0
    assert quotient_dim(full_space(5), zero_space(5)) == 5
    with pytest.raises(ContainmentError):
        quotient_dim(zero_space(5), w)


@settings(max_examples=200, deadline=None)
@given(vectors(6))
def test_span_matches_enumeration(vs):
    w = span(vs, 6)
    members = brute_span(vs, 6)
    assert 2 ** w.dim == len(members)
    assert all(w.contains(x) for x in members)
    assert all(w.contains(b) for b in w.basis)


@settings(max_examples=200, deadline=None)
@given(vectors(6))
def test_complement_matches_enumeration(vs):
    w = span(vs, 6)
    wp = orth_complement(w)
    assert w.dim + wp.dim == 6
    members = brute_span(vs, 6)
    perp = {u for u in range(64) if all(bin(u & x).count("1") % 2 == 0 for x in members)}
    assert perp == brute_span(wp.vectors(), 6)


@settings(max_examples=200, deadline=None)
@given(vectors(6), vectors(6))
def test_intersect_matches_enumeration(a, b):
    wa, wb = span(a, 6), span(b, 6)
    inter = intersect(wa, wb)
    assert brute_span(inter.vectors(), 6) == brute_span(a, 6) & brute_span(b, 6)
    assert inter.dim == wa.dim + wb.dim - (wa + wb).dim


def test_rref_is_canonical():
    # equal subspaces compare equal whatever generators were used
    for bits in product(range(1, 16), repeat=2):
        a = span([EdgeVector(b, 4) for b in bits], 4)
        b = span([EdgeVector(bits[0] ^ bits[1], 4), EdgeVector(bits[0], 4)], 4)
        assert a == b
