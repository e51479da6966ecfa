import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.polynomial import polynomial as P

from bigelow_jones.errors import InputError
from bigelow_jones.slice_hilbert import (
    FiberPoint, SlicePoint, anti_diagonal_check, from_uv, hilbert_image, involution, on_fiber,
    p_tau_at, parse_poly, poly_from_roots, random_slice_point, random_tau, reconstruct, residual,
    serialize_poly, to_uv, validate,
)

TAU = (1.0, -1.0, 2.0, -2.0)  # m = 2


def _split_point():
    # B = C = 0 and A D = P_tau with the roots shared out
    a = poly_from_roots([1.0, 2.0])
    d = poly_from_roots([-1.0, -2.0])
    return SlicePoint(a, np.zeros(2, complex), np.zeros(2, complex), d, TAU)


def _n1_point(z0=0.5 + 0.25j):
    # (t - z0) D(t) - b c = P_tau(t): D is the quotient, b c = -P_tau(z0)
    a = poly_from_roots([z0])
    d, rem = P.polydiv(poly_from_roots(TAU), a)
    b = np.sqrt(-rem[0] + 0j)
    return SlicePoint(a, np.array([b]), np.array([b]), d, TAU)


def test_validate_examples():
    assert validate(_n1_point())
    assert validate(_split_point())
    p = _split_point()
    bumped = SlicePoint(p.A, p.B, p.C, p.D + np.array([0, 1e-8, 0]), p.tau)
    assert not validate(bumped)


def test_validate_degree_errors():
    p = _split_point()
    with pytest.raises(InputError):
        validate(SlicePoint(p.A, p.B, p.C, p.D[:-1], p.tau))
    with pytest.raises(InputError):
        validate(SlicePoint(p.A, p.B, p.C, p.D, p.tau[:3]))


def test_uv_special_cases():
    p = _n1_point()
    u, v = to_uv(p)
    assert np.allclose(v, 0)
    q = SlicePoint(p.A, p.B, -p.B, p.D, p.tau)
    u, v = to_uv(q)
    assert np.allclose(u, 0)


def test_n1_image_is_the_point():
    z0 = 0.5 + 0.25j
    p = _n1_point(z0)
    (q,) = hilbert_image(p)
    assert abs(q.z - z0) < 1e-12 and abs(q.u - p.B[0]) < 1e-12 and abs(q.v) < 1e-12
    assert on_fiber(q, TAU)


def test_split_image_at_punctures():
    pts = hilbert_image(_split_point())
    assert [round(q.z.real, 9) for q in pts] == [1.0, 2.0]
    assert all(abs(q.u) < 1e-12 and abs(q.v) < 1e-12 for q in pts)


def test_reconstruct_examples():
    q = FiberPoint(0.0, 0.0, 1.0)
    p = reconstruct([q], TAU)
    assert np.allclose(p.A, [-1, 1])
    with pytest.raises(InputError):
        reconstruct([q, q], TAU)
    with pytest.raises(InputError):
        reconstruct([FiberPoint(1.0, 0.0, 0.3)], TAU)


def test_involution_basics():
    p = random_slice_point(np.random.default_rng(3), 2, 3)
    twice = involution(involution(p))
    assert all(np.array_equal(x, y) for x, y in ((twice.A, p.A), (twice.B, p.B), (twice.C, p.C), (twice.D, p.D)))
    fixed = _n1_point()
    assert np.allclose(involution(fixed).B, fixed.B)


def test_anti_diagonal_examples():
    z = 0.3 + 0.1j
    u = np.sqrt(-p_tau_at(TAU, z))
    assert anti_diagonal_check([FiberPoint(u, 0, z), FiberPoint(-u, 0, z)], TAU)
    w = -0.7
    uw = np.sqrt(-p_tau_at(TAU, w) + 0j)
    assert not anti_diagonal_check([FiberPoint(u, 0, z), FiberPoint(uw, 0, w)], TAU)
    assert anti_diagonal_check([FiberPoint(0, 0, 1.0), FiberPoint(0, 0, 1.0)], TAU)
    with pytest.raises(InputError):
        anti_diagonal_check([FiberPoint(1, 0, z)], TAU)


def test_serialization_roundtrip():
    c = np.array([1 + 2j, -0.5, 3e-12j])
    assert np.array_equal(parse_poly(serialize_poly(c)), c)


def test_random_tau_properties():
    tau = random_tau(np.random.default_rng(0), 3)
    assert abs(sum(tau)) < 1e-12
    assert min(abs(a - b) for i, a in enumerate(tau) for b in tau[i + 1:]) >= 0.1


def _scale(p):
    return max(1.0, *(float(np.max(np.abs(c))) for c in (p.A, p.B, p.C, p.D)))


sizes = st.integers(1, 4).flatmap(lambda m: st.tuples(st.integers(1, m), st.just(m)))


@settings(max_examples=60, deadline=None)
@given(sizes, st.integers(0, 2**32 - 1))
def test_uv_identity(nm, seed):
    n, m = nm
    p = random_slice_point(np.random.default_rng(seed), n, m)
    assert residual(p) <= 1e-9 * _scale(p)
    u, v = to_uv(p)
    lhs = P.polyadd(P.polyadd(P.polymul(u, u), P.polymul(v, v)), p.P_tau())
    assert np.max(np.abs(P.polysub(lhs, P.polymul(p.A, p.D)))) <= 1e-9 * _scale(p) ** 2
    b, c = from_uv(u, v)
    assert np.allclose(b, p.B, atol=1e-12) and np.allclose(c, p.C, atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(sizes, st.integers(0, 2**32 - 1))
def test_roundtrip_and_commutation(nm, seed):
    n, m = nm
    p = random_slice_point(np.random.default_rng(seed), n, m)
    image = hilbert_image(p)
    assert all(on_fiber(q, p.tau) for q in image)
    back = reconstruct(image, p.tau)
    for x, y in ((p.A, back.A), (p.B, back.B), (p.C, back.C), (p.D, back.D)):
        assert np.max(np.abs(x - y)) < 1e-9
    flipped = hilbert_image(involution(p))
    for q, r in zip(image, flipped):
        assert abs(q.z - r.z) < 1e-9 and abs(q.u - r.u) < 1e-9 and abs(q.v + r.v) < 1e-9
    assert residual(back) <= 1e-9 * _scale(back)
