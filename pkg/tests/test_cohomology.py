import random

import pytest

from lensbounds.cohomology import (CohomologyRing, Mod2Class, is_spin,
                                   multiply, normal_sw_class,
                                   steenrod_square, tangential_sw_class)
from lensbounds.dyadic import nu_binom


def basis(ring):
    return [ring.monomial(d, j) for j in range(ring.n + 1) for d in (0, 1)]


def test_ring_validation():
    with pytest.raises(ValueError):
        CohomologyRing(0, 0)
    with pytest.raises(ValueError):
        CohomologyRing(3, 2)
    assert CohomologyRing.for_lens(5, 1).epsilon == 1
    assert CohomologyRing.for_lens(5, 4).epsilon == 0


def test_x_squared_rewrites():
    r0 = CohomologyRing(4, 0)
    assert (r0.x() * r0.x()).is_zero()
    r1 = CohomologyRing(4, 1)
    assert r1.x() * r1.x() == r1.y()
    assert r1.x_power(5) == r1.monomial(1, 2)
    assert r0.x_power(3).is_zero()


def test_truncation():
    ring = CohomologyRing(3, 0)
    assert (ring.y(2) * ring.y(2)).is_zero()  # y^4 = 0
    assert ring.y(1) * ring.y(2) == ring.y(3)
    assert ring.monomial(1, 3) == ring.x() * ring.y(3)  # top class survives


def test_ring_mismatch():
    with pytest.raises(ValueError):
        multiply(CohomologyRing(3, 0).x(), CohomologyRing(4, 0).x())


def test_multiply_commutative_associative_exhaustive():
    for n in range(1, 9):
        for eps in (0, 1):
            ring = CohomologyRing(n, eps)
            bs = basis(ring)
            for u in bs:
                for v in bs:
                    assert u * v == v * u
            for u in bs[::2]:
                for v in bs[::2]:
                    for w in bs[::3]:
                        assert (u * v) * w == u * (v * w)


def test_multiply_randomized_large_n():
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randrange(1, 65)
        ring = CohomologyRing(n, rng.randrange(2))
        u, v, w = (Mod2Class(ring, rng.getrandbits(n + 1), rng.getrandbits(n + 1))
                   for _ in range(3))
        assert u * v == v * u
        assert (u * v) * w == u * (v * w)


def test_steenrod_generators():
    ring = CohomologyRing(6, 1)
    assert steenrod_square(0, ring.x()) == ring.x()
    assert steenrod_square(1, ring.x()) == ring.y()     # Sq^1 x = x^2 = y
    assert steenrod_square(1, ring.y()).is_zero()
    assert steenrod_square(2, ring.y()) == ring.y(2)
    ring0 = CohomologyRing(6, 0)
    assert steenrod_square(1, ring0.x()).is_zero()      # eps = 0


def test_sq2_on_top_odd_class():
    # oracle: Cartan on two factors gives Sq^2(x y^(n-1)) = C(n-1,1) x y^n
    for n in range(2, 40):
        for eps in (0, 1):
            ring = CohomologyRing(n, eps)
            got = steenrod_square(2, ring.monomial(1, n - 1))
            if (n - 1) % 2:
                assert got == ring.monomial(1, n)
            else:
                assert got.is_zero()


def test_sq_even_binomial_parity():
    ring = CohomologyRing(20, 0)
    for j in range(21):
        for i in range(21):
            got = steenrod_square(2 * i, ring.y(j))
            if i <= j and nu_binom(j, i) == 0 and j + i <= 20:
                assert got == ring.y(j + i)
            else:
                assert got.is_zero()
            assert steenrod_square(2 * i + 1, ring.y(j)).is_zero()


def test_cartan_formula():
    for n in range(1, 13):
        for eps in (0, 1):
            ring = CohomologyRing(n, eps)
            bs = basis(ring)
            squares = {u: [steenrod_square(a, u) for a in range(2 * n + 3)]
                       for u in bs}
            for u in bs:
                for v in bs:
                    uv = u * v
                    for i in range(2 * n + 2):
                        total = ring.zero()
                        for a in range(i + 1):
                            total = total + squares[u][a] * squares[v][i - a]
                        assert steenrod_square(i, uv) == total


def test_instability():
    for n in range(1, 17):
        for eps in (0, 1):
            ring = CohomologyRing(n, eps)
            for u in basis(ring):
                deg = next(d + 2 * j for d, j in u.monomials())
                assert steenrod_square(deg, u) == u * u
                for i in range(deg + 1, 2 * n + 4):
                    assert steenrod_square(i, u).is_zero()


def test_tangential_class_examples():
    r1 = CohomologyRing(1, 0)
    assert tangential_sw_class(r1) == r1.one()          # w2-part vanishes
    r2 = CohomologyRing(2, 0)
    w = tangential_sw_class(r2)
    assert w == r2.one() + r2.y(1) + r2.y(2)
    for n in range(1, 200):
        ring = CohomologyRing(n, 0)
        got = tangential_sw_class(ring).coefficient(0, 1)
        assert got == (n + 1) % 2


def test_normal_class_inverse_and_closed_form():
    import math
    for n in range(1, 129):
        for eps in (0, 1):
            ring = CohomologyRing(n, eps)
            w = tangential_sw_class(ring)
            wbar = normal_sw_class(ring)
            assert w * wbar == ring.one()
            for j in range(n + 1):
                assert wbar.coefficient(0, j) == math.comb(n + j, j) % 2


def test_normal_class_examples():
    ring = CohomologyRing(4, 0)
    assert normal_sw_class(ring).coefficient(0, 3) == 1  # C(7,3) = 35 odd
    for m in (1, 2, 4, 8, 16, 32):
        ring = CohomologyRing(m, 0)
        assert normal_sw_class(ring).coefficient(0, m - 1) == 1


def test_is_spin():
    assert is_spin(0, 1) and is_spin(0, 5)
    assert is_spin(3, 1) and is_spin(3, 2) and is_spin(3, 9)
    assert not is_spin(4, 1) and not is_spin(4, 3)
    for m in range(200):
        for e in (1, 2, 3):
            assert is_spin(m, e) == (m == 0 or m % 2 == 1)
    with pytest.raises(ValueError):
        is_spin(-1, 1)
    with pytest.raises(ValueError):
        is_spin(3, 0)


def test_class_display():
    ring = CohomologyRing(3, 1)
    u = ring.one() + ring.x() * ring.y(2)
    assert str(u) == "1 + x*y^2"
    assert str(ring.zero()) == "0"
