"""Mod-2 cohomology of lens spaces.

The ring on a (2n+1)-dimensional lens space is generated by x (degree 1)
and y (degree 2) subject to y^(n+1) = 0 and x^2 = epsilon*y, with epsilon=1
exactly for 2-torsion (real projective) spaces.  Classes are stored in the
canonical basis {y^j, x*y^j} as two bitmasks (bit j of `even` is the y^j
coefficient, bit j of `odd` the x*y^j coefficient), so ring arithmetic is
carry-less integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import nu_binom


@dataclass(frozen=True, slots=True)
class CohomologyRing:
    """Truncation parameters: top power n of y, and epsilon (1 iff e = 1)."""

    n: int
    epsilon: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"ring needs n >= 1, got {self.n}")
        if self.epsilon not in (0, 1):
            raise ValueError(f"epsilon must be 0 or 1, got {self.epsilon}")

    @classmethod
    def for_lens(cls, n: int, e: int) -> "CohomologyRing":
        if e < 1:
            raise ValueError(f"torsion exponent must be >= 1, got {e}")
        return cls(n, 1 if e == 1 else 0)

    @property
    def mask(self) -> int:
        return (1 << (self.n + 1)) - 1

    def zero(self) -> "Mod2Class":
        return Mod2Class(self, 0, 0)

    def one(self) -> "Mod2Class":
        return Mod2Class(self, 1, 0)

    def x(self) -> "Mod2Class":
        return Mod2Class(self, 0, 1)

    def y(self, j: int = 1) -> "Mod2Class":
        return self.monomial(0, j)

    def monomial(self, delta: int, j: int) -> "Mod2Class":
        """Basis element x^delta * y^j (zero if it falls past the top class)."""
        if delta not in (0, 1) or j < 0:
            raise ValueError(f"bad monomial x^{delta} y^{j}")
        if j > self.n:
            return self.zero()
        if delta:
            return Mod2Class(self, 0, 1 << j)
        return Mod2Class(self, 1 << j, 0)

    def x_power(self, k: int) -> "Mod2Class":
        """x^k normalized into the canonical basis via x^2 -> epsilon*y."""
        if k < 0:
            raise ValueError(f"need k >= 0, got {k}")
        if k >= 2 and self.epsilon == 0:
            return self.zero()
        return self.monomial(k & 1, k >> 1)


@dataclass(frozen=True, slots=True)
class Mod2Class:
    """Element sum c_{0,j} y^j + c_{1,j} x y^j; masks truncated past y^n."""

    ring: CohomologyRing
    even: int
    odd: int

    def __post_init__(self) -> None:
        m = self.ring.mask
        object.__setattr__(self, "even", self.even & m)
        object.__setattr__(self, "odd", self.odd & m)

    def is_zero(self) -> bool:
        return self.even == 0 and self.odd == 0

    def coefficient(self, delta: int, j: int) -> int:
        if delta not in (0, 1) or j < 0:
            raise ValueError(f"bad basis index x^{delta} y^{j}")
        mask = self.odd if delta else self.even
        return (mask >> j) & 1

    def monomials(self):
        """Yield (delta, j) over the support."""
        for delta, mask in ((0, self.even), (1, self.odd)):
            j = 0
            m = mask
            while m:
                if m & 1:
                    yield delta, j
                m >>= 1
                j += 1

    def __add__(self, other: "Mod2Class") -> "Mod2Class":
        self._check(other)
        return Mod2Class(self.ring, self.even ^ other.even, self.odd ^ other.odd)

    def __mul__(self, other: "Mod2Class") -> "Mod2Class":
        return multiply(self, other)

    def _check(self, other: "Mod2Class") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __str__(self) -> str:
        terms = []
        for delta, j in sorted(self.monomials(), key=lambda dj: dj[1] * 2 + dj[0]):
            part = "x" if delta else ""
            if j:
                part += ("*" if part else "") + ("y" if j == 1 else f"y^{j}")
            terms.append(part or "1")
        return " + ".join(terms) if terms else "0"


def _clmul(p: int, q: int) -> int:
    """Carry-less (GF(2)[y]) product of two coefficient masks."""
    r = 0
    while q:
        if q & 1:
            r ^= p
        p <<= 1
        q >>= 1
    return r


def multiply(u: Mod2Class, v: Mod2Class) -> Mod2Class:
    """Product in the truncated ring; x^2 rewrites to epsilon*y."""
    u._check(v)
    ring = u.ring
    even = _clmul(u.even, v.even)
    odd = _clmul(u.even, v.odd) ^ _clmul(u.odd, v.even)
    if ring.epsilon:
        even ^= _clmul(u.odd, v.odd) << 1
    return Mod2Class(ring, even, odd)


def steenrod_square(i: int, u: Mod2Class) -> Mod2Class:
    """Sq^i(u), extended additively from the basis.

    On generators the total square is Sq(x) = x + epsilon*y and
    Sq(y) = y + y^2; the Cartan formula then gives, on basis elements,

        Sq^{2t}(y^j)     = C(j, t) y^{j+t}
        Sq^{2t}(x y^j)   = C(j, t) x y^{j+t}
        Sq^{2t+1}(x y^j) = epsilon * C(j, t) y^{j+t+1}

    and all other squares vanish.  Binomial parity comes from the carry
    count, so no coefficient is ever formed.
    """
    if i < 0:
        raise ValueError(f"need i >= 0, got {i}")
    ring = u.ring
    even = 0
    odd = 0
    t, rem = divmod(i, 2)
    for delta, j in u.monomials():
        if t > j or nu_binom(j, t) != 0:
            continue
        if rem == 0:
            if delta:
                odd ^= 1 << (j + t)
            else:
                even ^= 1 << (j + t)
        elif delta and ring.epsilon:
            even ^= 1 << (j + t + 1)
    return Mod2Class(ring, even, odd)


def tangential_sw_class(ring: CohomologyRing) -> Mod2Class:
    """Total tangential Stiefel-Whitney class: (1 + y)^(n+1), truncated.

    The stable tangent bundle is the (n+1)-fold Whitney multiple of the
    pulled-back line bundle, whose total class is 1 + y mod 2.
    """
    even = 0
    top = ring.n + 1
    for j in range(ring.n + 1):
        if nu_binom(top, j) == 0:
            even |= 1 << j
    return Mod2Class(ring, even, 0)


def normal_sw_class(ring: CohomologyRing) -> Mod2Class:
    """Total normal Stiefel-Whitney class: the inverse of the tangential one.

    Computed by inverting the truncated series term by term; the y^j
    coefficient comes out as C(n+j, j) mod 2 (asserted in the tests rather
    than assumed here).
    """
    w = tangential_sw_class(ring).even
    inv = 1
    prod = w  # carry-less w * inv, maintained incrementally
    for j in range(1, ring.n + 1):
        if (prod >> j) & 1:
            inv |= 1 << j
            prod ^= w << j
    return Mod2Class(ring, inv & ring.mask, 0)


def is_spin(m: int, e: int) -> bool:
    """Whether the (2m+1)-dimensional 2^e-torsion lens space is spin.

    Two independent routes, which must agree: w2 of the tangential class
    (the manifold is orientable, so w1 = 0), and Wu's formula, under which
    w2 = v2 vanishes exactly when Sq^2 kills H^(2m-1).  Both reduce to
    "m = 0 or m odd".
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if e < 1:
        raise ValueError(f"need e >= 1, got {e}")
    if m == 0:
        return True  # the circle
    ring = CohomologyRing.for_lens(m, e)
    via_w2 = tangential_sw_class(ring).coefficient(0, 1) == 0
    # H^(2m-1) is spanned by x*y^(m-1); Sq^2 lands in the top degree.
    via_sq2 = steenrod_square(2, ring.monomial(1, m - 1)).is_zero()
    if via_w2 != via_sq2:
        raise AssertionError(
            f"spin criteria disagree at m={m}, e={e}: w2 route {via_w2}, "
            f"Sq^2 route {via_sq2}")
    return via_w2
