"""Exact scalar arithmetic: rationals and cyclotomic numbers.

Rationals are plain ``fractions.Fraction`` (arbitrary precision, always in
lowest terms with positive denominator).  This module adds the ``p/q`` string
format used everywhere in the CLI, and an exact model of the cyclotomic field
Q(zeta_m): a ``CyclotomicNumber`` stores its coordinates in the power basis
``1, zeta, ..., zeta^(phi(m)-1)`` reduced modulo the m-th cyclotomic
polynomial, so equality is coefficient-wise and always decidable.

No floats, ever.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "cyclotomic_polynomial",
    "CyclotomicNumber",
    "zeta",
    "cyclotomic_mul",
    "embed",
]


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or "p" into an exact rational.  No float fallback."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(x: Fraction | int) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# integer polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic up to leading +-1
    num = list(num)
    dden = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dden)
    for i in range(len(num) - 1, dden - 1, -1):
        c = num[i]
        if c == 0:
            continue
        assert c % lead == 0
        q = c // lead
        quot[i - dden] = q
        for j, dc in enumerate(den):
            num[i - dden + j] -= q * dc
    assert all(c == 0 for c in num)
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError("order must be positive")
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divmod_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _euler_phi(m: int) -> int:
    return sum(1 for j in range(1, m + 1) if gcd(j, m) == 1)


@lru_cache(maxsize=None)
def _power_reductions(m: int) -> tuple[tuple[Fraction, ...], ...]:
    # zeta^t for t = 0 .. 2*(phi-1), written in the power basis
    phi_coeffs = cyclotomic_polynomial(m)
    deg = len(phi_coeffs) - 1
    # x^deg = -(phi[0] + phi[1] x + ... + phi[deg-1] x^(deg-1))
    top = [Fraction(-c) for c in phi_coeffs[:deg]]
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    rows.append(tuple(cur))
    for _ in range(max(0, 2 * deg - 2)):
        carry = cur[deg - 1]
        nxt = [Fraction(0)] + cur[: deg - 1]
        if carry:
            nxt = [a + carry * b for a, b in zip(nxt, top)]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


class CyclotomicNumber:
    """An exact element of Q(zeta_m) in canonical (reduced) form.

    Immutable; arithmetic between two cyclotomic numbers requires equal
    orders (use :func:`embed` to move into a larger field first), and is
    also defined against ``int`` / ``Fraction`` scalars.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        deg = _euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            raise ValueError(f"too many coefficients for order {order}")
        cs += [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CyclotomicNumber is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, order: int, value) -> "CyclotomicNumber":
        return cls(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls.from_rational(order, 1)

    @classmethod
    def zeta_power(cls, order: int, e: int) -> "CyclotomicNumber":
        """zeta_m^e in canonical form (e taken modulo m)."""
        e %= order
        deg = _euler_phi(order)
        if e < deg:
            cs = [Fraction(0)] * deg
            cs[e] = Fraction(1)
            return cls(order, cs)
        # shift-and-reduce x^e modulo the cyclotomic polynomial
        phi = cyclotomic_polynomial(order)
        top = [Fraction(-c) for c in phi[:deg]]
        cur = [Fraction(0)] * deg
        cur[0] = Fraction(1)
        for _ in range(e):
            carry = cur[deg - 1]
            cur = [Fraction(0)] + cur[: deg - 1]
            if carry:
                cur = [a + carry * b for a, b in zip(cur, top)]
        return cls(order, cur)

    # -- basic structure ---------------------------------------------------

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}; embed first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber(self.order, [a * f for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        deg = len(self.coeffs)
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    prod[i + j] += a * b
        red = _power_reductions(self.order)
        out = [Fraction(0)] * deg
        for t, c in enumerate(prod):
            if c == 0:
                continue
            row = red[t]
            for idx in range(deg):
                if row[idx]:
                    out[idx] += c * row[idx]
        return CyclotomicNumber(self.order, out)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via extended Euclid in Q[x] mod Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = list(self.coeffs)
        # extended gcd of a and phi over Q[x]; phi is irreducible so the
        # gcd is a nonzero constant
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def degree(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i] != 0:
                    return i
            return -1

        while degree(r1) > 0:
            d0, d1 = degree(r0), degree(r1)
            q = [Fraction(0)] * (d0 - d1 + 1)
            rr = list(r0)
            for i in range(d0, d1 - 1, -1):
                c = rr[i]
                if c == 0:
                    continue
                f = c / r1[d1]
                q[i - d1] = f
                for j in range(d1 + 1):
                    rr[i - d1 + j] -= f * r1[j]
            # r0 - q*r1 = rr ; update Bezout coefficient the same way
            qs1 = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qc in enumerate(q):
                if qc == 0:
                    continue
                for j, sc in enumerate(s1):
                    qs1[i + j] += qc * sc
            news = [Fraction(0)] * max(len(s0), len(qs1))
            for i, c in enumerate(s0):
                news[i] += c
            for i, c in enumerate(qs1):
                news[i] -= c
            r0, r1 = r1, rr
            s0, s1 = s1, news
        const = r1[0]
        inv = [c / const for c in s1]
        red = _power_reductions(self.order)
        deg = len(self.coeffs)
        out = [Fraction(0)] * deg
        for t, c in enumerate(inv):
            if c == 0:
                continue
            if t < deg:
                out[t] += c
            else:
                row = red[t]
                for idx in range(deg):
                    out[idx] += c * row[idx]
        return CyclotomicNumber(self.order, out)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicNumber(self.order, [a / f for a in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        return not self.is_zero()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CyclotomicNumber.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation, zeta -> zeta^(-1)."""
        return self.galois(-1)

    def galois(self, j: int) -> "CyclotomicNumber":
        """The field automorphism zeta -> zeta^j (requires gcd(j, m) = 1)."""
        m = self.order
        if gcd(j % m, m) != 1:
            raise ValueError(f"{j} is not invertible modulo {m}")
        out = CyclotomicNumber.zero(m)
        for t, c in enumerate(self.coeffs):
            if c:
                out = out + CyclotomicNumber.zeta_power(m, (t * j) % m) * c
        return out

    # -- comparisons / hashing / display -----------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}; embed first"
                )
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if t == 0:
                terms.append(format_rational(c))
            else:
                mono = f"z{self.order}" if t == 1 else f"z{self.order}^{t}"
                terms.append(mono if c == 1 else f"{format_rational(c)}*{mono}")
        return " + ".join(terms) if terms else "0"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicNumber":
        return cls(obj["order"], [parse_rational(c) for c in obj["coeffs"]])


def zeta(m: int, e: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_m^e."""
    return CyclotomicNumber.zeta_power(m, e)


def cyclotomic_mul(x: CyclotomicNumber, y: CyclotomicNumber) -> CyclotomicNumber:
    """Exact product; both operands must share the same order."""
    if x.order != y.order:
        raise ValueError(f"order mismatch: {x.order} vs {y.order}; embed first")
    return x * y


def embed(x: CyclotomicNumber, m: int) -> CyclotomicNumber:
    """Image of x under the ring embedding Q(zeta_l) -> Q(zeta_m), l | m.

    Sends zeta_l to zeta_m^(m/l); the identity on rational constants.
    """
    l = x.order
    if m % l != 0:
        raise ValueError(f"{l} does not divide {m}")
    step = m // l
    out = CyclotomicNumber.zero(m)
    for t, c in enumerate(x.coeffs):
        if c:
            out = out + CyclotomicNumber.zeta_power(m, (t * step) % m) * c
    return out
