"""Quotient rings F[x]/(x^N - lam) and their residue polynomials.

Here N = n * p^s with gcd(n, p) = 1, the coefficient ring is either
GF(p^m) or GF(p^m) + u GF(p^m), and the constant lam is chosen so that the
quotient has repeated-root structure: over the field, lam = alpha0^(p^s)
for a given alpha0 with x^n - alpha0 irreducible, so that

    x^N - lam = (x^n - alpha0)^(p^s);

over the two-component ring, lam = alpha + u*beta with alpha = alpha0^(p^s).
The binomial a(x) = x^n - alpha0 is the *radical generator*: every ideal of
the quotient is built from its powers, which is why ``binomial_power`` gets
its own memoized entry point.

A residue is a :class:`QPoly`: an immutable length-N coefficient tuple
(degree 0 first) of encoded coefficient-ring ints.  Multiplication wraps
x^N back to lam.  Text form: coefficients joined by commas, degree 0 first,
each coefficient comma-free ("2.1" for 2+y in GF(9), "2+u1" over the
two-component ring).
"""

from __future__ import annotations

import math
from typing import Iterable, Union

from .errors import (
    ConstructionRefused,
    ExponentOutOfRange,
    RingMismatch,
    ZeroPolynomial,
)
from .galois import ChainRing, Field, binomial_irreducible

CoefficientRing = Union[Field, ChainRing]


class QuotientRing:
    """F[x]/(x^(n*p^s) - lam) with repeated-root structure."""

    def __init__(self, field: Field, n: int, s: int, alpha0,
                 beta: int | None = None):
        p = field.p
        if n < 1 or s < 1:
            raise ConstructionRefused("n and s must be positive")
        if math.gcd(n, p) != 1:
            raise ConstructionRefused(
                f"n = {n} must be coprime to the characteristic {p}")
        alpha0 = field.elem(alpha0).val
        if not binomial_irreducible(field, n, alpha0):
            raise ConstructionRefused(
                f"x^{n} - ({field.format_element(alpha0)}) is reducible "
                f"over GF({field.q})")
        self.field = field
        self.n = n
        self.s = s
        self.p = p
        self.N = n * p ** s
        self.alpha0 = alpha0
        self.alpha = field.pow(alpha0, p ** s)
        if beta is None:
            self.beta = None
            self.base: CoefficientRing = field
            self.lam = self.alpha
        else:
            self.beta = field.elem(beta).val
            self.base = ChainRing(field)
            self.lam = self.base.make(self.alpha, self.beta)
        self._binom_squares: dict[int, QPoly] = {}
        self._field_quotient: QuotientRing | None = None

    @property
    def is_chain(self) -> bool:
        return self.beta is not None

    @property
    def m(self) -> int:
        return self.field.m

    def field_quotient(self) -> "QuotientRing":
        """The companion quotient over the plain field (same n, s, alpha0)."""
        if not self.is_chain:
            return self
        if self._field_quotient is None:
            self._field_quotient = QuotientRing(
                self.field, self.n, self.s, self.alpha0)
        return self._field_quotient

    # -- polynomial constructors --------------------------------------------

    def poly(self, coeffs: Iterable[int]) -> "QPoly":
        cs = [int(c) for c in coeffs]
        if len(cs) > self.N:
            raise RingMismatch(
                f"{len(cs)} coefficients for a length-{self.N} quotient")
        cs += [0] * (self.N - len(cs))
        size = self.base.size if self.is_chain else self.field.q
        for c in cs:
            if not 0 <= c < size:
                raise ValueError(f"coefficient {c} out of range")
        return QPoly(self, tuple(cs))

    def zero(self) -> "QPoly":
        return QPoly(self, (0,) * self.N)

    def one(self) -> "QPoly":
        return self.monomial(0)

    def monomial(self, j: int, coeff: int = 1) -> "QPoly":
        cs = [0] * self.N
        cs[j % self.N] = coeff
        return self.poly(cs)

    def radical(self) -> "QPoly":
        """The binomial x^n - alpha0, embedded in the quotient."""
        neg_a0 = self.field.neg(self.alpha0)
        cs = [0] * self.N
        cs[0] = self.base.embed(neg_a0) if self.is_chain else neg_a0
        cs[self.n] = 1
        return QPoly(self, tuple(cs))

    def embed(self, f: "QPoly") -> "QPoly":
        """Lift a field-quotient polynomial into the two-component quotient."""
        if not self.is_chain:
            raise RingMismatch("embed targets the two-component quotient")
        if f.ring != self.field_quotient():
            raise RingMismatch("embed expects a polynomial over the companion "
                               "field quotient")
        return QPoly(self, tuple(self.base.embed(c) for c in f.coeffs))

    def times_u(self, f: "QPoly") -> "QPoly":
        """Lift a field-quotient polynomial to u times itself."""
        if not self.is_chain:
            raise RingMismatch("times_u targets the two-component quotient")
        if f.ring != self.field_quotient():
            raise RingMismatch("times_u expects a polynomial over the "
                               "companion field quotient")
        return QPoly(self, tuple(self.base.times_u(c) for c in f.coeffs))

    # -- text ------------------------------------------------------------------

    def format_poly(self, f: "QPoly") -> str:
        return ",".join(self.base.format_coeff(c) for c in f.coeffs)

    def parse_poly(self, text: str) -> "QPoly":
        parts = [s.strip() for s in text.split(",")]
        return self.poly(self.base.parse_coeff(s) for s in parts)

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuotientRing)
                and self.field == other.field and self.n == other.n
                and self.s == other.s and self.alpha0 == other.alpha0
                and self.beta == other.beta)

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.s, self.alpha0, self.beta))

    def __repr__(self) -> str:
        lam = (self.base.format_element(self.lam) if self.is_chain
               else self.field.format_element(self.lam))
        return f"{self.base!r}[x]/(x^{self.N} - ({lam}))"


class QPoly:
    """Immutable residue polynomial in a :class:`QuotientRing`."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: QuotientRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _check(self, other: "QPoly") -> None:
        if not isinstance(other, QPoly):
            raise TypeError(f"expected QPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(
                f"polynomials live in different quotients: "
                f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "QPoly") -> "QPoly":
        self._check(other)
        base = self.ring.base
        return QPoly(self.ring, tuple(
            base.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "QPoly") -> "QPoly":
        self._check(other)
        base = self.ring.base
        return QPoly(self.ring, tuple(
            base.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "QPoly":
        base = self.ring.base
        return QPoly(self.ring, tuple(base.neg(a) for a in self.coeffs))

    def __mul__(self, other: "QPoly") -> "QPoly":
        self._check(other)
        return qmul(self, other)

    def scalar_mul(self, c: int) -> "QPoly":
        base = self.ring.base
        return QPoly(self.ring, tuple(base.scalar_mul(c, a) for a in self.coeffs))

    def shift(self) -> "QPoly":
        return consta_shift(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c != 0]

    def degree(self) -> int:
        """Degree of the canonical representative; -1 for the zero residue."""
        for i in range(self.ring.N - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __eq__(self, other) -> bool:
        return (isinstance(other, QPoly) and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        return self.ring.format_poly(self)


def qmul(f: QPoly, g: QPoly) -> QPoly:
    """Product in the quotient: convolution with x^N folded back to lam."""
    if g.ring != f.ring:
        raise RingMismatch(
            f"polynomials live in different quotients: "
            f"{f.ring!r} vs {g.ring!r}")
    ring = f.ring
    base, N, lam = ring.base, ring.N, ring.lam
    buf = [0] * (2 * N - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                if b:
                    buf[i + j] = base.add(buf[i + j], base.mul(a, b))
    for t in range(2 * N - 2, N - 1, -1):
        if buf[t]:
            buf[t - N] = base.add(buf[t - N], base.mul(lam, buf[t]))
    return QPoly(ring, tuple(buf[:N]))


def consta_shift(f: QPoly) -> QPoly:
    """Multiply by x: (v_0,...,v_{N-1}) -> (lam*v_{N-1}, v_0, ..., v_{N-2})."""
    ring = f.ring
    head = ring.base.mul(ring.lam, f.coeffs[-1])
    return QPoly(ring, (head,) + f.coeffs[:-1])


def binomial_power(ring: QuotientRing, i: int) -> QPoly:
    """(x^n - alpha0)^i in the quotient, by memoized squaring.

    Over the field the radical generator is nilpotent of index p^s, so i
    ranges over [0, p^s]; over the two-component ring the index is 2*p^s
    when beta = 0 and the wraparound gives (x^n - alpha0)^(p^s) = u*beta
    otherwise.
    """
    top = ring.p ** ring.s * (2 if ring.is_chain else 1)
    if not 0 <= i <= top:
        raise ExponentOutOfRange(
            f"exponent {i} outside [0, {top}] for {ring!r}")
    if i == 0:
        return ring.one()
    squares = ring._binom_squares
    if not squares:
        squares[1] = ring.radical()
    e = 1
    while 2 * e <= i:
        if 2 * e not in squares:
            squares[2 * e] = qmul(squares[e], squares[e])
        e *= 2
    result = None
    bit = 1
    while bit <= i:
        if i & bit:
            result = squares[bit] if result is None else qmul(result, squares[bit])
        bit <<= 1
    assert result is not None
    return result


def coefficient_weight(f: QPoly) -> int:
    """Smallest gap between two exponents in the support; 0 for monomials.

    This is the plain (non-cyclic) gap: exponents are compared as integers
    in [0, N), not around the circle.
    """
    supp = f.support()
    if not supp:
        raise ZeroPolynomial("the zero polynomial has no coefficient weight")
    if len(supp) == 1:
        return 0
    return min(b - a for a, b in zip(supp, supp[1:]))
