"""Arithmetic for GF(p^m) and for the two-component ring GF(p^m) + u GF(p^m).

Field elements are encoded as plain integers in ``[0, p^m)``: the integer
whose base-p digits, least significant first, are the coefficients of the
residue polynomial (constant term first).  An element of the two-component
ring ``a + u*b`` (with u^2 = 0) packs its halves as ``a + q*b`` where
``q = p^m``.  Keeping elements as ints makes the hot loops cheap and lets
small fields run entirely off precomputed tables; the ``FieldElement`` /
``ChainElement`` wrappers add operator syntax and cross-ring safety checks
on top.

Text forms: a field element prints as its digit list, constant first
("2,1" is 2 + y in GF(9)); a two-component element prints as "a|b".
Inside polynomial strings (see :mod:`paircodes.quotient`) the commas are
taken, so there a field coefficient joins its digits with "." and a
two-component coefficient prints as "a+ub".
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    NonUnit,
    NotPrime,
    ReducibleModulus,
    ZeroElement,
)

_TABLE_LIMIT = 512


def _is_prime(x: int) -> bool:
    if x < 2:
        return False
    if x % 2 == 0:
        return x == 2
    d = 3
    while d * d <= x:
        if x % d == 0:
            return False
        d += 2
    return True


def prime_factors(x: int) -> list[int]:
    """Distinct prime factors of ``x``, ascending."""
    out = []
    d = 2
    while d * d <= x:
        if x % d == 0:
            out.append(d)
            while x % d == 0:
                x //= d
        d += 1 if d == 2 else 2
    if x > 1:
        out.append(x)
    return out


# --- polynomials over GF(p): lists of ints, constant term first ------------

def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo a monic ``f``."""
    a = [c % p for c in a]
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    del a[df:]
    return _ptrim(a)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _ptrim([c % p for c in a]), _ptrim([c % p for c in b])
    while b:
        if b[-1] != 1:
            inv = pow(b[-1], p - 2, p)
            b = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), f, p)
    return result


def _is_irreducible_poly(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    powers = {0: x}
    h = x
    for k in range(1, m + 1):
        h = _ppowmod(h, p, f, p)
        powers[k] = h
    if powers[m] != x:
        return False
    for r in prime_factors(m):
        diff = list(powers[m // r])
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(diff, f, p)) > 1:
            return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree m (constant first)."""
    for tail in itertools.product(range(p), repeat=m):
        f = list(tail) + [1]
        if _is_irreducible_poly(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class Field:
    """GF(p^m), elements encoded as ints in [0, p^m).

    If no modulus is given, the lexicographically least monic irreducible
    polynomial of degree m over GF(p) (compared constant term first) is
    used, so the same (p, m) always names the same field.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise DegreeMismatch("extension degree must be at least 1")
        if modulus is None:
            modulus = _smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise DegreeMismatch(
                    f"modulus must be monic of degree {m}, got {modulus}")
            if not _is_irreducible_poly(list(modulus), p):
                raise ReducibleModulus(f"{modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus: tuple[int, ...] = tuple(modulus)
        self._pow_p = [p ** t for t in range(m)]
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            self._add_t = self._mul_t = self._neg_t = self._inv_t = None

    # -- encoding ----------------------------------------------------------

    def coords(self, a: int) -> tuple[int, ...]:
        """Base-p digits of the encoded element, constant term first."""
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coords(self, cs: Iterable[int]) -> int:
        cs = list(cs)
        if len(cs) > self.m:
            raise DegreeMismatch(
                f"too many coefficients for GF({self.q}): {cs}")
        return sum((int(c) % self.p) * self._pow_p[t] for t, c in enumerate(cs))

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        polys = [self.coords(a) for a in range(q)]
        self._add_t = [
            [self.from_coords((x + y) % p for x, y in zip(polys[a], polys[b]))
             for b in range(q)]
            for a in range(q)
        ]
        self._neg_t = [self.from_coords((-x) % p for x in polys[a])
                       for a in range(q)]
        mod = list(self.modulus)
        mul_t = [[0] * q for _ in range(q)]
        for a in range(1, q):
            pa = _ptrim(list(polys[a]))
            for b in range(a, q):
                v = self.from_coords(
                    _pmod(_pmul(pa, _ptrim(list(polys[b])), p), mod, p))
                mul_t[a][b] = v
                mul_t[b][a] = v
        self._mul_t = mul_t
        inv_t = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if mul_t[a][b] == 1:
                    inv_t[a] = b
                    break
        self._inv_t = inv_t

    # -- arithmetic on encoded ints -----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        return self.from_coords(
            (x + y) % self.p for x, y in zip(self.coords(a), self.coords(b)))

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return self._neg_t[a]
        return self.from_coords((-x) % self.p for x in self.coords(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        prod = _pmul(_ptrim(list(self.coords(a))), _ptrim(list(self.coords(b))),
                     self.p)
        return self.from_coords(_pmod(prod, list(self.modulus), self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_unit(self, a: int) -> bool:
        return a != 0

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroElement(f"0 has no multiplicative order in GF({self.q})")
        e = self.q - 1
        for r in prime_factors(e):
            while e % r == 0 and self.pow(a, e // r) == 1:
                e //= r
        return e

    # -- GF(p)-linear structure ---------------------------------------------

    @property
    def gfp_dim(self) -> int:
        return self.m

    def gfp_coords(self, a: int) -> tuple[int, ...]:
        return self.coords(a)

    def gfp_from_coords(self, cs: Sequence[int]) -> int:
        return self.from_coords(cs)

    def gfp_basis(self) -> list[int]:
        return list(self._pow_p)

    def scalar_mul(self, c: int, a: int) -> int:
        return self.mul(c, a)

    # -- text, wrapping, misc -------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def elem(self, x) -> "FieldElement":
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"{x!r} is not an element of {self!r}")
            return x
        if isinstance(x, str):
            return FieldElement(self, self.parse_element(x))
        if isinstance(x, int):
            if not 0 <= x < self.q:
                raise ValueError(f"encoded value {x} out of range for {self!r}")
            return FieldElement(self, x)
        return FieldElement(self, self.from_coords(x))

    def format_element(self, a: int) -> str:
        return ",".join(str(c) for c in self.coords(a))

    def parse_element(self, text: str) -> int:
        parts = [s.strip() for s in text.split(",")]
        return self.from_coords(int(s) for s in parts)

    def format_coeff(self, a: int) -> str:
        """Comma-free rendering for use inside polynomial strings."""
        if self.m == 1:
            return str(a)
        return ".".join(str(c) for c in self.coords(a))

    def parse_coeff(self, text: str) -> int:
        parts = text.split(".")
        return self.from_coords(int(s) for s in parts)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"


class FieldElement:
    """Operator-friendly wrapper around an encoded field element."""

    __slots__ = ("field", "val")

    def __init__(self, field: Field, val: int):
        self.field = field
        self.val = val

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other.val
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.val, v))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.val, e))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.val, self.field.inv(v)))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.val))

    def order(self) -> int:
        return self.field.order(self.val)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coords(self.val)

    def is_zero(self) -> bool:
        return self.val == 0

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.val))

    def __repr__(self) -> str:
        return self.field.format_element(self.val)


class ChainRing:
    """GF(p^m) + u GF(p^m) with u^2 = 0; elements encoded as a + q*b."""

    def __init__(self, field: Field):
        self.field = field
        self.q = field.q
        self.size = field.q ** 2
        self.u = field.q  # the element 0 + u*1

    def make(self, a: int, b: int) -> int:
        return a + self.q * b

    def a_of(self, e: int) -> int:
        return e % self.q

    def b_of(self, e: int) -> int:
        return e // self.q

    def embed(self, a: int) -> int:
        return a

    def times_u(self, a: int) -> int:
        return self.q * a

    # -- arithmetic ----------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        f = self.field
        return self.make(f.add(self.a_of(x), self.a_of(y)),
                         f.add(self.b_of(x), self.b_of(y)))

    def neg(self, x: int) -> int:
        f = self.field
        return self.make(f.neg(self.a_of(x)), f.neg(self.b_of(x)))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        f = self.field
        a, b = self.a_of(x), self.b_of(x)
        c, d = self.a_of(y), self.b_of(y)
        return self.make(f.mul(a, c), f.add(f.mul(a, d), f.mul(b, c)))

    def is_unit(self, x: int) -> bool:
        return self.a_of(x) != 0

    def inv(self, x: int) -> int:
        """(a + ub)^-1 = a^-1 - u a^-2 b; defined exactly for a != 0."""
        a, b = self.a_of(x), self.b_of(x)
        if a == 0:
            raise NonUnit(f"{self.format_element(x)} is not a unit")
        f = self.field
        ai = f.inv(a)
        return self.make(ai, f.neg(f.mul(f.mul(ai, ai), b)))

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv(x), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return result

    # -- GF(p)-linear structure ----------------------------------------------

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def gfp_dim(self) -> int:
        return 2 * self.field.m

    def gfp_coords(self, e: int) -> tuple[int, ...]:
        return self.field.coords(self.a_of(e)) + self.field.coords(self.b_of(e))

    def gfp_from_coords(self, cs: Sequence[int]) -> int:
        m = self.field.m
        return self.make(self.field.from_coords(cs[:m]),
                         self.field.from_coords(cs[m:]))

    def gfp_basis(self) -> list[int]:
        base = self.field.gfp_basis()
        return base + [self.q * t for t in base]

    def scalar_mul(self, c: int, e: int) -> int:
        return self.mul(c, e)

    # -- text, wrapping ------------------------------------------------------

    def elements(self) -> range:
        return range(self.size)

    def elem(self, x) -> "ChainElement":
        if isinstance(x, ChainElement):
            if x.ring != self:
                raise FieldMismatch(f"{x!r} is not an element of {self!r}")
            return x
        if isinstance(x, str):
            return ChainElement(self, self.parse_element(x))
        if isinstance(x, int):
            if not 0 <= x < self.size:
                raise ValueError(f"encoded value {x} out of range for {self!r}")
            return ChainElement(self, x)
        a, b = x
        fa = self.field.elem(a).val if not isinstance(a, int) else a
        fb = self.field.elem(b).val if not isinstance(b, int) else b
        return ChainElement(self, self.make(fa, fb))

    def format_element(self, e: int) -> str:
        f = self.field
        return f"{f.format_element(self.a_of(e))}|{f.format_element(self.b_of(e))}"

    def parse_element(self, text: str) -> int:
        a, _, b = text.partition("|")
        fa = self.field.parse_element(a)
        fb = self.field.parse_element(b) if b else 0
        return self.make(fa, fb)

    def format_coeff(self, e: int) -> str:
        f = self.field
        a, b = self.a_of(e), self.b_of(e)
        if b == 0:
            return f.format_coeff(a)
        if a == 0:
            return f"u{f.format_coeff(b)}"
        return f"{f.format_coeff(a)}+u{f.format_coeff(b)}"

    def parse_coeff(self, text: str) -> int:
        text = text.strip()
        a_txt, sep, b_txt = text.partition("u")
        a_txt = a_txt.rstrip("+").strip()
        if sep:
            b = self.field.parse_coeff(b_txt.strip())
        else:
            b = 0
        a = self.field.parse_coeff(a_txt) if a_txt else 0
        return self.make(a, b)

    def __eq__(self, other) -> bool:
        return isinstance(other, ChainRing) and self.field == other.field

    def __hash__(self) -> int:
        return hash(("chain", self.field))

    def __repr__(self) -> str:
        return f"GF({self.q})+uGF({self.q})"


class ChainElement:
    """Operator-friendly wrapper around an encoded two-component element."""

    __slots__ = ("ring", "val")

    def __init__(self, ring: ChainRing, val: int):
        self.ring = ring
        self.val = val

    def _coerce(self, other) -> int:
        if isinstance(other, ChainElement):
            if other.ring != self.ring:
                raise FieldMismatch(
                    f"cannot combine elements of {self.ring!r} and {other.ring!r}")
            return other.val
        if isinstance(other, int):
            return other % self.ring.size
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ChainElement(self.ring, self.ring.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ChainElement(self.ring, self.ring.sub(self.val, v))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return ChainElement(self.ring, self.ring.mul(self.val, v))

    __rmul__ = __mul__

    def __neg__(self):
        return ChainElement(self.ring, self.ring.neg(self.val))

    def __pow__(self, e: int):
        return ChainElement(self.ring, self.ring.pow(self.val, e))

    def inverse(self) -> "ChainElement":
        return ChainElement(self.ring, self.ring.inv(self.val))

    @property
    def a(self) -> FieldElement:
        return FieldElement(self.ring.field, self.ring.a_of(self.val))

    @property
    def b(self) -> FieldElement:
        return FieldElement(self.ring.field, self.ring.b_of(self.val))

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.val)

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, ChainElement):
            return self.ring == other.ring and self.val == other.val
        if isinstance(other, int):
            return self.val == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.val))

    def __repr__(self) -> str:
        return self.ring.format_element(self.val)


# --- binomial irreducibility ------------------------------------------------

def element_order(x: FieldElement) -> int:
    return x.order()


def binomial_irreducible(field: Field, n: int, lam) -> bool:
    """Is x^n - lam irreducible over the field?

    For n >= 2 this holds exactly when every prime factor of n divides the
    multiplicative order e of lam but not (q-1)/e, with the extra condition
    q = 1 (mod 4) whenever 4 divides n.  Degree-1 binomials (n = 1) are
    always irreducible.
    """
    lam = field.elem(lam).val
    if lam == 0:
        raise ZeroElement("x^n - 0 is never irreducible")
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return True
    e = field.order(lam)
    rest = (field.q - 1) // e
    for r in prime_factors(n):
        if e % r != 0 or rest % r == 0:
            return False
    if n % 4 == 0 and field.q % 4 != 1:
        return False
    return True


def irreducible_binomial_constants(field: Field, n: int) -> list[int]:
    """All lam (encoded) for which x^n - lam is irreducible over the field."""
    return [lam for lam in range(1, field.q)
            if binomial_irreducible(field, n, lam)]
