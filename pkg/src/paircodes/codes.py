"""Construction of constacyclic codes from their ideal descriptions.

A code here is an ideal of a :class:`~paircodes.quotient.QuotientRing`,
described by one of five parameter records:

* ``FieldPower(i)``      -- <(x^n-a0)^i> over the field, 0 <= i <= p^s.
* ``ChainPrincipal(i)``  -- <(x^n-a0)^i> over the two-component ring with
  beta != 0 (a chain ring), 0 <= i <= 2*p^s.
* ``Type1(k)``           -- <(x^n-a0)^k> over the ring with beta = 0.
* ``Type2(j, k, b)``     -- <(x^n-a0)^j b(x) + u (x^n-a0)^k>, beta = 0, with
  b zero or a unit, 0 <= k <= p^s - 1 and ceil((p^s+k)/2) <= j <= p^s - 1.
* ``Type3(j, k, t, b)``  -- <(x^n-a0)^j b(x) + u (x^n-a0)^k, (x^n-a0)^(k+t)>,
  beta = 0, with 0 <= k <= p^s - 2, 1 <= t <= p^s - k - 1 and
  k + ceil(t/2) <= j <= k + t.

``build_code`` turns a record into an explicit GF(p)-basis in row-reduced
echelon form.  Codewords are laid out position-major: position t of a word
occupies columns [t*d, (t+1)*d) where d is the GF(p)-dimension of the
coefficient ring (m for the field, 2m with the a-part first for the
two-component ring).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import (
    BetaMismatch,
    ConstraintViolation,
    Exhausted,
    NotChainCode,
    NotUnitNorZero,
    RingMismatch,
)
from .quotient import QPoly, QuotientRing, binomial_power, consta_shift, qmul

DEFAULT_BUDGET = 1 << 21


@dataclass(frozen=True)
class FieldPower:
    i: int


@dataclass(frozen=True)
class ChainPrincipal:
    i: int


@dataclass(frozen=True)
class Type1:
    k: int


@dataclass(frozen=True)
class Type2:
    j: int
    k: int
    b: QPoly


@dataclass(frozen=True)
class Type3:
    j: int
    k: int
    t: int
    b: QPoly


CodeSpec = Union[FieldPower, ChainPrincipal, Type1, Type2, Type3]


def unit_kind(fq: QuotientRing, b: QPoly) -> str:
    """Classify b as "zero", "unit" or "neither" in the field quotient.

    b is a unit exactly when it is nonzero modulo the radical generator;
    folding x^n to alpha0 computes that remainder in one pass.
    """
    if b.ring != fq:
        raise RingMismatch("b must live in the companion field quotient")
    if b.is_zero():
        return "zero"
    field, n, a0 = fq.field, fq.n, fq.alpha0
    rem = [0] * n
    for d, c in enumerate(b.coeffs):
        if c:
            folded = field.mul(c, field.pow(a0, d // n))
            rem[d % n] = field.add(rem[d % n], folded)
    return "unit" if any(rem) else "neither"


def _require_unit_or_zero(fq: QuotientRing, b: QPoly) -> str:
    kind = unit_kind(fq, b)
    if kind == "neither":
        raise NotUnitNorZero(
            f"b = {b!r} is neither zero nor a unit of {fq!r}")
    return kind


def validate_spec(ring: QuotientRing, spec: CodeSpec) -> None:
    """Check a parameter record against its admissible range for the ring."""
    ps = ring.p ** ring.s
    if isinstance(spec, FieldPower):
        if ring.is_chain:
            raise BetaMismatch("FieldPower codes live over the plain field")
        if not 0 <= spec.i <= ps:
            raise ConstraintViolation(f"need 0 <= i <= {ps}, got i={spec.i}")
        return
    if not ring.is_chain:
        raise BetaMismatch(f"{type(spec).__name__} codes need the "
                           "two-component coefficient ring")
    if isinstance(spec, ChainPrincipal):
        if ring.beta == 0:
            raise BetaMismatch("ChainPrincipal needs beta != 0; with beta = 0 "
                               "use Type1/Type2/Type3")
        if not 0 <= spec.i <= 2 * ps:
            raise ConstraintViolation(
                f"need 0 <= i <= {2 * ps}, got i={spec.i}")
        return
    if ring.beta != 0:
        raise BetaMismatch(f"{type(spec).__name__} needs beta = 0; with "
                           "beta != 0 use ChainPrincipal")
    fq = ring.field_quotient()
    if isinstance(spec, Type1):
        if not 0 <= spec.k <= ps:
            raise ConstraintViolation(f"need 0 <= k <= {ps}, got k={spec.k}")
    elif isinstance(spec, Type2):
        if not 0 <= spec.k <= ps - 1:
            raise ConstraintViolation(
                f"need 0 <= k <= {ps - 1}, got k={spec.k}")
        lo = -(-(ps + spec.k) // 2)
        if not lo <= spec.j <= ps - 1:
            raise ConstraintViolation(
                f"need {lo} <= j <= {ps - 1} for k={spec.k}, got j={spec.j}")
        _require_unit_or_zero(fq, spec.b)
    elif isinstance(spec, Type3):
        if not 0 <= spec.k <= ps - 2:
            raise ConstraintViolation(
                f"need 0 <= k <= {ps - 2}, got k={spec.k}")
        if not 1 <= spec.t <= ps - spec.k - 1:
            raise ConstraintViolation(
                f"need 1 <= t <= {ps - spec.k - 1} for k={spec.k}, "
                f"got t={spec.t}")
        lo = spec.k + (-(-spec.t // 2))
        if not lo <= spec.j <= spec.k + spec.t:
            raise ConstraintViolation(
                f"need {lo} <= j <= {spec.k + spec.t} for k={spec.k}, "
                f"t={spec.t}, got j={spec.j}")
        _require_unit_or_zero(fq, spec.b)
    else:
        raise TypeError(f"not a code parameter record: {spec!r}")


def generators(ring: QuotientRing, spec: CodeSpec) -> list[QPoly]:
    """The defining generator polynomials, as elements of the quotient."""
    validate_spec(ring, spec)
    if isinstance(spec, (FieldPower, ChainPrincipal)):
        return [binomial_power(ring, spec.i)]
    fq = ring.field_quotient()
    if isinstance(spec, Type1):
        return [ring.embed(binomial_power(fq, spec.k))]
    head = ring.embed(qmul(binomial_power(fq, spec.j), spec.b)) \
        + ring.times_u(binomial_power(fq, spec.k))
    if isinstance(spec, Type2):
        return [head]
    return [head, ring.embed(binomial_power(fq, spec.k + spec.t))]


def log_size(ring: QuotientRing, spec: CodeSpec) -> int:
    """log_p of the code's cardinality, from the classification."""
    validate_spec(ring, spec)
    m, n, ps = ring.m, ring.n, ring.p ** ring.s
    if isinstance(spec, FieldPower):
        return m * (ring.N - n * spec.i)
    if isinstance(spec, ChainPrincipal):
        return m * n * (2 * ps - spec.i)
    if isinstance(spec, Type1):
        return 2 * m * n * (ps - spec.k)
    if isinstance(spec, Type2):
        return m * n * (ps - spec.k)
    return m * n * (2 * ps - 2 * spec.k - spec.t)


# --- GF(p) linear algebra ---------------------------------------------------

def rref_mod_p(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-reduced echelon form over GF(p); returns (nonzero rows, pivots)."""
    mat = np.array(mat, dtype=np.int64) % p
    rows, cols = mat.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        mat[r] = (mat[r] * pow(int(mat[r, c]), p - 2, p)) % p
        col = mat[:, c].copy()
        col[r] = 0
        mat = (mat - np.outer(col, mat[r])) % p
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {v : mat @ v = 0 (mod p)}."""
    mat = np.array(mat, dtype=np.int64) % p
    _, cols = mat.shape
    red, pivots = rref_mod_p(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    out = np.zeros((len(free), cols), dtype=np.int64)
    for idx, fc in enumerate(free):
        out[idx, fc] = 1
        for r, pc in enumerate(pivots):
            out[idx, pc] = (-int(red[r, fc])) % p
    return out


def word_coords(w: QPoly) -> np.ndarray:
    """GF(p) coordinate row of a word, position-major."""
    base = w.ring.base
    out = []
    for c in w.coeffs:
        out.extend(base.gfp_coords(c))
    return np.array(out, dtype=np.int64)


class ConstacyclicCode:
    """An ideal of the quotient, materialized as a GF(p) row space."""

    def __init__(self, ring: QuotientRing, spec: CodeSpec | None,
                 basis: np.ndarray, pivots: list[int]):
        self.ring = ring
        self.spec = spec
        basis = np.ascontiguousarray(basis, dtype=np.int64)
        basis.flags.writeable = False
        self.basis = basis
        self.pivots = pivots
        self.dim_p = basis.shape[0]

    @property
    def size(self) -> int:
        return self.ring.p ** self.dim_p

    @property
    def ncols(self) -> int:
        return self.ring.N * self.ring.base.gfp_dim

    # -- words <-> coordinate rows ------------------------------------------

    def word_to_coords(self, w: QPoly) -> np.ndarray:
        if w.ring != self.ring:
            raise RingMismatch("word lives in a different quotient")
        return word_coords(w)

    def coords_to_word(self, vec: Sequence[int]) -> QPoly:
        base = self.ring.base
        d = base.gfp_dim
        cs = [base.gfp_from_coords([int(x) % self.ring.p
                                    for x in vec[t * d:(t + 1) * d]])
              for t in range(self.ring.N)]
        return self.ring.poly(cs)

    # -- membership -----------------------------------------------------------

    def _reduce(self, vec: np.ndarray) -> np.ndarray:
        p = self.ring.p
        v = vec % p
        for row, c in zip(self.basis, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % p
        return v

    def contains(self, w: QPoly) -> bool:
        return not self._reduce(self.word_to_coords(w)).any()

    def contains_batch(self, words: np.ndarray) -> np.ndarray:
        """Vectorized membership for rows of GF(p) coordinates."""
        p = self.ring.p
        w = np.asarray(words, dtype=np.int64) % p
        if self.dim_p == 0:
            return ~w.any(axis=1)
        resid = (w - (w[:, self.pivots] @ self.basis)) % p
        return ~resid.any(axis=1)

    def contains_code(self, other: "ConstacyclicCode") -> bool:
        if other.ring != self.ring:
            raise RingMismatch("codes live in different quotients")
        if other.dim_p == 0:
            return True
        return bool(self.contains_batch(other.basis).all())

    def same_rowspace(self, other: "ConstacyclicCode") -> bool:
        return (self.dim_p == other.dim_p and self.contains_code(other))

    # -- enumeration ------------------------------------------------------------

    def codewords(self, budget: int = DEFAULT_BUDGET) -> Iterator[QPoly]:
        return enumerate_codewords(self, budget)

    def sample_coords(self, count: int, rng: random.Random) -> np.ndarray:
        """Rows of GF(p) coordinates for `count` random codewords."""
        p = self.ring.p
        if self.dim_p == 0:
            return np.zeros((count, self.ncols), dtype=np.int64)
        digits = np.array(
            [[rng.randrange(p) for _ in range(self.dim_p)]
             for _ in range(count)], dtype=np.int64)
        return (digits @ self.basis) % p

    def __repr__(self) -> str:
        return (f"ConstacyclicCode(dim_p={self.dim_p}, "
                f"spec={self.spec!r}, ring={self.ring!r})")


def ideal_code(ring: QuotientRing,
               gens: Sequence[QPoly]) -> ConstacyclicCode:
    """The ideal generated by arbitrary elements, as a row-reduced basis.

    Closure under multiplication by the whole quotient is obtained from the
    base-ring scalars and the N cyclic-with-wrap shifts of each generator.
    """
    base, p, N = ring.base, ring.p, ring.N
    scalars = base.gfp_basis()
    rows = []
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generator lives in a different quotient")
        w = g
        for _ in range(N):
            for e in scalars:
                rows.append(word_coords(w.scalar_mul(e)))
            w = consta_shift(w)
    if not rows:
        rows = [np.zeros(N * base.gfp_dim, dtype=np.int64)]
    basis, pivots = rref_mod_p(np.array(rows, dtype=np.int64), p)
    return ConstacyclicCode(ring, None, basis, pivots)


def build_code(ring: QuotientRing, spec: CodeSpec) -> ConstacyclicCode:
    """Materialize the ideal described by `spec` as a row-reduced basis."""
    raw = ideal_code(ring, generators(ring, spec))
    code = ConstacyclicCode(ring, spec, raw.basis, raw.pivots)
    assert code.dim_p == log_size(ring, spec), \
        f"rank {code.dim_p} != classified size exponent {log_size(ring, spec)}"
    return code


def enumerate_codewords(code: ConstacyclicCode,
                        budget: int = DEFAULT_BUDGET) -> Iterator[QPoly]:
    """Yield every codeword exactly once, or raise Exhausted up front.

    Order: mixed-radix counters over the basis rows, least significant row
    first; counter 0 is the zero word.
    """
    if code.size > budget:
        raise Exhausted(
            f"{code.size} codewords exceed the budget of {budget}")
    p, dim = code.ring.p, code.dim_p

    def walk() -> Iterator[QPoly]:
        for counter in range(code.size):
            digits, c = [], counter
            for _ in range(dim):
                c, r = divmod(c, p)
                digits.append(r)
            if dim:
                vec = (np.array(digits, dtype=np.int64) @ code.basis) % p
            else:
                vec = np.zeros(code.ncols, dtype=np.int64)
            yield code.coords_to_word(vec)

    return walk()


def consta_shift_matrix(ring: QuotientRing) -> np.ndarray:
    """Matrix S with coords(x * w) = coords(w) @ S (mod p)."""
    base = ring.base
    d, N = base.gfp_dim, ring.N
    S = np.zeros((N * d, N * d), dtype=np.int64)
    for t in range(N - 1):
        for r, e in enumerate(base.gfp_basis()):
            S[t * d + r, (t + 1) * d:(t + 2) * d] = base.gfp_coords(e)
    for r, e in enumerate(base.gfp_basis()):
        S[(N - 1) * d + r, 0:d] = base.gfp_coords(base.mul(ring.lam, e))
    return S


def restrict_subfield(code: ConstacyclicCode) -> ConstacyclicCode:
    """Subcode of words with every coefficient in the field (b-part zero),
    viewed over the companion field quotient."""
    ring = code.ring
    if not ring.is_chain:
        raise NotChainCode("the code is already over the field")
    m, N, p = ring.m, ring.N, ring.p
    a_cols = [t * 2 * m + r for t in range(N) for r in range(m)]
    b_cols = [t * 2 * m + m + r for t in range(N) for r in range(m)]
    fq = ring.field_quotient()
    if code.dim_p == 0:
        empty = np.zeros((0, N * m), dtype=np.int64)
        return ConstacyclicCode(fq, None, empty, [])
    Bb = code.basis[:, b_cols]
    K = nullspace_mod_p(Bb.T, p)          # rows c with c @ Bb = 0
    rows = (K @ code.basis[:, a_cols]) % p
    basis, pivots = rref_mod_p(rows, p)
    return ConstacyclicCode(fq, None, basis, pivots)


def random_unit(fq: QuotientRing, rng: random.Random) -> QPoly:
    """A uniformly random unit of the field quotient."""
    if fq.is_chain:
        raise RingMismatch("unit sampling targets the field quotient")
    q = fq.field.q
    while True:
        f = fq.poly([rng.randrange(q) for _ in range(fq.N)])
        if unit_kind(fq, f) == "unit":
            return f


def unit_inverse(fq: QuotientRing, b: QPoly) -> QPoly:
    """Inverse of a unit of the field quotient, by GF(p) linear algebra."""
    if unit_kind(fq, b) != "unit":
        raise NotUnitNorZero(f"{b!r} is not a unit of {fq!r}")
    base, p, N = fq.field, fq.p, fq.N
    cols = []
    for t in range(N):
        for e in base.gfp_basis():
            cols.append(word_coords(qmul(b, fq.monomial(t, e))))
    M = np.array(cols, dtype=np.int64).T  # M @ coords(g) = coords(b*g)
    C = M.shape[0]
    rhs = word_coords(fq.one())
    red, pivots = rref_mod_p(np.concatenate([M, rhs[:, None]], axis=1), p)
    x = np.zeros(C, dtype=np.int64)
    for r, c in zip(range(len(pivots)), pivots):
        x[c] = red[r, C]
    cs = [base.gfp_from_coords([int(v) for v in x[t * base.gfp_dim:
                                                  (t + 1) * base.gfp_dim]])
          for t in range(N)]
    return fq.poly(cs)


# --- textual parameter records ------------------------------------------------

def spec_to_text(spec: CodeSpec) -> str:
    """Compact text form, e.g. "field-power:i=2" or "type2:j=7,k=1,b=1".

    The b value, always last, is the polynomial in the usual coefficient
    syntax (and may itself contain commas).
    """
    if isinstance(spec, FieldPower):
        return f"field-power:i={spec.i}"
    if isinstance(spec, ChainPrincipal):
        return f"chain:i={spec.i}"
    if isinstance(spec, Type1):
        return f"type1:k={spec.k}"
    if isinstance(spec, Type2):
        return f"type2:j={spec.j},k={spec.k},b={_poly_text_short(spec.b)}"
    if isinstance(spec, Type3):
        return (f"type3:j={spec.j},k={spec.k},t={spec.t},"
                f"b={_poly_text_short(spec.b)}")
    raise TypeError(f"not a code parameter record: {spec!r}")


def _poly_text_short(f: QPoly) -> str:
    text = f.ring.format_poly(f)
    parts = text.split(",")
    while len(parts) > 1 and parts[-1] == "0":
        parts.pop()
    return ",".join(parts)


def spec_from_text(text: str, ring: QuotientRing) -> CodeSpec:
    """Parse the compact text form; b, if present, must be the last key."""
    head, _, body = text.strip().partition(":")
    head = head.strip().lower()
    fields: dict[str, str] = {}
    rest = body.strip()
    while rest:
        key, eq, tail = rest.partition("=")
        key = key.strip().lower()
        if not eq:
            raise ConstraintViolation(f"malformed parameter text: {text!r}")
        if key == "b":
            fields["b"] = tail.strip()
            break
        val, _, rest = tail.partition(",")
        fields[key] = val.strip()

    def intval(k: str) -> int:
        if k not in fields:
            raise ConstraintViolation(f"missing {k}= in {text!r}")
        return int(fields[k])

    def bval() -> QPoly:
        if "b" not in fields:
            raise ConstraintViolation(f"missing b= in {text!r}")
        return ring.field_quotient().parse_poly(fields["b"])

    if head == "field-power":
        return FieldPower(i=intval("i"))
    if head == "chain":
        return ChainPrincipal(i=intval("i"))
    if head == "type1":
        return Type1(k=intval("k"))
    if head == "type2":
        return Type2(j=intval("j"), k=intval("k"), b=bval())
    if head == "type3":
        return Type3(j=intval("j"), k=intval("k"), t=intval("t"), b=bval())
    raise ConstraintViolation(f"unknown code family {head!r}")


def spec_generator_text(ring: QuotientRing, spec: CodeSpec) -> str:
    """Human-readable generator description for tables."""
    a0 = ring.field.format_coeff(ring.alpha0)
    g = f"x^{ring.n}-{a0}" if ring.n > 1 else f"x-{a0}"

    def pw(e: int) -> str:
        if e == 0:
            return "1"
        return f"({g})" if e == 1 else f"({g})^{e}"

    if isinstance(spec, (FieldPower, ChainPrincipal)):
        return pw(spec.i)
    if isinstance(spec, Type1):
        return pw(spec.k)
    if isinstance(spec, Type2):
        kind = unit_kind(ring.field_quotient(), spec.b)
        if kind == "zero":
            return f"u{pw(spec.k)}"
        return f"{pw(spec.j)}b + u{pw(spec.k)}"
    kind = unit_kind(ring.field_quotient(), spec.b)
    head = f"u{pw(spec.k)}" if kind == "zero" else f"{pw(spec.j)}b + u{pw(spec.k)}"
    return f"<{head}, {pw(spec.k + spec.t)}>"
