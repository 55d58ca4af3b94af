import random

import numpy as np
import pytest

from paircodes.codes import (
    ChainPrincipal,
    ConstacyclicCode,
    FieldPower,
    Type1,
    Type2,
    Type3,
    build_code,
    consta_shift_matrix,
    enumerate_codewords,
    generators,
    log_size,
    nullspace_mod_p,
    random_unit,
    restrict_subfield,
    rref_mod_p,
    spec_from_text,
    spec_generator_text,
    spec_to_text,
    unit_inverse,
    unit_kind,
    word_coords,
)
from paircodes.errors import (
    BetaMismatch,
    ConstraintViolation,
    Exhausted,
    NotChainCode,
    NotUnitNorZero,
    RingMismatch,
)
from paircodes.galois import Field
from paircodes.quotient import QuotientRing, binomial_power, consta_shift, qmul
from paircodes.theory import all_code_specs


F3 = Field(3, 1)
F2 = Field(2, 1)


def _small_rings():
    return [
        QuotientRing(F3, 2, 1, 2),                 # field, N = 6
        QuotientRing(F2, 1, 2, 1),                 # field, N = 4
        QuotientRing(Field(3, 2), 1, 1, 5),        # field GF(9), N = 3
        QuotientRing(F2, 1, 2, 1, beta=1),         # chain beta != 0, N = 4
        QuotientRing(F3, 1, 1, 2, beta=2),         # chain beta != 0, N = 3
        QuotientRing(F3, 2, 1, 2, beta=0),         # beta = 0, N = 6
        QuotientRing(F2, 1, 2, 1, beta=0),         # beta = 0, N = 4
    ]


def test_dimension_matches_classified_size_everywhere():
    rng = random.Random(11)
    for ring in _small_rings():
        for spec in all_code_specs(ring, unit_samples=2, rng=rng):
            code = build_code(ring, spec)
            assert code.dim_p == log_size(ring, spec), spec_to_text(spec)


def test_field_codes_are_nested():
    ring = QuotientRing(F3, 1, 2, 1)
    codes = [build_code(ring, FieldPower(i)) for i in range(10)]
    for big, small in zip(codes, codes[1:]):
        assert big.contains_code(small)
        assert not small.contains_code(big)


def test_chain_principal_codes_are_nested():
    ring = QuotientRing(F2, 1, 2, 1, beta=1)
    codes = [build_code(ring, ChainPrincipal(i)) for i in range(9)]
    for big, small in zip(codes, codes[1:]):
        assert big.contains_code(small)


def test_generator_membership_and_unit_exclusion():
    for ring in _small_rings():
        specs = [FieldPower(1)] if not ring.is_chain else (
            [ChainPrincipal(1)] if ring.beta != 0 else [Type1(1)])
        for spec in specs:
            code = build_code(ring, spec)
            for g in generators(ring, spec):
                assert code.contains(g)
            assert not code.contains(ring.one())


def test_contains_checks_ring():
    r1 = QuotientRing(F3, 2, 1, 2)
    r2 = QuotientRing(F3, 1, 1, 1)
    code = build_code(r1, FieldPower(1))
    with pytest.raises(RingMismatch):
        code.contains(r2.one())


def test_enumeration_is_complete_and_distinct():
    ring = QuotientRing(F3, 2, 1, 2)
    code = build_code(ring, FieldPower(1))         # 81 words
    words = list(enumerate_codewords(code, budget=100))
    assert len(words) == 81
    assert len({w.coeffs for w in words}) == 81
    assert all(code.contains(w) for w in words)
    shifted_ok = all(code.contains(consta_shift(w)) for w in words)
    assert shifted_ok


def test_enumeration_budget():
    ring = QuotientRing(F3, 2, 1, 2)
    code = build_code(ring, FieldPower(1))
    with pytest.raises(Exhausted):
        enumerate_codewords(code, budget=80)
    # Exhausted must fire before any word is produced
    gen = None
    try:
        gen = enumerate_codewords(code, budget=80)
    except Exhausted:
        assert gen is None


def test_full_space_and_zero_code():
    ring = QuotientRing(F2, 1, 2, 1)
    full = build_code(ring, FieldPower(0))
    assert full.dim_p == 4 and full.size == 16
    zero = build_code(ring, FieldPower(4))
    assert zero.dim_p == 0 and zero.size == 1
    words = list(enumerate_codewords(zero, budget=2))
    assert len(words) == 1 and words[0].is_zero()


def test_chain_high_powers_are_u_times_field_code():
    # over the beta != 0 ring, <(x^n-a0)^(p^s + r)> = u * <(x^n-a0)^r>
    ring = QuotientRing(F2, 1, 2, 1, beta=1)
    fq = ring.field_quotient()
    for r in range(5):
        code = build_code(ring, ChainPrincipal(4 + r))
        fcode = build_code(fq, FieldPower(r))
        for w in enumerate_codewords(code, budget=1 << 10):
            assert all(ring.base.a_of(c) == 0 for c in w.coeffs)
            proj = fq.poly([ring.base.b_of(c) for c in w.coeffs])
            assert fcode.contains(proj)
        assert code.dim_p == fcode.dim_p


def test_spec_validation_errors():
    field_ring = QuotientRing(F3, 2, 1, 2)
    chain1 = QuotientRing(F3, 2, 1, 2, beta=1)
    chain0 = QuotientRing(F3, 2, 1, 2, beta=0)
    fq = chain0.field_quotient()
    with pytest.raises(BetaMismatch):
        build_code(chain1, FieldPower(1))
    with pytest.raises(BetaMismatch):
        build_code(field_ring, ChainPrincipal(1))
    with pytest.raises(BetaMismatch):
        build_code(chain0, ChainPrincipal(1))
    with pytest.raises(BetaMismatch):
        build_code(chain1, Type1(1))
    with pytest.raises(ConstraintViolation):
        build_code(field_ring, FieldPower(5))      # i > p^s
    with pytest.raises(ConstraintViolation):
        build_code(chain0, Type2(j=1, k=1, b=fq.one()))   # j < ceil((p^s+k)/2)
    with pytest.raises(ConstraintViolation):
        build_code(chain0, Type3(j=0, k=0, t=2, b=fq.one()))  # j < k+ceil(t/2)
    with pytest.raises(ConstraintViolation):
        build_code(chain0, Type3(j=1, k=0, t=3, b=fq.one()))  # t > p^s-k-1
    # b must be zero or a unit: the radical generator itself is neither
    with pytest.raises(NotUnitNorZero):
        build_code(chain0, Type2(j=2, k=0, b=binomial_power(fq, 1)))


def test_unit_kind_and_inverse():
    ring = QuotientRing(F3, 2, 1, 2)
    assert unit_kind(ring, ring.zero()) == "zero"
    assert unit_kind(ring, ring.one()) == "unit"
    assert unit_kind(ring, binomial_power(ring, 1)) == "neither"
    assert unit_kind(ring, binomial_power(ring, 2)) == "neither"
    rng = random.Random(9)
    for _ in range(10):
        b = random_unit(ring, rng)
        binv = unit_inverse(ring, b)
        assert qmul(b, binv) == ring.one()
    with pytest.raises(NotUnitNorZero):
        unit_inverse(ring, binomial_power(ring, 1))


def test_random_unit_deterministic():
    ring = QuotientRing(F3, 2, 1, 2)
    a = random_unit(ring, random.Random(42))
    b = random_unit(ring, random.Random(42))
    assert a == b


def test_restrict_subfield_matches_field_power():
    ring = QuotientRing(F3, 2, 1, 2, beta=0)
    fq = ring.field_quotient()
    for k in range(4):
        sub = restrict_subfield(build_code(ring, Type1(k)))
        assert sub.same_rowspace(build_code(fq, FieldPower(k)))
    with pytest.raises(NotChainCode):
        restrict_subfield(build_code(fq, FieldPower(1)))


def test_restrict_subfield_words_lift_back():
    ring = QuotientRing(F3, 2, 1, 2, beta=0)
    rng = random.Random(13)
    b = random_unit(ring.field_quotient(), rng)
    code = build_code(ring, Type2(j=2, k=1, b=b))
    sub = restrict_subfield(code)
    for w in enumerate_codewords(sub, budget=1 << 12):
        assert code.contains(ring.embed(w))


def test_spec_text_roundtrip():
    chain0 = QuotientRing(F3, 1, 2, 1, beta=0)
    fq = chain0.field_quotient()
    samples = [
        (FieldPower(2), "field-power:i=2"),
        (ChainPrincipal(10), "chain:i=10"),
        (Type1(3), "type1:k=3"),
        (Type2(j=7, k=1, b=fq.one()), "type2:j=7,k=1,b=1"),
        (Type3(j=5, k=2, t=4, b=fq.zero()), "type3:j=5,k=2,t=4,b=0"),
    ]
    for spec, text in samples:
        assert spec_to_text(spec) == text
    ring_for = {
        "field-power:i=2": QuotientRing(F3, 1, 2, 1),
        "chain:i=10": QuotientRing(F3, 1, 2, 1, beta=1),
        "type1:k=3": chain0,
        "type2:j=7,k=1,b=1": chain0,
        "type3:j=5,k=2,t=4,b=0": chain0,
    }
    for spec, text in samples:
        assert spec_from_text(text, ring_for[text]) == spec
    # b may itself contain commas (a full polynomial); it must parse greedily
    spec = spec_from_text("type2:j=7,k=1,b=1,2,0,1", chain0)
    assert spec.b == fq.poly([1, 2, 0, 1] + [0] * 5)
    with pytest.raises(ConstraintViolation):
        spec_from_text("type9:k=1", chain0)
    with pytest.raises(ConstraintViolation):
        spec_from_text("type2:j=7,k=1", chain0)    # missing b


def test_spec_generator_text():
    chain0 = QuotientRing(F3, 2, 1, 2, beta=0)
    fq = chain0.field_quotient()
    assert spec_generator_text(chain0, Type1(2)) == "(x^2-2)^2"
    assert spec_generator_text(
        chain0, Type2(j=2, k=1, b=fq.one())) == "(x^2-2)^2b + u(x^2-2)"
    assert spec_generator_text(
        chain0, Type2(j=2, k=1, b=fq.zero())) == "u(x^2-2)"


def test_consta_shift_matrix_agrees_with_shift():
    rng = random.Random(3)
    for ring in _small_rings():
        S = consta_shift_matrix(ring)
        size = ring.base.size if ring.is_chain else ring.field.q
        for _ in range(20):
            w = ring.poly([rng.randrange(size) for _ in range(ring.N)])
            lhs = (word_coords(w) @ S) % ring.p
            rhs = word_coords(consta_shift(w))
            assert np.array_equal(lhs, rhs)


def test_rref_and_nullspace():
    rng = random.Random(17)
    for p in (2, 3, 5):
        for _ in range(20):
            rows = rng.randrange(1, 6)
            cols = rng.randrange(1, 8)
            M = np.array([[rng.randrange(p) for _ in range(cols)]
                          for _ in range(rows)])
            R, piv = rref_mod_p(M, p)
            assert len(piv) == R.shape[0] <= min(rows, cols)
            for r, c in zip(range(len(piv)), piv):
                assert R[r, c] == 1
                col = R[:, c].copy()
                col[r] = 0
                assert not col.any()
            NS = nullspace_mod_p(M, p)
            assert NS.shape[0] == cols - len(piv)
            if NS.size:
                assert not ((M @ NS.T) % p).any()


def test_same_rowspace_on_different_generating_sets():
    # <(x^2-a0)> built from the generator vs from generator * unit
    ring = QuotientRing(F3, 2, 1, 2)
    rng = random.Random(23)
    g = binomial_power(ring, 1)
    base_code = build_code(ring, FieldPower(1))
    for _ in range(5):
        unit = random_unit(ring, rng)
        rows = []
        w = qmul(g, unit)
        for _ in range(ring.N):
            for e in ring.base.gfp_basis():
                rows.append(word_coords(w.scalar_mul(e)))
            w = consta_shift(w)
        basis, piv = rref_mod_p(np.array(rows), ring.p)
        other = ConstacyclicCode(ring, None, basis, piv)
        assert base_code.same_rowspace(other)
