import random

import pytest

from paircodes.codes import (
    ChainPrincipal,
    FieldPower,
    Type1,
    Type2,
    Type3,
    build_code,
    random_unit,
)
from paircodes.errors import ConstraintViolation, ExponentOutOfRange
from paircodes.galois import Field
from paircodes.pairmetric import hamming_weight
from paircodes.quotient import QuotientRing, binomial_power
from paircodes.theory import (
    all_code_specs,
    binomial_power_weight,
    consistency_scan,
    exponent_interval,
    mds_classify,
    mds_verdict,
    min_hamming_distance,
    min_pair_distance,
    min_pair_distance_chain,
    min_pair_distance_field,
)


def test_binomial_power_weight_is_digit_product():
    assert binomial_power_weight(3, 2, 4) == 4      # digits (1,1)
    assert binomial_power_weight(3, 2, 7) == 6      # digits (1,2)
    assert binomial_power_weight(2, 3, 7) == 8      # digits (1,1,1)
    assert binomial_power_weight(5, 1, 3) == 4
    assert binomial_power_weight(3, 2, 0) == 1
    with pytest.raises(ExponentOutOfRange):
        binomial_power_weight(3, 2, 9)


def test_binomial_power_weight_matches_expansion():
    for p, s, n, a0 in [(2, 3, 1, 1), (3, 2, 1, 2), (5, 1, 2, 2), (3, 2, 2, 2)]:
        ring = QuotientRing(Field(p, 1), n, s, a0)
        for i in range(p ** s):
            assert binomial_power_weight(p, s, i) == \
                hamming_weight(binomial_power(ring, i)), (p, s, n, i)


def test_exponent_intervals_tile_the_range():
    for p, s in [(2, 1), (2, 4), (3, 3), (5, 2), (7, 1)]:
        seen = []
        for i in range(1, p ** s):
            k, theta, lo, hi = exponent_interval(p, s, i)
            assert lo <= i <= hi
            assert 0 <= k <= s - 1
            assert 0 <= theta <= p - 2
            assert lo == p ** s - p ** (s - k) + theta * p ** (s - k - 1) + 1
            assert hi == lo + p ** (s - k - 1) - 1
            seen.append((k, theta))
        # each (k, theta) interval is contiguous and the blocks are ordered
        assert seen == sorted(seen)
    with pytest.raises(ExponentOutOfRange):
        exponent_interval(3, 2, 0)
    with pytest.raises(ExponentOutOfRange):
        exponent_interval(3, 2, 9)


def test_min_hamming_distance_values():
    # p=3, s=1: 1, 2, 3, 0
    assert [min_hamming_distance(3, 1, i) for i in range(4)] == [1, 2, 3, 0]
    # p=3, s=2: theta+2 on the k=0 blocks, tripled on k=1
    assert [min_hamming_distance(3, 2, i) for i in range(10)] == \
        [1, 2, 2, 2, 3, 3, 3, 6, 9, 0]
    # p=2, s=3
    assert [min_hamming_distance(2, 3, i) for i in range(9)] == \
        [1, 2, 2, 2, 2, 4, 4, 8, 0]


def test_min_pair_distance_field_n1_rows():
    # p=3, s=2, n=1 (length 9)
    got = [min_pair_distance_field(1, 3, 2, i)[0] for i in range(10)]
    assert got == [2, 3, 4, 4, 6, 6, 6, 9, 9, 0]
    # p=2, s=3, n=1 (length 8)
    got = [min_pair_distance_field(1, 2, 3, i)[0] for i in range(9)]
    assert got == [2, 3, 4, 4, 4, 6, 8, 8, 0]
    # p=5, s=1, n=1 (length 5): i+2 up to the last exponent, then p^s
    got = [min_pair_distance_field(1, 5, 1, i)[0] for i in range(6)]
    assert got == [2, 3, 4, 5, 5, 0]


def test_min_pair_distance_field_n2_rows():
    # n >= 2: 2(theta+2)p^k throughout
    got = [min_pair_distance_field(2, 3, 1, i)[0] for i in range(4)]
    assert got == [2, 4, 6, 0]
    got = [min_pair_distance_field(2, 3, 2, i)[0] for i in range(10)]
    assert got == [2, 4, 4, 4, 6, 6, 6, 12, 18, 0]
    got = [min_pair_distance_field(3, 2, 2, i)[0] for i in range(5)]
    assert got == [2, 4, 4, 8, 0]


def test_min_pair_distance_field_guards():
    with pytest.raises(ConstraintViolation):
        min_pair_distance_field(3, 3, 1, 1)         # gcd(n, p) != 1
    with pytest.raises(ConstraintViolation):
        min_pair_distance_field(0, 3, 1, 1)
    with pytest.raises(ExponentOutOfRange):
        min_pair_distance_field(1, 3, 1, 4)


def test_formula_branches_reported():
    _, w = min_pair_distance_field(1, 3, 2, 1)
    assert w.rule == "n=1 interval-start" and w.k == 0
    _, w = min_pair_distance_field(1, 3, 2, 8)
    assert w.rule == "n=1 last-exponent"
    _, w = min_pair_distance_field(2, 3, 2, 5)
    assert w.rule == "n>=2" and (w.k, w.theta) == (0, 1)


def test_pair_vs_hamming_formula_relations():
    for p, s, n in [(2, 3, 1), (3, 2, 1), (5, 1, 1), (3, 2, 2), (2, 2, 3)]:
        N = n * p ** s
        prev = None
        for i in range(p ** s):
            d_h = min_hamming_distance(p, s, i)
            d_sp, _ = min_pair_distance_field(n, p, s, i)
            if d_h < N:
                assert d_h < d_sp <= 2 * d_h
            else:
                assert d_sp == N                    # full-weight words gain nothing
            if prev is not None:
                assert d_sp >= prev                 # nondecreasing before the end
            prev = d_sp


def test_min_pair_distance_chain_beta_nonzero():
    ring = QuotientRing(Field(3, 1), 1, 2, 1, beta=1)
    for i in range(10):
        assert min_pair_distance_chain(ring, ChainPrincipal(i)) == 2
    for r in range(1, 10):
        assert min_pair_distance_chain(ring, ChainPrincipal(9 + r)) == \
            min_pair_distance_field(1, 3, 2, r)[0]


def test_min_pair_distance_chain_beta_zero():
    ring = QuotientRing(Field(3, 1), 1, 2, 1, beta=0)
    fq = ring.field_quotient()
    one = fq.one()
    # the two refuted claims: both collapse to small actual distances
    assert min_pair_distance_chain(ring, Type2(j=7, k=1, b=one)) == 4
    ring2 = QuotientRing(Field(2, 1), 1, 3, 1, beta=0)
    assert min_pair_distance_chain(
        ring2, Type2(j=5, k=0, b=ring2.field_quotient().one())) == 4
    # b = 0 falls back to the plain field value at k
    assert min_pair_distance_chain(ring, Type2(j=7, k=1, b=fq.zero())) == \
        min_pair_distance_field(1, 3, 2, 1)[0]
    # Type1 is the field value at k
    for k in range(10):
        assert min_pair_distance_chain(ring, Type1(k)) == \
            min_pair_distance_field(1, 3, 2, k)[0]
    # Type3 with unit b reads the field value at 2k + t - j
    assert min_pair_distance_chain(ring, Type3(j=5, k=2, t=4, b=one)) == \
        min_pair_distance_field(1, 3, 2, 2 * 2 + 4 - 5)[0]


def test_mds_verdicts_field():
    ring = QuotientRing(Field(3, 1), 2, 1, 2)
    v = mds_verdict(ring, FieldPower(1))
    assert v.d_sp == 4 and v.singleton_defect == 0 and v.is_mds and not v.trivial
    v = mds_verdict(ring, FieldPower(0))
    assert v.is_mds and v.trivial
    v = mds_verdict(ring, FieldPower(3))
    assert not v.is_mds and v.trivial and v.singleton_defect > 0
    ring9 = QuotientRing(Field(3, 1), 1, 2, 1)
    mds_set = {v.spec.i for v in mds_classify(ring9) if v.is_mds and not v.trivial}
    assert mds_set == {1, 2, 4, 7}


def test_mds_classify_chain_beta_nonzero_only_trivial():
    for p, beta in [(2, 1), (3, 1), (3, 2)]:
        field = Field(p, 1)
        ring = QuotientRing(field, 1, 2, 1, beta=beta)
        verdicts = mds_classify(ring)
        mds = [v for v in verdicts if v.is_mds]
        assert len(mds) == 1
        assert isinstance(mds[0].spec, ChainPrincipal) and mds[0].spec.i == 0
        assert mds[0].trivial


def test_all_code_specs_cover_beta_zero_families():
    ring = QuotientRing(Field(2, 1), 1, 2, 1, beta=0)
    rng = random.Random(5)
    specs = all_code_specs(ring, unit_samples=1, rng=rng)
    kinds = {type(s).__name__ for s in specs}
    assert kinds == {"Type1", "Type2", "Type3"}
    # Type2 range: k in [0,3], j in [ceil((4+k)/2), 3]
    t2 = [(s.j, s.k) for s in specs if isinstance(s, Type2)]
    assert set(t2) == {(2, 0), (3, 0), (3, 1), (3, 2)}
    t3 = [(s.j, s.k, s.t) for s in specs if isinstance(s, Type3)]
    assert (1, 0, 2) in t3 and (3, 2, 1) in t3
    for j, k, t in t3:
        assert k + (t + 1) // 2 <= j <= k + t and 1 <= t <= 4 - k - 1


def test_consistency_scan_field_ring():
    ring = QuotientRing(Field(2, 1), 1, 2, 1)
    report = consistency_scan(ring)
    assert report.ok and report.skipped == 0
    assert len(report.entries) == 5
    d = report.to_dict()
    assert d["ok"] and d["checked"] == 5


def test_consistency_scan_chain_rings():
    report = consistency_scan(QuotientRing(Field(2, 1), 1, 2, 1, beta=1))
    assert report.ok and report.skipped == 0
    rng = random.Random(2)
    report = consistency_scan(QuotientRing(Field(2, 1), 1, 2, 1, beta=0),
                              unit_samples=2, rng=rng)
    assert report.ok and report.skipped == 0


def test_mds_classify_with_oracle_budget():
    # must complete without raising VerificationMismatch
    ring = QuotientRing(Field(3, 1), 2, 1, 2)
    verdicts = mds_classify(ring, budget=1 << 10)
    assert [v.d_sp for v in verdicts] == [2, 4, 6, 0]


def test_min_pair_distance_dispatches_by_family():
    fring = QuotientRing(Field(3, 1), 2, 1, 2)
    assert min_pair_distance(fring, FieldPower(2)) == 6
    cring = QuotientRing(Field(3, 1), 2, 1, 2, beta=1)
    assert min_pair_distance(cring, ChainPrincipal(4)) == \
        min_pair_distance_field(2, 3, 1, 1)[0]
