"""Constacyclic codes of length n*p^s over GF(p^m) and GF(p^m)+uGF(p^m),
their symbol-pair distances, and MDS classification."""

__version__ = "0.1.0"

from .errors import PairCodeError
from .galois import (
    ChainElement,
    ChainRing,
    Field,
    FieldElement,
    binomial_irreducible,
    element_order,
    irreducible_binomial_constants,
)
from .quotient import (
    QPoly,
    QuotientRing,
    binomial_power,
    coefficient_weight,
    consta_shift,
    qmul,
)
from .codes import (
    DEFAULT_BUDGET,
    ChainPrincipal,
    CodeSpec,
    ConstacyclicCode,
    FieldPower,
    Type1,
    Type2,
    Type3,
    build_code,
    enumerate_codewords,
    generators,
    ideal_code,
    log_size,
    random_unit,
    restrict_subfield,
    spec_from_text,
    spec_generator_text,
    spec_to_text,
    unit_inverse,
    unit_kind,
    validate_spec,
)
from .pairmetric import (
    DistanceReport,
    block_decomposition,
    hamming_distance,
    hamming_weight,
    min_distance_brute,
    pair_distance,
    pair_vector,
    pair_weight,
    scan_minima,
)
from .theory import (
    BranchWitness,
    MdsVerdict,
    ScanEntry,
    ScanReport,
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

__all__ = [name for name in dir() if not name.startswith("_")]
