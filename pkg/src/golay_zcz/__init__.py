"""
golay-zcz - Golay complementary pairs, complete complementary codes and
Golay-ZCZ sequence sets, with an exact correlation engine
"""

from .ccc import gcp_to_ccc, kronecker_ccc, reachable_lengths, transpose_ccc, verify_ccc
from .correlation import CorrelationProfile, aacf, aacs_sum, accf, pacf, pccf, periodic_from_aperiodic
from .errors import GolayZczError
from .golay import GolayPair, SignQuadruple, build_theorem1_pair, golay_mate, mate_property, verify_gcp
from .models import SearchConfig, ZczReport
from .search import SearchResult, canonicalize, search_ccc
from .seeds import list_seeds, seed_registry
from .seqcore import (
    ComplementarySet,
    CompleteComplementaryCode,
    ComplexValue,
    PhaseSequence,
    concat,
    conjugate,
    kronecker,
    negate,
    reverse,
)
from .zczset import IdftMatrix, build_theorem2_set, measure_golay_zcz, optimality_factor, verify_golay_zcz

__version__ = "1.0.0"

__all__ = [
    'PhaseSequence',
    'ComplementarySet',
    'CompleteComplementaryCode',
    'ComplexValue',
    'reverse',
    'conjugate',
    'negate',
    'concat',
    'kronecker',
    'CorrelationProfile',
    'pccf',
    'accf',
    'pacf',
    'aacf',
    'aacs_sum',
    'periodic_from_aperiodic',
    'GolayPair',
    'SignQuadruple',
    'verify_gcp',
    'golay_mate',
    'mate_property',
    'build_theorem1_pair',
    'verify_ccc',
    'transpose_ccc',
    'kronecker_ccc',
    'gcp_to_ccc',
    'reachable_lengths',
    'seed_registry',
    'list_seeds',
    'IdftMatrix',
    'build_theorem2_set',
    'measure_golay_zcz',
    'verify_golay_zcz',
    'optimality_factor',
    'SearchConfig',
    'ZczReport',
    'SearchResult',
    'search_ccc',
    'canonicalize',
    'GolayZczError',
]
