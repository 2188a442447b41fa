"""Commutator presentations of anagram groups.

The anagram group of a word list is the free group on its letters modulo
``w1 = w2`` for every pair of anagrams.  :func:`run` searches the list for
commutators of generators, reduces the remaining relations with them and
checks that the commutators found account for every anagram.
"""
from .anagraph import Anagraph, AnagraphStore, build_anagraphs, component_pairs, reduce_store, reduce_word
from .ingest import Dictionary, DictionaryFormatError, load_dictionary
from .model import (
    ALPHABET,
    CommutationSet,
    CommutatorWitness,
    SwapCertificate,
    is_anagram,
    letter_count,
    removable_letters,
)
from .pipeline import (
    IterationLimitError,
    IterationStats,
    RunConfig,
    RunResult,
    VerificationReport,
    process_residuals,
    run,
    verify_containment,
)
from .traces import (
    CertificateError,
    check_certificate,
    extract_commutator,
    find_certificate,
    projection,
    scan_for_commutators,
    trace_equal,
)

__all__ = [
    "ALPHABET", "Anagraph", "AnagraphStore", "CertificateError", "CommutationSet",
    "CommutatorWitness", "Dictionary", "DictionaryFormatError", "IterationLimitError",
    "IterationStats", "RunConfig", "RunResult", "SwapCertificate", "VerificationReport",
    "build_anagraphs", "check_certificate", "component_pairs", "extract_commutator",
    "find_certificate", "is_anagram", "letter_count", "load_dictionary", "process_residuals",
    "projection", "reduce_store", "reduce_word", "removable_letters", "run",
    "scan_for_commutators", "trace_equal", "verify_containment",
]
