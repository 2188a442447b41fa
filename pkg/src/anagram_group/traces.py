"""Word equivalence modulo commuting generators, and commutator extraction.

Two words are equal modulo a commutation set ``I`` exactly when they have the
same letters and agree on their projection onto every pair of letters that
does not commute.  This is the usual projection criterion for partially
commutative monoids and needs no normal forms.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Optional

from .anagraph import Anagraph, AnagraphStore, component_pairs
from .model import (
    CommutationSet,
    CommutatorWitness,
    Iteration,
    Pair,
    SwapCertificate,
    canonical_pair,
    is_anagram,
)

log = logging.getLogger(__name__)


class CertificateError(RuntimeError):
    """No swap certificate could be built for a claimed commutator."""


def projection(word: str, a: str, b: str) -> str:
    """Subsequence of ``word`` made of its ``a`` and ``b`` letters."""
    if a == b:
        raise ValueError("projection needs two distinct letters")
    return "".join(ch for ch in word if ch == a or ch == b)


def differing_pairs(w1: str, w2: str, known: CommutationSet) -> list[Pair]:
    """Non-commuting letter pairs on which two anagrams' projections differ."""
    out = []
    for a, b in combinations(sorted(set(w1)), 2):
        if known.commutes(a, b):
            continue
        if projection(w1, a, b) != projection(w2, a, b):
            out.append((a, b))
    return out


def trace_equal(w1: str, w2: str, known: CommutationSet) -> bool:
    if w1 == w2:
        return True
    if not is_anagram(w1, w2):
        return False
    for a, b in combinations(sorted(set(w1)), 2):
        if not known.commutes(a, b) and projection(w1, a, b) != projection(w2, a, b):
            return False
    return True


def _single_transposition(p1: str, p2: str) -> Optional[int]:
    """Index k such that p2 is p1 with entries k, k+1 exchanged, else None."""
    if len(p1) != len(p2):
        return None
    k = next((i for i, (x, y) in enumerate(zip(p1, p2)) if x != y), None)
    if k is None or k + 1 >= len(p1):
        return None
    if p1[k] == p2[k + 1] and p1[k + 1] == p2[k] and p1[k + 2:] == p2[k + 2:]:
        return k
    return None


def extract_commutator(w1: str, w2: str, known: CommutationSet) -> Optional[Pair]:
    """The commutator witnessed by the relation ``w1 = w2`` modulo ``known``.

    Accepted only when exactly one non-commuting pair has differing
    projections and those differ by one adjacent transposition.
    """
    if not is_anagram(w1, w2):
        return None
    diffs = differing_pairs(w1, w2, known)
    if len(diffs) != 1:
        return None
    a, b = diffs[0]
    if _single_transposition(projection(w1, a, b), projection(w2, a, b)) is None:
        return None
    return (a, b)


def admissible_pair(w1: str, w2: str) -> Optional[Pair]:
    """Pair (a, b) if the words are literally ``s1 a b s2`` and ``s1 b a s2``."""
    if len(w1) != len(w2) or w1 == w2:
        return None
    k = next(i for i, (x, y) in enumerate(zip(w1, w2)) if x != y)
    if k + 1 >= len(w1):
        return None
    a, b = w1[k], w1[k + 1]
    if a == b or w2[k] != b or w2[k + 1] != a or w1[k + 2:] != w2[k + 2:]:
        return None
    return canonical_pair(a, b)


def _dependent(x: str, y: str, known: CommutationSet) -> bool:
    return x == y or not known.commutes(x, y)


def _swaps_to(source: str, target: str, known: CommutationSet) -> tuple[int, ...]:
    """Adjacent swaps of commuting letters turning ``source`` into ``target``.

    Equal letters keep their relative order, so every swap exchanges two
    distinct letters; raises :class:`CertificateError` if one of them does
    not commute.
    """
    seen: dict[str, int] = {}
    slots: dict[tuple[str, int], int] = {}
    for t, ch in enumerate(target):
        slots[(ch, seen.get(ch, 0))] = t
        seen[ch] = seen.get(ch, 0) + 1
    seen.clear()
    order = []
    for ch in source:
        order.append(slots[(ch, seen.get(ch, 0))])
        seen[ch] = seen.get(ch, 0) + 1

    letters = list(source)
    swaps = []
    # insertion sort by target slot, recording each adjacent exchange
    for i in range(1, len(order)):
        j = i
        while j > 0 and order[j - 1] > order[j]:
            x, y = letters[j - 1], letters[j]
            if _dependent(x, y, known):
                raise CertificateError(f"cannot swap {x!r} and {y!r} in {source!r}")
            order[j - 1], order[j] = order[j], order[j - 1]
            letters[j - 1], letters[j] = y, x
            swaps.append(j - 1)
            j -= 1
    return tuple(swaps)


def find_certificate(
    w1: str, w2: str, alpha: str, beta: str, known: CommutationSet
) -> tuple[SwapCertificate, SwapCertificate]:
    """Certificates rewriting w1 to ``s1 x y s2`` and w2 to ``s1 y x s2``.

    ``{x, y} = {alpha, beta}``, in the order they occur in ``w1``.  The
    distinguished occurrences are read off the mismatch between the two
    projections; everything that must precede either of them goes into
    ``s1`` and the rest into ``s2``.
    """
    p1, p2 = projection(w1, alpha, beta), projection(w2, alpha, beta)
    k = _single_transposition(p1, p2)
    if k is None:
        raise CertificateError(f"{w1!r}/{w2!r} do not differ by one {alpha}{beta} transposition")
    positions = [i for i, ch in enumerate(w1) if ch == alpha or ch == beta]
    i, j = positions[k], positions[k + 1]

    # downward closure of {i, j} in the dependency order of w1
    must_precede = [False] * len(w1)
    must_precede[i] = must_precede[j] = True
    for p in range(j - 1, -1, -1):
        if p == i:
            continue
        ch = w1[p]
        for q in range(p + 1, len(w1)):
            if must_precede[q] and _dependent(ch, w1[q], known):
                must_precede[p] = True
                break
    for p in range(i + 1, j):
        if must_precede[p] and _dependent(w1[i], w1[p], known):
            raise CertificateError(f"{w1[p]!r} is pinned between the {alpha}{beta} occurrences of {w1!r}")

    s1 = "".join(ch for p, ch in enumerate(w1) if must_precede[p] and p not in (i, j))
    s2 = "".join(ch for p, ch in enumerate(w1) if not must_precede[p])
    x, y = w1[i], w1[j]
    c1 = SwapCertificate(w1, tuple((p, "known") for p in _swaps_to(w1, s1 + x + y + s2, known)), s1, x, y, s2)
    c2 = SwapCertificate(w2, tuple((p, "known") for p in _swaps_to(w2, s1 + y + x + s2, known)), s1, y, x, s2)
    return c1, c2


def check_certificate(c: SwapCertificate, known: CommutationSet) -> bool:
    """Replay every swap and confirm the declared end form."""
    letters = list(c.start)
    for pos, kind in c.swaps:
        if kind != "known" or not 0 <= pos < len(letters) - 1:
            return False
        x, y = letters[pos], letters[pos + 1]
        if _dependent(x, y, known):
            return False
        letters[pos], letters[pos + 1] = y, x
    if len(c.first) != 1 or len(c.second) != 1 or c.first == c.second:
        return False
    return "".join(letters) == c.end_word


def certified_pair(
    w1: str, w2: str, pair: Pair, known: CommutationSet
) -> tuple[SwapCertificate, SwapCertificate]:
    """Certificates for ``pair``, validated; raises :class:`CertificateError` otherwise."""
    c1, c2 = find_certificate(w1, w2, pair[0], pair[1], known)
    ok = (
        check_certificate(c1, known)
        and check_certificate(c2, known)
        and (c1.s1, c1.s2) == (c2.s1, c2.s2)
        and (c1.first, c1.second) == (c2.second, c2.first)
    )
    if not ok:
        raise CertificateError(f"certificate for {pair} on {w1!r}/{w2!r} failed to replay")
    return c1, c2


RULES = ("admissible", "general")


def _scan_buckets(buckets: list[Anagraph], known: CommutationSet, rule: str, iteration: Iteration):
    found: dict[Pair, tuple] = {}
    refused = []
    for g in buckets:
        for u, v in component_pairs(g):
            if rule == "admissible":
                pair = admissible_pair(u, v)
                if pair is not None and pair in known:
                    pair = None
            else:
                pair = extract_commutator(u, v, known)
            if pair is None or pair in found:
                continue
            try:
                certs = certified_pair(u, v, pair, known)
            except CertificateError as exc:
                refused.append((g.key, u, v, pair, str(exc)))
                continue
            w = CommutatorWitness(
                pair[0], pair[1], u, v, iteration, certs, g.provenance[u], g.provenance[v]
            )
            found[pair] = ((g.key, u, v), w)
    return found, refused


def scan_for_commutators(
    store: AnagraphStore,
    known: CommutationSet,
    rule: str = "general",
    iteration: Iteration = 1,
    workers: int = 1,
    refused: Optional[list] = None,
) -> list[CommutatorWitness]:
    """New commutators witnessed by component pairs of ``store``.

    ``known`` is frozen for the whole scan.  ``rule="admissible"`` accepts
    only literal ``s1 a b s2`` / ``s1 b a s2`` pairs; ``rule="general"`` uses
    :func:`extract_commutator`.  One witness per pair is kept, the earliest
    by (bucket key, word pair), and every witness carries replayed
    certificates.  Pairs whose certificate search fails are appended to
    ``refused`` instead of being accepted.  Results are sorted by pair.
    """
    if rule not in RULES:
        raise ValueError(f"unknown scan rule {rule!r}")
    buckets = list(store)
    if workers > 1 and len(buckets) > 1:
        n = min(workers, len(buckets))
        chunks = [buckets[i::n] for i in range(n)]
        with ProcessPoolExecutor(max_workers=n) as pool:
            parts = list(pool.map(_scan_buckets, chunks, [known] * n, [rule] * n, [iteration] * n))
    else:
        parts = [_scan_buckets(buckets, known, rule, iteration)]

    best: dict[Pair, tuple] = {}
    bad = []
    for found, ref in parts:
        bad.extend(ref)
        for pair, (order_key, w) in found.items():
            if pair not in best or order_key < best[pair][0]:
                best[pair] = (order_key, w)
    # a refusal after an accepted witness of the same pair is moot
    bad = [r for r in bad if r[3] not in best or r[:3] < best[r[3]][0]]
    if bad:
        bad.sort()
        for key, u, v, pair, msg in bad:
            log.warning("refused %s from %s/%s: %s", pair, u, v, msg)
        if refused is not None:
            refused.extend(bad)
    return [best[p][1] for p in sorted(best)]
