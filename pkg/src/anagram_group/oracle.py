"""Brute-force referee for small instances.

Exponential on purpose.  Tests and audits only; nothing in the pipeline
imports this module.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .model import CommutationSet


@dataclass(frozen=True)
class TraceClass:
    members: frozenset[str]
    truncated: bool


def _neighbours(word: str, known: CommutationSet):
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        if x != y and known.commutes(x, y):
            yield word[:i] + y + x + word[i + 2:]


def enumerate_trace_class(word: str, known: CommutationSet, limit: int = 10_000) -> TraceClass:
    """Breadth-first closure of ``word`` under swaps of adjacent commuting letters."""
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for n in _neighbours(w, known):
            if n in seen:
                continue
            if len(seen) >= limit:
                return TraceClass(frozenset(seen), True)
            seen.add(n)
            queue.append(n)
    return TraceClass(frozenset(seen), False)


def oracle_trace_equal(w1: str, w2: str, known: CommutationSet, limit: int = 10_000) -> Optional[bool]:
    """True/False, or None when the class was truncated before ``w2`` turned up."""
    cls = enumerate_trace_class(w1, known, limit)
    if w2 in cls.members:
        return True
    return None if cls.truncated else False


def oracle_admissible_forms(w1: str, w2: str, a: str, b: str, known: CommutationSet, limit: int = 10_000) -> bool:
    """Whether some ``s1 a b s2`` lies in w1's class and ``s1 b a s2`` in w2's (either orientation)."""
    c1 = enumerate_trace_class(w1, known, limit)
    c2 = enumerate_trace_class(w2, known, limit)
    for m in c1.members:
        for i in range(len(m) - 1):
            if {m[i], m[i + 1]} == {a, b}:
                if m[:i] + m[i + 1] + m[i] + m[i + 2:] in c2.members:
                    return True
    return False


def oracle_commutator_witnessed(w1: str, w2: str, a: str, b: str, known: CommutationSet) -> bool:
    """Whether ``w1 = w2`` is a conjugate of [a, b] modulo ``known``.

    Requires an admissible form reachable by brute force on both sides, and
    that adding [a, b] to ``known`` makes the two words equal.
    """
    extended = known.union([(a, b)])
    if oracle_trace_equal(w1, w2, extended) is not True:
        return False
    return oracle_admissible_forms(w1, w2, a, b, known)
