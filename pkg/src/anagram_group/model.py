"""Alphabet, letter counts, commutation sets and witness records.

Words are plain ``str`` objects over a lowercase alphabet and letters are
single characters.  Everything here is immutable once built.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from string import ascii_lowercase
from typing import Iterable, Iterator, Union

ALPHABET = ascii_lowercase

Pair = tuple[str, str]
LetterCount = tuple[int, ...]


def letter_count(word: str, alphabet: str = ALPHABET) -> LetterCount:
    """Multiplicity of every alphabet letter in ``word``."""
    counts = Counter(word)
    return tuple(counts.get(ch, 0) for ch in alphabet)


def signature(word: str) -> str:
    """The letters of ``word`` in sorted order.

    Equal signatures are equivalent to equal letter counts and make cheaper
    dictionary keys, so buckets are keyed by this form.
    """
    return "".join(sorted(word))


def is_anagram(w1: str, w2: str) -> bool:
    return len(w1) == len(w2) and signature(w1) == signature(w2)


def canonical_pair(a: str, b: str) -> Pair:
    if a == b:
        raise ValueError(f"self-commutator [{a},{a}] is not a generator pair")
    return (a, b) if a < b else (b, a)


def all_pairs(alphabet: str = ALPHABET) -> list[Pair]:
    return list(combinations(sorted(alphabet), 2))


@dataclass(frozen=True)
class CommutationSet:
    """Symmetric, irreflexive relation of known commuting generator pairs.

    Pairs are stored once each in canonical (alphabetical) orientation.
    """

    pairs: frozenset[Pair] = frozenset()
    alphabet: str = ALPHABET

    def __post_init__(self):
        canon = frozenset(canonical_pair(a, b) for a, b in self.pairs)
        for a, b in canon:
            if a not in self.alphabet or b not in self.alphabet:
                raise ValueError(f"pair ({a},{b}) outside alphabet {self.alphabet!r}")
        object.__setattr__(self, "pairs", canon)

    @classmethod
    def full(cls, alphabet: str = ALPHABET) -> "CommutationSet":
        return cls(frozenset(all_pairs(alphabet)), alphabet)

    @classmethod
    def from_strings(cls, specs: Iterable[str], alphabet: str = ALPHABET) -> "CommutationSet":
        """Build from two-letter strings such as ``["ab", "ce"]``."""
        return cls(frozenset((s[0], s[1]) for s in specs), alphabet)

    def commutes(self, a: str, b: str) -> bool:
        if a == b:
            return True
        return ((a, b) if a < b else (b, a)) in self.pairs

    def union(self, other: Iterable[Pair]) -> "CommutationSet":
        return CommutationSet(self.pairs | frozenset(other), self.alphabet)

    def missing(self) -> list[Pair]:
        return [p for p in all_pairs(self.alphabet) if p not in self.pairs]

    def __contains__(self, pair) -> bool:
        a, b = pair
        return self.commutes(a, b)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Pair]:
        return iter(sorted(self.pairs))


def removable_letters(word_or_count: Union[str, LetterCount], known: CommutationSet) -> set[str]:
    """Letters that commute with every other letter present.

    Accepts either a word (or signature) or a letter-count vector over
    ``known.alphabet``.  A letter alone in its support is always removable.
    """
    if isinstance(word_or_count, str):
        support = set(word_or_count)
    else:
        support = {ch for ch, n in zip(known.alphabet, word_or_count) if n > 0}
    return {
        a for a in support
        if all(known.commutes(a, b) for b in support if b != a)
    }


@dataclass(frozen=True)
class SwapCertificate:
    """Replayable rewrite of ``start`` into ``s1 + first + second + s2``.

    Each swap exchanges the letters at ``position`` and ``position + 1``.
    Only swaps of known commuting letters are allowed, so ``kind`` is
    always ``"known"`` for a valid certificate.
    """

    start: str
    swaps: tuple[tuple[int, str], ...]
    s1: str
    first: str
    second: str
    s2: str

    @property
    def end_word(self) -> str:
        return self.s1 + self.first + self.second + self.s2

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "swaps": [[p, k] for p, k in self.swaps],
            "end_form": [self.s1, self.first, self.second, self.s2],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SwapCertificate":
        s1, first, second, s2 = data["end_form"]
        return cls(data["start"], tuple((int(p), str(k)) for p, k in data["swaps"]), s1, first, second, s2)


Iteration = Union[int, str]
RESIDUAL = "residual"


@dataclass(frozen=True)
class CommutatorWitness:
    """A commutator [alpha, beta] together with the relation proving it.

    ``word1`` and ``word2`` are the (possibly reduced) anagrams compared when
    the commutator was found; ``sources1``/``sources2`` are the dictionary
    words that reduced to them.
    """

    alpha: str
    beta: str
    word1: str
    word2: str
    iteration: Iteration
    certificates: tuple[SwapCertificate, SwapCertificate]
    sources1: tuple[str, ...] = field(default=())
    sources2: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.alpha < self.beta:
            raise ValueError("witness pair must be in alphabetical order")

    @property
    def pair(self) -> Pair:
        return (self.alpha, self.beta)

    def dictionary_pair(self) -> tuple[str, str]:
        """A pair of dictionary words to display for this witness.

        Prefers two sources that are anagrams of one another.
        """
        if not self.sources1 or not self.sources2:
            return self.word1, self.word2
        for w1 in self.sources1:
            for w2 in self.sources2:
                if is_anagram(w1, w2):
                    return w1, w2
        return self.sources1[0], self.sources2[0]

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "word1": self.word1,
            "word2": self.word2,
            "iteration": self.iteration,
            "certificates": [c.to_dict() for c in self.certificates],
            "sources1": list(self.sources1),
            "sources2": list(self.sources2),
        }
