"""Anagraphs: words bucketed by letter count, partitioned into known-equal classes.

A bucket holds the (reduced) words sharing one letter count.  Within a bucket
the vertices are split into components; every two words of one component
are known to be equal in the anagram group.  Completeness of each component
is implicit in the partition.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping

from .disjoint_set import DisjointSet
from .ingest import Dictionary
from .model import CommutationSet, removable_letters, signature


@dataclass(frozen=True)
class Anagraph:
    key: str
    components: tuple[tuple[str, ...], ...]
    provenance: Mapping[str, tuple[str, ...]]

    @property
    def vertices(self) -> list[str]:
        return sorted(v for comp in self.components for v in comp)

    def component_of(self, word: str) -> tuple[str, ...]:
        for comp in self.components:
            if word in comp:
                return comp
        raise KeyError(word)

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "vertices": self.vertices,
            "components": [list(c) for c in self.components],
            "provenance": {v: list(self.provenance[v]) for v in self.vertices},
        }


class AnagraphStore:
    """Mapping from bucket key (sorted letters) to :class:`Anagraph`.

    Iteration is always in key order so that every scan is deterministic.
    """

    def __init__(self, buckets: Mapping[str, Anagraph] = ()):
        self.buckets = dict(sorted(dict(buckets).items()))

    def __len__(self) -> int:
        return len(self.buckets)

    def __iter__(self) -> Iterator[Anagraph]:
        return iter(self.buckets.values())

    def __contains__(self, key) -> bool:
        return key in self.buckets

    def __getitem__(self, key) -> Anagraph:
        return self.buckets[key]

    def __eq__(self, other) -> bool:
        return isinstance(other, AnagraphStore) and self.buckets == other.buckets

    def __repr__(self) -> str:
        return f"AnagraphStore({len(self)} buckets, {self.vertex_count()} vertices)"

    def vertex_count(self) -> int:
        return sum(len(g.vertices) for g in self)

    def to_json(self, **kwargs) -> str:
        return json.dumps([g.to_dict() for g in self], **kwargs)


def build_anagraphs(d: Dictionary) -> AnagraphStore:
    """One single-component bucket per letter count shared by two or more words."""
    groups: dict[str, list[str]] = {}
    for w in d.words:
        groups.setdefault(signature(w), []).append(w)
    buckets = {}
    for key, words in groups.items():
        if len(words) < 2:
            continue
        words = sorted(words)
        buckets[key] = Anagraph(key, (tuple(words),), {w: (w,) for w in words})
    return AnagraphStore(buckets)


def reduce_word(word: str, remove) -> str:
    if not remove:
        return word
    return "".join(ch for ch in word if ch not in remove)


def removable_closure(key: str, known: CommutationSet) -> set[str]:
    """Letters deletable from a bucket, recomputing removability after each round."""
    support = set(key)
    removed: set[str] = set()
    while True:
        step = removable_letters("".join(support), known)
        if not step:
            return removed
        removed |= step
        support -= step


def reduce_store(store: AnagraphStore, known: CommutationSet) -> AnagraphStore:
    """Delete removable letters everywhere and merge what coincides.

    Vertices that reduce to the same string are identified, buckets whose
    reduced keys coincide are merged, and components sharing a vertex are
    unified.  Buckets left with fewer than two vertices, or with only the
    empty word, are dropped.
    """
    merged: dict[str, DisjointSet] = {}
    provenance: dict[str, dict[str, set[str]]] = {}
    for g in store:
        remove = removable_closure(g.key, known)
        new_key = reduce_word(g.key, remove)
        if not new_key:
            continue
        ds = merged.setdefault(new_key, DisjointSet())
        prov = provenance.setdefault(new_key, {})
        for comp in g.components:
            reduced = [reduce_word(v, remove) for v in comp]
            for v, r in zip(comp, reduced):
                ds.add(r)
                prov.setdefault(r, set()).update(g.provenance[v])
            for r in reduced[1:]:
                ds.union(reduced[0], r)

    buckets = {}
    for key, ds in merged.items():
        if len(ds.parent) < 2:
            continue
        comps = tuple(tuple(c) for c in ds.groups())
        prov = {v: tuple(sorted(src)) for v, src in provenance[key].items()}
        buckets[key] = Anagraph(key, comps, prov)
    return AnagraphStore(buckets)


def component_pairs(g: Anagraph) -> Iterator[tuple[str, str]]:
    """Every unordered pair of distinct vertices sharing a component, once."""
    for comp in g.components:
        yield from combinations(comp, 2)
