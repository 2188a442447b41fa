"""Fixpoint driver: scan, reduce, repeat; then residuals and verification."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .anagraph import AnagraphStore, build_anagraphs, component_pairs, reduce_store
from .ingest import Dictionary
from .model import (
    ALPHABET,
    RESIDUAL,
    CommutationSet,
    CommutatorWitness,
    Pair,
    signature,
)
from .traces import projection, scan_for_commutators, trace_equal

log = logging.getLogger(__name__)


@dataclass
class RunConfig:
    max_iterations: int = 50
    residual: bool = True
    verify: bool = True
    workers: int = 1
    # "admissible" reproduces the published per-iteration counts;
    # "general" lets the main loop use the full extraction rule.
    scan_rule: str = "admissible"
    alphabet: str = ALPHABET


@dataclass(frozen=True)
class IterationStats:
    iteration: int
    bucket_count: int
    cumulative_commutators: int


@dataclass
class PairPattern:
    """How one non-commuting pair is arranged across the dictionary's anagram classes."""

    pair: Pair
    classes: int = 0
    consistent: bool = True
    conflicts: list = field(default_factory=list)


@dataclass
class VerificationReport:
    all_relations_implied: bool
    failing_pairs: list[tuple[str, str]]
    maximality: dict[Pair, PairPattern]
    classes_checked: int = 0

    def to_dict(self) -> dict:
        return {
            "all_relations_implied": self.all_relations_implied,
            "classes_checked": self.classes_checked,
            "failing_pairs": [list(p) for p in self.failing_pairs],
            "maximality": [
                {
                    "pair": "".join(p.pair),
                    "classes": p.classes,
                    "consistent": p.consistent,
                    "conflicts": [list(c) for c in p.conflicts],
                }
                for p in self.maximality.values()
            ],
        }


@dataclass
class RunResult:
    commutators: CommutationSet
    witnesses: list[CommutatorWitness]
    missing: list[Pair]
    residual_buckets: AnagraphStore
    stats: list[IterationStats]
    verification: Optional[VerificationReport] = None
    unresolved: list[tuple[str, str]] = field(default_factory=list)
    refused: list = field(default_factory=list)
    fixpoint_buckets: Optional[AnagraphStore] = None
    # one row per residual round: (round, buckets scanned, commutators after it)
    residual_stats: list[IterationStats] = field(default_factory=list)

    def witness_stages(self) -> list[CommutationSet]:
        """The commutation set in force when each witness was found, in witness order."""
        known = CommutationSet(alphabet=self.commutators.alphabet)
        out = []
        by_iteration: dict[int, list[CommutatorWitness]] = {}
        for w in self.witnesses:
            if w.iteration != RESIDUAL:
                by_iteration.setdefault(w.iteration, []).append(w)
        for it in sorted(by_iteration):
            out.extend([known] * len(by_iteration[it]))
            known = known.union(w.pair for w in by_iteration[it])
        residual = [w for w in self.witnesses if w.iteration == RESIDUAL]
        done = 0
        for s in self.residual_stats:
            n = s.cumulative_commutators - len(known)
            out.extend([known] * n)
            known = known.union(w.pair for w in residual[done:done + n])
            done += n
        return out

    def to_dict(self) -> dict:
        return {
            "alphabet": self.commutators.alphabet,
            "commutators": ["".join(p) for p in self.commutators],
            "missing": ["".join(p) for p in self.missing],
            "stats": [
                [s.iteration, s.bucket_count, s.cumulative_commutators] for s in self.stats
            ],
            "residual_stats": [
                [s.iteration, s.bucket_count, s.cumulative_commutators] for s in self.residual_stats
            ],
            "witnesses": [w.to_dict() for w in self.witnesses],
            "residual_buckets": [g.to_dict() for g in self.residual_buckets],
            "unresolved": [list(p) for p in self.unresolved],
            "verification": self.verification.to_dict() if self.verification else None,
        }


class IterationLimitError(RuntimeError):
    def __init__(self, partial: RunResult):
        super().__init__(
            f"no fixpoint after {len(partial.stats)} iterations "
            f"({len(partial.commutators)} commutators, {len(partial.residual_buckets)} buckets)"
        )
        self.partial = partial


def process_residuals(
    store: AnagraphStore, known: CommutationSet, workers: int = 1, refused=None, stats=None
):
    """Extract what the leftover buckets still witness.

    Pairs already equal modulo ``known`` need nothing.  Every other pair is
    tried with the general extraction rule; new commutators are applied and
    the store re-reduced until nothing changes.  Returns the enlarged
    commutation set, the new witnesses (tagged residual) and the buckets
    still holding a relation not implied by the commutators.  Per-round
    counts are appended to ``stats`` when given.
    """
    witnesses: list[CommutatorWitness] = []
    while True:
        if stats is not None:
            stats.append(IterationStats(len(stats) + 1, len(store), len(known)))
        found = scan_for_commutators(
            store, known, rule="general", iteration=RESIDUAL, workers=workers, refused=refused
        )
        if not found:
            remaining = {
                g.key: g for g in store
                if any(not trace_equal(u, v, known) for u, v in component_pairs(g))
            }
            return known, witnesses, AnagraphStore(remaining)
        log.info("residual round: %d new commutators", len(found))
        witnesses.extend(found)
        known = known.union(w.pair for w in found)
        if stats is not None:
            stats[-1] = IterationStats(stats[-1].iteration, stats[-1].bucket_count, len(known))
        store = reduce_store(store, known)


def unresolved_pairs(store: AnagraphStore, known: CommutationSet) -> list[tuple[str, str]]:
    return [
        (u, v)
        for g in store
        for u, v in component_pairs(g)
        if not trace_equal(u, v, known)
    ]


def verify_containment(d: Dictionary, known: CommutationSet) -> VerificationReport:
    """Check every dictionary anagram relation follows from ``known``.

    Also records, for each missing pair, whether all words of every
    anagram class containing both letters arrange them the same way.
    """
    classes: dict[str, list[str]] = {}
    for w in d.words:
        classes.setdefault(signature(w), []).append(w)
    multi = [sorted(ws) for _, ws in sorted(classes.items()) if len(ws) > 1]

    failing = []
    for ws in multi:
        rep = ws[0]
        failing.extend((rep, w) for w in ws[1:] if not trace_equal(rep, w, known))

    maximality = {}
    for a, b in known.missing():
        entry = PairPattern((a, b))
        for ws in multi:
            if a not in ws[0] or b not in ws[0]:
                continue
            entry.classes += 1
            rep = projection(ws[0], a, b)
            for w in ws[1:]:
                if projection(w, a, b) != rep:
                    entry.consistent = False
                    entry.conflicts.append((ws[0], w))
        maximality[(a, b)] = entry
    return VerificationReport(not failing, failing, maximality, len(multi))


def run(d: Dictionary, config: Optional[RunConfig] = None) -> RunResult:
    config = config or RunConfig()
    known = CommutationSet(alphabet=config.alphabet)
    store = build_anagraphs(d)
    stats: list[IterationStats] = []
    witnesses: list[CommutatorWitness] = []
    refused: list = []
    residual_stats: list[IterationStats] = []

    iteration = 0
    while True:
        iteration += 1
        if iteration > config.max_iterations:
            partial = RunResult(known, witnesses, known.missing(), store, stats, refused=refused)
            raise IterationLimitError(partial)
        found = scan_for_commutators(
            store, known, rule=config.scan_rule, iteration=iteration,
            workers=config.workers, refused=refused,
        )
        stats.append(IterationStats(iteration, len(store), len(known) + len(found)))
        log.info("iteration %d: %d buckets, %d commutators", iteration, len(store), stats[-1].cumulative_commutators)
        witnesses.extend(found)
        known = known.union(w.pair for w in found)
        reduced = reduce_store(store, known)
        if not found and reduced == store:
            break
        store = reduced

    fixpoint = store
    if config.residual:
        known, extra, store = process_residuals(store, known, config.workers, refused, residual_stats)
        witnesses.extend(extra)

    result = RunResult(
        commutators=known,
        witnesses=witnesses,
        missing=known.missing(),
        residual_buckets=store,
        stats=stats,
        unresolved=unresolved_pairs(store, known),
        refused=refused,
        fixpoint_buckets=fixpoint,
        residual_stats=residual_stats,
    )
    if config.verify:
        result.verification = verify_containment(d, known)
    return result
