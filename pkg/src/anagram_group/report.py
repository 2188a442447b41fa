"""Text, JSON and CSV renderings of a :class:`RunResult`."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from .model import RESIDUAL, Pair, all_pairs
from .pipeline import RunResult

PRESENTATION_SCHEMA = "anagram-group/presentation/1"
RAAG = "right-angled Artin group"


@dataclass(frozen=True)
class PresentationDoc:
    generators: str
    relation_pairs: tuple[Pair, ...]
    missing_pairs: tuple[Pair, ...]
    group_class: Optional[str] = None

    def __post_init__(self):
        rel, miss = set(self.relation_pairs), set(self.missing_pairs)
        if rel & miss or rel | miss != set(all_pairs(self.generators)):
            raise ValueError("relation and missing pairs must partition all generator pairs")

    @classmethod
    def from_result(cls, r: RunResult) -> "PresentationDoc":
        resolved = not r.unresolved and (r.verification is None or r.verification.all_relations_implied)
        return cls(
            r.commutators.alphabet,
            tuple(r.commutators),
            tuple(sorted(r.missing)),
            RAAG if resolved else None,
        )

    def to_dict(self) -> dict:
        return {
            "schema": PRESENTATION_SCHEMA,
            "generators": self.generators,
            "relation_count": len(self.relation_pairs),
            "missing_count": len(self.missing_pairs),
            "relations": ["".join(p) for p in self.relation_pairs],
            "missing": ["".join(p) for p in self.missing_pairs],
            "missing_groups": [
                {"kind": kind, "letters": letters, "pairs": ["".join(p) for p in pairs]}
                for kind, letters, pairs in group_missing(self.missing_pairs)
            ],
            "group_class": self.group_class,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PresentationDoc":
        if data.get("schema") != PRESENTATION_SCHEMA:
            raise ValueError(f"unsupported schema {data.get('schema')!r}")
        return cls(
            data["generators"],
            tuple((s[0], s[1]) for s in data["relations"]),
            tuple((s[0], s[1]) for s in data["missing"]),
            data.get("group_class"),
        )


def _hub_letters(missing) -> list[str]:
    """Greedy vertex cover of the missing-pair graph, most-connected letter first."""
    edges = set(missing)
    hubs = []
    while edges:
        degree: dict[str, int] = {}
        for a, b in edges:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        hub = min(degree, key=lambda ch: (-degree[ch], ch))
        hubs.append(hub)
        edges = {e for e in edges if hub not in e}
    return sorted(hubs)


def group_missing(missing) -> list[tuple[str, list[str], list[Pair]]]:
    """Missing pairs grouped like a hand-written list.

    First the pairs among the hub letters, then each hub letter with the
    remaining letters it fails to commute with.
    """
    missing = sorted(missing)
    hubs = _hub_letters(missing)
    groups = []
    among = [p for p in missing if p[0] in hubs and p[1] in hubs]
    if among:
        groups.append(("among", sorted({ch for p in among for ch in p}), among))
    for h in hubs:
        pairs = [p for p in missing if h in p and not (p[0] in hubs and p[1] in hubs)]
        if pairs:
            others = sorted(p[0] if p[1] == h else p[1] for p in pairs)
            groups.append((h, others, pairs))
    return groups


def emit_presentation(r: RunResult, format: str = "text") -> str:
    doc = PresentationDoc.from_result(r)
    if format == "json":
        return json.dumps(doc.to_dict(), indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown presentation format {format!r}")

    gens = doc.generators
    lines = [
        f"generators: {', '.join(gens)}",
        f"commutator relations: {len(doc.relation_pairs)} of {len(all_pairs(gens))}",
        f"missing commutators: {len(doc.missing_pairs)}",
    ]
    if doc.group_class:
        lines.append(f"class: {doc.group_class}")
    else:
        lines.append("class: unresolved relations remain")
    for kind, letters, pairs in group_missing(doc.missing_pairs):
        if kind == "among":
            lines.append(f"  - the {len(pairs)} commutators of each pair of {', '.join(letters)}")
        else:
            lines.append(f"  - the {len(pairs)} commutators of {kind} with {', '.join(letters)}")
    lines.append("relations:")
    by_first: dict[str, list[str]] = {}
    for a, b in doc.relation_pairs:
        by_first.setdefault(a, []).append(b)
    for a, bs in by_first.items():
        lines.append(f"  [{a}, *]: {' '.join(bs)}")
    return "\n".join(lines) + "\n"


def _iteration_label(it) -> str:
    return "manual" if it == RESIDUAL else str(it)


def _iteration_order(it):
    return (1, 0) if it == RESIDUAL else (0, it)


def witness_rows(r: RunResult) -> list[tuple[str, str, str, str, str, str, str]]:
    rows = []
    for w in sorted(r.witnesses, key=lambda w: (_iteration_order(w.iteration), w.pair)):
        d1, d2 = w.dictionary_pair()
        rows.append((_iteration_label(w.iteration), w.alpha, w.beta, d1, d2, w.word1, w.word2))
    return rows


def emit_witness_table(r: RunResult, format: str = "csv") -> str:
    rows = witness_rows(r)
    header = ("iteration", "alpha", "beta", "word1", "word2", "reduced1", "reduced2")
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if format != "text":
        raise ValueError(f"unknown witness table format {format!r}")
    return _aligned(header, rows)


def emit_progress(r: RunResult, format: str = "csv") -> str:
    header = ("iteration", "anagraphs", "commutators")
    rows = [(s.iteration, s.bucket_count, s.cumulative_commutators) for s in r.stats]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if format != "text":
        raise ValueError(f"unknown progress format {format!r}")
    return _aligned(header, rows)


def emit_verification(r: RunResult, format: str = "text") -> str:
    v = r.verification
    if format == "json":
        payload = {
            "unresolved_residual_pairs": [list(p) for p in r.unresolved],
            "verification": v.to_dict() if v else None,
        }
        return json.dumps(payload, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown verification format {format!r}")
    if v is None:
        return "verification: not run\n"
    lines = [
        f"anagram classes checked: {v.classes_checked}",
        f"all relations implied: {'yes' if v.all_relations_implied else 'no'}",
        f"failing pairs: {len(v.failing_pairs)}",
    ]
    lines += [f"  {a} = {b}" for a, b in v.failing_pairs]
    lines.append("missing pairs (classes containing both letters, pattern shared):")
    for (a, b), p in v.maximality.items():
        status = "shared" if p.consistent else f"CONFLICT in {len(p.conflicts)}"
        lines.append(f"  {a}{b}: {p.classes} classes, {status}")
    return "\n".join(lines) + "\n"


def _aligned(header, rows) -> str:
    table = [tuple(str(c) for c in header)] + [tuple(str(c) for c in row) for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    return "".join(
        "  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in table
    )
