"""Loading word lists."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Iterable, Literal

from .model import ALPHABET

log = logging.getLogger(__name__)

SanitizePolicy = Literal["strict", "lenient"]


class DictionaryFormatError(ValueError):
    """A line of a word list is not a plain a-z word (strict policy)."""

    def __init__(self, path, lineno: int, line: str):
        super().__init__(f"{path}:{lineno}: invalid word {line!r}")
        self.path = path
        self.lineno = lineno
        self.line = line


@dataclass(frozen=True)
class Dictionary:
    words: tuple[str, ...]
    source_name: str = "<memory>"
    skipped: int = 0

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, word) -> bool:
        return word in set(self.words)

    @classmethod
    def from_words(cls, words: Iterable[str], source_name: str = "<memory>") -> "Dictionary":
        """Fold case and deduplicate, keeping first-seen order.

        Raises ``ValueError`` on anything that is not a non-empty a-z word.
        """
        seen: dict[str, None] = {}
        for w in words:
            w = w.strip().lower()
            if not _valid(w):
                raise ValueError(f"invalid word {w!r}")
            seen.setdefault(w, None)
        return cls(tuple(seen), source_name)


def _valid(word: str, alphabet: str = ALPHABET) -> bool:
    return bool(word) and all(ch in alphabet for ch in word)


def load_dictionary(path, policy: SanitizePolicy = "strict") -> Dictionary:
    """Read a one-word-per-line file.

    Blank lines are ignored.  Under ``strict`` a line with characters outside
    a-z (after case folding) raises :class:`DictionaryFormatError`; under
    ``lenient`` it is skipped and counted in ``Dictionary.skipped``.
    """
    if policy not in ("strict", "lenient"):
        raise ValueError(f"unknown sanitize policy {policy!r}")
    seen: dict[str, None] = {}
    skipped = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            word = raw.strip().lower()
            if not word:
                continue
            if not _valid(word):
                if policy == "strict":
                    raise DictionaryFormatError(path, lineno, raw.rstrip("\r\n"))
                skipped += 1
                continue
            seen.setdefault(word, None)
    if skipped:
        log.warning("%s: skipped %d malformed lines", path, skipped)
    return Dictionary(tuple(seen), os.path.basename(str(path)), skipped)


def dump_dictionary(d: Dictionary, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for w in d.words:
            fh.write(w + "\n")
