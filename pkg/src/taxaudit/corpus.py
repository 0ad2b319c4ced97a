"""Labeled text corpus: the element data model plus file ingestion.

A corpus is an ordered collection of elements, each carrying a unique id,
a nominal category label, and the element's prose. Supported on-disk
formats are CSV (header ``id,category,text``, RFC-4180 quoting) and JSONL
(one object per line with those three keys).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CorpusError

FORMATS = ("csv", "jsonl")


def _normalize(text: str) -> str:
    # trim surrounding whitespace, collapse internal runs to single spaces;
    # case and punctuation are preserved (embeddings are sensitive to both)
    return " ".join(text.split())


@dataclass(frozen=True)
class Element:
    """One labeled text unit (a content standard or an item specification)."""

    id: str
    category: str
    text: str


@dataclass(frozen=True)
class Corpus:
    """Ordered elements plus the ordered category vocabulary."""

    elements: tuple[Element, ...]
    categories: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.elements)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(e.category for e in self.elements)


def _infer_format(path: Path) -> str:
    suffix = path.suffix.lower()
    if suffix == ".csv":
        return "csv"
    if suffix in (".jsonl", ".ndjson"):
        return "jsonl"
    raise CorpusError(f"cannot infer format from suffix {suffix!r}: {path}")


def _rows_from_csv(path: Path) -> Iterable[tuple[int, str, str, str]]:
    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise CorpusError(f"empty corpus: {path}") from None
        if [h.strip() for h in header] != ["id", "category", "text"]:
            raise CorpusError(
                f"bad header at line 1: expected id,category,text, got {','.join(header)!r}"
            )
        for row in reader:
            if not row:
                continue
            if len(row) != 3:
                raise CorpusError(f"malformed row at line {reader.line_num}: expected 3 fields, got {len(row)}")
            yield reader.line_num, row[0], row[1], row[2]


def _rows_from_jsonl(path: Path) -> Iterable[tuple[int, str, str, str]]:
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"malformed JSON at line {lineno}: {exc.msg}") from None
            if not isinstance(obj, dict):
                raise CorpusError(f"malformed row at line {lineno}: expected an object")
            missing = [k for k in ("id", "category", "text") if k not in obj]
            if missing:
                raise CorpusError(f"malformed row at line {lineno}: missing {','.join(missing)}")
            yield lineno, str(obj["id"]), str(obj["category"]), str(obj["text"])


def load_corpus(
    path: str | Path,
    format: str | None = None,
    categories: Sequence[str] | None = None,
) -> Corpus:
    """Load and validate a corpus file.

    Category order is order of first appearance unless an explicit
    ``categories`` order is supplied. All corpus invariants are enforced
    here, so a successfully loaded corpus always validates cleanly.
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"missing corpus file: {path}")
    fmt = format or _infer_format(path)
    if fmt not in FORMATS:
        raise CorpusError(f"unknown format {fmt!r}: expected one of {', '.join(FORMATS)}")
    rows = _rows_from_csv(path) if fmt == "csv" else _rows_from_jsonl(path)

    elements: list[Element] = []
    seen: set[str] = set()
    first_seen: list[str] = []
    for lineno, raw_id, raw_category, raw_text in rows:
        eid = raw_id.strip()
        category = _normalize(raw_category)
        text = _normalize(raw_text)
        if not eid:
            raise CorpusError(f"blank id at line {lineno}")
        if not category:
            raise CorpusError(f"blank category at line {lineno} (element {eid!r})")
        if not text:
            raise CorpusError(f"blank text at line {lineno} (element {eid!r})")
        if eid in seen:
            raise CorpusError(f"duplicate id {eid!r} at line {lineno}")
        seen.add(eid)
        if category not in first_seen:
            first_seen.append(category)
        elements.append(Element(eid, category, text))

    if not elements:
        raise CorpusError(f"empty corpus: {path}")

    if categories is not None:
        order = tuple(_normalize(c) for c in categories)
        if len(set(order)) != len(order):
            raise CorpusError("explicit category order contains duplicates")
        unknown = [c for c in first_seen if c not in order]
        if unknown:
            raise CorpusError(f"explicit category order is missing: {', '.join(unknown)}")
    else:
        order = tuple(first_seen)
    if len(order) < 2:
        raise CorpusError(f"too few categories: found {len(order)}, need at least 2")

    return Corpus(tuple(elements), order)


def save_corpus(corpus: Corpus, path: str | Path, format: str | None = None) -> None:
    """Write a corpus back to disk (CSV or JSONL); inverse of load_corpus."""
    path = Path(path)
    fmt = format or _infer_format(path)
    if fmt == "csv":
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["id", "category", "text"])
            for e in corpus.elements:
                writer.writerow([e.id, e.category, e.text])
    elif fmt == "jsonl":
        with path.open("w", encoding="utf-8") as fh:
            for e in corpus.elements:
                fh.write(json.dumps({"id": e.id, "category": e.category, "text": e.text}, ensure_ascii=False))
                fh.write("\n")
    else:
        raise CorpusError(f"unknown format {fmt!r}: expected one of {', '.join(FORMATS)}")


def validate_corpus(corpus: Corpus) -> list[str]:
    """Return one diagnostic string per invariant violation (empty if clean).

    Unlike load_corpus this never raises: it is meant for auditing corpora
    assembled in memory.
    """
    diagnostics: list[str] = []
    seen: set[str] = set()
    for i, e in enumerate(corpus.elements):
        if not e.id.strip():
            diagnostics.append(f"blank-id: element at index {i}")
        elif e.id in seen:
            diagnostics.append(f'duplicate-id: "{e.id}"')
        else:
            seen.add(e.id)
        if not e.category.strip():
            diagnostics.append(f'blank-category: "{e.id}"')
        elif e.category not in corpus.categories:
            diagnostics.append(f'unknown-category: "{e.category}" (element "{e.id}")')
        if not e.text.strip():
            diagnostics.append(f'blank-text: "{e.id}"')
    if len(corpus.categories) < 2:
        diagnostics.append(f"too-few-categories: found {len(corpus.categories)}")
    if len(set(corpus.categories)) != len(corpus.categories):
        diagnostics.append("duplicate-category: category order lists a name twice")
    return diagnostics
