"""Scoring against gold annotations, report rendering and the method
ablation.

A resolution is correct when its winning target denotes the gold
referent: the same phrase, the same sentence event, or the same special
reading.  Only gold-annotated anaphors enter the totals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .corpus import Document, iter_anaphors
from .engine import Resolution, RulePack, Target, resolve_document
from .lexicon import LexiconSet

CATEGORIES = (
    "demonstrative-pronoun",
    "demonstrative-adjective",
    "demonstrative-adverb",
    "personal",
    "zero",
)

_KIND_TO_CATEGORY = {
    "demonstrative-pronoun": "demonstrative-pronoun",
    "demonstrative-adjective": "demonstrative-adjective",
    "demonstrative-adverb": "demonstrative-adverb",
    "personal-1": "personal",
    "personal-2": "personal",
    "personal-3": "personal",
    "zero": "zero",
}


@dataclass
class EvalReport:
    per_category: dict[str, tuple[int, int]] = field(
        default_factory=lambda: {category: (0, 0) for category in CATEGORIES})
    method: Optional[int] = None

    @property
    def overall(self) -> tuple[int, int]:
        correct = sum(c for c, _ in self.per_category.values())
        total = sum(t for _, t in self.per_category.values())
        return correct, total

    def add(self, category: str, correct: bool) -> None:
        c, t = self.per_category[category]
        self.per_category[category] = (c + int(correct), t + 1)

    def merge(self, other: "EvalReport") -> "EvalReport":
        merged = EvalReport(method=self.method)
        for category in CATEGORIES:
            a_c, a_t = self.per_category[category]
            b_c, b_t = other.per_category[category]
            merged.per_category[category] = (a_c + b_c, a_t + b_t)
        return merged


def percent(correct: int, total: int) -> int:
    """Whole percent, rounding halves up, 0 for an empty cell."""
    if total == 0:
        return 0
    return int(100 * correct / total + 0.5)


def target_matches_gold(target: Optional[Target], gold: str,
                        anaphor_sentence: int) -> bool:
    if target is None:
        return False
    kind = target.kind
    if kind == "phrase":
        return gold == target.phrase_id
    if kind == "sentence":
        if gold == f"sent:{target.sentence_index}":
            return True
        if gold == "previous-sentence":
            return target.sentence_index == anaphor_sentence - 1
        if gold == "next-sentence":
            return target.sentence_index == anaphor_sentence + 1
        return False
    if kind == "clause":
        if gold == f"clause:{target.sentence_index}:{target.clause_index}":
            return True
        return target.phrase_id is not None and gold == target.phrase_id
    return gold == kind


def evaluate(resolutions: Iterable[Resolution], doc: Document,
             method: Optional[int] = None) -> EvalReport:
    """Score one document's resolutions against its gold annotations."""
    gold_by_id = {}
    for position, annotation in iter_anaphors(doc):
        if annotation.gold_referent is not None:
            gold_by_id[annotation.anaphor_id] = (annotation, position)
    report = EvalReport(method=method)
    for resolution in resolutions:
        entry = gold_by_id.get(resolution.anaphor_id)
        if entry is None:
            continue
        annotation, position = entry
        correct = target_matches_gold(resolution.winner_target,
                                      annotation.gold_referent,
                                      position.sentence)
        report.add(_KIND_TO_CATEGORY[annotation.kind], correct)
    return report


def evaluate_corpus(docs: Iterable[Document], lex: LexiconSet, pack: RulePack,
                    method: int = 1) -> EvalReport:
    report = EvalReport(method=method)
    for doc in docs:
        resolutions = resolve_document(doc, lex, pack, method=method)
        report = report.merge(evaluate(resolutions, doc, method=method))
    return report


def run_ablation(docs: Iterable[Document], lex: LexiconSet,
                 pack: RulePack) -> list[EvalReport]:
    """One full evaluation per method, in method order.

    Methods gate the judging rules: 1 = markers and examples (modified
    codes), 2 = markers only, 3 = examples only (modified codes), 4 =
    examples only (original codes), 5 = neither.  Enumerating rules stay
    active throughout.
    """
    docs = list(docs)
    return [evaluate_corpus(docs, lex, pack, method=method) for method in (1, 2, 3, 4, 5)]


# ---------------------------------------------------------------------------
# Rendering

def _cell(correct: int, total: int) -> str:
    return f"{percent(correct, total):3d}% ({correct}/{total})"


def render_report(report: EvalReport) -> str:
    lines = []
    if report.method is not None:
        lines.append(f"Method {report.method}")
    width = max(len(category) for category in CATEGORIES) + 2
    for category in CATEGORIES:
        correct, total = report.per_category[category]
        lines.append(f"{category:<{width}}{_cell(correct, total)}")
    correct, total = report.overall
    lines.append(f"{'total':<{width}}{_cell(correct, total)}")
    return "\n".join(lines)


def render_report_tsv(report: EvalReport) -> str:
    lines = []
    for category in CATEGORIES:
        correct, total = report.per_category[category]
        lines.append(f"{category}\t{correct}\t{total}\t{percent(correct, total)}")
    correct, total = report.overall
    lines.append(f"total\t{correct}\t{total}\t{percent(correct, total)}")
    return "\n".join(lines)


def render_ablation(reports: list[EvalReport]) -> str:
    header = ["category".ljust(24)]
    header += [f"Method {report.method}".ljust(16) for report in reports]
    lines = ["".join(header).rstrip()]
    for category in CATEGORIES + ("total",):
        row = [category.ljust(24)]
        for report in reports:
            correct, total = (report.overall if category == "total"
                              else report.per_category[category])
            row.append(_cell(correct, total).ljust(16))
        lines.append("".join(row).rstrip())
    return "\n".join(lines)
