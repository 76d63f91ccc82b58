"""Generic two-phase scoring engine.

Enumerating rules propose scored candidate antecedents; judging rules
adjust the scores; the candidate with the maximum total wins, ties going
to the earliest proposal.  Scores are exact rationals so that ties and
half-point table entries never depend on floating-point rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from .corpus import AnaphorAnnotation, Document, Position, iter_anaphors
from .lexicon import (LexiconSet, SimLevel, best_similarity,
                      best_similarity_to_codes)
from .salience import (SalienceEntry, SalienceList, TOPIC, classify_topic_focus,
                       distance, salience_before)

METHODS = (1, 2, 3, 4, 5)
ALL_METHODS = frozenset(METHODS)


def code_mode_for_method(method: int) -> str:
    """Example-based rules use original thesaurus codes only under method 4."""
    return "original" if method == 4 else "modified"


# ---------------------------------------------------------------------------
# Candidate targets

@dataclass(frozen=True)
class Target:
    """What a proposal points at: a phrase, a sentence's event, a clause,
    or one of the special readings."""

    kind: str
    phrase_id: Optional[str] = None
    sentence_index: Optional[int] = None
    clause_index: Optional[int] = None
    anchor: Optional[str] = None    # anaphor id owning a per-anaphor reading

    @staticmethod
    def for_phrase(phrase_id: str) -> "Target":
        return Target(kind="phrase", phrase_id=phrase_id)

    @staticmethod
    def for_sentence(index: int) -> "Target":
        return Target(kind="sentence", sentence_index=index)

    @staticmethod
    def for_clause(sentence_index: int, clause_index: int,
                   head_phrase: Optional[str] = None) -> "Target":
        return Target(kind="clause", sentence_index=sentence_index,
                      clause_index=clause_index, phrase_id=head_phrase)

    @staticmethod
    def new_individual(anchor: str) -> "Target":
        return Target(kind="new-individual", anchor=anchor)

    @staticmethod
    def conjunction_reading(anchor: str) -> "Target":
        return Target(kind="conjunction-reading", anchor=anchor)

    def key(self) -> tuple:
        """Identity used when merging proposals for the same entity."""
        if self.kind == "phrase":
            return ("phrase", self.phrase_id)
        if self.kind == "sentence":
            return ("sentence", self.sentence_index)
        if self.kind == "clause":
            return ("clause", self.sentence_index, self.clause_index)
        if self.kind in ("new-individual", "conjunction-reading"):
            return (self.kind, self.anchor)
        return (self.kind,)

    def render(self) -> str:
        if self.kind == "phrase":
            return self.phrase_id or "?"
        if self.kind == "sentence":
            return f"sent:{self.sentence_index}"
        if self.kind == "clause":
            return f"clause:{self.sentence_index}:{self.clause_index}"
        return self.kind


@dataclass(frozen=True)
class Proposal:
    target: Target
    points: Fraction
    rule_id: str
    order: int
    parts: tuple[tuple[str, Fraction], ...] = ()

    def contributions(self) -> tuple[tuple[str, Fraction], ...]:
        return self.parts or ((self.rule_id, self.points),)


@dataclass(frozen=True)
class Candidate:
    target: Target
    proposed_by: str
    proposal_order: int


class ScoredCandidate:
    """A candidate with its accumulated per-rule contributions."""

    def __init__(self, candidate: Candidate,
                 contributions: list[tuple[str, Fraction]]):
        self.candidate = candidate
        self.contributions = contributions

    @property
    def total(self) -> Fraction:
        return sum((points for _, points in self.contributions), Fraction(0))

    def __repr__(self) -> str:
        return (f"ScoredCandidate({self.candidate.target.render()}, "
                f"total={self.total}, order={self.candidate.proposal_order})")


@dataclass(frozen=True)
class Rule:
    rule_id: str
    phase: str                       # "enumerating" | "judging"
    body: Callable
    kinds: Optional[frozenset[str]] = None   # None = any anaphor kind
    methods: frozenset[int] = ALL_METHODS

    def applies_to(self, annotation: AnaphorAnnotation) -> bool:
        return self.kinds is None or annotation.kind in self.kinds


@dataclass(frozen=True)
class RulePack:
    enumerating: tuple[Rule, ...]
    judging: tuple[Rule, ...]
    agenda_hooks: tuple[Callable, ...] = ()
    tables: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)


@dataclass
class Resolution:
    anaphor_id: str
    anaphor_kind: str
    position: Position
    winner: Optional[ScoredCandidate]
    scoreboard: list[ScoredCandidate]
    trace: list[str]
    notes: list[str]

    @property
    def winner_target(self) -> Optional[Target]:
        return self.winner.candidate.target if self.winner is not None else None


def format_points(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return str(float(value))


# ---------------------------------------------------------------------------
# Resolution context

class ResolutionContext:
    """Everything a rule body may consult while scoring one anaphor."""

    def __init__(self, doc: Document, lex: LexiconSet, position: Position,
                 annotation: AnaphorAnnotation, method: int,
                 resolutions: Optional[dict[str, Optional[Target]]] = None,
                 tables: Optional[dict] = None, config: Optional[dict] = None,
                 flags: Optional[dict] = None):
        self.doc = doc
        self.lex = lex
        self.position = position
        self.annotation = annotation
        self.method = method
        self.code_mode = code_mode_for_method(method)
        self.resolutions = resolutions if resolutions is not None else {}
        self.tables = tables or {}
        self.config = config or {}
        self.flags = flags or {}
        self.notes: list[str] = []
        self.phrase_map = doc.phrase_index()
        self.phrase = doc.phrase_at(position)
        self.sentence = doc.sentences[position.sentence]
        self.clause_index, self.clause = doc.clause_at(position)
        self.salience: SalienceList = salience_before(doc, position, self.resolutions)
        # An overt anaphor phrase that is itself a topic stands between its
        # own candidates and the anaphor, so it shifts every distance by one.
        classified = classify_topic_focus(self.phrase)
        self.self_offset = int(self.phrase.surface != "" and classified is not None
                               and classified[0] == TOPIC)

    # -- positions and structure

    def candidate_distance(self, entry: SalienceEntry) -> int:
        return distance(self.salience, entry) + self.self_offset

    def previous_sentence(self):
        if self.position.sentence == 0:
            return None
        return self.doc.sentences[self.position.sentence - 1]

    def next_sentence(self):
        if self.position.sentence + 1 >= len(self.doc.sentences):
            return None
        return self.doc.sentences[self.position.sentence + 1]

    def get_phrase(self, phrase_id: str):
        entry = self.phrase_map.get(phrase_id)
        return entry[1] if entry is not None else None

    def position_of(self, phrase_id: str) -> Optional[Position]:
        entry = self.phrase_map.get(phrase_id)
        return entry[0] if entry is not None else None

    def candidate_phrase(self, candidate: Candidate):
        """The phrase behind a candidate, or None for special targets."""
        target = candidate.target
        if target.kind != "phrase" or target.phrase_id is None:
            return None
        return self.get_phrase(target.phrase_id)

    def noun_candidate(self, candidate: Candidate):
        """The phrase when the candidate is a noun phrase, else None."""
        phrase = self.candidate_phrase(candidate)
        if phrase is not None and phrase.pos == "noun":
            return phrase
        return None

    def enclosing_quotation(self):
        span = self.sentence.quotation
        if span is None:
            return None
        ids = [p.phrase_id for p in self.sentence.phrases()]
        start, end = ids.index(span.start), ids.index(span.end)
        if start <= self.position.phrase <= end:
            return span
        return None

    # -- lexicon access with unknown-word flagging

    def similarity(self, lemma_a: str, lemma_b: str) -> SimLevel:
        return best_similarity(lemma_a, lemma_b, self.lex,
                               code_mode=self.code_mode, notes=self.notes)

    def similarity_to_codes(self, lemma: str, codes) -> SimLevel:
        return best_similarity_to_codes(lemma, codes, self.lex,
                                        code_mode=self.code_mode, notes=self.notes)

    def markers_of(self, lemma: str) -> frozenset[str]:
        return self.lex.markers.get(lemma, frozenset())

    def note(self, message: str) -> None:
        if message not in self.notes:
            self.notes.append(message)


# ---------------------------------------------------------------------------
# Core operations

def merge_duplicate_proposals(proposals: list[Proposal]) -> list[Proposal]:
    """Combine proposals for the same target: points summed, order = min."""
    merged: dict[tuple, Proposal] = {}
    for proposal in proposals:
        key = proposal.target.key()
        existing = merged.get(key)
        if existing is None:
            merged[key] = replace(proposal, parts=proposal.contributions())
        else:
            first = min(existing, proposal, key=lambda p: p.order)
            merged[key] = Proposal(
                target=first.target,
                points=existing.points + proposal.points,
                rule_id=first.rule_id,
                order=first.order,
                parts=existing.parts + proposal.contributions(),
            )
    return sorted(merged.values(), key=lambda p: p.order)


def resolve_anaphor(ctx: ResolutionContext, pack: RulePack) -> Resolution:
    """Apply a rule pack to one anaphor and pick the best candidate."""
    annotation = ctx.annotation
    trace: list[str] = []
    running: dict[tuple, Fraction] = {}

    def emit(rule_id: str, target: Target, points: Fraction) -> None:
        key = target.key()
        running[key] = running.get(key, Fraction(0)) + points
        trace.append("\t".join((annotation.anaphor_id, rule_id, target.render(),
                                format_points(points), format_points(running[key]))))

    proposals: list[Proposal] = []
    order = 0
    for rule in pack.enumerating:
        if not rule.applies_to(annotation) or ctx.method not in rule.methods:
            continue
        for target, points in rule.body(ctx) or ():
            points = Fraction(points)
            proposals.append(Proposal(target=target, points=points,
                                      rule_id=rule.rule_id, order=order))
            emit(rule.rule_id, target, points)
            order += 1

    scoreboard: list[ScoredCandidate] = []
    for proposal in merge_duplicate_proposals(proposals):
        candidate = Candidate(target=proposal.target,
                              proposed_by=proposal.rule_id,
                              proposal_order=proposal.order)
        scoreboard.append(ScoredCandidate(candidate, list(proposal.contributions())))

    for rule in pack.judging:
        if not rule.applies_to(annotation) or ctx.method not in rule.methods:
            continue
        for scored in scoreboard:
            points = rule.body(ctx, scored.candidate)
            if points is None:
                continue
            points = Fraction(points)
            scored.contributions.append((rule.rule_id, points))
            emit(rule.rule_id, scored.candidate.target, points)

    winner: Optional[ScoredCandidate] = None
    if scoreboard:
        winner = min(scoreboard,
                     key=lambda sc: (-sc.total, sc.candidate.proposal_order))
    else:
        trace.append("\t".join((annotation.anaphor_id, "engine", "unresolved", "0", "0")))
        ctx.note("unresolved: no rule proposed a candidate")

    return Resolution(
        anaphor_id=annotation.anaphor_id,
        anaphor_kind=annotation.kind,
        position=ctx.position,
        winner=winner,
        scoreboard=scoreboard,
        trace=trace,
        notes=ctx.notes,
    )


def resolve_document(doc: Document, lex: LexiconSet, pack: RulePack,
                     method: int = 1) -> list[Resolution]:
    """Resolve every anaphor of a document left to right.

    Each resolution's referent becomes visible to the salience lists of
    later anaphors.  Agenda hooks may reorder the processing agenda and
    attach per-anaphor flags (the output stays in document order).
    """
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    agenda = [(position, annotation, {}) for position, annotation in iter_anaphors(doc)]
    for hook in pack.agenda_hooks:
        agenda = hook(doc, agenda)

    resolved_targets: dict[str, Optional[Target]] = {}
    resolutions: list[Resolution] = []
    for position, annotation, flags in agenda:
        ctx = ResolutionContext(
            doc=doc, lex=lex, position=position, annotation=annotation,
            method=method, resolutions=resolved_targets,
            tables=pack.tables, config=pack.config, flags=flags,
        )
        resolution = resolve_anaphor(ctx, pack)
        resolved_targets[annotation.anaphor_id] = resolution.winner_target
        resolutions.append(resolution)
    resolutions.sort(key=lambda r: r.position)
    return resolutions
