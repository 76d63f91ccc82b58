"""Annotated-document data model and corpus-file parsing.

Input documents arrive already segmented into sentences, clauses and
phrases, with particles, case roles, quotation spans and anaphor
annotations supplied by the annotator.  This module only parses and
validates that representation; it performs no linguistic analysis.

Zero pronouns are explicit placeholder phrases with an empty surface,
attached to their governing verb's case slot, so that every anaphor has
a position for distance counting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional


POS_VALUES = ("noun", "pronoun", "verb", "adverb", "adjective", "other")
LINK_VALUES = ("main", "coordinate", "subordinate", "embedded")
ANAPHOR_KINDS = (
    "demonstrative-pronoun",
    "demonstrative-adjective",
    "demonstrative-adverb",
    "personal-1",
    "personal-2",
    "personal-3",
    "zero",
)
CASE_NAMES = ("ga", "wo", "ni", "de", "kara", "he", "to", "made", "yori", "no")
# Targets a gold annotation may name besides a phrase id or "sent:<i>".
SPECIAL_TARGETS = (
    "previous-sentence",
    "next-sentence",
    "new-individual",
    "conjunction-reading",
    "first-person",
    "second-person",
)


class CorpusError(ValueError):
    """Base class for corpus-format problems."""


class CorpusParseError(CorpusError):
    """Structural problem (missing field, bad enum value); names the path."""


class CorpusValidationError(CorpusError):
    """Well-formed JSON that violates a document invariant."""


class Position(NamedTuple):
    sentence: int
    phrase: int  # flat index within the sentence, across clauses


@dataclass(frozen=True)
class AnaphorAnnotation:
    anaphor_id: str
    kind: str
    subform: str
    modified_noun: Optional[str] = None
    gold_referent: Optional[str] = None


@dataclass(frozen=True)
class Phrase:
    phrase_id: str
    surface: str
    lemma: str
    pos: str
    particle: Optional[str] = None
    case_role: Optional[str] = None
    governing_verb: Optional[str] = None
    auxiliaries: tuple[str, ...] = ()
    anaphor: Optional[AnaphorAnnotation] = None

    @property
    def is_zero_placeholder(self) -> bool:
        return self.surface == "" and self.anaphor is not None and self.anaphor.kind == "zero"


@dataclass(frozen=True)
class Clause:
    link: str
    phrases: tuple[Phrase, ...]
    conjunctive_particle: Optional[str] = None
    conditional_form: bool = False
    head_verb: Optional[str] = None


@dataclass(frozen=True)
class QuotationSpan:
    start: str  # phrase id, inclusive
    end: str    # phrase id, inclusive
    speech_verb: Optional[str] = None


@dataclass(frozen=True)
class Sentence:
    index: int
    clauses: tuple[Clause, ...]
    quotation: Optional[QuotationSpan] = None

    def phrases(self) -> Iterator[Phrase]:
        for clause in self.clauses:
            yield from clause.phrases


@dataclass(frozen=True)
class Document:
    doc_id: str
    sentences: tuple[Sentence, ...] = ()

    def phrases(self) -> Iterator[tuple[Position, Phrase]]:
        for sentence in self.sentences:
            for p_idx, phrase in enumerate(sentence.phrases()):
                yield Position(sentence.index, p_idx), phrase

    def phrase_index(self) -> dict[str, tuple[Position, Phrase]]:
        return {phrase.phrase_id: (pos, phrase) for pos, phrase in self.phrases()}

    def phrase_at(self, position: Position) -> Phrase:
        sentence = self.sentences[position.sentence]
        for p_idx, phrase in enumerate(sentence.phrases()):
            if p_idx == position.phrase:
                return phrase
        raise KeyError(position)

    def clause_at(self, position: Position) -> tuple[int, Clause]:
        """Clause index and clause containing the flat phrase position."""
        sentence = self.sentences[position.sentence]
        flat = 0
        for c_idx, clause in enumerate(sentence.clauses):
            if position.phrase < flat + len(clause.phrases):
                return c_idx, clause
            flat += len(clause.phrases)
        raise KeyError(position)


def iter_anaphors(doc: Document) -> list[tuple[Position, AnaphorAnnotation]]:
    """All anaphor annotations in (sentence, phrase-order) order.

    The traversal is deterministic; resolution proceeds left to right in
    exactly this order unless a rule pack's agenda hook reorders items.
    """
    out = []
    for pos, phrase in doc.phrases():
        if phrase.anaphor is not None:
            out.append((pos, phrase.anaphor))
    return out


# ---------------------------------------------------------------------------
# Parsing

def _check(cond: bool, path: str, message: str, error=CorpusParseError) -> None:
    if not cond:
        raise error(f"{path}: {message}")


def _get(obj: dict, key: str, path: str, required: bool = True, default=None):
    if key not in obj:
        _check(not required, f"{path}.{key}", "missing required field")
        return default
    return obj[key]


def _parse_anaphor(obj, path: str) -> AnaphorAnnotation:
    _check(isinstance(obj, dict), path, "anaphor must be an object")
    kind = _get(obj, "kind", path)
    _check(kind in ANAPHOR_KINDS, f"{path}.kind", f"unknown anaphor kind {kind!r}")
    subform = _get(obj, "subform", path)
    _check(isinstance(subform, str) and subform != "", f"{path}.subform", "must be a non-empty string")
    ann = AnaphorAnnotation(
        anaphor_id=_get(obj, "anaphor_id", path),
        kind=kind,
        subform=subform,
        modified_noun=_get(obj, "modified_noun", path, required=False),
        gold_referent=_get(obj, "gold_referent", path, required=False),
    )
    _check(isinstance(ann.anaphor_id, str) and ann.anaphor_id != "", f"{path}.anaphor_id", "must be a non-empty string")
    if ann.kind == "zero":
        _check(ann.subform in CASE_NAMES, f"{path}.subform",
               f"zero pronoun subform must name a case, got {ann.subform!r}")
    if ann.kind == "demonstrative-adjective":
        _check(ann.modified_noun is not None, f"{path}.modified_noun",
               "demonstrative adjectives must carry the modified noun")
    return ann


def _parse_phrase(obj, path: str) -> Phrase:
    _check(isinstance(obj, dict), path, "phrase must be an object")
    pos = _get(obj, "pos", path)
    _check(pos in POS_VALUES, f"{path}.pos", f"unknown pos {pos!r}")
    case_role = _get(obj, "case_role", path, required=False)
    if case_role is not None:
        _check(case_role in CASE_NAMES, f"{path}.case_role", f"unknown case {case_role!r}")
    aux = _get(obj, "auxiliaries", path, required=False, default=[])
    _check(isinstance(aux, list), f"{path}.auxiliaries", "must be a list")
    anaphor_obj = _get(obj, "anaphor", path, required=False)
    anaphor = _parse_anaphor(anaphor_obj, f"{path}.anaphor") if anaphor_obj is not None else None
    phrase = Phrase(
        phrase_id=_get(obj, "phrase_id", path),
        surface=_get(obj, "surface", path),
        lemma=_get(obj, "lemma", path),
        pos=pos,
        particle=_get(obj, "particle", path, required=False),
        case_role=case_role,
        governing_verb=_get(obj, "governing_verb", path, required=False),
        auxiliaries=tuple(aux),
        anaphor=anaphor,
    )
    if anaphor is not None:
        ok = phrase.pos in ("pronoun", "noun") or phrase.is_zero_placeholder
        _check(ok, f"{path}.pos",
               "anaphor annotations belong on pronoun/noun phrases or empty-surface zero placeholders",
               CorpusValidationError)
    return phrase


def _parse_clause(obj, path: str) -> Clause:
    _check(isinstance(obj, dict), path, "clause must be an object")
    link = _get(obj, "link", path)
    _check(link in LINK_VALUES, f"{path}.link", f"unknown clause link {link!r}")
    phrases_obj = _get(obj, "phrases", path)
    _check(isinstance(phrases_obj, list) and phrases_obj, f"{path}.phrases", "must be a non-empty list")
    return Clause(
        link=link,
        phrases=tuple(_parse_phrase(p, f"{path}.phrases[{i}]") for i, p in enumerate(phrases_obj)),
        conjunctive_particle=_get(obj, "conjunctive_particle", path, required=False),
        conditional_form=bool(_get(obj, "conditional_form", path, required=False, default=False)),
        head_verb=_get(obj, "head_verb", path, required=False),
    )


def _parse_sentence(obj, path: str) -> Sentence:
    _check(isinstance(obj, dict), path, "sentence must be an object")
    index = _get(obj, "index", path)
    _check(isinstance(index, int), f"{path}.index", "must be an integer")
    clauses_obj = _get(obj, "clauses", path)
    _check(isinstance(clauses_obj, list) and clauses_obj, f"{path}.clauses", "must be a non-empty list")
    quotation = None
    q = _get(obj, "quotation", path, required=False)
    if q is not None:
        quotation = QuotationSpan(
            start=_get(q, "start", f"{path}.quotation"),
            end=_get(q, "end", f"{path}.quotation"),
            speech_verb=_get(q, "speech_verb", f"{path}.quotation", required=False),
        )
    return Sentence(
        index=index,
        clauses=tuple(_parse_clause(c, f"{path}.clauses[{i}]") for i, c in enumerate(clauses_obj)),
        quotation=quotation,
    )


def validate_document(doc: Document) -> None:
    """Enforce document-level invariants; raises CorpusValidationError."""
    for i, sentence in enumerate(doc.sentences):
        if sentence.index != i:
            raise CorpusValidationError(
                f"sentences[{i}].index: expected contiguous index {i}, got {sentence.index}")
        mains = [c for c in sentence.clauses if c.link == "main"]
        if len(mains) > 1:
            raise CorpusValidationError(
                f"sentences[{i}]: at most one clause may be the main clause")

    phrase_ids: dict[str, Position] = {}
    anaphor_ids: set[str] = set()
    for pos, phrase in doc.phrases():
        if phrase.phrase_id in phrase_ids:
            raise CorpusValidationError(f"duplicate phrase id {phrase.phrase_id!r}")
        phrase_ids[phrase.phrase_id] = pos
        if phrase.anaphor is not None:
            if phrase.anaphor.anaphor_id in anaphor_ids:
                raise CorpusValidationError(f"duplicate anaphor id {phrase.anaphor.anaphor_id!r}")
            anaphor_ids.add(phrase.anaphor.anaphor_id)

    n_sentences = len(doc.sentences)

    def check_ref(ref: str, where: str) -> None:
        if ref in phrase_ids:
            return
        raise CorpusValidationError(f"{where}: reference to unknown phrase {ref!r}")

    for pos, phrase in doc.phrases():
        where = f"phrase {phrase.phrase_id!r}"
        if phrase.governing_verb is not None:
            check_ref(phrase.governing_verb, where)
        gold = phrase.anaphor.gold_referent if phrase.anaphor else None
        if gold is not None and gold not in SPECIAL_TARGETS:
            if gold.startswith("sent:"):
                idx = gold.split(":", 1)[1]
                if not (idx.isdigit() and int(idx) < n_sentences):
                    raise CorpusValidationError(f"{where}: gold referent names unknown sentence {gold!r}")
            elif gold not in phrase_ids:
                raise CorpusValidationError(f"{where}: gold referent names unknown target {gold!r}")

    for sentence in doc.sentences:
        if sentence.quotation is None:
            continue
        span = sentence.quotation
        local_ids = [p.phrase_id for p in sentence.phrases()]
        for ref in (span.start, span.end):
            if ref not in local_ids:
                raise CorpusValidationError(
                    f"sentences[{sentence.index}].quotation: {ref!r} is not a phrase of this sentence")
        if local_ids.index(span.start) > local_ids.index(span.end):
            raise CorpusValidationError(
                f"sentences[{sentence.index}].quotation: span start after span end")
        if span.speech_verb is not None:
            check_ref(span.speech_verb, f"sentences[{sentence.index}].quotation")
    for clause_holder in doc.sentences:
        for clause in clause_holder.clauses:
            if clause.head_verb is not None and clause.head_verb not in phrase_ids:
                raise CorpusValidationError(
                    f"sentences[{clause_holder.index}]: clause head verb {clause.head_verb!r} unknown")


def parse_document(text: str) -> Document:
    """Parse one UTF-8 JSON document and validate all invariants."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorpusParseError(f"not valid JSON: {exc}") from exc
    _check(isinstance(obj, dict), "$", "document must be a JSON object")
    doc_id = _get(obj, "doc_id", "$")
    _check(isinstance(doc_id, str) and doc_id != "", "$.doc_id", "must be a non-empty string")
    sentences_obj = _get(obj, "sentences", "$")
    _check(isinstance(sentences_obj, list), "$.sentences", "must be a list")
    doc = Document(
        doc_id=doc_id,
        sentences=tuple(_parse_sentence(s, f"$.sentences[{i}]") for i, s in enumerate(sentences_obj)),
    )
    validate_document(doc)
    return doc


def load_document(path) -> Document:
    with open(path, encoding="utf-8") as handle:
        return parse_document(handle.read())


# ---------------------------------------------------------------------------
# Serialization (inverse of parse_document)

def _anaphor_to_obj(ann: AnaphorAnnotation) -> dict:
    obj = {"anaphor_id": ann.anaphor_id, "kind": ann.kind, "subform": ann.subform}
    if ann.modified_noun is not None:
        obj["modified_noun"] = ann.modified_noun
    if ann.gold_referent is not None:
        obj["gold_referent"] = ann.gold_referent
    return obj


def _phrase_to_obj(phrase: Phrase) -> dict:
    obj = {
        "phrase_id": phrase.phrase_id,
        "surface": phrase.surface,
        "lemma": phrase.lemma,
        "pos": phrase.pos,
    }
    if phrase.particle is not None:
        obj["particle"] = phrase.particle
    if phrase.case_role is not None:
        obj["case_role"] = phrase.case_role
    if phrase.governing_verb is not None:
        obj["governing_verb"] = phrase.governing_verb
    if phrase.auxiliaries:
        obj["auxiliaries"] = list(phrase.auxiliaries)
    if phrase.anaphor is not None:
        obj["anaphor"] = _anaphor_to_obj(phrase.anaphor)
    return obj


def serialize_document(doc: Document) -> str:
    sentences = []
    for sentence in doc.sentences:
        s_obj: dict = {"index": sentence.index, "clauses": []}
        for clause in sentence.clauses:
            c_obj: dict = {"link": clause.link}
            if clause.conjunctive_particle is not None:
                c_obj["conjunctive_particle"] = clause.conjunctive_particle
            if clause.conditional_form:
                c_obj["conditional_form"] = True
            if clause.head_verb is not None:
                c_obj["head_verb"] = clause.head_verb
            c_obj["phrases"] = [_phrase_to_obj(p) for p in clause.phrases]
            s_obj["clauses"].append(c_obj)
        if sentence.quotation is not None:
            q_obj = {"start": sentence.quotation.start, "end": sentence.quotation.end}
            if sentence.quotation.speech_verb is not None:
                q_obj["speech_verb"] = sentence.quotation.speech_verb
            s_obj["quotation"] = q_obj
        sentences.append(s_obj)
    return json.dumps({"doc_id": doc.doc_id, "sentences": sentences},
                      ensure_ascii=False, indent=2)
