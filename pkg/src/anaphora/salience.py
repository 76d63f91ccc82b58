"""Topic/focus classification and the ordered salience list.

Surface particles decide whether a phrase is a topic or a focus and with
what weight; the distance between an anaphor and a candidate is counted
in intervening topic/focus entries, not in sentences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .corpus import Document, Phrase, Position

TOPIC = "topic"
FOCUS = "focus"

# (kind, weight, nominal class, particles); checked top-down, first match
# wins.  "pronoun" covers overt pronouns and zero-pronoun placeholders.
WEIGHT_ROWS: tuple[tuple[str, int, str, tuple[str, ...]], ...] = (
    (TOPIC, 21, "pronoun", ("ga", "wa")),
    (TOPIC, 20, "noun", ("wa", "niwa")),
    (FOCUS, 16, "pronoun", ("wo", "ni", "kara")),
    (FOCUS, 15, "noun", ("ga", "mo", "da", "nara")),
    (FOCUS, 14, "noun", ("wo", "ni", ",", ".")),
    (FOCUS, 13, "noun", ("he", "de", "kara")),
)


@dataclass(frozen=True)
class SalienceEntry:
    entity: object          # engine.Target for the discourse entity
    kind: str               # TOPIC or FOCUS
    weight: int
    position: Position
    lemma: Optional[str] = None   # lemma of the underlying noun, when known
    in_quotation: bool = False


@dataclass(frozen=True)
class SalienceList:
    entries: tuple[SalienceEntry, ...] = ()

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def classify_topic_focus(phrase: Phrase) -> Optional[tuple[str, int]]:
    """(kind, weight) for a phrase's surface expression, or None.

    Pure function of the phrase's word class and particle.
    """
    if phrase.particle is None:
        return None
    if phrase.pos == "pronoun":
        nominal = "pronoun"
    elif phrase.pos == "noun":
        nominal = "noun"
    else:
        return None
    for kind, weight, row_class, particles in WEIGHT_ROWS:
        if nominal == row_class and phrase.particle in particles:
            return kind, weight
    return None


def salience_before(doc: Document, anaphor_position: Position,
                    resolutions: Optional[dict] = None) -> SalienceList:
    """Topic/focus entries strictly before a position, in document order.

    An annotated pronoun or zero placeholder contributes the entity it
    resolved to; if it was processed but left unresolved it contributes a
    fresh individual, and if it has not been processed yet (a rule pack
    reordered the agenda) it contributes nothing.  Overt nouns contribute
    themselves.
    """
    from . import engine  # local import; engine depends on this module

    resolutions = resolutions or {}
    entries = []
    for pos, phrase in doc.phrases():
        if pos >= anaphor_position:
            break
        classified = classify_topic_focus(phrase)
        if classified is None:
            continue
        kind, weight = classified
        lemma: Optional[str] = phrase.lemma or None
        if phrase.pos == "pronoun" and phrase.anaphor is not None:
            if phrase.anaphor.anaphor_id not in resolutions:
                continue  # pending under a reordered agenda
            target = resolutions[phrase.anaphor.anaphor_id]
            if target is None:
                entity = engine.Target.new_individual(phrase.anaphor.anaphor_id)
                lemma = None
            else:
                entity = target
                lemma = None
                if target.kind == "phrase":
                    _, referent = doc.phrase_index()[target.phrase_id]
                    lemma = referent.lemma or None
        else:
            entity = engine.Target.for_phrase(phrase.phrase_id)
        sentence = doc.sentences[pos.sentence]
        entries.append(SalienceEntry(
            entity=entity,
            kind=kind,
            weight=weight,
            position=pos,
            lemma=lemma,
            in_quotation=_in_quotation(sentence, phrase.phrase_id),
        ))
    return SalienceList(entries=tuple(entries))


def _in_quotation(sentence, phrase_id: str) -> bool:
    span = sentence.quotation
    if span is None:
        return False
    ids = [p.phrase_id for p in sentence.phrases()]
    if phrase_id not in ids:
        return False
    i = ids.index(phrase_id)
    return ids.index(span.start) <= i <= ids.index(span.end)


def distance(salience: SalienceList, candidate: SalienceEntry) -> int:
    """Entries strictly after the candidate (the most recent entry is 0)."""
    entries = salience.entries
    try:
        idx = entries.index(candidate)
    except ValueError:
        raise ValueError("candidate entry is not a member of the salience list") from None
    return len(entries) - idx - 1
