"""Stock rule pack for personal pronouns.

First and second person pronouns appear mostly in quotations, so the
pack first estimates who speaks and who listens from the verb phrase
carrying the speaking action, then proposes speaker or hearer directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..corpus import Document, Phrase, QuotationSpan, Sentence
from ..engine import ResolutionContext, Rule, Target
from ..lexicon import LexiconSet
from ..salience import TOPIC


@dataclass(frozen=True)
class SpeechContext:
    speaker: Optional[Target] = None
    hearer: Optional[Target] = None
    source_verb: Optional[str] = None


def _sentence_of_quotation(quotation: QuotationSpan, doc: Document) -> Optional[Sentence]:
    index = doc.phrase_index().get(quotation.start)
    if index is None:
        return None
    return doc.sentences[index[0].sentence]


def _phrase_as_person(phrase: Phrase, resolutions: dict) -> Optional[Target]:
    """A case filler as a person: overt phrases stand for themselves,
    zero placeholders for whatever they already resolved to."""
    if phrase.surface == "":
        if phrase.anaphor is None:
            return None
        target = resolutions.get(phrase.anaphor.anaphor_id)
        if target is not None and target.kind == "phrase":
            return target
        return None
    return Target.for_phrase(phrase.phrase_id)


def _case_filler(sentence: Sentence, verb_id: str, case: str, doc: Document,
                 resolutions: dict) -> Optional[Target]:
    clause_of_verb = None
    for clause in sentence.clauses:
        if any(p.phrase_id == verb_id for p in clause.phrases):
            clause_of_verb = clause
            break
    for phrase in sentence.phrases():
        if phrase.case_role != case:
            continue
        if phrase.governing_verb == verb_id:
            return _phrase_as_person(phrase, resolutions)
        if phrase.governing_verb is None and clause_of_verb is not None \
                and any(p.phrase_id == phrase.phrase_id for p in clause_of_verb.phrases):
            return _phrase_as_person(phrase, resolutions)
    return None


def _speech_verb_of(quotation: QuotationSpan, sentence: Sentence, doc: Document,
                    lex: LexiconSet) -> tuple[Optional[str], Optional[Sentence]]:
    """The verb phrase carrying the speaking action and its sentence."""
    if quotation.speech_verb is not None:
        index = doc.phrase_index().get(quotation.speech_verb)
        if index is not None:
            return quotation.speech_verb, doc.sentences[index[0].sentence]
    ids = [p.phrase_id for p in sentence.phrases()]
    end = ids.index(quotation.end)
    for phrase in list(sentence.phrases())[end + 1:]:
        if phrase.pos == "verb" and phrase.lemma in lex.speech_verbs:
            return phrase.phrase_id, sentence
    if sentence.index > 0:
        previous = doc.sentences[sentence.index - 1]
        for phrase in reversed(list(previous.phrases())):
            if phrase.pos == "verb":
                return phrase.phrase_id, previous
    return None, None


def estimate_speech_context(quotation: QuotationSpan, doc: Document,
                            lex: LexiconSet,
                            resolutions: Optional[dict] = None) -> SpeechContext:
    """Speaker = ga-case filler and hearer = ni-case filler of the verb
    phrase carrying the speaking action.

    That verb is the first speech verb following the quotation in its
    sentence; failing that, the last verb phrase of the previous
    sentence.  An annotated speech verb on the span overrides the search.
    """
    resolutions = resolutions or {}
    sentence = _sentence_of_quotation(quotation, doc)
    if sentence is None:
        return SpeechContext()
    verb_id, verb_sentence = _speech_verb_of(quotation, sentence, doc, lex)
    if verb_id is None or verb_sentence is None:
        return SpeechContext()
    speaker = _case_filler(verb_sentence, verb_id, "ga", doc, resolutions)
    hearer = _case_filler(verb_sentence, verb_id, "ni", doc, resolutions)
    if speaker is not None and hearer is not None and speaker.key() == hearer.key():
        hearer = None
    return SpeechContext(speaker=speaker, hearer=hearer, source_verb=verb_id)


def _context_for(ctx: ResolutionContext) -> Optional[SpeechContext]:
    quotation = ctx.enclosing_quotation()
    if quotation is None:
        return None
    return estimate_speech_context(quotation, ctx.doc, ctx.lex, ctx.resolutions)


def cer1_first_person(ctx: ResolutionContext):
    """A first person pronoun in a quotation names the speaker."""
    speech = _context_for(ctx)
    if speech is None or speech.speaker is None:
        return []
    return [(speech.speaker, 25)]


def cer2_second_person(ctx: ResolutionContext):
    """A second person pronoun in a quotation names the hearer."""
    speech = _context_for(ctx)
    if speech is None or speech.hearer is None:
        return []
    return [(speech.hearer, 25)]


def cer3_third_person(ctx: ResolutionContext):
    """A third person pronoun avoids both speech participants."""
    speech = _context_for(ctx)
    if speech is None:
        return []
    proposals = []
    if speech.speaker is not None:
        proposals.append((speech.speaker, -10))
    if speech.hearer is not None:
        proposals.append((speech.hearer, -10))
    return proposals


def cer_salience(ctx: ResolutionContext):
    """Noun-phrase candidates for third person pronouns, on the same
    topic/focus scoring the demonstrative pack uses."""
    proposals = []
    for entry in ctx.salience:
        dist = ctx.candidate_distance(entry)
        if entry.kind == TOPIC:
            points = entry.weight - dist - 2
        else:
            points = entry.weight - dist + 4
        proposals.append((entry.entity, points))
    return proposals


RULES = (
    Rule("per_cer1", "enumerating", cer1_first_person, kinds=frozenset({"personal-1"})),
    Rule("per_cer2", "enumerating", cer2_second_person, kinds=frozenset({"personal-2"})),
    Rule("per_cer3", "enumerating", cer3_third_person, kinds=frozenset({"personal-3"})),
    Rule("per_salience", "enumerating", cer_salience, kinds=frozenset({"personal-3"})),
)
