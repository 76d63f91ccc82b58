"""Stock rule pack for demonstrative pronouns, adjectives and adverbs.

Enumerating rules propose noun phrases from the salience list, sentence
events, a conjunction reading and a fresh individual; judging rules
apply the human/location code tables and the "X no Y" co-occurrence
tables.  Rule ids keep their historical numbering; gaps are rules this
pack does not ship.
"""

from __future__ import annotations

from ..engine import ResolutionContext, Rule, Target
from ..lexicon import SimLevel, is_hyponym, xnoy_examples
from ..salience import TOPIC

DEMONSTRATIVE_KINDS = frozenset(
    {"demonstrative-pronoun", "demonstrative-adjective", "demonstrative-adverb"})
ADJECTIVE_SUBFORMS_WITH_SALIENCE = ("sono", "kono", "ano")
EVENT_PRONOUN_SUBFORMS = ("kore", "sore", "are")
CONJUNCTION_SUBFORMS = ("kokode", "sokode")
PLACE_SUBFORMS = ("koko", "soko", "asoko", "kokode", "sokode")
SO_ADVERB_SUBFORMS = ("sou", "soushite", "sonoyouni")
CONTRAST_PARTICLES = ("ga", "daga", "keredo")

MARKER_METHODS = frozenset({1, 2})
EXAMPLE_METHODS = frozenset({1, 3, 4})


def _is_so_series(subform: str) -> bool:
    return subform.startswith("so")


def _clause_verb(clause) -> str | None:
    if clause.head_verb is not None:
        return clause.head_verb
    for phrase in reversed(clause.phrases):
        if phrase.pos == "verb":
            return phrase.phrase_id
    return None


def cer1_topic_focus(ctx: ResolutionContext):
    """Propose every earlier topic at weight-distance-2 and every earlier
    focus at weight-distance+4."""
    ann = ctx.annotation
    if ann.kind == "demonstrative-adjective" and ann.subform not in ADJECTIVE_SUBFORMS_WITH_SALIENCE:
        return []
    if ann.kind == "demonstrative-adverb":
        return []
    proposals = []
    for entry in ctx.salience:
        dist = ctx.candidate_distance(entry)
        if entry.kind == TOPIC:
            points = entry.weight - dist - 2
        else:
            points = entry.weight - dist + 4
        proposals.append((entry.entity, points))
    return proposals


def cer2_previous_sentence(ctx: ResolutionContext):
    """Propose the previous sentence's event at 15, or a preceding
    conditional contrast clause of the same sentence instead."""
    ann = ctx.annotation
    if ann.kind == "demonstrative-pronoun" and ann.subform not in EVENT_PRONOUN_SUBFORMS:
        return []
    for clause in reversed(ctx.sentence.clauses[:ctx.clause_index]):
        if clause.conditional_form and clause.conjunctive_particle in CONTRAST_PARTICLES:
            verb_id = _clause_verb(clause)
            if verb_id is not None:
                return [(Target.for_phrase(verb_id), 15)]
    previous = ctx.previous_sentence()
    if previous is None:
        return []
    return [(Target.for_sentence(previous.index), 15)]


def cer3_conjunction_reading(ctx: ResolutionContext):
    """A fused place demonstrative may simply act as a conjunction."""
    if ctx.annotation.subform not in CONJUNCTION_SUBFORMS:
        return []
    return [(Target.conjunction_reading(ctx.annotation.anaphor_id), 11)]


def cer5_new_individual(ctx: ResolutionContext):
    """Any demonstrative may introduce a new individual instead of
    referring back into the text."""
    return [(Target.new_individual(ctx.annotation.anaphor_id), 10)]


def cer7_adj_noun(ctx: ResolutionContext):
    """For "demonstrative adjective + noun", propose earlier mentions of
    the same noun at 45 and salient hyponyms of it at weight-distance+30."""
    ann = ctx.annotation
    noun = ann.modified_noun
    if noun is None:
        return []
    proposals = []
    for position, phrase in ctx.doc.phrases():
        if position >= ctx.position:
            break
        if phrase.pos == "noun" and phrase.lemma == noun:
            proposals.append((Target.for_phrase(phrase.phrase_id), 45))
    for entry in ctx.salience:
        if entry.lemma is None:
            continue
        if is_hyponym(entry.lemma, noun, ctx.lex):
            dist = ctx.candidate_distance(entry)
            proposals.append((entry.entity, entry.weight - dist + 30))
    return proposals


def cer9_sou_previous(ctx: ResolutionContext):
    """A so-series demonstrative adverb strongly prefers the previous
    sentence's event."""
    if not _is_so_series(ctx.annotation.subform):
        return []
    previous = ctx.previous_sentence()
    if previous is None:
        return []
    return [(Target.for_sentence(previous.index), 30)]


def cer10_cataphoric_main_clause(ctx: ResolutionContext):
    """From a subordinate contrast/manner clause, a so-series adverb can
    point forward to its own sentence's main clause."""
    if ctx.annotation.subform not in SO_ADVERB_SUBFORMS:
        return []
    clause = ctx.clause
    if clause.link != "subordinate":
        return []
    if clause.conjunctive_particle not in CONTRAST_PARTICLES + ("youni",):
        return []
    for c_idx, candidate in enumerate(ctx.sentence.clauses):
        if candidate.link == "main":
            return [(Target.for_clause(ctx.position.sentence, c_idx,
                                       head_phrase=_clause_verb(candidate)), 45)]
    return []


def cer_konna_direction(ctx: ResolutionContext):
    """"kon'na + noun" points at the next sentence only when it is marked
    ga/wo and the next sentence is quoted; otherwise at the previous one."""
    if ctx.annotation.subform != "kon'na":
        return []
    if ctx.phrase.particle in ("ga", "wo"):
        following = ctx.next_sentence()
        if following is not None and following.quotation is not None:
            return [(Target.for_sentence(following.index), 30)]
    previous = ctx.previous_sentence()
    if previous is None:
        return []
    return [(Target.for_sentence(previous.index), 30)]


def cjr1_not_human(ctx: ResolutionContext, candidate):
    """Demonstrative pronouns rarely refer to people."""
    phrase = ctx.noun_candidate(candidate)
    if phrase is None:
        return None
    if "HUM" in ctx.markers_of(phrase.lemma):
        return -10
    return None


def cjr2_human_similarity(ctx: ResolutionContext, candidate):
    """Penalty table over the candidate's similarity to the codes that
    signify human beings."""
    phrase = ctx.noun_candidate(candidate)
    if phrase is None:
        return None
    sim = ctx.similarity_to_codes(phrase.lemma, ctx.lex.human_codes)
    return ctx.tables["demonstrative_pronoun_human"][sim]


def _is_place_anaphor(ctx: ResolutionContext) -> bool:
    return ctx.annotation.subform in PLACE_SUBFORMS


def cjr3_location_marker(ctx: ResolutionContext, candidate):
    """Place demonstratives reward candidates marked as locations."""
    if not _is_place_anaphor(ctx):
        return None
    phrase = ctx.noun_candidate(candidate)
    if phrase is None:
        return None
    if "LOC" in ctx.markers_of(phrase.lemma):
        return 10
    return None


def cjr4_location_similarity(ctx: ResolutionContext, candidate):
    """Graded points over the candidate's similarity to the codes that
    signify locations."""
    if not _is_place_anaphor(ctx):
        return None
    phrase = ctx.noun_candidate(candidate)
    if phrase is None:
        return None
    sim = ctx.similarity_to_codes(phrase.lemma, ctx.lex.location_codes)
    return ctx.tables["location"][sim]


def _xnoy_points(ctx: ResolutionContext, candidate, table_name: str):
    phrase = ctx.noun_candidate(candidate)
    if phrase is None:
        return None
    noun_y = ctx.annotation.modified_noun
    if noun_y is None:
        return None
    best = SimLevel.L0
    for noun_x in xnoy_examples(noun_y, ctx.lex):
        sim = ctx.similarity(phrase.lemma, noun_x)
        if sim > best:
            best = sim
    return ctx.tables[table_name][best]


def cjr5_so_series_xnoy(ctx: ResolutionContext, candidate):
    """Genitive reading of a so-series adjective: score candidates by
    similarity to attested "X no Y" fillers."""
    if not _is_so_series(ctx.annotation.subform):
        return None
    return _xnoy_points(ctx, candidate, "so_series_xnoy")


def cjr6_non_so_xnoy(ctx: ResolutionContext, candidate):
    """Same check for non-so-series adjectives, on a much harsher table
    because the genitive reading is rare for them."""
    if _is_so_series(ctx.annotation.subform):
        return None
    return _xnoy_points(ctx, candidate, "non_so_xnoy")


RULES = (
    Rule("dem_cer1", "enumerating", cer1_topic_focus,
         kinds=frozenset({"demonstrative-pronoun", "demonstrative-adjective"})),
    Rule("dem_cer2", "enumerating", cer2_previous_sentence,
         kinds=frozenset({"demonstrative-pronoun", "demonstrative-adjective"})),
    Rule("dem_cer3", "enumerating", cer3_conjunction_reading,
         kinds=frozenset({"demonstrative-pronoun"})),
    Rule("dem_cer5", "enumerating", cer5_new_individual, kinds=DEMONSTRATIVE_KINDS),
    Rule("dem_cer7", "enumerating", cer7_adj_noun,
         kinds=frozenset({"demonstrative-adjective"})),
    Rule("dem_cer9", "enumerating", cer9_sou_previous,
         kinds=frozenset({"demonstrative-adverb"})),
    Rule("dem_cer10", "enumerating", cer10_cataphoric_main_clause,
         kinds=frozenset({"demonstrative-adverb"})),
    Rule("dem_konna", "enumerating", cer_konna_direction,
         kinds=frozenset({"demonstrative-adjective"})),
    Rule("dem_cjr1", "judging", cjr1_not_human,
         kinds=frozenset({"demonstrative-pronoun"}), methods=MARKER_METHODS),
    Rule("dem_cjr2", "judging", cjr2_human_similarity,
         kinds=frozenset({"demonstrative-pronoun"}), methods=EXAMPLE_METHODS),
    Rule("dem_cjr3", "judging", cjr3_location_marker,
         kinds=frozenset({"demonstrative-pronoun"}), methods=MARKER_METHODS),
    Rule("dem_cjr4", "judging", cjr4_location_similarity,
         kinds=frozenset({"demonstrative-pronoun"}), methods=EXAMPLE_METHODS),
    Rule("dem_cjr5", "judging", cjr5_so_series_xnoy,
         kinds=frozenset({"demonstrative-adjective"}), methods=EXAMPLE_METHODS),
    Rule("dem_cjr6", "judging", cjr6_non_so_xnoy,
         kinds=frozenset({"demonstrative-adjective"}), methods=EXAMPLE_METHODS),
)
