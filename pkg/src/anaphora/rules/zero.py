"""Stock rule pack for zero pronouns.

Candidates come from the salience list and from clause subjects in the
same sentence; judging checks the case frame of the governing verb by
semantic markers and by example similarity.  A benefactive auxiliary on
the verb triggers the empathy reordering of its own zero slots.
"""

from __future__ import annotations

from ..corpus import Clause, Phrase
from ..engine import ResolutionContext, Rule, Target
from ..lexicon import SimLevel, marker_satisfies
from ..salience import TOPIC

EMPATHY_AUXILIARIES = ("kureru", "kudasaru")
MARKER_METHODS = frozenset({1, 2})
EXAMPLE_METHODS = frozenset({1, 3, 4})


def _resolved_phrase_target(phrase: Phrase, ctx: ResolutionContext):
    if phrase.surface != "":
        return Target.for_phrase(phrase.phrase_id)
    if phrase.anaphor is not None:
        target = ctx.resolutions.get(phrase.anaphor.anaphor_id)
        if target is not None and target.kind == "phrase":
            return target
    return None


def _clause_subject(clause: Clause, ctx: ResolutionContext):
    """The ga-marked phrase of a clause, or its wa-marked topic when no
    overt ga phrase exists."""
    def first(predicate):
        for phrase in clause.phrases:
            if predicate(phrase):
                target = _resolved_phrase_target(phrase, ctx)
                if target is not None:
                    return target
        return None

    return (first(lambda p: p.case_role == "ga")
            or first(lambda p: p.particle == "ga")
            or first(lambda p: p.particle in ("wa", "niwa")))


def cer1_ga_case(ctx: ResolutionContext):
    """Candidates for a subject zero: topics at weight-2*distance+1,
    foci at weight-distance+1, plus subjects of structurally related
    clauses in the same sentence."""
    if ctx.annotation.subform != "ga":
        return []
    proposals = []
    for entry in ctx.salience:
        dist = ctx.candidate_distance(entry)
        if entry.kind == TOPIC:
            points = entry.weight - 2 * dist + 1
        else:
            points = entry.weight - dist + 1
        proposals.append((entry.entity, points))
    for c_idx, clause in enumerate(ctx.sentence.clauses):
        if c_idx == ctx.clause_index:
            continue
        subject = None
        points = None
        if clause.link == "coordinate":
            subject, points = _clause_subject(clause, ctx), 25
        elif clause.link == "subordinate":
            subject, points = _clause_subject(clause, ctx), 23
        elif clause.link == "main" and ctx.clause.link == "embedded":
            subject, points = _clause_subject(clause, ctx), 22
        if subject is not None and points is not None:
            proposals.append((subject, points))
    return proposals


def cer2_non_ga_case(ctx: ResolutionContext):
    """Candidates for a non-subject zero: topics at weight-2*distance-3,
    foci at weight-2*distance+1."""
    if ctx.annotation.subform == "ga":
        return []
    proposals = []
    for entry in ctx.salience:
        dist = ctx.candidate_distance(entry)
        if entry.kind == TOPIC:
            points = entry.weight - 2 * dist - 3
        else:
            points = entry.weight - 2 * dist + 1
        proposals.append((entry.entity, points))
    return proposals


def cer4_same_verb_penalty(ctx: ResolutionContext):
    """A noun already filling another case slot of the same verb is a
    poor antecedent for this slot."""
    verb_id = ctx.phrase.governing_verb
    if verb_id is None:
        return []
    proposals = []
    for phrase in ctx.sentence.phrases():
        if phrase.phrase_id == ctx.phrase.phrase_id:
            continue
        if phrase.governing_verb != verb_id or phrase.case_role is None:
            continue
        if phrase.surface != "":
            if phrase.pos == "noun":
                proposals.append((Target.for_phrase(phrase.phrase_id), -20))
        else:
            target = _resolved_phrase_target(phrase, ctx)
            if target is not None:
                proposals.append((target, -20))
    return proposals


def _case_slot(ctx: ResolutionContext):
    """The case-frame slot the anaphor occupies, or None."""
    if ctx.annotation.kind == "zero":
        case = ctx.annotation.subform
    else:
        case = ctx.phrase.case_role
    verb_id = ctx.phrase.governing_verb
    if case is None or verb_id is None:
        return None
    verb = ctx.get_phrase(verb_id)
    if verb is None:
        return None
    frame = ctx.lex.case_frames.get(verb.lemma)
    if frame is None:
        return None
    return frame.cases.get(case)


def cjr1_semantic_marker(ctx: ResolutionContext, candidate):
    """Penalize candidates that satisfy none of the semantic markers the
    case frame requires for this slot."""
    slot = _case_slot(ctx)
    if slot is None or not slot.markers:
        return None
    phrase = ctx.noun_candidate(candidate)
    if phrase is None:
        return None
    markers = ctx.markers_of(phrase.lemma)
    for required in slot.markers:
        if marker_satisfies(markers, required, ctx.lex.marker_hierarchy):
            return None
    return -5


def cjr2_example_similarity(ctx: ResolutionContext, candidate):
    """Graded points over the candidate's best similarity to the example
    fillers of the case slot."""
    slot = _case_slot(ctx)
    if slot is None or not slot.examples:
        return None
    phrase = ctx.noun_candidate(candidate)
    if phrase is None:
        return None
    best = SimLevel.L0
    for example in slot.examples:
        sim = ctx.similarity(phrase.lemma, example)
        if sim > best:
            best = sim
    return ctx.tables["case_example"][best]


def empathy_topic_bonus(ctx: ResolutionContext, candidate):
    """During an empathy-first resolution, prefer the most salient topic."""
    if not ctx.flags.get("empathy_ni"):
        return None
    topics = [entry for entry in ctx.salience if entry.kind == TOPIC]
    if not topics:
        return None
    best = max(topics, key=lambda entry: (entry.weight, entry.position))
    if candidate.target.key() == best.entity.key():
        return ctx.config.get("empathy_topic_bonus", 10)
    return None


def empathy_reorder(doc, agenda):
    """Resolve the ni-case zero before the ga-case zero of a verb that
    carries a benefactive auxiliary, and flag the ni-case resolution."""
    by_verb: dict[str, dict[str, int]] = {}
    for idx, (position, annotation, _flags) in enumerate(agenda):
        if annotation.kind != "zero":
            continue
        phrase = doc.phrase_at(position)
        verb_id = phrase.governing_verb
        if verb_id is None:
            continue
        by_verb.setdefault(verb_id, {})[annotation.subform] = idx

    moves = []
    index = doc.phrase_index()
    for verb_id, slots in by_verb.items():
        if "ga" not in slots or "ni" not in slots:
            continue
        verb = index[verb_id][1]
        if not any(aux in EMPATHY_AUXILIARIES for aux in verb.auxiliaries):
            continue
        moves.append((slots["ga"], slots["ni"]))

    agenda = list(agenda)
    for ga_idx, ni_idx in moves:
        position, annotation, flags = agenda[ni_idx]
        flags = dict(flags)
        flags["empathy_ni"] = True
        agenda[ni_idx] = (position, annotation, flags)
        if ni_idx > ga_idx:
            item = agenda.pop(ni_idx)
            agenda.insert(ga_idx, item)
    return agenda


RULES = (
    Rule("zero_cer1", "enumerating", cer1_ga_case, kinds=frozenset({"zero"})),
    Rule("zero_cer2", "enumerating", cer2_non_ga_case, kinds=frozenset({"zero"})),
    Rule("zero_cer4", "enumerating", cer4_same_verb_penalty, kinds=frozenset({"zero"})),
    # The case-frame checks also judge overt pronouns occupying a case slot.
    Rule("zero_cjr1", "judging", cjr1_semantic_marker, kinds=None, methods=MARKER_METHODS),
    Rule("zero_cjr2", "judging", cjr2_example_similarity, kinds=None, methods=EXAMPLE_METHODS),
    Rule("zero_empathy", "judging", empathy_topic_bonus, kinds=frozenset({"zero"})),
)

AGENDA_HOOKS = (empathy_reorder,)
