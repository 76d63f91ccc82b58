"""Lexical resources: thesaurus codes, semantic markers, case frames,
"X no Y" co-occurrence examples and hypernym links.

A thesaurus category code is a string of up to 10 characters over
[0-9a-z] encoding a 7-level is-a hierarchy: the first five levels are
one character each, the sixth level adds two characters and the last
level the final three.  All similarity scoring in the rule packs goes
through similarity_level / best_similarity below.
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional

VALID_CODE_LENGTHS = (1, 2, 3, 4, 5, 7, 10)
# Prefix length closing each hierarchy level; the 7th level is the full code.
LEVEL_PREFIXES = (1, 2, 3, 4, 5, 7)
CODE_ALPHABET = frozenset("0123456789abcdefghijklmnopqrstuvwxyz")

MARKER_TAGS = (
    "ANI", "HUM", "ORG", "PLA", "PAR", "NAT", "PRO", "LOC", "PHE",
    "ACT", "MEN", "CHA", "REL", "LIN", "TIM", "QUA", "OTHER",
)

# Full codes that signify human beings and locations; judging rules score
# candidates by their best similarity to these lists.
HUMAN_CODES = (
    "5200003010", "5201002060", "5202001020",
    "5202006115", "5241002150", "5244002100",
)
LOCATION_CODES = (
    "6563006010", "6559005020", "9113301090",
    "9113302010", "6471001030", "6314020130",
)

# Rewrites of the leading three code characters, applied before similarity
# scoring when code_mode is "modified".  Two location-ish prefixes map to a
# pair of outputs each (an organization reading and a location reading).
CODE_MODIFICATIONS: dict[str, tuple[str, ...]] = {
    "156": ("511",),                                   # animals
    "120": ("520",), "121": ("521",), "122": ("522",),
    "123": ("523",), "124": ("524",),                  # humans
    "125": ("535", "652"), "126": ("536", "653"),      # organizations / locations
    "127": ("537",), "128": ("538",),
    "155": ("611",),                                   # plants
    "157": ("621",),                                   # body parts
    "152": ("631",),                                   # natural objects
    **{f"14{d}": (f"64{d}",) for d in "0123456789"},   # products
    "117": ("651",),                                   # locations
    "150": ("711",), "151": ("712",),                  # phenomena
    **{f"13{d}": (f"81{d}",) for d in "345678"},       # actions
    "130": ("821",),                                   # mental states
    **{f"11{d}": (f"83{d}",) for d in "2345"},         # character traits
    "118": ("838",), "158": ("839",),
    "111": ("841",),                                   # relations
    "131": ("851",), "132": ("852",),                  # linguistic products
    "110": ("861",),
    "116": ("a11",),                                   # time
    "119": ("b11",),                                   # quantity
}

DEFAULT_SPEECH_VERBS = frozenset(
    {"iu", "itta", "iimashita", "hanasu", "yakusoku-suru", "kotaeru"})

REQUIRED_FILES = ("thesaurus.tsv", "markers.tsv", "caseframes.json",
                  "xnoy.tsv", "hypernyms.tsv")

HYPERNYM_SEARCH_DEPTH = 5


class LexiconError(ValueError):
    """Raised for missing or malformed lexicon files."""


class SimLevel(enum.IntEnum):
    """Similarity between two category codes: matching leading hierarchy
    levels 0..6, or EXACT for identical full codes."""

    L0 = 0
    L1 = 1
    L2 = 2
    L3 = 3
    L4 = 4
    L5 = 5
    L6 = 6
    EXACT = 7

    def __str__(self) -> str:
        return "exact" if self is SimLevel.EXACT else str(int(self))


@dataclass(frozen=True)
class CaseSlotSpec:
    markers: frozenset[str] = frozenset()
    examples: tuple[str, ...] = ()


@dataclass(frozen=True)
class CaseFrame:
    verb: str
    cases: dict[str, CaseSlotSpec] = field(default_factory=dict)


@dataclass
class LexiconSet:
    thesaurus: dict[str, frozenset[str]] = field(default_factory=dict)
    markers: dict[str, frozenset[str]] = field(default_factory=dict)
    case_frames: dict[str, CaseFrame] = field(default_factory=dict)
    xnoy: dict[str, tuple[str, ...]] = field(default_factory=dict)
    hypernyms: dict[str, str] = field(default_factory=dict)
    marker_hierarchy: dict[str, str] = field(default_factory=dict)
    speech_verbs: frozenset[str] = DEFAULT_SPEECH_VERBS
    human_codes: tuple[str, ...] = HUMAN_CODES
    location_codes: tuple[str, ...] = LOCATION_CODES

    def known(self, lemma: str) -> bool:
        return lemma in self.thesaurus


def validate_code(code: str) -> str:
    if len(code) not in VALID_CODE_LENGTHS:
        raise LexiconError(
            f"category code {code!r} has length {len(code)}, expected one of {VALID_CODE_LENGTHS}")
    if not set(code) <= CODE_ALPHABET:
        raise LexiconError(f"category code {code!r} contains characters outside [0-9a-z]")
    return code


def similarity_level(a: str, b: str) -> SimLevel:
    """Count matching leading hierarchy levels of two codes.

    Identical full 10-character codes compare as EXACT.  A prefix code is
    compared only over the levels it wholly contains, so it can never
    reach EXACT.
    """
    if len(a) == 10 and len(b) == 10 and a == b:
        return SimLevel.EXACT
    shared = min(len(a), len(b))
    level = 0
    for prefix_len in LEVEL_PREFIXES:
        if prefix_len > shared:
            break
        if a[:prefix_len] == b[:prefix_len]:
            level += 1
        else:
            break
    return SimLevel(level)


def modify_code(code: str) -> frozenset[str]:
    """Rewrite the leading three characters of a code.

    Unmatched prefixes pass through unchanged; two prefixes fan out into
    two codes each.  Trailing characters are always preserved.
    """
    replacements = CODE_MODIFICATIONS.get(code[:3])
    if replacements is None:
        return frozenset((code,))
    return frozenset(repl + code[3:] for repl in replacements)


def _code_pool(lemma: str, lex: LexiconSet, code_mode: str) -> frozenset[str]:
    codes = lex.thesaurus.get(lemma, frozenset())
    if code_mode == "modified":
        pool: set[str] = set()
        for code in codes:
            pool |= modify_code(code)
        return frozenset(pool)
    return codes


def _note_unknown(lemmas: Iterable[str], lex: LexiconSet, notes: Optional[list[str]]) -> None:
    if notes is None:
        return
    for lemma in lemmas:
        if not lex.known(lemma):
            message = f"unknown word: {lemma}"
            if message not in notes:
                notes.append(message)


def best_similarity(lemma_a: str, lemma_b: str, lex: LexiconSet,
                    code_mode: str = "modified",
                    notes: Optional[list[str]] = None) -> SimLevel:
    """Maximum similarity_level over all code pairs of two lemmas.

    A lemma missing from the thesaurus scores level 0 and is flagged in
    `notes`; missing coverage degrades scores instead of aborting.
    """
    _note_unknown((lemma_a, lemma_b), lex, notes)
    pool_a = _code_pool(lemma_a, lex, code_mode)
    pool_b = _code_pool(lemma_b, lex, code_mode)
    best = SimLevel.L0
    for code_a in pool_a:
        for code_b in pool_b:
            level = similarity_level(code_a, code_b)
            if level > best:
                best = level
    return best


def best_similarity_to_codes(lemma: str, codes: Iterable[str], lex: LexiconSet,
                             code_mode: str = "modified",
                             notes: Optional[list[str]] = None) -> SimLevel:
    """Best similarity between a lemma's codes and a fixed code list.

    The fixed list is used as given; only the lemma's codes go through
    the modification table.
    """
    _note_unknown((lemma,), lex, notes)
    pool = _code_pool(lemma, lex, code_mode)
    best = SimLevel.L0
    for code_a in pool:
        for code_b in codes:
            level = similarity_level(code_a, code_b)
            if level > best:
                best = level
    return best


def marker_satisfies(candidate_markers: Iterable[str], required: str,
                     hierarchy: dict[str, str]) -> bool:
    """True when some candidate marker equals `required` or descends from
    it in the child-to-parent hierarchy (empty hierarchy = equality)."""
    for marker in candidate_markers:
        current: Optional[str] = marker
        while current is not None:
            if current == required:
                return True
            current = hierarchy.get(current)
    return False


def xnoy_examples(noun_y: str, lex: LexiconSet) -> tuple[str, ...]:
    """Known fillers X for the genitive pattern "X no Y"."""
    return lex.xnoy.get(noun_y, ())


def is_hyponym(word: str, candidate_hypernym: str, lex: LexiconSet) -> bool:
    """True when following hypernym links from `word` reaches
    `candidate_hypernym` within a bounded number of steps."""
    current = word
    for _ in range(HYPERNYM_SEARCH_DEPTH):
        parent = lex.hypernyms.get(current)
        if parent is None:
            return False
        if parent == candidate_hypernym:
            return True
        current = parent
    return False


# ---------------------------------------------------------------------------
# Loading

def _read_tsv(path: str) -> Iterable[tuple[int, list[str]]]:
    """Yield (line_number, fields) for non-empty, non-comment lines."""
    with open(path, encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            yield line_no, line.split("\t")


def _load_thesaurus(path: str) -> dict[str, frozenset[str]]:
    table: dict[str, set[str]] = {}
    for line_no, fields in _read_tsv(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{line_no}: expected 'lemma<TAB>codes'")
        lemma, codes_field = fields
        codes = [c.strip() for c in codes_field.split(",") if c.strip()]
        if not codes:
            raise LexiconError(f"{path}:{line_no}: no codes for {lemma!r}")
        for code in codes:
            try:
                validate_code(code)
            except LexiconError as exc:
                raise LexiconError(f"{path}:{line_no}: {exc}") from exc
        table.setdefault(lemma, set()).update(codes)
    return {lemma: frozenset(codes) for lemma, codes in table.items()}


def _load_markers(path: str) -> dict[str, frozenset[str]]:
    table: dict[str, set[str]] = {}
    for line_no, fields in _read_tsv(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{line_no}: expected 'lemma<TAB>tags'")
        lemma, tags_field = fields
        tags = [t.strip() for t in tags_field.split(",") if t.strip()]
        for tag in tags:
            if tag not in MARKER_TAGS:
                raise LexiconError(f"{path}:{line_no}: unknown semantic marker {tag!r}")
        table.setdefault(lemma, set()).update(tags)
    return {lemma: frozenset(tags) for lemma, tags in table.items()}


def _load_caseframes(path: str) -> dict[str, CaseFrame]:
    with open(path, encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise LexiconError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise LexiconError(f"{path}: expected an object of verb entries")
    frames: dict[str, CaseFrame] = {}
    for verb, cases_obj in obj.items():
        cases: dict[str, CaseSlotSpec] = {}
        for case, spec in cases_obj.items():
            markers = frozenset(spec.get("markers", []))
            for tag in markers:
                if tag not in MARKER_TAGS:
                    raise LexiconError(f"{path}: {verb}/{case}: unknown semantic marker {tag!r}")
            examples = tuple(spec.get("examples", []))
            if not markers and not examples:
                raise LexiconError(
                    f"{path}: {verb}/{case}: a case slot needs markers or examples")
            cases[case] = CaseSlotSpec(markers=markers, examples=examples)
        frames[verb] = CaseFrame(verb=verb, cases=cases)
    return frames


def _load_xnoy(path: str) -> dict[str, tuple[str, ...]]:
    table: dict[str, list[str]] = {}
    for line_no, fields in _read_tsv(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{line_no}: expected 'Y<TAB>Xs'")
        noun_y, xs_field = fields
        xs = [x.strip() for x in xs_field.split(",") if x.strip()]
        bucket = table.setdefault(noun_y, [])
        for x in xs:
            if x not in bucket:
                bucket.append(x)
    return {y: tuple(xs) for y, xs in table.items()}


def _load_hypernyms(path: str) -> dict[str, str]:
    table: dict[str, str] = {}
    for line_no, fields in _read_tsv(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{line_no}: expected 'word<TAB>hypernym'")
        word, hypernym = fields
        table[word.strip()] = hypernym.strip()
    return table


def _load_marker_hierarchy(path: str) -> dict[str, str]:
    table: dict[str, str] = {}
    for line_no, fields in _read_tsv(path):
        if len(fields) != 2:
            raise LexiconError(f"{path}:{line_no}: expected 'child<TAB>parent'")
        child, parent = (fields[0].strip(), fields[1].strip())
        for tag in (child, parent):
            if tag not in MARKER_TAGS:
                raise LexiconError(f"{path}:{line_no}: unknown semantic marker {tag!r}")
        table[child] = parent
    # Reject cycles up front so marker_satisfies can walk freely.
    for start in table:
        seen = {start}
        current = table.get(start)
        while current is not None:
            if current in seen:
                raise LexiconError(f"{path}: cycle in marker hierarchy at {current!r}")
            seen.add(current)
            current = table.get(current)
    return table


def _load_speech_verbs(path: str) -> frozenset[str]:
    verbs: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if line and not line.startswith("#"):
                verbs.add(line)
    return frozenset(verbs)


def load_lexicons(directory) -> LexiconSet:
    """Load the lexicon files from a directory.

    Required: thesaurus.tsv, markers.tsv, caseframes.json, xnoy.tsv,
    hypernyms.tsv.  Optional: marker_hierarchy.tsv and speech_verbs.txt
    (a built-in speech-verb list applies when the file is absent).
    """
    directory = os.fspath(directory)
    for name in REQUIRED_FILES:
        if not os.path.exists(os.path.join(directory, name)):
            raise LexiconError(f"missing lexicon file: {os.path.join(directory, name)}")
    lex = LexiconSet(
        thesaurus=_load_thesaurus(os.path.join(directory, "thesaurus.tsv")),
        markers=_load_markers(os.path.join(directory, "markers.tsv")),
        case_frames=_load_caseframes(os.path.join(directory, "caseframes.json")),
        xnoy=_load_xnoy(os.path.join(directory, "xnoy.tsv")),
        hypernyms=_load_hypernyms(os.path.join(directory, "hypernyms.tsv")),
    )
    hierarchy_path = os.path.join(directory, "marker_hierarchy.tsv")
    if os.path.exists(hierarchy_path):
        lex.marker_hierarchy = _load_marker_hierarchy(hierarchy_path)
    speech_path = os.path.join(directory, "speech_verbs.txt")
    if os.path.exists(speech_path):
        lex.speech_verbs = _load_speech_verbs(speech_path)
    return lex
