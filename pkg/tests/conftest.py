import glob
import os

import pytest

from anaphora.corpus import (AnaphorAnnotation, Clause, Document, Phrase,
                             Sentence, load_document, validate_document)
from anaphora.engine import ResolutionContext
from anaphora.lexicon import load_lexicons
from anaphora.rules import default_pack

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
LEXICON_DIR = os.path.join(REPO_ROOT, "data", "lexicon")
CORPUS_DIR = os.path.join(REPO_ROOT, "data", "corpus")
SCHEMA_PATH = os.path.join(REPO_ROOT, "docs", "corpus_schema.json")

WORKED_EXAMPLE_FILES = (
    "tengu_dance.json",
    "new_computer.json",
    "cola_shop.json",
    "tengu_fear.json",
    "dancing_man.json",
    "crow_tengu.json",
    "crane_rescue.json",
    "counting_song.json",
    "tengu_promise.json",
)


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicons(LEXICON_DIR)


@pytest.fixture(scope="session")
def pack():
    return default_pack()


@pytest.fixture(scope="session")
def corpus_docs():
    return [load_document(path)
            for path in sorted(glob.glob(os.path.join(CORPUS_DIR, "*.json")))]


def corpus_doc(name):
    return load_document(os.path.join(CORPUS_DIR, name))


# ---------------------------------------------------------------------------
# Synthetic document builders

def phrase(phrase_id, lemma=None, pos="noun", surface=None, particle=None,
           case_role=None, governing_verb=None, auxiliaries=(), anaphor=None):
    if lemma is None:
        lemma = phrase_id
    if surface is None:
        surface = lemma + (f"-{particle}" if particle else "")
    return Phrase(phrase_id=phrase_id, surface=surface, lemma=lemma, pos=pos,
                  particle=particle, case_role=case_role,
                  governing_verb=governing_verb, auxiliaries=tuple(auxiliaries),
                  anaphor=anaphor)


def zero_phrase(phrase_id, case, governing_verb, anaphor_id, gold=None):
    ann = AnaphorAnnotation(anaphor_id=anaphor_id, kind="zero", subform=case,
                            gold_referent=gold)
    return Phrase(phrase_id=phrase_id, surface="", lemma="", pos="pronoun",
                  particle=case, case_role=case, governing_verb=governing_verb,
                  anaphor=ann)


def anaphor(anaphor_id, kind, subform, modified_noun=None, gold=None):
    return AnaphorAnnotation(anaphor_id=anaphor_id, kind=kind, subform=subform,
                             modified_noun=modified_noun, gold_referent=gold)


def sentence(index, *phrases, quotation=None, clauses=None):
    if clauses is None:
        clauses = [Clause(link="main", phrases=tuple(phrases))]
    return Sentence(index=index, clauses=tuple(clauses), quotation=quotation)


def document(*sentences, doc_id="test-doc"):
    doc = Document(doc_id=doc_id, sentences=tuple(sentences))
    validate_document(doc)
    return doc


def context_for(doc, anaphor_id, lexicon, method=1, resolutions=None,
                tables=None, config=None, flags=None, pack=None):
    """Resolution context positioned at the named anaphor."""
    if pack is not None:
        tables = pack.tables if tables is None else tables
        config = pack.config if config is None else config
    for pos, p in doc.phrases():
        if p.anaphor is not None and p.anaphor.anaphor_id == anaphor_id:
            return ResolutionContext(
                doc=doc, lex=lexicon, position=pos, annotation=p.anaphor,
                method=method, resolutions=resolutions, tables=tables,
                config=config, flags=flags)
    raise KeyError(anaphor_id)
