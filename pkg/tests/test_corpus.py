import json

import pytest
from hypothesis import given, strategies as st

from anaphora.corpus import (CorpusParseError, CorpusValidationError,
                             iter_anaphors, parse_document, serialize_document)

from conftest import SCHEMA_PATH, anaphor, corpus_doc, document, phrase, sentence

MINIMAL = {
    "doc_id": "d",
    "sentences": [
        {"index": 0, "clauses": [
            {"link": "main", "phrases": [
                {"phrase_id": "p0", "surface": "inu-ga", "lemma": "inu", "pos": "noun", "particle": "ga"}
            ]}
        ]}
    ],
}


def as_text(obj):
    return json.dumps(obj)


def test_parse_minimal_document():
    doc = parse_document(as_text(MINIMAL))
    assert len(doc.sentences) == 1
    assert len(list(doc.sentences[0].phrases())) == 1
    assert doc.phrase_index()["p0"][1].lemma == "inu"


def test_shipped_two_sentence_example_has_demonstrative():
    doc = corpus_doc("new_computer.json")
    anaphors = iter_anaphors(doc)
    assert len(anaphors) == 1
    _, ann = anaphors[0]
    assert ann.kind == "demonstrative-pronoun"
    assert ann.subform == "sore"


def test_dangling_gold_referent_rejected():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["clauses"][0]["phrases"][0]["anaphor"] = {
        "anaphor_id": "a1", "kind": "demonstrative-pronoun", "subform": "sore",
        "gold_referent": "nonexistent"}
    with pytest.raises(CorpusValidationError, match="unknown target"):
        parse_document(as_text(bad))


def test_gold_referent_may_name_sentence_or_special():
    obj = json.loads(as_text(MINIMAL))
    obj["sentences"][0]["clauses"][0]["phrases"][0]["anaphor"] = {
        "anaphor_id": "a1", "kind": "demonstrative-pronoun", "subform": "sore",
        "gold_referent": "sent:0"}
    parse_document(as_text(obj))
    obj["sentences"][0]["clauses"][0]["phrases"][0]["anaphor"]["gold_referent"] = "new-individual"
    parse_document(as_text(obj))
    obj["sentences"][0]["clauses"][0]["phrases"][0]["anaphor"]["gold_referent"] = "sent:9"
    with pytest.raises(CorpusValidationError, match="unknown sentence"):
        parse_document(as_text(obj))


def test_missing_field_names_path():
    bad = {"doc_id": "d", "sentences": [{"index": 0, "clauses": [
        {"link": "main", "phrases": [{"phrase_id": "p0", "surface": "x", "lemma": "x"}]}]}]}
    with pytest.raises(CorpusParseError) as err:
        parse_document(as_text(bad))
    assert "$.sentences[0].clauses[0].phrases[0].pos" in str(err.value)


def test_bad_enum_names_path():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["clauses"][0]["phrases"][0]["pos"] = "nounish"
    with pytest.raises(CorpusParseError, match=r"phrases\[0\].pos"):
        parse_document(as_text(bad))


def test_duplicate_phrase_ids_rejected():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["clauses"][0]["phrases"].append(
        dict(bad["sentences"][0]["clauses"][0]["phrases"][0]))
    with pytest.raises(CorpusValidationError, match="duplicate phrase id"):
        parse_document(as_text(bad))


def test_duplicate_anaphor_ids_rejected():
    with pytest.raises(CorpusValidationError, match="duplicate anaphor id"):
        document(
            sentence(0,
                     phrase("p0", "sore", pos="pronoun",
                            anaphor=anaphor("a1", "demonstrative-pronoun", "sore")),
                     phrase("p1", "kore", pos="pronoun",
                            anaphor=anaphor("a1", "demonstrative-pronoun", "kore"))))


def test_zero_subform_must_name_case():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["clauses"][0]["phrases"][0].update({"surface": "", "pos": "pronoun"})
    bad["sentences"][0]["clauses"][0]["phrases"][0]["anaphor"] = {
        "anaphor_id": "a1", "kind": "zero", "subform": "sore"}
    with pytest.raises(CorpusParseError, match="must name a case"):
        parse_document(as_text(bad))


def test_demonstrative_adjective_requires_modified_noun():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["clauses"][0]["phrases"][0]["anaphor"] = {
        "anaphor_id": "a1", "kind": "demonstrative-adjective", "subform": "kono"}
    with pytest.raises(CorpusParseError, match="modified_noun"):
        parse_document(as_text(bad))


def test_noncontiguous_sentence_indices_rejected():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["index"] = 1
    with pytest.raises(CorpusValidationError, match="contiguous"):
        parse_document(as_text(bad))


def test_anaphor_on_verb_phrase_rejected():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["clauses"][0]["phrases"][0]["pos"] = "verb"
    bad["sentences"][0]["clauses"][0]["phrases"][0]["anaphor"] = {
        "anaphor_id": "a1", "kind": "demonstrative-pronoun", "subform": "sore"}
    with pytest.raises(CorpusValidationError, match="zero placeholders"):
        parse_document(as_text(bad))


def test_quotation_must_reference_own_sentence():
    bad = json.loads(as_text(MINIMAL))
    bad["sentences"][0]["quotation"] = {"start": "p0", "end": "nope"}
    with pytest.raises(CorpusValidationError, match="not a phrase of this sentence"):
        parse_document(as_text(bad))


def test_iter_anaphors_orders_by_position():
    doc = document(
        sentence(0, phrase("p0", "taroo", particle="wa"),
                 phrase("p1", "sore", pos="pronoun", particle="wo",
                        anaphor=anaphor("second", "demonstrative-pronoun", "sore")),
                 phrase("p2", "are", pos="pronoun",
                        anaphor=anaphor("third", "demonstrative-pronoun", "are"))),
        sentence(1, phrase("p3", "kore", pos="pronoun",
                           anaphor=anaphor("fourth", "demonstrative-pronoun", "kore"))),
    )
    ids = [ann.anaphor_id for _, ann in iter_anaphors(doc)]
    assert ids == ["second", "third", "fourth"]
    assert iter_anaphors(doc) == iter_anaphors(doc)


def test_iter_anaphors_empty():
    doc = document(sentence(0, phrase("p0", "inu")))
    assert iter_anaphors(doc) == []


def test_round_trip_hand_document():
    doc = corpus_doc("tengu_promise.json")
    assert parse_document(serialize_document(doc)) == doc


# Round-trip property over generated documents.

_ids = st.integers(min_value=0, max_value=999).map(lambda n: f"p{n}")
_words = st.text(alphabet="aiueokst", min_size=1, max_size=4)


@st.composite
def documents(draw):
    n_sentences = draw(st.integers(1, 3))
    sentences = []
    counter = 0
    used_anaphors = 0
    for index in range(n_sentences):
        n_phrases = draw(st.integers(1, 3))
        phrases = []
        for _ in range(n_phrases):
            pid = f"p{counter}"
            counter += 1
            kind = draw(st.sampled_from(["plain", "anaphor", "zero"]))
            particle = draw(st.sampled_from([None, "wa", "ga", "wo", "ni", ",", "."]))
            if kind == "zero":
                used_anaphors += 1
                phrases.append(phrase(
                    pid, lemma="", surface="", pos="pronoun", particle="ga",
                    case_role="ga",
                    anaphor=anaphor(f"a{used_anaphors}", "zero", "ga")))
            elif kind == "anaphor":
                used_anaphors += 1
                phrases.append(phrase(
                    pid, lemma=draw(_words), pos="pronoun", particle=particle,
                    anaphor=anaphor(f"a{used_anaphors}", "demonstrative-pronoun", "sore")))
            else:
                phrases.append(phrase(pid, lemma=draw(_words),
                                      pos=draw(st.sampled_from(["noun", "verb", "adverb"])),
                                      particle=particle))
        sentences.append(sentence(index, *phrases))
    return document(*sentences, doc_id=draw(_words))


@given(documents())
def test_round_trip_generated_documents(doc):
    assert parse_document(serialize_document(doc)) == doc


def test_shipped_corpus_matches_formal_schema():
    jsonschema = pytest.importorskip("jsonschema")
    import glob
    import os

    from conftest import CORPUS_DIR
    with open(SCHEMA_PATH, encoding="utf-8") as handle:
        schema = json.load(handle)
    for path in sorted(glob.glob(os.path.join(CORPUS_DIR, "*.json"))):
        with open(path, encoding="utf-8") as handle:
            jsonschema.validate(json.load(handle), schema)
