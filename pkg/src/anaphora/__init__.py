"""Rule-based resolution of Japanese demonstratives, personal pronouns
and zero pronouns over case-structure-annotated documents."""

from .corpus import (AnaphorAnnotation, Clause, CorpusError, CorpusParseError,
                     CorpusValidationError, Document, Phrase, Position,
                     QuotationSpan, Sentence, iter_anaphors, load_document,
                     parse_document, serialize_document)
from .engine import (Resolution, RulePack, Target, merge_duplicate_proposals,
                     resolve_anaphor, resolve_document)
from .evalharness import EvalReport, evaluate, evaluate_corpus, run_ablation
from .lexicon import (LexiconError, LexiconSet, SimLevel, best_similarity,
                      is_hyponym, load_lexicons, marker_satisfies, modify_code,
                      similarity_level, xnoy_examples)
from .rules import default_pack, load_rulepack
from .salience import (SalienceEntry, SalienceList, classify_topic_focus,
                       distance, salience_before)

__version__ = "0.1.0"
