"""Text cleaning, word tokenization and sentence splitting."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache

from .corpus import LabeledCorpus

_TAG_RE = re.compile(r"<[^>]*>")
_WS_RE = re.compile(r"\s+")
# sentence-final markers: ASCII terminators, danda, double danda, newline
_SENT_SPLIT_RE = re.compile(r"[.!?।॥\n]+")


@lru_cache(maxsize=65536)
def _is_removable(ch: str, strip_indic_digits: bool) -> bool:
    if "0" <= ch <= "9":
        return True
    cat = unicodedata.category(ch)
    if cat[0] in ("P", "S"):
        return True
    if strip_indic_digits and cat in ("Nd", "No"):
        return True
    return False


def clean_text(raw: str, strip_indic_digits: bool = True) -> str:
    """Strip markup tags, punctuation/symbol characters and digits;
    lower-case Latin letters; collapse whitespace.

    Idempotent; Tamil and Malayalam letters pass through unchanged.
    """
    text = _TAG_RE.sub(" ", raw)
    text = "".join(" " if _is_removable(ch, strip_indic_digits) else ch for ch in text)
    text = text.lower()
    return _WS_RE.sub(" ", text).strip()


@dataclass
class TokenizedDoc:
    tokens: list[str]
    source_id: str = ""

    def __len__(self) -> int:
        return len(self.tokens)


def tokenize(text: str, source_id: str = "") -> TokenizedDoc:
    return TokenizedDoc(tokens=text.split(), source_id=source_id)


def split_sentences(raw: str) -> list[str]:
    """Split raw (uncleaned) text on sentence-final markers, dropping
    empty segments."""
    return [seg.strip() for seg in _SENT_SPLIT_RE.split(raw) if seg.strip()]


def preprocess_corpus(
    corpus: LabeledCorpus, strip_indic_digits: bool = True
) -> list[TokenizedDoc]:
    """clean + tokenize every review, preserving order and ids.

    Reviews that clean to the empty string stay in the output with an
    empty token list.
    """
    return [
        tokenize(clean_text(r.text, strip_indic_digits), source_id=r.id)
        for r in corpus.reviews
    ]
