"""Versioned binary container for trained model bundles.

Layout: magic, u16 major, u16 minor, u32 section count, then
length-prefixed named sections (pickled payloads), then a trailing
SHA-256 over everything before it.  Unknown magic, a newer major
version, truncation or a checksum mismatch are all refused explicitly.
"""

from __future__ import annotations

import hashlib
import pickle
import struct
from dataclasses import dataclass
from pathlib import Path

from .corpus import LabelMap
from .errors import BundleFormatError, BundleVersionError

MAGIC = b"DRVDETB\n"
FORMAT_MAJOR = 1
FORMAT_MINOR = 0


@dataclass
class ModelBundle:
    """Everything needed to predict: feature models, scaler, classifier,
    label map and pipeline metadata."""

    tfidf: object
    word2vec: object
    scaler: object
    classifier: object
    label_map: LabelMap
    meta: dict  # language, model kind, seed, hyperparameters

    def sections(self) -> dict[str, object]:
        return {
            "meta": self.meta,
            "label_map": self.label_map,
            "tfidf": self.tfidf,
            "word2vec": self.word2vec,
            "scaler": self.scaler,
            "classifier": self.classifier,
        }


def save_bundle(path: str | Path, bundle: ModelBundle) -> None:
    sections = bundle.sections()
    body = bytearray()
    body += MAGIC
    body += struct.pack("<HHI", FORMAT_MAJOR, FORMAT_MINOR, len(sections))
    for name, obj in sections.items():
        payload = pickle.dumps(obj, protocol=5)
        name_b = name.encode("utf-8")
        body += struct.pack("<H", len(name_b)) + name_b
        body += struct.pack("<Q", len(payload)) + payload
    digest = hashlib.sha256(bytes(body)).digest()
    Path(path).write_bytes(bytes(body) + digest)


def load_bundle(path: str | Path) -> ModelBundle:
    path = Path(path)
    if not path.is_file():
        raise BundleFormatError(f"bundle file not found: {path}")
    blob = path.read_bytes()
    if len(blob) < len(MAGIC) + 8 + 32:
        raise BundleFormatError(f"{path}: truncated bundle")
    if blob[: len(MAGIC)] != MAGIC:
        raise BundleFormatError(f"{path}: not a model bundle (bad magic string)")
    body, digest = blob[:-32], blob[-32:]
    if hashlib.sha256(body).digest() != digest:
        raise BundleFormatError(f"{path}: checksum mismatch, bundle is corrupt")
    off = len(MAGIC)
    major, minor, n_sections = struct.unpack_from("<HHI", body, off)
    off += 8
    if major > FORMAT_MAJOR:
        raise BundleVersionError(
            f"{path}: bundle format {major}.{minor} is newer than supported "
            f"{FORMAT_MAJOR}.{FORMAT_MINOR}; refusing to read"
        )
    sections: dict[str, object] = {}
    for _ in range(n_sections):
        (name_len,) = struct.unpack_from("<H", body, off)
        off += 2
        name = body[off : off + name_len].decode("utf-8")
        off += name_len
        (payload_len,) = struct.unpack_from("<Q", body, off)
        off += 8
        if off + payload_len > len(body):
            raise BundleFormatError(f"{path}: truncated section {name!r}")
        sections[name] = pickle.loads(body[off : off + payload_len])
        off += payload_len
    missing = {"meta", "label_map", "tfidf", "word2vec", "scaler", "classifier"} - set(
        sections
    )
    if missing:
        raise BundleFormatError(f"{path}: bundle missing sections {sorted(missing)}")
    return ModelBundle(
        tfidf=sections["tfidf"],
        word2vec=sections["word2vec"],
        scaler=sections["scaler"],
        classifier=sections["classifier"],
        label_map=sections["label_map"],
        meta=sections["meta"],
    )
