"""Lexicographic substring queries: minimal suffixes, rotations, Lyndon factorizations."""
from .applications import (
    CyclicFingerprint,
    RotationAnswer,
    canonical_rotation,
    cyclic_equal,
    cyclic_fingerprint,
    lyndon_factorize_fragment,
    max_rotation,
    min_rotation,
)
from .engine import Engine, build_engine
from .errors import InvalidArguments, InvalidInput, InvalidRange, LyxError
from .esa import ESA, build_esa
from .minsuf import TierProfile, make_profile, paper_profile, test_profile
from .serialize import load_esa, load_index, save_esa, save_index
from .text_model import SENTINEL, Fragment, Text, extract, load_text, text_from_symbols

__all__ = [
    "CyclicFingerprint", "ESA", "Engine", "Fragment", "InvalidArguments", "InvalidInput",
    "InvalidRange", "LyxError", "RotationAnswer", "SENTINEL", "Text", "TierProfile",
    "build_engine", "build_esa", "canonical_rotation", "cyclic_equal", "cyclic_fingerprint",
    "extract", "load_esa", "load_index", "load_text", "lyndon_factorize_fragment",
    "make_profile", "max_rotation", "min_rotation", "paper_profile", "save_esa",
    "save_index", "test_profile", "text_from_symbols",
]
