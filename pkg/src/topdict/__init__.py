"""Compressed string dictionary over a top-DAG-compressed trie."""
from .counters import OpCounters
from .dictionary import Dictionary, FormatError
from .trie import InputError, LocusResult, build_trie

__all__ = ["Dictionary", "FormatError", "InputError", "LocusResult", "OpCounters", "build_trie"]
__version__ = "0.1.0"
