"""Palindromes in dynamic tries: maximal and distinct palindromes under leaf
insertion and deletion."""

from ._triepal import (
    Session,
    TriepalError,
    check,
    engines,
    generate_script,
    manacher,
    run,
)

__all__ = [
    "Session",
    "TriepalError",
    "check",
    "engines",
    "generate_script",
    "manacher",
    "run",
]
