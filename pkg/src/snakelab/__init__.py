"""Combinatorics of snake and Kirillov-Reshetikhin modules for quantum affine sl(n+1)."""

from .lweight import (
    Character,
    CharacterTooLarge,
    LWeight,
    NotInQPlus,
    Weight,
    Y,
    decompose_in_qplus,
    in_qplus,
    left_dual,
    parse_monomial,
    right_dual,
    simple_root,
)
from .paths import Path, PrimeSnake, Snake, enumerate_paths, enumerate_tuples, is_prime_snake
from .qcharacter import NotCertified, RingExpression, ext_tsystem, simple_char, snake_char, verify_identity
from .segments import factorize, position, tsys_overlap

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CharacterTooLarge",
    "LWeight",
    "NotCertified",
    "NotInQPlus",
    "Path",
    "PrimeSnake",
    "RingExpression",
    "Snake",
    "Weight",
    "Y",
    "decompose_in_qplus",
    "enumerate_paths",
    "enumerate_tuples",
    "ext_tsystem",
    "factorize",
    "in_qplus",
    "is_prime_snake",
    "left_dual",
    "parse_monomial",
    "position",
    "right_dual",
    "simple_char",
    "simple_root",
    "snake_char",
    "tsys_overlap",
    "verify_identity",
]
