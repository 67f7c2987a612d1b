"""Exact arithmetic in the group G = <a, b, k | k a = b k, k^2 = 1>.

G is the semidirect product F2 x| Z/2, where the order-2 generator `k`
acts on the free group F2 = <a, b> by swapping the two free generators.
Every element therefore has a unique normal form: a freely reduced word
in a, b followed by k^0 or k^1.  Elements are represented by
:class:`GroupWord` and all operations below are pure functions on
immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .errors import MalformedWord

ALPHA = "a"
BETA = "b"
KAPPA = "k"

# A letter is (generator, exponent) with generator in {"a", "b"} and
# exponent +1 or -1.  "k" appears only in raw input to normalize().
Letter = Tuple[str, int]
FreeWord = Tuple[Letter, ...]

_SWAP = {ALPHA: BETA, BETA: ALPHA}


def _check_free_letter(letter: Letter) -> None:
    gen, exp = letter
    if gen not in (ALPHA, BETA):
        raise MalformedWord(f"not a free generator: {gen!r}")
    if exp not in (1, -1):
        raise MalformedWord(f"exponent must be +1 or -1, got {exp!r}")


def free_reduce(letters: Iterable[Letter]) -> FreeWord:
    """Freely reduce a word over a, b (cancel adjacent inverse pairs)."""
    stack: list[Letter] = []
    for letter in letters:
        _check_free_letter(letter)
        gen, exp = letter
        if stack and stack[-1] == (gen, -exp):
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


def sigma(word: Iterable[Letter]) -> FreeWord:
    """The swap automorphism of F2: a <-> b, letterwise.  Involution."""
    return tuple((_SWAP[gen], exp) for gen, exp in word)


@dataclass(frozen=True)
class GroupWord:
    """Normal form of an element of G: reduced free word times k^kappa_bit."""

    free_part: FreeWord = ()
    kappa_bit: int = 0

    def __post_init__(self) -> None:
        if self.kappa_bit not in (0, 1):
            raise MalformedWord(f"kappa_bit must be 0 or 1, got {self.kappa_bit!r}")
        if free_reduce(self.free_part) != tuple(self.free_part):
            raise MalformedWord("free_part is not freely reduced")

    def is_identity(self) -> bool:
        return not self.free_part and self.kappa_bit == 0

    def letters(self) -> FreeWord:
        """The letters of the normal form, k included when present."""
        extra = ((KAPPA, 1),) if self.kappa_bit else ()
        return tuple(self.free_part) + extra

    def __str__(self) -> str:
        return format_word(self)


IDENTITY = GroupWord()


def normalize(raw: Sequence[Letter]) -> GroupWord:
    """Normal form of a product of generator letters, read left to right.

    Each k is pushed to the right end using k g = sigma(g) k; pairs of k
    cancel; the free part is then freely reduced.
    """
    bit = 0
    out: list[Letter] = []
    for gen, exp in raw:
        if gen == KAPPA:
            if exp not in (1, -1):
                raise MalformedWord(f"k exponent must be +1 or -1, got {exp!r}")
            bit ^= 1
        else:
            _check_free_letter((gen, exp))
            out.append((_SWAP[gen], exp) if bit else (gen, exp))
    return GroupWord(free_reduce(out), bit)


def multiply(g: GroupWord, h: GroupWord) -> GroupWord:
    """Normal form of g*h via the semidirect product law."""
    second = sigma(h.free_part) if g.kappa_bit else h.free_part
    return GroupWord(free_reduce(tuple(g.free_part) + second),
                     g.kappa_bit ^ h.kappa_bit)


def invert(g: GroupWord) -> GroupWord:
    """Normal form of g^-1.  (w k^e)^-1 = sigma^e(w^-1) k^e."""
    inv = tuple((gen, -exp) for gen, exp in reversed(g.free_part))
    if g.kappa_bit:
        inv = sigma(inv)
    return GroupWord(inv, g.kappa_bit)


def parse_word(text: str) -> GroupWord:
    """Parse whitespace-separated tokens `a`, `b`, `k`, optionally `^-1`."""
    raw: list[Letter] = []
    for token in text.split():
        base, caret, exp_text = token.partition("^")
        if base not in (ALPHA, BETA, KAPPA):
            raise MalformedWord(f"unknown token: {token!r}")
        if caret and not exp_text:
            raise MalformedWord(f"missing exponent in token: {token!r}")
        if exp_text:
            try:
                exp = int(exp_text)
            except ValueError:
                raise MalformedWord(f"bad exponent in token: {token!r}") from None
            if exp not in (1, -1):
                raise MalformedWord(f"exponent must be +1 or -1 in {token!r}")
        else:
            exp = 1
        raw.append((base, exp))
    return normalize(raw)


def format_word(g: GroupWord) -> str:
    """Inverse of parse_word on normal forms; identity formats as ''."""
    tokens = [gen if exp == 1 else f"{gen}^-1" for gen, exp in g.free_part]
    if g.kappa_bit:
        tokens.append(KAPPA)
    return " ".join(tokens)
