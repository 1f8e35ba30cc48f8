"""
Free-group letters and cyclic words.

Curves are free homotopy classes of closed curves, written as cyclically
reduced words in the edge labels of a fat graph.
"""

import math
import re
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.surfaces import WORD_TERM_PATTERN
from utils.error_handler import WordError


_TERM = re.compile(WORD_TERM_PATTERN)


@dataclass(frozen=True, order=True)
class Letter:
    generator: str
    sign: int

    def inverse(self) -> 'Letter':
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        return self.generator if self.sign > 0 else f"{self.generator}^-1"


@dataclass(frozen=True)
class CyclicWord:
    """
    Cyclically reduced word

    Equality of instances is letter-for-letter; use equals_cyclic or
    equals_unoriented to compare free homotopy classes.
    """
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, 'letters', letters)
        if not letters:
            raise WordError("null-homotopic")
        for i, letter in enumerate(letters):
            if letters[(i + 1) % len(letters)] == letter.inverse():
                raise WordError(f"word {format_word(letters)} is not cyclically reduced")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters)

    @property
    def generators(self) -> List[str]:
        seen: List[str] = []
        for letter in self.letters:
            if letter.generator not in seen:
                seen.append(letter.generator)
        return seen

    def rotate(self, shift: int) -> 'CyclicWord':
        shift %= len(self.letters)
        return CyclicWord(self.letters[shift:] + self.letters[:shift])

    def rotations(self) -> List[Tuple[Letter, ...]]:
        n = len(self.letters)
        return [self.letters[t:] + self.letters[:t] for t in range(n)]

    def inverse(self) -> 'CyclicWord':
        return CyclicWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    def power(self, exponent: int) -> 'CyclicWord':
        if exponent < 1:
            raise WordError("power exponent must be positive")
        return CyclicWord(self.letters * exponent)

    def canonical(self) -> Tuple[Letter, ...]:
        """Lexicographically least rotation"""
        return min(self.rotations())

    def equals_cyclic(self, other: 'CyclicWord') -> bool:
        """Same cyclic word up to rotation"""
        return len(self) == len(other) and self.canonical() == other.canonical()

    def equals_unoriented(self, other: 'CyclicWord') -> bool:
        """Same cyclic word up to rotation and inversion"""
        return self.equals_cyclic(other) or self.equals_cyclic(other.inverse())

    def exponent_sums(self) -> Dict[str, int]:
        sums: Dict[str, int] = {}
        for letter in self.letters:
            sums[letter.generator] = sums.get(letter.generator, 0) + letter.sign
        return sums


# ============================================================================
# PARSING AND PRINTING
# ============================================================================

def parse_word(text: str, alphabet: Optional[Iterable[str]] = None) -> Tuple[Letter, ...]:
    """
    Parse a curve word

    Terms are ident ('^' signed-integer)?, separated by whitespace or
    juxtaposed. An ident starting with an uppercase letter is the inverse of
    its lowercase generator.

    Args:
        text: Word text, e.g. "a b^3" or "a2a3^-1"
        alphabet: Allowed generator labels (None accepts any)

    Returns:
        Expanded (not reduced) letter sequence
    """
    allowed = set(alphabet) if alphabet is not None else None
    letters: List[Letter] = []
    position = 0

    while position < len(text):
        if text[position].isspace():
            position += 1
            continue

        match = _TERM.match(text, position)
        if not match:
            raise WordError(f"unexpected character {text[position]!r} in word {text!r}")

        ident, caret, exponent_text = match.group(1), match.group(2), match.group(3)
        generator = ident[0].lower() + ident[1:]
        sign = -1 if ident[0].isupper() else 1

        exponent = 1
        if caret:
            try:
                exponent = int(exponent_text)
            except ValueError:
                raise WordError(f"malformed exponent in term {match.group(0)!r}")

        if allowed is not None and generator not in allowed:
            raise WordError(f"unknown generator {generator!r}")

        letters.extend([Letter(generator, sign if exponent > 0 else -sign)] * abs(exponent))
        position = match.end()

    return tuple(letters)


def format_word(letters: Sequence[Letter]) -> str:
    """Canonical text: lowercase generators, runs as caret exponents"""
    parts = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        exponent = (j - i) * letters[i].sign
        generator = letters[i].generator
        parts.append(generator if exponent == 1 else f"{generator}^{exponent}")
        i = j
    return ' '.join(parts)


# ============================================================================
# REDUCTION AND STRUCTURE
# ============================================================================

def free_reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for letter in letters:
        if stack and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(letters: Iterable[Letter]) -> CyclicWord:
    """Free reduction followed by wrap-around reduction"""
    reduced = list(free_reduce(letters))
    start, end = 0, len(reduced)
    while end - start > 1 and reduced[start] == reduced[end - 1].inverse():
        start += 1
        end -= 1
    if start >= end:
        raise WordError("null-homotopic")
    return CyclicWord(tuple(reduced[start:end]))


def word_from_text(text: str, alphabet: Optional[Iterable[str]] = None) -> CyclicWord:
    return cyclic_reduce(parse_word(text, alphabet))


def is_primitive(word: CyclicWord) -> bool:
    """True iff the word is not a proper power"""
    n = len(word)
    for t in range(1, n):
        if n % t == 0 and word.letters[t:] + word.letters[:t] == word.letters:
            return False
    return True


def substitute(word: CyclicWord, mapping: Dict[str, Sequence[Letter]]) -> CyclicWord:
    """
    Apply a homomorphism generator -> word, then cyclically reduce

    Generators missing from the mapping are sent to themselves.
    """
    image: List[Letter] = []
    for letter in word:
        target = mapping.get(letter.generator)
        if target is None:
            image.append(letter)
        elif letter.sign > 0:
            image.extend(target)
        else:
            image.extend(l.inverse() for l in reversed(target))
    return cyclic_reduce(image)


def rename(word: CyclicWord, names: Dict[str, str]) -> CyclicWord:
    """Substitute generator for generator"""
    return substitute(word, {old: (Letter(new, 1),) for old, new in names.items()})


def homology_gcd(word: CyclicWord) -> int:
    """gcd of the exponent sums (0 for a null-homologous word)"""
    return reduce(math.gcd, (abs(v) for v in word.exponent_sums().values()), 0)
