"""Alphabets, finite words and ultimately periodic omega-words."""

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import AlphabetError, WordError


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of symbol tokens; iteration follows declaration order."""
    symbols: Tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise AlphabetError("alphabet must be non-empty")
        seen = set()
        for token in symbols:
            if not isinstance(token, str) or not token:
                raise AlphabetError(f"symbol tokens must be non-empty strings, got {token!r}")
            if not token.isprintable() or any(ch.isspace() for ch in token) or "," in token:
                raise AlphabetError(f"symbol {token!r} must be printable without whitespace or commas")
            if token in seen:
                raise AlphabetError(f"duplicate symbol {token!r}")
            seen.add(token)

    @classmethod
    def from_csv(cls, text: str) -> "Alphabet":
        """Parse ``a,b,c``."""
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, token: object) -> bool:
        return token in self.symbols

    def index(self, token: str) -> int:
        try:
            return self.symbols.index(token)
        except ValueError:
            raise AlphabetError(f"symbol {token!r} is not in alphabet {{{', '.join(self.symbols)}}}")

    def issubset(self, other: "Alphabet") -> bool:
        return all(token in other for token in self.symbols)

    @property
    def single_char(self) -> bool:
        return all(len(token) == 1 for token in self.symbols)

    def to_csv(self) -> str:
        return ",".join(self.symbols)


@dataclass(frozen=True)
class FiniteWord:
    """Finite word over a declared alphabet; may be empty."""
    letters: Tuple[str, ...]
    alphabet: Alphabet

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for letter in letters:
            if letter not in self.alphabet:
                raise AlphabetError(f"letter {letter!r} is not in alphabet {{{', '.join(self.alphabet)}}}")

    @classmethod
    def of(cls, text: str, alphabet: Alphabet) -> "FiniteWord":
        """Build from a literal: characters for single-char alphabets, else space separated tokens."""
        return cls(tuple(_split_tokens(text, alphabet)), alphabet)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __add__(self, other: "FiniteWord") -> "FiniteWord":
        _require_same_alphabet(self.alphabet, other.alphabet)
        return FiniteWord(self.letters + other.letters, self.alphabet)

    def is_prefix_of(self, other: "FiniteWord") -> bool:
        return other.letters[:len(self.letters)] == self.letters

    def render(self) -> str:
        sep = "" if self.alphabet.single_char else " "
        return sep.join(self.letters)

    def __str__(self) -> str:
        return self.render() or "ε"


@dataclass(frozen=True)
class UPWord:
    """Ultimately periodic word ``prefix · period^ω``.

    Instances need not be canonical; use ``canonicalize`` to obtain the unique
    representative. Field equality coincides with word equality on canonical forms.
    """
    prefix: FiniteWord
    period: FiniteWord

    def __post_init__(self):
        if len(self.period) == 0:
            raise WordError("period of an ultimately periodic word must be non-empty")
        _require_same_alphabet(self.prefix.alphabet, self.period.alphabet)

    @property
    def alphabet(self) -> Alphabet:
        return self.prefix.alphabet

    def letter_at(self, index: int) -> str:
        if index < len(self.prefix):
            return self.prefix.letters[index]
        return self.period.letters[(index - len(self.prefix)) % len(self.period)]

    def take(self, count: int) -> List[str]:
        return [self.letter_at(i) for i in range(count)]

    def uses_only(self, alphabet: Alphabet) -> bool:
        return all(letter in alphabet for letter in self.prefix.letters + self.period.letters)

    @property
    def is_canonical(self) -> bool:
        canonical = canonicalize(self.prefix, self.period)
        return canonical.prefix.letters == self.prefix.letters and canonical.period.letters == self.period.letters

    def render(self) -> str:
        return format_up_word(self)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class WordDistance:
    """Result of ``word_distance``; ``first_diff_index`` is None for equal words."""
    first_diff_index: Optional[int]
    distance: Fraction

    def to_dict(self):
        return {
            "first_diff_index": self.first_diff_index,
            "distance": f"{self.distance.numerator}/{self.distance.denominator}",
        }


def _require_same_alphabet(left: Alphabet, right: Alphabet):
    if left != right:
        raise AlphabetError(
            f"alphabet mismatch: {{{', '.join(left)}}} vs {{{', '.join(right)}}}"
        )


def _split_tokens(text: str, alphabet: Alphabet) -> List[str]:
    text = text.strip()
    if not text or text == "ε":
        return []
    if alphabet.single_char and " " not in text:
        return list(text)
    return text.split()


def _primitive_root(letters: Tuple[str, ...]) -> Tuple[str, ...]:
    size = len(letters)
    for d in range(1, size + 1):
        if size % d == 0 and letters[:d] * (size // d) == letters:
            return letters[:d]
    return letters


def canonicalize(u: FiniteWord, v: FiniteWord) -> UPWord:
    """Return the unique canonical ``UPWord`` denoting ``u · v^ω``.

    The period is reduced to its primitive root (the least period of ``v^ω``),
    then the last prefix letter is absorbed into a rotation of the period while
    they agree. The result has the shortest prefix and the shortest period.

    Raises:
        WordError: If ``v`` is empty
        AlphabetError: If ``u`` and ``v`` use different alphabets
    """
    if len(v) == 0:
        raise WordError("period of an ultimately periodic word must be non-empty")
    _require_same_alphabet(u.alphabet, v.alphabet)

    prefix = list(u.letters)
    period = list(_primitive_root(v.letters))
    while prefix and prefix[-1] == period[-1]:
        prefix.pop()
        period = [period[-1]] + period[:-1]

    return UPWord(FiniteWord(tuple(prefix), u.alphabet), FiniteWord(tuple(period), u.alphabet))


def make_up_word(prefix: Sequence[str], period: Sequence[str], alphabet: Alphabet) -> UPWord:
    """Build and canonicalize a UP word from raw letter sequences."""
    return canonicalize(FiniteWord(tuple(prefix), alphabet), FiniteWord(tuple(period), alphabet))


def _agreement_bound(w1: UPWord, w2: UPWord) -> int:
    # Two ultimately periodic sequences that agree on
    # |u1| + |u2| + lcm(|v1|, |v2|) positions agree everywhere: past max(|u1|, |u2|)
    # both are periodic with the common period lcm(|v1|, |v2|).
    return len(w1.prefix) + len(w2.prefix) + math.lcm(len(w1.period), len(w2.period))


def _first_difference(w1: UPWord, w2: UPWord) -> Optional[int]:
    _require_same_alphabet(w1.alphabet, w2.alphabet)
    for i in range(_agreement_bound(w1, w2)):
        if w1.letter_at(i) != w2.letter_at(i):
            return i
    return None


def up_equal(w1: UPWord, w2: UPWord) -> bool:
    """True iff both words denote the same omega-word."""
    return _first_difference(w1, w2) is None


def word_distance(w1: UPWord, w2: UPWord) -> WordDistance:
    """Cantor distance ``1/2^n`` with ``n`` the first index of disagreement, exact."""
    index = _first_difference(w1, w2)
    if index is None:
        return WordDistance(None, Fraction(0))
    return WordDistance(index, Fraction(1, 2 ** index))


# =========================
# Literal syntax: u(v)^w
# =========================

_LITERAL = re.compile(r"^\s*(?P<prefix>[^()]*?)\s*\(\s*(?P<period>[^()]+?)\s*\)\s*\^\s*w\s*$")


def parse_up_word(literal: str, alphabet: Alphabet, canonical: bool = True) -> UPWord:
    """Parse ``u(v)^w``; an empty prefix is written by omitting ``u``.

    Raises:
        WordError: If the literal is malformed
        AlphabetError: If a letter is outside ``alphabet``
    """
    match = _LITERAL.match(literal)
    if not match:
        raise WordError(f"malformed UP-word literal {literal!r}; expected u(v)^w")
    prefix = FiniteWord(tuple(_split_tokens(match.group("prefix"), alphabet)), alphabet)
    period = FiniteWord(tuple(_split_tokens(match.group("period"), alphabet)), alphabet)
    if len(period) == 0:
        raise WordError(f"empty period in {literal!r}")
    if canonical:
        return canonicalize(prefix, period)
    return UPWord(prefix, period)


def format_up_word(word: UPWord) -> str:
    return f"{word.prefix.render()}({word.period.render()})^w"


def all_up_words(alphabet: Alphabet, max_total: int, canonical_only: bool = True) -> Iterable[UPWord]:
    """Every UP word with ``|u| + |v| <= max_total``, deterministic order.

    With ``canonical_only`` each omega-word is produced once, in canonical form.
    """
    symbols = alphabet.symbols
    for total in range(1, max_total + 1):
        for period_len in range(1, total + 1):
            prefix_len = total - period_len
            for prefix in itertools.product(symbols, repeat=prefix_len):
                for period in itertools.product(symbols, repeat=period_len):
                    word = UPWord(FiniteWord(prefix, alphabet), FiniteWord(period, alphabet))
                    if canonical_only and not word.is_canonical:
                        continue
                    yield word
