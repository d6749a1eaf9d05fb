"""Words over the primed alphabet 1' < 1 < 2' < 2 < ...

A word is an equivalence class of strings: the prime on the first occurrence of
each letter class is immaterial.  The canonical representative makes every such
first occurrence unprimed.  Letters are stored as Letter objects; the integer
coding used by the kernels (k' -> 2k-1, k -> 2k) is exposed via .code / .codes.
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from . import backend
from .errors import IntegrityError

PRIME_CHARS = "'′"


@total_ordering
@dataclass(frozen=True)
class Letter:
    """A letter k or k' of the primed alphabet."""

    value: int
    primed: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("letter class must be a positive integer")

    @property
    def code(self) -> int:
        return 2 * self.value - 1 if self.primed else 2 * self.value

    @staticmethod
    def from_code(code: int) -> "Letter":
        if code < 1:
            raise ValueError("letter code must be positive")
        return Letter((code + 1) // 2, bool(code & 1))

    @staticmethod
    def parse(text: str) -> "Letter":
        text = text.strip()
        primed = bool(text) and text[-1] in PRIME_CHARS
        digits = text[:-1] if primed else text
        if not digits.isdigit():
            raise ValueError(f"bad letter literal: {text!r}")
        return Letter(int(digits), primed)

    def __lt__(self, other):
        return self.code < other.code

    def __str__(self):
        return f"{self.value}'" if self.primed else str(self.value)

    def __repr__(self):
        return f"Letter({self})"


Str = Tuple[Letter, ...]
WordLike = Union[str, "Word", Sequence[Letter]]


def parse_letters(text: str) -> Str:
    """Parse a word literal.

    Compact form strings one-digit classes together ("211'12'"); the comma form
    ("2,1,1',1,2'") is required once a class exceeds 9.  Primes may be written
    as an ASCII apostrophe or as U+2032.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(Letter.parse(tok) for tok in text.split(","))
    letters = []
    for ch in text:
        if ch.isdigit():
            letters.append(Letter(int(ch)))
        elif ch in PRIME_CHARS:
            if not letters or letters[-1].primed:
                raise ValueError(f"misplaced prime in word literal: {text!r}")
            letters[-1] = Letter(letters[-1].value, True)
        elif not ch.isspace():
            raise ValueError(f"bad character {ch!r} in word literal: {text!r}")
    return tuple(letters)


def format_letters(letters: Iterable[Letter]) -> str:
    letters = tuple(letters)
    if any(l.value > 9 for l in letters):
        return ",".join(str(l) for l in letters)
    return "".join(str(l) for l in letters)


def as_letters(w: WordLike) -> Str:
    if isinstance(w, Word):
        return w.letters
    if isinstance(w, str):
        return parse_letters(w)
    return tuple(x if isinstance(x, Letter) else Letter.from_code(x) for x in w)


def as_codes(w: WordLike) -> Tuple[int, ...]:
    if isinstance(w, Word):
        return w.codes
    if isinstance(w, str):
        return tuple(l.code for l in parse_letters(w))
    return tuple(x.code if isinstance(x, Letter) else int(x) for x in w)


def letters_of_codes(codes: Iterable[int]) -> Str:
    return tuple(Letter.from_code(c) for c in codes)


class Word:
    """A word held in canonical form (first occurrence of each class unprimed)."""

    __slots__ = ("codes",)

    def __init__(self, w: WordLike = ()):
        object.__setattr__(self, "codes", backend.canonicalize(as_codes(w)))

    @staticmethod
    def from_codes(codes: Iterable[int]) -> "Word":
        w = Word.__new__(Word)
        object.__setattr__(w, "codes", backend.canonicalize(tuple(codes)))
        return w

    @property
    def letters(self) -> Str:
        return letters_of_codes(self.codes)

    def weight(self, n: Optional[int] = None) -> Tuple[int, ...]:
        return backend.weight(self.codes, n or 0)

    def standardize(self) -> Tuple[int, ...]:
        return backend.standardize(self.codes)

    def representatives(self) -> Tuple[Str, ...]:
        return tuple(letters_of_codes(r) for r in backend.representatives(self.codes))

    def restrict(self, i: int) -> Tuple["Word", Tuple[int, ...]]:
        sub, pos = backend.restrict(self.codes, i)
        return Word.from_codes(sub), pos

    def max_class(self) -> int:
        return max(((c + 1) >> 1 for c in self.codes), default=0)

    def __len__(self):
        return len(self.codes)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, k):
        return Letter.from_code(self.codes[k])

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash(self.codes)

    def __str__(self):
        return format_letters(self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


def canonicalize(w: WordLike) -> Str:
    """Canonical string of the word class of w."""
    return letters_of_codes(backend.canonicalize(as_codes(w)))


def equivalent(a: WordLike, b: WordLike) -> bool:
    """True iff a and b differ only in primes on first occurrences."""
    return backend.canonicalize(as_codes(a)) == backend.canonicalize(as_codes(b))


def representatives(w: WordLike) -> Tuple[Str, ...]:
    return Word(w).representatives()


def weight(w: WordLike, n: Optional[int] = None) -> Tuple[int, ...]:
    """Class counts of w, independent of the representative."""
    return backend.weight(as_codes(w), n or 0)


def standardize(w: WordLike) -> Tuple[int, ...]:
    """Standardization of w (a permutation of 1..len(w))."""
    return backend.standardize(as_codes(w))


def destandardize(perm: Sequence[int], mu: Sequence[int]) -> Optional[Word]:
    """The unique word with the given standardization and weight, or None."""
    r = backend.destandardize(tuple(perm), tuple(mu))
    return None if r is None else Word.from_codes(r)


def restrict(w: WordLike, i: int) -> Tuple[Word, Tuple[int, ...]]:
    """Subword of classes {i, i+1} relabeled to {1, 2}, with 0-based positions."""
    return Word(w).restrict(i)


def canonical_code_words(n: int, length: int) -> Iterator[Tuple[int, ...]]:
    """All canonical words of exactly this length over classes 1..n, as codes."""
    if length == 0:
        yield ()
        return
    word = [0] * length
    seen0 = 0

    def rec(pos: int, seen: int):
        for k in range(1, n + 1):
            bit = 1 << k
            word[pos] = 2 * k
            if pos + 1 == length:
                yield tuple(word)
            else:
                yield from rec(pos + 1, seen | bit)
            if seen & bit:
                word[pos] = 2 * k - 1
                if pos + 1 == length:
                    yield tuple(word)
                else:
                    yield from rec(pos + 1, seen)

    yield from rec(0, seen0)


def canonical_words(n: int, max_len: int) -> Iterator[Word]:
    """All canonical words of length <= max_len over classes 1..n."""
    for L in range(max_len + 1):
        for codes in canonical_code_words(n, L):
            w = Word.__new__(Word)
            object.__setattr__(w, "codes", codes)
            yield w
