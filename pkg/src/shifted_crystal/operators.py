"""Coplactic raising and lowering operators.

The primed pair E', F' acts through standardization: shift the weight by
(+1,-1) or (-1,+1) and destandardize.  The unprimed pair E, F acts through
critical substrings: scan every representative's walk for the five pattern
rows, apply the final (rightmost, then longest) match's transformation.
Operators at index i on longer alphabets act on the {i, i+1} subword and
splice the result back.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from . import backend
from .errors import IntegrityError
from .tableaux import Tableau, apply_word
from .words import Letter, Word, WordLike, as_codes, letters_of_codes, PRIME_CHARS

Point = Tuple[int, int]


@dataclass(frozen=True)
class OperatorKind:
    """One of E, F, E', F' at a letter index."""

    raising: bool
    primed: bool
    index: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("operator index must be >= 1")

    @staticmethod
    def parse(name: str, index: int = 1) -> "OperatorKind":
        name = name.strip()
        primed = bool(name) and name[-1] in PRIME_CHARS
        base = (name[:-1] if primed else name).upper()
        if base not in ("E", "F"):
            raise ValueError(f"operator kind must be E, F, E' or F', got {name!r}")
        return OperatorKind(base == "E", primed, index)

    def __str__(self):
        base = "E" if self.raising else "F"
        if self.primed:
            base += "'"
        return f"{base}_{self.index}"


@dataclass(frozen=True)
class CriticalMatch:
    """A critical-substring occurrence inside one representative."""

    start: int                          # 0-based position in the word
    length: int
    kind: str                           # "1F".."5F" or "1E".."5E"
    representative: Tuple[Letter, ...]
    location: Point                     # walk point just before the substring

    @property
    def end(self) -> int:
        return self.start + self.length

    def __str__(self):
        return (f"{self.kind} at {self.start + 1}..{self.end} of "
                f"{Word(self.representative)} from {self.location}")


def _matches(codes, direction: str) -> List[CriticalMatch]:
    if direction == "F":
        raw = backend.critical_f(codes)
    elif direction == "E":
        raw = backend.critical_e(codes)
    else:
        raise ValueError(f"direction must be E or F, got {direction!r}")
    return [CriticalMatch(s, ln, f"{k}{direction}", letters_of_codes(rep), (x, y))
            for s, ln, k, rep, x, y in raw]


def critical_substrings(w: WordLike, direction: str = "F") -> List[CriticalMatch]:
    """All critical substrings of all representatives, sorted by position."""
    ms = _matches(as_codes(w), direction)
    ms.sort(key=lambda m: (m.start, m.length, m.kind,
                           tuple(l.code for l in m.representative)))
    return ms

def final_critical(w: WordLike, direction: str = "F") -> Optional[CriticalMatch]:
    """The match with maximal start, then maximal length.

    Residual ties between representatives transform to the same word; the
    lexicographically smallest witness is returned.
    """
    ms = critical_substrings(w, direction)
    if not ms:
        return None
    top = max(m.start for m in ms)
    ms = [m for m in ms if m.start == top]
    length = max(m.length for m in ms)
    return next(m for m in ms if m.length == length)


def _splice(codes, pos, sub_out, i):
    shift = 2 * (i - 1)
    out = list(codes)
    for p, c in zip(pos, sub_out):
        out[p] = c + shift
    return tuple(out)


def _word_op(w: WordLike, i: int, kernel) -> Optional[Word]:
    codes = as_codes(w)
    sub, pos = backend.restrict(codes, i)
    res = kernel(sub)
    if res is None:
        return None
    return Word.from_codes(_splice(codes, pos, res, i))


def f(w: WordLike, i: int = 1) -> Optional[Word]:
    """Lowering operator F_i; weight moves by -1 at i, +1 at i+1."""
    return _word_op(w, i, backend.apply_f)


def e(w: WordLike, i: int = 1) -> Optional[Word]:
    """Raising operator E_i, the partial inverse of F_i."""
    return _word_op(w, i, backend.apply_e)


def f_prime(w: WordLike, i: int = 1) -> Optional[Word]:
    """Primed lowering operator F'_i via destandardization."""
    return _word_op(w, i, backend.f_prime)


def e_prime(w: WordLike, i: int = 1) -> Optional[Word]:
    """Primed raising operator E'_i via destandardization."""
    return _word_op(w, i, backend.e_prime)


_KERNELS = {
    (False, False): backend.apply_f,
    (True, False): backend.apply_e,
    (False, True): backend.f_prime,
    (True, True): backend.e_prime,
}


def apply_to_word(w: WordLike, kind: OperatorKind) -> Optional[Word]:
    return _word_op(w, kind.index, _KERNELS[(kind.raising, kind.primed)])


def apply(T: Tableau, kind: OperatorKind) -> Optional[Tableau]:
    """Lift of the word operator to a tableau via its reading word.

    Restrict leaves untouched letters in place, so the transformed subword is
    spliced back into the same cells; the result is always semistandard
    again, enforced here as an integrity check.
    """
    codes = T.codes
    sub, pos = backend.restrict(codes, kind.index)
    res = _KERNELS[(kind.raising, kind.primed)](sub)
    if res is None:
        return None
    return apply_word(T, _splice(codes, pos, res, kind.index))
