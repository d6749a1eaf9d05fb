"""Shifted shapes and semistandard skew tableaux.

Cells are 0-based (row, col); row r of the outer shape occupies columns
r .. r+outer[r]-1, and the inner shape removes the leftmost inner[r] of them.
Reading order is bottom row to top row, each row left to right.  A tableau is
an equivalence class of fillings and is stored with a canonical reading word.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import backend
from .errors import IntegrityError, SchemaError
from .words import Letter, Word, WordLike, as_codes, format_letters, letters_of_codes

Cell = Tuple[int, int]


def strict_partition(parts: Sequence[int]) -> Tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a <= b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be strictly decreasing: {parts}")
    return parts


@dataclass(frozen=True)
class ShiftedShape:
    """A shifted skew diagram outer/inner, both strict partitions."""

    outer: Tuple[int, ...]
    inner: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", strict_partition(self.outer))
        object.__setattr__(self, "inner", strict_partition(self.inner))
        if len(self.inner) > len(self.outer):
            raise ValueError("inner shape has more rows than outer")
        if any(m > l for m, l in zip(self.inner, self.outer)):
            raise ValueError("inner shape not contained in outer")

    def inner_at(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def row_span(self, r: int) -> Tuple[int, int]:
        """Half-open column interval of the skew cells in row r."""
        return r + self.inner_at(r), r + self.outer[r]

    def cells(self) -> Tuple[Cell, ...]:
        # cached: slides construct many short-lived shapes and read this twice
        got = self.__dict__.get("_cells")
        if got is None:
            out: List[Cell] = []
            for r in range(len(self.outer) - 1, -1, -1):
                c0, c1 = self.row_span(r)
                out.extend((r, c) for c in range(c0, c1))
            got = tuple(out)
            object.__setattr__(self, "_cells", got)
        return got

    def ncells(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def contains(self, r: int, c: int) -> bool:
        if not 0 <= r < len(self.outer):
            return False
        c0, c1 = self.row_span(r)
        return c0 <= c < c1

    def is_straight(self) -> bool:
        return not self.inner

    def __str__(self):
        s = ",".join(map(str, self.outer)) or "-"
        if self.inner:
            s += "/" + ",".join(map(str, self.inner))
        return s


def validate(shape: ShiftedShape, filling: WordLike) -> List[str]:
    """Semistandardness violations of a raw filling given in reading order.

    Rows must weakly increase with no repeated primed letter; columns must
    weakly increase with no repeated unprimed letter.  Skew columns of a
    shifted diagram are contiguous, so adjacent-pair checks are complete.
    """
    codes = as_codes(filling)
    cells = shape.cells()
    if len(codes) != len(cells):
        raise ValueError(
            f"filling has {len(codes)} letters for {len(cells)} cells")
    grid = dict(zip(cells, codes))
    bad = []

    def letter(rc):
        return Letter.from_code(grid[rc])

    for (r, c), x in grid.items():
        right = grid.get((r, c + 1))
        if right is not None:
            if x > right:
                bad.append(f"row decrease at ({r},{c})-({r},{c + 1})")
            elif x == right and x & 1:
                bad.append(f"primed {letter((r, c))} repeats in row {r}")
        below = grid.get((r + 1, c))
        if below is not None:
            if x > below:
                bad.append(f"column decrease at ({r},{c})-({r + 1},{c})")
            elif x == below and not x & 1:
                bad.append(f"unprimed {letter((r, c))} repeats in column {c}")
    return sorted(bad)


class Tableau:
    """A semistandard filling of a shifted skew shape, in canonical form."""

    __slots__ = ("shape", "codes")

    def __init__(self, shape: ShiftedShape, filling: WordLike):
        bad = validate(shape, filling)
        if bad:
            raise ValueError("not semistandard: " + "; ".join(bad))
        # canonicalizing never breaks semistandardness: the toggled letter is
        # the first of its class in reading order, which rules out an equal
        # neighbor on the constrained side
        self.shape = shape
        self.codes = backend.canonicalize(as_codes(filling))

    @property
    def word(self) -> Word:
        return Word.from_codes(self.codes)

    def letters(self) -> Tuple[Letter, ...]:
        return letters_of_codes(self.codes)

    def grid(self) -> Dict[Cell, Letter]:
        return dict(zip(self.shape.cells(), self.letters()))

    def entry(self, r: int, c: int) -> Letter:
        return self.grid()[(r, c)]

    def weight(self, n: Optional[int] = None) -> Tuple[int, ...]:
        return backend.weight(self.codes, n or 0)

    def rows(self) -> List[List[Letter]]:
        """Skew rows top to bottom, each left to right."""
        g = self.grid()
        out = []
        for r in range(len(self.shape.outer)):
            c0, c1 = self.shape.row_span(r)
            out.append([g[(r, c)] for c in range(c0, c1)])
        return out

    def to_doc(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": [[str(l) for l in row] for row in self.rows()],
        }

    @staticmethod
    def from_doc(doc: dict) -> "Tableau":
        try:
            shape = ShiftedShape(tuple(doc["outer"]), tuple(doc.get("inner", ())))
            rows = [[Letter.parse(tok) for tok in row] for row in doc["rows"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad tableau document: {exc}") from None
        want = [shape.row_span(r)[1] - shape.row_span(r)[0]
                for r in range(len(shape.outer))]
        if [len(row) for row in rows] != want:
            raise SchemaError(f"row lengths {[len(r) for r in rows]} do not "
                              f"match shape {shape} (want {want})")
        filling = [l for row in reversed(rows) for l in row]
        try:
            return Tableau(shape, filling)
        except ValueError as exc:
            raise SchemaError(str(exc)) from None

    def __eq__(self, other):
        if isinstance(other, Tableau):
            return self.shape == other.shape and self.codes == other.codes
        return NotImplemented

    def __hash__(self):
        return hash((self.shape, self.codes))

    def __str__(self):
        return f"[{self.shape}] {format_letters(self.letters())}"

    def __repr__(self):
        return f"Tableau({self.shape}, {format_letters(self.letters())!r})"

    def pretty(self) -> str:
        g = {rc: str(l) for rc, l in self.grid().items()}
        width = max((len(s) for s in g.values()), default=1)
        lines = []
        for r in range(len(self.shape.outer)):
            _, c1 = self.shape.row_span(r)
            line = [g.get((r, c), " " * width).rjust(width)
                    for c in range(c1)]
            lines.append(" ".join(line).rstrip())
        return "\n".join(lines)


def reading_word(T: Tableau) -> Word:
    return T.word


def apply_word(T: Tableau, filling: WordLike) -> Tableau:
    """Write a reading-order string back into T's cells.

    A non-semistandard result means an operator produced a corrupt string,
    so that surfaces as IntegrityError rather than ValueError.
    """
    codes = as_codes(filling)
    if len(codes) != len(T.codes):
        raise ValueError(f"string length {len(codes)} != cells {len(T.codes)}")
    try:
        return Tableau(T.shape, codes)
    except ValueError as exc:
        raise IntegrityError(f"operator output not semistandard on {T.shape}: "
                             f"{format_letters(letters_of_codes(codes))} ({exc})")


def enumerate_tableaux(shape: ShiftedShape, n: int) -> Iterator[Tableau]:
    """All canonical semistandard fillings with entries of class <= n.

    Depth-first over cells in reading order, trying letter codes in increasing
    order, so tableaux stream in lexicographic reading-word order.  Primed
    first occurrences are pruned, which makes every emitted filling canonical.
    """
    if n < 1:
        raise ValueError("alphabet bound must be >= 1")
    cells = shape.cells()
    m = len(cells)
    if m == 0:
        yield Tableau(shape, ())
        return
    index = {rc: k for k, rc in enumerate(cells)}
    left = [index.get((r, c - 1), -1) for (r, c) in cells]
    below = [index.get((r + 1, c), -1) for (r, c) in cells]
    word = [0] * m
    seen = [0] * (n + 1)

    def rec(k: int) -> Iterator[Tableau]:
        for code in range(1, 2 * n + 1):
            cls = (code + 1) >> 1
            if code & 1 and not seen[cls]:
                continue
            if left[k] >= 0:
                lc = word[left[k]]
                if lc > code or (lc == code and code & 1):
                    continue
            if below[k] >= 0:
                bc = word[below[k]]
                if code > bc or (code == bc and not code & 1):
                    continue
            word[k] = code
            seen[cls] += 1
            if k + 1 == m:
                t = Tableau.__new__(Tableau)
                t.shape = shape
                t.codes = tuple(word)
                yield t
            else:
                yield from rec(k + 1)
            seen[cls] -= 1
        word[k] = 0

    yield from rec(0)


def skew_word_tableau(w: WordLike) -> Tableau:
    """A skew tableau whose reading word is w, one cell per row.

    Rows are offset two columns apart, so no two cells share a row or column
    and any word gives a valid semistandard filling.
    """
    codes = as_codes(w)
    m = len(codes)
    if m == 0:
        return Tableau(ShiftedShape(()), ())
    outer = tuple(2 * (m - 1 - r) + 1 for r in range(m))
    inner = tuple(2 * (m - 1 - r) for r in range(m - 1))
    return Tableau(ShiftedShape(outer, inner), codes)
