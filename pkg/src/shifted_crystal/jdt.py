"""Shifted jeu de taquin: slides, rectification, ballot detection.

The standard slide is the usual hole walk: of the entries right of and below
the hole, the smaller moves in; the hole exits at an outer corner.  The
semistandard slide standardizes, slides, and destandardizes; rectification
does the standardization once and telescopes all slides in between.
"""

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import backend
from .errors import IntegrityError
from .tableaux import Cell, ShiftedShape, Tableau

StdGrid = Dict[Cell, int]


@dataclass(frozen=True)
class SlideTrace:
    """One standard slide: the hole's path and the shapes around it."""

    shape_before: ShiftedShape
    shape_after: ShiftedShape
    start: Cell                 # inner corner the hole entered
    path: Tuple[Cell, ...]      # hole positions, path[0] == start
    result: Tuple[int, ...]     # standard entries of the new shape, reading order


def inner_corners(shape: ShiftedShape) -> List[Cell]:
    """Maximal cells of the inner shape: no inner cell right or below."""
    out = []
    for r, m in enumerate(shape.inner):
        c = r + m - 1
        if shape.inner_at(r + 1) == 0 or r + 1 + shape.inner[r + 1] - 1 < c:
            out.append((r, c))
    return out


def _shrink(parts: Tuple[int, ...], r: int) -> Tuple[int, ...]:
    # remove one cell from the end of row r; strictness is preserved because
    # the cell was a corner of a strict partition
    new = list(parts)
    new[r] -= 1
    while new and new[-1] == 0:
        new.pop()
    return tuple(new)


def _std_grid(T: Tableau) -> StdGrid:
    return dict(zip(T.shape.cells(), backend.standardize(T.codes)))


def _grid_word(shape: ShiftedShape, grid: StdGrid) -> Tuple[int, ...]:
    return tuple(grid[rc] for rc in shape.cells())


def _slide_core(shape: ShiftedShape, grid: StdGrid, corner: Cell):
    # hole walk; caller guarantees `corner` is an inner corner
    grid = dict(grid)
    r, c = corner
    path = [corner]
    while True:
        right = grid.get((r, c + 1))
        below = grid.get((r + 1, c))
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            grid[(r, c)] = right
            del grid[(r, c + 1)]
            c += 1
        else:
            grid[(r, c)] = below
            del grid[(r + 1, c)]
            r += 1
        path.append((r, c))
    after = ShiftedShape(_shrink(shape.outer, r),
                         _shrink(shape.inner, corner[0]))
    return after, grid, tuple(path)


def slide_standard(shape: ShiftedShape, grid: StdGrid, corner: Cell) -> SlideTrace:
    """Slide the hole at an inner corner through a standard filling."""
    if corner not in inner_corners(shape):
        raise ValueError(f"{corner} is not an inner corner of {shape}")
    after, grid, path = _slide_core(shape, grid, corner)
    return SlideTrace(shape, after, corner, path, _grid_word(after, grid))


def anti_slide(trace: SlideTrace) -> Tuple[ShiftedShape, StdGrid]:
    """Replay a recorded slide backwards, restoring shape and entries."""
    grid = dict(zip(trace.shape_after.cells(), trace.result))
    path = trace.path
    for k in range(len(path) - 2, -1, -1):
        grid[path[k + 1]] = grid.pop(path[k])
    return trace.shape_before, grid


def slide(T: Tableau, corner: Cell) -> Tableau:
    """Semistandard slide via the standardization route."""
    trace = slide_standard(T.shape, _std_grid(T), corner)
    return _destandardize_into(trace.shape_after, trace.result, T)


def _destandardize_into(shape: ShiftedShape, perm: Sequence[int],
                        source: Tableau) -> Tableau:
    word = backend.destandardize(tuple(perm), source.weight())
    if word is None:
        raise IntegrityError(
            f"slide of {source!r} produced an unstandardizable arrangement")
    try:
        return Tableau(shape, word)
    except ValueError as exc:
        raise IntegrityError(f"slide of {source!r} broke semistandardness: {exc}")


def rectify(T: Tableau, rng: Optional[random.Random] = None,
            trace: Optional[List[SlideTrace]] = None) -> Tableau:
    """Slide to a straight shape; the corner order is immaterial.

    Standardization happens once up front and the slides run on the standard
    filling, which is exact because destandardize inverts standardize.
    A Random instance picks corners for confluence testing; default is the
    first corner in row order.
    """
    shape, grid = T.shape, _std_grid(T)
    while True:
        corners = inner_corners(shape)
        if not corners:
            break
        corner = corners[0] if rng is None else rng.choice(corners)
        if trace is not None:
            t = slide_standard(shape, grid, corner)
            trace.append(t)
            shape = t.shape_after
            grid = dict(zip(shape.cells(), t.result))
        else:
            shape, grid, _ = _slide_core(shape, grid, corner)
    return _destandardize_into(shape, _grid_word(shape, grid), T)


def is_littlewood_richardson(T: Tableau) -> bool:
    """True iff row i of the rectification holds only unprimed i."""
    for (r, _), letter in rectify(T).grid().items():
        if letter.primed or letter.value != r + 1:
            return False
    return True
