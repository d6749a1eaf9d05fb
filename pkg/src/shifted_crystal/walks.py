"""First-quadrant lattice walks of 2-class words.

Each letter of a word over {1', 1, 2', 2} moves a point by one unit: on either
axis the prime is ignored (class 1 goes East, class 2 goes North); in the
interior 1 goes South, 1' East, 2 North, 2' West.  The endpoint determines the
rectification shape and the ballot property.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from . import backend
from .errors import IntegrityError
from .words import Letter, WordLike, as_codes, letters_of_codes

Point = Tuple[int, int]

_DIR = {(1, 0): "E", (0, 1): "N", (0, -1): "S", (-1, 0): "W"}
_VEC = {v: k for k, v in _DIR.items()}


@dataclass(frozen=True)
class WalkStep:
    letter: Letter
    direction: str      # one of E N S W
    location: Point     # point just before this letter


@dataclass(frozen=True)
class Walk:
    points: Tuple[Point, ...]
    steps: Tuple[WalkStep, ...]

    @property
    def endpoint(self) -> Point:
        return self.points[-1]

    def directions(self) -> str:
        return "".join(s.direction for s in self.steps)


def walk_step(p: Point, letter: Letter) -> Point:
    """One move of the walk; axis rule first, interior rule otherwise."""
    x, y = p
    if x < 0 or y < 0:
        raise ValueError(f"point {p} outside the first quadrant")
    cls, primed = letter.value, letter.primed
    if cls == 1:
        dx, dy = ((1, 0) if (y == 0 or x == 0)      # axes: East regardless of prime
                  else (1, 0) if primed             # interior 1': East
                  else (0, -1))                     # interior 1: South
    elif cls == 2:
        dx, dy = ((0, 1) if (y == 0 or x == 0)      # axes: North
                  else (-1, 0) if primed            # interior 2': West
                  else (0, 1))                      # interior 2: North
    else:
        raise ValueError(f"walk letters must have class 1 or 2, got {letter}")
    return (x + dx, y + dy)


def walk(w: WordLike) -> Walk:
    """The full walk of a 2-class word from the origin, with provenance."""
    codes = as_codes(w)
    pts = backend.walk_points(codes)
    steps = []
    for letter, p, q in zip(letters_of_codes(codes), pts, pts[1:]):
        if q[0] < 0 or q[1] < 0:
            raise IntegrityError(f"walk left the first quadrant at {q}")
        steps.append(WalkStep(letter, _DIR[(q[0] - p[0], q[1] - p[1])], p))
    return Walk(tuple(pts), tuple(steps))


def endpoint(w: WordLike) -> Point:
    return backend.walk_endpoint(as_codes(w))


def rect_shape(w: WordLike) -> Tuple[int, ...]:
    """Shape of the rectification of any tableau with reading word w.

    With endpoint (x, y) and n letters, the first row has (n+x+y)/2 cells
    (one per North or East step) and the second (n-x-y)/2 (South or West).
    """
    codes = as_codes(w)
    n = len(codes)
    x, y = backend.walk_endpoint(codes)
    lam1, rem = divmod(n + x + y, 2)
    if rem:
        raise IntegrityError(f"walk parity broken: n={n}, endpoint={(x, y)}")
    lam2 = n - lam1
    if lam2 < 0 or (lam2 and lam2 >= lam1):
        raise IntegrityError(f"walk shape not strict: {(lam1, lam2)}")
    return (lam1, lam2) if lam2 else ((lam1,) if lam1 else ())


def is_ballot(w: WordLike, n: int) -> bool:
    """True iff every class-pair walk of w ends on the x-axis."""
    return bool(backend.is_ballot(as_codes(w), n))


def walk_svg(wk: Walk, scale: int = 32) -> str:
    """A small standalone SVG picture of a walk, for documentation."""
    xs = [p[0] for p in wk.points]
    ys = [p[1] for p in wk.points]
    W, H = max(xs) + 1, max(ys) + 1
    pad = scale // 2

    def sx(x):
        return pad + x * scale

    def sy(y):
        return pad + (H - 1 - y) * scale

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" '
             f'width="{sx(W - 1) + pad}" height="{sy(0) + pad}" '
             f'font-size="{scale // 3}" font-family="monospace">']
    for gx in range(W):
        parts.append(f'<line x1="{sx(gx)}" y1="{sy(0)}" x2="{sx(gx)}" '
                     f'y2="{sy(H - 1)}" stroke="#ddd"/>')
    for gy in range(H):
        parts.append(f'<line x1="{sx(0)}" y1="{sy(gy)}" x2="{sx(W - 1)}" '
                     f'y2="{sy(gy)}" stroke="#ddd"/>')
    pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in wk.points)
    parts.append(f'<polyline points="{pts}" fill="none" stroke="#c22" '
                 f'stroke-width="2"/>')
    for k, step in enumerate(wk.steps):
        (x, y), q = step.location, wk.points[k + 1]
        mx, my = (sx(x) + sx(q[0])) / 2, (sy(y) + sy(q[1])) / 2
        parts.append(f'<text x="{mx + 3}" y="{my - 3}">{step.letter}</text>')
    x0, y0 = wk.points[0]
    xn, yn = wk.endpoint
    parts.append(f'<circle cx="{sx(x0)}" cy="{sy(y0)}" r="3" fill="#222"/>')
    parts.append(f'<circle cx="{sx(xn)}" cy="{sy(yn)}" r="4" fill="#c22"/>')
    parts.append("</svg>")
    return "\n".join(parts)
