"""Desk-scale exhaustive self-checks, callable from the CLI.

Each check sweeps a small exhaustively-enumerable family and tests an exact
identity between two independent code paths (operator inverses, walk
bookkeeping, slide confluence, ballotness against rectification, crystal
decomposition against direct counting, the axiom checker against generated
graphs).  ``--quick`` keeps every sweep under a few seconds; ``--full`` widens
the bounds to the sizes the acceptance suite uses.
"""

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterable, List, Tuple

from . import backend
from .words import Word, canonical_code_words
from .walks import endpoint, is_ballot, rect_shape
from .operators import OperatorKind, apply, apply_to_word
from .tableaux import ShiftedShape, Tableau, enumerate_tableaux, skew_word_tableau
from .jdt import inner_corners, is_littlewood_richardson, rectify, slide
from .crystal import build, generating_function
from .qpoly import QPolynomial
from .axioms import certify_component, check_axioms


@dataclass
class CheckResult:
    name: str
    ok: bool
    configurations: int
    seconds: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        msg = f"{status}  {self.name}: {self.configurations} configuration(s) " \
              f"in {self.seconds:.2f}s"
        return msg + (f"  [{self.detail}]" if self.detail else "")


def _strict_partitions(maxsum: int) -> List[Tuple[int, ...]]:
    out = [()]

    def rec(prefix, hi, rem):
        for p in range(min(hi, rem), 0, -1):
            out.append(tuple(prefix + [p]))
            rec(prefix + [p], p - 1, rem - p)

    rec([], maxsum, maxsum)
    return out


def skew_shapes(max_boxes: int, max_cells: int) -> List[ShiftedShape]:
    """Shapes outer/inner with |outer| <= max_boxes, 1..max_cells cells."""
    shapes = []
    for lam in _strict_partitions(max_boxes):
        if not lam:
            continue
        for mu in _strict_partitions(sum(lam)):
            if len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam)):
                if 0 < sum(lam) - sum(mu) <= max_cells:
                    shapes.append(ShiftedShape(lam, mu))
    return shapes


def _words(n: int, max_len: int) -> Iterable[Tuple[int, ...]]:
    for length in range(max_len + 1):
        yield from canonical_code_words(n, length)


def check_operator_inverses(max_len: int) -> CheckResult:
    """e undoes f, f undoes e, for both families, plus the endpoint shift."""
    t0 = time.time()
    count = 0
    ops = [(backend.apply_f, backend.apply_e, False),
           (lambda c: backend.f_prime(c), lambda c: backend.e_prime(c), True)]
    for codes in _words(2, max_len):
        count += 1
        x, y = backend.walk_endpoint(codes)
        for fwd, back, _primed in ops:
            down = fwd(codes)
            if down is not None:
                if back(down) != codes:
                    return CheckResult("operator inverses", False, count,
                                       time.time() - t0,
                                       f"e(f({codes})) != id")
                if backend.walk_endpoint(down) != (x - 1, y + 1):
                    return CheckResult("operator inverses", False, count,
                                       time.time() - t0,
                                       f"endpoint shift wrong at {codes}")
            up = back(codes)
            if up is not None and fwd(up) != codes:
                return CheckResult("operator inverses", False, count,
                                   time.time() - t0, f"f(e({codes})) != id")
    return CheckResult("operator inverses", True, count, time.time() - t0)


def check_ballot_matches_rectification(max_len: int, n: int = 3) -> CheckResult:
    """is_ballot agrees with Littlewood-Richardson of a realizing tableau."""
    t0 = time.time()
    count = 0
    for codes in _words(n, max_len):
        count += 1
        T = skew_word_tableau(codes)
        if is_ballot(codes, n) != is_littlewood_richardson(T):
            return CheckResult("ballot = LR", False, count, time.time() - t0,
                               f"disagreement at {Word.from_codes(codes)}")
    return CheckResult("ballot = LR", True, count, time.time() - t0)


def check_rect_shape_formula(max_len: int) -> CheckResult:
    """The walk endpoint predicts the rectified shape exactly."""
    t0 = time.time()
    count = 0
    for codes in _words(2, max_len):
        count += 1
        want = rect_shape(codes)
        got = rectify(skew_word_tableau(codes)).shape.outer
        if tuple(want) != tuple(got):
            return CheckResult("rectified shape formula", False, count,
                               time.time() - t0,
                               f"{Word.from_codes(codes)}: {want} vs {got}")
    return CheckResult("rectified shape formula", True, count, time.time() - t0)


def check_slide_confluence(shapes: List[ShiftedShape], n: int,
                           seed: int) -> CheckResult:
    """Two independently shuffled corner orders rectify identically."""
    t0 = time.time()
    rng1 = random.Random(seed)
    rng2 = random.Random(seed + 1)
    count = 0
    for shape in shapes:
        for T in enumerate_tableaux(shape, n):
            count += 1
            if rectify(T, rng=rng1) != rectify(T, rng=rng2):
                return CheckResult("slide confluence", False, count,
                                   time.time() - t0, f"at {T.word}")
    return CheckResult("slide confluence", True, count, time.time() - t0)


def check_coplacticity(shapes: List[ShiftedShape], n: int) -> CheckResult:
    """Operators commute with a single inward slide, undefined included."""
    t0 = time.time()
    count = 0
    kinds = [OperatorKind(r, p, i)
             for r in (False, True) for p in (False, True)
             for i in range(1, n)]
    for shape in shapes:
        for T in enumerate_tableaux(shape, n):
            for corner in inner_corners(T.shape):
                S = slide(T, corner)
                for kind in kinds:
                    count += 1
                    a = apply(T, kind)
                    b = apply(S, kind)
                    if (a is None) != (b is None):
                        return CheckResult(
                            "coplacticity", False, count, time.time() - t0,
                            f"{kind} defined on one side only at {T.word}")
                    if a is not None and slide(a, corner) != b:
                        return CheckResult(
                            "coplacticity", False, count, time.time() - t0,
                            f"{kind} does not commute with slide at {T.word}")
    return CheckResult("coplacticity", True, count, time.time() - t0)


def check_crystal_graphs(shapes: List[ShiftedShape], n: int) -> CheckResult:
    """Kashiwara conditions, local axioms, certification, and the
    decomposition of the generating function into straight-shape pieces."""
    t0 = time.time()
    count = 0
    for shape in shapes:
        G = build(shape, n)
        count += len(G.vertices)
        bad = G.check_kashiwara()
        if bad:
            return CheckResult("crystal graphs", False, count,
                               time.time() - t0, bad[0])
        A = G.to_abstract()
        rep = check_axioms(A)
        if not rep.ok:
            return CheckResult("crystal graphs", False, count,
                               time.time() - t0, rep.violations[0])
        total = QPolynomial.zero(n)
        for hw in G.highest_weights():
            nu = tuple(k for k in G.weight(hw) if k)
            total = total + generating_function(ShiftedShape(nu, ()), n)
        if total != generating_function(shape, n):
            return CheckResult("crystal graphs", False, count,
                               time.time() - t0,
                               f"decomposition mismatch at {shape}")
        for comp in A.components():
            if not certify_component(A, comp).ok:
                return CheckResult("crystal graphs", False, count,
                                   time.time() - t0,
                                   f"certification failed at {shape}")
    return CheckResult("crystal graphs", True, count, time.time() - t0)


def check_genfun_symmetry(max_boxes: int, n: int) -> CheckResult:
    t0 = time.time()
    count = 0
    for lam in _strict_partitions(max_boxes):
        if not lam:
            continue
        count += 1
        if not generating_function(ShiftedShape(lam, ()), n).is_symmetric():
            return CheckResult("generating-function symmetry", False, count,
                               time.time() - t0, f"at {lam}")
    return CheckResult("generating-function symmetry", True, count,
                       time.time() - t0)


def run(full: bool = False, seed: int = 0) -> List[CheckResult]:
    word_len = 8 if full else 6
    ballot_len = 6 if full else 5
    cop_shapes = skew_shapes(6 if full else 5, 4 if full else 3)
    crystal_shapes = ([ShiftedShape((3,), ()), ShiftedShape((2, 1), ()),
                       ShiftedShape((3, 1), ()), ShiftedShape((3, 1), (1,))]
                      + ([ShiftedShape((4, 2, 1), ()),
                          ShiftedShape((4, 2), (2,))] if full else []))
    checks: List[Callable[[], CheckResult]] = [
        lambda: check_operator_inverses(word_len),
        lambda: check_ballot_matches_rectification(ballot_len),
        lambda: check_rect_shape_formula(word_len),
        lambda: check_slide_confluence(cop_shapes, 3, seed),
        lambda: check_coplacticity(cop_shapes, 3),
        lambda: check_crystal_graphs(crystal_shapes, 3),
        lambda: check_genfun_symmetry(7 if full else 5, 3),
    ]
    return [c() for c in checks]
