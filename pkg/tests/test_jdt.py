"""Jeu de taquin slides, rectification, Littlewood-Richardson detection."""

import itertools
import random

from shifted_crystal.jdt import (
    anti_slide, inner_corners, is_littlewood_richardson, rectify, slide,
)
from shifted_crystal.selftest import skew_shapes
from shifted_crystal.tableaux import (
    ShiftedShape, Tableau, enumerate_tableaux, reading_word, skew_word_tableau,
    validate,
)
from shifted_crystal.walks import is_ballot, rect_shape
from shifted_crystal.words import Word, canonical_code_words
from shifted_crystal.operators import e, e_prime, f, f_prime


def test_rectify_fixes_straight_tableaux():
    for T in enumerate_tableaux(ShiftedShape((3, 1)), 2):
        R = rectify(T)
        assert R.shape.outer == (3, 1) and R.word == T.word


def test_rectify_produces_valid_straight_tableaux():
    for shape in skew_shapes(6, 4):
        for T in enumerate_tableaux(shape, 2):
            R = rectify(T)
            assert R.shape.is_straight()
            assert validate(R.shape, R.word) == []
            assert R.weight(2) == T.weight(2)


def test_single_slide_preserves_validity_and_cells():
    shape = ShiftedShape((4, 2), (2, 1))
    for T in enumerate_tableaux(shape, 2):
        for corner in inner_corners(shape):
            U = slide(T, corner)
            assert U.shape.ncells() == shape.ncells()
            assert validate(U.shape, U.word) == []
            assert U.weight(2) == T.weight(2)


def test_rectification_is_corner_order_independent():
    # exhaustive over small shapes: every inner-corner order gives one result
    for shape in skew_shapes(5, 4):
        corners = inner_corners(shape)
        if not corners:
            continue
        for T in enumerate_tableaux(shape, 2):
            results = set()
            for seed in range(6):
                R = rectify(T, rng=random.Random(seed))
                results.add((R.shape.outer, R.word))
            assert len(results) == 1, (str(shape), str(T.word))


def test_anti_slide_inverts_slides():
    shape = ShiftedShape((4, 2), (2,))
    for T in enumerate_tableaux(shape, 3):
        trace = []
        rectify(T, rng=random.Random(11), trace=trace)
        for t in trace:
            back_shape, back_grid = anti_slide(t)
            assert back_shape.outer == t.shape_before.outer
            assert back_shape.inner == t.shape_before.inner
            assert len(back_grid) == back_shape.ncells()


def test_littlewood_richardson_iff_ballot_word():
    for n in (2, 3):
        for L in range(0, 6):
            for codes in canonical_code_words(n, L):
                w = Word.from_codes(codes)
                T = skew_word_tableau(w)
                assert is_littlewood_richardson(T) == is_ballot(w, n)


def test_littlewood_richardson_examples():
    assert is_littlewood_richardson(skew_word_tableau("211"))
    assert not is_littlewood_richardson(skew_word_tableau("112"))


def test_rectified_shape_matches_walk_formula():
    for L in range(0, 8):
        for codes in canonical_code_words(2, L):
            w = Word.from_codes(codes)
            R = rectify(skew_word_tableau(w))
            assert R.shape.outer == rect_shape(w), str(w)


def test_operators_commute_with_slides():
    # coplacticity on a small family; the acceptance suite runs the full sweep
    for shape in [ShiftedShape((3, 1), (1,)), ShiftedShape((3, 2), (2,))]:
        for T in enumerate_tableaux(shape, 2):
            for corner in inner_corners(shape):
                for op in (f, e, f_prime, e_prime):
                    a = op(reading_word(T))
                    U = slide(T, corner)
                    b = op(reading_word(U))
                    if a is None:
                        assert b is None
                    else:
                        assert b is not None
                        assert reading_word(slide(
                            Tableau(shape, a), corner)) == b
