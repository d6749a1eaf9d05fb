"""Shifted shapes, tableaux, validation, enumeration."""

import pytest

from shifted_crystal.errors import SchemaError
from shifted_crystal.tableaux import (
    ShiftedShape, Tableau, apply_word, enumerate_tableaux, reading_word,
    skew_word_tableau, strict_partition, validate,
)
from shifted_crystal.words import Word, as_codes

import oracles


def test_strict_partition_validation():
    assert strict_partition((3, 1)) == (3, 1)
    assert strict_partition([]) == ()
    for bad in [(2, 2), (1, 3), (-1,), (3, 0, 1)]:
        with pytest.raises(ValueError):
            strict_partition(bad)


def test_shape_cells_in_reading_order():
    s = ShiftedShape((3, 1))
    # bottom row first, each row indented by its index
    assert list(s.cells()) == [(1, 1), (0, 0), (0, 1), (0, 2)]
    assert s.ncells() == 4
    assert s.is_straight()
    skew = ShiftedShape((3, 1), (2,))
    assert list(skew.cells()) == [(1, 1), (0, 2)]
    assert not skew.is_straight()


def test_shape_validation():
    with pytest.raises(ValueError):
        ShiftedShape((3, 1), (4,))
    with pytest.raises(ValueError):
        ShiftedShape((2, 2))
    assert ShiftedShape((3, 1), (3, 1)).ncells() == 0


def test_tableau_roundtrip_and_entry():
    T = Tableau(ShiftedShape((3, 1)), "2112'")
    assert str(T.word) == "2112'"
    assert str(T.entry(1, 1)) == "2"
    assert str(T.entry(0, 2)) == "2'"
    doc = T.to_doc()
    assert doc == {"outer": [3, 1], "inner": [], "rows": [["1", "1", "2'"], ["2"]]}
    assert Tableau.from_doc(doc).word == T.word


def test_tableau_rejects_bad_fillings():
    s = ShiftedShape((3, 1))
    with pytest.raises(ValueError):
        Tableau(s, "211'1")          # row decrease
    with pytest.raises(ValueError):
        Tableau(s, "21")             # wrong length
    assert validate(s, "2112'") == []
    assert validate(s, "211'1") != []


def test_from_doc_rejects_malformed_documents():
    good = Tableau(ShiftedShape((3, 1)), "2112'").to_doc()
    bad = dict(good)
    bad["rows"] = [["1", "1"], ["2"]]
    with pytest.raises(SchemaError):
        Tableau.from_doc(bad)
    with pytest.raises(SchemaError):
        Tableau.from_doc({"outer": [3, 1]})


def test_validate_matches_oracle_rules():
    # package validity must agree with the row/column letter rules cell by cell
    shapes = [((2,), ()), ((2, 1), ()), ((3,), ()), ((3, 1), (1,)), ((2, 1), (1,))]
    for outer, inner in shapes:
        s = ShiftedShape(outer, inner)
        cells = oracles.shifted_cells(outer, inner)
        for grid in _all_grids(cells, n=2):
            filling = [grid[c] for c in s.cells()]
            ok_oracle = _oracle_valid(grid, cells)
            ok_pkg = validate(s, _letters(filling)) == []
            assert ok_pkg == ok_oracle, (outer, inner, grid)


def _all_grids(cells, n):
    import itertools
    for vals in itertools.product(range(1, 2 * n + 1), repeat=len(cells)):
        yield dict(zip(cells, vals))


def _oracle_valid(grid, cells):
    cellset = set(cells)
    for (r, c), v in grid.items():
        if (r, c - 1) in cellset and not oracles._row_ok(grid[(r, c - 1)], v):
            return False
        if (r - 1, c) in cellset and not oracles._col_ok(grid[(r - 1, c)], v):
            return False
    return True


def _letters(codes):
    from shifted_crystal.words import letters_of_codes
    return letters_of_codes(tuple(codes))


def test_enumeration_matches_brute_force():
    # enumerated canonical tableaux, expanded by prime toggles, must hit every
    # valid filling exactly once
    shapes = [((3,), ()), ((2, 1), ()), ((3, 1), ()), ((4, 1), ()),
              ((3, 1), (1,)), ((3, 2), (2,)), ((4, 2), (2, 1))]
    for outer, inner in shapes:
        for n in (1, 2, 3):
            brute = oracles.filling_weights(outer, inner, n)
            expanded = {}
            for T in enumerate_tableaux(ShiftedShape(outer, inner), n):
                wt = T.weight(n)
                classes = len(set((c + 1) // 2 for c in as_codes(T.word)))
                expanded[wt] = expanded.get(wt, 0) + 2 ** classes
            assert expanded == dict(brute), (outer, inner, n)


def test_enumerated_tableaux_are_canonical_and_valid():
    for outer, inner in [((3, 1), ()), ((3, 1), (1,))]:
        s = ShiftedShape(outer, inner)
        seen = set()
        for T in enumerate_tableaux(s, 2):
            codes = as_codes(T.word)
            assert codes == oracles.canonicalize_oracle(codes)
            assert validate(s, T.word) == []
            assert codes not in seen
            seen.add(codes)


def test_reading_word_is_bottom_row_first():
    T = Tableau(ShiftedShape((3, 1)), "2112'")
    assert reading_word(T) == Word("2112'")
    grid = T.grid()
    expect = oracles.reading_word_oracle((3, 1), (), {k: v.code for k, v in grid.items()})
    assert as_codes(T.word) == expect


def test_skew_word_tableau_realizes_any_word():
    for text in ["1221'", "211'12'22'1'1'", "1", ""]:
        T = skew_word_tableau(text)
        assert reading_word(T) == Word(text)
        # one cell per row on an anti-diagonal staircase
        assert T.shape.ncells() == len(Word(text).codes)


def test_apply_word_replaces_filling():
    s = ShiftedShape((3,))
    T = Tableau(s, "112")
    U = apply_word(T, Word("122"))
    assert U.shape is s or U.shape.outer == s.outer
    assert str(U.word) == "122"
