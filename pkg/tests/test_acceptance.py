"""End-to-end acceptance suite.

Eleven checks covering the full surface: walk fidelity, primed chains,
critical substrings, operator inverses, ballot/LR equivalence, coplacticity,
crystal structure, Q-function identities, symmetry, axiom-checker
sensitivity, and the rectified-shape formula.  Exact values are either
worked examples fixed in the library's documentation or are recomputed here
by independent oracles; sweeps are exhaustive over the stated ranges.
"""

import time

from shifted_crystal.axioms import (
    certify_component, check_axioms, load_graph, with_retargeted_edge,
    without_edge,
)
from shifted_crystal.crystal import build, generating_function, lr_coefficients
from shifted_crystal.errors import SchemaError
from shifted_crystal.jdt import inner_corners, is_littlewood_richardson, rectify, slide
from shifted_crystal.operators import (
    OperatorKind, apply as apply_op, critical_substrings, e, e_prime, f,
    f_prime, final_critical,
)
from shifted_crystal.selftest import skew_shapes
from shifted_crystal.tableaux import (
    ShiftedShape, enumerate_tableaux, skew_word_tableau,
)
from shifted_crystal.walks import endpoint, is_ballot, rect_shape
from shifted_crystal.words import Word, canonical_code_words

import oracles


def _report(name, configurations, t0, budget=None):
    dt = time.time() - t0
    print(f"PASS  {name}: {configurations} configuration(s) in {dt:.2f}s")
    if budget is not None:
        assert dt < budget, f"{name} exceeded its {budget}s budget ({dt:.1f}s)"


def test_01_walk_fidelity():
    t0 = time.time()
    assert endpoint("211'12'22'1'1'") == (3, 2)
    w = Word("1221'1'111'1'2'")
    assert endpoint(w) == (5, 1)
    fw = f(w)
    assert fw is not None and endpoint(fw) == (4, 2)
    # per-call latency: a thousand endpoint computations in under a second
    reps = 1000
    t1 = time.perf_counter()
    for _ in range(reps):
        endpoint(w)
    per_call = (time.perf_counter() - t1) / reps
    assert per_call < 1e-3, f"walk took {per_call * 1e3:.3f} ms"
    _report("walk fidelity", 3, t0)


def test_02_primed_chains():
    t0 = time.time()
    w = Word("12211'")
    x = f_prime(w)
    assert x == Word("1222'1'")
    assert f_prime(x) is None
    chain = ["1111'1'", "1121'1'", "1221'1'", "22211'", "2222'1", "2222'2'"]
    for a, b in zip(chain, chain[1:]):
        assert f_prime(Word(a)) == Word(b)
    assert f_prime(Word(chain[-1])) is None
    _report("primed chains", len(chain) + 1, t0)


def test_03_critical_substrings():
    t0 = time.time()
    w = Word("1221'1'111'1'2'2222'2'11'1")
    spans = {}
    for m in critical_substrings(w, direction="F"):
        spans.setdefault((m.start, m.length), set()).add(m.kind)
    assert spans == {
        (0, 1): {"3F", "4F"},       # w1, in two representatives
        (0, 2): {"1F"},             # w1 w2 = 12'
        (0, 4): {"2F"},             # w1..w4 = 1221'
        (6, 4): {"1F"},             # w7..w10 = 11'1'2'
    }
    fin = final_critical(w, direction="F")
    assert (fin.start, fin.length, fin.kind) == (6, 4, "1F")
    fw = f(w)
    assert [str(l) for l in fw.letters[6:10]] == ["2'", "1'", "1'", "2"]
    assert fw.letters[:6] == w.letters[:6] and fw.letters[10:] == w.letters[10:]
    _report("critical substrings", len(spans), t0)


def test_04_operator_inverses():
    t0 = time.time()
    count = 0
    for L in range(0, 9):
        for codes in canonical_code_words(2, L):
            w = Word.from_codes(codes)
            for down, up in ((f, e), (f_prime, e_prime)):
                x = down(w)
                if x is not None:
                    assert up(x) == w, str(w)
                y = up(w)
                if y is not None:
                    assert down(y) == w, str(w)
            count += 1
    _report("operator inverses", count, t0, budget=60)


def test_05_ballot_equals_littlewood_richardson():
    t0 = time.time()
    count = 0
    for n in (1, 2, 3):
        for L in range(0, 9):
            for codes in canonical_code_words(n, L):
                w = Word.from_codes(codes)
                assert is_ballot(w, n) == \
                    is_littlewood_richardson(skew_word_tableau(w)), str(w)
                count += 1
    _report("ballot = Littlewood-Richardson", count, t0)


def test_06_coplacticity():
    t0 = time.time()
    kinds = {
        2: [OperatorKind(r, p, 1) for r in (False, True) for p in (False, True)],
        3: [OperatorKind(r, p, i) for r in (False, True) for p in (False, True)
            for i in (1, 2)],
    }
    count = 0
    for shape in skew_shapes(8, 6):
        corners = inner_corners(shape)
        if not corners:
            continue
        for n in (2, 3):
            for T in enumerate_tableaux(shape, n):
                for corner in corners:
                    U = slide(T, corner)
                    for kind in kinds[n]:
                        a = apply_op(T, kind)
                        b = apply_op(U, kind)
                        if a is None:
                            assert b is None, (str(shape), str(T.word), str(kind))
                        else:
                            assert b is not None and slide(a, corner).word == b.word, \
                                (str(shape), str(T.word), str(kind))
                        count += 1
    _report("coplacticity", count, t0, budget=300)


def _crystal_family():
    seen = set()
    for shape in skew_shapes(8, 7):
        seen.add((shape.outer, shape.inner))
        yield shape
    for lam in oracles.strict_partitions(8):
        if sum(lam) == 8 and (tuple(lam), ()) not in seen:
            yield ShiftedShape(lam)


def test_07_crystal_structure():
    t0 = time.time()
    graphs = vertices = 0
    for shape in _crystal_family():
        for n in (1, 2, 3):
            g = build(shape, n)
            g.check_kashiwara()
            hw = set(g.highest_weights())
            for comp in g.components():
                assert len(hw.intersection(comp)) == 1, (str(shape), n)
            lr = {v for v in range(len(g.vertices))
                  if is_littlewood_richardson(g.vertices[v])}
            assert hw == lr, (str(shape), n)
            graphs += 1
            vertices += len(g.vertices)
    _report("crystal structure", f"{graphs} graphs / {vertices} vertices", t0)


def test_08_q_positivity_identities():
    t0 = time.time()
    p3 = generating_function(ShiftedShape((3,)), 2)
    assert dict(p3.items()) == {(3, 0): 2, (2, 1): 4, (1, 2): 4, (0, 3): 2}
    p21 = generating_function(ShiftedShape((2, 1)), 2)
    assert dict(p21.items()) == {(2, 1): 4, (1, 2): 4}
    # independent series computation: q_r from prod(1+x_i t)/(1-x_i t),
    # and Q_(2,1) = q_1 q_2 - 2 q_3
    assert dict(p3.items()) == oracles.q_onerow(3, 2)
    q1, q2, q3 = (oracles.q_onerow(r, 2) for r in (1, 2, 3))
    q21 = oracles.padd(oracles.pmul(q1, q2), oracles.pscale(q3, -2))
    assert dict(p21.items()) == q21
    assert lr_coefficients((2, 1), (1,), 2) == {(2,): 1}
    _report("Q-positivity identities", 3, t0)


def test_09_symmetry():
    t0 = time.time()
    count = 0
    for lam in oracles.strict_partitions(7):
        for n in (2, 3):
            assert generating_function(ShiftedShape(lam), n).is_symmetric(), \
                (lam, n)
            count += 1
    _report("generating-function symmetry", count, t0)


def _detected(G):
    if not check_axioms(G).ok:
        return True
    return not all(certify_component(G, comp).ok for comp in G.components())


def test_10_axiom_checker_sensitivity():
    t0 = time.time()
    # full certification of two exported three-class crystals
    for outer in ((3, 1), (4, 2, 1)):
        G = load_graph(build(ShiftedShape(outer), 3).to_doc())
        assert check_axioms(G).ok
        for comp in G.components():
            cert = certify_component(G, comp)
            assert cert.ok, (outer, cert.problems)
    # every single-edge mutation of two small crystals is caught
    mutations = 0
    for outer, n in (((3,), 2), ((2, 1), 2)):
        G = load_graph(build(ShiftedShape(outer), n).to_doc())
        assert not _detected(G)
        for edge in list(G.edges):
            assert _detected(without_edge(G, *edge)), (outer, edge)
            mutations += 1
            for v in G.vertices:
                if v == edge[1]:
                    continue
                try:
                    H = with_retargeted_edge(G, *edge, new_dst=v)
                except SchemaError:
                    mutations += 1      # rejected outright: also detected
                    continue
                assert _detected(H), (outer, edge, v)
                mutations += 1
    _report("axiom checker sensitivity", f"2 certified / {mutations} mutations",
            t0, budget=120)


def test_11_rectified_shape_formula():
    t0 = time.time()
    count = 0
    for L in range(0, 11):
        for codes in canonical_code_words(2, L):
            w = Word.from_codes(codes)
            assert rectify(skew_word_tableau(w)).shape.outer == rect_shape(w), \
                str(w)
            count += 1
    _report("rectified-shape formula", count, t0)
