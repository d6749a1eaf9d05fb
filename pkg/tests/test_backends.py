"""Pure-Python and compiled kernels must be indistinguishable."""

import itertools
import os
import subprocess
import sys

import pytest

from shifted_crystal import _kernels as pure
from shifted_crystal import backend
from shifted_crystal.errors import IntegrityError
from shifted_crystal.words import canonical_code_words

compiled = pytest.importorskip(
    "shifted_crystal._kernels_c",
    reason="compiled kernels not built; pure backend is the only one")


def outcome(mod, fn, *args):
    try:
        return ("ok", getattr(mod, fn)(*args))
    except IntegrityError as exc:
        return ("integrity", str(exc))


CALLS = [
    ("canonicalize", lambda c: (c,)),
    ("weight", lambda c: (c,)),
    ("weight", lambda c: (c, 3)),
    ("standardize", lambda c: (c,)),
    ("representatives", lambda c: (c,)),
    ("restrict", lambda c: (c, 1)),
    ("walk_endpoint", lambda c: (c,)),
    ("walk_points", lambda c: (c,)),
    ("f_prime", lambda c: (c,)),
    ("e_prime", lambda c: (c,)),
    ("critical_f", lambda c: (c,)),
    ("critical_e", lambda c: (c,)),
    ("apply_f", lambda c: (c,)),
    ("apply_e", lambda c: (c,)),
    ("flip", lambda c: (c,)),
    ("is_ballot", lambda c: (c, 2)),
]


def test_kernels_agree_exhaustively_two_classes():
    for L in range(0, 8):
        for codes in canonical_code_words(2, L):
            for fn, mk in CALLS:
                args = mk(codes)
                assert outcome(pure, fn, *args) == outcome(compiled, fn, *args), \
                    (fn, codes)


def test_kernels_agree_three_classes():
    for L in range(0, 6):
        for codes in canonical_code_words(3, L):
            for fn, args in [("restrict", (codes, 2)), ("weight", (codes,)),
                             ("is_ballot", (codes, 3)),
                             ("canonicalize", (codes,)),
                             ("standardize", (codes,))]:
                assert outcome(pure, fn, *args) == outcome(compiled, fn, *args)


def test_destandardize_agrees_on_all_weights():
    for L in range(0, 7):
        for codes in canonical_code_words(2, L):
            perm = pure.standardize(codes)
            for a in range(L + 1):
                mu = (a, L - a)
                assert outcome(pure, "destandardize", perm, mu) == \
                    outcome(compiled, "destandardize", perm, mu)


def test_transform_agrees_on_all_matches():
    for L in range(0, 7):
        for codes in canonical_code_words(2, L):
            for m in pure.critical_f(codes):
                a = outcome(pure, "transform_f", m[0], m[1], m[2], m[3])
                b = outcome(compiled, "transform_f", m[0], m[1], m[2], m[3])
                assert a == b


def test_kernels_accept_lists_as_well_as_tuples():
    codes = [2, 4, 4, 1]
    assert compiled.canonicalize(codes) == pure.canonicalize(codes)
    assert compiled.walk_endpoint(codes) == pure.walk_endpoint(codes)


def test_backend_name_reports_selection():
    assert backend.backend_name() in ("py", "c")


def test_environment_variable_selects_backend():
    code = ("from shifted_crystal import backend; "
            "print(backend.backend_name())")
    for want in ("py", "c"):
        env = dict(os.environ, SHIFTED_CRYSTAL_BACKEND=want)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True)
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == want
