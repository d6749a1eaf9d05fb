"""Compare the pure-Python kernels against the compiled twin.

Two sections: direct kernel timings (both modules imported side by side) and
end-to-end workloads (rectification sweep, crystal build) run in a fresh
subprocess per backend so the import-time selection is exercised for real.

Usage: python3 benchmarks/bench_backends.py [--quick]
"""

import argparse
import json
import os
import subprocess
import sys
import time

from shifted_crystal import _kernels as py_kernels
from shifted_crystal.words import canonical_code_words

try:
    from shifted_crystal import _kernels_c as c_kernels
except ImportError:
    c_kernels = None


def corpus(max_len):
    words = []
    for L in range(1, max_len + 1):
        words.extend(canonical_code_words(2, L))
    return words


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_kernels(words, repeats):
    cases = [
        ("canonicalize", lambda k: [k.canonicalize(w) for w in words]),
        ("weight", lambda k: [k.weight(w, 2) for w in words]),
        ("standardize", lambda k: [k.standardize(w) for w in words]),
        ("walk_endpoint", lambda k: [k.walk_endpoint(w) for w in words]),
        ("is_ballot", lambda k: [k.is_ballot(w, 2) for w in words]),
        ("apply_f", lambda k: [k.apply_f(w) for w in words]),
        ("apply_e", lambda k: [k.apply_e(w) for w in words]),
        ("f_prime", lambda k: [k.f_prime(w) for w in words]),
        ("restrict", lambda k: [k.restrict(w, 1) for w in words]),
    ]
    rows = []
    for name, run in cases:
        t_py = best_of(lambda: run(py_kernels), repeats)
        t_c = best_of(lambda: run(c_kernels), repeats) if c_kernels else None
        rows.append((name, t_py, t_c))
    return rows


WORKLOADS = {
    "rectify sweep (len<=8)": """
from shifted_crystal.words import Word, canonical_code_words
from shifted_crystal.tableaux import skew_word_tableau
from shifted_crystal.jdt import rectify
for L in range(1, 9):
    for codes in canonical_code_words(2, L):
        rectify(skew_word_tableau(Word.from_codes(codes)))
""",
    "build+kashiwara (4,2,1) n=3": """
from shifted_crystal.tableaux import ShiftedShape
from shifted_crystal.crystal import build
g = build(ShiftedShape((4, 2, 1)), 3)
g.check_kashiwara()
""",
}


def run_workload(body, backend):
    prog = (
        "import time\n"
        "import shifted_crystal\n"
        "t0 = time.perf_counter()\n"
        + body +
        "\nprint(time.perf_counter() - t0)\n"
    )
    env = dict(os.environ, SHIFTED_CRYSTAL_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", prog], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip().splitlines()[-1])


def fmt_row(name, t_py, t_c, n=None):
    per = "" if n is None else f"  ({t_py / n * 1e6:7.2f} us/op py)"
    if t_c is None:
        return f"  {name:<28} py {t_py * 1e3:8.2f} ms   c    (not built)"
    return (f"  {name:<28} py {t_py * 1e3:8.2f} ms   c {t_c * 1e3:8.2f} ms"
            f"   x{t_py / t_c:5.2f}{per}")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true",
                    help="shorter corpus, fewer repeats")
    ap.add_argument("--json", action="store_true", help="machine output")
    args = ap.parse_args(argv)

    max_len = 6 if args.quick else 8
    repeats = 3 if args.quick else 5
    words = corpus(max_len)

    rows = bench_kernels(words, repeats)
    results = {"corpus_words": len(words), "kernels": {}, "workloads": {}}
    if not args.json:
        print(f"kernel timings over {len(words)} words "
              f"(best of {repeats}, compiled available: {c_kernels is not None})")
    for name, t_py, t_c in rows:
        results["kernels"][name] = {
            "py_s": t_py, "c_s": t_c,
            "speedup": None if t_c is None else t_py / t_c,
        }
        if not args.json:
            print(fmt_row(name, t_py, t_c, n=len(words)))

    if not args.json:
        print("end-to-end workloads (fresh subprocess per backend)")
    for name, body in WORKLOADS.items():
        t_py = run_workload(body, "py")
        t_c = run_workload(body, "c") if c_kernels else None
        results["workloads"][name] = {
            "py_s": t_py, "c_s": t_c,
            "speedup": None if t_c is None else t_py / t_c,
        }
        if not args.json:
            print(fmt_row(name, t_py, t_c))

    if args.json:
        json.dump(results, sys.stdout, indent=2)
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
