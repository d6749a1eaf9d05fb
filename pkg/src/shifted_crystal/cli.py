"""Command-line surface.

Exit codes: 0 on success, 1 on a domain refutation (undefined operator,
non-ballot word, failed verification, failed selftest), 2 on usage or input
errors.  ``--json`` switches machine-readable output on; shapes are
comma-separated part lists and words use the compact literal grammar.
"""

import argparse
import json
import random
import sys
from typing import List, Optional, Tuple

from . import __version__, backend
from .errors import IntegrityError, SchemaError
from .words import Word
from .walks import is_ballot, rect_shape, walk, walk_svg
from .operators import OperatorKind, apply, apply_to_word
from .tableaux import ShiftedShape, Tableau, enumerate_tableaux, skew_word_tableau
from .jdt import is_littlewood_richardson, rectify
from .crystal import CrystalGraph, build, generating_function, lr_coefficients
from .axioms import (AbstractGraph, certify_component, check_axioms, load_graph,
                     with_retargeted_edge, without_edge)


def _parts(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SchemaError(f"bad partition literal {text!r}; "
                          f"expected comma-separated parts like 4,2,1")


def _shape(args) -> ShiftedShape:
    outer = _parts(args.shape)
    inner = _parts(args.inner) if getattr(args, "inner", None) else ()
    return ShiftedShape(outer, inner)


def _load_tableau(args) -> Tableau:
    if getattr(args, "tableau", None):
        with open(args.tableau) as fh:
            return Tableau.from_doc(json.load(fh))
    if getattr(args, "word", None):
        # a skew tableau realizing the word, one cell per row
        return skew_word_tableau(Word(args.word))
    raise SchemaError("pass --tableau FILE or --word WORD")


def _emit(args, doc: dict, human: str) -> None:
    if args.json:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(human)


def _write_out(path: Optional[str], text: str) -> None:
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------

def cmd_walk(args) -> int:
    w = Word(args.word)
    wk = walk(w)
    if args.svg is not None:
        _write_out(args.svg, walk_svg(wk))
        if args.svg != "-":
            print(f"wrote {args.svg}", file=sys.stderr)
    doc = {"word": str(w), "points": [list(p) for p in wk.points],
           "steps": list(wk.directions()), "endpoint": list(wk.endpoint)}
    human = (f"word:     {w}\n"
             f"steps:    {wk.directions()}\n"
             f"points:   {' '.join(f'({x},{y})' for x, y in wk.points)}\n"
             f"endpoint: {wk.endpoint}")
    _emit(args, doc, human)
    return 0


def cmd_ballot(args) -> int:
    w = Word(args.word)
    ok = is_ballot(w, args.n)
    _emit(args, {"word": str(w), "n": args.n, "ballot": ok},
          f"{w} is {'ballot' if ok else 'not ballot'} for n={args.n}")
    return 0 if ok else 1


def cmd_op(args) -> int:
    kind = OperatorKind.parse(args.kind, args.index)
    if args.tableau:
        T = _load_tableau(args)
        r = apply(T, kind)
        if r is None:
            _emit(args, {"kind": str(kind), "input": str(T.word), "result": None},
                  f"{kind} is undefined on this tableau")
            return 1
        _emit(args, {"kind": str(kind), "input": str(T.word),
                     "result": r.to_doc()},
              f"{kind}:\n{T.pretty()}\n  ->\n{r.pretty()}")
        return 0
    if not args.word:
        raise SchemaError("pass --word WORD or --tableau FILE")
    w = Word(args.word)
    r = apply_to_word(w, kind)
    if r is None:
        _emit(args, {"kind": str(kind), "input": str(w), "result": None},
              f"{kind}({w}) is undefined")
        return 1
    _emit(args, {"kind": str(kind), "input": str(w), "result": str(r)},
          str(r))
    return 0


def cmd_rectify(args) -> int:
    T = _load_tableau(args)
    rng = random.Random(args.seed) if args.seed is not None else None
    R = rectify(T, rng=rng)
    _emit(args, R.to_doc(),
          f"{R.pretty()}\nshape: {','.join(map(str, R.shape.outer))}")
    return 0


def cmd_lr_check(args) -> int:
    T = _load_tableau(args)
    ok = is_littlewood_richardson(T)
    R = rectify(T)
    doc = {"input": str(T.word), "littlewood_richardson": ok,
           "rectification": R.to_doc()}
    _emit(args, doc, f"{T.word} is {'' if ok else 'not '}Littlewood-Richardson"
                     f" (rectifies to {R.word})")
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    shape = _shape(args)
    words = []
    for k, T in enumerate(enumerate_tableaux(shape, args.n)):
        if args.limit is not None and k >= args.limit:
            break
        words.append(str(T.word))
    total = sum(1 for _ in enumerate_tableaux(shape, args.n))
    doc = {"shape": str(shape), "n": args.n, "count": total, "words": words}
    human = "\n".join(words + [f"count: {total}"])
    _emit(args, doc, human)
    return 0


def cmd_crystal(args) -> int:
    G = build(_shape(args), args.n)
    if args.format == "dot":
        _write_out(args.output, G.to_dot())
        return 0
    if args.format == "json" or args.json:
        text = json.dumps(G.to_doc(with_stats=not args.no_stats), indent=2)
        _write_out(args.output, text + "\n")
        return 0
    comps = G.components()
    lines = [f"shape {G.shape}, n={G.n}: {len(G.vertices)} vertices, "
             f"{len(G.edges)} edges, {len(comps)} component(s)"]
    for hw in G.highest_weights():
        wt = G.weight(hw)
        lines.append(f"  highest weight {wt}: {G.vertices[hw].word}")
    lines.append(f"generating function: {G.generating_function()}")
    _write_out(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_genfun(args) -> int:
    q = generating_function(_shape(args), args.n)
    _emit(args, q.to_doc(), str(q))
    return 0


def cmd_lrcoef(args) -> int:
    coef = lr_coefficients(_parts(args.outer), _parts(args.inner), args.n)
    doc = {",".join(map(str, nu)): c for nu, c in sorted(coef.items())}
    print(json.dumps(doc))
    return 0


def _mutate(G: AbstractGraph, k: int,
            rng: random.Random) -> Tuple[List[str], AbstractGraph]:
    log: List[str] = []
    for _ in range(k):
        for _attempt in range(64):
            src, dst, i, primed = rng.choice(G.edges)
            if rng.random() < 0.5:
                G = without_edge(G, src, dst, i, primed)
                log.append(f"deleted {G.name(src)} -> {G.name(dst)} "
                           f"[{i}{chr(39) if primed else ''}]")
                break
            others = [v for v in G.vertices if v not in (src, dst)]
            if not others:
                continue
            new = rng.choice(others)
            try:
                G = with_retargeted_edge(G, src, dst, i, primed, new)
            except SchemaError:
                continue
            log.append(f"retargeted {G.name(src)} -> {G.name(new)} "
                       f"[{i}{chr(39) if primed else ''}]")
            break
        else:
            raise SchemaError("could not find a mutable edge")
    return log, G


def cmd_verify(args) -> int:
    with open(args.input) as fh:
        G = load_graph(json.load(fh))
    notes = []
    if args.mutate:
        rng = random.Random(args.seed if args.seed is not None else 0)
        log, G = _mutate(G, args.mutate, rng)
        notes.extend(log)
    report = check_axioms(G, pinned=not args.no_pinned)
    certs = []
    if not args.no_certify:
        for comp in G.components():
            certs.append(certify_component(G, comp))
    ok = report.ok and all(c.ok for c in certs)
    doc = {
        "ok": ok,
        "mutations": notes,
        "violations": report.violations,
        "checked": report.checked,
        "components": [
            {"ok": c.ok, "shape": list(c.shape) if c.shape else None,
             "problems": c.problems} for c in certs],
    }
    human_lines = notes + [report.summary()]
    for k, c in enumerate(certs):
        if c.ok:
            human_lines.append(f"component {k}: certified as shape "
                               f"{','.join(map(str, c.shape))}")
        else:
            human_lines.append(f"component {k}: NOT certified: "
                               f"{'; '.join(c.problems)}")
    _emit(args, doc, "\n".join(human_lines))
    return 0 if ok else 1


def cmd_selftest(args) -> int:
    from .selftest import run
    results = run(full=args.full, seed=args.seed or 0)
    for r in results:
        print(r.line())
    ok = all(r.ok for r in results)
    print(f"backend: {backend.backend_name()}  ->  "
          f"{'all checks passed' if ok else 'FAILURES'}")
    return 0 if ok else 1


# -- parser -------------------------------------------------------------------

def _add_json(p):
    p.add_argument("--json", action="store_true",
                   help="machine-readable output")


def _add_shape(p, required=True):
    p.add_argument("--shape", required=required,
                   help="outer shape, comma-separated strict partition")
    p.add_argument("--inner", default="", help="inner shape (default empty)")
    p.add_argument("--n", type=int, required=True,
                   help="number of letter classes")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="shifted-crystal",
        description="Coplactic operators, jeu de taquin, and crystal graphs "
                    "for shifted semistandard tableaux.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("walk", help="lattice walk of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--svg", nargs="?", const="-", default=None,
                   metavar="FILE", help="emit an SVG picture ('-' = stdout)")
    _add_json(p)
    p.set_defaults(fn=cmd_walk)

    p = sub.add_parser("ballot", help="test ballotness (exit 1 if not)")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    _add_json(p)
    p.set_defaults(fn=cmd_ballot)

    p = sub.add_parser("op", help="apply a raising/lowering operator")
    p.add_argument("--kind", required=True, help="E, F, E' or F'")
    p.add_argument("--index", type=int, default=1)
    p.add_argument("--word")
    p.add_argument("--tableau", metavar="FILE", help="tableau JSON document")
    _add_json(p)
    p.set_defaults(fn=cmd_op)

    p = sub.add_parser("rectify", help="jeu de taquin rectification")
    p.add_argument("--tableau", metavar="FILE")
    p.add_argument("--word", help="rectify a one-cell-per-row realization")
    p.add_argument("--seed", type=int, help="randomize the corner order")
    _add_json(p)
    p.set_defaults(fn=cmd_rectify)

    p = sub.add_parser("lr-check",
                       help="Littlewood-Richardson test (exit 1 if not)")
    p.add_argument("--tableau", metavar="FILE")
    p.add_argument("--word")
    _add_json(p)
    p.set_defaults(fn=cmd_lr_check)

    p = sub.add_parser("enumerate", help="list tableaux of a shape")
    _add_shape(p)
    p.add_argument("--limit", type=int, help="print at most this many")
    _add_json(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("crystal", help="build the crystal graph")
    _add_shape(p)
    p.add_argument("--format", choices=("summary", "json", "dot"),
                   default="summary")
    p.add_argument("--output", "-o", metavar="FILE", help="default stdout")
    p.add_argument("--no-stats", action="store_true",
                   help="omit string statistics from JSON")
    _add_json(p)
    p.set_defaults(fn=cmd_crystal)

    p = sub.add_parser("genfun", help="weight generating function")
    _add_shape(p)
    _add_json(p)
    p.set_defaults(fn=cmd_genfun)

    p = sub.add_parser("lrcoef", help="structure coefficients of a skew shape")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", default="")
    p.add_argument("--n", type=int, required=True)
    _add_json(p)
    p.set_defaults(fn=cmd_lrcoef)

    p = sub.add_parser("verify",
                       help="check a graph document against the local axioms")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--mutate", type=int, default=0, metavar="K",
                   help="damage K random edges first (for demonstrations)")
    p.add_argument("--seed", type=int)
    p.add_argument("--no-certify", action="store_true",
                   help="skip matching components against generated crystals")
    p.add_argument("--no-pinned", action="store_true",
                   help="check only the stated local rules, not the "
                        "empirically pinned cells")
    _add_json(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("selftest", help="run the built-in oracle suites")
    p.add_argument("--full", action="store_true",
                   help="widen the sweeps from seconds to minutes")
    p.add_argument("--quick", action="store_true",
                   help="default tier; kept for symmetry")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (SchemaError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
