"""Local-structure verification for labeled graphs.

A finite directed graph with weighted vertices and edges labeled f_i / f_i'
either is or is not isomorphic to a disjoint union of crystals of shifted
semistandard tableaux.  This module answers that question two ways:

* ``check_axioms`` tests local rules only: string shapes (A1), commutation of
  distant operators (A2), distance bookkeeping across neighboring indices
  (A3), and the square/octagon relations for adjacent pairs (A4), plus their
  duals (A5) and the Kashiwara conditions (K1/K2).  Local rules never look at
  a generated model.

* ``certify_component`` is the authoritative check for a single connected
  component: it locates the unique source, reads off a strict partition, and
  matches the component edge-for-edge against the generated crystal of that
  shape by label-following.  It does not depend on any of the local rules.

Most of the local rules are checked exactly as stated.  A few default
behaviors are empirically pinned: they were fixed by exhaustively tabulating
generated crystals (all skew shapes with at most 8 boxes and at most 7 cells,
three letter classes) and are marked "empirically pinned" below.  Passing
``pinned=False`` to ``check_axioms`` disables those extra assertions.
"""

from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .errors import IntegrityError, SchemaError

Vertex = Hashable

STAT_KEYS = ("eps", "phi", "eps_prime", "phi_prime", "eps_hat", "phi_hat")


class AbstractGraph:
    """A labeled graph: vertices with weights, edges labeled (index, primed).

    Out- and in-degree are at most one per label; violating that is a schema
    error, not an axiom violation, because every partial-bijection structure
    we could certify satisfies it.
    """

    def __init__(self, n: int,
                 weights: Dict[Vertex, Sequence[int]],
                 edges: Iterable[Tuple[Vertex, Vertex, int, bool]],
                 names: Optional[Dict[Vertex, str]] = None):
        if n < 1:
            raise SchemaError(f"need at least one letter class, got n={n}")
        self.n = n
        self.vertices: List[Vertex] = list(weights)
        self._order = {v: k for k, v in enumerate(self.vertices)}
        self.weights: Dict[Vertex, Tuple[int, ...]] = {}
        for v, wt in weights.items():
            wt = tuple(wt)
            if len(wt) != n or any(k < 0 for k in wt):
                raise SchemaError(f"vertex {v!r}: weight {wt} is not a "
                                  f"length-{n} tuple of nonnegative ints")
            self.weights[v] = wt
        self.names = {v: str(v) for v in self.vertices}
        if names:
            self.names.update({v: str(s) for v, s in names.items()})
        self.edges: List[Tuple[Vertex, Vertex, int, bool]] = []
        self.out: Dict[Tuple[Vertex, int, bool], Vertex] = {}
        self.inn: Dict[Tuple[Vertex, int, bool], Vertex] = {}
        for src, dst, i, primed in edges:
            primed = bool(primed)
            if src not in self.weights or dst not in self.weights:
                raise SchemaError(f"edge {src!r}->{dst!r} mentions an unknown vertex")
            if not 1 <= i <= n - 1:
                raise SchemaError(f"edge index {i} out of range 1..{n - 1}")
            if src == dst:
                raise SchemaError(f"self-loop at {src!r}")
            key = (src, i, primed)
            if key in self.out:
                raise SchemaError(f"two outgoing edges at {src!r} with label "
                                  f"{_label(i, primed)}")
            ikey = (dst, i, primed)
            if ikey in self.inn:
                raise SchemaError(f"two incoming edges at {dst!r} with label "
                                  f"{_label(i, primed)}")
            self.out[key] = dst
            self.inn[ikey] = src
            self.edges.append((src, dst, i, primed))

    # -- small accessors -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def weight(self, v: Vertex) -> Tuple[int, ...]:
        return self.weights[v]

    def name(self, v: Vertex) -> str:
        return self.names[v]

    def out_edge(self, v: Optional[Vertex], i: int,
                 primed: bool = False) -> Optional[Vertex]:
        """Target of v's outgoing (i, primed) edge; None-propagating."""
        if v is None:
            return None
        return self.out.get((v, i, primed))

    def in_edge(self, v: Optional[Vertex], i: int,
                primed: bool = False) -> Optional[Vertex]:
        if v is None:
            return None
        return self.inn.get((v, i, primed))

    def components(self, index: Optional[int] = None) -> List[List[Vertex]]:
        """Undirected components, restricted to index-i edges if given."""
        adj: Dict[Vertex, List[Vertex]] = {v: [] for v in self.vertices}
        for src, dst, i, _ in self.edges:
            if index is None or i == index:
                adj[src].append(dst)
                adj[dst].append(src)
        seen = set()
        comps = []
        for v0 in self.vertices:
            if v0 in seen:
                continue
            comp, todo = [v0], [v0]
            seen.add(v0)
            while todo:
                for u in adj[todo.pop()]:
                    if u not in seen:
                        seen.add(u)
                        comp.append(u)
                        todo.append(u)
            comps.append(sorted(comp, key=self._order.get))
        return comps

    def dual(self) -> "AbstractGraph":
        """Reverse all edges, flip index i to n-i, reverse weight tuples.

        Raising and lowering trade places, so eps and phi statistics swap.
        """
        return AbstractGraph(
            self.n,
            {v: tuple(reversed(self.weights[v])) for v in self.vertices},
            [(dst, src, self.n - i, primed) for src, dst, i, primed in self.edges],
            names=self.names)

    # -- construction --------------------------------------------------------

    @classmethod
    def from_doc(cls, doc: dict) -> "AbstractGraph":
        try:
            n = int(doc["n"])
            weights = {}
            names = {}
            for rec in doc["vertices"]:
                v = rec["id"]
                weights[v] = tuple(int(k) for k in rec["wt"])
                if "word" in rec:
                    names[v] = str(rec["word"])
            edges = [(rec["src"], rec["dst"], int(rec["i"]), bool(rec["primed"]))
                     for rec in doc["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"malformed graph document: {exc}") from exc
        return cls(n, weights, edges, names=names)


def load_graph(doc: dict) -> AbstractGraph:
    return AbstractGraph.from_doc(doc)


def without_edge(G: AbstractGraph, src: Vertex, dst: Vertex, index: int,
                 primed: bool) -> AbstractGraph:
    """Copy of G with one edge deleted.  SchemaError if absent."""
    target = (src, dst, index, bool(primed))
    kept = [e for e in G.edges if e != target]
    if len(kept) == len(G.edges):
        raise SchemaError(f"no edge {target} to remove")
    return AbstractGraph(G.n, dict(G.weights), kept, names=G.names)


def with_retargeted_edge(G: AbstractGraph, src: Vertex, dst: Vertex, index: int,
                         primed: bool, new_dst: Vertex) -> AbstractGraph:
    """Copy of G with one edge redirected to new_dst."""
    target = (src, dst, index, bool(primed))
    if target not in G.edges:
        raise SchemaError(f"no edge {target} to retarget")
    moved = [(src, new_dst, index, bool(primed)) if e == target else e
             for e in G.edges]
    return AbstractGraph(G.n, dict(G.weights), moved, names=G.names)


def _label(i: int, primed: bool) -> str:
    return f"{i}'" if primed else str(i)


# -- doubled strings ---------------------------------------------------------

@dataclass(frozen=True)
class DoubledString:
    """One {f_i, f_i'} component in normal form.

    Second kind: a single chain (in ``upper``) whose consecutive vertices are
    joined by both an unprimed and a primed i-edge; ``lower`` is empty.  A
    singleton counts as second kind.  First kind: two equal-length unprimed
    chains with a primed rung from each upper vertex to the lower vertex at
    the same position; the smallest one is a single rung.
    """
    index: int
    kind: str
    upper: Tuple[Vertex, ...]
    lower: Tuple[Vertex, ...] = ()

    def vertices(self) -> Tuple[Vertex, ...]:
        return self.upper + self.lower


def doubled_strings(G: AbstractGraph,
                    i: int) -> Tuple[List[DoubledString], List[str]]:
    """Classify every index-i component; report misfits instead of raising.

    Returns (strings, violations).  Vertices of components that fail to
    classify appear in no string.
    """
    strings: List[DoubledString] = []
    bad: List[str] = []
    for comp in G.components(i):
        unpr = {v: G.out[(v, i, False)] for v in comp if (v, i, False) in G.out}
        prim = {v: G.out[(v, i, True)] for v in comp if (v, i, True) in G.out}
        unpr_in = {t for t in unpr.values()}
        prim_in = {t for t in prim.values()}
        where = f"i={i} component of {G.name(comp[0])}"
        if set(prim.items()) <= set(unpr.items()):
            # every primed edge doubles an unprimed one: second kind
            heads = [v for v in comp if v not in unpr_in]
            if len(heads) != 1:
                bad.append(f"A1: {where}: {len(heads)} chain heads")
                continue
            chain = [heads[0]]
            while chain[-1] in unpr:
                chain.append(unpr[chain[-1]])
            if len(chain) != len(comp):
                bad.append(f"A1: {where}: unprimed edges do not form one chain")
                continue
            if len(chain) > 1 and set(prim) != set(chain[:-1]):
                bad.append(f"A1: {where}: doubled string is missing a primed "
                           f"copy of an unprimed edge")
                continue
            strings.append(DoubledString(i, "second", tuple(chain)))
            continue
        uppers = [v for v in comp if v not in prim_in]
        lowers = [v for v in comp if v in prim_in]
        if any(unpr.get(u) in prim_in for u in uppers) or \
                any(unpr.get(l) in set(uppers) for l in lowers):
            bad.append(f"A1: {where}: unprimed edge crosses between strands")
            continue
        uheads = [v for v in uppers if v not in unpr_in]
        lheads = [v for v in lowers if v not in unpr_in]
        if len(uheads) != 1 or len(lheads) != 1:
            bad.append(f"A1: {where}: strands do not have unique heads")
            continue
        uch = [uheads[0]]
        while uch[-1] in unpr:
            uch.append(unpr[uch[-1]])
        lch = [lheads[0]]
        while lch[-1] in unpr:
            lch.append(unpr[lch[-1]])
        if len(uch) != len(lch) or len(uch) + len(lch) != len(comp):
            bad.append(f"A1: {where}: strands have lengths "
                       f"{len(uch)} and {len(lch)} over {len(comp)} vertices")
            continue
        if prim != {uch[j]: lch[j] for j in range(len(uch))}:
            bad.append(f"A1: {where}: primed rungs do not join corresponding "
                       f"strand positions")
            continue
        strings.append(DoubledString(i, "first", tuple(uch), tuple(lch)))
    return strings, bad


def definition_stats(G: AbstractGraph, i: int) -> Dict[Vertex, Dict[str, int]]:
    """The six index-i string statistics for every vertex.

    eps/phi are the distances to the top/bottom of the vertex's doubled
    string.  The primed/unprimed split of those distances follows the string
    normal form.  On strings of the second kind both edge families run the
    whole way, and the split counts the path through the unprimed family:
    eps' = phi' = 0 (empirically pinned; the convention is forced on strings
    of the first kind and this is its unique extension under which the
    adjacent-pair relations of check_axioms hold iff their stated conditions
    do, over all generated crystals with at most 8 boxes).
    """
    strings, bad = doubled_strings(G, i)
    if bad:
        raise IntegrityError(bad[0])
    out: Dict[Vertex, Dict[str, int]] = {}
    for s in strings:
        out.update(_string_stats(s))
    return out


def _string_stats(s: DoubledString) -> Dict[Vertex, Dict[str, int]]:
    res = {}
    if s.kind == "second":
        m = len(s.upper) - 1
        for j, v in enumerate(s.upper):
            res[v] = dict(zip(STAT_KEYS, (j, m - j, 0, 0, j, m - j)))
    else:
        p = len(s.upper) - 1
        for j, v in enumerate(s.upper):
            res[v] = dict(zip(STAT_KEYS, (j, p - j + 1, 0, 1, j, p - j)))
        for j, v in enumerate(s.lower):
            res[v] = dict(zip(STAT_KEYS, (j + 1, p - j, 1, 0, j, p - j)))
    return res


# -- the axiom checker -------------------------------------------------------

@dataclass
class AxiomReport:
    violations: List[str] = field(default_factory=list)
    checked: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, tag: str, k: int = 1) -> None:
        self.checked[tag] = self.checked.get(tag, 0) + k

    def summary(self) -> str:
        lines = [f"{'PASS' if self.ok else 'FAIL'}: "
                 f"{len(self.violations)} violation(s)"]
        for tag in sorted(self.checked):
            lines.append(f"  {tag}: {self.checked[tag]} configuration(s)")
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


def check_axioms(G: AbstractGraph, pinned: bool = True) -> AxiomReport:
    """Run every local rule; collect violations instead of raising.

    With ``pinned=True`` (default) the empirically pinned cell rules of the
    adjacent-pair dispatch are enforced as well; see ``_check_adjacent_pair``.
    """
    report = AxiomReport()
    _check_weights_along_edges(G, report)
    stats, tops, bottoms = _stats_with_violations(G, report)
    _check_string_weight_ends(G, report, stats, tops, bottoms)
    _check_kashiwara(G, report, stats)
    _check_distant_commutation(G, report)
    _check_neighbor_distance(G, report, stats)
    for a in range(1, G.n - 1):
        _check_adjacent_pair(G, report, stats, a, pinned, tag="")
    if G.n >= 3:
        D = G.dual()
        dstats, dtops, dbottoms = _stats_with_violations(D, AxiomReport())
        _check_neighbor_distance(D, report, dstats, tag="A5/")
        for a in range(1, G.n - 1):
            _check_adjacent_pair(D, report, dstats, a, pinned, tag="A5/")
    return report


def _stats_with_violations(G, report):
    """Per-index stats, plus the second-kind chain endpoints for A1."""
    stats: Dict[Tuple[Vertex, int], Optional[Dict[str, int]]] = {}
    tops: Dict[int, set] = {}
    bottoms: Dict[int, set] = {}
    for i in range(1, G.n):
        strings, bad = doubled_strings(G, i)
        report.violations.extend(bad)
        report.count(f"A1[i={i}] strings", len(strings))
        tops[i] = {s.upper[0] for s in strings if s.kind == "second"}
        bottoms[i] = {s.upper[-1] for s in strings if s.kind == "second"}
        per = {}
        for s in strings:
            per.update(_string_stats(s))
        for v in G.vertices:
            stats[(v, i)] = per.get(v)
    return stats, tops, bottoms


def _check_weights_along_edges(G, report):
    for src, dst, i, primed in G.edges:
        ws, wd = G.weight(src), G.weight(dst)
        want = list(ws)
        want[i - 1] -= 1
        want[i] += 1
        if list(wd) != want:
            report.violations.append(
                f"K1: edge {G.name(src)} -> {G.name(dst)} "
                f"[{_label(i, primed)}]: weight {ws} -> {wd}, expected "
                f"{tuple(want)}")
        report.count("K1 edges")


def _check_string_weight_ends(G, report, stats, tops, bottoms):
    # a vertex sits at the top (bottom) of a second-kind string exactly
    # when its weight in class i+1 (class i) vanishes
    for v in G.vertices:
        wt = G.weight(v)
        for i in range(1, G.n):
            if stats[(v, i)] is None:
                continue
            if (wt[i] == 0) != (v in tops[i]):
                report.violations.append(
                    f"A1: {G.name(v)}: wt_{i + 1}={wt[i]} but vertex is "
                    f"{'' if v in tops[i] else 'not '}the top of a "
                    f"second-kind {i}-string")
            if (wt[i - 1] == 0) != (v in bottoms[i]):
                report.violations.append(
                    f"A1: {G.name(v)}: wt_{i}={wt[i - 1]} but vertex is "
                    f"{'' if v in bottoms[i] else 'not '}the bottom of a "
                    f"second-kind {i}-string")
            report.count("A1 weight ends")


def _check_kashiwara(G, report, stats):
    # K1: eps/phi shift by one along every edge of either family
    for src, dst, i, primed in G.edges:
        a, b = stats[(src, i)], stats[(dst, i)]
        if a is None or b is None:
            continue
        if b["eps"] != a["eps"] + 1 or b["phi"] != a["phi"] - 1:
            report.violations.append(
                f"K1: edge {G.name(src)} -> {G.name(dst)} "
                f"[{_label(i, primed)}]: (eps, phi) {a['eps'], a['phi']} -> "
                f"{b['eps'], b['phi']}")
        report.count("K1 stat shifts")
    # K2: phi - eps equals the weight difference
    for v in G.vertices:
        wt = G.weight(v)
        for i in range(1, G.n):
            s = stats[(v, i)]
            if s is None:
                continue
            if s["phi"] - s["eps"] != wt[i - 1] - wt[i]:
                report.violations.append(
                    f"K2: {G.name(v)} i={i}: phi-eps="
                    f"{s['phi'] - s['eps']} but wt_{i}-wt_{i + 1}="
                    f"{wt[i - 1] - wt[i]}")
            report.count("K2 vertices")


def _check_distant_commutation(G, report):
    # |i - j| >= 2: all four operator squares commute, in both directions
    labels = [(i, p) for i in range(1, G.n) for p in (False, True)]
    for v in G.vertices:
        for ai, (i, p) in enumerate(labels):
            for (j, q) in labels[ai + 1:]:
                if abs(i - j) < 2:
                    continue
                x = G.out.get((v, i, p))
                y = G.out.get((v, j, q))
                if x is not None and y is not None:
                    t, u = G.out_edge(x, j, q), G.out_edge(y, i, p)
                    if t is None or t != u:
                        report.violations.append(
                            f"A2: {G.name(v)}: f{_label(i, p)} and "
                            f"f{_label(j, q)} do not commute")
                    report.count("A2 squares")
                x = G.inn.get((v, i, p))
                y = G.inn.get((v, j, q))
                if x is not None and y is not None:
                    t, u = G.in_edge(x, j, q), G.in_edge(y, i, p)
                    if t is None or t != u:
                        report.violations.append(
                            f"A2: {G.name(v)}: e{_label(i, p)} and "
                            f"e{_label(j, q)} do not commute")
                    report.count("A2 squares")


def _check_neighbor_distance(G, report, stats, tag=""):
    # A3: an edge labeled i+-1 (primed or not) moves (eps_i, phi_i) by
    # (1, 0) or (0, -1)
    for src, dst, j, primed in G.edges:
        for i in range(1, G.n):
            if abs(i - j) != 1:
                continue
            a, b = stats[(src, i)], stats[(dst, i)]
            if a is None or b is None:
                continue
            d = (a["eps"] - b["eps"], a["phi"] - b["phi"])
            if d not in ((1, 0), (0, -1)):
                report.violations.append(
                    f"{tag}A3: edge {G.name(src)} -> {G.name(dst)} "
                    f"[{_label(j, primed)}] moves (eps_{i}, phi_{i}) by {d}")
            report.count(f"{tag}A3 edges")


def _check_adjacent_pair(G, report, stats, a, pinned, tag):
    """Square and octagon relations for the index pair (a, a+1).

    The pair axioms with at least one primed operator:

      (a) f_a' and f_b' always commute.
      (b) f_a' and f_b commute whenever f_b(w) differs from f_b'(w).
      (c) f_a and f_b' commute iff eps^_a(w) > 0.
      (d) with x' = f_a'(w), y' = f_b'(w):  f_b(x') = f_a(y') with
          f_a'(y') different from f_a(y') holds iff eps_b and eps_a are
          flat along the two primed edges, phi_b(w) = 1 and phi^_b(w) = 0.

    The pair axiom for {f_a, f_b} applies when f_a'(w) is undefined and both
    unprimed images exist.  Writing x = f_a(w), y = f_b(w) and
    D = (eps_b(w) - eps_b(x), eps_a(w) - eps_a(y)), the stated rule is that

        f_a f_b f_b f_a (w) = f_b f_a f_a f_b (w) != None, with
        f_b f_a (w) != f_a f_b (w),

    holds iff D = (0, 0) and phi^_a(y) >= 2.  The other cells of the
    dispatch are empirically pinned (exact over all generated crystals with
    at most 8 boxes, n = 3):

      D in {(0,1), (1,0)}  iff  f_a f_b (w) = f_b f_a (w) != None;
      D = (1, 1)           iff  f_a' f_b (w) = f_b' f_a (w) != None;
      D = (0, 0) with phi^_a(y) <= 1 implies eps^_a(w) != eps^_a(y),
          f_a' f_b (w) = f_a f_b' (w) != None, and
          f_a' f_b f_b f_a (w) = f_b f_a f_a f_b' (w) != None.
    """
    b = a + 1

    def F(v, i, primed=False):
        return G.out_edge(v, i, primed)

    def st(v, i, key):
        s = stats[(v, i)]
        return None if s is None else s[key]

    for w in G.vertices:
        fa, fb = F(w, a), F(w, b)
        fap, fbp = F(w, a, True), F(w, b, True)

        if fap is not None and fbp is not None:
            t, u = F(fbp, a, True), F(fap, b, True)
            if t is None or t != u:
                report.violations.append(
                    f"{tag}A4.1a: {G.name(w)}: f{a}'f{b}' != f{b}'f{a}'")
            report.count(f"{tag}A4.1a")

        if fap is not None and fb is not None and fb != fbp:
            t, u = F(fb, a, True), F(fap, b)
            if t is None or t != u:
                report.violations.append(
                    f"{tag}A4.1b: {G.name(w)}: f{a}'f{b} != f{b}f{a}'")
            report.count(f"{tag}A4.1b")

        if fa is not None and fbp is not None:
            gate = st(w, a, "eps_hat")
            if gate is not None:
                t, u = F(fbp, a), F(fa, b, True)
                square = t is not None and t == u
                if square != (gate > 0):
                    report.violations.append(
                        f"{tag}A4.1c: {G.name(w)}: f{a}f{b}' = f{b}'f{a} is "
                        f"{square} but eps^_{a} = {gate}")
                report.count(f"{tag}A4.1c")

        if fap is not None and fbp is not None:
            needed = (st(w, b, "eps"), st(fap, b, "eps"), st(w, a, "eps"),
                      st(fbp, a, "eps"), st(w, b, "phi"), st(w, b, "phi_hat"))
            if None not in needed:
                gate = (needed[0] == needed[1] and needed[2] == needed[3]
                        and needed[4] == 1 and needed[5] == 0)
                t, u = F(fap, b), F(fbp, a)
                half = (t is not None and t == u and F(fbp, a, True) != u)
                if half != gate:
                    report.violations.append(
                        f"{tag}A4.1d: {G.name(w)}: half-solid square is "
                        f"{half} but its condition is {gate}")
                report.count(f"{tag}A4.1d")

        if fap is None and fa is not None and fb is not None:
            x, y = fa, fb
            needed = (st(w, b, "eps"), st(x, b, "eps"),
                      st(w, a, "eps"), st(y, a, "eps"))
            if None in needed:
                continue
            delta = (needed[0] - needed[1], needed[2] - needed[3])
            t, u = F(x, b), F(y, a)
            square = t is not None and t == u
            p_sq = F(y, a, True)
            psquare = p_sq is not None and p_sq == F(x, b, True)
            if delta == (0, 0):
                phihat = st(y, a, "phi_hat")
                if phihat is None:
                    continue
                if phihat >= 2:
                    l = F(F(F(x, b), b), a)
                    octagon = l is not None and l == F(F(F(y, a), a), b)
                    if not (octagon and t != u):
                        report.violations.append(
                            f"{tag}A4.2: {G.name(w)}: expected the "
                            f"non-commuting octagon (phi^_{a} = {phihat})")
                    report.count(f"{tag}A4.2 octagons")
                elif pinned:
                    # empirically pinned cell
                    ok = (st(w, a, "eps_hat") != st(y, a, "eps_hat")
                          and p_sq is not None and p_sq == F(F(w, b, True), a))
                    l = F(F(F(x, b), b), a, True)
                    ok = ok and l is not None and \
                        l == F(F(F(F(w, b, True), a), a), b)
                    if not ok:
                        report.violations.append(
                            f"{tag}A4.2: {G.name(w)}: expected the primed "
                            f"square and octagon (phi^_{a} = {phihat})")
                    report.count(f"{tag}A4.2 low-phi cells")
            elif delta in ((0, 1), (1, 0)):
                if pinned and not square:
                    report.violations.append(
                        f"{tag}A4.2: {G.name(w)}: expected the commuting "
                        f"square (distance drop {delta})")
                report.count(f"{tag}A4.2 squares")
            elif delta == (1, 1):
                if pinned and not psquare:
                    report.violations.append(
                        f"{tag}A4.2: {G.name(w)}: expected the primed "
                        f"commuting square (distance drop {delta})")
                report.count(f"{tag}A4.2 primed squares")
            else:
                report.violations.append(
                    f"{tag}A4.2: {G.name(w)}: impossible distance drop {delta}")
            if pinned:
                # converse directions, exact over the generated corpus
                if square and delta not in ((0, 1), (1, 0)):
                    report.violations.append(
                        f"{tag}A4.2: {G.name(w)}: commuting square with "
                        f"distance drop {delta}")
                if psquare and delta != (1, 1):
                    report.violations.append(
                        f"{tag}A4.2: {G.name(w)}: primed commuting square "
                        f"with distance drop {delta}")


# -- certification -----------------------------------------------------------

@dataclass
class Certification:
    ok: bool
    shape: Optional[Tuple[int, ...]]
    problems: List[str] = field(default_factory=list)
    matching: Optional[Dict[Vertex, str]] = None

    def __bool__(self) -> bool:
        return self.ok


def certify_component(G: AbstractGraph,
                      component: Optional[Sequence[Vertex]] = None) -> Certification:
    """Match one component of G against the generated crystal it claims to be.

    The component must have a unique source whose weight is a strict
    partition nu; the component is then matched vertex-for-vertex and
    edge-for-edge against the generated crystal of shape nu by following
    labels outward from the source.  This is the authoritative test: it
    shares no logic with check_axioms.
    """
    from .crystal import build
    from .tableaux import ShiftedShape

    if component is None:
        comps = G.components()
        if len(comps) != 1:
            return Certification(False, None, [
                f"graph has {len(comps)} components; pass one explicitly"])
        comp = comps[0]
    else:
        comp = list(component)
    cset = set(comp)
    for src, dst, i, primed in G.edges:
        if (src in cset) != (dst in cset):
            return Certification(False, None, [
                f"edge {G.name(src)} -> {G.name(dst)} crosses the "
                f"component boundary"])

    sources = [v for v in comp
               if not any((v, i, p) in G.inn
                          for i in range(1, G.n) for p in (False, True))]
    if len(sources) != 1:
        return Certification(False, None, [
            f"component has {len(sources)} sources: "
            f"{[G.name(v) for v in sources]}"])
    hw = sources[0]
    wt = G.weight(hw)
    nu = tuple(k for k in wt if k)
    if tuple(wt[:len(nu)]) != nu or any(x <= y for x, y in zip(nu, nu[1:])):
        return Certification(False, None, [
            f"source weight {wt} is not a strict partition"])

    ref = build(ShiftedShape(nu, ()), G.n)
    ref_hw = ref.highest_weights()[0]
    ref_out = {(e.src, e.index, e.primed): e.dst for e in ref.edges}
    match: Dict[Vertex, int] = {hw: ref_hw}
    todo = [hw]
    problems: List[str] = []
    while todo and not problems:
        v = todo.pop()
        r = match[v]
        if G.weight(v) != ref.weight(r):
            problems.append(f"{G.name(v)}: weight {G.weight(v)} should be "
                            f"{ref.weight(r)}")
            break
        for i in range(1, G.n):
            for primed in (False, True):
                gv = G.out.get((v, i, primed))
                rv = ref_out.get((r, i, primed))
                if (gv is None) != (rv is None):
                    problems.append(
                        f"{G.name(v)}: f{_label(i, primed)} should be "
                        f"{'defined' if rv is not None else 'undefined'}")
                    break
                if gv is None:
                    continue
                if gv in match:
                    if match[gv] != rv:
                        problems.append(
                            f"{G.name(v)}: f{_label(i, primed)} lands on "
                            f"{G.name(gv)}, inconsistent with an earlier match")
                        break
                else:
                    match[gv] = rv
                    todo.append(gv)
            else:
                continue
            break
    if problems:
        return Certification(False, nu, problems)
    if len(match) != len(comp):
        return Certification(False, nu, [
            f"matched {len(match)} of {len(comp)} vertices"])
    names = {v: str(ref.vertices[r].word) for v, r in match.items()}
    return Certification(True, nu, [], names)
