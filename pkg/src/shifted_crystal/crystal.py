"""Crystal graphs on shifted semistandard tableaux.

Vertices are the canonical tableaux of a shape with entries of class <= n;
edges are the defined applications of F_i and F'_i (raising operators are the
reversed edges).  Components, highest weights, walk statistics, generating
functions and structure coefficients all live here.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import backend
from .errors import IntegrityError
from .operators import OperatorKind, apply
from .qpoly import QPolynomial
from .tableaux import ShiftedShape, Tableau, enumerate_tableaux
from .words import Word

PALETTE = ("red", "blue", "forestgreen", "darkorange", "purple", "brown")


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    index: int
    primed: bool


class CrystalGraph:
    def __init__(self, shape: ShiftedShape, n: int,
                 vertices: List[Tableau], edges: List[Edge]):
        self.shape = shape
        self.n = n
        self.vertices = vertices
        self.edges = edges
        self.out: Dict[Tuple[int, int, bool], int] = {}
        self.inn: Dict[Tuple[int, int, bool], int] = {}
        for ed in edges:
            self.out[(ed.src, ed.index, ed.primed)] = ed.dst
            self.inn[(ed.dst, ed.index, ed.primed)] = ed.src
        self._stats: Optional[List[List[dict]]] = None

    def weight(self, v: int) -> Tuple[int, ...]:
        return self.vertices[v].weight(self.n)

    def endpoint(self, v: int, i: int) -> Tuple[int, int]:
        """(phi_i, eps_i): endpoint of vertex v's index-i lattice walk."""
        sub, _ = backend.restrict(self.vertices[v].codes, i)
        return backend.walk_endpoint(sub)

    def components(self) -> List[List[int]]:
        seen = [False] * len(self.vertices)
        comps = []
        adj: Dict[int, List[int]] = {v: [] for v in range(len(self.vertices))}
        for ed in self.edges:
            adj[ed.src].append(ed.dst)
            adj[ed.dst].append(ed.src)
        for v0 in range(len(self.vertices)):
            if seen[v0]:
                continue
            comp, todo = [], [v0]
            seen[v0] = True
            while todo:
                v = todo.pop()
                comp.append(v)
                for u in adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        todo.append(u)
            comps.append(sorted(comp))
        return comps

    def sources(self) -> List[int]:
        has_in = {ed.dst for ed in self.edges}
        return [v for v in range(len(self.vertices)) if v not in has_in]

    def highest_weights(self) -> List[int]:
        """The unique source vertex of each component."""
        srcs = set(self.sources())
        out = []
        for comp in self.components():
            hw = [v for v in comp if v in srcs]
            if len(hw) != 1:
                raise IntegrityError(
                    f"component {comp} has {len(hw)} highest-weight vertices")
            out.append(hw[0])
        return out

    def generating_function(self, comp: Optional[Sequence[int]] = None) -> QPolynomial:
        vs = range(len(self.vertices)) if comp is None else comp
        out: Dict[Tuple[int, ...], int] = {}
        for v in vs:
            wt = self.weight(v)
            out[wt] = out.get(wt, 0) + (1 << sum(1 for k in wt if k))
        return QPolynomial(out, self.n)

    # -- statistics ---------------------------------------------------------

    def statistics(self) -> List[List[dict]]:
        """Per vertex, per index i: the six string statistics.

        eps/phi are walk endpoints; the primed/unprimed splits come from the
        doubled-string decomposition of the realized graph, the same code the
        axiom checker runs on abstract graphs.
        """
        if self._stats is None:
            from .axioms import definition_stats
            by_index = {i: definition_stats(self.to_abstract(), i)
                        for i in range(1, self.n)}
            stats = []
            for v in range(len(self.vertices)):
                per_v = []
                for i in range(1, self.n):
                    d = dict(by_index[i][v])
                    phi, eps = self.endpoint(v, i)
                    if (d["eps"], d["phi"]) != (eps, phi):
                        raise IntegrityError(
                            f"string distance disagrees with walk endpoint "
                            f"at vertex {v}, i={i}: {d} vs {(phi, eps)}")
                    d["i"] = i
                    per_v.append(d)
                stats.append(per_v)
            self._stats = stats
        return self._stats

    # -- export -------------------------------------------------------------

    def to_abstract(self):
        from .axioms import AbstractGraph
        return AbstractGraph(
            n=self.n,
            weights={v: self.weight(v) for v in range(len(self.vertices))},
            edges=[(ed.src, ed.dst, ed.index, ed.primed) for ed in self.edges],
            names={v: str(self.vertices[v].word)
                   for v in range(len(self.vertices))})

    def to_doc(self, with_stats: bool = True) -> dict:
        doc = {
            "schema": 1,
            "shape": {"outer": list(self.shape.outer),
                      "inner": list(self.shape.inner)},
            "n": self.n,
            "vertices": [{"id": v, "word": str(t.word),
                          "wt": list(self.weight(v))}
                         for v, t in enumerate(self.vertices)],
            "edges": [{"src": ed.src, "dst": ed.dst, "i": ed.index,
                       "primed": ed.primed} for ed in self.edges],
        }
        if with_stats:
            doc["stats"] = [[{k: s[k] for k in
                              ("i", "eps", "phi", "eps_prime", "phi_prime",
                               "eps_hat", "phi_hat")}
                             for s in per_v] for per_v in self.statistics()]
        return doc

    def to_dot(self) -> str:
        lines = ["digraph crystal {",
                 "  rankdir=TB;",
                 '  node [shape=box, fontname="monospace"];']
        for v, t in enumerate(self.vertices):
            wt = ",".join(map(str, self.weight(v)))
            lines.append(f'  {v} [label="{t.word}\\n({wt})"];')
        for ed in self.edges:
            color = PALETTE[(ed.index - 1) % len(PALETTE)]
            style = "dashed" if ed.primed else "solid"
            label = f"{ed.index}'" if ed.primed else str(ed.index)
            lines.append(f'  {ed.src} -> {ed.dst} [color={color}, '
                         f'style={style}, label="{label}"];')
        by_wt: Dict[Tuple[int, ...], List[int]] = {}
        for v in range(len(self.vertices)):
            by_wt.setdefault(self.weight(v), []).append(v)
        for wt in sorted(by_wt, reverse=True):
            members = "; ".join(map(str, by_wt[wt]))
            lines.append(f"  {{ rank=same; {members}; }}")
        lines.append("}")
        return "\n".join(lines)

    # -- axiom bridge -------------------------------------------------------

    def check_kashiwara(self) -> List[str]:
        """K1/K2 for the primed and unprimed families, exactly.

        Partial inverses are checked by recomputing the raising operators,
        weights and walk endpoints must shift by the simple root along every
        edge, and phi - eps must equal the weight difference everywhere.
        """
        from .operators import apply_to_word
        bad = []
        nv = len(self.vertices)
        for v in range(nv):
            wt = self.weight(v)
            for i in range(1, self.n):
                phi, eps = self.endpoint(v, i)
                if phi - eps != wt[i - 1] - wt[i]:
                    bad.append(f"K2 at v{v} i={i}: phi-eps={phi - eps}, "
                               f"wt_i-wt_i+1={wt[i - 1] - wt[i]}")
                for primed in (False, True):
                    up = apply_to_word(self.vertices[v].word,
                                       OperatorKind(True, primed, i))
                    key = (v, i, primed)
                    if up is None:
                        if key in self.inn:
                            bad.append(f"K1 at v{v} i={i} primed={primed}: "
                                       f"raising undefined but edge exists")
                    else:
                        u = self.inn.get(key)
                        if u is None or self.vertices[u].codes != up.codes:
                            bad.append(f"K1 at v{v} i={i} primed={primed}: "
                                       f"raising gives {up}, edge gives "
                                       f"{None if u is None else self.vertices[u].word}")
        for ed in self.edges:
            wu, wv = self.weight(ed.src), self.weight(ed.dst)
            alpha = [0] * self.n
            alpha[ed.index - 1], alpha[ed.index] = 1, -1
            if [a - b for a, b in zip(wu, wv)] != alpha:
                bad.append(f"K1 weight shift broken on {ed}")
            pu, eu = self.endpoint(ed.src, ed.index)
            pv, ev = self.endpoint(ed.dst, ed.index)
            if (pv, ev) != (pu - 1, eu + 1):
                bad.append(f"K1 endpoint shift broken on {ed}: "
                           f"{(pu, eu)} -> {(pv, ev)}")
        return sorted(bad)


def build(shape: ShiftedShape, n: int) -> CrystalGraph:
    """Generate ShST(shape, n) and all four operator families' edges."""
    vertices = list(enumerate_tableaux(shape, n))
    index = {t.codes: v for v, t in enumerate(vertices)}
    edges = []
    for v, t in enumerate(vertices):
        for i in range(1, n):
            for primed in (False, True):
                r = apply(t, OperatorKind(False, primed, i))
                if r is None:
                    continue
                u = index.get(r.codes)
                if u is None:
                    raise IntegrityError(
                        f"operator left the tableau family: {t} -> {r}")
                edges.append(Edge(v, u, i, primed))
    return CrystalGraph(shape, n, vertices, edges)


def generating_function(shape: ShiftedShape, n: int) -> QPolynomial:
    """Sum of 2^(distinct classes) x^weight over canonical tableaux."""
    out: Dict[Tuple[int, ...], int] = {}
    for t in enumerate_tableaux(shape, n):
        wt = t.weight(n)
        out[wt] = out.get(wt, 0) + (1 << sum(1 for k in wt if k))
    return QPolynomial(out, n)


def lr_coefficients(outer: Sequence[int], inner: Sequence[int],
                    n: int) -> Dict[Tuple[int, ...], int]:
    """Multiplicities of straight shapes among the components.

    Entry nu counts components of ShST(outer/inner, n) whose highest weight
    is nu; these are the shifted Littlewood-Richardson coefficients.
    """
    G = build(ShiftedShape(tuple(outer), tuple(inner)), n)
    out: Dict[Tuple[int, ...], int] = {}
    for hw in G.highest_weights():
        wt = G.weight(hw)
        nu = tuple(k for k in wt if k)
        if list(wt[:len(nu)]) != list(nu) or any(
                a <= b for a, b in zip(nu, nu[1:])):
            raise IntegrityError(f"highest weight {wt} is not a strict partition")
        out[nu] = out.get(nu, 0) + 1
    return out
