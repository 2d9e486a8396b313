"""Expansion monoids of pairs (subgraph, vertex) over a Cayley graph.

Two flavors are implemented here: the connected flavor (finite connected
subgraphs containing the origin) and the unrestricted flavor (connectivity
dropped), which carries the maximum-per-class unary operation ``m``.  The
closed flavor lives in :mod:`finverse.closed`.

Elements multiply by ``(A, g)(B, h) = (A u gB, gh)`` and invert by
``(A, g)^-1 = (g^-1 A, g^-1)``; the semilattice of graphs is ordered by
reverse inclusion, with union as meet.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cayley import CayleyGraph, Path, Subgraph, graph_key
from .errors import ParseError, TooLarge, WrongFlavor
from .groups import Word

CONNECTED = "connected"
ALL = "all"
CLOSED = "closed"

DEFAULT_CAP = 10_000_000


@dataclass(frozen=True)
class ExpansionElement:
    graph: Subgraph
    point: int


def element_key(elem: ExpansionElement) -> tuple:
    return (graph_key(elem.graph), elem.point)


class ExpansionMonoid:
    """The expansion of a generated group by subgraphs of its Cayley graph."""

    def __init__(self, cayley: CayleyGraph, flavor: str = CONNECTED, cap: int = DEFAULT_CAP):
        if flavor not in (CONNECTED, ALL):
            raise WrongFlavor(f"unsupported flavor {flavor!r}")
        self.cayley = cayley
        self.group = cayley.group
        self.gens = cayley.gens
        self.flavor = flavor
        self.cap = cap

    # -- graph normalization hook (identity here, closure in the closed flavor)

    def _graph(self, vertices: frozenset[int], edges: frozenset) -> Subgraph:
        return Subgraph(vertices, edges)

    def graph_meet(self, a: Subgraph, b: Subgraph) -> Subgraph:
        return self._graph(a.vertices | b.vertices, a.edges | b.edges)

    # -- monoid structure ----------------------------------------------------

    @property
    def identity(self) -> ExpansionElement:
        return ExpansionElement(self._graph(frozenset({0}), frozenset()), 0)

    def mul(self, s: ExpansionElement, t: ExpansionElement) -> ExpansionElement:
        g = s.point
        verts = s.graph.vertices | self.cayley.translate_vertices(g, t.graph.vertices)
        edges = s.graph.edges | self.cayley.translate_edges(g, t.graph.edges)
        return ExpansionElement(self._graph(verts, edges), self.group.mul(g, t.point))

    def inv(self, s: ExpansionElement) -> ExpansionElement:
        gi = self.group.inv(s.point)
        return ExpansionElement(self._graph(
            self.cayley.translate_vertices(gi, s.graph.vertices),
            self.cayley.translate_edges(gi, s.graph.edges),
        ), gi)

    def generator(self, name: str) -> ExpansionElement:
        img = self.gens.letter(name).image
        return ExpansionElement(
            self._graph(frozenset({0, img}), frozenset({(0, name)})), img
        )

    def leq(self, s: ExpansionElement, t: ExpansionElement) -> bool:
        """Natural partial order: equal points and reverse graph inclusion."""
        return (
            s.point == t.point
            and t.graph.vertices <= s.graph.vertices
            and t.graph.edges <= s.graph.edges
        )

    def sigma(self, s: ExpansionElement, t: ExpansionElement) -> bool:
        """Minimum group congruence, which here is point equality."""
        return s.point == t.point

    def class_max(self, g: int) -> ExpansionElement:
        """The maximum of the sigma-class of ``g``: two vertices, no edges."""
        if self.flavor != ALL:
            raise WrongFlavor("class maxima exist only in the unrestricted flavor")
        return ExpansionElement(self._graph(frozenset({0, g}), frozenset()), g)

    def m(self, s: ExpansionElement) -> ExpansionElement:
        if self.flavor != ALL:
            raise WrongFlavor("the m operation is not defined in this flavor")
        return self.class_max(s.point)

    def contains(self, s: ExpansionElement) -> bool:
        graph = s.graph
        if 0 not in graph.vertices or s.point not in graph.vertices:
            return False
        if not self.cayley.is_wellformed(graph):
            return False
        return self._flavor_ok(graph)

    def _flavor_ok(self, graph: Subgraph) -> bool:
        return self.flavor == ALL or self.cayley.is_connected(graph)

    # -- evaluation ------------------------------------------------------------

    def eval_word(self, word: Word) -> ExpansionElement:
        acc = self.identity
        for lname, exp in word:
            t = self.generator(lname)
            acc = self.mul(acc, t if exp > 0 else self.inv(t))
        return acc

    def eval_path(self, path: Path) -> ExpansionElement:
        """The element (<p>, end of p) of a path from the origin."""
        if self.flavor != CONNECTED:
            raise WrongFlavor("path evaluation lives in the connected flavor")
        if path.start != 0:
            raise ValueError("path evaluation requires a path from the origin")
        graph = self.cayley.spanned([0, *path.edges])
        return ExpansionElement(graph, path.end)

    # -- enumeration -------------------------------------------------------------

    def _vertex_subsets(self):
        n = self.group.order
        rest = [v for v in range(1, n)]
        for mask in range(1 << len(rest)):
            verts = frozenset([0] + [rest[i] for i in range(len(rest)) if mask >> i & 1])
            yield verts

    def _supported_edges(self, verts: frozenset[int]) -> list:
        return sorted(
            (v, letter.name)
            for v in verts
            for letter in self.gens.letters
            if self.cayley.step(v, letter.name) in verts
        )

    def predicted_graph_count(self) -> int:
        total = 0
        for verts in self._vertex_subsets():
            total += 1 << len(self._supported_edges(verts))
            if total > self.cap:
                return total
        return total

    def family_graphs(self) -> list[Subgraph]:
        """All graphs of the family, in a deterministic order.

        Iterates vertex subsets containing the origin, then edge subsets
        supported on them, filtering by the flavor predicate last.
        """
        predicted = self.predicted_graph_count()
        if predicted > self.cap:
            raise TooLarge(predicted, self.cap)
        out = []
        for verts in self._vertex_subsets():
            supported = self._supported_edges(verts)
            for mask in range(1 << len(supported)):
                edges = frozenset(supported[i] for i in range(len(supported)) if mask >> i & 1)
                graph = Subgraph(verts, edges)
                if self._flavor_ok(graph):
                    out.append(graph)
        return out

    def elements(self) -> list[ExpansionElement]:
        return [
            ExpansionElement(graph, v)
            for graph in self.family_graphs()
            for v in sorted(graph.vertices)
        ]

    def elements_by_words(self, max_len: int, include_m: bool | None = None) -> set[ExpansionElement]:
        """Elements reachable from the generators by at most ``max_len`` operations.

        Operations are right multiplication by a generator image or its
        inverse and, where the flavor carries it, the unary ``m``; breadth
        first, starting from the identity.
        """
        if include_m is None:
            include_m = self.flavor == ALL
        steps = []
        for letter in self.gens.letters:
            img = self.generator(letter.name)
            steps.append(img)
            steps.append(self.inv(img))
        if include_m:
            # class maxima are step elements in their own right: products such
            # as m(x) m(y) are not right-linear words over the letters alone
            steps.extend(self.class_max(g) for g in self.group.elements())
        seen = {self.identity}
        frontier = [self.identity]
        for _ in range(max_len):
            nxt = []
            for s in frontier:
                candidates = [self.mul(s, t) for t in steps]
                if include_m:
                    candidates.append(self.m(s))
                for u in candidates:
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            if not nxt:
                break
            frontier = nxt
        return seen

    def generated_elements(self, include_m: bool | None = None) -> set[ExpansionElement]:
        """Breadth-first closure of the generators, run to a fixpoint."""
        return self.elements_by_words(max_len=self.group.order * len(self.gens.letters) * 4 + 8,
                                      include_m=include_m)

    # -- text form ----------------------------------------------------------------

    def element_text(self, s: ExpansionElement) -> str:
        names = self.group.element_names
        vs = ",".join(names[v] for v in sorted(s.graph.vertices))
        es = ",".join(f"({names[src]},{lname})" for src, lname in sorted(s.graph.edges))
        return f"(V={{{vs}}}; E={{{es}}}; g={names[s.point]})"


_ELEMENT_RE = re.compile(r"^\(V=\{(?P<verts>[^}]*)\}; E=\{(?P<edges>[^}]*)\}; g=(?P<point>[^)]+)\)$")


def parse_element_text(monoid: ExpansionMonoid, text: str) -> ExpansionElement:
    """Parse the canonical element text form back into an element."""
    match = _ELEMENT_RE.match(text.strip())
    if not match:
        raise ParseError(f"malformed element literal {text!r}")
    group = monoid.group
    verts = frozenset(
        group.element_index(tok) for tok in match["verts"].split(",") if tok
    )
    edges = set()
    body = match["edges"]
    if body:
        for pair in re.findall(r"\(([^)]*)\)", body):
            parts = pair.split(",")
            if len(parts) != 2:
                raise ParseError(f"malformed edge {pair!r} in element literal")
            edges.add((group.element_index(parts[0]), parts[1]))
        if not edges:
            raise ParseError(f"malformed edge list {body!r} in element literal")
    elem = ExpansionElement(Subgraph(verts, frozenset(edges)), group.element_index(match["point"]))
    if not monoid.contains(elem):
        raise ParseError(f"element literal {text!r} is not a member of the family")
    return elem
