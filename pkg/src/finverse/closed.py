"""The closed-graph expansion: an F-inverse monoid over an extended alphabet.

Elements are pairs (closed subgraph, vertex) over the Cayley graph of the
extended generating set; products re-close the union.  Erasing barred edges
is an isomorphism onto the unrestricted expansion over the plain alphabet,
implemented here as ``f_map``/``f_inverse``.
"""

from __future__ import annotations

from .cayley import CayleyGraph, Subgraph
from .closure import BarredClosure
from .errors import TooLarge, WrongFlavor
from .expansion import ALL, CLOSED, DEFAULT_CAP, ExpansionElement, ExpansionMonoid


class ClosedExpansionMonoid(ExpansionMonoid):
    """Pairs (closed graph, vertex); closed graphs are barred-saturated."""

    def __init__(self, cayley: CayleyGraph, cap: int = DEFAULT_CAP):
        self.closure = BarredClosure(cayley)  # validates the extended alphabet
        self.cayley = cayley
        self.group = cayley.group
        self.gens = cayley.gens
        self.flavor = CLOSED
        self.cap = cap

    def _graph(self, vertices: frozenset[int], edges: frozenset) -> Subgraph:
        return Subgraph(vertices, edges | self.closure.barred_edges(vertices))

    def _flavor_ok(self, graph: Subgraph) -> bool:
        return self.closure.is_closed(graph)

    def m(self, s: ExpansionElement) -> ExpansionElement:
        """The maximum of the sigma-class: the closed two-vertex barred graph."""
        return ExpansionElement(self._graph(frozenset({0, s.point}), frozenset()), s.point)

    def class_max(self, g: int) -> ExpansionElement:
        return ExpansionElement(self._graph(frozenset({0, g}), frozenset()), g)

    def _supported_x_edges(self, verts: frozenset[int]) -> list:
        return sorted(
            (v, letter.name)
            for v in verts
            for letter in self.gens.x_letters()
            if self.cayley.step(v, letter.name) in verts
        )

    def predicted_graph_count(self) -> int:
        # closed graphs biject with (vertex set, plain-letter edge set)
        total = 0
        for verts in self._vertex_subsets():
            total += 1 << len(self._supported_x_edges(verts))
            if total > self.cap:
                return total
        return total

    def family_graphs(self) -> list[Subgraph]:
        """All closed graphs: every vertex subset with every plain edge subset."""
        predicted = self.predicted_graph_count()
        if predicted > self.cap:
            raise TooLarge(predicted, self.cap)
        out = []
        for verts in self._vertex_subsets():
            supported = self._supported_x_edges(verts)
            barred = self.closure.barred_edges(verts)
            for mask in range(1 << len(supported)):
                edges = frozenset(supported[i] for i in range(len(supported)) if mask >> i & 1)
                out.append(Subgraph(verts, edges | barred))
        return out


def f_map(closed: ClosedExpansionMonoid, s: ExpansionElement) -> ExpansionElement:
    """Erase the barred edges: the canonical image in the unrestricted expansion."""
    gens = closed.gens
    edges = frozenset(key for key in s.graph.edges if not gens.letter(key[1]).barred)
    return ExpansionElement(Subgraph(s.graph.vertices, edges), s.point)


def f_inverse(closed: ClosedExpansionMonoid, s: ExpansionElement) -> ExpansionElement:
    """Restore all barred edges between the vertices: the inverse of ``f_map``."""
    return ExpansionElement(closed.closure.close(s.graph), s.point)


def f_partner(group, xgens, cap: int = DEFAULT_CAP) -> ExpansionMonoid:
    """The unrestricted expansion over the plain alphabet that ``f_map`` lands in."""
    return ExpansionMonoid(CayleyGraph(group, xgens), ALL, cap=cap)
