"""Cayley graphs of finite generated groups: edges, paths, subgraphs.

Only positive edges are stored; an edge and its involuted opposite are one
stored object ``(src, letter)`` traversed in two directions.  Letters whose
image is the identity produce loops, which are legal edges.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import NotConnected, VertexAbsent
from .groups import FiniteGroup, GeneratorSet, Word

EdgeKey = tuple[int, str]  # (source vertex, letter name) of a positive edge


@dataclass(frozen=True)
class Edge:
    """A directed traversal of a stored edge; exp -1 walks it backwards."""

    src: int
    letter: str
    exp: int
    dst: int

    def inverse(self) -> "Edge":
        return Edge(self.dst, self.letter, -self.exp, self.src)

    def key(self) -> EdgeKey:
        """The stored positive edge this traversal belongs to."""
        return (self.src, self.letter) if self.exp > 0 else (self.dst, self.letter)


@dataclass(frozen=True)
class Path:
    """A possibly empty edge sequence; ``base`` anchors the empty path."""

    base: int
    edges: tuple[Edge, ...] = ()

    @property
    def start(self) -> int:
        return self.edges[0].src if self.edges else self.base

    @property
    def end(self) -> int:
        return self.edges[-1].dst if self.edges else self.base

    def inverse(self) -> "Path":
        return Path(self.end, tuple(e.inverse() for e in reversed(self.edges)))

    def label(self) -> Word:
        return tuple((e.letter, e.exp) for e in self.edges)

    def is_wellformed(self) -> bool:
        at = self.base
        for e in self.edges:
            if e.src != at:
                return False
            at = e.dst
        return True


@dataclass(frozen=True)
class Subgraph:
    """A vertex set plus a set of positive edges, all endpoints included."""

    vertices: frozenset[int]
    edges: frozenset[EdgeKey]


def graph_key(graph: Subgraph) -> tuple:
    """Deterministic sort key for subgraphs."""
    return (
        len(graph.vertices),
        tuple(sorted(graph.vertices)),
        len(graph.edges),
        tuple(sorted(graph.edges)),
    )


class CayleyGraph:
    """The Cayley graph of a group with respect to a generator set."""

    def __init__(self, group: FiniteGroup, gens: GeneratorSet):
        self.group = group
        self.gens = gens
        self._images = {letter.name: letter.image for letter in gens.letters}
        # translation caches, keyed by (group element, frozenset)
        self._tv: dict[tuple[int, frozenset], frozenset] = {}
        self._te: dict[tuple[int, frozenset], frozenset] = {}

    # -- edges ------------------------------------------------------------

    def letter_image(self, name: str, exp: int = 1) -> int:
        img = self._images.get(name)
        if img is None:
            img = self.gens.letter(name).image  # raises UnknownLetter
        return self.group.inv(img) if exp < 0 else img

    def step(self, v: int, name: str, exp: int = 1) -> int:
        return self.group.mul(v, self.letter_image(name, exp))

    def edge(self, src: int, name: str, exp: int = 1) -> Edge:
        return Edge(src, name, exp, self.step(src, name, exp))

    def edge_from_key(self, key: EdgeKey) -> Edge:
        return self.edge(key[0], key[1], 1)

    # -- subgraphs ---------------------------------------------------------

    def full_graph(self) -> Subgraph:
        verts = frozenset(self.group.elements())
        edges = frozenset((v, l.name) for v in verts for l in self.gens.letters)
        return Subgraph(verts, edges)

    def spanned(self, parts: Iterable[Edge | int]) -> Subgraph:
        """Smallest subgraph containing the given edges and vertices.

        Negative traversals contribute their positive counterpart.
        """
        verts: set[int] = set()
        edges: set[EdgeKey] = set()
        for item in parts:
            if isinstance(item, Edge):
                edges.add(item.key())
                verts.add(item.src)
                verts.add(item.dst)
            else:
                verts.add(int(item))
        if not verts:
            raise ValueError("a subgraph needs at least one vertex")
        return Subgraph(frozenset(verts), frozenset(edges))

    def origin_graph(self) -> Subgraph:
        return Subgraph(frozenset({0}), frozenset())

    def is_wellformed(self, graph: Subgraph) -> bool:
        if not graph.vertices:
            return False
        return all(
            src in graph.vertices and self.step(src, name) in graph.vertices
            for src, name in graph.edges
        )

    def translate(self, g: int, graph: Subgraph) -> Subgraph:
        return Subgraph(
            self.translate_vertices(g, graph.vertices),
            self.translate_edges(g, graph.edges),
        )

    def translate_vertices(self, g: int, verts: frozenset[int]) -> frozenset[int]:
        key = (g, verts)
        out = self._tv.get(key)
        if out is None:
            mul = self.group.mul_table[g]
            out = frozenset(mul[v] for v in verts)
            self._tv[key] = out
        return out

    def translate_edges(self, g: int, edges: frozenset[EdgeKey]) -> frozenset[EdgeKey]:
        key = (g, edges)
        out = self._te.get(key)
        if out is None:
            mul = self.group.mul_table[g]
            out = frozenset((mul[src], name) for src, name in edges)
            self._te[key] = out
        return out

    # -- connectivity and paths ---------------------------------------------

    def _incidence(self, graph: Subgraph, *, descending: bool = False):
        """Per-vertex traversal options (key, exp, other endpoint), sorted."""
        adj: dict[int, list[tuple[EdgeKey, int, int]]] = {v: [] for v in graph.vertices}
        for key in sorted(graph.edges, reverse=descending):
            src, name = key
            dst = self.step(src, name)
            adj[src].append((key, 1, dst))
            if dst != src:
                adj[dst].append((key, -1, src))
        return adj

    def is_connected(self, graph: Subgraph) -> bool:
        verts = graph.vertices
        if len(verts) <= 1:
            return True
        adj = self._incidence(graph)
        start = min(verts)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for _key, _exp, w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def simple_path(self, graph: Subgraph, a: int, b: int) -> Path:
        """Deterministic breadth-first path from a to b inside the subgraph."""
        if a not in graph.vertices or b not in graph.vertices:
            raise VertexAbsent(f"vertex {a if a not in graph.vertices else b} not in subgraph")
        if a == b:
            return Path(a)
        adj = self._incidence(graph)
        prev: dict[int, Edge] = {}
        seen = {a}
        frontier = [a]
        while frontier:
            nxt = []
            for v in frontier:
                for key, exp, w in adj[v]:
                    if w in seen:
                        continue
                    seen.add(w)
                    src, name = key
                    prev[w] = Edge(src, name, exp, w) if exp > 0 else Edge(
                        self.step(src, name), name, -1, src
                    )
                    if w == b:
                        edges = []
                        at = b
                        while at != a:
                            e = prev[at]
                            edges.append(e)
                            at = e.src
                        return Path(a, tuple(reversed(edges)))
                    nxt.append(w)
            frontier = nxt
        raise NotConnected(f"no path from {a} to {b}")

    def walk(self, base: int, word: Word) -> Path:
        """The path obtained by reading a word edge by edge from ``base``."""
        edges = []
        at = base
        for lname, exp in word:
            e = self.edge(at, lname, exp)
            edges.append(e)
            at = e.dst
        return Path(base, tuple(edges))

    def spanning_path(
        self, graph: Subgraph, g: int, *, descending: bool = False, reduced: bool = True
    ) -> Path:
        """A deterministic path from the origin to ``g`` traversing every edge.

        Walks a depth-first double traversal (each excursion immediately
        returns along its inverse), finishing at the origin, then appends a
        shortest path to ``g``.  With ``reduced`` set, adjacent mutually
        inverse traversals are cancelled as long as every stored edge stays
        covered, which yields minimal paths on small graphs.
        """
        if 0 not in graph.vertices:
            raise VertexAbsent("subgraph does not contain the origin")
        if g not in graph.vertices:
            raise VertexAbsent(f"vertex {g} not in subgraph")
        if not self.is_connected(graph):
            raise NotConnected("spanning paths require a connected subgraph")
        adj = self._incidence(graph, descending=descending)
        used: set[EdgeKey] = set()
        walk: list[Edge] = []

        def tour(v: int) -> None:
            for key, exp, w in adj[v]:
                if key in used:
                    continue
                used.add(key)
                src, name = key
                e = Edge(src, name, exp, w) if exp > 0 else Edge(
                    self.step(src, name), name, -1, src
                )
                walk.append(e)
                tour(w)
                walk.append(e.inverse())

        tour(0)
        edges = walk + list(self.simple_path(graph, 0, g).edges)
        if reduced:
            edges = _reduce_covered(edges)
        return Path(0, tuple(edges))

    def spanning_path_variants(self, graph: Subgraph, g: int) -> list[Path]:
        """Distinct spanning paths for the same element, for cross-evaluation."""
        first = self.spanning_path(graph, g)
        variants = [first]
        if graph.edges:
            second = self.spanning_path(graph, g, descending=True, reduced=False)
            if second != first:
                variants.append(second)
            # padded variant: retrace one incident edge at the endpoint
            for key in sorted(graph.edges):
                src, name = key
                dst = self.step(src, name)
                if src == g or dst == g:
                    e = Edge(g, name, 1, dst) if src == g else Edge(g, name, -1, src)
                    padded = Path(0, first.edges + (e, e.inverse()))
                    if padded not in variants:
                        variants.append(padded)
                    break
        return variants

    # -- rendering -----------------------------------------------------------

    def to_dot(self, graph: Subgraph, *, name: str = "cayley", point: int | None = None) -> str:
        """DOT text with one statement per positive edge, sorted by (src, letter).

        Barred-letter edges are rendered dashed; the optional ``point`` vertex
        is drawn with a double border.
        """
        names = self.group.element_names
        lines = [f'digraph "{name}" {{']
        for v in sorted(graph.vertices):
            attr = " [peripheries=2]" if v == point else ""
            lines.append(f'  "{names[v]}"{attr};')
        for src, lname in sorted(graph.edges):
            dst = self.step(src, lname)
            style = ", style=dashed" if self.gens.letter(lname).barred else ""
            lines.append(f'  "{names[src]}" -> "{names[dst]}" [label="{lname}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _reduce_covered(edges: list[Edge]) -> list[Edge]:
    """Cancel adjacent inverse pairs while keeping every stored edge covered."""
    usage = Counter(e.key() for e in edges)
    out = list(edges)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(out):
            if out[i + 1] == out[i].inverse() and usage[out[i].key()] >= 3:
                usage[out[i].key()] -= 2
                del out[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
    return out
