"""Dual-closure (interior) operators on semilattices and their quotients.

The generic machinery works on any finite semilattice given extensionally;
the one concrete operator built here saturates a subgraph over an extended
generating set with barred edges between all of its vertices.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .cayley import CayleyGraph, Subgraph
from .errors import InvalidInput
from .groups import EXTENDED
from .partial_action import PartialActionProduct, Premorphism, ProductElement
from .report import CheckResult, result
from .semilattice import FiniteSemilattice


class BarredClosure:
    """Interior operator on subgraphs over an extended generating set.

    The image of a graph keeps its vertices and adds, for every ordered
    vertex pair (a, b) including a = b, the positive barred edge from a
    labelled by the element a^-1 b.  Fixpoints are exactly the graphs in
    which any two vertices are joined by the appropriate barred edge, with a
    barred-identity loop at every vertex.
    """

    def __init__(self, cayley: CayleyGraph):
        if cayley.gens.kind != EXTENDED:
            raise InvalidInput("the barred closure needs an extended generating set")
        self.cayley = cayley
        self.group = cayley.group
        self._barred_name = cayley.gens.barred_name_of
        self._cache: dict[frozenset, frozenset] = {}

    def barred_edges(self, verts: frozenset[int]) -> frozenset:
        """All barred positive edges between the given vertices (cached)."""
        out = self._cache.get(verts)
        if out is None:
            group = self.group
            out = frozenset(
                (a, self._barred_name[group.mul(group.inv(a), b)])
                for a in verts
                for b in verts
            )
            self._cache[verts] = out
        return out

    def close(self, graph: Subgraph) -> Subgraph:
        return Subgraph(graph.vertices, graph.edges | self.barred_edges(graph.vertices))

    __call__ = close

    def is_closed(self, graph: Subgraph) -> bool:
        return self.barred_edges(graph.vertices) <= graph.edges


def check_interior_axioms(
    j: Callable,
    leq: Callable,
    items: Sequence,
    pairs: Iterable[tuple],
    *,
    suite: str = "closure",
    instance: str = "",
) -> list[CheckResult]:
    """Contractivity, monotonicity and idempotence of a candidate operator."""
    out = []
    ok, witness = True, None
    for x in items:
        if not leq(j(x), x):
            ok, witness = False, f"j(x) not below x at {x!r}"
            break
    out.append(result(suite, "contractive", instance, ok, witness))
    ok, witness = True, None
    for x, y in pairs:
        if leq(x, y) and not leq(j(x), j(y)):
            ok, witness = False, f"monotonicity fails at ({x!r}, {y!r})"
            break
    out.append(result(suite, "monotone", instance, ok, witness))
    ok, witness = True, None
    for x in items:
        if j(j(x)) != j(x):
            ok, witness = False, f"idempotence fails at {x!r}"
            break
    out.append(result(suite, "idempotent", instance, ok, witness))
    return out


def check_meet_compatibility(
    j: Callable,
    meet: Callable,
    pairs: Iterable[tuple],
    *,
    suite: str = "meet",
    instance: str = "",
) -> list[CheckResult]:
    """The identity j(j(x) ^ j(y)) = j(x ^ y), which makes the image a semilattice."""
    ok, witness = True, None
    for x, y in pairs:
        if j(meet(j(x), j(y))) != j(meet(x, y)):
            ok, witness = False, f"meet compatibility fails at ({x!r}, {y!r})"
            break
    return [result(suite, "image-meet-agrees", instance, ok, witness)]


def fiber_partition(j: Callable, items: Sequence) -> dict:
    """Group the carrier by the image of j (the kernel congruence classes)."""
    out: dict = {}
    for x in items:
        out.setdefault(j(x), []).append(x)
    return out


def check_fiber_congruence(
    j: Callable,
    meet: Callable,
    fiber_pairs_with_z: Iterable[tuple],
    *,
    suite: str = "meet",
    instance: str = "",
) -> list[CheckResult]:
    """j(x) = j(y) implies j(x ^ z) = j(y ^ z), on the supplied triples."""
    ok, witness = True, None
    for x, y, z in fiber_pairs_with_z:
        if j(meet(x, z)) != j(meet(y, z)):
            ok, witness = False, f"congruence fails at ({x!r}, {y!r}, {z!r})"
            break
    return [result(suite, "kernel-is-congruence", instance, ok, witness)]


def check_invariance(
    j: Callable,
    phi: Premorphism,
    items_per_g: Callable[[int], Iterable] | None = None,
    *,
    suite: str = "closure",
    instance: str = "",
) -> list[CheckResult]:
    """The operator commutes with the partial action where the action is defined.

    Also checks the implicit domain condition: if g.x is defined then so is
    g.j(x).
    """
    group = phi.group
    ok, witness = True, None
    for g in group.elements():
        items = phi.maps[g] if items_per_g is None else items_per_g(g)
        for x in items:
            if not phi.defined(g, x):
                continue
            jx = j(x)
            if not phi.defined(g, jx):
                ok, witness = False, f"j leaves the domain of phi_{group.element_names[g]} at {x!r}"
                break
            if j(phi.apply(g, x)) != phi.apply(g, jx):
                ok, witness = False, f"invariance fails for g={group.element_names[g]} at {x!r}"
                break
        if not ok:
            break
    return [result(suite, "action-invariant", instance, ok, witness)]


def quotient_semilattice(j: Callable, carrier: FiniteSemilattice) -> FiniteSemilattice:
    """The image of j with the induced meet j(x ^ y)."""
    seen = []
    seen_set = set()
    for x in carrier.elements:
        jx = j(x)
        if jx not in seen_set:
            seen_set.add(jx)
            seen.append(jx)
    return FiniteSemilattice(seen, lambda a, b: j(carrier.meet(a, b)))


def quotient_premorphism(j: Callable, phi: Premorphism) -> Premorphism:
    """Restrict an invariant partial action to the image semilattice."""
    qcarrier = quotient_semilattice(j, phi.carrier)
    maps = []
    for g in phi.group.elements():
        maps.append({e: phi.maps[g][e] for e in qcarrier.elements if e in phi.maps[g]})
    return Premorphism(phi.group, qcarrier, tuple(maps))


def quotient_product(j: Callable, phi: Premorphism) -> tuple[PartialActionProduct, Callable]:
    """The product over the image semilattice, with the projection map.

    The projection sends (e, g) to (j(e), g); its kernel identifies pairs with
    equal group part and equal image under j.
    """
    product = PartialActionProduct(quotient_premorphism(j, phi))

    def projection(s: ProductElement) -> ProductElement:
        return (j(s[0]), s[1])

    return product, projection


def check_quotient_product(
    j: Callable,
    phi: Premorphism,
    pairs: Iterable[tuple[ProductElement, ProductElement]],
    *,
    suite: str = "congruence",
    instance: str = "",
) -> list[CheckResult]:
    """Projection is a surjective morphism whose kernel is the j-fiber relation.

    Together these say the product modulo the kernel is isomorphic to the
    product over the image semilattice.
    """
    source = PartialActionProduct(phi)
    target, projection = quotient_product(j, phi)
    out = []
    source_elems = source.elements()
    image = {projection(s) for s in source_elems}
    target_elems = set(target.elements())
    out.append(result(
        suite, "projection-surjective", instance,
        image == target_elems,
        f"image size {len(image)}, quotient size {len(target_elems)}",
    ))
    ok, witness = True, None
    mul_pairs = list(pairs)
    for s, t in mul_pairs:
        if projection(source.mul(s, t)) != target.mul(projection(s), projection(t)):
            ok, witness = False, f"projection not multiplicative at ({s!r}, {t!r})"
            break
    out.append(result(suite, "projection-multiplicative", instance, ok, witness))
    ok, witness = True, None
    for s in source_elems:
        if projection(source.inv(s)) != target.inv(projection(s)):
            ok, witness = False, f"projection does not respect inverse at {s!r}"
            break
    out.append(result(suite, "projection-respects-inverse", instance, ok, witness))
    # the kernel relation is (equal group part, equal image under j) by the
    # very definition of the projection, and such pairs share their group
    # part, so the kernel sits inside sigma; spot-check both on the pairs
    ok, witness = True, None
    for s, t in mul_pairs:
        related = s[1] == t[1] and j(s[0]) == j(t[0])
        if related != (projection(s) == projection(t)):
            ok, witness = False, f"kernel mismatch at ({s!r}, {t!r})"
            break
        if projection(s) == projection(t) and not source.sigma(s, t):
            ok, witness = False, f"kernel escapes sigma at ({s!r}, {t!r})"
            break
    out.append(result(suite, "kernel-is-fiber-relation-inside-sigma", instance, ok, witness))
    return out
