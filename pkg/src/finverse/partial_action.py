"""Premorphisms, partial actions on semilattices, and their product monoids.

A premorphism assigns to each group element a partial bijection of a finite
semilattice; when each map is an order isomorphism between order ideals this
is the same thing as a partial action.  The product carries the familiar
semidirect-style multiplication on pairs (carrier element, group element).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .errors import NotEUnitary, UndefinedAction
from .groups import FiniteGroup
from .invmonoid import FiniteInverseMonoid, MonoidAnalysis, analyze
from .report import CheckResult, result
from .semilattice import FiniteSemilattice


@dataclass
class Premorphism:
    """Per group element, an extensional partial map on the carrier."""

    group: FiniteGroup
    carrier: FiniteSemilattice
    maps: tuple[dict, ...]  # maps[g] is {e: phi_g(e)}

    def dom(self, g: int) -> set:
        return set(self.maps[g])

    def ran(self, g: int) -> set:
        return set(self.maps[g].values())

    def apply(self, g: int, e):
        try:
            return self.maps[g][e]
        except KeyError:
            raise UndefinedAction(
                f"phi_{self.group.element_names[g]} is undefined at {e!r}"
            ) from None

    def defined(self, g: int, e) -> bool:
        return e in self.maps[g]


def identity_premorphism(group: FiniteGroup, carrier: FiniteSemilattice) -> Premorphism:
    """Every group element acts as the identity (only sound for trivial groups)."""
    ident = {e: e for e in carrier.elements}
    return Premorphism(group, carrier, tuple(dict(ident) for _ in group.elements()))


def check_premorphism(phi: Premorphism, *, suite: str = "premorphism", instance: str = "") -> list[CheckResult]:
    """Verify the premorphism laws and the order-ideal/order-isomorphism shape.

    Report-based: all violations are collected with witnesses instead of
    raising, so harnesses can show everything at once.
    """
    group, carrier = phi.group, phi.carrier
    names = group.element_names
    out = []

    ok, witness = True, None
    if set(phi.maps[0]) != set(carrier.elements):
        ok, witness = False, "phi_1 is not total"
    else:
        for e in carrier.elements:
            if phi.maps[0][e] != e:
                ok, witness = False, f"phi_1({e!r}) != {e!r}"
                break
    out.append(result(suite, "identity-acts-trivially", instance, ok, witness))

    ok, witness = True, None
    for g in group.elements():
        gi = group.inv(g)
        inverse_map = {v: k for k, v in phi.maps[g].items()}
        if len(inverse_map) != len(phi.maps[g]) or inverse_map != phi.maps[gi]:
            ok, witness = False, f"phi_{names[gi]} is not the inverse partial bijection of phi_{names[g]}"
            break
    out.append(result(suite, "inverses-act-inversely", instance, ok, witness))

    ok, witness = True, None
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            for e, mid in phi.maps[h].items():
                if mid in phi.maps[g]:
                    if e not in phi.maps[gh] or phi.maps[gh][e] != phi.maps[g][mid]:
                        ok = False
                        witness = f"phi_{names[g]} phi_{names[h]} not below phi_{names[gh]} at {e!r}"
                        break
            if not ok:
                break
        if not ok:
            break
    out.append(result(suite, "composition-below-product", instance, ok, witness))

    ok, witness = True, None
    for g in group.elements():
        for part, elems in (("domain", phi.dom(g)), ("range", phi.ran(g))):
            if not elems:
                ok, witness = False, f"{part} of phi_{names[g]} is empty"
                break
            for e in elems:
                for f in carrier.elements:
                    if carrier.leq(f, e) and f not in elems:
                        ok = False
                        witness = f"{part} of phi_{names[g]} is not downward closed at {f!r} <= {e!r}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    out.append(result(suite, "domains-are-order-ideals", instance, ok, witness))

    ok, witness = True, None
    for g in group.elements():
        items = sorted(phi.maps[g], key=carrier.index)
        for e in items:
            for f in items:
                if carrier.leq(e, f) != carrier.leq(phi.maps[g][e], phi.maps[g][f]):
                    ok = False
                    witness = f"phi_{names[g]} is not an order isomorphism at ({e!r}, {f!r})"
                    break
            if not ok:
                break
        if not ok:
            break
    out.append(result(suite, "maps-are-order-isomorphisms", instance, ok, witness))
    return out


ProductElement = tuple[Hashable, int]  # (carrier element, group element)


class PartialActionProduct:
    """The inverse semigroup of pairs over a partial action of a group."""

    def __init__(self, phi: Premorphism):
        self.phi = phi
        self.group = phi.group
        self.carrier = phi.carrier

    def elements(self) -> list[ProductElement]:
        out = []
        for g in self.group.elements():
            ran = sorted(self.phi.ran(g), key=self.carrier.index)
            out.extend((e, g) for e in ran)
        return out

    def contains(self, s: ProductElement) -> bool:
        e, g = s
        return e in self.phi.ran(g)

    def mul(self, s: ProductElement, t: ProductElement) -> ProductElement:
        (e, g), (f, h) = s, t
        x = self.phi.apply(self.group.inv(g), e)
        y = self.carrier.meet(x, f)
        return (self.phi.apply(g, y), self.group.mul(g, h))

    def inv(self, s: ProductElement) -> ProductElement:
        e, g = s
        gi = self.group.inv(g)
        return (self.phi.apply(gi, e), gi)

    def identity(self) -> ProductElement | None:
        """The pair (top, 1) when the carrier has a top; otherwise None."""
        top = self.carrier.top()
        return None if top is None else (top, 0)

    def leq(self, s: ProductElement, t: ProductElement) -> bool:
        return s[1] == t[1] and self.carrier.leq(s[0], t[0])

    def sigma(self, s: ProductElement, t: ProductElement) -> bool:
        return s[1] == t[1]


def mm_premorphism(family) -> Premorphism:
    """The underlying premorphism of an expansion monoid.

    The carrier is the graph family ordered by reverse inclusion; a group
    element g acts by translation on the graphs that contain g^-1.
    """
    graphs = family.family_graphs()
    carrier = FiniteSemilattice(graphs, family.graph_meet)
    group = family.group
    maps = []
    for g in group.elements():
        gi = group.inv(g)
        maps.append(
            {graph: family.cayley.translate(g, graph) for graph in graphs if gi in graph.vertices}
        )
    return Premorphism(group, carrier, tuple(maps))


def underlying_premorphism(
    monoid: FiniteInverseMonoid, analysis: MonoidAnalysis | None = None
) -> Premorphism:
    """The premorphism of an E-unitary inverse monoid on its idempotents.

    phi_g is conjugation by any element of the sigma-class g whose domain
    idempotent lies above the argument.
    """
    analysis = analysis or analyze(monoid)
    if not analysis.e_unitary:
        raise NotEUnitary(f"{monoid.name} is not E-unitary")
    idem = analysis.idempotents
    carrier = FiniteSemilattice(idem, lambda a, b: monoid.mul(a, b))
    maps = []
    for cls in analysis.classes:
        cmap = {}
        for e in idem:
            for s in cls:
                if analysis.leq(e, monoid.mul(monoid.inv(s), s)):
                    cmap[e] = monoid.mul(monoid.mul(s, e), monoid.inv(s))
                    break
        maps.append(cmap)
    return Premorphism(analysis.quotient, carrier, tuple(maps))


@dataclass
class StructureIso:
    """The map s -> (s s^-1, [s]) onto the product over the idempotents."""

    monoid: FiniteInverseMonoid
    analysis: MonoidAnalysis
    product: PartialActionProduct
    mapping: dict[int, ProductElement]


def structure_iso(
    monoid: FiniteInverseMonoid, analysis: MonoidAnalysis | None = None
) -> StructureIso:
    analysis = analysis or analyze(monoid)
    phi = underlying_premorphism(monoid, analysis)
    product = PartialActionProduct(phi)
    mapping = {
        s: (monoid.mul(s, monoid.inv(s)), analysis.class_of[s]) for s in monoid.elements()
    }
    return StructureIso(monoid, analysis, product, mapping)


def check_structure_iso(iso: StructureIso, *, suite: str = "premorphism", instance: str = "") -> list[CheckResult]:
    """Verify bijectivity and multiplicativity of the structure map, pairwise."""
    monoid, mapping, product = iso.monoid, iso.mapping, iso.product
    out = []
    image = set(mapping.values())
    prod_elems = set(product.elements())
    out.append(result(
        suite, "structure-map-bijective", instance,
        len(image) == monoid.order and image == prod_elems,
        f"image size {len(image)}, product size {len(prod_elems)}",
    ))
    ok, witness = True, None
    for s in monoid.elements():
        for t in monoid.elements():
            if product.mul(mapping[s], mapping[t]) != mapping[monoid.mul(s, t)]:
                ok, witness = False, f"multiplicativity fails at ({s},{t})"
                break
        if not ok:
            break
    out.append(result(suite, "structure-map-multiplicative", instance, ok, witness))
    ok, witness = True, None
    for s in monoid.elements():
        if product.inv(mapping[s]) != mapping[monoid.inv(s)]:
            ok, witness = False, f"inverse fails at {s}"
            break
    out.append(result(suite, "structure-map-respects-inverse", instance, ok, witness))
    return out
