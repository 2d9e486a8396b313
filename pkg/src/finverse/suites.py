"""Named verification suites run against a single fixture group.

Each suite brute-force checks one slab of the theory at desk scale:
exhaustively wherever enumeration is feasible, by seeded random sampling
otherwise.  The thresholds are fixed constants, so for a given group and
configuration the exact work performed (and therefore the report) is
deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .cayley import CayleyGraph, Subgraph, graph_key
from .closed import ClosedExpansionMonoid, f_map, f_inverse
from .closure import (
    BarredClosure,
    check_fiber_congruence,
    check_interior_axioms,
    check_invariance,
    check_meet_compatibility,
    check_quotient_product,
    fiber_partition,
    quotient_product,
)
from .errors import NuNotCanonical
from .expansion import ALL, CONNECTED, ExpansionElement, ExpansionMonoid, element_key
from .groups import FiniteGroup, GeneratorSet, Word, extend_generators
from .groups import eval_word as group_eval
from .invmonoid import FiniteInverseMonoid, analyze, group_as_monoid, to_table
from .partial_action import (
    PartialActionProduct,
    check_premorphism,
    check_structure_iso,
    mm_premorphism,
    structure_iso,
)
from .report import CheckResult, Report, result
from .terms import Gen, Inv, MOp, Mul, One, Term, eval_term, term_letters, word_term
from .universal import (
    TargetContext,
    canonical_morphism,
    closure_quotient_report,
    single_edge_step_check,
)
from .fixtures import chain2, chain3, flat4_monoid

# feasibility thresholds for the exhaustive code paths
MAX_ENUM_GRAPHS = 20_000
MAX_EXHAUSTIVE_PAIRS = 2_500_000
MAX_FULL_TRIPLES = 30
MAX_REIFY = 700
MAX_PATH_COUNT = 50_000


@dataclass
class SuiteConfig:
    samples: int = 10_000
    seed: int = 0
    cap: int = 10_000_000
    word_len: int = 6


class SuiteContext:
    """Lazily built families and operators for one fixture group."""

    def __init__(self, group: FiniteGroup, xgens: GeneratorSet, cfg: SuiteConfig):
        self.group = group
        self.xgens = xgens
        self.cfg = cfg

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.cfg.seed}:{salt}")

    @cached_property
    def ygens(self) -> GeneratorSet:
        return extend_generators(self.group, self.xgens)

    @cached_property
    def cayley_x(self) -> CayleyGraph:
        return CayleyGraph(self.group, self.xgens)

    @cached_property
    def cayley_y(self) -> CayleyGraph:
        return CayleyGraph(self.group, self.ygens)

    @cached_property
    def m_family(self) -> ExpansionMonoid:
        return ExpansionMonoid(self.cayley_x, CONNECTED, cap=self.cfg.cap)

    @cached_property
    def f_family(self) -> ExpansionMonoid:
        return ExpansionMonoid(self.cayley_x, ALL, cap=self.cfg.cap)

    @cached_property
    def my_family(self) -> ExpansionMonoid:
        return ExpansionMonoid(self.cayley_y, CONNECTED, cap=self.cfg.cap)

    @cached_property
    def wedge(self) -> ClosedExpansionMonoid:
        return ClosedExpansionMonoid(self.cayley_y, cap=self.cfg.cap)

    @cached_property
    def closure(self) -> BarredClosure:
        return self.wedge.closure

    def enumerable(self, family) -> bool:
        return family.predicted_graph_count() <= min(family.cap, MAX_ENUM_GRAPHS)

    def random_connected_graph(self, rng: random.Random, cayley: CayleyGraph) -> Subgraph:
        """A random connected subgraph containing the origin: the span of a
        random walk, optionally thickened by extra supported edges."""
        letters = [l.name for l in cayley.gens.letters]
        length = rng.randrange(0, 2 * self.group.order + 2)
        at = 0
        edges = []
        for _ in range(length):
            name = rng.choice(letters)
            exp = rng.choice((1, -1))
            e = cayley.edge(at, name, exp)
            edges.append(e)
            at = e.dst
        graph = cayley.spanned([0, *edges])
        extra = [
            (v, name)
            for v in sorted(graph.vertices)
            for name in letters
            if cayley.step(v, name) in graph.vertices
        ]
        picked = {key for key in extra if rng.random() < 0.25}
        return Subgraph(graph.vertices, graph.edges | frozenset(picked))

    def random_word(self, rng: random.Random, gens: GeneratorSet, max_len: int) -> Word:
        letters = [l.name for l in gens.letters]
        return tuple(
            (rng.choice(letters), rng.choice((1, -1))) for _ in range(rng.randrange(0, max_len + 1))
        )


def _pairs(items, limit: int, rng: random.Random):
    if len(items) ** 2 <= limit:
        return ((s, t) for s in items for t in items)
    return ((rng.choice(items), rng.choice(items)) for _ in range(limit))


def _triples(items, limit: int, rng: random.Random):
    if len(items) ** 3 <= limit:
        return ((a, b, c) for a in items for b in items for c in items)
    return (
        (rng.choice(items), rng.choice(items), rng.choice(items)) for _ in range(limit)
    )


def shortest_words(group: FiniteGroup, gens: GeneratorSet) -> dict[int, Word]:
    """A shortest word over the generators for every group element."""
    words: dict[int, Word] = {0: ()}
    frontier = [0]
    steps = [(l.name, exp) for l in gens.letters for exp in (1, -1)]
    while frontier:
        nxt = []
        for g in frontier:
            for name, exp in steps:
                img = gens.letter(name).image
                h = group.mul(g, img if exp > 0 else group.inv(img))
                if h not in words:
                    words[h] = words[g] + ((name, exp),)
                    nxt.append(h)
        frontier = nxt
    return words


# -- individual suites ------------------------------------------------------------


def suite_semilattice(ctx: SuiteContext) -> list[CheckResult]:
    """Union is a meet for the graph families, with the one-vertex graph on top."""
    out = []
    rng = ctx.rng("semilattice")
    candidates = [("M", ctx.m_family), ("F", ctx.f_family)]
    if ctx.enumerable(ctx.my_family):
        candidates.append(("MY", ctx.my_family))
    if ctx.enumerable(ctx.wedge):
        candidates.append(("W", ctx.wedge))
    for label, family in candidates:
        if not ctx.enumerable(family):
            continue
        graphs = family.family_graphs()
        instance = f"{ctx.group.name}:{label}"
        meet = family.graph_meet
        out.append(result(
            "semilattice", "members-contain-origin", instance,
            all(0 in g.vertices for g in graphs),
        ))
        ok = all(meet(g, g) == g for g in graphs)
        out.append(result("semilattice", "meet-idempotent", instance, ok))
        pairs = _pairs(graphs, 40_000, rng)
        ok = all(meet(a, b) == meet(b, a) for a, b in pairs)
        out.append(result("semilattice", "meet-commutative", instance, ok))
        triples = _triples(graphs, 40_000, rng)
        ok = all(meet(meet(a, b), c) == meet(a, meet(b, c)) for a, b, c in triples)
        out.append(result("semilattice", "meet-associative", instance, ok))
        top = family.identity.graph
        ok = all(meet(top, g) == g for g in graphs)
        out.append(result("semilattice", "top-is-meet-identity", instance, ok))
    return out


def suite_expansion(ctx: SuiteContext) -> list[CheckResult]:
    """Monoid laws, order, sigma, class maxima and path evaluation for M and F."""
    out = []
    rng = ctx.rng("expansion")
    group = ctx.group
    for label, family in (("M", ctx.m_family), ("F", ctx.f_family)):
        if not ctx.enumerable(family):
            continue
        instance = f"{group.name}:{label}"
        elems = family.elements()
        one = family.identity
        mul, inv = family.mul, family.inv

        ok = all(mul(one, s) == s and mul(s, one) == s for s in elems)
        out.append(result("expansion", "identity-element", instance, ok))

        ok = all(inv(inv(s)) == s and mul(mul(s, inv(s)), s) == s for s in elems)
        out.append(result("expansion", "inverse-laws", instance, ok))

        idem = [s for s in elems if mul(s, s) == s]
        ok = all(mul(a, b) == mul(b, a) for a, b in _pairs(idem, 150_000, rng))
        out.append(result("expansion", "idempotents-commute", instance, ok))

        if len(elems) <= MAX_FULL_TRIPLES:
            ok = all(
                mul(mul(a, b), c) == mul(a, mul(b, c))
                for a in elems for b in elems for c in elems
            )
        else:
            # Light's associativity test over the generator images
            ok = True
            mids = set()
            for letter in family.gens.letters:
                img = family.generator(letter.name)
                mids.update((img, inv(img)))
            for a in sorted(mids, key=element_key):
                with_a = [mul(x, a) for x in elems]
                a_with = [mul(a, y) for y in elems]
                for i, x in enumerate(elems):
                    xa = with_a[i]
                    if not all(mul(xa, y) == mul(x, a_with[k]) for k, y in enumerate(elems)):
                        ok = False
                        break
                if not ok:
                    break
        out.append(result("expansion", "associative", instance, ok))

        ok = True
        for letter in family.gens.letters:
            img = family.generator(letter.name)
            expected = ExpansionElement(
                family._graph(frozenset({0, letter.image}), frozenset({(0, letter.name)})),
                letter.image,
            )
            if img != expected:
                ok = False
                break
        out.append(result("expansion", "generator-images", instance, ok))

        if len(elems) ** 2 <= MAX_EXHAUSTIVE_PAIRS:
            ok = True
            for s in elems:
                s_star = mul(s, inv(s))
                if not all(family.leq(s, t) == (s == mul(s_star, t)) for t in elems):
                    ok = False
                    break
        else:
            ok = all(
                family.leq(s, t) == (s == mul(mul(s, inv(s)), t))
                for s, t in _pairs(elems, MAX_EXHAUSTIVE_PAIRS, rng)
            )
        out.append(result("expansion", "natural-order-law", instance, ok))

        ok = True
        for s, t in _pairs(elems, 20_000, rng):
            joined = ExpansionElement(family.graph_meet(s.graph, t.graph), 0)
            fiber = family.sigma(s, t)
            if fiber != (mul(joined, s) == mul(joined, t)):
                ok = False
                break
        out.append(result("expansion", "sigma-is-point-fiber", instance, ok))

        points = sorted({s.point for s in elems})
        ok = len(points) == group.order
        out.append(result("expansion", "sigma-class-count", instance, ok,
                          f"{len(points)} classes for group order {group.order}"))

        idem_set = set(idem)
        ok = all(
            s in idem_set
            for e in idem
            for s in elems
            if family.leq(e, s)
        )
        out.append(result("expansion", "e-unitary", instance, ok))

        if label == "F":
            ok, witness = True, None
            by_point: dict[int, list[ExpansionElement]] = {}
            for s in elems:
                by_point.setdefault(s.point, []).append(s)
            for g, cls in sorted(by_point.items()):
                top = family.class_max(g)
                if top not in cls or not all(family.leq(s, top) for s in cls):
                    ok, witness = False, f"class of point {g} has no formula maximum"
                    break
                maximal = [s for s in cls if not any(t != s and family.leq(s, t) for t in cls)]
                if maximal != [top]:
                    ok, witness = False, f"class of point {g} has {len(maximal)} maximal elements"
                    break
            out.append(result("expansion", "class-maximum-formula", instance, ok, witness))

    # path evaluation in the connected family
    family = ctx.m_family
    steps = [(l.name, exp) for l in family.gens.letters for exp in (1, -1)]
    if steps and len(steps) ** ctx.cfg.word_len <= MAX_PATH_COUNT:
        ok, count = True, 0
        stack = [((), 0)]
        while stack and ok:
            word, at = stack.pop()
            if word:
                path = ctx.cayley_x.walk(0, word)
                value = family.eval_word(word)
                if family.eval_path(path) != value or value.point != group.mul(0, at):
                    ok = False
                    break
            count += 1
            if len(word) < ctx.cfg.word_len:
                for name, exp in steps:
                    stack.append((word + ((name, exp),), ctx.cayley_x.step(at, name, exp)))
        out.append(result("expansion", "path-evaluation", f"{group.name}:M", ok,
                          f"checked {count} paths"))
        rng2 = ctx.rng("expansion-paths")
        ok = True
        for _ in range(2000):
            w1 = ctx.random_word(rng2, ctx.xgens, ctx.cfg.word_len)
            w2 = ctx.random_word(rng2, ctx.xgens, ctx.cfg.word_len)
            v1, v2 = family.eval_word(w1), family.eval_word(w2)
            same_value = group_eval(group, ctx.xgens, w1) == group_eval(group, ctx.xgens, w2)
            if family.sigma(v1, v2) != same_value:
                ok = False
                break
        out.append(result("expansion", "sigma-iff-equal-group-value", f"{group.name}:M", ok))

    # two-method cardinality agreement
    for label, family in (("M", ctx.m_family), ("F", ctx.f_family)):
        if not ctx.enumerable(family):
            continue
        direct = set(family.elements())
        generated = family.generated_elements()
        out.append(result(
            "expansion", "enumeration-methods-agree", f"{group.name}:{label}",
            direct == generated,
            f"direct {len(direct)}, generated {len(generated)}",
        ))
    return out


def suite_premorphism(ctx: SuiteContext) -> list[CheckResult]:
    """The translation premorphism, the pair product, and the structure map."""
    out = []
    rng = ctx.rng("premorphism")
    group = ctx.group
    for label, family in (("M", ctx.m_family), ("F", ctx.f_family)):
        if not ctx.enumerable(family):
            continue
        instance = f"{group.name}:{label}"
        phi = mm_premorphism(family)
        if len(phi.carrier) <= 1500:
            out.extend(check_premorphism(phi, instance=instance))
        product = PartialActionProduct(phi)
        elems = family.elements()
        ok = set(product.elements()) == {(s.graph, s.point) for s in elems}
        out.append(result("premorphism", "product-carrier-matches", instance, ok))
        ok = True
        for s, t in _pairs(elems, MAX_EXHAUSTIVE_PAIRS, rng):
            graph, point = product.mul((s.graph, s.point), (t.graph, t.point))
            u = family.mul(s, t)
            if (graph, point) != (u.graph, u.point):
                ok = False
                break
        out.append(result("premorphism", "product-reconstructs-expansion", instance, ok))
        ok = True
        for s, t in _pairs(elems, 20_000, rng):
            lhs = product.leq((s.graph, s.point), (t.graph, t.point))
            if lhs != family.leq(s, t):
                ok = False
                break
        out.append(result("premorphism", "product-order-agrees", instance, ok))
        ident = product.identity()
        ok = ident == (family.identity.graph, 0)
        out.append(result("premorphism", "product-identity-is-top", instance, ok))

    if len(ctx.m_family.elements()) <= MAX_REIFY and ctx.enumerable(ctx.m_family):
        monoid = to_table(ctx.m_family, name=f"{group.name}-M")
        iso = structure_iso(monoid)
        out.extend(check_structure_iso(iso, instance=f"{group.name}:M-table"))
    return out


def _closure_leq(a: Subgraph, b: Subgraph) -> bool:
    # anti-inclusion order on graphs
    return b.vertices <= a.vertices and b.edges <= a.edges


def suite_closure(ctx: SuiteContext) -> list[CheckResult]:
    """Interior-operator axioms and action invariance of the barred saturation."""
    out = []
    group = ctx.group
    j = ctx.closure.close
    instance = group.name
    if ctx.enumerable(ctx.my_family):
        graphs = ctx.my_family.family_graphs()
        rng = ctx.rng("closure")
        pairs = _pairs(graphs, MAX_EXHAUSTIVE_PAIRS, rng)
        out.extend(check_interior_axioms(j, _closure_leq, graphs, pairs, instance=instance))
        phi = mm_premorphism(ctx.my_family)
        out.extend(check_invariance(j, phi, instance=instance))
        ok = all(ctx.closure.is_closed(g) == (j(g) == g) for g in graphs)
        out.append(result("closure", "fixpoints-are-closed-graphs", instance, ok))
        closed_graphs = ctx.wedge.family_graphs()
        ok, witness = True, None
        for g in graphs:
            smallest = None
            for c in closed_graphs:
                if g.vertices <= c.vertices and g.edges <= c.edges:
                    smallest = c if smallest is None else Subgraph(
                        smallest.vertices & c.vertices, smallest.edges & c.edges
                    )
            if smallest != j(g):
                ok, witness = False, f"smallest closed supergraph mismatch at {g}"
                break
        out.append(result("closure", "closure-is-smallest-closed", instance, ok, witness))
    else:
        rng = ctx.rng("closure-sampled")
        samples = [ctx.random_connected_graph(rng, ctx.cayley_y) for _ in range(ctx.cfg.samples)]
        pairs = [(samples[i], samples[(i * 7 + 3) % len(samples)]) for i in range(len(samples))]
        out.extend(check_interior_axioms(j, _closure_leq, samples, pairs,
                                         instance=f"{instance}:sampled"))
        names = group.element_names
        ok, witness = True, None
        for graph in samples:
            for g in group.elements():
                if group.inv(g) not in graph.vertices:
                    continue
                moved = ctx.cayley_y.translate(g, graph)
                if j(moved) != ctx.cayley_y.translate(g, j(graph)):
                    ok, witness = False, f"invariance fails for g={names[g]}"
                    break
            if not ok:
                break
        out.append(result("closure", "action-invariant", f"{instance}:sampled", ok, witness))
        ok = all(ctx.closure.is_closed(j(g)) and (not ctx.closure.is_closed(g) or j(g) == g)
                 for g in samples)
        out.append(result("closure", "fixpoints-are-closed-graphs", f"{instance}:sampled", ok))
    return out


def suite_meet(ctx: SuiteContext) -> list[CheckResult]:
    """Meet compatibility of the saturation and the induced quotient semilattice."""
    out = []
    group = ctx.group
    j = ctx.closure.close
    meet = ctx.my_family.graph_meet
    instance = group.name
    rng = ctx.rng("meet")
    if ctx.enumerable(ctx.my_family):
        graphs = ctx.my_family.family_graphs()
        pairs = _pairs(graphs, MAX_EXHAUSTIVE_PAIRS, rng)
        out.extend(check_meet_compatibility(j, meet, pairs, instance=instance))
        fibers = fiber_partition(j, graphs)

        def plain_part(g: Subgraph) -> tuple:
            plain = frozenset(k for k in g.edges if not ctx.ygens.letter(k[1]).barred)
            return (g.vertices, plain)

        ok = all(
            all(plain_part(g) == plain_part(image) for g in cls)
            for image, cls in fibers.items()
        )
        out.append(result("meet", "fibers-fix-vertices-and-plain-edges", instance, ok))
        def fiber_triples():
            budget = max(ctx.cfg.samples, 40_000) if len(graphs) > 200 else None
            produced = 0
            for image in sorted(fibers, key=lambda s: (sorted(s.vertices), sorted(s.edges))):
                cls = fibers[image]
                if budget is not None and len(cls) ** 2 > budget - produced:
                    share = max(1, (budget - produced) // max(1, len(fibers)))
                    for _ in range(share):
                        yield (rng.choice(cls), rng.choice(cls), rng.choice(graphs))
                        produced += 1
                else:
                    for a in cls:
                        for b in cls:
                            yield (a, b, rng.choice(graphs))
                            produced += 1
                if budget is not None and produced >= budget:
                    return

        out.extend(check_fiber_congruence(j, meet, fiber_triples(), instance=instance))
        images = sorted({j(g) for g in graphs}, key=lambda s: (sorted(s.vertices), sorted(s.edges)))
        meet_bar = lambda a, b: j(meet(a, b))
        ok = all(meet_bar(a, a) == a for a in images)
        ok = ok and all(meet_bar(a, b) == meet_bar(b, a) for a, b in _pairs(images, 40_000, rng))
        ok = ok and all(
            meet_bar(meet_bar(a, b), c) == meet_bar(a, meet_bar(b, c))
            for a, b, c in _triples(images, 40_000, rng)
        )
        out.append(result("meet", "quotient-is-semilattice", instance, ok))
    else:
        samples = [ctx.random_connected_graph(rng, ctx.cayley_y) for _ in range(ctx.cfg.samples)]
        pairs = list(zip(samples, reversed(samples)))
        out.extend(check_meet_compatibility(j, meet, pairs, instance=f"{instance}:sampled"))
        triples = []
        for graph in samples:
            barred_present = sorted(
                k for k in graph.edges if ctx.ygens.letter(k[1]).barred
            )
            dropped = frozenset(k for k in barred_present if rng.random() < 0.5)
            thin = Subgraph(graph.vertices, graph.edges - dropped)
            if ctx.cayley_y.is_connected(thin) and j(thin) == j(graph):
                triples.append((graph, thin, rng.choice(samples)))
        out.extend(check_fiber_congruence(j, meet, triples, instance=f"{instance}:sampled"))
    return out


def suite_congruence(ctx: SuiteContext) -> list[CheckResult]:
    """The induced congruence on the pair product and its quotient product."""
    out = []
    group = ctx.group
    j = ctx.closure.close
    instance = group.name
    rng = ctx.rng("congruence")
    if not ctx.enumerable(ctx.my_family):
        # sampled spot check of the projection on word-generated elements
        ambient = ctx.my_family
        generated = sorted(ambient.elements_by_words(ctx.cfg.word_len), key=element_key)
        wedge = ctx.wedge
        ok = True
        for _ in range(min(ctx.cfg.samples, 4000)):
            s = rng.choice(generated)
            t = rng.choice(generated)
            left = wedge.mul(
                ExpansionElement(j(s.graph), s.point), ExpansionElement(j(t.graph), t.point)
            )
            u = ambient.mul(s, t)
            if left != ExpansionElement(j(u.graph), u.point):
                ok = False
                break
        out.append(result("congruence", "projection-multiplicative", f"{instance}:sampled", ok))
        return out
    phi = mm_premorphism(ctx.my_family)
    product = PartialActionProduct(phi)
    elems = product.elements()
    pairs = _pairs(elems, min(MAX_EXHAUSTIVE_PAIRS, max(ctx.cfg.samples, 40_000)), rng)
    out.extend(check_quotient_product(j, phi, pairs, instance=instance))
    quotient, projection = quotient_product(j, phi)
    if ctx.enumerable(ctx.wedge):
        ok = set(quotient.elements()) == {(s.graph, s.point) for s in ctx.wedge.elements()}
        out.append(result("congruence", "quotient-matches-closed-family", instance, ok))
        ok = True
        qelems = sorted(quotient.elements(), key=lambda e: (graph_key(e[0]), e[1]))
        for s, t in _pairs(qelems, 40_000, rng):
            graph, point = quotient.mul(s, t)
            u = ctx.wedge.mul(ExpansionElement(s[0], s[1]), ExpansionElement(t[0], t[1]))
            if (graph, point) != (u.graph, u.point):
                ok = False
                break
        out.append(result("congruence", "quotient-product-reconstructs", instance, ok))
    return out


def suite_fmax(ctx: SuiteContext) -> list[CheckResult]:
    """Class maxima in the closed expansion and generation by enriched terms."""
    out = []
    group = ctx.group
    wedge = ctx.wedge
    instance = group.name
    if ctx.enumerable(wedge) and len(wedge.family_graphs()) * group.order <= 6000:
        elems = wedge.elements()
        by_point: dict[int, list[ExpansionElement]] = {}
        for s in elems:
            by_point.setdefault(s.point, []).append(s)
        ok, witness = True, None
        for g, cls in sorted(by_point.items()):
            expected = wedge.class_max(g)
            maximal = [s for s in cls if not any(t != s and wedge.leq(s, t) for t in cls)]
            if maximal != [expected] or not all(wedge.leq(s, expected) for s in cls):
                ok, witness = False, f"class of point {g}: {len(maximal)} maximal elements"
                break
        out.append(result("fmax", "m-is-class-maximum", instance, ok, witness))
        out.append(result(
            "fmax", "m-fixes-identity", instance, wedge.m(wedge.identity) == wedge.identity
        ))
        ok, witness = True, None
        xwords = shortest_words(group, ctx.xgens)
        for s in elems:
            term = element_term(ctx, s, xwords)
            if term_letters(term) - {l.name for l in ctx.xgens.letters}:
                ok, witness = False, f"term for {wedge.element_text(s)} uses non-plain letters"
                break
            if eval_term(term, wedge) != s:
                ok, witness = False, f"term for {wedge.element_text(s)} evaluates elsewhere"
                break
        out.append(result("fmax", "every-element-is-an-enriched-term", instance, ok, witness))
        direct = set(elems)
        generated = wedge.generated_elements()
        out.append(result(
            "fmax", "enumeration-methods-agree", instance,
            direct == generated,
            f"direct {len(direct)}, generated {len(generated)}",
        ))
    else:
        rng = ctx.rng("fmax-sampled")
        ok = True
        for _ in range(ctx.cfg.samples):
            word = ctx.random_word(rng, ctx.ygens, 2 * group.order)
            s = wedge.eval_word(word)
            ms = wedge.m(s)
            if not (wedge.leq(s, ms) and wedge.m(ms) == ms and wedge.sigma(s, ms)):
                ok = False
                break
        out.append(result("fmax", "m-dominates-class-sampled", f"{instance}:sampled", ok))
    return out


def element_term(ctx: SuiteContext, s: ExpansionElement, xwords: dict[int, Word]) -> Term:
    """An enriched term over the plain letters that evaluates to a closed element.

    Reads off a spanning path over the extended alphabet and spells each
    barred letter as the class maximum of a plain word for its group element.
    """
    path = ctx.cayley_y.spanning_path(s.graph, s.point)
    node: Term = One()
    for lname, exp in path.label():
        letter = ctx.ygens.letter(lname)
        if letter.barred:
            factor: Term = MOp(word_term(xwords[letter.image]))
        else:
            factor = Gen(lname)
        if exp < 0:
            factor = Inv(factor)
        node = factor if isinstance(node, One) else Mul(node, factor)
    return node


def suite_isomorphism(ctx: SuiteContext) -> list[CheckResult]:
    """Erasing barred edges is an isomorphism onto the unrestricted expansion."""
    out = []
    group = ctx.group
    wedge, f_fam = ctx.wedge, ctx.f_family
    instance = group.name
    rng = ctx.rng("isomorphism")
    small = (
        ctx.enumerable(wedge)
        and ctx.enumerable(f_fam)
        and len(wedge.family_graphs()) * group.order <= 6000
    )
    if small:
        welems = wedge.elements()
        felems = f_fam.elements()
        image = [f_map(wedge, s) for s in welems]
        ok = len(set(image)) == len(welems) and set(image) == set(felems)
        out.append(result("isomorphism", "bijective", instance, ok,
                          f"{len(set(image))} images for {len(felems)} targets"))
        ok = f_map(wedge, wedge.identity) == f_fam.identity
        out.append(result("isomorphism", "preserves-identity", instance, ok))
        ok = all(
            f_map(wedge, wedge.generator(l.name)) == f_fam.generator(l.name)
            for l in ctx.xgens.letters
        )
        out.append(result("isomorphism", "preserves-generators", instance, ok))
        ok = all(f_map(wedge, wedge.inv(s)) == f_fam.inv(f_map(wedge, s)) for s in welems)
        out.append(result("isomorphism", "preserves-inverse", instance, ok))
        ok = all(f_map(wedge, wedge.m(s)) == f_fam.m(f_map(wedge, s)) for s in welems)
        out.append(result("isomorphism", "preserves-m", instance, ok))
        ok = all(
            f_inverse(wedge, f_map(wedge, s)) == s for s in welems
        ) and all(f_map(wedge, f_inverse(wedge, s)) == s for s in felems)
        out.append(result("isomorphism", "inverse-map-roundtrip", instance, ok))
        fcache = {s: f_map(wedge, s) for s in welems}
        ok, witness = True, None
        for s, t in _pairs(welems, MAX_EXHAUSTIVE_PAIRS, rng):
            if fcache.get(u := wedge.mul(s, t)) is None:
                fcache[u] = f_map(wedge, u)
            if fcache[u] != f_fam.mul(fcache[s], fcache[t]):
                ok, witness = False, f"multiplicativity fails at ({wedge.element_text(s)}, {wedge.element_text(t)})"
                break
        out.append(result("isomorphism", "multiplicative", instance, ok, witness))
        graphs = wedge.family_graphs()
        ok = True
        for a, b in _pairs(graphs, 200_000, rng):
            left = f_map(wedge, ExpansionElement(wedge.graph_meet(a, b), 0))
            right = f_fam.graph_meet(
                f_map(wedge, ExpansionElement(a, 0)).graph,
                f_map(wedge, ExpansionElement(b, 0)).graph,
            )
            if left.graph != right:
                ok = False
                break
        out.append(result("isomorphism", "semilattice-compatible", instance, ok))
    else:
        count = ctx.cfg.samples
        seen: dict[ExpansionElement, ExpansionElement] = {}
        ok_hom = ok_inj = ok_round = True
        for _ in range(count):
            ws = wedge.eval_word(ctx.random_word(rng, ctx.ygens, 8))
            wt = wedge.eval_word(ctx.random_word(rng, ctx.ygens, 8))
            fs, ft = f_map(wedge, ws), f_map(wedge, wt)
            if f_map(wedge, wedge.mul(ws, wt)) != f_fam.mul(fs, ft):
                ok_hom = False
            if f_map(wedge, wedge.inv(ws)) != f_fam.inv(fs):
                ok_hom = False
            if f_map(wedge, wedge.m(ws)) != f_fam.m(fs):
                ok_hom = False
            if seen.setdefault(fs, ws) != ws:
                ok_inj = False
            if f_inverse(wedge, fs) != ws:
                ok_round = False
        out.append(result("isomorphism", "multiplicative", f"{instance}:sampled", ok_hom))
        out.append(result("isomorphism", "injective-on-sample", f"{instance}:sampled", ok_inj))
        out.append(result("isomorphism", "inverse-map-roundtrip", f"{instance}:sampled", ok_round))
    return out


def _universal_targets(ctx: SuiteContext) -> list[tuple[str, TargetContext]]:
    """Fixture targets: the group itself, the reified unrestricted expansion,
    and hand-built F-inverse monoids that are not expansions."""
    group, xgens = ctx.group, ctx.xgens
    letters = tuple(l.name for l in xgens.letters)
    targets: list[tuple[str, TargetContext]] = []

    def try_add(label: str, monoid: FiniteInverseMonoid) -> None:
        analysis = analyze(monoid)
        words = shortest_words(group, xgens)
        nu = tuple(
            analysis.class_of[monoid.eval_word(words[g])] for g in group.elements()
        )
        try:
            targets.append((label, TargetContext(monoid, group, xgens, nu, analysis=analysis)))
        except NuNotCanonical:
            pass

    try_add("self", group_as_monoid(group, xgens))
    if ctx.enumerable(ctx.f_family) and len(ctx.f_family.elements()) <= MAX_REIFY:
        try_add("reified-F", to_table(ctx.f_family, name=f"{group.name}-F"))
    if letters:
        try_add("chain2", chain2(letters))
    if len(letters) >= 2:
        try_add("chain3", chain3(letters))
        try_add("flat4", flat4_monoid())
    return targets


def suite_universal(ctx: SuiteContext) -> list[CheckResult]:
    """Canonical morphisms out of the expansions, and the closure factorization."""
    out = []
    group = ctx.group
    report = Report()
    targets = _universal_targets(ctx)
    if ctx.enumerable(ctx.m_family):
        for label, target in targets:
            if not target.analysis.e_unitary:
                continue
            morphism, rep = canonical_morphism(
                ctx.m_family, target, seed=ctx.cfg.seed
            )
            report.extend(rep.results)
            if label == "self":
                ok = all(v == s.point for s, v in morphism.mapping.items())
                report.add(result("universal", "projection-to-group", f"{group.name}:self", ok))
    for label, target in targets:
        if not target.analysis.f_inverse:
            continue
        _images, rep = closure_quotient_report(
            group, ctx.xgens, target,
            word_len=ctx.cfg.word_len,
            pair_samples=min(ctx.cfg.samples, 2000),
            seed=ctx.cfg.seed,
        )
        report.extend(rep.results)
    # saturation steps, edge by edge
    if ctx.enumerable(ctx.my_family) and group.order <= 3:
        graphs = ctx.my_family.family_graphs()
        for label, target in targets:
            if not target.analysis.f_inverse:
                continue
            lookup = target.extended_lookup(ctx.ygens)
            exhaustive = label == "reified-F"
            rng = ctx.rng(f"universal-steps:{label}")
            ok, witness = True, None
            checked = 0
            if exhaustive:
                cases = (
                    (graph, a, b, g)
                    for graph in graphs
                    for a in sorted(graph.vertices)
                    for b in sorted(graph.vertices)
                    for g in sorted(graph.vertices)
                )
            else:
                cases = (
                    (
                        (graph := rng.choice(graphs)),
                        rng.choice(sorted(graph.vertices)),
                        rng.choice(sorted(graph.vertices)),
                        rng.choice(sorted(graph.vertices)),
                    )
                    for _ in range(2000)
                )
            for graph, a, b, g in cases:
                good, wit = single_edge_step_check(
                    ctx.cayley_y, target, lookup, graph, a, b, g
                )
                checked += 1
                if not good:
                    ok, witness = False, wit
                    break
            report.add(result(
                "universal", "single-edge-step", f"{group.name}->{target.monoid.name}",
                ok, witness if witness else f"checked {checked} cases",
            ))
    out.extend(report.results)
    return out


SUITES = {
    "semilattice": suite_semilattice,
    "expansion": suite_expansion,
    "premorphism": suite_premorphism,
    "closure": suite_closure,
    "meet": suite_meet,
    "congruence": suite_congruence,
    "fmax": suite_fmax,
    "isomorphism": suite_isomorphism,
    "universal": suite_universal,
}

SUITE_ORDER = tuple(SUITES)


def run_suites(
    group: FiniteGroup,
    xgens: GeneratorSet,
    names: list[str] | tuple[str, ...],
    cfg: SuiteConfig | None = None,
) -> Report:
    cfg = cfg or SuiteConfig()
    ctx = SuiteContext(group, xgens, cfg)
    report = Report()
    for name in names:
        report.extend(SUITES[name](ctx))
    return report
