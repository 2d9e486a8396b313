"""Abstract finite inverse monoids given by tables, and their analysis.

``analyze`` derives the idempotents, the natural partial order, the minimum
group congruence with its quotient group, E-unitarity, F-inversity and the
per-class maxima, all by brute force.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Mapping, Sequence

from .errors import InvalidInput, InvalidMonoid, NotFInverse, TooLarge, UnknownLetter
from .groups import FiniteGroup, GeneratorSet, Word

FULL_ASSOC_LIMIT = 64  # cube the order below this; Light's test above


def _derived_class_maxima(m: "FiniteInverseMonoid") -> list[int]:
    """Maxima of the sigma-classes, computed from the raw tables."""
    n = m.order
    mul = m.mul_table
    idem = [s for s in range(n) if mul[s][s] == s]
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in range(n):
        for e in idem:
            a, b = find(s), find(mul[s][e])
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for s in range(n):
        classes.setdefault(find(s), []).append(s)

    def leq(s: int, t: int) -> bool:
        return mul[mul[s][m.inv_table[s]]][t] == s

    maxima = []
    for cls in classes.values():
        tops = [s for s in cls if not any(t != s and leq(s, t) for t in cls)]
        if len(tops) == 1:
            maxima.append(tops[0])
    return maxima


@dataclass(frozen=True)
class FiniteInverseMonoid:
    name: str
    mul_table: tuple[tuple[int, ...], ...]
    inv_table: tuple[int, ...]
    identity: int
    gen_map: tuple[tuple[str, int], ...]  # assignment map, letter name -> element

    @property
    def order(self) -> int:
        return len(self.mul_table)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def gen_images(self) -> dict[str, int]:
        return dict(self.gen_map)

    def generator(self, name: str) -> int:
        try:
            return self.gen_images[name]
        except KeyError:
            raise UnknownLetter(f"unknown letter {name!r}") from None

    def eval_word(self, word: Word, lookup: Mapping[str, int] | None = None) -> int:
        """Left-to-right product of letter images; extra names via ``lookup``."""
        acc = self.identity
        for lname, exp in word:
            if lookup is not None and lname in lookup:
                img = lookup[lname]
            else:
                img = self.generator(lname)
            if exp < 0:
                img = self.inv(img)
            acc = self.mul(acc, img)
        return acc

    def __repr__(self) -> str:
        return f"FiniteInverseMonoid({self.name!r}, order={self.order})"


def validate_monoid(m: FiniteInverseMonoid) -> None:
    """Check the inverse-monoid axioms, raising InvalidMonoid with the culprit.

    Associativity uses a full triple loop on small tables and Light's test on
    the generators (plus their inverses) on larger ones, which is equivalent
    once the generators are known to generate.
    """
    n = m.order
    mul = m.mul_table
    if any(len(row) != n for row in mul) or len(m.inv_table) != n:
        raise InvalidInput("ragged monoid tables")
    if any(not (0 <= v < n) for row in mul for v in row):
        raise InvalidInput("table entry out of range")
    e = m.identity
    for s in range(n):
        if mul[e][s] != s or mul[s][e] != s:
            raise InvalidMonoid(f"identity law fails at element {s}")
    for s in range(n):
        si = m.inv_table[s]
        if mul[mul[s][si]][s] != s:
            raise InvalidMonoid(f"s s^-1 s = s fails at element {s}")
        if mul[mul[si][s]][si] != si:
            raise InvalidMonoid(f"s^-1 s s^-1 = s^-1 fails at element {s}")
        if m.inv_table[si] != s:
            raise InvalidMonoid(f"inverse is not involutive at element {s}")
    idem = [s for s in range(n) if mul[s][s] == s]
    for a in idem:
        for b in idem:
            if mul[a][b] != mul[b][a]:
                raise InvalidMonoid(f"idempotents {a} and {b} do not commute")

    # generation check; the successful set is also the basis for Light's test
    def closure(images: list[int]) -> set[int]:
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for s in frontier:
                for g in images:
                    t = mul[s][g]
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return seen

    images = sorted({img for _n, img in m.gen_map} | {m.inv_table[img] for _n, img in m.gen_map})
    if len(closure(images)) != n:
        # F-inverse monoids are generated only in the enriched signature:
        # retry with the derived class maxima adjoined to the letter images
        images = sorted(set(images) | set(_derived_class_maxima(m)))
        seen = closure(images)
        if len(seen) != n:
            missing = min(set(range(n)) - seen)
            raise InvalidMonoid(f"generators do not generate (element {missing} unreachable)")
    if n <= FULL_ASSOC_LIMIT:
        rng = range(n)
        for a in rng:
            row_a = mul[a]
            for b in rng:
                ab = row_a[b]
                row_b = mul[b]
                for c in rng:
                    if mul[ab][c] != row_a[row_b[c]]:
                        raise InvalidMonoid(f"associativity fails at ({a},{b},{c})")
    else:
        for g in images:
            col = [mul[x][g] for x in range(n)]
            row = mul[g]
            for x in range(n):
                xg = col[x]
                mxg = mul[xg]
                mx = mul[x]
                for y in range(n):
                    if mxg[y] != mx[row[y]]:
                        raise InvalidMonoid(f"associativity fails at ({x},{g},{y})")


@dataclass
class MonoidAnalysis:
    monoid: FiniteInverseMonoid
    idempotents: tuple[int, ...]
    class_of: tuple[int, ...]  # element -> sigma-class index (identity class is 0)
    classes: tuple[tuple[int, ...], ...]
    quotient: FiniteGroup
    e_unitary: bool
    f_inverse: bool
    class_max: tuple[int | None, ...]  # sigma-class -> maximum element, if any

    def leq(self, s: int, t: int) -> bool:
        m = self.monoid
        return m.mul(m.mul(s, m.inv(s)), t) == s

    def sigma(self, s: int, t: int) -> bool:
        return self.class_of[s] == self.class_of[t]

    def tau(self, class_index: int) -> int:
        top = self.class_max[class_index]
        if top is None:
            raise NotFInverse(f"sigma-class {class_index} has no maximum")
        return top


def analyze(m: FiniteInverseMonoid) -> MonoidAnalysis:
    """Brute-force structural analysis of a finite inverse monoid."""
    validate_monoid(m)
    n = m.order
    mul = m.mul_table
    idem = tuple(s for s in range(n) if mul[s][s] == s)

    # sigma is the transitive closure of s ~ s*e over idempotents e
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in range(n):
        for e in idem:
            a, b = find(s), find(mul[s][e])
            if a != b:
                parent[max(a, b)] = min(a, b)
    roots: dict[int, list[int]] = {}
    for s in range(n):
        roots.setdefault(find(s), []).append(s)
    ordered = sorted(roots.values(), key=lambda cls: (cls[0] != find(m.identity), cls[0]))
    classes = tuple(tuple(cls) for cls in ordered)
    class_of_list = [0] * n
    for ci, cls in enumerate(classes):
        for s in cls:
            class_of_list[s] = ci
    class_of = tuple(class_of_list)

    reps = [cls[0] for cls in classes]
    qtable = tuple(
        tuple(class_of[mul[a][b]] for b in reps) for a in reps
    )
    for s in range(n):
        for t in range(n):
            if class_of[mul[s][t]] != qtable[class_of[s]][class_of[t]]:
                raise InvalidMonoid(f"sigma is not a congruence at ({s},{t})")
    qinv = tuple(class_of[m.inv(rep)] for rep in reps)
    quotient = FiniteGroup(
        f"{m.name}/sigma",
        qtable,
        qinv,
        tuple(f"q{i}" for i in range(len(reps))),
    )
    for c in range(len(reps)):
        if qtable[0][c] != c or qtable[c][0] != c or qtable[c][qinv[c]] != 0:
            raise InvalidMonoid("sigma-quotient is not a group")

    def leq(s: int, t: int) -> bool:
        return mul[mul[s][m.inv_table[s]]][t] == s

    idem_set = set(idem)
    e_unitary = all(
        s in idem_set
        for e in idem
        for s in range(n)
        if leq(e, s)
    )

    class_max: list[int | None] = []
    f_inverse = True
    for cls in classes:
        maximal = [s for s in cls if not any(t != s and leq(s, t) for t in cls)]
        if len(maximal) == 1:
            class_max.append(maximal[0])
        else:
            class_max.append(None)
            f_inverse = False
    return MonoidAnalysis(
        m, idem, class_of, classes, quotient, e_unitary, f_inverse, tuple(class_max)
    )


def to_table(family, *, name: str | None = None) -> FiniteInverseMonoid:
    """Reify an enumerable expansion as an abstract table for re-analysis.

    The element indexing is the deterministic enumeration order of the family.
    """
    elems = family.elements()
    index = {s: i for i, s in enumerate(elems)}
    n = len(elems)
    cap = getattr(family, "cap", 10 ** 7)
    if n * n > cap:
        raise TooLarge(n * n, cap)
    mul_table = tuple(
        tuple(index[family.mul(s, t)] for t in elems) for s in elems
    )
    inv_table = tuple(index[family.inv(s)] for s in elems)
    gen_map = tuple(
        (letter.name, index[family.generator(letter.name)]) for letter in family.gens.letters
    )
    monoid = FiniteInverseMonoid(
        name or f"{family.group.name}-{family.flavor}",
        mul_table,
        inv_table,
        index[family.identity],
        gen_map,
    )
    validate_monoid(monoid)
    return monoid


def group_as_monoid(group: FiniteGroup, gens: GeneratorSet) -> FiniteInverseMonoid:
    """A finite group viewed as an inverse monoid (its own assignment map)."""
    return FiniteInverseMonoid(
        group.name,
        group.mul_table,
        group.inv_table,
        0,
        tuple((l.name, l.image) for l in gens.letters),
    )


def load_monoid_json(source: str | Path | dict) -> FiniteInverseMonoid:
    """Load ``{"order", "table", "inv", "identity", "generators"}`` JSON."""
    if isinstance(source, (str, Path)):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot read monoid file {source}: {exc}") from exc
    else:
        data = source
    try:
        monoid = FiniteInverseMonoid(
            data.get("name", "S"),
            tuple(tuple(row) for row in data["table"]),
            tuple(data["inv"]),
            data["identity"],
            tuple(sorted(data["generators"].items())),
        )
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"bad monoid JSON: {exc}") from exc
    if monoid.order != len(data["table"]) or data.get("order", monoid.order) != monoid.order:
        raise InvalidInput("monoid JSON order field disagrees with the table")
    validate_monoid(monoid)
    return monoid


def monoid_json_dict(m: FiniteInverseMonoid) -> dict:
    return {
        "name": m.name,
        "order": m.order,
        "table": [list(row) for row in m.mul_table],
        "inv": list(m.inv_table),
        "identity": m.identity,
        "generators": dict(m.gen_map),
    }
