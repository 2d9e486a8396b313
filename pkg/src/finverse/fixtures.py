"""Built-in desk-scale fixtures: small groups and hand-built inverse monoids."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .groups import (
    FiniteGroup,
    GeneratorSet,
    from_cayley_table,
    from_permutations,
    group_json_dict,
    plain_generators,
)
from .invmonoid import FiniteInverseMonoid, validate_monoid


def trivial_group() -> tuple[FiniteGroup, GeneratorSet]:
    group = from_cayley_table([[0]], {}, name="trivial")
    return group, plain_generators(group, {})


def _cyclic(n: int, name: str) -> tuple[FiniteGroup, GeneratorSet]:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    group = from_cayley_table(table, {"x": 1}, name=name)
    return group, plain_generators(group, {"x": 1})


def z2() -> tuple[FiniteGroup, GeneratorSet]:
    return _cyclic(2, "z2")


def z3() -> tuple[FiniteGroup, GeneratorSet]:
    return _cyclic(3, "z3")


def z4() -> tuple[FiniteGroup, GeneratorSet]:
    return _cyclic(4, "z4")


def klein4() -> tuple[FiniteGroup, GeneratorSet]:
    table = [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]
    group = from_cayley_table(table, {"x": 1, "y": 2}, name="klein4")
    return group, plain_generators(group, {"x": 1, "y": 2})


def z2_two_letters() -> tuple[FiniteGroup, GeneratorSet]:
    """The order-2 group generated redundantly by two letters."""
    table = [[0, 1], [1, 0]]
    group = from_cayley_table(table, {"x": 1, "y": 1}, name="z2xy")
    return group, plain_generators(group, {"x": 1, "y": 1})


def s3() -> tuple[FiniteGroup, GeneratorSet]:
    """The symmetric group on three points, from two transpositions."""
    return from_permutations({"x": [1, 0, 2], "y": [0, 2, 1]}, name="s3")


BUILTIN_GROUPS = {
    "trivial": trivial_group,
    "z2": z2,
    "z3": z3,
    "z4": z4,
    "klein4": klein4,
    "z2xy": z2_two_letters,
    "s3": s3,
}


def builtin_group(name: str) -> tuple[FiniteGroup, GeneratorSet]:
    return BUILTIN_GROUPS[name]()


def builtin_json_dict(name: str) -> dict:
    """The JSON document for a built-in group (s3 uses the permutation schema)."""
    if name == "s3":
        return {"name": "s3", "points": 3, "generators": {"x": [1, 0, 2], "y": [0, 2, 1]}}
    group, gens = builtin_group(name)
    return group_json_dict(group, gens)


def write_fixture_files(out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in BUILTIN_GROUPS:
        path = out / f"{name}.json"
        path.write_text(json.dumps(builtin_json_dict(name), indent=2) + "\n", encoding="utf-8")
        paths.append(path)
    return paths


# -- hand-built inverse monoid fixtures ------------------------------------------


def chain_monoid(levels: int, letter_images: Mapping[str, int], *, name: str | None = None) -> FiniteInverseMonoid:
    """A finite chain semilattice 0 > 1 > ... as an inverse monoid.

    Index 0 is the top (the identity); the product is the deeper index.
    Every sigma-class is the whole monoid, so chains are F-inverse with
    maximum the identity, and E-unitary since everything is idempotent.
    """
    table = tuple(tuple(max(i, j) for j in range(levels)) for i in range(levels))
    monoid = FiniteInverseMonoid(
        name or f"chain{levels}",
        table,
        tuple(range(levels)),
        0,
        tuple(letter_images.items()),
    )
    validate_monoid(monoid)
    return monoid


def chain2(letters: tuple[str, ...] = ("x",)) -> FiniteInverseMonoid:
    return chain_monoid(2, {lname: 1 for lname in letters}, name="chain2")


def chain3(letters: tuple[str, ...] = ("x", "y")) -> FiniteInverseMonoid:
    """A three-element chain; needs two letters to be generated."""
    images = {letters[0]: 1, letters[1]: 2}
    for extra in letters[2:]:
        images[extra] = 2
    return chain_monoid(3, images, name="chain3")


def flat4_monoid() -> FiniteInverseMonoid:
    """The direct product of a two-chain with the order-2 group.

    Elements are (e, g) with e in {top, low} and g in Z2, encoded as
    e + 2 g.  F-inverse and E-unitary; generated by x -> (top, 1) and
    y -> (low, 1).
    """
    def code(e: int, g: int) -> int:
        return e + 2 * g

    table = [[0] * 4 for _ in range(4)]
    for e1 in range(2):
        for g1 in range(2):
            for e2 in range(2):
                for g2 in range(2):
                    table[code(e1, g1)][code(e2, g2)] = code(max(e1, e2), (g1 + g2) % 2)
    monoid = FiniteInverseMonoid(
        "flat4",
        tuple(tuple(row) for row in table),
        tuple(range(4)),
        0,
        (("x", code(0, 1)), ("y", code(1, 1))),
    )
    validate_monoid(monoid)
    return monoid


def brandt6_monoid() -> FiniteInverseMonoid:
    """The five-element combinatorial Brandt semigroup with an identity.

    Elements: 1, e11, s (= e12), s^-1 (= e21), e22, 0.  Not E-unitary (the
    zero sits below the non-idempotent s) and not F-inverse (its single
    sigma-class has several maximal elements).  Generated by x -> s.
    """
    one, e11, s, si, e22, zero = range(6)
    table = [[zero] * 6 for _ in range(6)]
    for a in range(6):
        table[one][a] = a
        table[a][one] = a
    pairs = {
        (e11, e11): e11, (e11, s): s,
        (s, e22): s, (s, si): e11,
        (si, e11): si, (si, s): e22,
        (e22, si): si, (e22, e22): e22,
    }
    for (a, b), c in pairs.items():
        table[a][b] = c
    inv = (one, e11, si, s, e22, zero)
    monoid = FiniteInverseMonoid(
        "brandt6",
        tuple(tuple(row) for row in table),
        inv,
        one,
        (("x", s),),
    )
    validate_monoid(monoid)
    return monoid
