"""Finite groups with 0-based element indices, generator sets, and words.

Element 0 is always the identity.  Generating sets come in two kinds: a plain
set of named letters, and an extended set that additionally carries one
"barred" letter per group element (named ``@<element>``), including the
identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import (
    GeneratorsDoNotGenerate,
    InvalidInput,
    NoIdentity,
    NoInverse,
    NotAPermutation,
    NotAssociative,
    ParseError,
    UnknownLetter,
)

PLAIN = "plain"
EXTENDED = "extended"

# A word is a sequence of (letter name, exponent) with exponent +1 or -1.
Word = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by total multiplication and inverse tables."""

    name: str
    mul_table: tuple[tuple[int, ...], ...]
    inv_table: tuple[int, ...]
    element_names: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.mul_table)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.order)

    def element_index(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise ParseError(f"unknown element name {name!r}") from None

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Letter:
    """A named generator letter with its image in the group."""

    name: str
    image: int
    barred: bool = False


@dataclass(frozen=True)
class GeneratorSet:
    kind: str  # PLAIN or EXTENDED
    letters: tuple[Letter, ...]

    @cached_property
    def by_name(self) -> dict[str, Letter]:
        return {letter.name: letter for letter in self.letters}

    @cached_property
    def barred_name_of(self) -> dict[int, str]:
        """Group element index -> name of its barred letter (extended sets only)."""
        return {letter.image: letter.name for letter in self.letters if letter.barred}

    def letter(self, name: str) -> Letter:
        try:
            return self.by_name[name]
        except KeyError:
            raise UnknownLetter(f"unknown letter {name!r}") from None

    def names(self) -> tuple[str, ...]:
        return tuple(letter.name for letter in self.letters)

    def x_letters(self) -> tuple[Letter, ...]:
        return tuple(letter for letter in self.letters if not letter.barred)


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(n))


def _validate_table(table: Sequence[Sequence[int]], names: tuple[str, ...]) -> tuple[int, ...]:
    """Check group axioms on a raw table and return the derived inverse table."""
    n = len(table)
    if n == 0:
        raise InvalidInput("empty multiplication table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise InvalidInput(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise InvalidInput(f"entry ({i},{j}) = {v!r} out of range 0..{n - 1}")
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise NoIdentity(f"index 0 is not a two-sided identity (witness {names[i]})")
    inv = []
    for i in range(n):
        for j in range(n):
            if table[i][j] == 0 and table[j][i] == 0:
                inv.append(j)
                break
        else:
            raise NoInverse(f"element {names[i]} has no two-sided inverse")
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAssociative(
                        f"({names[a]}*{names[b]})*{names[c]} != {names[a]}*({names[b]}*{names[c]})"
                    )
    return tuple(inv)


def generated_subgroup(group: FiniteGroup, images: Iterable[int]) -> frozenset[int]:
    """Closure of the given elements under multiplication, starting from the identity."""
    seen = {0}
    frontier = [0]
    images = tuple(images)
    while frontier:
        nxt = []
        for a in frontier:
            for g in images:
                b = group.mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


def from_cayley_table(
    table: Sequence[Sequence[int]],
    gens: Mapping[str, int],
    *,
    name: str = "G",
    element_names: Sequence[str] | None = None,
) -> FiniteGroup:
    """Build and validate a finite group from a raw multiplication table.

    Index 0 must be the identity; the inverse table is derived by scanning
    rows for 0.  The generator images must generate the whole group.
    """
    n = len(table)
    names = tuple(element_names) if element_names is not None else _default_names(n)
    if len(names) != n:
        raise InvalidInput(f"{len(names)} element names for order {n}")
    inv = _validate_table(table, names)
    group = FiniteGroup(name, tuple(tuple(row) for row in table), inv, names)
    missing = set(group.elements()) - generated_subgroup(group, gens.values())
    if missing:
        witness = names[min(missing)]
        raise GeneratorsDoNotGenerate(f"element {witness} is not a product of the generators")
    return group


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p * q)(i) = p(q(i)): q acts first.
    return tuple(p[q[i]] for i in range(len(p)))


def from_permutations(
    gens: Mapping[str, Sequence[int]], *, name: str = "G"
) -> tuple[FiniteGroup, GeneratorSet]:
    """Close a set of permutations of 0..m-1 under composition.

    Elements are indexed breadth-first over products in generator order, with
    the identity first, so the numbering is reproducible.  Returns the group
    together with the plain generator set mapping each name to its image.
    """
    if not gens:
        raise InvalidInput("at least one permutation generator is required")
    perms = {}
    m = None
    for gname, seq in gens.items():
        p = tuple(seq)
        if m is None:
            m = len(p)
        if len(p) != m or sorted(p) != list(range(m)):
            raise NotAPermutation(f"generator {gname!r} is not a permutation of 0..{m - 1}")
        perms[gname] = p
    identity = tuple(range(m))
    elems: list[tuple[int, ...]] = [identity]
    index = {identity: 0}
    pos = 0
    while pos < len(elems):
        p = elems[pos]
        for gname in gens:
            q = _compose(p, perms[gname])
            if q not in index:
                index[q] = len(elems)
                elems.append(q)
        pos += 1
    n = len(elems)
    table = tuple(tuple(index[_compose(a, b)] for b in elems) for a in elems)
    group = from_cayley_table(table, {g: index[perms[g]] for g in gens}, name=name)
    genset = plain_generators(group, {g: index[perms[g]] for g in gens})
    return group, genset


def plain_generators(group: FiniteGroup, images: Mapping[str, int]) -> GeneratorSet:
    """A plain generator set; the images must generate the whole group."""
    letters = tuple(Letter(lname, img) for lname, img in images.items())
    for letter in letters:
        if not 0 <= letter.image < group.order:
            raise InvalidInput(f"generator {letter.name!r} image {letter.image} out of range")
    missing = set(group.elements()) - generated_subgroup(group, (l.image for l in letters))
    if missing:
        witness = group.element_names[min(missing)]
        raise GeneratorsDoNotGenerate(f"element {witness} is not a product of the generators")
    return GeneratorSet(PLAIN, letters)


def extend_generators(group: FiniteGroup, xgens: GeneratorSet) -> GeneratorSet:
    """Adjoin one barred letter ``@<element>`` per group element, identity included."""
    if xgens.kind != PLAIN:
        raise InvalidInput("extend_generators expects a plain generator set")
    barred = tuple(
        Letter(f"@{group.element_names[g]}", g, barred=True) for g in group.elements()
    )
    return GeneratorSet(EXTENDED, xgens.letters + barred)


def eval_word(group: FiniteGroup, gens: GeneratorSet, word: Word) -> int:
    """Left-to-right product of the letter images; the empty word is the identity."""
    acc = 0
    for lname, exp in word:
        img = gens.letter(lname).image
        if exp < 0:
            img = group.inv(img)
        acc = group.mul(acc, img)
    return acc


def invert_word(word: Word) -> Word:
    return tuple((lname, -exp) for lname, exp in reversed(word))


def parse_word(text: str) -> Word:
    """Parse whitespace-separated tokens ``name`` or ``name^-1`` into a word."""
    out = []
    for tok in text.split():
        if tok.endswith("^-1"):
            lname, exp = tok[:-3], -1
        else:
            lname, exp = tok, 1
        if not lname or "^" in lname:
            raise ParseError(f"malformed word token {tok!r}")
        out.append((lname, exp))
    return tuple(out)


def format_word(word: Word) -> str:
    return " ".join(lname if exp > 0 else f"{lname}^-1" for lname, exp in word)


def load_group_json(source: str | Path | dict) -> tuple[FiniteGroup, GeneratorSet]:
    """Load a group from a JSON file or dict.

    Two schemas are accepted: a table schema ``{"name", "elements", "table",
    "generators": {name: index}}`` and a permutation schema ``{"points",
    "generators": {name: [images]}}``.
    """
    if isinstance(source, (str, Path)):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot read group file {source}: {exc}") from exc
    else:
        data = source
    if not isinstance(data, dict):
        raise InvalidInput("group JSON must be an object")
    try:
        if "table" in data:
            group = from_cayley_table(
                data["table"],
                data.get("generators", {}),
                name=data.get("name", "G"),
                element_names=data.get("elements"),
            )
            return group, plain_generators(group, data.get("generators", {}))
        if "points" in data:
            return from_permutations(data["generators"], name=data.get("name", "G"))
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"bad group JSON: {exc}") from exc
    raise InvalidInput("group JSON must contain either a 'table' or a 'points' key")


def group_json_dict(group: FiniteGroup, gens: GeneratorSet) -> dict:
    """Serializable table-schema dict for a group and its plain generators."""
    return {
        "name": group.name,
        "elements": list(group.element_names),
        "table": [list(row) for row in group.mul_table],
        "generators": {l.name: l.image for l in gens.x_letters()},
    }
