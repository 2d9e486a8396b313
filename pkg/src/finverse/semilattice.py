"""Finite meet-semilattices given extensionally."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Sequence


class FiniteSemilattice:
    """A finite meet-semilattice: an element tuple plus a meet function.

    The partial order is derived from the meet: x <= y iff meet(x, y) == x.
    """

    def __init__(self, elements: Iterable[Hashable], meet: Callable):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        self.meet = meet

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    def leq(self, x, y) -> bool:
        return self.meet(x, y) == x

    def top(self):
        """The maximum element, or None if there is none."""
        for t in self.elements:
            if all(self.leq(x, t) for x in self.elements):
                return t
        return None


def semilattice_law_failures(
    meet: Callable,
    items: Sequence,
    pairs: Iterable[tuple],
    triples: Iterable[tuple],
) -> list[str]:
    """Witness strings for violated idempotence/commutativity/associativity."""
    failures = []
    for x in items:
        if meet(x, x) != x:
            failures.append(f"idempotence fails at {x!r}")
            break
    for x, y in pairs:
        if meet(x, y) != meet(y, x):
            failures.append(f"commutativity fails at ({x!r}, {y!r})")
            break
    for x, y, z in triples:
        if meet(meet(x, y), z) != meet(x, meet(y, z)):
            failures.append(f"associativity fails at ({x!r}, {y!r}, {z!r})")
            break
    return failures
