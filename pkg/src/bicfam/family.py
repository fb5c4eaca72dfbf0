"""Finite families of eventually periodic sets closed under shifted intersections.

A family is closed when for any two members F1, F2 and any n >= 0 the set
F1 & shift(F2, -n) again belongs to the family.  Only finitely many shift
values exist per member, so both the closure computation and the closure
test are finite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .natset import EMPTY, NatSet, Scanner, format_set


def is_closed(sets: Iterable[NatSet]) -> bool:
    pool = frozenset(sets)
    for f2 in pool:
        translates = [s for _, s in f2.down_shifts()]
        for f1 in pool:
            if any(f1.intersect(t) not in pool for t in translates):
                return False
    return True


@dataclass(frozen=True)
class OmegaFamily:
    """A closed family; members are distinct and kept in a fixed order."""

    members: tuple[NatSet, ...]

    def __post_init__(self) -> None:
        if not self.members:
            raise ValueError("a family needs at least one member")
        if list(self.members) != sorted(set(self.members), key=NatSet.sort_key):
            raise ValueError("members must be distinct and canonically ordered")
        if not is_closed(self.members):
            raise ValueError("family is not closed under shifted intersections")

    @property
    def has_empty(self) -> bool:
        return any(m.is_empty() for m in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[NatSet]:
        return iter(self.members)

    def __contains__(self, s: NatSet) -> bool:
        return s in self.members


def close(generators: Iterable[NatSet]) -> OmegaFamily:
    """Least closed family containing the generators.

    Terminates because every candidate lies in the finite lattice of
    intersections of the generators' finitely many down shifts.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    members = set(gens)
    queue = deque((a, b) for a in members for b in members)
    translates: dict[NatSet, list[NatSet]] = {}

    def shifts_of(s: NatSet) -> list[NatSet]:
        if s not in translates:
            translates[s] = [t for _, t in s.down_shifts()]
        return translates[s]

    while queue:
        f1, f2 = queue.popleft()
        for t in shifts_of(f2):
            c = f1.intersect(t)
            if c not in members:
                for x in members:
                    queue.append((c, x))
                    queue.append((x, c))
                queue.append((c, c))
                members.add(c)
    return OmegaFamily(tuple(sorted(members, key=NatSet.sort_key)))


def from_members(sets: Iterable[NatSet]) -> OmegaFamily:
    """Wrap already-closed sets as a family; raises if they are not closed."""
    return OmegaFamily(tuple(sorted(set(sets), key=NatSet.sort_key)))


def family_union(family: OmegaFamily) -> NatSet:
    out = EMPTY
    for m in family.members:
        out = out.union(m)
    return out


def parse_family(text: str) -> list[NatSet]:
    """Parse a generator list: set expressions separated by commas,
    optionally wrapped as family{ ... }."""
    sc = Scanner(text)
    wrapped = False
    if sc.peek().isalpha():
        at = sc.pos
        name = sc.word()
        if name == "family":
            wrapped = True
            sc.expect("{")
        else:
            sc.pos = at
    gens = [sc.set_expr()]
    while sc.match(","):
        gens.append(sc.set_expr())
    if wrapped:
        sc.expect("}")
    if not sc.done():
        sc.fail("unexpected trailing input")
    return gens


def format_family(family: OmegaFamily) -> str:
    return "family{" + ", ".join(format_set(m) for m in family.members) + "}"
