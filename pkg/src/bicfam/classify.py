"""Structural classification: identity, simplicity, bisimplicity, isomorphism type."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .family import family_union
from .natset import NatSet, format_set, make_finite, min_shift_superset
from .semigroup import Element, SemigroupCtx, Zero, format_element


class IsoKind(enum.Enum):
    TRIVIAL = "Trivial"
    BICYCLIC = "Bicyclic"
    BICYCLIC_WITH_ZERO = "BicyclicWithZero"
    MATRIX_UNITS = "MatrixUnits"
    PROGRESSION = "Progression"
    OTHER = "Other"


@dataclass(frozen=True)
class IsoType:
    """Recognized isomorphism type; ``step`` is set only for progressions."""

    kind: IsoKind
    step: Optional[int] = None

    def __str__(self) -> str:
        if self.kind is IsoKind.PROGRESSION:
            return f"Progression({self.step})"
        return self.kind.value


@dataclass(frozen=True)
class Classification:
    has_zero: bool
    identity: Optional[Element]
    simple: Optional[bool]        # populated iff there is no zero
    zero_simple: Optional[bool]   # populated iff there is a zero
    bisimple: bool
    zero_bisimple: bool
    e_unitary: bool
    iso_type: IsoType
    bicyclic_copy: Optional[NatSet]


def identity_element(ctx: SemigroupCtx) -> Optional[Element]:
    """The two-sided identity (0, 0, union of members), when that union is an
    inductive member; no identity exists otherwise."""
    top = family_union(ctx.family)
    if top.is_inductive() and top in ctx.family:
        return ctx.element(0, 0, top)
    return None


def is_simple(ctx: SemigroupCtx) -> bool:
    """No proper two-sided ideals; only meaningful without a zero."""
    if ctx.has_zero:
        raise ValueError("simplicity test applies to zero-free families;"
                         " use is_zero_simple")
    return _mutually_shift_covered(ctx.family.members)


def is_zero_simple(ctx: SemigroupCtx) -> bool:
    """The zero ideal is the only proper one; only meaningful with a zero."""
    if not ctx.has_zero:
        raise ValueError("zero-simplicity test applies to families with the"
                         " empty set; use is_simple")
    nonempty = [m for m in ctx.family.members if not m.is_empty()]
    if not nonempty:
        return False  # one-element semigroup: every product is the zero
    return _mutually_shift_covered(nonempty)


def _mutually_shift_covered(sets) -> bool:
    return all(min_shift_superset(a, b) is not None
               for a in sets for b in sets)


def is_bisimple(ctx: SemigroupCtx) -> bool:
    return len(ctx.family.members) == 1


def is_zero_bisimple(ctx: SemigroupCtx) -> bool:
    return ctx.has_zero and len(ctx.family.members) == 2


def is_e_unitary(ctx: SemigroupCtx) -> bool:
    """Idempotents sitting below an element force it to be idempotent.

    Holds exactly when there is no zero, or the semigroup is the trivial
    one (zero below any non-idempotent triple is a violation otherwise).
    """
    if not ctx.has_zero:
        return True
    return all(m.is_empty() for m in ctx.family.members)


def find_bicyclic_copy(ctx: SemigroupCtx) -> Optional[NatSet]:
    """A nonempty inductive member, smallest minimum first; the elements
    over it form an isomorphic copy of the bicyclic monoid."""
    candidates = [m for m in ctx.family.members
                  if not m.is_empty() and m.is_inductive()]
    if not candidates:
        return None
    return min(candidates, key=lambda m: (m.min_element(), m.sort_key()))


def iso_type(ctx: SemigroupCtx) -> IsoType:
    members = ctx.family.members
    nonempty = [m for m in members if not m.is_empty()]
    if not nonempty:
        return IsoType(IsoKind.TRIVIAL)
    if not ctx.has_zero:
        if len(members) == 1:
            # a closed singleton family is automatically inductive
            assert members[0].is_inductive()
            return IsoType(IsoKind.BICYCLIC)
        return IsoType(IsoKind.OTHER)
    if len(nonempty) == 1:
        f = nonempty[0]
        if f.is_finite():
            # closedness forces a finite member of a two-member family
            # to be a single point
            assert f == make_finite([f.min_element()])
            return IsoType(IsoKind.MATRIX_UNITS)
        if f.is_inductive():
            return IsoType(IsoKind.BICYCLIC_WITH_ZERO)
        prog = f.as_progression()
        assert prog is not None and prog[1] >= 2
        return IsoType(IsoKind.PROGRESSION, prog[1])
    return IsoType(IsoKind.OTHER)


def map_to_bicyclic(e: Element) -> tuple[int, int]:
    """Project onto the bicyclic index pair; only a bijective homomorphism
    when the family is a singleton."""
    if isinstance(e, Zero):
        raise ValueError("the bicyclic monoid has no zero")
    return (e.i, e.j)


def map_to_matrix_units(e: Element) -> Optional[tuple[int, int]]:
    """Project onto a matrix unit, None standing for the matrix-units zero."""
    if isinstance(e, Zero):
        return None
    return (e.i, e.j)


def bicyclic_product(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """Reference product of the bicyclic monoid on index pairs."""
    i1, j1 = x
    i2, j2 = y
    if j1 <= i2:
        return (i1 - j1 + i2, j2)
    return (i1, j1 - i2 + j2)


def matrix_units_product(x: Optional[tuple[int, int]],
                         y: Optional[tuple[int, int]]) -> Optional[tuple[int, int]]:
    """Reference product of the countable matrix-units semigroup."""
    if x is None or y is None:
        return None
    return (x[0], y[1]) if x[1] == y[0] else None


def classify(ctx: SemigroupCtx) -> Classification:
    return Classification(
        has_zero=ctx.has_zero,
        identity=identity_element(ctx),
        simple=None if ctx.has_zero else is_simple(ctx),
        zero_simple=is_zero_simple(ctx) if ctx.has_zero else None,
        bisimple=is_bisimple(ctx),
        zero_bisimple=is_zero_bisimple(ctx),
        e_unitary=is_e_unitary(ctx),
        iso_type=iso_type(ctx),
        bicyclic_copy=find_bicyclic_copy(ctx),
    )


def report_dict(ctx: SemigroupCtx, c: Classification) -> dict:
    """Flat, JSON-friendly view of a classification."""
    return {
        "members": [format_set(m) for m in ctx.family.members],
        "has_zero": c.has_zero,
        "identity": None if c.identity is None else format_element(ctx, c.identity),
        "simple": c.simple,
        "zero_simple": c.zero_simple,
        "bisimple": c.bisimple,
        "zero_bisimple": c.zero_bisimple,
        "e_unitary": c.e_unitary,
        "iso_type": str(c.iso_type),
        "bicyclic_copy": None if c.bicyclic_copy is None else format_set(c.bicyclic_copy),
    }
