"""The extension semigroup built from index pairs and a closed set family.

Elements are triples ``(i, j, F)`` with ``i, j`` naturals and ``F`` a
nonempty family member, plus an absorbing zero when the family contains
the empty set (triples whose set collapses to empty are identified with
that zero).  The product of two triples realigns the index pairs the way
the bicyclic monoid does and intersects the correspondingly shifted sets:

    (i1,j1,F1) * (i2,j2,F2) = (i1-j1+i2, j2, shift(F1, j1-i2) & F2)   if j1 <= i2
                              (i1, j1-i2+j2, F1 & shift(F2, i2-j1))   if j1 >= i2

Closure of the family guarantees the resulting set is again a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .family import OmegaFamily
from .natset import NatSet, Scanner, format_set, min_shift_superset


@dataclass(frozen=True)
class Zero:
    """The absorbing zero element."""

    def __repr__(self) -> str:
        return "Zero"


ZERO = Zero()


class Triple(NamedTuple):
    i: int
    j: int
    f: int  # index into the family's member tuple


Element = Union[Zero, Triple]

GREEN_RELATIONS = ("R", "L", "H", "D", "J")


def inverse(e: Element) -> Element:
    """Swap the index pair; ``x * inverse(x) * x == x`` always holds."""
    if isinstance(e, Zero):
        return ZERO
    return Triple(e.j, e.i, e.f)


def is_idempotent(e: Element) -> bool:
    return isinstance(e, Zero) or e.i == e.j


def sigma_image(e: Element) -> int:
    """Index difference i - j, the label of the element's group-congruence class."""
    if isinstance(e, Zero):
        raise ValueError("the index difference is undefined for the zero element")
    return e.i - e.j


class SemigroupCtx:
    """A closed family together with the derived element algebra.

    Immutable after construction; elements carry member indices, so they
    are only meaningful relative to the context that produced them.
    """

    def __init__(self, family: OmegaFamily):
        self.family = family
        self.has_zero = family.has_empty
        self._index = {s: k for k, s in enumerate(family.members)}
        self._down_meet_cache: dict[tuple[int, int, int], int] = {}
        self._mul_cache: dict[tuple[Element, Element], Element] = {}

    # -- element handling ---------------------------------------------

    def element(self, i: int, j: int, s: NatSet) -> Element:
        """Build the element with the given set, mapping an empty set to zero."""
        if i < 0 or j < 0:
            raise ValueError("indices must be nonnegative")
        if s.is_empty():
            if not self.has_zero:
                raise ValueError("the family has no zero element")
            return ZERO
        k = self._index.get(s)
        if k is None:
            raise ValueError(f"set {format_set(s)} is not a family member")
        return Triple(i, j, k)

    def set_of(self, e: Triple) -> NatSet:
        return self.family.members[e.f]

    def check_element(self, e: Element) -> None:
        if isinstance(e, Zero):
            if not self.has_zero:
                raise ValueError("the family has no zero element")
            return
        if e.i < 0 or e.j < 0:
            raise ValueError("indices must be nonnegative")
        if not 0 <= e.f < len(self.family.members):
            raise ValueError("set index out of range for this family")
        if self.family.members[e.f].is_empty():
            raise ValueError("triples may not carry the empty set")

    def truncate(self, max_index: int) -> list[Element]:
        """All elements with both indices <= max_index, zero first."""
        out: list[Element] = [ZERO] if self.has_zero else []
        for f, s in enumerate(self.family.members):
            if s.is_empty():
                continue
            out.extend(Triple(i, j, f)
                       for i in range(max_index + 1)
                       for j in range(max_index + 1))
        return out

    # -- algebra --------------------------------------------------------

    def _down_meet(self, fa: int, n: int, fb: int) -> int:
        """Member index of shift(members[fa], -n) & members[fb]; -1 for empty."""
        key = (fa, n, fb)
        got = self._down_meet_cache.get(key)
        if got is None:
            members = self.family.members
            s = members[fa].shift(-n).intersect(members[fb])
            if s.is_empty():
                if not self.has_zero:
                    raise RuntimeError("closed zero-free family produced an empty set")
                got = -1
            else:
                got = self._index[s]
            self._down_meet_cache[key] = got
        return got

    def multiply(self, a: Element, b: Element) -> Element:
        if isinstance(a, Zero) or isinstance(b, Zero):
            return ZERO
        key = (a, b)
        got = self._mul_cache.get(key)
        if got is not None:
            return got
        i1, j1, f1 = a
        i2, j2, f2 = b
        if j1 <= i2:
            k = self._down_meet(f1, i2 - j1, f2)
            out: Element = ZERO if k < 0 else Triple(i1 - j1 + i2, j2, k)
            if j1 == i2:
                # the two formula branches overlap here and must agree
                k2 = self._down_meet(f2, j1 - i2, f1)
                alt: Element = ZERO if k2 < 0 else Triple(i1, j1 - i2 + j2, k2)
                assert out == alt
        else:
            k = self._down_meet(f2, j1 - i2, f1)
            out = ZERO if k < 0 else Triple(i1, j1 - i2 + j2, k)
        self._mul_cache[key] = out
        return out

    def natural_leq(self, a: Element, b: Element) -> bool:
        """The natural partial order: a = b * e for some idempotent e.

        Zero is the minimum.  Two triples compare iff both index
        differences equal the same k >= 0 and the lower set fits inside
        the upper set pulled down by k.
        """
        if isinstance(a, Zero):
            return True
        if isinstance(b, Zero):
            return False
        k = a.i - b.i
        if k != a.j - b.j or k < 0:
            return False
        return self.set_of(a).issubset(self.set_of(b).shift(-k))

    def green(self, relation: str, a: Element, b: Element) -> bool:
        """Decide one of Green's relations R, L, H, D, J.

        Zero is alone in its class for every relation.  For triples:
        R needs equal left indices and equal sets, L equal right indices
        and equal sets, H both, D equal sets, and J asks for shifts of
        each set covering the other.
        """
        if relation not in GREEN_RELATIONS:
            raise ValueError(f"unknown Green relation {relation!r}")
        a_zero, b_zero = isinstance(a, Zero), isinstance(b, Zero)
        if a_zero or b_zero:
            return a_zero and b_zero
        if relation == "R":
            return a.i == b.i and a.f == b.f
        if relation == "L":
            return a.j == b.j and a.f == b.f
        if relation == "H":
            return a == b
        if relation == "D":
            return a.f == b.f
        sa, sb = self.set_of(a), self.set_of(b)
        return (min_shift_superset(sa, sb) is not None
                and min_shift_superset(sb, sa) is not None)

    def sigma_equiv(self, a: Element, b: Element) -> bool:
        """Least-group-congruence equivalence; trivial when a zero is present."""
        if self.has_zero:
            return True
        assert isinstance(a, Triple) and isinstance(b, Triple)
        return a.i - a.j == b.i - b.j


def format_element(ctx: SemigroupCtx, e: Element) -> str:
    if isinstance(e, Zero):
        return "0"
    return f"({e.i},{e.j},{format_set(ctx.set_of(e))})"


def parse_element(ctx: SemigroupCtx, text: str) -> Element:
    """Parse '(i,j,SET)' or '0'; the set must belong to the context's family."""
    sc = Scanner(text)
    ch = sc.peek()
    if ch == "0":
        sc.pos += 1
        if not sc.done():
            sc.fail("unexpected trailing input")
        if not ctx.has_zero:
            raise ValueError("the family has no zero element")
        return ZERO
    sc.expect("(")
    i = sc.nat()
    sc.expect(",")
    j = sc.nat()
    sc.expect(",")
    s = sc.set_expr()
    sc.expect(")")
    if not sc.done():
        sc.fail("unexpected trailing input")
    return ctx.element(i, j, s)
