"""Canonical eventually periodic subsets of the natural numbers.

Every set handled by this package is eventually periodic: membership is
listed explicitly on a finite prefix ``[0, threshold)`` and given by
residue classes modulo ``period`` from ``threshold`` on.  Construction
always canonicalizes (minimal period first, then minimal threshold), so
structural equality coincides with extensional equality and values can
be hashed and ordered reliably.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import lcm
from typing import Iterable, Optional


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _minimal_period(period: int, residues: frozenset[int]) -> int:
    """Smallest divisor of ``period`` under which ``residues`` is shift-invariant."""
    for d in _divisors(period):
        if all((r in residues) == ((r + d) % period in residues) for r in range(period)):
            return d
    return period


@dataclass(frozen=True)
class NatSet:
    """An eventually periodic subset of {0, 1, 2, ...} in canonical form.

    ``n`` is a member iff ``prefix[n]`` when ``n < threshold`` and
    ``n % period in residues`` otherwise.  Direct construction rejects
    non-canonical field values; the module constructors and the set
    operations canonicalize for you.
    """

    threshold: int
    prefix: tuple[bool, ...]
    period: int
    residues: frozenset[int]

    def __post_init__(self) -> None:
        if self.threshold < 0 or len(self.prefix) != self.threshold:
            raise ValueError("prefix length must equal threshold")
        if self.period < 1:
            raise ValueError("period must be at least 1")
        if not all(0 <= r < self.period for r in self.residues):
            raise ValueError("residues must lie in [0, period)")
        if _minimal_period(self.period, self.residues) != self.period:
            raise ValueError("period is not minimal")
        if self.threshold > 0 and self.prefix[-1] == (
            (self.threshold - 1) % self.period in self.residues
        ):
            raise ValueError("threshold is not minimal")

    # -- membership -------------------------------------------------

    def contains(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return self.prefix[n]
        return n % self.period in self.residues

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def is_empty(self) -> bool:
        return self.threshold == 0 and not self.residues

    def is_finite(self) -> bool:
        """True iff the periodic tail is empty (canonical form has no residues)."""
        return not self.residues

    def min_element(self) -> Optional[int]:
        for n, bit in enumerate(self.prefix):
            if bit:
                return n
        if not self.residues:
            return None
        L, p = self.threshold, self.period
        return min(L + (r - L) % p for r in self.residues)

    # -- set algebra ------------------------------------------------

    def intersect(self, other: NatSet) -> NatSet:
        return _combine(self, other, lambda x, y: x and y)

    def union(self, other: NatSet) -> NatSet:
        return _combine(self, other, lambda x, y: x or y)

    __and__ = intersect
    __or__ = union

    def shift(self, offset: int) -> NatSet:
        """Translate every member by ``offset``; negatives fall off the set."""
        bound = max(self.threshold + offset, 0)
        bits = [(n - offset) >= 0 and self.contains(n - offset) for n in range(bound)]
        residues = {(r + offset) % self.period for r in self.residues}
        return _canonical(bits, self.period, residues)

    def issubset(self, other: NatSet) -> bool:
        return all(not self.contains(n) or other.contains(n)
                   for n in range(agreement_bound(self, other)))

    def is_inductive(self) -> bool:
        """Closed under successor; the nonempty inductive sets are the tails."""
        return self.shift(-1).intersect(self) == self

    def down_shifts(self) -> list[tuple[int, NatSet]]:
        """All distinct left translates, each with its least shift amount.

        ``shift(-k)`` repeats with period ``period`` once ``k`` reaches
        ``threshold``, so scanning ``[0, threshold + period)`` sees every
        value.
        """
        seen: dict[NatSet, int] = {}
        out: list[tuple[int, NatSet]] = []
        for k in range(self.threshold + self.period):
            s = self.shift(-k)
            if s not in seen:
                seen[s] = k
                out.append((k, s))
        return out

    def has_shift_dichotomy(self) -> bool:
        """True iff every proper left translate meets the set in all of it or none.

        Infinite sets with this property are exactly the single arithmetic
        progressions (see ``as_progression``).
        """
        for k in range(1, self.threshold + self.period + 1):
            met = self.shift(-k).intersect(self)
            if met != self and not met.is_empty():
                return False
        return True

    def as_progression(self) -> Optional[tuple[int, int]]:
        """Return (start, step) if the set is exactly {start + step*t : t >= 0}."""
        if self.is_finite():
            return None
        start = self.min_element()
        assert start is not None
        if make_progression(start, self.period) == self:
            return (start, self.period)
        return None

    # -- ordering / display ------------------------------------------

    def sort_key(self) -> tuple:
        return (self.threshold, self.period, self.prefix, tuple(sorted(self.residues)))

    def __str__(self) -> str:
        return format_set(self)

    def __repr__(self) -> str:
        return f"NatSet({format_set(self)!r})"


def _combine(a: NatSet, b: NatSet, keep) -> NatSet:
    bound = max(a.threshold, b.threshold)
    p = lcm(a.period, b.period)
    bits = [keep(a.contains(n), b.contains(n)) for n in range(bound)]
    residues = {r for r in range(p)
                if keep(r % a.period in a.residues, r % b.period in b.residues)}
    return _canonical(bits, p, residues)


def _canonical(bits: list[bool], period: int, residues: Iterable[int]) -> NatSet:
    p = _minimal_period(period, frozenset(residues))
    res = frozenset(r % p for r in residues)
    bound = len(bits)
    while bound > 0 and bits[bound - 1] == ((bound - 1) % p in res):
        bound -= 1
    return NatSet(bound, tuple(bits[:bound]), p, res)


EMPTY = NatSet(0, (), 1, frozenset())
OMEGA = NatSet(0, (), 1, frozenset({0}))


def make_finite(elements: Iterable[int]) -> NatSet:
    members = set()
    for n in elements:
        if n < 0:
            raise ValueError("members must be nonnegative")
        members.add(n)
    if not members:
        return EMPTY
    top = max(members)
    return _canonical([n in members for n in range(top + 1)], 1, frozenset())


def make_tail(start: int) -> NatSet:
    """The set of all naturals >= start."""
    if start < 0:
        raise ValueError("start must be nonnegative")
    return _canonical([False] * start, 1, frozenset({0}))


def make_progression(start: int, step: int) -> NatSet:
    """The arithmetic progression {start + step*t : t >= 0}."""
    if start < 0:
        raise ValueError("start must be nonnegative")
    if step < 1:
        raise ValueError("step must be at least 1")
    return _canonical([False] * start, step, frozenset({start % step}))


def agreement_bound(a: NatSet, b: NatSet) -> int:
    """Membership agreement below this bound implies equality."""
    return max(a.threshold, b.threshold) + lcm(a.period, b.period)


def min_shift_superset(a: NatSet, b: NatSet) -> Optional[int]:
    """Least k with a a subset of shift(b, -k), or None if no k works.

    Translates of ``b`` cycle once k reaches ``b.threshold``, so the scan
    below is complete and the first hit is the global minimum.
    """
    for k in range(b.threshold + b.period):
        if a.issubset(b.shift(-k)):
            return k
    return None


def enumerate_sets(max_threshold: int, max_period: int) -> list[NatSet]:
    """All canonical sets with threshold and period within the given bounds."""
    found = set()
    for bound in range(max_threshold + 1):
        for bits in product((False, True), repeat=bound):
            for p in range(1, max_period + 1):
                for picks in product((False, True), repeat=p):
                    res = frozenset(r for r, b in enumerate(picks) if b)
                    found.add(_canonical(list(bits), p, res))
    return sorted(found, key=NatSet.sort_key)


# -- text form ------------------------------------------------------
#
# set  := term ('|' term)*                      union of terms
# term := 'w'                                   all naturals
#       | '[' nat ')'                           tail from nat
#       | nat '+' nat 'w'                       arithmetic progression
#       | '{' nat (',' nat)* '}' | '{}'         finite set
#       | 'empty'
# Whitespace between tokens is ignored.


class SetParseError(ValueError):
    """Malformed expression; carries the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Scanner:
    """Cursor over expression text, shared by the set, family and element grammars."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def match(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.match(ch):
            self.fail(f"expected '{ch}'")

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a number")
        return int(self.text[start:self.pos])

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def fail(self, message: str) -> None:
        raise SetParseError(message, self.pos)

    def set_expr(self) -> NatSet:
        out = self._term()
        while self.match("|"):
            out = out.union(self._term())
        return out

    def _term(self) -> NatSet:
        ch = self.peek()
        if ch.isalpha():
            at = self.pos
            name = self.word()
            if name == "w":
                return OMEGA
            if name == "empty":
                return EMPTY
            raise SetParseError(f"unknown keyword '{name}'", at)
        if ch == "[":
            self.expect("[")
            start = self.nat()
            self.expect(")")
            return make_tail(start)
        if ch == "{":
            self.expect("{")
            if self.match("}"):
                return EMPTY
            members = [self.nat()]
            while self.match(","):
                members.append(self.nat())
            self.expect("}")
            return make_finite(members)
        if ch.isdigit():
            start = self.nat()
            self.expect("+")
            at = self.pos
            step = self.nat()
            if step < 1:
                raise SetParseError("progression step must be at least 1", at)
            self.expect("w")
            return make_progression(start, step)
        self.fail("expected a set expression")
        raise AssertionError("unreachable")


def parse_set(text: str) -> NatSet:
    sc = Scanner(text)
    out = sc.set_expr()
    if not sc.done():
        sc.fail("unexpected trailing input")
    return out


def format_set(s: NatSet) -> str:
    """Canonical text form; ``parse_set`` inverts it."""
    if s.is_empty():
        return "empty"
    if s == OMEGA:
        return "w"
    parts = []
    explicit = [str(n) for n in range(s.threshold) if s.prefix[n]]
    if explicit:
        parts.append("{" + ",".join(explicit) + "}")
    if s.residues:
        if s.period == 1:
            parts.append(f"[{s.threshold})")
        else:
            starts = sorted(s.threshold + (r - s.threshold) % s.period
                            for r in s.residues)
            parts.extend(f"{i0}+{s.period}w" for i0 in starts)
    return "|".join(parts)
