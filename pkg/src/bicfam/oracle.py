"""Brute-force verification of the closed-form predicates on finite windows.

Every check recomputes a property from raw multiplication identities or a
bounded exhaustive search and compares the outcome with the closed-form
predicate; the oracle side never calls the predicate under test.  Products
of window elements are evaluated exactly even when their indices leave the
window, so no false failures appear at the edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .classify import is_e_unitary
from .family import close
from .natset import (OMEGA, enumerate_sets, make_finite, make_progression,
                     make_tail)
from .semigroup import (Element, SemigroupCtx, inverse, is_idempotent,
                        sigma_image)


@dataclass
class CheckReport:
    name: str
    instances: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: instances={self.instances}"
                f" failures={len(self.failures)} time={self.elapsed:.2f}s")


def _finish(name: str, instances: int, failures: list, t0: float) -> CheckReport:
    return CheckReport(name, instances, failures, time.perf_counter() - t0)


def _leq_right(ctx: SemigroupCtx, a: Element, b: Element) -> bool:
    # a = b * (a^-1 * a), one of the standard order definitions
    return ctx.multiply(b, ctx.multiply(inverse(a), a)) == a


def _leq_left(ctx: SemigroupCtx, a: Element, b: Element) -> bool:
    # a = (a * a^-1) * b, the mirror form
    return ctx.multiply(ctx.multiply(a, inverse(a)), b) == a


def check_associativity(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    mul = ctx.multiply
    failures = []
    for a in window:
        for b in window:
            ab = mul(a, b)
            for c in window:
                left = mul(ab, c)
                right = mul(a, mul(b, c))
                if left != right:
                    failures.append(((a, b, c), left, right))
    return _finish("associativity", len(window) ** 3, failures, t0)


def check_inverse_axioms(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    mul = ctx.multiply
    failures = []
    for x in window:
        y = inverse(x)
        if mul(mul(x, y), x) != x or mul(mul(y, x), y) != y:
            failures.append((x, x, mul(mul(x, y), x)))
    return _finish("inverse-axioms", len(window), failures, t0)


def check_idempotent_commutation(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    mul = ctx.multiply
    failures = []
    raw_idem = []
    for x in window:
        raw = mul(x, x) == x
        if raw:
            raw_idem.append(x)
        if is_idempotent(x) != raw:
            failures.append((x, raw, is_idempotent(x)))
    for e in raw_idem:
        for f in raw_idem:
            if mul(e, f) != mul(f, e):
                failures.append(((e, f), mul(e, f), mul(f, e)))
    return _finish("idempotent-commutation",
                   len(window) + len(raw_idem) ** 2, failures, t0)


def check_combinatorial(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    mul = ctx.multiply
    rp = {x: mul(x, inverse(x)) for x in window}
    lp = {x: mul(inverse(x), x) for x in window}
    failures = []
    for a in window:
        for b in window:
            same_h_class = rp[a] == rp[b] and lp[a] == lp[b]
            if same_h_class != (a == b):
                failures.append(((a, b), a == b, same_h_class))
    return _finish("combinatorial", len(window) ** 2, failures, t0)


def check_order(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    failures = []
    for a in window:
        for b in window:
            described = ctx.natural_leq(a, b)
            right = _leq_right(ctx, a, b)
            left = _leq_left(ctx, a, b)
            if not (described == right == left):
                failures.append(((a, b), (right, left), described))
    return _finish("natural-order", len(window) ** 2, failures, t0)


def _window_reach(ctx: SemigroupCtx, max_index: int) -> int:
    spans = [m.threshold + m.period for m in ctx.family.members if not m.is_empty()]
    return max_index + max(spans, default=0)


def check_green(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    """All five relations against multiplication-only oracles.

    R and L compare the idempotent projections x*x^-1 and x^-1*x.  D hunts
    for a middle element sharing both projections.  J searches, in both
    directions, for an element D-equivalent to one side and below the
    other, over a window widened enough to contain every possible witness
    (indices shift by at most threshold+period of a member set).
    """
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    wide = ctx.truncate(_window_reach(ctx, max_index))
    mul = ctx.multiply
    rp = {x: mul(x, inverse(x)) for x in wide}
    lp = {x: mul(inverse(x), x) for x in wide}
    achievable = {(rp[c], lp[c]) for c in wide}
    below = {b: [c for c in wide if _leq_right(ctx, c, b)] for b in window}

    def half(a: Element, b: Element) -> bool:
        # does the D-class of a reach below b?
        return any((rp[a], lp[c]) in achievable for c in below[b])

    failures = []
    for a in window:
        for b in window:
            expected = {
                "R": rp[a] == rp[b],
                "L": lp[a] == lp[b],
                "H": rp[a] == rp[b] and lp[a] == lp[b],
                "D": (rp[a], lp[b]) in achievable,
                "J": half(a, b) and half(b, a),
            }
            for rel, want in expected.items():
                got = ctx.green(rel, a, b)
                if got != want:
                    failures.append(((rel, a, b), want, got))
    return _finish("green-relations", 5 * len(window) ** 2, failures, t0)


def check_sigma(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    """Group-congruence classes against the defining idempotent witnesses."""
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    mul = ctx.multiply
    raw_idem = [e for e in window if mul(e, e) == e]
    failures = []
    for a in window:
        for b in window:
            described = ctx.sigma_equiv(a, b)
            witnessed = any(mul(e, a) == mul(e, b) for e in raw_idem)
            if described != witnessed:
                failures.append(((a, b), witnessed, described))
            elif not ctx.has_zero and described != (sigma_image(a) == sigma_image(b)):
                failures.append(((a, b), described, "index-difference fiber"))
    instances = len(window) ** 2
    if not ctx.has_zero:
        for a in window:
            for b in window:
                p = mul(a, b)
                if sigma_image(p) != sigma_image(a) + sigma_image(b):
                    failures.append(((a, b), sigma_image(a) + sigma_image(b),
                                     sigma_image(p)))
        for e in raw_idem:
            if sigma_image(e) != 0:
                failures.append((e, 0, sigma_image(e)))
        instances += len(window) ** 2 + len(raw_idem)
    return _finish("sigma-congruence", instances, failures, t0)


def e_unitary_violation(ctx: SemigroupCtx,
                        max_index: int) -> Optional[tuple[Element, Element]]:
    """First (idempotent, strictly-above non-idempotent) pair in the window."""
    window = ctx.truncate(max_index)
    mul = ctx.multiply
    for e in window:
        if mul(e, e) != e:
            continue
        for s in window:
            if mul(s, s) != s and _leq_right(ctx, e, s):
                return (e, s)
    return None


def check_e_unitary(ctx: SemigroupCtx, max_index: int) -> CheckReport:
    t0 = time.perf_counter()
    window = ctx.truncate(max_index)
    violation = e_unitary_violation(ctx, max_index)
    failures = []
    if is_e_unitary(ctx):
        if violation is not None:
            failures.append((violation, "no violation", violation))
    elif violation is None and max_index >= 1:
        failures.append(((), "a violation witness", None))
    return _finish("e-unitary", len(window) ** 2, failures, t0)


def check_shift_dichotomy(max_threshold: int, max_period: int) -> CheckReport:
    """Shift dichotomy agrees with being a single arithmetic progression,
    exhaustively over all canonical infinite sets within the bounds."""
    t0 = time.perf_counter()
    infinite = [s for s in enumerate_sets(max_threshold, max_period)
                if not s.is_finite()]
    failures = []
    for s in infinite:
        dichotomy = s.has_shift_dichotomy()
        progression = s.as_progression() is not None
        if dichotomy != progression:
            failures.append((s, progression, dichotomy))
    return _finish("shift-dichotomy", len(infinite), failures, t0)


def run_all(ctx: SemigroupCtx, max_index: int) -> list[CheckReport]:
    return [
        check_associativity(ctx, max_index),
        check_inverse_axioms(ctx, max_index),
        check_idempotent_commutation(ctx, max_index),
        check_combinatorial(ctx, max_index),
        check_order(ctx, max_index),
        check_green(ctx, max_index),
        check_sigma(ctx, max_index),
        check_e_unitary(ctx, max_index),
    ]


def default_corpus() -> list[tuple[str, SemigroupCtx]]:
    """Six small families exercising every structural case."""
    recipes = [
        ("bicyclic", [OMEGA]),
        ("unit-point", [make_finite([0])]),
        ("progression", [make_progression(2, 3)]),
        ("nested-tails", [make_tail(2), OMEGA]),
        ("even-odd", [make_progression(0, 2), make_progression(1, 2)]),
        ("steps", [make_finite([0, 1]), make_finite([0])]),
    ]
    return [(name, SemigroupCtx(close(gens))) for name, gens in recipes]
