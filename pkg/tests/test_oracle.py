"""The verification harness itself: passing runs, witness extraction,
and the ability to notice a deliberately wrong predicate."""

from bicfam import oracle
from bicfam.family import close
from bicfam.natset import OMEGA, make_finite, make_tail
from bicfam.semigroup import ZERO, SemigroupCtx


def test_corpus_passes_all_checks():
    for name, ctx in oracle.default_corpus():
        for report in oracle.run_all(ctx, 3):
            assert report.passed, (name, report.name, report.failures[:3])
            assert report.instances > 0


def test_reports_are_deterministic():
    ctx = SemigroupCtx(close([make_tail(2), OMEGA]))
    first = oracle.run_all(ctx, 2)
    second = oracle.run_all(ctx, 2)
    assert [(r.name, r.instances, r.failures) for r in first] == \
        [(r.name, r.instances, r.failures) for r in second]


def test_trivial_window_passes():
    for _, ctx in oracle.default_corpus():
        for report in oracle.run_all(ctx, 0):
            assert report.passed


def test_shift_dichotomy_check():
    report = oracle.check_shift_dichotomy(3, 4)
    assert report.passed
    assert report.instances > 100


def test_e_unitary_violation_witness():
    ctx = SemigroupCtx(close([make_finite([0])]))
    got = oracle.e_unitary_violation(ctx, 4)
    assert got is not None
    e, s = got
    assert e == ZERO
    assert s == ctx.element(0, 1, make_finite([0]))
    assert ctx.natural_leq(e, s)
    assert ctx.multiply(s, s) != s
    # zero-free families never produce one
    assert oracle.e_unitary_violation(SemigroupCtx(close([OMEGA])), 4) is None


def test_summary_lines():
    report = oracle.check_shift_dichotomy(2, 2)
    line = report.summary()
    assert line.startswith("PASS shift-dichotomy:")
    assert "failures=0" in line


class _LyingCtx(SemigroupCtx):
    """Deliberately wrong D predicate, to prove the harness can fail."""

    def green(self, relation, a, b):
        if relation == "D":
            return True
        return super().green(relation, a, b)


def test_harness_detects_disagreement():
    ctx = _LyingCtx(close([make_tail(2), OMEGA]))
    report = oracle.check_green(ctx, 1)
    assert not report.passed
    assert all(rel == "D" for (rel, _, _), _, _ in report.failures)
    assert "FAIL" in report.summary()
