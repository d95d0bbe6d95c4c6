"""Exact learners for definite Horn targets.

``clh`` learns from closure and equivalence queries and outputs the
Guigues-Duquenne basis of the target.  ``afp`` is the classic learner from
standard membership and equivalence queries, in the variant that keeps, per
negative example, the strongest consequent compatible with the positive
examples seen so far; its output is equivalent to the target but not
canonical in general.

Both take any teacher-shaped object: ``clh`` needs ``cq``/``seq``, ``afp``
needs ``smq``/``seq``, plus ``arity`` and ``stats``.  Protocol-simulation
adapters from :mod:`hornlearn.reductions` satisfy the same shape, so the
learners run unchanged against other query models.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Assignment, HornFormula, Implication, _vars_of, satisfies
from .oracles import QueryStats


class ProtocolError(RuntimeError):
    """The teacher's answers broke the promises of its query protocol."""


@dataclass(frozen=True)
class TraceEvent:
    """One learner iteration: which entry changed, on which counterexample.

    `kind` is "append", "refine" or (afp only) "positive"; `hypothesis` is
    the formula whose equivalence query produced `counterexample`.
    """

    kind: str
    index: int | None
    hypothesis: HornFormula
    counterexample: Assignment


@dataclass(frozen=True)
class LearnerReport:
    """Final formula, a snapshot of the teacher's counters, and the trace."""

    output: HornFormula
    stats: QueryStats
    trace: tuple[TraceEvent, ...]


def hyp(
    negatives: list[Assignment], closures: list[Assignment], arity: int
) -> HornFormula:
    """The hypothesis for a list of negative examples: one implication
    `ones(y) -> ones(closure(y))` per entry, in list order, built from the
    memoized closures so no fresh queries are needed."""
    if len(closures) != len(negatives):
        raise ValueError(
            f"closure memo has {len(closures)} entries for {len(negatives)} examples"
        )
    imps = [Implication(y.ones(), z.ones()) for y, z in zip(negatives, closures)]
    return HornFormula(arity, imps)


def clh(teacher, refine_all: bool = False) -> LearnerReport:
    """Learn a definite Horn target from closure and equivalence queries.

    Keeps a list N of negative examples with memoized closures.  On a
    counterexample x, the first entry whose intersection with x is strictly
    smaller and still negative is replaced by that intersection; otherwise x
    is appended.  The final hypothesis is the GD basis of the target.

    Counterexamples must be negative (the hypothesis is always entailed by
    the target); receiving a positive one means the teacher is broken and
    raises :class:`ProtocolError`.  `refine_all=True` keeps scanning after a
    refinement instead of stopping at the first; only the default variant
    carries the correctness guarantee.
    """
    n = teacher.arity
    negatives: list[Assignment] = []
    closures: list[Assignment] = []
    trace: list[TraceEvent] = []
    rounds = 0
    while True:
        current = hyp(negatives, closures, n)
        answer = teacher.seq(current)
        if answer.is_yes:
            return LearnerReport(current, teacher.stats.copy(), tuple(trace))
        rounds += 1
        if rounds > 4 * (len(negatives) + 2) * (n + 2):
            raise ProtocolError("no convergence within the query budget")
        x = answer.counterexample
        if not satisfies(x, current):
            raise ProtocolError(
                f"positive counterexample {x}: the hypothesis is entailed by the "
                "target, so every counterexample must satisfy the hypothesis"
            )
        refined = False
        for i, y_i in enumerate(negatives):
            y = x & y_i
            if y < y_i:
                closed = teacher.cq(y)
                if y < closed:
                    negatives[i] = y
                    closures[i] = closed
                    trace.append(TraceEvent("refine", i, current, x))
                    refined = True
                    if not refine_all:
                        break
        if not refined:
            negatives.append(x)
            closures.append(teacher.cq(x))
            trace.append(TraceEvent("append", len(negatives) - 1, current, x))


def afp(teacher) -> LearnerReport:
    """Learn from standard membership and equivalence queries.

    Per negative example y the hypothesis carries a consequent set,
    initialized to every variable outside y and intersected with each
    positive example above y as they arrive.  Negative counterexamples
    refine the example list exactly as in `clh`, except the negativity of
    an intersection is tested with a membership query; positive ones shrink
    the consequents of the entries they cover.
    """
    n = teacher.arity
    full = (1 << n) - 1
    entries: list[Assignment] = []
    consequents: list[int] = []
    positives: list[int] = []
    trace: list[TraceEvent] = []

    def strongest_consequent(y: Assignment) -> int:
        c = full & ~y.mask
        for p in positives:
            if p & y.mask == y.mask:
                c &= p
        if c == 0:
            raise ProtocolError(
                f"no admissible consequent left for negative example {y}; "
                "the teacher's answers are inconsistent with a definite Horn target"
            )
        return c

    while True:
        current = HornFormula(
            n,
            [
                Implication(y.ones(), _vars_of(c))
                for y, c in zip(entries, consequents)
            ],
        )
        answer = teacher.seq(current)
        if answer.is_yes:
            return LearnerReport(current, teacher.stats.copy(), tuple(trace))
        x = answer.counterexample
        if satisfies(x, current):
            # satisfies the hypothesis, hence falsifies the target: negative
            refined = False
            for i, y_i in enumerate(entries):
                y = x & y_i
                if y < y_i and not teacher.smq(y):
                    entries[i] = y
                    consequents[i] = strongest_consequent(y)
                    trace.append(TraceEvent("refine", i, current, x))
                    refined = True
                    break
            if not refined:
                entries.append(x)
                consequents.append(strongest_consequent(x))
                trace.append(TraceEvent("append", len(entries) - 1, current, x))
        else:
            positives.append(x.mask)
            for i, y_i in enumerate(entries):
                if y_i.mask & x.mask == y_i.mask:
                    shrunk = consequents[i] & x.mask
                    if shrunk == 0:
                        raise ProtocolError(
                            f"positive example {x} empties the consequent of {y_i}"
                        )
                    consequents[i] = shrunk
            trace.append(TraceEvent("positive", None, current, x))
