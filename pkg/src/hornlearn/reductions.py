"""Simulating one query protocol with another.

Free functions implement the single-query simulations; the per-call budgets
they respect are:

=====================  =======================
simulation             inner queries per call
=====================  =======================
cq_from_emq            at most n EMQs
smq_from_emq           at most n EMQs
seq_from_eeq_emq       1 EEQ + at most n EMQs
emq_from_cq            exactly 1 CQ
smq_from_cq            exactly 1 CQ
eeq_from_seq_cq        1 SEQ + at most 1 CQ
cq_from_smq_seq        one full learner run, then none
=====================  =======================

The adapter classes wrap a teacher and expose the simulated protocol with
the same method shape, so learners run against them unchanged; each records
the inner queries spent per simulated call in an :class:`AdapterStats`.
There is no polynomial simulation of closures from memberships alone:
:func:`lower_bound_demo` plays any membership-only strategy against an
adversary that forces exponentially many queries.
"""

from __future__ import annotations

import random
import weakref
from dataclasses import dataclass, field

from .core import ArityError, Assignment, EntailmentClause, HornFormula
from .learners import afp
from .oracles import AdversarialSmqTeacher, EeqAnswer, SeqAnswer


def cq_from_emq(teacher, y: Assignment) -> Assignment:
    """Answer a closure query with one entailment membership per unset bit."""
    n = teacher.arity
    if y.n != n:
        raise ArityError(f"assignment length {y.n} vs arity {n}")
    ones = y.ones()
    mask = y.mask
    for b in range(n):
        if not mask >> b & 1 and teacher.emq(EntailmentClause(ones, b)):
            mask |= 1 << b
    return Assignment(mask, n)


def smq_from_emq(teacher, x: Assignment) -> bool:
    """Membership via entailment: x is negative iff some variable outside x
    is entailed by it.  Stops at the first positive answer."""
    n = teacher.arity
    if x.n != n:
        raise ArityError(f"assignment length {x.n} vs arity {n}")
    ones = x.ones()
    for b in range(n):
        if not x.mask >> b & 1 and teacher.emq(EntailmentClause(ones, b)):
            return False
    return True


def seq_from_eeq_emq(teacher, hypothesis: HornFormula) -> SeqAnswer:
    """Standard equivalence from one entailment equivalence query.

    A counterexample clause entailed by the target becomes the hypothesis
    closure of its antecedent (a negative assignment, no extra queries); one
    entailed by the hypothesis becomes the target closure of its antecedent,
    rebuilt from entailment memberships (a positive assignment).
    """
    answer = teacher.eeq(hypothesis)
    if answer.is_yes:
        return SeqAnswer(None)
    clause = answer.counterexample
    n = hypothesis.arity
    start = Assignment.from_vars(clause.antecedent, n)
    under_hyp = hypothesis.close(start.mask)
    if under_hyp >> clause.head & 1:
        # entailed by the hypothesis, not the target
        return SeqAnswer(cq_from_emq(teacher, start))
    return SeqAnswer(Assignment(under_hyp, n))


def emq_from_cq(teacher, clause: EntailmentClause) -> bool:
    """Entailment membership from a single closure query."""
    n = teacher.arity
    closed = teacher.cq(Assignment.from_vars(clause.antecedent, n))
    return clause.head in closed.ones()


def smq_from_cq(teacher, x: Assignment) -> bool:
    """Membership from a single closure query: positive iff already closed."""
    return teacher.cq(x) == x


def eeq_from_seq_cq(teacher, hypothesis: HornFormula) -> EeqAnswer:
    """Entailment equivalence from one standard equivalence plus one closure.

    The closure of the counterexample decides its sign.  A negative
    assignment x yields the clause `ones(x) -> v` for the lowest variable v
    gained by its target closure; a positive x yields `ones(x) -> v` for the
    lowest v gained by forward chaining under the hypothesis.
    """
    answer = teacher.seq(hypothesis)
    if answer.is_yes:
        return EeqAnswer(None)
    x = answer.counterexample
    closed = teacher.cq(x)
    if x < closed:
        gained = closed.mask & ~x.mask
    else:
        gained = hypothesis.close(x.mask) & ~x.mask
    head = (gained & -gained).bit_length() - 1
    return EeqAnswer(EntailmentClause(x.ones(), head))


_LEARNED: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def cq_from_smq_seq(teacher, y: Assignment) -> Assignment:
    """Closure queries over the standard protocol, by learning the target.

    The first call runs the `afp` learner against the teacher; the result is
    cached per teacher instance and later calls chain locally over it, so
    query counters reflect a single learning run.
    """
    learned = _LEARNED.get(teacher)
    if learned is None:
        learned = afp(teacher).output
        _LEARNED[teacher] = learned
    if y.n != learned.arity:
        raise ArityError(f"assignment length {y.n} vs arity {learned.arity}")
    return Assignment(learned.close(y.mask), learned.arity)


@dataclass
class AdapterStats:
    """Inner queries spent per simulated call, in call order."""

    calls: list[tuple[str, dict[str, int]]] = field(default_factory=list)

    def record(self, op: str, spent: dict[str, int]) -> None:
        self.calls.append((op, spent))

    def per_call(self, op: str) -> list[dict[str, int]]:
        return [spent for name, spent in self.calls if name == op]


class _Adapter:
    def __init__(self, inner) -> None:
        self.inner = inner
        self.adapter_stats = AdapterStats()

    @property
    def arity(self) -> int:
        return self.inner.arity

    @property
    def stats(self):
        return self.inner.stats

    def _run(self, op, fn, *args):
        before = self.inner.stats.as_dict()
        out = fn(self.inner, *args)
        after = self.inner.stats.as_dict()
        spent = {k: after[k] - before[k] for k in after if after[k] != before[k]}
        self.adapter_stats.record(op, spent)
        return out


class ClosureFromEntailment(_Adapter):
    """cq/smq/seq surface over a teacher answering emq and eeq."""

    def cq(self, y: Assignment) -> Assignment:
        return self._run("cq", cq_from_emq, y)

    def smq(self, x: Assignment) -> bool:
        return self._run("smq", smq_from_emq, x)

    def seq(self, hypothesis: HornFormula) -> SeqAnswer:
        return self._run("seq", seq_from_eeq_emq, hypothesis)


class EntailmentFromClosure(_Adapter):
    """emq/eeq/smq surface over a teacher answering cq and seq."""

    def emq(self, clause: EntailmentClause) -> bool:
        return self._run("emq", emq_from_cq, clause)

    def eeq(self, hypothesis: HornFormula) -> EeqAnswer:
        return self._run("eeq", eeq_from_seq_cq, hypothesis)

    def smq(self, x: Assignment) -> bool:
        return self._run("smq", smq_from_cq, x)


class StandardFromClosure(_Adapter):
    """smq/seq surface over a teacher answering cq and seq.

    Equivalence queries are native to the wrapped protocol and pass through.
    """

    def smq(self, x: Assignment) -> bool:
        return self._run("smq", smq_from_cq, x)

    def seq(self, hypothesis: HornFormula) -> SeqAnswer:
        return self._run("seq", lambda inner, h: inner.seq(h), hypothesis)


class ClosureFromStandard(_Adapter):
    """cq/seq surface over a teacher answering smq and seq."""

    def cq(self, y: Assignment) -> Assignment:
        return self._run("cq", cq_from_smq_seq, y)

    def seq(self, hypothesis: HornFormula) -> SeqAnswer:
        return self._run("seq", lambda inner, h: inner.seq(h), hypothesis)


@dataclass(frozen=True)
class LowerBoundStep:
    query: Assignment
    answer: bool
    remaining: int


@dataclass(frozen=True)
class LowerBoundReport:
    """Transcript of a membership-only attempt to pin down a closure."""

    n: int
    strategy: str
    initial_candidates: int
    steps: tuple[LowerBoundStep, ...]
    determined: bool
    invariant_held: bool

    @property
    def queries(self) -> int:
        return len(self.steps)

    @property
    def remaining(self) -> int:
        return self.steps[-1].remaining if self.steps else self.initial_candidates


LOWER_BOUND_STRATEGIES = ("exhaustive", "top-first", "random")


def lower_bound_demo(
    n: int, strategy: str = "exhaustive", seed: int | None = None
) -> LowerBoundReport:
    """Try to determine the closure of the all-zeros assignment with
    membership queries only, against the adversarial teacher.

    The closure is determined once a single candidate target remains, which
    requires ruling out all but one of the 2**n - 1 candidates; the report
    also tracks the invariant `remaining >= initial - queries` at each step.
    """
    if not 2 <= n <= 16:
        raise ValueError("supported arities are 2..16")
    if strategy not in LOWER_BOUND_STRATEGIES:
        raise ValueError(
            f"unknown strategy {strategy!r}, pick one of {LOWER_BOUND_STRATEGIES}"
        )
    adversary = AdversarialSmqTeacher(n)
    full = (1 << n) - 1
    below_top = [
        Assignment(mask, n)
        for mask in sorted(range(full), key=lambda m: _lex_key(m, n))
    ]
    if strategy == "top-first":
        order = [Assignment.full(n)] + below_top
    elif strategy == "random":
        order = list(below_top)
        random.Random(seed).shuffle(order)
    else:
        order = below_top
    steps = []
    invariant_held = True
    for x in order:
        if adversary.remaining_candidates == 1:
            break
        answer = adversary.smq(x)
        remaining = adversary.remaining_candidates
        steps.append(LowerBoundStep(x, answer, remaining))
        if remaining < adversary.initial_candidates - adversary.queries:
            invariant_held = False
    return LowerBoundReport(
        n=n,
        strategy=strategy,
        initial_candidates=adversary.initial_candidates,
        steps=tuple(steps),
        determined=adversary.remaining_candidates == 1,
        invariant_held=invariant_held,
    )


def _lex_key(mask: int, n: int) -> int:
    key = 0
    for i in range(n):
        key = (key << 1) | ((mask >> i) & 1)
    return key


__all__ = [
    "AdapterStats",
    "ClosureFromEntailment",
    "ClosureFromStandard",
    "EntailmentFromClosure",
    "LowerBoundReport",
    "LowerBoundStep",
    "LOWER_BOUND_STRATEGIES",
    "StandardFromClosure",
    "cq_from_emq",
    "cq_from_smq_seq",
    "emq_from_cq",
    "eeq_from_seq_cq",
    "lower_bound_demo",
    "seq_from_eeq_emq",
    "smq_from_cq",
    "smq_from_emq",
]
