"""Teachers answering the five query protocols against a hidden target.

Query kinds, named by their classic protocol ids:

* ``smq`` - standard membership: does this assignment satisfy the target?
* ``seq`` - standard equivalence: YES, or an assignment satisfying exactly
  one of hypothesis and target.
* ``cq``  - closure: the least superset of the queried assignment that
  satisfies the target.
* ``emq`` - entailment membership: does the target entail this clause?
* ``eeq`` - entailment equivalence: YES, or a clause entailed by exactly one
  of hypothesis and target.

A :class:`Teacher` wraps an immutable target formula with per-protocol
answer logic, query counters and a counterexample-selection strategy.
Equivalence-style answers prefer negative counterexamples (ones satisfying
the hypothesis): the scan walks the target's implications first.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .core import (
    ArityError,
    Assignment,
    EntailmentClause,
    HornFormula,
    Implication,
    _vars_of,
    entails,
    satisfies,
    separating_assignment,
)

STRATEGIES = ("first", "random", "minimal")

# the "minimal" strategy enumerates candidate clauses; keep it to small arities
MINIMAL_STRATEGY_MAX_ARITY = 12


@dataclass
class QueryStats:
    """Monotone per-protocol query counters."""

    smq: int = 0
    seq: int = 0
    cq: int = 0
    emq: int = 0
    eeq: int = 0

    def copy(self) -> "QueryStats":
        return QueryStats(self.smq, self.seq, self.cq, self.emq, self.eeq)

    def as_dict(self) -> dict[str, int]:
        return {
            "smq": self.smq,
            "seq": self.seq,
            "cq": self.cq,
            "emq": self.emq,
            "eeq": self.eeq,
        }


@dataclass(frozen=True)
class SeqAnswer:
    """YES (counterexample None) or a separating assignment."""

    counterexample: Assignment | None = None

    @property
    def is_yes(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class EeqAnswer:
    """YES (counterexample None) or a clause entailed by exactly one side."""

    counterexample: EntailmentClause | None = None

    @property
    def is_yes(self) -> bool:
        return self.counterexample is None


class Teacher:
    """Answers queries about a fixed target definite Horn formula.

    `strategy` picks among valid counterexamples: "first" scans implications
    in list order, "random" draws uniformly from the candidates (a seed is
    required), "minimal" returns a bitwise-minimal counterexample and is
    available only for arities up to MINIMAL_STRATEGY_MAX_ARITY.

    Counters mutate, so confine an instance to one logical thread; the
    target itself is never modified.
    """

    def __init__(
        self, target: HornFormula, strategy: str = "first", seed: int | None = None
    ) -> None:
        if strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {strategy!r}, pick one of {STRATEGIES}")
        if strategy == "random" and seed is None:
            raise ValueError("the random strategy needs an explicit seed")
        if strategy == "minimal" and target.arity > MINIMAL_STRATEGY_MAX_ARITY:
            raise ValueError(
                f"minimal strategy supports arity <= {MINIMAL_STRATEGY_MAX_ARITY}"
            )
        self.target = target
        self.strategy = strategy
        self.stats = QueryStats()
        self._rng = random.Random(seed) if seed is not None else None

    @property
    def arity(self) -> int:
        return self.target.arity

    def _check_assignment(self, x: Assignment) -> None:
        if x.n != self.target.arity:
            raise ArityError(f"assignment length {x.n} vs arity {self.target.arity}")

    def _check_formula(self, h: HornFormula) -> None:
        if h.arity != self.target.arity:
            raise ArityError(f"hypothesis arity {h.arity} vs target {self.target.arity}")

    def smq(self, x: Assignment) -> bool:
        self._check_assignment(x)
        self.stats.smq += 1
        return satisfies(x, self.target)

    def cq(self, y: Assignment) -> Assignment:
        self._check_assignment(y)
        self.stats.cq += 1
        return Assignment(self.target.close(y.mask), self.target.arity)

    def emq(self, clause: EntailmentClause) -> bool:
        answer = entails(self.target, clause)  # validates the clause
        self.stats.emq += 1
        return answer

    def seq(self, hypothesis: HornFormula) -> SeqAnswer:
        self._check_formula(hypothesis)
        self.stats.seq += 1
        return SeqAnswer(self._assignment_counterexample(hypothesis))

    def eeq(self, hypothesis: HornFormula) -> EeqAnswer:
        self._check_formula(hypothesis)
        self.stats.eeq += 1
        return EeqAnswer(self._clause_counterexample(hypothesis))

    # counterexample selection

    def _assignment_counterexample(self, hyp: HornFormula) -> Assignment | None:
        # negative side first: a target implication not entailed by the
        # hypothesis turns into the hypothesis-closure of its antecedent,
        # which satisfies the hypothesis and falsifies the target
        if self.strategy == "first":
            return separating_assignment(self.target, hyp)
        n = self.target.arity
        negatives = [
            hyp.close(a) for a, c in self.target._pairs if c & hyp.close(a) != c
        ]
        if negatives:
            return Assignment(self._pick_mask(negatives), n)
        positives = [
            self.target.close(a) for a, c in hyp._pairs if c & self.target.close(a) != c
        ]
        if positives:
            return Assignment(self._pick_mask(positives), n)
        return None

    def _pick_mask(self, candidates: list[int]) -> int:
        if self.strategy == "random":
            return self._rng.choice(candidates)
        if self.strategy == "minimal":
            # every counterexample contains the closure of some violated
            # implication's antecedent, so the bitwise-minimal ones are
            # minimal elements of the candidate closures themselves
            n = self.target.arity
            return min(candidates, key=lambda m: (m.bit_count(), _lex(m, n)))
        return candidates[0]

    def _clause_counterexample(self, hyp: HornFormula) -> EntailmentClause | None:
        if self.strategy == "minimal":
            return self._minimal_clause(hyp)
        sides = (
            (self.target, hyp),  # clause entailed by the target, not the hypothesis
            (hyp, self.target),
        )
        for holder, other in sides:
            found: list[tuple[int, int]] = []
            for a, c in holder._pairs:
                gap = c & ~other.close(a)
                if gap:
                    if self.strategy == "first":
                        return EntailmentClause(_vars_of(a), _low_bit(gap))
                    found.append((a, gap))
            if found:
                a, gap = self._rng.choice(found)
                head = self._rng.choice(_bit_list(gap))
                return EntailmentClause(_vars_of(a), head)
        return None

    def _minimal_clause(self, hyp: HornFormula) -> EntailmentClause | None:
        # ascending antecedents (by size, then position), smallest head wins
        n = self.target.arity
        for size in range(n + 1):
            for combo in itertools.combinations(range(n), size):
                mask = 0
                for v in combo:
                    mask |= 1 << v
                gap = self.target.close(mask) ^ hyp.close(mask)
                if gap:
                    return EntailmentClause(frozenset(combo), _low_bit(gap))
        return None


def _low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _bit_list(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _lex(mask: int, n: int) -> int:
    key = 0
    for i in range(n):
        key = (key << 1) | ((mask >> i) & 1)
    return key


class AdversarialSmqTeacher:
    """A membership oracle that commits to no target until forced.

    Answers are positive only for the all-ones assignment.  The still
    consistent candidate targets are the two-model functions `family_member(x)`
    for the assignments x not yet queried; each distinct query below the top
    rules out exactly one of them, so pinning down the closure of the
    all-zeros assignment costs an exponential number of queries.
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.queries = 0
        self._ruled_out: set[int] = set()

    @property
    def initial_candidates(self) -> int:
        return (1 << self.n) - 1

    @property
    def remaining_candidates(self) -> int:
        return self.initial_candidates - len(self._ruled_out)

    def smq(self, x: Assignment) -> bool:
        if x.n != self.n:
            raise ArityError(f"assignment length {x.n} vs arity {self.n}")
        self.queries += 1
        if x.mask == (1 << self.n) - 1:
            return True
        self._ruled_out.add(x.mask)
        return False

    def is_ruled_out(self, x: Assignment) -> bool:
        return x.mask in self._ruled_out


def family_member(x: Assignment) -> HornFormula:
    """The definite Horn formula whose only models are `x` and the top.

    Variables set in x are forced unconditionally; any variable outside x
    pulls in everything.  Undefined for the all-ones assignment, whose
    formula would need just one model.
    """
    n = x.n
    if x.mask == (1 << n) - 1:
        raise ValueError("no two-model formula exists for the all-ones assignment")
    everything = frozenset(range(n))
    imps = [Implication(frozenset(), frozenset({v})) for v in sorted(x.ones())]
    imps += [Implication(frozenset({w}), everything) for w in range(n) if not x.bit(w)]
    return HornFormula(n, imps)
