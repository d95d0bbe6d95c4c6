"""Core types and semantics for definite Horn formulas.

Variables are integer indices ``0 .. n-1``.  A truth assignment over n
variables is an n-bit vector; a variable set is a ``frozenset`` of indices.
The two views are interchangeable: an assignment corresponds to the set of
variables it maps to 1, and the subset order on variable sets coincides with
the bitwise order on assignments.

An implication ``antecedent -> consequent`` (consequent nonempty, antecedent
possibly empty) abbreviates the conjunction of definite Horn clauses with one
consequent variable each.  A :class:`HornFormula` is an ordered list of
implications over a fixed arity; the empty list is the constant-true function.

Forward chaining runs on integer bit masks internally.  The naive fixpoint
(repeat passes until no implication fires) is used; implications that have
fired are dropped from later passes since they stay satisfied.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_MODEL_LIMIT = 20


class ArityError(ValueError):
    """An index or vector length does not fit the ambient arity."""


def _mask_of(variables: Iterable[int], arity: int) -> int:
    mask = 0
    for v in variables:
        if not 0 <= v < arity:
            raise ArityError(f"variable index {v} out of range for arity {arity}")
        mask |= 1 << v
    return mask


def _vars_of(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _chain(mask: int, pairs: Sequence[tuple[int, int]]) -> int:
    """Forward-chaining fixpoint of `mask` over (antecedent, consequent) masks."""
    pending = list(pairs)
    fired = True
    while fired and pending:
        fired = False
        rest = []
        for a, c in pending:
            if a & mask == a:
                if c | mask != mask:
                    mask |= c
                    fired = True
            else:
                rest.append((a, c))
        pending = rest
    return mask


def _lex_key(mask: int, arity: int) -> int:
    # variable 0 is the most significant position in the lexicographic order
    key = 0
    for i in range(arity):
        key = (key << 1) | ((mask >> i) & 1)
    return key


def default_names(arity: int) -> tuple[str, ...]:
    """Printable variable tokens used when a formula carries no name table."""
    if arity <= 26:
        return tuple(string.ascii_lowercase[:arity])
    return tuple(f"x{i}" for i in range(arity))


@dataclass(frozen=True)
class Assignment:
    """An n-bit truth assignment, ordered bitwise with 0 <= 1.

    `mask` holds variable i at bit position i.  The string form writes
    variable 0 leftmost, so ``str(Assignment.from_string("10110"))`` round
    trips.  Comparisons implement the partial (not total) bitwise order.
    """

    mask: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ArityError(f"negative arity {self.n}")
        if not 0 <= self.mask < (1 << self.n):
            raise ArityError(f"mask {self.mask:#x} does not fit {self.n} bits")

    @classmethod
    def from_vars(cls, variables: Iterable[int], n: int) -> "Assignment":
        return cls(_mask_of(variables, n), n)

    @classmethod
    def from_string(cls, bits: str) -> "Assignment":
        if set(bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {bits!r}")
        mask = 0
        for i, ch in enumerate(bits):
            if ch == "1":
                mask |= 1 << i
        return cls(mask, len(bits))

    @classmethod
    def zero(cls, n: int) -> "Assignment":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "Assignment":
        return cls((1 << n) - 1, n)

    def _check(self, other: "Assignment") -> None:
        if self.n != other.n:
            raise ArityError(f"mixed lengths {self.n} and {other.n}")

    def __and__(self, other: "Assignment") -> "Assignment":
        self._check(other)
        return Assignment(self.mask & other.mask, self.n)

    def __or__(self, other: "Assignment") -> "Assignment":
        self._check(other)
        return Assignment(self.mask | other.mask, self.n)

    def __le__(self, other: "Assignment") -> bool:
        self._check(other)
        return self.mask & other.mask == self.mask

    def __lt__(self, other: "Assignment") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "Assignment") -> bool:
        return other <= self

    def __gt__(self, other: "Assignment") -> bool:
        return other < self

    def bit(self, i: int) -> bool:
        if not 0 <= i < self.n:
            raise ArityError(f"variable index {i} out of range for arity {self.n}")
        return bool(self.mask >> i & 1)

    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.n))

    def ones(self) -> frozenset[int]:
        return _vars_of(self.mask)

    @property
    def count(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return "".join("1" if self.mask >> i & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"Assignment({str(self)!r})"


@dataclass(frozen=True)
class Implication:
    """`antecedent -> consequent` over variable index sets; consequent nonempty."""

    antecedent: frozenset[int]
    consequent: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "antecedent", frozenset(self.antecedent))
        object.__setattr__(self, "consequent", frozenset(self.consequent))
        if not self.consequent:
            raise ValueError("implication consequent must be nonempty")

    def __str__(self) -> str:
        ant = " ".join(map(str, sorted(self.antecedent)))
        con = " ".join(map(str, sorted(self.consequent)))
        return f"{ant} -> {con}".strip()

    __repr__ = __str__


@dataclass(frozen=True)
class EntailmentClause:
    """A definite clause `antecedent -> head` with a single head variable."""

    antecedent: frozenset[int]
    head: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "antecedent", frozenset(self.antecedent))
        if self.head < 0:
            raise ArityError(f"negative variable index {self.head}")

    def __str__(self) -> str:
        ant = " ".join(map(str, sorted(self.antecedent)))
        return f"{ant} -> {self.head}".strip()

    __repr__ = __str__


@dataclass(frozen=True)
class HornFormula:
    """An ordered conjunction of implications over `arity` variables.

    The name table is presentation only: it is excluded from equality and
    hashing, so formulas compare by arity and implication list.
    """

    arity: int
    implications: tuple[Implication, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ArityError(f"negative arity {self.arity}")
        object.__setattr__(self, "implications", tuple(self.implications))
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.arity:
                raise ValueError(f"{len(names)} names for arity {self.arity}")
            object.__setattr__(self, "names", names)
        for imp in self.implications:
            for v in imp.antecedent | imp.consequent:
                if not 0 <= v < self.arity:
                    raise ArityError(
                        f"variable index {v} out of range for arity {self.arity}"
                    )

    @cached_property
    def _pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (_mask_of(i.antecedent, self.arity), _mask_of(i.consequent, self.arity))
            for i in self.implications
        )

    @cached_property
    def _closure_cache(self) -> dict[int, int]:
        return {}

    def close(self, mask: int) -> int:
        """Forward-chaining closure of a bit mask, memoized per formula."""
        cache = self._closure_cache
        out = cache.get(mask)
        if out is None:
            out = cache[mask] = _chain(mask, self._pairs)
        return out

    def __len__(self) -> int:
        return len(self.implications)

    def __str__(self) -> str:
        names = self.names or default_names(self.arity)

        def term(vs: frozenset[int]) -> str:
            return " ".join(names[i] for i in sorted(vs))

        body = ", ".join(
            f"{term(i.antecedent)} -> {term(i.consequent)}".strip()
            for i in self.implications
        )
        return "{" + body + "}"

    def __repr__(self) -> str:
        return f"HornFormula({self.arity}, {str(self)})"


def _check_same_arity(f: HornFormula, g: HornFormula) -> None:
    if f.arity != g.arity:
        raise ArityError(f"mixed arities {f.arity} and {g.arity}")


def closure(start: Iterable[int], formula: HornFormula) -> frozenset[int]:
    """The least superset of `start` stable under the formula's implications."""
    return _vars_of(formula.close(_mask_of(start, formula.arity)))


def subformula_same_class(start: Iterable[int], formula: HornFormula) -> HornFormula:
    """Implications whose antecedent has the same closure as `start`, in order."""
    target = formula.close(_mask_of(start, formula.arity))
    keep = [
        imp
        for imp, (a, _) in zip(formula.implications, formula._pairs)
        if formula.close(a) == target
    ]
    return HornFormula(formula.arity, keep, formula.names)


def quasi_closure(start: Iterable[int], formula: HornFormula) -> frozenset[int]:
    """Closure of `start` with the implications of its own class removed."""
    mask = _mask_of(start, formula.arity)
    cls = formula.close(mask)
    rest = [p for p in formula._pairs if formula.close(p[0]) != cls]
    return _vars_of(_chain(mask, rest))


def satisfies(x: Assignment, formula: HornFormula) -> bool:
    """True iff `x` satisfies every implication of the formula."""
    if x.n != formula.arity:
        raise ArityError(f"assignment length {x.n} vs arity {formula.arity}")
    m = x.mask
    for a, c in formula._pairs:
        if a & m == a and c & m != c:
            return False
    return True


def entails(formula: HornFormula, clause: EntailmentClause) -> bool:
    """True iff the clause head lies in the closure of its antecedent."""
    mask = _mask_of(clause.antecedent, formula.arity)
    if not clause.head < formula.arity:
        raise ArityError(
            f"variable index {clause.head} out of range for arity {formula.arity}"
        )
    return bool(formula.close(mask) >> clause.head & 1)


def _covers(f: HornFormula, g: HornFormula) -> bool:
    # every implication of g follows from f
    return all(c & f.close(a) == c for a, c in g._pairs)


def equivalent(f: HornFormula, g: HornFormula) -> bool:
    """Semantic equivalence, decided by mutual entailment of implications."""
    _check_same_arity(f, g)
    return _covers(f, g) and _covers(g, f)


def separating_assignment(f: HornFormula, g: HornFormula) -> Assignment | None:
    """An assignment satisfying exactly one of `f`, `g`; None if equivalent.

    When an implication of `f` is not entailed by `g`, the closure of its
    antecedent under `g` satisfies `g` and falsifies `f` (and symmetrically),
    so the scan below is complete.
    """
    _check_same_arity(f, g)
    for a, c in f._pairs:
        w = g.close(a)
        if c & w != c:
            return Assignment(w, f.arity)
    for a, c in g._pairs:
        w = f.close(a)
        if c & w != c:
            return Assignment(w, f.arity)
    return None


def models(formula: HornFormula, limit: int = DEFAULT_MODEL_LIMIT) -> list[Assignment]:
    """All satisfying assignments, in lexicographic order (variable 0 first).

    Refuses arities above `limit` since the scan enumerates 2**arity vectors.
    """
    n = formula.arity
    if n > limit:
        raise ValueError(f"arity {n} above brute-force limit {limit}")
    pairs = formula._pairs
    found = []
    for mask in range(1 << n):
        for a, c in pairs:
            if a & mask == a and c & mask != c:
                break
        else:
            found.append(mask)
    found.sort(key=lambda m: _lex_key(m, n))
    return [Assignment(m, n) for m in found]


def is_intersection_closed(assignments: Sequence[Assignment]) -> bool:
    """True iff the set is closed under bitwise meet.

    Small inputs use the direct pairwise scan; large sets over a small
    hypercube use a superset-meet sweep: with g(z) = meet of all members
    above z, the family is meet-closed iff every nonempty g(z) is a member.
    """
    if not assignments:
        return True
    n = assignments[0].n
    present = set()
    for x in assignments:
        if x.n != n:
            raise ArityError(f"mixed lengths {n} and {x.n}")
        present.add(x.mask)
    k = len(present)
    if n > 22 or k * k <= n << n:
        items = sorted(present)
        for i, x in enumerate(items):
            for y in items[i + 1 :]:
                if x & y not in present:
                    return False
        return True
    size = 1 << n
    meet = [-1] * size  # -1 marks "no member above z yet"
    for m in present:
        meet[m] = m
    for i in range(n):
        bit = 1 << i
        for z in range(size):
            if not z & bit:
                src = meet[z | bit]
                if src != -1:
                    cur = meet[z]
                    meet[z] = src if cur == -1 else cur & src
    return all(g == -1 or g in present for g in meet)
