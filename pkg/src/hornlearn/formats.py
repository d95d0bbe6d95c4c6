"""Plain-text formula files.

Grammar::

    vars: <tok> <tok> ...          header, required first
    <tok>* -> <tok>+               one implication per nonblank line
    # comment to end of line

Tokens are nonempty runs of letters, digits and underscores and must all be
declared in the header; an empty antecedent is written ``-> tok ...``.  The
serializer emits the header, then implications in list order with single
spaces, and parse(serialize(f)) == f for every valid formula.
"""

from __future__ import annotations

import re

from .core import HornFormula, Implication, default_names

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")
_ARROW = "->"


class FormulaParseError(ValueError):
    """A formula file violated the grammar; carries the offending line."""

    def __init__(self, line_no: int, message: str) -> None:
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def parse_formula(text: str) -> HornFormula:
    names: tuple[str, ...] | None = None
    index: dict[str, int] = {}
    implications = []
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            if not line.startswith("vars:"):
                raise FormulaParseError(line_no, "expected a 'vars:' header line")
            tokens = line[len("vars:") :].split()
            for tok in tokens:
                if not _TOKEN.match(tok):
                    raise FormulaParseError(line_no, f"invalid token {tok!r}")
                if tok in index:
                    raise FormulaParseError(line_no, f"duplicate token {tok!r}")
                index[tok] = len(index)
            names = tuple(tokens)
            continue
        tokens = line.split()
        if _ARROW not in tokens:
            raise FormulaParseError(line_no, "missing '->'")
        split = tokens.index(_ARROW)
        antecedent = tokens[:split]
        consequent = tokens[split + 1 :]
        if not consequent:
            raise FormulaParseError(line_no, "empty consequent")
        for tok in antecedent + consequent:
            if tok not in index:
                raise FormulaParseError(line_no, f"unknown token {tok!r}")
        implications.append(
            Implication(
                frozenset(index[t] for t in antecedent),
                frozenset(index[t] for t in consequent),
            )
        )
    if names is None:
        raise FormulaParseError(line_no + 1, "missing 'vars:' header")
    return HornFormula(len(names), implications, names)


def format_formula(formula: HornFormula) -> str:
    names = formula.names or default_names(formula.arity)
    lines = ["vars: " + " ".join(names)]
    for imp in formula.implications:
        ant = " ".join(names[i] for i in sorted(imp.antecedent))
        con = " ".join(names[i] for i in sorted(imp.consequent))
        lines.append(f"{ant} -> {con}".lstrip())
    return "\n".join(lines) + "\n"
