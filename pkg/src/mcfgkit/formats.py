"""Plain-text formats for grammars, preorders, and words.

Grammar files hold one rule per line::

    # comments run to the end of the line
    start: S
    S($1.1 $2.1) <- S($1.1), T($2.1)
    S(a) <-
    P(a $1.1, b $1.2) <- P($1.1, $1.2)
    P(_, _) <-

Pattern components are whitespace-separated tokens — ``$i.j`` is component
``j`` of right-hand side child ``i`` (both 1-based), a lone ``_`` is the
empty component, anything else is a terminal letter.  Right-hand side
arguments only declare each child's rank; they may be written as the
matching ``$i.j`` references or as bare placeholder names.  The optional
``start:`` header names the start symbol, which otherwise defaults to the
first rule's left-hand side.

Preorder files consist of a ``m: <size>`` header plus one ``i <= j`` line
per related pair; the stored relation is the reflexive-transitive closure of
the listed pairs.  Words are whitespace-separated letters, with a lone ``_``
for the empty word.

All parse errors are :class:`mcfgkit.errors.FormatError` values carrying the
file name, line, and column.
"""

from __future__ import annotations

import re

from .errors import FormatError
from .grammar import (
    MCFG,
    NonTerminal,
    Pattern,
    ProductionRule,
    Variable,
    Word,
)
from .preorders import Preorder, closure

_RESERVED = set("(),#$")
_VARIABLE_RE = re.compile(r"\$(\d+)\.(\d+)\Z")
_TOKEN_RE = re.compile(r"\S+")
_PAIR_RE = re.compile(r"\s*(\d+)\s*<=\s*(\d+)\s*\Z")


def _check_name(name: str, kind: str, filename: str, line: int, column: int) -> None:
    if not name:
        raise FormatError(f"missing {kind}", filename, line, column)
    if name == "_":
        raise FormatError(f"'_' is reserved and cannot be a {kind}", filename, line, column)
    bad = next((c for c in name if c in _RESERVED or c.isspace()), None)
    if bad is not None:
        raise FormatError(
            f"{kind} {name!r} contains reserved character {bad!r}", filename, line, column
        )


def _check_letter(token: str, filename: str, line: int, column: int) -> None:
    bad = next((c for c in token if c in _RESERVED), None)
    if bad is not None:
        raise FormatError(
            f"letter {token!r} contains reserved character {bad!r}", filename, line, column
        )


def _split_plain_commas(text: str, base: int) -> list[tuple[str, int]]:
    """Split on every comma, keeping the 1-based column of each piece."""
    parts: list[tuple[str, int]] = []
    start = 0
    while True:
        index = text.find(",", start)
        if index == -1:
            parts.append((text[start:], base + start))
            return parts
        parts.append((text[start:index], base + start))
        start = index + 1


def _split_entries(text: str, base: int, filename: str, line: int) -> list[tuple[str, int]]:
    """Split a right-hand side on the commas between entries (outside parentheses)."""
    parts: list[tuple[str, int]] = []
    depth = 0
    start = 0
    for index, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise FormatError("unbalanced ')'", filename, line, base + index)
        elif char == "," and depth == 0:
            parts.append((text[start:index], base + start))
            start = index + 1
    if depth != 0:
        raise FormatError("unbalanced '('", filename, line, base + len(text))
    parts.append((text[start:], base + start))
    return parts


def _parse_application(
    text: str, base: int, filename: str, line: int
) -> tuple[str, str, int]:
    """Parse ``Name(inner)``; returns the name, the inner text, and its column."""
    open_index = text.find("(")
    if open_index == -1:
        raise FormatError(
            "expected '(' after the symbol name", filename, line, base + len(text)
        )
    name = text[:open_index].strip()
    name_column = base + (len(text[:open_index]) - len(text[:open_index].lstrip()))
    _check_name(name, "symbol name", filename, line, name_column)
    close_index = text.rfind(")")
    if close_index < open_index:
        raise FormatError("missing ')'", filename, line, base + len(text))
    trailing = text[close_index + 1 :]
    if trailing.strip():
        column = base + close_index + 1 + (len(trailing) - len(trailing.lstrip()))
        raise FormatError("unexpected text after ')'", filename, line, column)
    return name, text[open_index + 1 : close_index], base + open_index + 1


def _parse_patterns(
    inner: str, base: int, filename: str, line: int
) -> tuple[Pattern, ...]:
    patterns: list[Pattern] = []
    for component_text, component_base in _split_plain_commas(inner, base):
        tokens = list(_TOKEN_RE.finditer(component_text))
        if not tokens:
            raise FormatError(
                "empty component: write '_' for the empty word",
                filename,
                line,
                component_base,
            )
        if len(tokens) == 1 and tokens[0].group() == "_":
            patterns.append(())
            continue
        pattern: list = []
        for match in tokens:
            token = match.group()
            column = component_base + match.start()
            if token == "_":
                raise FormatError(
                    "'_' must stand alone in its component", filename, line, column
                )
            if token.startswith("$"):
                parsed = _VARIABLE_RE.fullmatch(token)
                if parsed is None:
                    raise FormatError(
                        f"malformed variable reference {token!r}: "
                        "expected $<child>.<component>",
                        filename,
                        line,
                        column,
                    )
                child, component = int(parsed[1]), int(parsed[2])
                if child < 1 or component < 1:
                    raise FormatError(
                        "variable indices are 1-based", filename, line, column
                    )
                pattern.append(Variable(child, component))
            else:
                _check_letter(token, filename, line, column)
                pattern.append(token)
        patterns.append(tuple(pattern))
    return tuple(patterns)


def _parse_rhs_entry(
    text: str, base: int, entry_index: int, filename: str, line: int
) -> NonTerminal:
    name, inner, inner_base = _parse_application(text, base, filename, line)
    arguments = _split_plain_commas(inner, inner_base)
    for argument_index, (argument_text, argument_base) in enumerate(arguments, start=1):
        tokens = list(_TOKEN_RE.finditer(argument_text))
        if len(tokens) != 1:
            raise FormatError(
                "each right-hand side argument must be a single placeholder "
                "name or $<child>.<component> reference",
                filename,
                line,
                argument_base,
            )
        token = tokens[0].group()
        column = argument_base + tokens[0].start()
        if token.startswith("$"):
            parsed = _VARIABLE_RE.fullmatch(token)
            if parsed is None:
                raise FormatError(
                    f"malformed variable reference {token!r}", filename, line, column
                )
            if (int(parsed[1]), int(parsed[2])) != (entry_index, argument_index):
                raise FormatError(
                    f"argument {token} does not match its position: this is "
                    f"component {argument_index} of child {entry_index}",
                    filename,
                    line,
                    column,
                )
        else:
            _check_name(token, "placeholder name", filename, line, column)
    return NonTerminal(name, len(arguments))


def _parse_rule(line_text: str, filename: str, line: int) -> ProductionRule:
    arrow = line_text.find("<-")
    if arrow == -1:
        raise FormatError(
            "a rule needs '<-' between its sides", filename, line, len(line_text) + 1
        )
    if line_text.find("<-", arrow + 2) != -1:
        raise FormatError(
            "a rule may contain '<-' only once",
            filename,
            line,
            line_text.find("<-", arrow + 2) + 1,
        )
    lhs_text = line_text[:arrow]
    name, inner, inner_base = _parse_application(lhs_text, 1, filename, line)
    patterns = _parse_patterns(inner, inner_base, filename, line)
    lhs = NonTerminal(name, len(patterns))
    rhs_text = line_text[arrow + 2 :]
    rhs_base = arrow + 3
    if not rhs_text.strip():
        return ProductionRule(lhs, patterns)
    entries = _split_entries(rhs_text, rhs_base, filename, line)
    rhs = tuple(
        _parse_rhs_entry(entry_text, entry_base, index, filename, line)
        for index, (entry_text, entry_base) in enumerate(entries, start=1)
    )
    return ProductionRule(lhs, patterns, rhs)


def parse_grammar(text: str, filename: str = "<grammar>") -> MCFG:
    """Parse a grammar file; see the module docstring for the format."""
    start_name: str | None = None
    rules: list[ProductionRule] = []
    line = 0
    for line, raw in enumerate(text.splitlines(), start=1):
        stripped_line = raw.split("#", 1)[0]
        content = stripped_line.strip()
        if not content:
            continue
        indent = len(stripped_line) - len(stripped_line.lstrip())
        if content.startswith("start:"):
            if start_name is not None:
                raise FormatError("duplicate 'start:' header", filename, line, indent + 1)
            tail = content[len("start:") :]
            column = indent + len("start:") + (len(tail) - len(tail.lstrip())) + 1
            start_name = tail.strip()
            _check_name(start_name, "start symbol name", filename, line, column)
            continue
        rules.append(_parse_rule(stripped_line, filename, line))
    if not rules and start_name is None:
        raise FormatError("the file defines no rules and no start symbol", filename, 1, 1)
    start: NonTerminal | None = None
    if start_name is not None:
        for rule in rules:
            for nt in (rule.lhs, *rule.rhs):
                if nt.name == start_name:
                    start = nt
                    break
            if start is not None:
                break
        if start is None:
            start = NonTerminal(start_name, 1)
    return MCFG.from_rules(rules, start=start)


def format_grammar(grammar: MCFG) -> str:
    """Render a grammar in the file format; parses back to an equivalent grammar."""
    lines = [f"start: {grammar.start.name}"]
    lines.extend(str(rule) for rule in grammar.rules)
    return "\n".join(lines) + "\n"


def parse_preorder(text: str, filename: str = "<preorder>") -> Preorder:
    """Parse a preorder file: a ``m:`` header plus ``i <= j`` pair lines."""
    size: int | None = None
    pairs: list[tuple[int, int]] = []
    for line, raw in enumerate(text.splitlines(), start=1):
        stripped_line = raw.split("#", 1)[0]
        content = stripped_line.strip()
        if not content:
            continue
        indent = len(stripped_line) - len(stripped_line.lstrip())
        if content.startswith("m:"):
            if size is not None:
                raise FormatError("duplicate 'm:' header", filename, line, indent + 1)
            tail = content[len("m:") :].strip()
            column = indent + len("m:") + 1
            try:
                size = int(tail)
            except ValueError:
                raise FormatError(
                    f"the index-set size must be an integer, got {tail!r}",
                    filename,
                    line,
                    column,
                ) from None
            if size < 1:
                raise FormatError(
                    f"the index-set size must be positive, got {size}",
                    filename,
                    line,
                    column,
                )
            continue
        if size is None:
            raise FormatError(
                "pair lines must come after the 'm:' header", filename, line, indent + 1
            )
        match = _PAIR_RE.fullmatch(stripped_line)
        if match is None:
            raise FormatError(
                "expected a pair line of the form 'i <= j'", filename, line, indent + 1
            )
        i, j = int(match[1]), int(match[2])
        for value, position in ((i, match.start(1)), (j, match.start(2))):
            if not 1 <= value <= size:
                raise FormatError(
                    f"index {value} is out of range for size {size}",
                    filename,
                    line,
                    position + 1,
                )
        pairs.append((i, j))
    if size is None:
        raise FormatError("missing 'm:' header", filename, 1, 1)
    return closure(size, pairs)


def format_preorder(preorder: Preorder) -> str:
    """Render a preorder in the file format; parses back to the same relation."""
    lines = [f"m: {preorder.size}"]
    lines.extend(f"{i} <= {j}" for i, j in preorder.pairs())
    return "\n".join(lines) + "\n"


def parse_word(text: str, filename: str = "<word>") -> Word:
    """Parse a whitespace-separated word; a lone ``_`` is the empty word."""
    tokens = list(_TOKEN_RE.finditer(text))
    if len(tokens) == 1 and tokens[0].group() == "_":
        return ()
    word: list[str] = []
    for match in tokens:
        token = match.group()
        column = match.start() + 1
        if token == "_":
            raise FormatError(
                "'_' denotes the empty word and must stand alone", filename, 1, column
            )
        _check_letter(token, filename, 1, column)
        word.append(token)
    return tuple(word)


def format_word(word: Word) -> str:
    """Render a word as space-separated letters, ``_`` for the empty word."""
    return " ".join(word) if word else "_"


def format_tree(tree) -> str:
    """Indented one-rule-per-line rendering of a derivation tree."""
    lines: list[str] = []

    def walk(node, depth: int) -> None:
        lines.append("  " * depth + str(node.rule))
        for child in node.children:
            walk(child, depth + 1)

    walk(tree, 0)
    return "\n".join(lines)


def tree_as_dict(tree) -> dict:
    """JSON-ready rendering of a derivation tree."""
    return {
        "rule": str(tree.rule),
        "children": [tree_as_dict(child) for child in tree.children],
    }
