"""The RIAF-APX text format.

One directive per statement, terminated by ``.``::

    arg(a).      % certain argument
    ?arg(f).     % uncertain argument
    att(b,a).    % certain attack
    ?att(e,a).   % uncertain attack
    sym(a,b).    % uncertain conflict, direction unknown

``%`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import RichIAF, RIAFError

MAX_NAME = 255

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<stmt>(?P<kind>\?arg|\?att|arg|att|sym)[ \t]*\([ \t]*
        (?P<first>[A-Za-z0-9_]+)[ \t]*
        (?:,[ \t]*(?P<second>[A-Za-z0-9_]+)[ \t]*)?
     \)[ \t]*\.)
    """,
    re.VERBOSE,
)

_ARITY = {"arg": 1, "?arg": 1, "att": 2, "?att": 2, "sym": 2}


class ParseError(RIAFError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Directive:
    kind: str
    args: tuple[str, ...]
    line: int
    column: int

    def render(self) -> str:
        return f"{self.kind}({','.join(self.args)})."


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def parse_directives(text: str) -> list[Directive]:
    try:
        text.encode("ascii")
    except UnicodeEncodeError as exc:
        line, col = _position(text, exc.start)
        raise ParseError("non-ASCII character", line, col) from None
    out: list[Directive] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _position(text, pos)
            snippet = text[pos : pos + 20].split("\n")[0]
            raise ParseError(f"syntax error near {snippet!r}", line, col)
        if m.group("stmt"):
            kind = m.group("kind")
            args = tuple(g for g in (m.group("first"), m.group("second")) if g is not None)
            line, col = _position(text, pos)
            if len(args) != _ARITY[kind]:
                raise ParseError(f"{kind} takes {_ARITY[kind]} argument(s)", line, col)
            for name in args:
                if len(name) > MAX_NAME:
                    raise ParseError(f"argument name longer than {MAX_NAME} characters", line, col)
            out.append(Directive(kind, args, line, col))
        pos = m.end()
    return out


def parse_riaf(text: str) -> RichIAF:
    directives = parse_directives(text)
    seen: dict[tuple, Directive] = {}
    owner: dict[object, Directive] = {}  # argument or ordered pair -> declaring directive
    parts: dict[str, set] = {k: set() for k in _ARITY}

    def fail(d: Directive, message: str):
        raise ParseError(message, d.line, d.column)

    for d in directives:
        key = (d.kind, tuple(sorted(d.args)) if d.kind == "sym" else d.args)
        if key in seen:
            prev = seen[key]
            fail(d, f"duplicate directive {d.render()} (first at {prev.line}:{prev.column})")
        seen[key] = d
        if d.kind in ("arg", "?arg"):
            name = d.args[0]
            if name in owner:
                fail(d, f"argument {name} already declared by {owner[name].render()}")
            owner[name] = d
            parts[d.kind].add(name)
            continue
        a, b = d.args
        if d.kind == "sym" and a == b:
            fail(d, f"self-pair ({a},{a}) is not allowed as an uncertain conflict")
        pairs = [(a, b), (b, a)] if d.kind == "sym" else [(a, b)]
        for p in pairs:
            if p in owner:
                fail(d, f"pair ({p[0]},{p[1]}) already used by {owner[p].render()}")
        for p in pairs:
            owner[p] = d
        parts[d.kind].update(pairs)

    declared = parts["arg"] | parts["?arg"]
    for d in directives:
        if d.kind in ("att", "?att", "sym"):
            for name in d.args:
                if name not in declared:
                    fail(d, f"undeclared argument {name} in {d.render()}")
    return RichIAF(parts["arg"], parts["?arg"], parts["att"], parts["?att"], parts["sym"])


def serialize_riaf(riaf: RichIAF) -> str:
    lines = [f"arg({a})." for a in sorted(riaf.certain_args)]
    lines += [f"?arg({a})." for a in sorted(riaf.uncertain_args)]
    lines += [f"att({a},{b})." for a, b in sorted(riaf.certain_attacks)]
    lines += [f"?att({a},{b})." for a, b in sorted(riaf.uncertain_attacks)]
    lines += [f"sym({a},{b})." for a, b in riaf.conflict_pairs]
    return "".join(line + "\n" for line in lines)


def read_riaf(path) -> RichIAF:
    # non-ASCII bytes survive as surrogates and are reported by the parser
    with open(path, encoding="ascii", errors="surrogateescape") as fh:
        return parse_riaf(fh.read())
