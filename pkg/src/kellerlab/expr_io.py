"""Parsing and printing of polynomials, map files, and system files.

Expression grammar (recursive descent, precedence climbing):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom
    atom   := base ('^' INTEGER)*
    base   := NUMBER | NAME | '(' expr ')'

Numbers are integer or rational literals `p/q` with no embedded spaces;
exponents are non-negative integer literals; implicit multiplication is
forbidden.  Map files are the line-oriented format

    # comment
    name: some-label          (optional metadata before the header)
    vars: x1 x2 ... xn
    F1 = <expr>
    ...
    Fn = <expr>

System files share the grammar, with one bare expression per line
(`<expr> = 0` implied) instead of `Fi =` lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .polyring import Polynomial, PolyMap

# ---- tokenizer ----

_OPS = set("+-*^()")


@dataclass(frozen=True)
class _Token:
    kind: str  # number | name | op | end
    text: str
    value: object
    line: int
    column: int


def _is_name_start(ch):
    return ch.isalpha() or ch == "_"


def _is_name_char(ch):
    return ch.isalnum() or ch == "_"


def _tokenize(text, line0=1, col0=1):
    tokens = []
    i = 0
    line, col = line0, col0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_line, start_col = line, col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = None
            if j < n and text[j] == "/":
                k = j + 1
                if k >= n or not text[k].isdigit():
                    raise ParseError(
                        "expected digits after '/' in rational literal",
                        start_line,
                        start_col + (j - i),
                    )
                m = k
                while m < n and text[m].isdigit():
                    m += 1
                den = int(text[k:m])
                if den == 0:
                    raise ParseError("zero denominator", start_line, start_col + (k - i))
                j = m
            value = Fraction(num) if den is None else Fraction(num, den)
            tokens.append(_Token("number", text[i:j], value, start_line, start_col))
            col += j - i
            i = j
        elif _is_name_start(ch):
            j = i
            while j < n and _is_name_char(text[j]):
                j += 1
            tokens.append(_Token("name", text[i:j], text[i:j], start_line, start_col))
            col += j - i
            i = j
        elif ch in _OPS:
            tokens.append(_Token("op", ch, ch, start_line, start_col))
            i += 1
            col += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", start_line, start_col)
    tokens.append(_Token("end", "", None, line, col))
    return tokens


# ---- parser ----


class _Parser:
    def __init__(self, tokens, variables):
        self.tokens = tokens
        self.pos = 0
        self.variables = tuple(variables)

    @property
    def cur(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.cur
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.cur
        raise ParseError(message, tok.line, tok.column)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.cur.kind != "end":
            self.fail(f"unexpected token {self.cur.text!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.advance().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.cur.kind == "op" and self.cur.text == "*":
            self.advance()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        if self.cur.kind == "op" and self.cur.text == "-":
            self.advance()
            return -self.factor()
        return self.atom()

    def atom(self) -> Polynomial:
        p = self.base()
        while self.cur.kind == "op" and self.cur.text == "^":
            self.advance()
            p = p ** self.exponent()
        return p

    def exponent(self) -> int:
        tok = self.cur
        if tok.kind == "op" and tok.text == "-":
            self.fail("negative exponent")
        if tok.kind != "number":
            self.fail("expected integer exponent")
        if tok.value.denominator != 1:
            self.fail("non-integer exponent")
        self.advance()
        return int(tok.value)

    def base(self) -> Polynomial:
        tok = self.cur
        if tok.kind == "number":
            self.advance()
            return Polynomial.constant(self.variables, tok.value)
        if tok.kind == "name":
            if tok.text not in self.variables:
                self.fail(f"unknown variable {tok.text!r}")
            self.advance()
            return Polynomial.variable(self.variables, tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            p = self.expr()
            if not (self.cur.kind == "op" and self.cur.text == ")"):
                self.fail("expected ')'")
            self.advance()
            return p
        if tok.kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected token {tok.text!r}")


def parse_polynomial(text: str, variables, line=1, column=1) -> Polynomial:
    """Parse an expression over the declared variables."""
    variables = tuple(variables)
    if len(set(variables)) != len(variables):
        raise ValueError("duplicate variable names")
    tokens = _tokenize(text, line, column)
    return _Parser(tokens, variables).parse()


# ---- printing ----


def _print_sort_key(item):
    exps, _ = item
    return (sum(exps), tuple(-e for e in exps))


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_monomial(variables, exps) -> str:
    parts = []
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_polynomial(p: Polynomial) -> str:
    """Canonical text form: ascending total degree, lex-descending within it.

    Round-trips through parse_polynomial over the same variables.
    """
    if p.is_zero():
        return "0"
    pieces = []
    for exps, coef in sorted(p.terms.items(), key=_print_sort_key):
        mono = _format_monomial(p.variables, exps)
        mag = abs(coef)
        if not mono:
            body = format_fraction(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_fraction(mag)}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if coef < 0 else body)
        else:
            pieces.append(f"{' - ' if coef < 0 else ' + '}{body}")
    return "".join(pieces)


# ---- map files ----


@dataclass(frozen=True)
class MapFile:
    """Parsed on-disk description of a polynomial map."""

    variables: tuple
    components: tuple  # expression strings
    metadata: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.components)

    def to_poly_map(self) -> PolyMap:
        return PolyMap(
            [parse_polynomial(expr, self.variables) for expr in self.components]
        )


def _split_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _check_name(name, lineno, col):
    if not (_is_name_start(name[0]) and all(_is_name_char(c) for c in name)):
        raise ParseError(f"bad identifier {name!r}", lineno, col)


def _parse_header_lines(text):
    """Common metadata/vars/body splitting for map and system files."""
    metadata = {}
    variables = None
    body = []  # (lineno, content) after the vars: header
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _split_comment(raw).rstrip()
        if not line.strip():
            continue
        if variables is None:
            head, sep, rest = line.partition(":")
            if not sep:
                raise ParseError("expected 'key: value' or 'vars:' header", lineno, 1)
            key = head.strip()
            _check_name(key, lineno, 1 + len(head) - len(head.lstrip()))
            if key == "vars":
                names = rest.split()
                if not names:
                    raise ParseError("empty variable list", lineno, len(head) + 2)
                for name in names:
                    _check_name(name, lineno, 1)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable name", lineno, len(head) + 2)
                variables = tuple(names)
            else:
                metadata[key] = rest.strip()
        else:
            body.append((lineno, line))
    if variables is None:
        raise ParseError("missing 'vars:' header", 1, 1)
    return metadata, variables, body


def parse_map_file(text: str) -> MapFile:
    metadata, variables, body = _parse_header_lines(text)
    components = []
    for lineno, line in body:
        lhs, sep, rhs = line.partition("=")
        if not sep:
            raise ParseError("expected 'Fi = <expr>'", lineno, 1)
        label = lhs.strip()
        expected = f"F{len(components) + 1}"
        if label != expected:
            raise ParseError(f"expected component label {expected!r}", lineno, 1)
        expr = rhs.strip()
        column = len(line) - len(rhs) + 1 + (len(rhs) - len(rhs.lstrip()))
        parse_polynomial(expr, variables, line=lineno, column=column)
        components.append(expr)
    if not components:
        raise ParseError("map file declares no components", 1, 1)
    return MapFile(variables=variables, components=tuple(components), metadata=metadata)


def format_map_file(mf: MapFile) -> str:
    lines = [f"{k}: {v}" for k, v in mf.metadata.items()]
    lines.append("vars: " + " ".join(mf.variables))
    for i, expr in enumerate(mf.components, start=1):
        lines.append(f"F{i} = {expr}")
    return "\n".join(lines) + "\n"


def map_file_from_poly_map(F: PolyMap, metadata=None) -> MapFile:
    return MapFile(
        variables=F.variables,
        components=tuple(print_polynomial(c) for c in F.components),
        metadata=dict(metadata or {}),
    )


def load_map_file(path) -> MapFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_map_file(fh.read())


# ---- system files ----


@dataclass(frozen=True)
class SystemFile:
    """Equations `expr = 0`, one expression per line."""

    variables: tuple
    equations: tuple  # expression strings
    metadata: dict = field(default_factory=dict)

    def to_polynomials(self):
        return [parse_polynomial(expr, self.variables) for expr in self.equations]


def parse_system_file(text: str) -> SystemFile:
    metadata, variables, body = _parse_header_lines(text)
    equations = []
    for lineno, line in body:
        expr = line.strip()
        parse_polynomial(expr, variables, line=lineno, column=1)
        equations.append(expr)
    if not equations:
        raise ParseError("system file declares no equations", 1, 1)
    return SystemFile(variables=variables, equations=tuple(equations), metadata=metadata)


def format_system_file(sf: SystemFile) -> str:
    lines = [f"{k}: {v}" for k, v in sf.metadata.items()]
    lines.append("vars: " + " ".join(sf.variables))
    lines.extend(sf.equations)
    return "\n".join(lines) + "\n"


def load_system_file(path) -> SystemFile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_system_file(fh.read())
