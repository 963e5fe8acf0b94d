"""
Reading and writing monomial ideals.

Text grammar (whitespace is insignificant)::

    source := "vars" name ("," name)* ";" term ("," term)*
    term   := "1" | "0" | factor ("*" factor)*
    factor := name ["^" exponent]

``0`` denotes the zero ideal and may only appear on its own.  The JSON form is
``{"vars": [name, ...], "gens": [[e_1, ..., e_n], ...]}``.
"""

from __future__ import annotations
import json
import re
from typing import Any, NamedTuple, Optional
from .errors import (
    ExponentOverflowError,
    NegativeExponentError,
    ParseError,
    UnknownVariableError,
)
from .monomial import Monomial, MonomialIdeal

#: Exponents must be strictly less than this
EXPONENT_LIMIT = 2**31

NAME_RGX = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


TOKEN_RGX = re.compile(
    r"\s*(?:(?P<int>[0-9]+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-,;*^]))"
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = TOKEN_RGX.match(text, pos)
        if not m:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"Unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        assert kind is not None
        tokens.append(Token(kind, m[kind], m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, text: Optional[str] = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = repr(text) if text is not None else kind
            got = repr(t.text) if t.kind != "end" else "end of input"
            raise ParseError(f"Expected {want}, got {got}", t.pos)
        return self.advance()

    def at_op(self, op: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == op

    def parse(self) -> MonomialIdeal:
        self.expect("name", "vars")
        names = [self.expect("name")]
        while self.at_op(","):
            self.advance()
            names.append(self.expect("name"))
        seen: set[str] = set()
        for t in names:
            if t.text in seen:
                raise ParseError(f"Duplicate variable {t.text!r}", t.pos)
            seen.add(t.text)
        var_names = tuple(t.text for t in names)
        self.expect("op", ";")
        n = len(var_names)
        gens: list[Monomial] = []
        zero = False
        while True:
            start = self.tok
            term = self.parse_term(var_names)
            if term is None:
                zero = True
            else:
                gens.append(term)
            if zero and gens:
                raise ParseError("0 must be the only term", start.pos)
            if self.at_op(","):
                self.advance()
                if zero:
                    raise ParseError("0 must be the only term", self.tok.pos)
                continue
            break
        self.expect("end")
        return MonomialIdeal(n, tuple(gens), var_names)

    def parse_term(self, var_names: tuple[str, ...]) -> Optional[Monomial]:
        n = len(var_names)
        t = self.tok
        if t.kind == "int":
            self.advance()
            if int(t.text) == 1:
                return Monomial.one(n)
            elif int(t.text) == 0:
                return None
            raise ParseError(f"Numeric term {t.text!r} is not 0 or 1", t.pos)
        exps = [0] * n
        while True:
            name = self.expect("name")
            try:
                i = var_names.index(name.text)
            except ValueError:
                raise UnknownVariableError(
                    f"Unknown variable {name.text!r}", name.pos
                ) from None
            e = 1
            if self.at_op("^"):
                self.advance()
                if self.at_op("-"):
                    raise NegativeExponentError("Negative exponent", self.tok.pos)
                et = self.expect("int")
                e = int(et.text)
                if e >= EXPONENT_LIMIT:
                    raise ExponentOverflowError(
                        f"Exponent {et.text} exceeds the limit of 2^31 - 1", et.pos
                    )
            exps[i] += e
            if exps[i] >= EXPONENT_LIMIT:
                raise ExponentOverflowError(
                    f"Exponent of {name.text} exceeds the limit of 2^31 - 1",
                    name.pos,
                )
            if self.at_op("*"):
                self.advance()
                continue
            return Monomial(tuple(exps))


def parse_ideal(text: str) -> MonomialIdeal:
    """
    Parse an ideal from either the text grammar or the JSON form; which one
    is used is decided by whether the stripped source starts with ``{``.
    Non-minimal generators are pruned.

    :raises ParseError: on malformed input
    :raises UnknownVariableError: if a term uses an undeclared variable
    :raises NegativeExponentError: if an exponent is negative
    :raises ExponentOverflowError: if an exponent is at least 2^31
    """
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except ValueError as e:
            raise ParseError(f"Invalid JSON: {e}")
        return ideal_from_json(obj)
    return _Parser(text).parse()


def ideal_from_json(obj: Any) -> MonomialIdeal:
    """Build an ideal from a decoded ``{"vars": ..., "gens": ...}`` object"""
    if not isinstance(obj, dict):
        raise ParseError("JSON ideal must be an object")
    extra = set(obj) - {"vars", "gens"}
    if extra:
        raise ParseError(f"Unexpected JSON keys: {', '.join(sorted(extra))}")
    var_names = obj.get("vars")
    if (
        not isinstance(var_names, list)
        or not var_names
        or not all(isinstance(v, str) and NAME_RGX.fullmatch(v) for v in var_names)
    ):
        raise ParseError('"vars" must be a nonempty list of variable names')
    if len(set(var_names)) != len(var_names):
        raise ParseError('"vars" contains duplicate names')
    n = len(var_names)
    rows = obj.get("gens")
    if not isinstance(rows, list):
        raise ParseError('"gens" must be a list of exponent vectors')
    gens: list[Monomial] = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"Exponent vector {row!r} does not have {n} entries")
        for e in row:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ParseError(f"Exponent {e!r} is not an integer")
            if e < 0:
                raise NegativeExponentError(f"Negative exponent {e}")
            if e >= EXPONENT_LIMIT:
                raise ExponentOverflowError(
                    f"Exponent {e} exceeds the limit of 2^31 - 1"
                )
        gens.append(Monomial(tuple(row)))
    return MonomialIdeal(n, tuple(gens), tuple(var_names))


def format_monomial(u: Monomial, var_names: tuple[str, ...]) -> str:
    if u.is_one:
        return "1"
    factors = []
    for name, e in zip(var_names, u.exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_ideal(I: MonomialIdeal) -> str:
    """Render an ideal in the text grammar accepted by `parse_ideal()`"""
    if I.is_zero:
        terms = "0"
    else:
        terms = ", ".join(format_monomial(g, I.var_names) for g in I.gens)
    return f"vars {','.join(I.var_names)}; {terms}"


def ideal_to_json(I: MonomialIdeal) -> dict[str, Any]:
    return {"vars": list(I.var_names), "gens": I.exponent_rows()}
