"""
Recursive-descent parser for the scalar expression language

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('-')? atom ('^' NAT)?
    atom   := RATIONAL | NAT | IDENT | '(' expr ')'
    RATIONAL := NAT '/' NAT
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from src.exact.scalar import ParamSpace, Scalar
from src.exceptions import ExponentError, ExpressionSyntaxError, UnknownIdentifierError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Token:
    kind: str  # NAT, IDENT, OP or EOF
    text: str
    line: int
    column: int


class Tokenizer:
    """Split expression text into tokens with line/column positions"""

    OPERATORS = set("+-*/^()")
    DIGITS = set("0123456789")

    @staticmethod
    def tokenize(text: str) -> List[Token]:
        tokens: List[Token] = []
        line, column = 1, 1
        i = 0
        while i < len(text):
            ch = text[i]
            if ch == "\n":
                line, column = line + 1, 1
                i += 1
                continue
            if ch.isspace():
                i += 1
                column += 1
                continue
            start = column
            if ch in Tokenizer.DIGITS:
                j = i
                while j < len(text) and text[j] in Tokenizer.DIGITS:
                    j += 1
                tokens.append(Token("NAT", text[i:j], line, start))
            elif ch.isascii() and ch.isalpha():
                j = i
                while j < len(text) and (text[j].isascii() and (text[j].isalnum() or text[j] == "_")):
                    j += 1
                tokens.append(Token("IDENT", text[i:j], line, start))
            elif ch in Tokenizer.OPERATORS:
                j = i + 1
                tokens.append(Token("OP", ch, line, start))
            else:
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", line, start)
            column += j - i
            i = j
        tokens.append(Token("EOF", "", line, column))
        return tokens


class ExpressionParser:
    """Parse expression text into a Scalar over a parameter space"""

    def __init__(self, params: ParamSpace):
        self.params = params
        self.tokens: List[Token] = []
        self.position = 0

    def parse(self, text: str) -> Scalar:
        self.tokens = Tokenizer.tokenize(text)
        self.position = 0
        value = self._expr()
        token = self._peek()
        if token.kind != "EOF":
            raise ExpressionSyntaxError(f"unexpected token {token.text!r}", token.line, token.column)
        return value

    # -- token helpers ---------------------------------------------------

    def _peek(self) -> Token:
        return self.tokens[self.position]

    def _next(self) -> Token:
        token = self.tokens[self.position]
        if token.kind != "EOF":
            self.position += 1
        return token

    def _accept(self, op: str) -> Optional[Token]:
        token = self._peek()
        if token.kind == "OP" and token.text == op:
            return self._next()
        return None

    @staticmethod
    def _fail(token: Token, expected: str) -> ExpressionSyntaxError:
        found = "end of input" if token.kind == "EOF" else repr(token.text)
        return ExpressionSyntaxError(f"expected {expected}, found {found}", token.line, token.column)

    # -- grammar ---------------------------------------------------------

    def _expr(self) -> Scalar:
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> Scalar:
        value = self._factor()
        while self._accept("*"):
            value = value * self._factor()
        return value

    def _factor(self) -> Scalar:
        negate = self._accept("-") is not None
        value = self._atom()
        if self._accept("^"):
            token = self._next()
            if token.kind != "NAT":
                raise ExponentError("exponent not a nonnegative integer literal", token.line, token.column)
            value = value ** int(token.text)
        return -value if negate else value

    def _atom(self) -> Scalar:
        token = self._next()
        if token.kind == "NAT":
            if self._accept("/"):
                denominator = self._next()
                if denominator.kind != "NAT":
                    raise self._fail(denominator, "denominator")
                if int(denominator.text) == 0:
                    raise ExpressionSyntaxError("zero denominator", denominator.line, denominator.column)
                return self.params.const(Fraction(int(token.text), int(denominator.text)))
            return self.params.const(int(token.text))
        if token.kind == "IDENT":
            if token.text not in self.params:
                raise UnknownIdentifierError(f"unknown identifier {token.text!r}", token.line, token.column)
            return self.params.var(token.text)
        if token.kind == "OP" and token.text == "(":
            value = self._expr()
            closing = self._peek()
            if not self._accept(")"):
                raise self._fail(closing, "')'")
            return value
        raise self._fail(token, "number, identifier or '('")


def parse_expr(text: str, params: ParamSpace) -> Scalar:
    """Parse an expression into a Scalar over params"""
    return ExpressionParser(params).parse(text)
