"""
Expression parser for algebra elements and scalars

Grammar:
    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*         divisor must be a scalar
    unary  := '-' unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | NAME | '(' expr ')'

Names are x<i>, y<i>, z<i> (generators), q<i>, l<ij> (l<i>_<j> from rank 10
on), c<t>. Juxtaposition is not multiplication: `q1x1` is an error.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Union

from algebras.presentations import NormalElement, PresentationId, generator, multiply
from core.errors import DivisionByZero, ExpressionSyntaxError, NegativeExponent, UnknownGenerator, byte_offset
from core.scalars import ParamContext, Scalar, lambda_symbol_name

TOKEN_PATTERN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]\d*(?:_\d+)?)|(?P<op>[-+*/^()]))')

Value = Union[Scalar, NormalElement]


@dataclass
class Token:
    kind: str
    text: str
    offset: int  # UTF-8 byte offset into the source


def tokenize(src: str) -> List[Token]:
    tokens: List[Token] = []
    position = 0
    while position < len(src):
        if src[position:].strip() == '':
            break
        match = TOKEN_PATTERN.match(src, position)
        if not match:
            stripped = len(src) - len(src[position:].lstrip())
            raise ExpressionSyntaxError(f"Unexpected character {src[stripped]!r}", byte_offset(src, stripped))
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), byte_offset(src, match.start(kind))))
        position = match.end()
    tokens.append(Token('end', '', byte_offset(src, len(src))))
    return tokens


class _Parser:
    """Precedence climbing over the token list; p is None when parsing a bare scalar"""

    def __init__(self, src: str, ctx: ParamContext, p: Optional[PresentationId]):
        self.tokens = tokenize(src)
        self.index = 0
        self.ctx = ctx
        self.p = p

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            raise ExpressionSyntaxError(f"Expected {text!r}, found {self.current.text or 'end of input'!r}",
                                        self.current.offset)
        return self.advance()

    def parse(self) -> Value:
        if self.current.kind == 'end':
            raise ExpressionSyntaxError("Empty expression", 0)
        result = self.expr()
        if self.current.kind != 'end':
            raise ExpressionSyntaxError(f"Unexpected {self.current.text!r} (juxtaposition is not allowed)",
                                        self.current.offset)
        return result

    def expr(self) -> Value:
        value = self.term()
        while self.current.text in ('+', '-'):
            op = self.advance().text
            right = self.term()
            value = self._combine(value, right, op)
        return value

    def term(self) -> Value:
        value = self.unary()
        while self.current.text in ('*', '/'):
            token = self.advance()
            right = self.unary()
            if token.text == '*':
                value = self._multiply(value, right)
            else:
                value = self._divide(value, right, token.offset)
        return value

    def unary(self) -> Value:
        if self.current.text == '-':
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Value:
        start = self.current
        base = self.atom()
        if self.current.text != '^':
            return base
        self.advance()
        negative = False
        if self.current.text == '-':
            negative = True
            self.advance()
        if self.current.kind != 'int':
            raise ExpressionSyntaxError("Exponent must be an integer literal", self.current.offset)
        exponent = int(self.advance().text)
        if negative:
            exponent = -exponent
        return self._raise(base, exponent, start)

    def atom(self) -> Value:
        token = self.current
        if token.kind == 'int':
            self.advance()
            return self.ctx.scalar(int(token.text))
        if token.kind == 'name':
            self.advance()
            return self._name(token)
        if token.text == '(':
            self.advance()
            value = self.expr()
            self.expect(')')
            return value
        raise ExpressionSyntaxError(f"Unexpected {token.text or 'end of input'!r}", token.offset)

    def _name(self, token: Token) -> Value:
        match = re.fullmatch(r'([xyzqlc])(\d+)(?:_(\d+))?', token.text)
        if not match:
            raise UnknownGenerator(f"Unknown symbol {token.text!r}", token.offset)
        letter, first, second = match.groups()
        n = self.ctx.n

        if letter == 'l':
            i, j = self._lambda_indices(token)
            return self.ctx.lam(i, j)
        if second is not None:
            raise UnknownGenerator(f"Unknown symbol {token.text!r}", token.offset)
        index = int(first)
        if letter == 'c':
            if not 1 <= index <= self.ctx.generic_symbols:
                raise UnknownGenerator(f"Generic symbol {token.text} not declared", token.offset)
            return self.ctx.c(index)
        if not 1 <= index <= n:
            raise UnknownGenerator(f"{token.text} outside rank {n}", token.offset)
        if letter == 'q':
            return self.ctx.q(index)
        if self.p is None:
            raise ExpressionSyntaxError(f"Generator {token.text} in a scalar expression", token.offset)
        return generator(self.p, (letter, index, 1))

    def _lambda_indices(self, token: Token):
        n = self.ctx.n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if lambda_symbol_name(i, j, n) == token.text:
                    return i, j
        raise UnknownGenerator(f"Skew parameter {token.text} not declared for rank {n}", token.offset)

    def _element(self, value: Value) -> NormalElement:
        if isinstance(value, NormalElement):
            return value
        return NormalElement.scalar(self.p, value)

    def _combine(self, left: Value, right: Value, op: str) -> Value:
        if isinstance(left, NormalElement) or isinstance(right, NormalElement):
            left, right = self._element(left), self._element(right)
        return left + right if op == '+' else left - right

    def _multiply(self, left: Value, right: Value) -> Value:
        if isinstance(left, NormalElement) and isinstance(right, NormalElement):
            return multiply(left, right)
        if isinstance(left, NormalElement):
            return left.scale(right)
        if isinstance(right, NormalElement):
            return right.scale(left)
        return left * right

    def _divide(self, left: Value, right: Value, offset: int) -> Value:
        if isinstance(right, NormalElement):
            raise ExpressionSyntaxError("Divisor must be a scalar", offset)
        if not right:
            raise DivisionByZero("Division by the zero scalar")
        if isinstance(left, NormalElement):
            return left.scale(self.ctx.one / right)
        return left / right

    def _raise(self, base: Value, exponent: int, start: Token) -> Value:
        if not isinstance(base, NormalElement):
            if exponent < 0 and not base:
                raise DivisionByZero("Zero scalar raised to a negative power")
            return base ** exponent
        if exponent < 0:
            single = start.kind == 'name' and start.text[0] == 'z' and self.p.localized
            if not single:
                raise NegativeExponent(f"{start.text} cannot carry a negative exponent", start.offset)
            base = generator(self.p, ('z', int(start.text[1:]), -1))
            exponent = -exponent
        result = NormalElement.one(self.p)
        for _ in range(exponent):
            result = multiply(result, base)
        return result


def parse_element(src: str, p: PresentationId) -> NormalElement:
    """
    Parse text into an element of presentation p, in normal form

    Raises:
        ExpressionSyntaxError: malformed text, with the offending offset
        NegativeExponent: x or y (or z in the non-localized forms) to a negative power
        UnknownGenerator: index outside the rank
    """
    value = _Parser(src, p.ctx, p).parse()
    if isinstance(value, NormalElement):
        return value
    return NormalElement.scalar(p, value)


def parse_scalar(ctx: ParamContext, src: str) -> Scalar:
    return _Parser(src, ctx, None).parse()
