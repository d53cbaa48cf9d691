# This file is part of flag-positivity.
#
# SPDX-License-Identifier: Apache-2.0

"""Parser of the bundle DSL.

Grammar ('*' binds tighter than '+', both left associative):

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'Q' | 'S' | 'T' | 'triv(' INT ')' | 'L[' INT (',' INT)* ']'
            | 'dual(' expr ')' | 'det(' expr ')' | 'hom(' expr ',' expr ')'
            | 'sym(' INT ',' expr ')' | 'wedge(' INT ',' expr ')' | '(' expr ')'

L[c1,...,cr] is the line bundle of the weight with fundamental-weight coefficients c_i.
"""

import re

from flag_positivity.bundles.base import MetaBundle
from flag_positivity.exceptions import DslSyntaxError, UsageError
from flag_positivity.root_system import Weight

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_]\w*)|(?P<punct>[()\[\],*+]))")

_NULLARY = ("Q", "S", "T")
_UNARY = ("dual", "det")
_POWERS = ("sym", "wedge")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            offset = len(text) - len(text[pos:].lstrip())
            raise DslSyntaxError(text, offset, f'unexpected character "{text[offset]}"')
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list"""

    def __init__(self, text, cartan):
        self.text = text
        self.cartan = cartan
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos]

    def _error(self, reason, token=None):
        token = token or self._peek()
        return DslSyntaxError(self.text, token[2], reason)

    def _expect(self, value):
        token = self._peek()
        if token[1] != value or token[0] == "end":
            found = "end of input" if token[0] == "end" else f'"{token[1]}"'
            raise self._error(f'expected "{value}", found {found}')
        self.pos += 1
        return token

    def _integer(self):
        token = self._peek()
        if token[0] != "int":
            raise self._error("expected an integer")
        self.pos += 1
        return int(token[1])

    def parse(self):
        expr = self._expr()
        if self._peek()[0] != "end":
            raise self._error(f'unexpected "{self._peek()[1]}"')
        return expr

    def _expr(self):
        expr = self._term()
        while self._peek()[1] == "+":
            self.pos += 1
            expr = MetaBundle.get("+")(expr, self._term())
        return expr

    def _term(self):
        expr = self._factor()
        while self._peek()[1] == "*":
            self.pos += 1
            expr = MetaBundle.get("*")(expr, self._factor())
        return expr

    def _factor(self):
        token = self._peek()
        kind, value, _ = token
        if value == "(" and kind == "punct":
            self.pos += 1
            expr = self._expr()
            self._expect(")")
            return expr
        if kind != "name":
            found = "end of input" if kind == "end" else f'"{value}"'
            raise self._error(f"expected a bundle, found {found}")
        self.pos += 1

        if value in _NULLARY:
            return MetaBundle.get(value)()
        if value == "L":
            return self._line(token)
        if value == "triv":
            self._expect("(")
            rank = self._integer()
            if rank < 1:
                raise self._error("trivial bundle rank must be positive", token)
            self._expect(")")
            return MetaBundle.get("triv")(rank)
        if value in _UNARY:
            self._expect("(")
            inner = self._expr()
            self._expect(")")
            return MetaBundle.get(value)(inner)
        if value in _POWERS:
            self._expect("(")
            k = self._integer()
            if k < 0:
                raise self._error(f"{value} power must be >= 0", token)
            self._expect(",")
            inner = self._expr()
            self._expect(")")
            return MetaBundle.get(value)(k, inner)
        if value == "hom":
            self._expect("(")
            source = self._expr()
            self._expect(",")
            target = self._expr()
            self._expect(")")
            return MetaBundle.get("hom")(source, target)
        raise self._error(f'unknown bundle "{value}"', token)

    def _line(self, token):
        self._expect("[")
        coefficients = [self._integer()]
        while self._peek()[1] == ",":
            self.pos += 1
            coefficients.append(self._integer())
        self._expect("]")
        try:
            return MetaBundle.get("L")(Weight(self.cartan, coefficients))
        except UsageError as e:
            raise self._error(str(e), token) from e


def parse_bundle(text, cartan):
    """Parse a bundle expression; weights are read in the given Cartan type"""
    if not text or not text.strip():
        raise DslSyntaxError(text or "", 0, "empty expression")
    return _Parser(text, cartan).parse()
