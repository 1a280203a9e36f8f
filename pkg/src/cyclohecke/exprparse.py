"""Parser for the word/expression language of the command line.

Grammar (whitespace separates atoms; juxtaposition is multiplication):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/')? factor)*
    factor := atom ('^' SINT)?
    atom   := 't' | 's' INT | NAME | NUMBER | '(' expr ')' | '[' atom* ']'

NAME covers the scalar indeterminates q, v1..vm and any extras; '[' ... ']'
wraps a generator word (the canonical Element rendering re-parses).  '/'
is scalar division; negative powers are allowed on scalars, on s_i
(expanded through s_i^-1 = s_i - (q - q^-1)) and, when explicitly enabled,
on t (the cyclotomic relation makes t invertible since all v_j != 0).

Evaluation produces an Element of a given Algebra (or a bare Scalar via
`parse_scalar`); scalar summands are promoted to multiples of the
identity.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Algebra, Element
from .scalars import Field, Scalar

__all__ = [
    "ParseError",
    "ExpressionRangeError",
    "TauInverseError",
    "parse_expression",
    "evaluate",
    "parse_to_element",
    "parse_scalar",
    "render_element",
]


class ParseError(ValueError):
    """Syntax error; `pos` is the character offset in the input."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ExpressionRangeError(IndexError):
    """A generator index is out of range for the ambient algebra."""


class TauInverseError(ValueError):
    """t^-1 was used without enabling the inverse of t."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\^|\*|/|\+|-|\(|\)|\[|\]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if mo is None or mo.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r}", pos)
        num, name, op = mo.groups()
        start = mo.end() - len((num or name or op))
        if num is not None:
            tokens.append(("num", int(num), start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            tokens.append(("op", op, start))
        pos = mo.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return node

    def expr(self):
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.next()
            sign = 1 if val == "+" else -1
        parts = [(sign, self.term())]
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                parts.append((1 if val == "+" else -1, self.term()))
            else:
                return ("sum", parts) if len(parts) > 1 or parts[0][0] != 1 else parts[0][1]

    def term(self):
        factors = [self.factor()]
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                nxt = self.factor()
                if val == "/":
                    factors[-1] = ("div", factors[-1], nxt)
                else:
                    factors.append(nxt)
            elif kind in ("num", "name") or (kind == "op" and val in "(["):
                factors.append(self.factor())
            else:
                return ("prod", factors) if len(factors) > 1 else factors[0]

    def factor(self):
        node = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            node = ("pow", node, self.signed_int())
        return node

    def signed_int(self):
        kind, val, pos = self.next()
        sign = 1
        if kind == "op" and val in "+-":
            sign = 1 if val == "+" else -1
            kind, val, pos = self.next()
        if kind != "num":
            raise ParseError("expected an integer exponent", pos)
        return sign * val

    def atom(self):
        kind, val, pos = self.next()
        if kind == "num":
            return ("num", val)
        if kind == "name":
            if val == "t":
                return ("gen", ("t", None), pos)
            mo = re.fullmatch(r"s(\d+)", val)
            if mo:
                return ("gen", ("s", int(mo.group(1))), pos)
            return ("var", val, pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "op" and val == "[":
            atoms = []
            while True:
                k2, v2, _ = self.peek()
                if k2 == "op" and v2 == "]":
                    self.next()
                    break
                if k2 == "end":
                    raise ParseError("unterminated '['", pos)
                atoms.append(self.factor())
            if not atoms:
                return ("num", 1)
            return ("prod", atoms) if len(atoms) > 1 else atoms[0]
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_expression(text: str):
    """Parse to an expression tree (no algebra needed yet)."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _tau_inverse(algebra: Algebra) -> Element:
    """t^-1 from the cyclotomic relation; needs all v_j nonzero (generic)."""
    f = algebra.field
    m = algebra.m
    acc = algebra.zero()
    # sum_{k=0..m-1} (-1)^k e_k t^(m-1-k), highest power built iteratively
    terms = []
    for k in range(m):
        terms.append(f.elementary_symmetric(k) * ((-1) ** k))
    powers = [algebra.one()]
    t = algebra.tau_element()
    for _ in range(m - 1):
        powers.append(algebra.multiply(t, powers[-1]))
    for k in range(m):
        acc = acc + powers[m - 1 - k].scale(terms[k])
    lead = f.elementary_symmetric(m) * ((-1) ** (m + 1))
    return acc.scale(lead.invert())


def evaluate(node, algebra: Algebra, allow_tau_inverse: bool = False):
    """Evaluate a tree to ('scalar', Scalar) or ('elem', Element)."""
    f = algebra.field

    def promote(v):
        if v[0] == "scalar":
            return algebra.one().scale(v[1])
        return v[1]

    def ev(node):
        tag = node[0]
        if tag == "num":
            return ("scalar", f.from_fraction(node[1]))
        if tag == "var":
            name = node[1]
            try:
                return ("scalar", f.var(name))
            except KeyError:
                raise ExpressionRangeError(
                    f"unknown name {name!r}; field variables are {f.names}")
        if tag == "gen":
            kind, idx = node[1]
            letter = ("t",) if kind == "t" else ("s", idx)
            try:
                algebra._check_letter(letter)
            except IndexError as exc:
                raise ExpressionRangeError(str(exc)) from None
            return ("elem", algebra.reduce([letter]))
        if tag == "pow":
            k = node[2]
            base_node = node[1]
            if base_node[0] == "gen" and k < 0:
                kind, idx = base_node[1]
                if kind == "t":
                    if not allow_tau_inverse:
                        raise TauInverseError(
                            "t^-1 requires the all-v_j-nonzero assumption; "
                            "enable it explicitly")
                    inv = _tau_inverse(algebra)
                else:
                    try:
                        inv = algebra.sigma_inverse(idx)
                    except IndexError as exc:
                        raise ExpressionRangeError(str(exc)) from None
                out = inv
                for _ in range(-k - 1):
                    out = algebra.multiply(out, inv)
                return ("elem", out)
            base = ev(base_node)
            if base[0] == "scalar":
                return ("scalar", base[1] ** k)
            if k < 0:
                raise ExpressionRangeError(
                    "negative powers are only defined on single generators")
            if k == 0:
                return ("elem", algebra.one())
            out = base[1]
            for _ in range(k - 1):
                out = algebra.multiply(out, base[1])
            return ("elem", out)
        if tag == "prod":
            vals = [ev(x) for x in node[1]]
            out = None
            for v in vals:
                if out is None:
                    out = v
                elif out[0] == "scalar" and v[0] == "scalar":
                    out = ("scalar", out[1] * v[1])
                elif out[0] == "scalar":
                    out = ("elem", v[1].scale(out[1]))
                elif v[0] == "scalar":
                    out = ("elem", out[1].scale(v[1]))
                else:
                    out = ("elem", algebra.multiply(out[1], v[1]))
            return out
        if tag == "div":
            num = ev(node[1])
            den = ev(node[2])
            if den[0] != "scalar":
                raise ExpressionRangeError("division by an algebra element")
            if num[0] == "scalar":
                return ("scalar", num[1] / den[1])
            return ("elem", num[1].scale(den[1].invert()))
        if tag == "sum":
            vals = [(sign, ev(x)) for sign, x in node[1]]
            if all(v[0] == "scalar" for _, v in vals):
                out = f.zero
                for sign, v in vals:
                    out = out + v[1] if sign > 0 else out - v[1]
                return ("scalar", out)
            out = algebra.zero()
            for sign, v in vals:
                e = promote(v)
                out = out + e if sign > 0 else out - e
            return ("elem", out)
        raise AssertionError(f"unknown node {tag!r}")

    return ev(node)


def parse_to_element(text: str, algebra: Algebra,
                     allow_tau_inverse: bool = False) -> Element:
    """Parse and evaluate to an Element (scalars become multiples of 1)."""
    kind, val = evaluate(parse_expression(text), algebra, allow_tau_inverse)
    if kind == "scalar":
        return algebra.one().scale(val)
    return val


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse a pure scalar expression over the given field."""
    phantom = Algebra(field.m, 0, field)
    kind, val = evaluate(parse_expression(text), phantom)
    if kind != "scalar":
        raise ExpressionRangeError("expected a scalar expression")
    return val


def render_element(e: Element) -> str:
    """Canonical rendering, `coeff*[word]` terms; re-parses to an equal Element."""
    return str(e)
