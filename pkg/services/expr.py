# services/expr.py
"""Parser for algebra and module expressions.

    expr := ["+"|"-"] term {("+"|"-") term}
    term := [scalar "*"] atom | scalar
    atom := GEN | VEC | "[" expr "," expr "]" | "(" expr ")"

GEN is ``L<int>``, ``I<int>``, ``CL``, ``CLI`` or ``CI``; VEC is ``v<int>``.
Complex coefficients are parenthesized: ``(1+i)*L1``. A bare scalar term is
accepted only when it is zero, so ``0`` parses as the empty sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Tuple, Union

from core.algebra import CI, CL, CLI, ZERO_ELEMENT, AlgElement, Generator, I, L, bracket
from core.errors import ParseError, SortError
from core.scalar import ONE, Scalar, scan_scalar
from services.intermediate import ZERO_VEC, ModuleVec

Sort = Literal["algebra", "module"]


# ──────────────────────────────────────────────
# parse tree
# ──────────────────────────────────────────────

@dataclass(frozen=True)
class Gen:
    generator: Generator


@dataclass(frozen=True)
class Vec:
    index: int


@dataclass(frozen=True)
class Bracket:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Group:
    inner: "Expr"


Atom = Union[Gen, Vec, Bracket, Group]


@dataclass(frozen=True)
class Term:
    coeff: Scalar
    atom: Optional[Atom]  # None for a bare zero


@dataclass(frozen=True)
class Expr:
    terms: Tuple[Term, ...]
    sort: Optional[Sort]  # None when every term is a bare zero


def _merge(a: Optional[Sort], b: Optional[Sort], pos: int) -> Optional[Sort]:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise SortError(f"cannot mix algebra and module terms (at position {pos})")


# ──────────────────────────────────────────────
# parser
# ──────────────────────────────────────────────

_CENTRALS = (("CLI", CLI), ("CL", CL), ("CI", CI))


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, expected: str) -> ParseError:
        return ParseError(self.pos, expected, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.fail(repr(ch))
        self.pos += 1

    def parse(self) -> Expr:
        out = self.expr()
        if self.peek():
            raise self.fail("'+', '-' or end of input")
        return out

    def expr(self) -> Expr:
        terms = []
        sort: Optional[Sort] = None
        sign = ONE
        lead = self.peek()
        if lead in ("+", "-"):
            sign = -ONE if lead == "-" else ONE
            self.pos += 1
        while True:
            start = self.pos
            term, term_sort = self.term()
            sort = _merge(sort, term_sort, start)
            terms.append(Term(sign * term.coeff, term.atom))
            ch = self.peek()
            if ch not in ("+", "-"):
                return Expr(tuple(terms), sort)
            sign = -ONE if ch == "-" else ONE
            self.pos += 1

    def term(self) -> Tuple[Term, Optional[Sort]]:
        self.skip()
        coeff = self.coefficient()
        if coeff is None:
            atom, sort = self.atom()
            return Term(ONE, atom), sort
        value, has_star = coeff
        if has_star:
            atom, sort = self.atom()
            return Term(value, atom), sort
        if not value.is_zero:
            raise self.fail("'*' and an atom after a nonzero scalar")
        return Term(value, None), None

    def coefficient(self) -> Optional[Tuple[Scalar, bool]]:
        """Scalar prefix of a term and whether a '*' followed it."""
        start = self.pos
        if self.peek() == "(":
            self.pos += 1
            self.skip()
            found = scan_scalar(self.text, self.pos, signed=True, complex_tail=True)
            if found is not None:
                value, end = found
                self.pos = end
                if self.peek() == ")":
                    self.pos += 1
                    if self.peek() == "*":
                        self.pos += 1
                        return value, True
            # a parenthesized expression, not a coefficient
            self.pos = start
            return None
        found = scan_scalar(self.text, self.pos, signed=False, complex_tail=False)
        if found is None:
            return None
        value, self.pos = found
        if self.peek() == "*":
            self.pos += 1
            return value, True
        return value, False

    def atom(self) -> Tuple[Atom, Sort]:
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            start = self.pos
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            if "module" in (left.sort, right.sort):
                raise SortError(f"bracket of module vectors (at position {start})")
            return Bracket(left, right), "algebra"
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            if inner.sort is None:
                raise self.fail("an atom inside parentheses")
            return Group(inner), inner.sort
        for token, g in _CENTRALS:
            if self.text.startswith(token, self.pos):
                self.pos += len(token)
                return Gen(g), "algebra"
        if ch in ("L", "I"):
            self.pos += 1
            n = self.index()
            return Gen(L(n) if ch == "L" else I(n)), "algebra"
        if ch == "v":
            self.pos += 1
            return Vec(self.index()), "module"
        raise self.fail("a generator, a vector, '[' or '('")

    def index(self) -> int:
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.fail("an integer index")
        return int(self.text[start:self.pos])


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


# ──────────────────────────────────────────────
# evaluation
# ──────────────────────────────────────────────

def _eval_atom(atom: Atom) -> Union[AlgElement, ModuleVec]:
    if isinstance(atom, Gen):
        return AlgElement.of(atom.generator)
    if isinstance(atom, Vec):
        return ModuleVec.basis(atom.index)
    if isinstance(atom, Bracket):
        return bracket(eval_expr(atom.left, "algebra"), eval_expr(atom.right, "algebra"))
    return eval_expr(atom.inner, atom.inner.sort)


def eval_expr(e: Expr, sort: Optional[Sort] = None) -> Union[AlgElement, ModuleVec]:
    """Value of ``e``; an all-zero expression takes ``sort`` (algebra by default)."""
    target = e.sort or sort or "algebra"
    if sort is not None and e.sort is not None and e.sort != sort:
        raise SortError(f"expected an {sort} expression, got {e.sort}")
    total: Union[AlgElement, ModuleVec] = ZERO_ELEMENT if target == "algebra" else ZERO_VEC
    for term in e.terms:
        if term.atom is not None:
            total = total + _eval_atom(term.atom) * term.coeff
    return total


def parse_element(text: str) -> AlgElement:
    return eval_expr(parse_expr(text), "algebra")  # type: ignore[return-value]


def parse_vector(text: str) -> ModuleVec:
    return eval_expr(parse_expr(text), "module")  # type: ignore[return-value]
