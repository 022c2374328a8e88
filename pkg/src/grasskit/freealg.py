"""Polynomials in free graded variables, the term model for identity checks.

Variables come in two degrees: y-variables (degree 0) and z-variables
(degree 1).  A polynomial is a rational combination of words in these
variables; multiplication concatenates words, nothing commutes.  Evaluating a
polynomial against homogeneous values in a graded algebra is substitution
word by word.

Text form: ``2*z1*z2 - z2*z1``, with ``[a, b]`` as sugar for the commutator
a*b - b*a.  Parentheses group as usual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

ScalarLike = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class GradedVariable:
    degree: int
    name: str

    def __post_init__(self):
        if self.degree not in (0, 1):
            raise ValueError(f"degree must be 0 or 1, got {self.degree}")

    def __str__(self) -> str:
        return self.name


def yvar(i: int) -> GradedVariable:
    """The i-th degree-0 variable."""
    return GradedVariable(0, f"y{i}")


def zvar(i: int) -> GradedVariable:
    """The i-th degree-1 variable."""
    return GradedVariable(1, f"z{i}")


Word = Tuple[GradedVariable, ...]

_ZERO = Fraction(0)


class GradedPolynomial:
    """Sparse rational combination of words; immutable by convention."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, ScalarLike] | Iterable[tuple[Word, ScalarLike]] | None = None):
        data: dict[Word, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coeff in items:
                word = tuple(word)
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                acc = data.get(word, _ZERO) + coeff
                if acc:
                    data[word] = acc
                else:
                    data.pop(word, None)
        self._terms = data

    @classmethod
    def _raw(cls, data: dict[Word, Fraction]) -> "GradedPolynomial":
        poly = cls.__new__(cls)
        poly._terms = data
        return poly

    @classmethod
    def zero(cls) -> "GradedPolynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, c: ScalarLike) -> "GradedPolynomial":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def variable(cls, v: GradedVariable) -> "GradedPolynomial":
        return cls._raw({(v,): Fraction(1)})

    def terms(self) -> Iterator[tuple[Word, Fraction]]:
        for word in sorted(self._terms, key=lambda w: (len(w), tuple(str(v) for v in w))):
            yield word, self._terms[word]

    def variables(self) -> tuple[GradedVariable, ...]:
        """All variables that occur, sorted by degree then name."""
        seen = {v for word in self._terms for v in word}
        return tuple(sorted(seen))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @staticmethod
    def _coerce(value) -> "GradedPolynomial | None":
        if isinstance(value, GradedPolynomial):
            return value
        if isinstance(value, GradedVariable):
            return GradedPolynomial.variable(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return GradedPolynomial.constant(value)
        return None

    def __add__(self, other) -> "GradedPolynomial":
        rhs = GradedPolynomial._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for word, coeff in rhs._terms.items():
            acc = out.get(word, _ZERO) + coeff
            if acc:
                out[word] = acc
            else:
                out.pop(word, None)
        return GradedPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "GradedPolynomial":
        rhs = GradedPolynomial._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "GradedPolynomial":
        lhs = GradedPolynomial._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other) -> "GradedPolynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            if not c:
                return GradedPolynomial.zero()
            return GradedPolynomial._raw({w: coeff * c for w, coeff in self._terms.items()})
        rhs = GradedPolynomial._coerce(other)
        if rhs is None:
            return NotImplemented
        out: dict[Word, Fraction] = {}
        for wx, cx in self._terms.items():
            for wy, cy in rhs._terms.items():
                word = wx + wy
                acc = out.get(word, _ZERO) + cx * cy
                if acc:
                    out[word] = acc
                else:
                    out.pop(word, None)
        return GradedPolynomial._raw(out)

    def __rmul__(self, other) -> "GradedPolynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.__mul__(other)
        if isinstance(other, GradedVariable):
            return GradedPolynomial.variable(other) * self
        return NotImplemented

    def __eq__(self, other) -> bool:
        rhs = GradedPolynomial._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for word, coeff in self.terms():
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if not word:
                body = str(mag)
            elif mag == 1:
                body = "*".join(str(v) for v in word)
            else:
                body = str(mag) + "*" + "*".join(str(v) for v in word)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"GradedPolynomial({str(self)!r})"


def commutator(a, b) -> GradedPolynomial:
    a = GradedPolynomial._coerce(a)
    b = GradedPolynomial._coerce(b)
    return a * b - b * a


class GradedPolyParseError(ValueError):
    """Malformed polynomial text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class _Parser:
    # expr   := ['-'] term (('+'|'-') term)*
    # term   := factor ('*' factor)*
    # factor := NUMBER ['/' NUMBER] | VARIABLE | '(' expr ')' | '[' expr ',' expr ']'

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise GradedPolyParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def read_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    def parse(self) -> GradedPolynomial:
        self.skip_ws()
        if self.pos == len(self.text):
            self.error("empty polynomial text")
        poly = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error(f"unexpected {self.peek()!r}")
        return poly

    def expr(self) -> GradedPolynomial:
        self.skip_ws()
        negate = False
        if self.peek() == "-":
            negate = True
            self.pos += 1
        total = self.term()
        if negate:
            total = -total
        while True:
            self.skip_ws()
            op = self.peek()
            if op not in ("+", "-"):
                return total
            self.pos += 1
            rhs = self.term()
            total = total + rhs if op == "+" else total - rhs

    def term(self) -> GradedPolynomial:
        total = self.factor()
        while True:
            self.skip_ws()
            if self.peek() != "*":
                return total
            self.pos += 1
            total = total * self.factor()

    def factor(self) -> GradedPolynomial:
        self.skip_ws()
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.skip_ws()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        if ch == "[":
            self.pos += 1
            left = self.expr()
            self.skip_ws()
            if self.peek() != ",":
                self.error("expected ',' inside brackets")
            self.pos += 1
            right = self.expr()
            self.skip_ws()
            if self.peek() != "]":
                self.error("expected ']'")
            self.pos += 1
            return commutator(left, right)
        if ch.isdigit():
            num = self.read_int()
            self.skip_ws()
            if self.peek() == "/":
                self.pos += 1
                self.skip_ws()
                at = self.pos
                den = self.read_int()
                if den == 0:
                    self.pos = at
                    self.error("zero denominator")
                return GradedPolynomial.constant(Fraction(num, den))
            return GradedPolynomial.constant(num)
        if ch in ("y", "z"):
            at = self.pos
            self.pos += 1
            if not self.peek().isdigit():
                self.pos = at
                self.error("expected a variable index")
            idx = self.read_int()
            if idx < 1:
                self.pos = at
                self.error("variable index must be >= 1")
            return GradedPolynomial.variable(yvar(idx) if ch == "y" else zvar(idx))
        self.error(f"unexpected {ch!r}" if ch else "unexpected end of text")


def parse_graded_poly(text: str) -> GradedPolynomial:
    """Parse the polynomial grammar described in the module docstring."""
    return _Parser(text).parse()
