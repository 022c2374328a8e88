"""Exact sparse arithmetic in the infinite-dimensional exterior algebra over Q.

Generators e1, e2, ... satisfy e_i e_j = -e_j e_i, so in particular every
generator squares to zero.  A linear basis of the algebra is 1 together with
all finite products e_{i1} e_{i2} ... e_{ik} with i1 < i2 < ... < ik.  A value
is stored sparsely as a map from such index tuples to nonzero rational
coefficients, so equality of values is structural equality and every
computation is exact.

Monomials are plain tuples of strictly increasing positive ints; the canonical
order on them is by length first, then lexicographically.  `Element` instances
are immutable once built and hashable.

The text form used across the package (reports, spec files, test fixtures)
writes an element as its terms in canonical order, for example
``1 - 2*e1e2 + e2e3e4``.  `parse_element` reads the same grammar back, and is
a little more forgiving: generator factors may appear out of order and are
normalized with the appropriate sign.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

Monomial = Tuple[int, ...]
ScalarLike = Union[int, Fraction]

UNIT: Monomial = ()

_ZERO = Fraction(0)


def monomial_key(mono: Monomial) -> tuple[int, Monomial]:
    """Sort key realizing the canonical order: length, then lexicographic."""
    return (len(mono), mono)


def as_monomial(indices: Iterable[int]) -> Monomial:
    """Validate and return a basis monomial (strictly increasing, all >= 1)."""
    mono = tuple(indices)
    last = 0
    for idx in mono:
        if not isinstance(idx, int) or isinstance(idx, bool):
            raise ValueError(f"generator index must be an int, got {idx!r}")
        if idx < 1:
            raise ValueError(f"generator index must be >= 1, got {idx}")
        if idx <= last:
            raise ValueError(f"indices must be strictly increasing, got {mono}")
        last = idx
    return mono


def mono_mul(x: Monomial, y: Monomial) -> tuple[int, Monomial] | None:
    """Multiply two basis monomials.

    Returns ``(sign, product)`` where ``product`` is the sorted merge of the
    two index tuples and ``sign`` is +1 or -1, or ``None`` when the monomials
    share an index and the product is zero.  The sign is the parity of the
    number of pairs (a in x, b in y) with a > b, i.e. of the permutation that
    sorts the concatenation x ++ y.
    """
    if not x:
        return 1, y
    if not y:
        return 1, x
    merged: list[int] = []
    inversions = 0
    i = j = 0
    nx, ny = len(x), len(y)
    while i < nx and j < ny:
        a, b = x[i], y[j]
        if a == b:
            return None
        if a < b:
            merged.append(a)
            i += 1
        else:
            # y[j] jumps over every factor of x not yet consumed
            merged.append(b)
            inversions += nx - i
            j += 1
    merged.extend(x[i:])
    merged.extend(y[j:])
    sign = -1 if inversions & 1 else 1
    return sign, tuple(merged)


def _canonical_product(indices: Iterable[int]) -> tuple[int, Monomial] | None:
    """Fold a sequence of generator indices into a signed basis monomial.

    Accepts indices in any order; returns None when an index repeats.
    """
    sign = 1
    mono: Monomial = ()
    for idx in indices:
        step = mono_mul(mono, (idx,))
        if step is None:
            return None
        s, mono = step
        sign *= s
    return sign, mono


class Element:
    """A finite rational combination of basis monomials.

    Treat instances as immutable.  Arithmetic is available through the usual
    operators; scalars (int or Fraction) coerce on either side, so expressions
    like ``1 - 2 * Element.generator(1)`` work directly.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, ScalarLike] | Iterable[tuple[Monomial, ScalarLike]] | None = None):
        data: dict[Monomial, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, coeff in items:
                mono = as_monomial(mono)
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                acc = data.get(mono, _ZERO) + coeff
                if acc:
                    data[mono] = acc
                else:
                    data.pop(mono, None)
        self._terms = data
        self._hash = None

    @classmethod
    def _raw(cls, data: dict[Monomial, Fraction]) -> "Element":
        # Trusted constructor: data must already be canonical and zero-free.
        el = cls.__new__(cls)
        el._terms = data
        el._hash = None
        return el

    # ---- constructors ----

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Element":
        return cls._raw({UNIT: Fraction(1)})

    @classmethod
    def scalar(cls, c: ScalarLike) -> "Element":
        c = Fraction(c)
        return cls._raw({UNIT: c} if c else {})

    @classmethod
    def generator(cls, i: int) -> "Element":
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        return cls._raw({(i,): Fraction(1)})

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff: ScalarLike = 1) -> "Element":
        """Element with a single term; indices must be strictly increasing."""
        mono = as_monomial(indices)
        c = Fraction(coeff)
        return cls._raw({mono: c} if c else {})

    # ---- inspection ----

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in canonical monomial order."""
        for mono in sorted(self._terms, key=monomial_key):
            yield mono, self._terms[mono]

    def coefficient(self, mono: Iterable[int]) -> Fraction:
        return self._terms.get(as_monomial(mono), _ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def support_bound(self) -> int:
        """Largest generator index that occurs, 0 for scalars and zero."""
        best = 0
        for mono in self._terms:
            if mono and mono[-1] > best:
                best = mono[-1]
        return best

    def parity_split(self) -> tuple["Element", "Element"]:
        """Split into the even-length and odd-length parts of the monomial
        grading.  The even part lies in the center of the algebra."""
        even: dict[Monomial, Fraction] = {}
        odd: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            (odd if len(mono) & 1 else even)[mono] = coeff
        return Element._raw(even), Element._raw(odd)

    # ---- arithmetic ----

    @staticmethod
    def _coerce(value) -> "Element | None":
        if isinstance(value, Element):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Element.scalar(value)
        return None

    def __add__(self, other) -> "Element":
        rhs = Element._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            acc = out.get(mono, _ZERO) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return Element._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Element":
        rhs = Element._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other) -> "Element":
        lhs = Element._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __neg__(self) -> "Element":
        return Element._raw({m: -c for m, c in self._terms.items()})

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            out: dict[Monomial, Fraction] = {}
            for mx, cx in self._terms.items():
                for my, cy in other._terms.items():
                    prod = mono_mul(mx, my)
                    if prod is None:
                        continue
                    sign, mono = prod
                    acc = out.get(mono, _ZERO) + (cx * cy if sign > 0 else -cx * cy)
                    if acc:
                        out[mono] = acc
                    else:
                        out.pop(mono, None)
            return Element._raw(out)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            if not c:
                return Element.zero()
            return Element._raw({m: coeff * c for m, coeff in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "Element":
        # Scalars commute with everything, so this only needs the scalar case.
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other) -> "Element":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            if not c:
                raise ZeroDivisionError("division of an element by zero")
            return Element._raw({m: coeff / c for m, coeff in self._terms.items()})
        return NotImplemented

    # ---- equality and hashing ----

    def __eq__(self, other) -> bool:
        rhs = Element._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return NotImplemented
        return not eq

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---- text form ----

    def __str__(self) -> str:
        return render_element(self)

    def __repr__(self) -> str:
        return f"Element({render_element(self)!r})"


def _mono_text(mono: Monomial) -> str:
    return "".join(f"e{i}" for i in mono)


def render_element(el: Element) -> str:
    """Canonical text form, e.g. ``1 - 2*e1e2 + e2e3e4``; zero renders as 0."""
    if el.is_zero():
        return "0"
    pieces: list[str] = []
    for mono, coeff in el.terms():
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if mono == UNIT:
            body = str(mag)
        elif mag == 1:
            body = _mono_text(mono)
        else:
            body = f"{mag}*{_mono_text(mono)}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


class ElementParseError(ValueError):
    """Raised on malformed element text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _read_int(text: str, pos: int) -> tuple[int, int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ElementParseError("expected digits", start)
    return int(text[start:pos]), pos


def _read_monomial(text: str, pos: int) -> tuple[list[int], int]:
    indices: list[int] = []
    while pos < len(text) and text[pos] == "e" and pos + 1 < len(text) and text[pos + 1].isdigit():
        idx, pos = _read_int(text, pos + 1)
        if idx < 1:
            raise ElementParseError("generator index must be >= 1", pos)
        indices.append(idx)
    return indices, pos


def parse_element(text: str) -> Element:
    """Parse the element grammar.

    Terms are separated by + or -, each term an optional rational coefficient
    (``2``, ``-3/4``) optionally joined by ``*`` to a monomial written as
    concatenated generators (``e1e2e14``).  Factors inside a monomial may be
    out of order; repeated factors make the term zero.
    """
    total = Element.zero()
    pos = _skip_ws(text, 0)
    if pos == len(text):
        raise ElementParseError("empty element text", pos)
    first = True
    while pos < len(text):
        sign = 1
        pos = _skip_ws(text, pos)
        if not first or (pos < len(text) and text[pos] in "+-"):
            if pos >= len(text) or text[pos] not in "+-":
                raise ElementParseError("expected '+' or '-' between terms", pos)
            if text[pos] == "-":
                sign = -1
            pos = _skip_ws(text, pos + 1)
        first = False
        coeff = Fraction(1)
        saw_coeff = False
        if pos < len(text) and text[pos].isdigit():
            num, pos = _read_int(text, pos)
            coeff = Fraction(num)
            saw_coeff = True
            look = _skip_ws(text, pos)
            if look < len(text) and text[look] == "/":
                den_at = _skip_ws(text, look + 1)
                den, pos = _read_int(text, den_at)
                if den == 0:
                    raise ElementParseError("zero denominator", den_at)
                coeff = Fraction(num, den)
        look = _skip_ws(text, pos)
        saw_star = False
        if saw_coeff and look < len(text) and text[look] == "*":
            saw_star = True
            pos = _skip_ws(text, look + 1)
        elif look < len(text) and text[look] == "e":
            pos = look
        indices, after = _read_monomial(text, pos)
        if indices:
            pos = after
        elif saw_star:
            raise ElementParseError("expected a monomial after '*'", pos)
        elif not saw_coeff:
            raise ElementParseError("expected a coefficient or a monomial", pos)
        folded = _canonical_product(indices)
        if folded is not None:
            fsign, mono = folded
            total = total + Element.monomial(mono, sign * fsign * coeff)
        pos = _skip_ws(text, pos)
    return total
