from __future__ import annotations

from typing import TYPE_CHECKING, Iterator, Mapping

from yokonuma.errors import ContextMismatchError
from yokonuma.fields import Cyclotomic, is_rational_value
from yokonuma.kernel.words import Word

if TYPE_CHECKING:
    from yokonuma.kernel.context import AlgebraContext


class Element:
    """A sparse linear combination of normal words of one algebra.

    ``x * y`` is the algebra product; multiplying by an int, Fraction or
    ``Cyclotomic`` scales. Elements are treated as immutable values.

    Args:
        context: the algebra the element lives in
        terms: map from normal word to nonzero coefficient
    """

    __slots__ = ("context", "terms")

    def __init__(self, context: "AlgebraContext", terms: Mapping[Word, Cyclotomic]):
        self.context = context
        self.terms = dict(terms)

    def _same(self, other: "Element") -> None:
        if other.context is not self.context and other.context.key != self.context.key:
            raise ContextMismatchError(f"cannot combine elements of {self.context} and {other.context}")

    def _lift(self, other):
        if isinstance(other, Element):
            self._same(other)
            return other
        if isinstance(other, Cyclotomic) or is_rational_value(other):
            return self.context.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            total = out.get(w)
            total = c if total is None else total + c
            if total:
                out[w] = total
            else:
                out.pop(w, None)
        return Element(self.context, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.context, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Element":
        c = self.context.scalar(c)
        if not c:
            return Element(self.context, {})
        return Element(self.context, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.context.multiply(self, other)
        if isinstance(other, Cyclotomic) or is_rational_value(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Cyclotomic) or is_rational_value(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic) or is_rational_value(other):
            return self.scale(self.context.scalar(other).inverse())
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("elements can only be raised to nonnegative integer powers")
        out = self.context.one()
        for _ in range(exponent):
            out = out * self
        return out

    def star(self) -> "Element":
        return self.context.star(self)

    def coefficient(self, word: Word) -> Cyclotomic:
        return self.terms.get(word, Cyclotomic.zero(self.context.order))

    def items(self) -> list[tuple[Word, Cyclotomic]]:
        """Terms in canonical order."""
        return sorted(self.terms.items())

    def __iter__(self) -> Iterator[tuple[Word, Cyclotomic]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.context.key == other.context.key and self.terms == other.terms
        if isinstance(other, Cyclotomic) or is_rational_value(other):
            return self.terms == self.context.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context.key, frozenset(self.terms.items())))

    def to_json(self) -> dict:
        return {
            "r": self.context.r,
            "n": self.context.n,
            "d": self.context.d,
            "terms": [
                {
                    "alpha": list(w.alpha),
                    "beta": list(w.beta),
                    "w": list(w.perm),
                    "coeff": c.to_json(),
                }
                for w, c in self.items()
            ],
        }

    def __repr__(self) -> str:
        return f"Element({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            factors = [f"X{k}^{a}" if a > 1 else f"X{k}" for k, a in enumerate(w.alpha, 1) if a]
            factors += [f"t{k}^{b}" if b > 1 else f"t{k}" for k, b in enumerate(w.beta, 1) if b]
            if not w.perm.is_identity():
                factors.append("g[" + "".join(map(str, w.perm.reduced_word())) + "]")
            mono = "*".join(factors)
            if not mono:
                parts.append(f"({c})")
            else:
                parts.append(mono if c == 1 else f"({c})*{mono}")
        return " + ".join(parts)
