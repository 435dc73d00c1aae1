"""Sparse single-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable ``{exponent: coefficient}`` with zero terms dropped.

    ``var`` is only a display name; arithmetic between polynomials in
    different variables is refused.
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self.var = var
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "A") -> "LaurentPoly":
        return cls({exp: coeff}, var)

    @classmethod
    def one(cls, var: str = "A") -> "LaurentPoly":
        return cls({0: 1}, var)

    @classmethod
    def zero(cls, var: str = "A") -> "LaurentPoly":
        return cls({}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    @property
    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def _check(self, other: "LaurentPoly") -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have integer inverses")
            return LaurentPoly({-e * -n: c ** -n}, self.var)
        result = LaurentPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def substitute_power(self, k: int, var: str | None = None) -> "LaurentPoly":
        """Replace the variable ``v`` by ``v**k`` (``k`` may be negative)."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()}, var or self.var)

    def compress(self, k: int, var: str | None = None) -> "LaurentPoly":
        """Inverse of ``substitute_power(k)``; every exponent must be divisible by ``k``."""
        if any(e % k for e in self._terms):
            raise ValueError(f"exponents not all divisible by {k}")
        return LaurentPoly({e // k: c for e, c in self._terms.items()}, var or self.var)

    def mirror(self) -> "LaurentPoly":
        return self.substitute_power(-1)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Long division that must leave no remainder."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.var)
        offset = self.min_degree - other.min_degree
        rem = {e - self.min_degree: c for e, c in self._terms.items()}
        div = {e - other.min_degree: c for e, c in other._terms.items()}
        top_d = max(div)
        lead = div[top_d]
        quot: dict[int, int] = {}
        while rem and max(rem) >= top_d:
            top = max(rem)
            c = rem[top]
            if c % lead:
                raise ValueError("non-integral quotient")
            q, k = c // lead, top - top_d
            quot[k] = q
            for e, dc in div.items():
                v = rem.get(e + k, 0) - q * dc
                if v:
                    rem[e + k] = v
                else:
                    rem.pop(e + k, None)
        if rem:
            raise ValueError("division leaves a remainder")
        return LaurentPoly({e + offset: c for e, c in quot.items()}, self.var)

    def evaluate(self, value):
        return sum(c * value ** e for e, c in self._terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, tuple(self._terms.items())))
        return self._hash

    def to_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_dict(cls, d: Mapping[str, int], var: str = "A") -> "LaurentPoly":
        return cls({int(e): c for e, c in d.items()}, var)

    def __repr__(self):
        return f"LaurentPoly({self._terms!r}, var={self.var!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str | None = None, denominator: int = 1) -> str:
        """Human-readable form; ``denominator`` prints exponents as fractions."""
        if not self._terms:
            return "0"
        name = var or self.var
        parts = []
        for e, c in sorted(self._terms.items()):
            if e == 0:
                mono = ""
            else:
                if e % denominator == 0:
                    ex = str(e // denominator)
                else:
                    ex = f"{e}/{denominator}"
                mono = name if ex == "1" else f"{name}^{ex}" if not ex.startswith("-") and "/" not in ex else f"{name}^({ex})"
            if mono == "":
                term = str(abs(c))
            elif abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out
