"""Sparse multivariate Laurent polynomials with integer coefficients.

Exponent vectors are fixed-arity integer tuples; variable names live only in
the text/JSON renderers.  Values are immutable: every operation returns a
new polynomial and zero coefficients are never stored.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class LaurentPolynomial:
    __slots__ = ("_terms", "arity", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (), arity: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = defaultdict(int)
        for exp, coef in items:
            acc[tuple(exp)] += coef
        clean = {e: c for e, c in acc.items() if c}
        arities = {len(e) for e in clean}
        if arity is None:
            if len(arities) > 1:
                raise ValueError(f"mixed arities {sorted(arities)}")
            arity = arities.pop() if arities else 0
        elif arities - {arity}:
            raise ValueError(f"exponent arity does not match {arity}")
        self._terms = clean
        self.arity = arity
        self._hash = None

    @classmethod
    def constant(cls, c: int, arity: int) -> "LaurentPolynomial":
        return cls({(0,) * arity: c}, arity)

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: int = 1) -> "LaurentPolynomial":
        return cls({tuple(exp): coef}, len(exp))

    @classmethod
    def variable(cls, index: int, arity: int, power: int = 1) -> "LaurentPolynomial":
        exp = [0] * arity
        exp[index] = power
        return cls({tuple(exp): 1}, arity)

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def __getitem__(self, exp):
        return self.coefficient(exp)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.arity != self.arity and other._terms and self._terms:
                raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.arity)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        arity = self.arity if self._terms else other.arity
        return LaurentPolynomial(list(self.items()) + list(other.items()), arity)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.items()}, self.arity)

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
        acc: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self.items():
            for e2, c2 in other.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPolynomial(acc, self.arity)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((e, c),) = self.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPolynomial.monomial(tuple(-x for x in e), c) ** (-k)
        result = LaurentPolynomial.constant(1, self.arity)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.arity)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_exponents(self, fn: Callable[[Exponent], Sequence[int]], arity: int | None = None) -> "LaurentPolynomial":
        """Apply ``fn`` to every exponent vector, merging terms that collide."""
        return LaurentPolynomial(((tuple(fn(e)), c) for e, c in self.items()), arity)

    def reflect(self) -> "LaurentPolynomial":
        """Substitute every variable by its inverse."""
        return self.map_exponents(lambda e: tuple(-x for x in e), self.arity)

    def total(self) -> int:
        """Sum of coefficients, i.e. the value at all-ones."""
        return sum(self._terms.values())

    def degree_range(self, var: int) -> tuple[int, int]:
        exps = [e[var] for e in self._terms]
        return (min(exps), max(exps)) if exps else (0, 0)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms ordered by total degree, then lexicographically by exponent."""
        return sorted(self.items(), key=lambda t: (sum(t[0]), t[0]))

    def to_text(self, names: Sequence[str]) -> str:
        if len(names) != self.arity:
            raise ValueError(f"need {self.arity} variable names")
        if not self._terms:
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            factors = []
            for name, k in zip(names, exp):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            mag = abs(coef)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if coef < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self, names: Sequence[str]) -> dict:
        return {
            "vars": list(names),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPolynomial":
        arity = len(data["vars"])
        return cls(((tuple(t["exp"]), int(t["coef"])) for t in data["terms"]), arity)

    def __repr__(self):
        names = [f"x{i + 1}" for i in range(self.arity)]
        return f"LaurentPolynomial({self.to_text(names)})"
