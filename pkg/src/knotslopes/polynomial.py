"""Exact Laurent polynomial arithmetic with arbitrary-precision integer coefficients.

Everything downstream (bracket values, Jones polynomials, colored values)
lives in Z[x, x^{-1}] for one of two variable tags:

* ``A`` -- the bracket variable,
* ``q`` -- the quantum variable, with q = t^{1/2} and t = A^{-4}.

Exponents are integers in the tagged variable; degrees in ``t`` are exposed
as exact rationals (q-exponent / 2).  Values are immutable, hashable and
arithmetic is exact; there is deliberately no floating-point path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ExactDivisionError, VariableMismatchError


@dataclass(frozen=True)
class DegreePair:
    """Maximal and minimal degree of a Laurent polynomial, in t-units."""

    d_plus: Fraction
    d_minus: Fraction

    def __post_init__(self):
        if self.d_plus < self.d_minus:
            raise ValueError("d_plus must be >= d_minus")

    def __iter__(self):
        return iter((self.d_plus, self.d_minus))


class LaurentPoly:
    """A Laurent polynomial in one variable, canonical form (no zero terms)."""

    __slots__ = ("_terms", "variable", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), variable: str = "q"):
        if variable not in ("A", "q"):
            raise ValueError(f"unknown variable tag {variable!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for exp, coeff in items:
            if coeff:
                val = clean.get(exp, 0) + coeff
                if val:
                    clean[exp] = val
                elif exp in clean:
                    del clean[exp]
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "variable", variable)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variable: str = "q") -> "LaurentPoly":
        return cls({}, variable)

    @classmethod
    def one(cls, variable: str = "q") -> "LaurentPoly":
        return cls({0: 1}, variable)

    @classmethod
    def monomial(cls, coeff: int, exp: int, variable: str = "q") -> "LaurentPoly":
        return cls({exp: coeff}, variable)

    # -- basic queries -----------------------------------------------------

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "LaurentPoly"):
        if self.variable != other.variable:
            raise VariableMismatchError(
                f"cannot combine {self.variable!r}-polynomial with {other.variable!r}-polynomial"
            )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            val = out.get(exp, 0) + coeff
            if val:
                out[exp] = val
            elif exp in out:
                del out[exp]
        return LaurentPoly(out, self.variable)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.variable)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                val = out.get(e, 0) + c1 * c2
                if val:
                    out[e] = val
                elif e in out:
                    del out[e]
        return LaurentPoly(out, self.variable)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one(self.variable)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, coeff: int = 1, exp: int = 0) -> "LaurentPoly":
        """Scalar-shift: multiply by the monomial coeff * x^exp."""
        if coeff == 0:
            return LaurentPoly.zero(self.variable)
        return LaurentPoly({e + exp: c * coeff for e, c in self._terms.items()}, self.variable)

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under x -> x^{-1}."""
        return LaurentPoly({-e: c for e, c in self._terms.items()}, self.variable)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises if the division is not exact."""
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero(self.variable)
        rem = dict(self._terms)
        div_lead = other.max_exp()
        div_lead_coeff = other._terms[div_lead]
        quot: dict[int, int] = {}
        while rem:
            lead = max(rem)
            lc = rem[lead]
            q, r = divmod(lc, div_lead_coeff)
            if r:
                raise ExactDivisionError("leading coefficient does not divide")
            qe = lead - div_lead
            quot[qe] = q
            for e, c in other._terms.items():
                k = e + qe
                val = rem.get(k, 0) - q * c
                if val:
                    rem[k] = val
                elif k in rem:
                    del rem[k]
        return LaurentPoly(quot, self.variable)

    # -- evaluation and degrees --------------------------------------------

    def evaluate_t(self, t_value: int) -> int:
        """Evaluate at an integer value of t (requires all q-exponents even)."""
        if self.variable != "q":
            raise VariableMismatchError("t-evaluation is defined for q-polynomials")
        total = 0
        for exp, coeff in self._terms.items():
            if exp % 2:
                raise ValueError("polynomial has a genuine half-integer t-exponent")
            total += coeff * t_value ** (exp // 2) if exp >= 0 else coeff * _int_inv_pow(t_value, -exp // 2)
        return total

    def degrees(self) -> DegreePair:
        """Max/min degree in t-units (q-exponent halved), for q-polynomials."""
        if self.variable != "q":
            raise VariableMismatchError("t-degrees are defined for q-polynomials")
        if not self._terms:
            raise ValueError("zero polynomial has no degrees")
        return DegreePair(Fraction(self.max_exp(), 2), Fraction(self.min_exp(), 2))

    # -- conversions and serialization --------------------------------------

    def to_pairs(self) -> list[list[int]]:
        """Sorted [exponent, coefficient] pairs (exponents in the tagged variable)."""
        return [[e, self._terms[e]] for e in sorted(self._terms)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]], variable: str = "q") -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in pairs}, variable)

    def as_q(self) -> "LaurentPoly":
        """Convert an A-polynomial to the q variable via q = A^{-2}."""
        if self.variable == "q":
            return self
        out = {}
        for exp, coeff in self._terms.items():
            if exp % 2:
                raise ValueError("A-polynomial with odd exponent cannot be written in q")
            out[-exp // 2] = coeff
        return LaurentPoly(out, "q")

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variable == other.variable and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.variable, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        if not self._terms:
            return f"LaurentPoly(0; {self.variable})"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                parts.append(f"{c:+d}")
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                sign = "+" if c > 0 else "-"
                parts.append(f"{sign}{mag}{self.variable}^{e}")
        return f"LaurentPoly({' '.join(parts)})"


def _int_inv_pow(base: int, k: int) -> int:
    # only +-1 have integer inverses; evaluate_t is used at t = +-1
    if base in (1, -1):
        return base**k
    raise ValueError(f"cannot evaluate negative exponents at t={base} over the integers")


def quantum_integer(n: int) -> LaurentPoly:
    """[n]_q = (q^n - q^{-n}) / (q - q^{-1}) = q^{n-1} + q^{n-3} + ... + q^{1-n}."""
    if n < 0:
        raise ValueError("quantum integer needs n >= 0")
    return LaurentPoly({e: 1 for e in range(n - 1, -n, -2)}, "q")


def bracket_delta() -> LaurentPoly:
    """Loop value of the bracket: delta = -A^2 - A^{-2}."""
    return LaurentPoly({2: -1, -2: -1}, "A")


def poly_degrees(p: LaurentPoly) -> DegreePair:
    """Degree pair of a nonzero q-polynomial, in t-units."""
    return p.degrees()
