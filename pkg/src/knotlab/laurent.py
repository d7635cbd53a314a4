"""Exact Laurent polynomials in the half-integer variable s = q^(1/2).

Quantum knot invariants of SU(2) live in Z[q^(1/2), q^(-1/2)].  Storing
exponents as integer powers of s keeps every coefficient an exact Python
integer and makes ring arithmetic exact; exponents convert back to powers
of q by halving.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["LaurentHalf", "ZERO", "ONE", "S", "S_INV"]


class LaurentHalf:
    """Integer-coefficient Laurent polynomial in s, canonical and immutable.

    The exponent dictionary never stores zero coefficients, so equality of
    dictionaries is equality in the ring.  Instances are hashable and safe
    to share across threads.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        c = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, a in items:
            if a:
                e = int(e)
                a = c.get(e, 0) + int(a)
                if a:
                    c[e] = a
                else:
                    del c[e]
        object.__setattr__(self, "_c", c)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def term(coeff: int, exp: int) -> "LaurentHalf":
        """Monomial coeff * s**exp."""
        return LaurentHalf({exp: coeff} if coeff else {})

    @staticmethod
    def const(coeff: int) -> "LaurentHalf":
        return LaurentHalf.term(coeff, 0)

    # -- inspection ------------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map (s-exponents)."""
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return max(self._c)

    def is_palindromic(self) -> bool:
        """True when invariant under s -> 1/s (coefficient-wise mirror)."""
        return all(self._c.get(-e) == a for e, a in self._c.items())

    # -- ring operations -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentHalf.const(other)
        if not isinstance(other, LaurentHalf):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __neg__(self) -> "LaurentHalf":
        return LaurentHalf({e: -a for e, a in self._c.items()})

    def __add__(self, other) -> "LaurentHalf":
        if isinstance(other, int):
            other = LaurentHalf.const(other)
        if not isinstance(other, LaurentHalf):
            return NotImplemented
        c = dict(self._c)
        for e, a in other._c.items():
            b = c.get(e, 0) + a
            if b:
                c[e] = b
            else:
                c.pop(e, None)
        out = LaurentHalf.__new__(LaurentHalf)
        object.__setattr__(out, "_c", c)
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentHalf":
        if isinstance(other, int):
            other = LaurentHalf.const(other)
        if not isinstance(other, LaurentHalf):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentHalf":
        return (-self) + other

    def __mul__(self, other) -> "LaurentHalf":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            c = {e: a * other for e, a in self._c.items()}
            out = LaurentHalf.__new__(LaurentHalf)
            object.__setattr__(out, "_c", c)
            return out
        if not isinstance(other, LaurentHalf):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c: dict[int, int] = {}
        for e1, a1 in a.items():
            for e2, a2 in b.items():
                e = e1 + e2
                v = c.get(e, 0) + a1 * a2
                if v:
                    c[e] = v
                else:
                    del c[e]
        out = LaurentHalf.__new__(LaurentHalf)
        object.__setattr__(out, "_c", c)
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentHalf":
        if n < 0:
            if len(self._c) == 1:
                ((e, a),) = self._c.items()
                if a in (1, -1):
                    return LaurentHalf.term(a if n % 2 else 1, e * n)
            raise ValueError("negative powers only defined for unit monomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "LaurentHalf":
        """Multiply by s**k."""
        return LaurentHalf({e + k: a for e, a in self._c.items()})

    def mirrored(self) -> "LaurentHalf":
        """Substitute s -> 1/s."""
        return LaurentHalf({-e: a for e, a in self._c.items()})

    def content(self) -> int:
        """Positive gcd of all coefficients (0 for the zero polynomial)."""
        from math import gcd

        g = 0
        for a in self._c.values():
            g = gcd(g, abs(a))
        return g

    def exact_div(self, other: "LaurentHalf") -> "LaurentHalf":
        """Exact quotient self / other; raises ValueError on any remainder.

        Used where a removable factor is cancelled symbolically, e.g. the
        quantum integer dividing an unnormalized invariant.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        num = dict(self._c)
        den = other._c
        dmax = max(den)
        dlead = den[dmax]
        q: dict[int, int] = {}
        while num:
            nmax = max(num)
            lead = num[nmax]
            if lead % dlead:
                raise ValueError("non-exact division (leading coefficient)")
            coef = lead // dlead
            exp = nmax - dmax
            q[exp] = coef
            for e, a in den.items():
                e2 = e + exp
                v = num.get(e2, 0) - coef * a
                if v:
                    num[e2] = v
                else:
                    num.pop(e2, None)
            if num and max(num) >= nmax:
                raise ValueError("non-exact division")
        return LaurentHalf(q)

    # -- evaluation --------------------------------------------------------------

    def __call__(self, s_value):
        """Evaluate at a numeric point (mpmath, complex, Fraction or int)."""
        total = None
        for e, a in sorted(self._c.items()):
            term = a * s_value ** e
            total = term if total is None else total + term
        if total is None:
            return 0 * s_value
        return total

    def at_one(self) -> int:
        """Exact value at s = 1 (sum of coefficients)."""
        return sum(self._c.values())

    # -- presentation ----------------------------------------------------------

    def q_exponents(self) -> dict[Fraction, int]:
        """Map q-exponent (s-exponent halved) -> coefficient."""
        return {Fraction(e, 2): a for e, a in self._c.items()}

    def q_string_pairs(self) -> list[tuple[str, int]]:
        """(q-exponent string, coefficient) pairs sorted by descending exponent."""
        pairs = sorted(self.q_exponents().items(), key=lambda kv: -kv[0])
        return [(str(e), a) for e, a in pairs]

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            if e == 0:
                parts.append(f"{a:+d}")
            else:
                mag = "" if abs(a) == 1 else str(abs(a)) + "*"
                sign = "+" if a > 0 else "-"
                frac = Fraction(e, 2)
                parts.append(f"{sign}{mag}q^({frac})")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


ZERO = LaurentHalf()
ONE = LaurentHalf.const(1)
S = LaurentHalf.term(1, 1)
S_INV = LaurentHalf.term(1, -1)
