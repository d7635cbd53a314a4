"""Integer-coefficient polynomials in the holonomy eigenvalues (l, m).

Carrier for A-polynomials of character varieties and for classical limits
of shift operators.  Terms are kept sorted with no zero coefficients, so
two equal polynomials compare equal term by term.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

__all__ = ["BivarPoly"]


class BivarPoly:
    """Polynomial sum of c * l^i * m^j with integer c and i, j >= 0."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[int, int, int]] = ()):
        acc: dict[tuple[int, int], int] = {}
        for c, i, j in terms:
            if i < 0 or j < 0:
                raise ValueError("negative degree in BivarPoly term")
            if c:
                key = (int(i), int(j))
                v = acc.get(key, 0) + int(c)
                if v:
                    acc[key] = v
                else:
                    del acc[key]
        object.__setattr__(
            self, "terms",
            tuple(sorted((c, i, j) for (i, j), c in acc.items())))

    def __setattr__(self, *a):
        raise AttributeError("BivarPoly is immutable")

    # -- construction --------------------------------------------------------

    @staticmethod
    def const(c: int) -> "BivarPoly":
        return BivarPoly([(c, 0, 0)])

    @staticmethod
    def monomial(c: int, deg_l: int, deg_m: int) -> "BivarPoly":
        return BivarPoly([(c, deg_l, deg_m)])

    # -- ring ops ---------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly([(-c, i, j) for c, i, j in self.terms])

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        return BivarPoly(list(self.terms) + list(other.terms))

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            return BivarPoly([(c * other, i, j) for c, i, j in self.terms])
        out = []
        for c1, i1, j1 in self.terms:
            for c2, i2, j2 in other.terms:
                out.append((c1 * c2, i1 + i2, j1 + j2))
        return BivarPoly(out)

    __rmul__ = __mul__

    # -- queries -------------------------------------------------------------------

    def degree_l(self) -> int:
        return max((i for _, i, _ in self.terms), default=0)

    def degree_m(self) -> int:
        return max((j for _, _, j in self.terms), default=0)

    def content(self) -> int:
        from math import gcd

        g = 0
        for c, _, _ in self.terms:
            g = gcd(g, abs(c))
        return g

    def primitive(self) -> "BivarPoly":
        """Divide out the integer content (sign fixed by the leading term)."""
        g = self.content()
        if g in (0, 1):
            p = self
        else:
            p = BivarPoly([(c // g, i, j) for c, i, j in self.terms])
        if p.terms and p.terms[-1][0] < 0:
            p = -p
        return p

    def __call__(self, l_value, m_value):
        """Evaluate at numeric (l, m); exact for int/Fraction inputs."""
        total = 0 * l_value
        for c, i, j in self.terms:
            total = total + c * l_value ** i * m_value ** j
        return total

    def coeffs_in_l(self, m_value) -> list:
        """Coefficient list [c_0, ..., c_deg] of the polynomial in l at fixed m."""
        deg = self.degree_l()
        out = [0 * m_value] * (deg + 1)
        for c, i, j in self.terms:
            out[i] = out[i] + c * m_value ** j
        return out

    def l_derivative(self) -> "BivarPoly":
        return BivarPoly([(c * i, i - 1, j) for c, i, j in self.terms if i > 0])

    def l_discriminant_at(self, m_value):
        """Discriminant in l at fixed m: res(p, p') / lc, up to the standard sign.

        Exact for exact m; computed from the Sylvester matrix with
        fraction-free arithmetic.
        """
        cs = self.coeffs_in_l(m_value)
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        n = len(cs) - 1
        if n < 1:
            raise ValueError("discriminant needs l-degree >= 1")
        ds = [i * cs[i] for i in range(1, n + 1)]
        res = _resultant(cs, ds)
        sign = -1 if (n * (n - 1) // 2) % 2 else 1
        return sign * Fraction(res, 1) / cs[-1] if isinstance(res, int) else sign * res / cs[-1]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for c, i, j in reversed(self.terms):
            bits = []
            if abs(c) != 1 or (i == 0 and j == 0):
                bits.append(str(abs(c)))
            if i:
                bits.append("l" + (f"^{i}" if i > 1 else ""))
            if j:
                bits.append("m" + (f"^{j}" if j > 1 else ""))
            parts.append(("+" if c > 0 else "-") + "*".join(bits))
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def _resultant(p: list, q: list):
    """Resultant of two univariate polynomials given low-to-high coefficients."""
    n, m = len(p) - 1, len(q) - 1
    size = n + m
    rows = []
    for k in range(m):
        rows.append([0] * k + p[::-1] + [0] * (m - 1 - k))
    for k in range(n):
        rows.append([0] * k + q[::-1] + [0] * (n - 1 - k))
    return _det_bareiss([row[:size] for row in rows])


def _det_bareiss(a: list[list]):
    """Fraction-free determinant; exact on integer (or Fraction) entries."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    a[i][j] = num // prev
                else:
                    a[i][j] = num / prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
