"""Working-precision helpers around mpmath.

Numeric operations in this package follow one discipline: compute at
roughly twice the requested decimal digits plus a guard, track a crude
but honest forward error bound for the summation, and refuse to return a
value whose bound is above the contract.
"""

from __future__ import annotations

import re

import mpmath as mp

from .errors import PrecisionError

__all__ = ["UValue", "parse_u", "certified_sum", "guard_dps"]


def guard_dps(digits: int, n_ops: int = 0) -> int:
    """Working precision for a target of ``digits`` certified digits."""
    import math

    pad = 0 if n_ops <= 0 else int(math.log10(n_ops + 2)) + 2
    return 2 * digits + 30 + pad


class UValue:
    """Exact description of the holonomy parameter u, materializable at
    any precision.

    Stores u = x + i*pi*y with exact decimal strings x, y (the complete
    hyperbolic point is x=0, y=1), or a plain cartesian pair when the
    imaginary part is not tied to pi.
    """

    __slots__ = ("kind", "a", "b", "text")

    def __init__(self, kind: str, a: str, b: str, text: str):
        self.kind = kind      # "pi" (u = a + i*pi*b) or "cart" (u = a + i*b)
        self.a = a
        self.b = b
        self.text = text

    def at(self, dps: int) -> mp.mpc:
        with mp.workdps(dps):
            if self.kind == "pi":
                return mp.mpc(mp.mpf(self.a), mp.pi * mp.mpf(self.b))
            return mp.mpc(mp.mpf(self.a), mp.mpf(self.b))

    def is_i_pi(self) -> bool:
        return self.kind == "pi" and mp.mpf(self.a) == 0 and mp.mpf(self.b) == 1

    def __repr__(self) -> str:
        return f"UValue({self.text!r})"


_DEC = r"[+-]?\d+(?:\.\d*)?(?:[eE][+-]?\d+)?"


def parse_u(spec) -> UValue:
    """Parse a u specification.

    Accepted forms: ``ipi``; ``ipi+0.3`` / ``ipi-0.3`` (real shift of the
    complete structure, exact); ``re+im i`` decimal pairs such as
    ``0.3+3.1415i``; a bare decimal for real u; or an existing UValue.
    """
    if isinstance(spec, UValue):
        return spec
    text = str(spec).strip().replace(" ", "")
    if text == "ipi":
        return UValue("pi", "0", "1", text)
    m = re.fullmatch(rf"ipi(?P<shift>[+-]{_DEC})", text)
    if m:
        return UValue("pi", m.group("shift"), "1", text)
    m = re.fullmatch(rf"(?P<re>{_DEC})(?P<im>[+-]{_DEC})i", text)
    if m:
        return UValue("cart", m.group("re"), m.group("im"), text)
    m = re.fullmatch(rf"(?P<re>{_DEC})", text)
    if m:
        return UValue("cart", m.group("re"), "0", text)
    raise ValueError(f"cannot parse u specification {spec!r}")


def certified_sum(terms, digits: int, ops_per_term: int, contract_exp=None):
    """Sum an iterable of mpc/mpf terms with a forward error certificate.

    ``ops_per_term`` bounds the number of rounded operations behind each
    term (running products accumulate, so pass the worst case).  Returns
    the sum; raises PrecisionError when the bound exceeds the contract
    10^(-digits) (or 10^contract_exp when given).
    """
    total = mp.mpf(0)
    abssum = mp.mpf(0)
    n = 0
    for t in terms:
        total = total + t
        abssum = abssum + abs(t)
        n += 1
    eps = mp.mpf(10) ** (3 - mp.mp.dps)
    bound_abs = (ops_per_term + n + 4) * eps * abssum
    target = mp.mpf(10) ** (contract_exp if contract_exp is not None else -digits)
    if not total:
        if bound_abs > target:
            raise PrecisionError("sum cancels below the certified bound")
        return total
    rel = bound_abs / abs(total)
    if rel > target:
        raise PrecisionError(
            f"certified relative error {mp.nstr(rel, 5)} exceeds 1e{-digits}; "
            "raise the precision")
    return total
