"""Polynomials over the natural numbers, and bounded certificates in N and N[x].

Certificates store only the claimed objects; ``validate`` recomputes every
claim from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import InputError, NotCoprime, ZeroDivisor


class NatPoly:
    """Polynomial with nonnegative integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        if any(c < 0 for c in cs):
            raise InputError(f"negative coefficient in {cs}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "NatPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "NatPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, NatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return poly_add(self, other)

    def __mul__(self, other):
        return poly_mul(self, other)

    def __pow__(self, k: int):
        r = NatPoly((1,))
        for _ in range(k):
            r = r * self
        return r

    def dominates(self, other: "NatPoly") -> bool:
        """Coefficientwise ``self >= other``."""
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return all(x >= y for x, y in zip(a, b))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "x" if k == 1 else f"x^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"NatPoly({list(self.coeffs)})"


def poly_add(f: NatPoly, g: NatPoly) -> NatPoly:
    n = max(len(f.coeffs), len(g.coeffs))
    a = f.coeffs + (0,) * (n - len(f.coeffs))
    b = g.coeffs + (0,) * (n - len(g.coeffs))
    return NatPoly(x + y for x, y in zip(a, b))


def poly_mul(f: NatPoly, g: NatPoly) -> NatPoly:
    if f.is_zero() or g.is_zero():
        return NatPoly()
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] += a * b
    return NatPoly(out)


def principal_membership(f: NatPoly, g: NatPoly) -> NatPoly | None:
    """The cofactor h with ``f = g*h`` and h in N[x], or None.

    Long division from the top degree in Z[x]: the quotient is unique when it
    exists, so any non-integral or negative quotient coefficient, or a
    nonzero remainder, rules membership out.
    """
    if g.is_zero():
        raise ZeroDivisor("principal ideal generated by 0")
    if f.is_zero():
        return NatPoly()
    rem = list(f.coeffs)
    dg = g.degree
    lead = g.coeffs[-1]
    if len(rem) - 1 < dg:
        return None
    q = [0] * (len(rem) - dg)
    for k in range(len(q) - 1, -1, -1):
        c, r = divmod(rem[k + dg], lead)
        if r or c < 0:
            return None
        q[k] = c
        for j, b in enumerate(g.coeffs):
            rem[k + j] -= c * b
    if any(rem):
        return None
    h = NatPoly(q)
    assert poly_mul(g, h) == f
    return h


def yoked_pair_check(f: NatPoly, g: NatPoly) -> NatPoly | None:
    """h with ``f + h = g`` or ``g + h = f`` (coefficientwise difference), or None."""
    if g.dominates(f):
        lo, hi = f, g
    elif f.dominates(g):
        lo, hi = g, f
    else:
        return None
    n = len(hi.coeffs)
    lc = lo.coeffs + (0,) * (n - len(lo.coeffs))
    return NatPoly(a - b for a, b in zip(hi.coeffs, lc))


# -- certificates -----------------------------------------------------------------

@dataclass(frozen=True)
class GolanCertificate:
    """``u = w + v`` with u, v in <g> but w not in <g>: <g> is not subtractive."""

    g: NatPoly
    u: NatPoly
    v: NatPoly
    w: NatPoly

    def checks(self) -> list[tuple[str, bool]]:
        hu = principal_membership(self.u, self.g)
        hv = principal_membership(self.v, self.g)
        hw = principal_membership(self.w, self.g)
        return [
            ("u in <g>", hu is not None),
            ("v in <g>", hv is not None),
            ("u = w + v", self.u == self.w + self.v),
            ("w not in <g>", hw is None),
        ]

    def validate(self) -> bool:
        return all(ok for _, ok in self.checks())

    def lines(self):
        hu = principal_membership(self.u, self.g)
        hv = principal_membership(self.v, self.g)
        yield f"g = {self.g}"
        yield f"u = {self.u}"
        yield f"v = {self.v}"
        yield f"w = {self.w}"
        yield f"u = g * ({hu})" if hu is not None else "u has no cofactor"
        yield f"v = g * ({hv})" if hv is not None else "v has no cofactor"
        for name, ok in self.checks():
            yield f"check {name}: {'ok' if ok else 'FAILED'}"
        yield f"certificate {'valid' if self.validate() else 'INVALID'}: <g> is not a k-ideal"


def golan_witness() -> GolanCertificate:
    g = NatPoly((1, 1))
    x = NatPoly.x()
    u = g ** 3
    v = NatPoly.const(3) * x * g
    w = NatPoly((1, 0, 0, 1))
    return GolanCertificate(g, u, v, w)


def nat_principal_k_check(a: int, bound: int) -> dict:
    """Check on the grid ``0 <= x, y <= bound`` that ``a | x + y`` and ``a | x`` force ``a | y``."""
    if a < 1 or bound < a:
        raise InputError("need a >= 1 and bound >= a")
    x = np.arange(bound + 1)[:, None]
    y = np.arange(bound + 1)[None, :]
    bad = ((x + y) % a == 0) & (x % a == 0) & (y % a != 0)
    hits = np.argwhere(bad)
    counterexample = tuple(int(v) for v in hits[0]) if len(hits) else None
    return {
        "a": a,
        "bound": bound,
        "pairs": (bound + 1) ** 2,
        "counterexample": counterexample,
        "ok": counterexample is None,
    }


def _in_numerical_semigroup(n: int, a: int, b: int) -> bool:
    if n >= (a - 1) * (b - 1):
        return True
    return any((n - i * a) % b == 0 for i in range(n // a + 1))


@dataclass(frozen=True)
class SumCertificate:
    """aN and bN are k-ideals, yet ``x`` and ``x + y`` lie in aN + bN while y does not."""

    a: int
    b: int
    x: int
    y: int
    bound: int = 100

    def checks(self) -> list[tuple[str, bool]]:
        a, b, x, y = self.a, self.b, self.x, self.y
        member = lambda n: _in_numerical_semigroup(n, a, b)  # noqa: E731
        return [
            (f"{a}N is a k-ideal up to {self.bound}", nat_principal_k_check(a, max(a, self.bound))["ok"]),
            (f"{b}N is a k-ideal up to {self.bound}", nat_principal_k_check(b, max(b, self.bound))["ok"]),
            ("x in I", member(x)),
            ("x+y in I", member(x + y)),
            ("y not in I", not member(y)),
        ]

    def validate(self) -> bool:
        return all(ok for _, ok in self.checks())

    def lines(self):
        yield f"I = {self.a}N + {self.b}N"
        yield f"gaps of I: {sorted(gaps(self.a, self.b))}"
        yield f"x = {self.x}, y = {self.y}, x+y = {self.x + self.y}"
        for name, ok in self.checks():
            yield f"check {name}: {'ok' if ok else 'FAILED'}"
        yield f"certificate {'valid' if self.validate() else 'INVALID'}: I is not a k-ideal"


def gaps(a: int, b: int) -> list[int]:
    """Naturals outside aN + bN (a, b coprime)."""
    return [n for n in range((a - 1) * (b - 1)) if not _in_numerical_semigroup(n, a, b)]


def nat_sum_not_k_witness(a: int = 2, b: int = 3) -> SumCertificate:
    """Smallest gap y, then smallest positive member x with ``x + y`` a member."""
    if a < 2 or b < 2:
        raise InputError("need a, b >= 2")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    y = gaps(a, b)[0]
    x = next(
        n for n in range(1, (a - 1) * (b - 1) + 1)
        if _in_numerical_semigroup(n, a, b) and _in_numerical_semigroup(n + y, a, b)
    )
    return SumCertificate(a, b, x, y)
