"""Finite commutative semirings with identity given by Cayley tables.

Elements are the indices ``0 .. n-1``.  Index 0 is the additive identity and
index 1 the multiplicative identity; ``validate`` checks this rather than
assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as _cartesian
from pathlib import Path

from .errors import (
    AxiomViolation,
    IndexOutOfRange,
    InputError,
    NotCommutative,
    ParseError,
)

MAX_ORDER = 16

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StructuralFlags:
    additively_cancellative: bool
    yoked: bool
    zerosumfree: bool
    is_ring: bool

    def bits(self) -> str:
        return "".join(
            "1" if f else "0"
            for f in (self.additively_cancellative, self.yoked, self.zerosumfree, self.is_ring)
        )


@dataclass(frozen=True)
class FiniteSemiring:
    """A validated semiring.  Build instances with :func:`validate`."""

    order: int
    add: Table
    mul: Table
    name: str = field(default="", compare=False)
    labels: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    zero = 0
    one = 1

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def add_of(self, a: int, b: int) -> int:
        self.check_element(a)
        self.check_element(b)
        return self.add[a][b]

    def mul_of(self, a: int, b: int) -> int:
        self.check_element(a)
        self.check_element(b)
        return self.mul[a][b]

    def power(self, a: int, k: int) -> int:
        """``a**k`` for ``k >= 0``."""
        self.check_element(a)
        if k < 0:
            raise InputError("negative exponent")
        r = self.one
        for _ in range(k):
            r = self.mul[r][a]
        return r

    def check_element(self, a) -> None:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise IndexOutOfRange(f"element {a!r} not in [0, {self.order}) of {self.name or 'semiring'}")

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def index(self, label) -> int:
        """Index of the element carrying ``label`` (labels default to the indices)."""
        label = str(label)
        if self.labels:
            try:
                return self.labels.index(label)
            except ValueError:
                raise IndexOutOfRange(f"no element labelled {label!r}") from None
        a = int(label)
        self.check_element(a)
        return a

    def flags(self) -> StructuralFlags:
        return flags(self)


def _as_table(raw, n, which) -> Table:
    try:
        rows = [tuple(int(v) for v in row) for row in raw]
    except (TypeError, ValueError) as exc:
        raise InputError(f"{which} table is not an integer matrix: {exc}") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"{which} table must be {n}x{n}")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise IndexOutOfRange(f"{which}[{i}][{j}] = {v} outside [0, {n})")
    return tuple(rows)


def validate(add, mul, name: str = "", labels=None) -> FiniteSemiring:
    """Check every semiring axiom and return the frozen structure.

    Raises :class:`AxiomViolation` naming the first failing axiom together
    with the elements that witness it, or :class:`NotCommutative` when only
    commutativity of multiplication fails.
    """
    n = len(add)
    if n < 2:
        raise AxiomViolation("one-neq-zero", (), "order must be at least 2")
    if n > MAX_ORDER:
        raise InputError(f"order {n} exceeds {MAX_ORDER}")
    A = _as_table(add, n, "add")
    M = _as_table(mul, n, "mul")
    R = range(n)

    for a in R:
        if A[0][a] != a or A[a][0] != a:
            raise AxiomViolation("add-identity", (0, a), f"0+{a} must be {a}")
    for a, b in _cartesian(R, R):
        if A[a][b] != A[b][a]:
            raise AxiomViolation("add-commutative", (a, b))
    for a, b, c in _cartesian(R, R, R):
        if A[A[a][b]][c] != A[a][A[b][c]]:
            raise AxiomViolation("add-associative", (a, b, c))
    for a in R:
        if M[1][a] != a or M[a][1] != a:
            raise AxiomViolation("mul-identity", (1, a), f"1*{a} must be {a}")
    for a, b, c in _cartesian(R, R, R):
        if M[M[a][b]][c] != M[a][M[b][c]]:
            raise AxiomViolation("mul-associative", (a, b, c))
    for a, b, c in _cartesian(R, R, R):
        bc = A[b][c]
        if M[a][bc] != A[M[a][b]][M[a][c]]:
            raise AxiomViolation("left-distributive", (a, b, c))
        if M[bc][a] != A[M[b][a]][M[c][a]]:
            raise AxiomViolation("right-distributive", (a, b, c))
    for a in R:
        if M[0][a] != 0 or M[a][0] != 0:
            raise AxiomViolation("zero-absorbing", (0, a))
    for a, b in _cartesian(R, R):
        if M[a][b] != M[b][a]:
            raise NotCommutative((a, b))
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n or len(set(labels)) != n:
            raise InputError("labels must be n distinct strings")
    return FiniteSemiring(n, A, M, name, labels)


def flags(S: FiniteSemiring) -> StructuralFlags:
    R = S.elements
    A = S.add
    cancellative = all(len(set(A[a])) == S.order for a in R)
    yoked = all(
        any(A[a][r] == b or A[b][r] == a for r in R) for a in R for b in R
    )
    zerosumfree = all(A[a][b] != 0 for a in R for b in R if (a, b) != (0, 0))
    is_ring = all(0 in A[a] for a in R)
    return StructuralFlags(cancellative, yoked, zerosumfree, is_ring)


# -- standard small semirings ------------------------------------------------

def boolean() -> FiniteSemiring:
    return validate([[0, 1], [1, 1]], [[0, 0], [0, 1]], "B")


def integers_mod(m: int) -> FiniteSemiring:
    R = range(m)
    return validate(
        [[(i + j) % m for j in R] for i in R],
        [[(i * j) % m for j in R] for i in R],
        f"Z{m}",
    )


def chain(m: int) -> FiniteSemiring:
    """The chain ``0 < 1 < ... < m-1`` under (max, min).

    The top value ``m-1`` is the multiplicative identity, so it sits at
    index 1; labels carry the chain values.
    """
    values = [0, m - 1] + list(range(1, m - 1))
    R = range(m)
    return validate(
        [[values.index(max(values[i], values[j])) for j in R] for i in R],
        [[values.index(min(values[i], values[j])) for j in R] for i in R],
        f"C{m}",
        labels=values,
    )


def direct_product(S: FiniteSemiring, T: FiniteSemiring) -> FiniteSemiring:
    """Componentwise product; (0,0) and (1,1) land at indices 0 and 1."""
    pairs = [(0, 0), (1, 1)] + [
        p for p in _cartesian(S.elements, T.elements) if p not in ((0, 0), (1, 1))
    ]
    pos = {p: i for i, p in enumerate(pairs)}
    add = [[pos[(S.add[a][c], T.add[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[pos[(S.mul[a][c], T.mul[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({S.label(a)},{T.label(b)})" for a, b in pairs]
    return validate(add, mul, f"{S.name}x{T.name}", labels=labels)


# -- .srs text format -----------------------------------------------------------

def parse_srs(text: str) -> FiniteSemiring:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    it = iter(enumerate(lines, 1))

    def take(expect=None):
        try:
            no, ln = next(it)
        except StopIteration:
            raise ParseError("unexpected end of file") from None
        if expect is not None and ln.split()[0] != expect:
            raise ParseError(f"line {no}: expected '{expect}', got {ln!r}")
        return no, ln

    no, ln = take("semiring")
    parts = ln.split(maxsplit=1)
    if len(parts) != 2:
        raise ParseError(f"line {no}: missing semiring name")
    name = parts[1]
    no, ln = take("order")
    parts = ln.split()
    if len(parts) != 2 or not parts[1].isdigit():
        raise ParseError(f"line {no}: bad order line {ln!r}")
    n = int(parts[1])
    if not 2 <= n <= MAX_ORDER:
        raise ParseError(f"line {no}: order {n} outside [2, {MAX_ORDER}]")

    def matrix(label):
        take(label)
        rows = []
        for _ in range(n):
            no, ln = take()
            toks = ln.split()
            if len(toks) != n or not all(t.isdigit() for t in toks):
                raise ParseError(f"line {no}: expected {n} nonnegative integers in {label} table")
            row = [int(t) for t in toks]
            if any(v >= n for v in row):
                raise ParseError(f"line {no}: entry out of range [0, {n})")
            rows.append(row)
        return rows

    add = matrix("add")
    mul = matrix("mul")
    extra = next(it, None)
    if extra is not None:
        raise ParseError(f"line {extra[0]}: trailing content {extra[1]!r}")
    return validate(add, mul, name)


def format_srs(S: FiniteSemiring) -> str:
    out = [f"semiring {S.name or 'unnamed'}", f"order {S.order}", "add"]
    out += [" ".join(map(str, row)) for row in S.add]
    out.append("mul")
    out += [" ".join(map(str, row)) for row in S.mul]
    return "\n".join(out) + "\n"


def load_srs(path) -> FiniteSemiring:
    return parse_srs(Path(path).read_text())
