"""Exact 2x2 integer matrix algebra.

Everything is plain Python integers, so there is no overflow to worry
about; determinants are checked where a contract requires them, never
assumed.  Text format for matrices is row-major ``a,b;c,d``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 integer matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> "Mat2":
        if k < 0:
            return self.inv() ** (-k)
        out = Mat2(1, 0, 0, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inv(self) -> "Mat2":
        """Inverse over the integers; defined exactly when det is +/-1."""
        det = self.det()
        if det == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        if det == -1:
            return Mat2(-self.d, self.b, self.c, -self.a)
        raise ValueError(f"matrix {self.text()} has det {det}, not invertible over Z")

    def text(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)


ID = Mat2(1, 0, 0, 1)
S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)
T_INV = Mat2(1, -1, 0, 1)

# K has det -1 and is not unimodular; it only ever appears conjugating
# in the word-reversal identity eval(rev w) = K * eval(w)^-1 * K.
K = Mat2(0, 1, 1, 0)


def unimodular(a: int, b: int, c: int, d: int) -> Mat2:
    """Build a matrix and require det 1."""
    m = Mat2(int(a), int(b), int(c), int(d))
    if m.det() != 1:
        raise ValueError(f"matrix {m.text()} has det {m.det()}, expected 1")
    return m


def parse_matrix(text: str) -> Mat2:
    """Parse the ``a,b;c,d`` text format; the result must have det 1."""
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise ValueError(f"matrix text must have two ';'-separated rows: {text!r}")
    entries = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise ValueError(f"matrix row must have two ','-separated entries: {row!r}")
        try:
            entries.extend(int(cell) for cell in cells)
        except ValueError:
            raise ValueError(f"matrix entries must be integers: {row!r}") from None
    return unimodular(*entries)
