"""
The six scaled number triangles, built row by row from their recurrences.

    s1        (-2)^{n-m} [n, m]        Stirling cycle numbers, scaled
    s2         2^{n-m} {n, m}          Stirling subset numbers, scaled
    arctanh    theta(n, m)             n! [u^n] arctanh(u)^m / m!
    tanh       Theta(n, m)             n! [u^n] tanh(u)^m / m!
    lah        l(n, m)                 n!/m! C(n-1, m-1), unsigned Lah
    lah-upper  L(n, m)                 (-1)^{n-m} l(n, m)

Row 0 is [1] for every family; in particular l(0, 0) = L(0, 0) = 1, which is
what the column generating functions (u/(1 -+ u))^m / m! give at u^0.
"""

from __future__ import annotations

import threading
from math import comb, factorial

from .errors import DomainError, IntegrityError
from .series import Family

LAH_CONVENTION = "l(0,m)=L(0,m)=[m=0]"


def _get(row, m):
    if row is None or m < 0 or m >= len(row):
        return 0
    return row[m]


def _next_row(family: Family, n: int, prev: list[int], prev2: list[int] | None) -> list[int]:
    """Row n+1 from rows n and n-1."""
    out = []
    for m in range(n + 2):
        if family is Family.STIRLING_FIRST:
            v = _get(prev, m - 1) - 2 * n * _get(prev, m)
        elif family is Family.STIRLING_SECOND:
            v = _get(prev, m - 1) + 2 * m * _get(prev, m)
        elif family is Family.ARCTANH:
            v = _get(prev, m - 1) + n * (n - 1) * _get(prev2, m)
        elif family is Family.TANH:
            # reads column m+1 of the previous row, which is complete by now
            v = _get(prev, m - 1) - m * (m + 1) * _get(prev, m + 1)
        elif family is Family.LAH_LOWER:
            v = (n + m) * _get(prev, m) + _get(prev, m - 1)
        elif family is Family.LAH_UPPER:
            v = -(n + m) * _get(prev, m) + _get(prev, m - 1)
        else:  # pragma: no cover
            raise DomainError(f"unknown family {family!r}")
        if type(v) is not int:
            raise IntegrityError(f"{family.value} recurrence left the integers at ({n + 1}, {m})")
        out.append(v)
    return out


class Triangle:
    """Lazily extended lower-triangular array; rows only ever grow."""

    def __init__(self, family: Family):
        self.family = family
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    @property
    def capacity(self) -> int:
        return len(self._rows) - 1

    def ensure(self, n: int) -> None:
        if n <= self.capacity:
            return
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                k = len(rows) - 1
                prev2 = rows[k - 1] if k >= 1 else None
                rows.append(_next_row(self.family, k, rows[k], prev2))

    def entry(self, n: int, m: int) -> int:
        if n < 0 or m < 0:
            raise DomainError("triangle indices must be non-negative")
        if m > n:
            return 0
        self.ensure(n)
        return self._rows[n][m]

    def row(self, n: int) -> list[int]:
        if n < 0:
            raise DomainError("row index must be non-negative")
        self.ensure(n)
        return list(self._rows[n])

    def rows(self, n_max: int) -> list[list[int]]:
        self.ensure(n_max)
        return [list(r) for r in self._rows[: n_max + 1]]


_TRIANGLES = {f: Triangle(f) for f in Family}


def triangle(family: Family | str) -> Triangle:
    return _TRIANGLES[Family.parse(family)]


def entry(family: Family | str, n: int, m: int) -> int:
    return triangle(family).entry(n, m)


def row(family: Family | str, n: int) -> list[int]:
    return triangle(family).row(n)


def lah_explicit(n: int, m: int) -> int:
    """Unsigned Lah number n!/m! * C(n-1, m-1) for 1 <= m <= n."""
    if not 1 <= m <= n:
        raise DomainError(f"lah_explicit needs 1 <= m <= n, got n={n}, m={m}")
    return factorial(n) // factorial(m) * comb(n - 1, m - 1)
