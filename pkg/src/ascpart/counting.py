"""Exact counting of integer partitions under minimum-part and ratio constraints.

The central quantity is the number of partitions of ``n`` whose parts are all
>= m and whose largest part is at least ``t`` times the second largest part;
single-part partitions qualify unconditionally.  Writing ``q = n // (t + 1)``,
the count obeys

    count(t, n, m) = count(t, n - m, m) + count(t, n, m + 1)    for m <= q,
    count(t, n, m) = 1                                          for q < m <= n,

since a qualifying partition either uses the part ``m`` (strip one copy) or
has every part >= m + 1, and a qualifying partition with two or more parts
needs largest + second >= (t + 1) * smallest, so its smallest part is <= q.

Everything else is a column or consequence of that table:

* ``p(n, m)`` -- partitions with parts >= m -- is the ``t = 1`` column, and
  ``p(n) = p(n, 1)``.
* a sum form: count(t, n, m) = 1 + sum of count(t, n - k, k) for k = m .. q;
* a reduction step count(t, n, m) = count(t-1, n, m) - count(t-1, n - t, m),
  peeling ``t`` down to 1 so the value is a signed combination of p(., m);
* closed forms per n: double-ratio = p(n) - p(n-2) and
  triple-ratio = p(n) - p(n-2) - p(n-3) + p(n-5), with p(k) = 0 for k < 0.

Tables are filled bottom-up (no recursion), one triangular table per ``t``,
and never mutated afterwards.  Values are plain Python ints, so arbitrary
magnitudes stay exact; every subtraction along the closed forms and the
reduction path is checked to be nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapacityError, DomainError

DEFAULT_CAP = 5000


def _validate_nmt(n, m, t, cap):
    if t < 1:
        raise DomainError(f"ratio factor must be >= 1, got {t}")
    if m < 1:
        raise DomainError(f"minimum part must be >= 1, got {m}")
    if n > cap:
        raise CapacityError(f"n={n} exceeds the configured cap {cap}")


class CountContext:
    """Memoized partition-count tables, one triangular table per ratio factor.

    A context is single-writer: tables grow monotonically as queries demand
    and entries are never rewritten, so concurrent readers are safe once the
    values they touch exist.
    """

    def __init__(self, cap: int = DEFAULT_CAP):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = cap
        # _tables[t][n][m-1] = count(t, n, m) for 1 <= m <= n // (t + 1)
        self._tables: dict[int, list[list[int]]] = {}

    def _fill(self, t, n):
        tbl = self._tables.setdefault(t, [[]])  # n = 0 row has no stored entries
        for np in range(len(tbl), n + 1):
            q = np // (t + 1)
            row = [0] * q
            for mp in range(q, 0, -1):
                rem = np - mp
                if mp > rem // (t + 1):
                    left = 1  # rem >= t*mp >= mp here, so the base value is 1
                else:
                    left = tbl[rem][mp - 1]
                right = row[mp] if mp < q else 1
                row[mp - 1] = left + right
            tbl.append(row)
        return tbl

    def ratio_restricted_count(self, n: int, m: int, t: int) -> int:
        """Partitions of n with parts >= m and largest part >= t * second largest."""
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        _validate_nmt(n, m, t, self.cap)
        if m > n:
            return 0
        if m > n // (t + 1):
            return 1
        return self._fill(t, n)[n][m - 1]

    def ratio_count(self, n: int, t: int) -> int:
        """Partitions of n whose largest part is >= t times the second largest."""
        return self.ratio_restricted_count(n, 1, t)

    def restricted_count(self, n: int, m: int) -> int:
        """p(n, m): partitions of n with every part >= m."""
        if n < 0:
            raise DomainError(f"n must be >= 0, got {n}")
        _validate_nmt(n, m, 1, self.cap)
        if n == 0:
            return 1
        return self.ratio_restricted_count(n, m, 1)

    def partition_count(self, n: int) -> int:
        """p(n): number of partitions of n (p(0) = 1)."""
        return self.restricted_count(n, 1)

    def _p(self, n):
        # closed forms read below index 0; treat those terms as absent
        return self.restricted_count(n, 1) if n >= 0 else 0

    def ratio_count_via_sum(self, n: int, m: int, t: int) -> int:
        """Same value as ratio_restricted_count, through the sum identity.

        Kept as an independent computation path for cross-checking; only
        defined on 1 <= m <= n // (t + 1).
        """
        _validate_nmt(n, m, t, self.cap)
        q = n // (t + 1)
        if not 1 <= m <= q:
            raise DomainError(f"need 1 <= m <= n // (t + 1) = {q}, got m={m}")
        return 1 + sum(self.ratio_restricted_count(n - k, k, t) for k in range(m, q + 1))

    def ratio_count_via_reduction(self, n: int, m: int, t: int) -> int:
        """Same value again, by peeling the ratio factor down to t = 1.

        Expands count(t, n, m) into a signed combination of plain restricted
        counts p(., m); defined on n > t > 1 with m <= n // (t + 1).
        """
        _validate_nmt(n, m, t, self.cap)
        if not n > t > 1:
            raise DomainError(f"need n > t > 1, got n={n}, t={t}")
        if m > n // (t + 1):
            raise DomainError(f"need m <= n // (t + 1) = {n // (t + 1)}, got m={m}")
        return self._reduce(t, n, m)

    def _reduce(self, t, n, m):
        if t == 1:
            return self.restricted_count(n, m)
        if m > n // (t + 1):
            return 1 if n == 0 or m <= n else 0
        value = self._reduce(t - 1, n, m) - self._reduce(t - 1, n - t, m)
        assert value >= 0, f"reduction went negative at (t={t}, n={n}, m={m})"
        return value

    def p2_closed(self, n: int) -> int:
        """Closed form for the t = 2 ratio count: p(n) - p(n-2)."""
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        value = self._p(n) - self._p(n - 2)
        assert value >= 0
        return value

    def p3_closed(self, n: int) -> int:
        """Closed form for the t = 3 ratio count: p(n) - p(n-2) - p(n-3) + p(n-5)."""
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        value = self._p(n) - self._p(n - 2) - self._p(n - 3) + self._p(n - 5)
        assert value >= 0
        return value

    def check_inequalities(self, n_max: int) -> "InequalityReport":
        """Scan 1..n_max for violations of the two partition inequalities.

        Checks p(n) <= p(n-1) + p(n-2) - p(n-5) (recording where equality
        holds) and, for n >= 2, triple-ratio(n) <= double-ratio(n-1).
        Both are expected to hold everywhere.
        """
        if n_max > self.cap:
            raise CapacityError(f"n_max={n_max} exceeds the configured cap {self.cap}")
        growth_violations = []
        growth_equalities = []
        dominance_violations = []
        for n in range(1, n_max + 1):
            bound = self._p(n - 1) + self._p(n - 2) - self._p(n - 5)
            pn = self._p(n)
            if pn > bound:
                growth_violations.append(n)
            elif pn == bound:
                growth_equalities.append(n)
            if n >= 2 and self.p3_closed(n) > self.p2_closed(n - 1):
                dominance_violations.append(n)
        return InequalityReport(
            n_max=n_max,
            growth_violations=growth_violations,
            growth_equalities=growth_equalities,
            dominance_violations=dominance_violations,
        )


@dataclass(frozen=True)
class InequalityReport:
    n_max: int
    growth_violations: list[int] = field(default_factory=list)
    growth_equalities: list[int] = field(default_factory=list)
    dominance_violations: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.growth_violations and not self.dominance_violations
