"""Deliberately naive brute-force reference used to validate everything else.

Enumerates ascending compositions by direct recursion (first part from the
minimum upward, recurse on the remainder) and counts by filtering the
materialized list.  No cleverness on purpose; capacity is guarded because
the lists grow like p(n).
"""

from __future__ import annotations

from .errors import CapacityError, DomainError

# Enumeration cap.  p(60) is just under a million compositions, which is the
# largest list the exhaustive cross-check suites ask for.
ORACLE_CAP = 60


def _guard(n, m):
    if m < 1:
        raise DomainError(f"minimum part must be >= 1, got {m}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > ORACLE_CAP:
        raise CapacityError(f"n={n} exceeds the brute-force cap {ORACLE_CAP}")


def brute_compositions(n: int, m: int = 1) -> list[tuple[int, ...]]:
    """All ascending compositions of n with parts >= m, in lexicographic order."""
    _guard(n, m)
    out = []
    emit = out.append
    parts = []

    def rec(remaining, lo):
        if remaining == 0:
            emit(tuple(parts))
            return
        for part in range(lo, remaining + 1):
            parts.append(part)
            rec(remaining - part, part)
            parts.pop()

    rec(n, m)
    return out


def has_ratio_property(parts, t: int) -> bool:
    """True if the largest part is >= t times the second largest.

    ``parts`` is an ascending composition, so the largest part is last.
    Single-part compositions qualify unconditionally.
    """
    return len(parts) == 1 or parts[-1] >= t * parts[-2]


def brute_ratio_count(n: int, m: int, t: int) -> int:
    """Count of brute_compositions(n, m) entries with the ratio property."""
    if t < 1:
        raise DomainError(f"ratio factor must be >= 1, got {t}")
    return sum(1 for c in brute_compositions(n, m) if has_ratio_property(c, t))
