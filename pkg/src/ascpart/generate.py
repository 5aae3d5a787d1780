"""Streaming generators for the ascending compositions of n.

All three algorithms emit every ascending composition of n exactly once, in
strictly increasing lexicographic order, by running the inorder traversals
of `traversal` with the stack replaced by the output array itself: a_1..a_k
holds the parts fixed so far, (x, y) the frontier.  Consumers receive the
live buffer and a length::

    def consumer(a, length):
        parts = a[1:length + 1]   # valid only during this call; do not keep a

The buffer is reused between visits, so a consumer must copy what it wants
to retain.  Index 0 of the buffer is a permanent 0 sentinel: the final
``x = a[k] + 1`` of a round executes once with k = 0, and the sentinel makes
that read defined (the loop then exits).

* `gen_v1` keeps an explicit continue flag and re-derives the parent from
  the array when backtracking.
* `gen_v2` merges the backtracking into the loop condition; one array write
  and one visit per composition beyond the descent work.
* `gen_v3` additionally walks compositions that differ only in their last
  two parts without touching the descent loop at all.

`gen_v2_counted` / `gen_v3_counted` are the same algorithms with operation
tallies; their assignment and boolean-evaluation counts are exact functions
of n (see `analysis`), which is what the instrumented variants exist to
demonstrate.  The plain variants stay uninstrumented so timing runs are
undistorted.
"""

from __future__ import annotations

from .counters import OpCounters
from .errors import CapacityError, DomainError

# Collector guard: materializing all compositions is for tests and small
# demos only (p(45) = 89134 already).
COLLECT_CAP = 45


def _check_n(n, lo=1):
    if n < lo:
        raise DomainError(f"n must be >= {lo}, got {n}")


def gen_v1(n: int, consumer) -> int:
    """Generate ascending compositions of n; returns the number emitted."""
    _check_n(n)
    a = [0] * (n + 3)
    k = 0
    x = 1
    y = n - 1
    c = True
    count = 0
    while c:
        while 2 * x <= y:
            k += 1
            a[k] = x
            y -= x
        while x <= y:
            k += 1
            a[k] = x
            k += 1
            a[k] = y
            consumer(a, k)
            count += 1
            k -= 2
            x += 1
            y -= 1
        k += 1
        a[k] = x + y
        consumer(a, k)
        count += 1
        k -= 1
        if k > 0:
            y += x
            x = a[k]
            k -= 1
            x += 1
            y -= 1
        else:
            c = False
    return count


def gen_v2(n: int, consumer) -> int:
    """Generate ascending compositions of n; returns the number emitted."""
    _check_n(n)
    a = [0] * (n + 3)
    k = 1
    x = 1
    y = n - 1
    count = 0
    while k > 0:
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        t = k + 1
        while x <= y:
            a[k] = x
            a[t] = y
            consumer(a, t)
            count += 1
            x += 1
            y -= 1
        y += x - 1
        a[k] = y + 1
        consumer(a, k)
        count += 1
        k -= 1
        x = a[k] + 1
    return count


def gen_v3(n: int, consumer) -> int:
    """Generate ascending compositions of n; returns the number emitted."""
    _check_n(n)
    a = [0] * (n + 3)
    k = 1
    x = 1
    y = n - 1
    count = 0
    while k > 0:
        while 3 * x <= y:
            a[k] = x
            y -= x
            k += 1
        t = k + 1
        u = k + 2
        while 2 * x <= y:
            a[k] = x
            a[t] = x
            a[u] = y - x
            consumer(a, u)
            count += 1
            p = x + 1
            q = y - p
            while p <= q:
                a[t] = p
                a[u] = q
                consumer(a, u)
                count += 1
                p += 1
                q -= 1
            a[t] = y
            consumer(a, t)
            count += 1
            x += 1
            y -= 1
        while x <= y:
            a[k] = x
            a[t] = y
            consumer(a, t)
            count += 1
            x += 1
            y -= 1
        y += x - 1
        a[k] = y + 1
        consumer(a, k)
        count += 1
        k -= 1
        x = a[k] + 1
    return count


def gen_v2_counted(n: int, consumer=None) -> OpCounters:
    """`gen_v2` with exact operation tallies; requires n >= 2.

    Assignments count executed assignment lines including the three
    initializations; bool_evals counts loop-condition evaluations.
    """
    _check_n(n, lo=2)
    a = [0] * (n + 3)
    k = 1
    x = 1
    y = n - 1
    assigns = 3
    bools = 0
    visits = 0
    bools += 1
    while k > 0:
        bools += 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
            assigns += 3
            bools += 1
        t = k + 1
        assigns += 1
        bools += 1
        while x <= y:
            a[k] = x
            a[t] = y
            if consumer is not None:
                consumer(a, t)
            visits += 1
            x += 1
            y -= 1
            assigns += 4
            bools += 1
        y += x - 1
        a[k] = y + 1
        if consumer is not None:
            consumer(a, k)
        visits += 1
        k -= 1
        x = a[k] + 1
        assigns += 4
        bools += 1
    return OpCounters(assignments=assigns, bool_evals=bools, visits=visits)


def gen_v3_counted(n: int, consumer=None) -> OpCounters:
    """`gen_v3` with exact operation tallies; requires n >= 2."""
    _check_n(n, lo=2)
    a = [0] * (n + 3)
    k = 1
    x = 1
    y = n - 1
    assigns = 3
    bools = 0
    visits = 0
    bools += 1
    while k > 0:
        bools += 1
        while 3 * x <= y:
            a[k] = x
            y -= x
            k += 1
            assigns += 3
            bools += 1
        t = k + 1
        u = k + 2
        assigns += 2
        bools += 1
        while 2 * x <= y:
            a[k] = x
            a[t] = x
            a[u] = y - x
            if consumer is not None:
                consumer(a, u)
            visits += 1
            p = x + 1
            q = y - p
            assigns += 5
            bools += 1
            while p <= q:
                a[t] = p
                a[u] = q
                if consumer is not None:
                    consumer(a, u)
                visits += 1
                p += 1
                q -= 1
                assigns += 4
                bools += 1
            a[t] = y
            if consumer is not None:
                consumer(a, t)
            visits += 1
            x += 1
            y -= 1
            assigns += 3
            bools += 1
        bools += 1
        while x <= y:
            a[k] = x
            a[t] = y
            if consumer is not None:
                consumer(a, t)
            visits += 1
            x += 1
            y -= 1
            assigns += 4
            bools += 1
        y += x - 1
        a[k] = y + 1
        if consumer is not None:
            consumer(a, k)
        visits += 1
        k -= 1
        x = a[k] + 1
        assigns += 4
        bools += 1
    return OpCounters(assignments=assigns, bool_evals=bools, visits=visits)


ALGORITHMS = {1: gen_v1, 2: gen_v2, 3: gen_v3}


def collect_compositions(n: int, alg: int = 3) -> list[tuple[int, ...]]:
    """Materialize all ascending compositions of n (guarded; tests/demos only)."""
    if alg not in ALGORITHMS:
        raise DomainError(f"alg must be one of {sorted(ALGORITHMS)}, got {alg}")
    _check_n(n)
    if n > COLLECT_CAP:
        raise CapacityError(f"n={n} exceeds the collector cap {COLLECT_CAP}")
    out = []

    def consumer(a, length):
        out.append(tuple(a[1:length + 1]))

    ALGORITHMS[alg](n, consumer)
    return out
