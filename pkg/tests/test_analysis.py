"""Cost ratios, their formatting, and instrumented-count verification."""

import io
from fractions import Fraction

import pytest

from ascpart import (
    DomainError,
    budget_violations,
    format_ratio,
    r1,
    r1_exact,
    r2,
    r2_exact,
    ratio_table,
    verify_v2_counts,
    verify_v3_counts,
    write_ratio_csv,
)

# Frozen 5-decimal reference ratios at selected n (last digit may be
# truncated rather than rounded, hence the 2e-5 tolerance used throughout).
REFERENCE_RATIOS = {
    20: (0.89556, 0.82113),
    30: (0.88738, 0.79381),
    40: (0.88467, 0.77992),
    50: (0.88403, 0.77197),
    60: (0.88438, 0.76731),
    70: (0.88525, 0.76465),
    80: (0.88639, 0.76326),
    90: (0.88766, 0.76271),
    100: (0.88901, 0.76274),
    110: (0.89037, 0.76319),
    120: (0.89174, 0.76392),
    130: (0.89308, 0.76485),
}


def test_ratio_worked_values(ctx):
    assert abs(r1(20, ctx) - 0.89556) < 2e-5
    assert abs(r2(20, ctx) - 0.82113) < 2e-5
    assert abs(r1(130, ctx) - 0.89308) < 2e-5


def test_ratios_are_exact_rationals(ctx):
    assert r1_exact(20, ctx) == Fraction(3113, 3476)
    assert r2_exact(20, ctx) == Fraction(1111, 1353)
    assert r2_exact(5, ctx) == 1  # both operation counts coincide at n = 5


def test_reference_table(ctx):
    for n, (want1, want2) in REFERENCE_RATIOS.items():
        assert abs(r1(n, ctx) - want1) < 2e-5, n
        assert abs(r2(n, ctx) - want2) < 2e-5, n


def test_ratio_domain(ctx):
    with pytest.raises(DomainError):
        r1(1, ctx)
    with pytest.raises(DomainError):
        r2_exact(0, ctx)
    with pytest.raises(DomainError):
        ratio_table(1, ctx)


def test_format_ratio():
    assert format_ratio(Fraction(1, 3)) == "0.33333"
    assert format_ratio(Fraction(2, 3)) == "0.66667"
    assert format_ratio(Fraction(1, 1)) == "1.00000"
    assert format_ratio(0.5) == "0.50000"
    # ties go to even in the fifth decimal
    assert format_ratio(Fraction(1, 200000)) == "0.00000"
    assert format_ratio(Fraction(3, 200000)) == "0.00002"


def test_verify_counts(ctx):
    for n in (2, 6, 20, 60):
        check2 = verify_v2_counts(n, ctx)
        assert check2.passed, check2
        check3 = verify_v3_counts(n, ctx)
        assert check3.passed, check3
    check = verify_v2_counts(20, ctx)
    assert check.actual_assignments == 3476
    assert check.actual_bool_evals == 1353
    assert check.algorithm == "v2"


def test_ratio_table_scan(ctx):
    scan = ratio_table(150, ctx)
    assert [rec.n for rec in scan.records] == list(range(2, 151))
    # gen_v3 is not cheaper at n = 2, and ties on bool evals at n = 5
    assert scan.range_violations == [2, 5]
    assert 50 <= scan.argmin_r2 <= 150
    by_n = {rec.n: rec for rec in scan.records}
    assert by_n[20].r1 == pytest.approx(float(Fraction(3113, 3476)))


def test_budget_violations(ctx):
    # 4 * triple-ratio <= 3 * double-ratio fails exactly at n = 2
    assert budget_violations(ctx, 300) == [2]


def test_write_ratio_csv(ctx):
    buf = io.StringIO()
    write_ratio_csv(ratio_table(6, ctx), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,r1,r2"
    assert len(lines) == 6
    assert lines[1] == "2,1.08333,1.20000"
    n, one, two = lines[-1].split(",")
    assert n == "6"
    assert one == format_ratio(r1_exact(6, ctx))
    assert two == format_ratio(r2_exact(6, ctx))
