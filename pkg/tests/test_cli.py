"""CLI integration: output, line protocols, exit codes."""

import pytest

from ascpart.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_count_default(capsys):
    code, out = run(capsys, "count", "5")
    assert code == 0 and out == "7\n"


def test_count_zero(capsys):
    code, out = run(capsys, "count", "0")
    assert code == 0 and out == "1\n"


def test_count_min_part(capsys):
    code, out = run(capsys, "count", "12", "--min-part", "3")
    assert code == 0 and out == "9\n"


def test_count_ratio(capsys):
    code, out = run(capsys, "count", "15", "--min-part", "3", "--ratio-t", "2")
    assert code == 0 and out == "7\n"


def test_generate_four(capsys):
    code, out = run(capsys, "generate", "4", "--alg", "2")
    assert code == 0
    assert out == "1 1 1 1\n1 1 2\n1 3\n2 2\n4\n"


def test_generate_one(capsys):
    code, out = run(capsys, "generate", "1")
    assert code == 0 and out == "1\n"


def test_generate_limit(capsys):
    code, out = run(capsys, "generate", "30", "--limit", "2")
    assert code == 0
    assert out.splitlines() == ["1" + " 1" * 29, "1" * 1 + " 1" * 27 + " 2"]


def test_generate_descending(capsys):
    code, out = run(capsys, "generate", "6", "--limit", "3", "--descending")
    assert code == 0
    assert out.splitlines() == ["1 1 1 1 1 1", "2 1 1 1 1", "3 1 1 1"]


@pytest.mark.parametrize("alg", [1, 2, 3])
def test_generate_line_count_is_partition_count(capsys, ctx, alg):
    for n in (10, 18, 30):
        code, out = run(capsys, "generate", str(n), "--alg", str(alg))
        assert code == 0
        assert len(out.splitlines()) == ctx.partition_count(n)


def test_tree_to_file(tmp_path, capsys):
    path = tmp_path / "six.dot"
    code, _ = run(capsys, "tree", "6", "--kind", "partition", "--out", str(path))
    assert code == 0
    text = path.read_text()
    assert text.count("[label=") == 22
    assert text.count(" -> ") == 21
    code, _ = run(capsys, "tree", "6", "--kind", "partition", "--out", str(path))
    assert path.read_text() == text


def test_tree_binary_stdout(capsys):
    code, out = run(capsys, "tree", "1", "--kind", "binary")
    assert code == 0
    assert '0 [label="1,0"];' in out


def test_ratios_csv(tmp_path, capsys):
    path = tmp_path / "ratios.csv"
    code, _ = run(capsys, "ratios", "--max-n", "20", "--out", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "n,r1,r2"
    assert len(lines) == 20
    assert lines[-1].startswith("20,0.8955")


def test_bench_csv(tmp_path, capsys):
    path = tmp_path / "bench.csv"
    code, _ = run(capsys, "bench", "--n", "8,10", "--reps", "2", "--out", str(path))
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "n,t1_ns,t2_ns,r,r1,r2"
    assert len(lines) == 3


def test_verify_passes(capsys):
    code, out = run(capsys, "verify", "--max-n", "12")
    assert code == 0
    assert out.count("PASS") == 6
    assert "FAIL" not in out
    assert out.splitlines()[-1].startswith("OK")


@pytest.mark.parametrize("argv", [
    ("count",),
    ("count", "-5"),
    ("count", "5", "--min-part", "0"),
    ("generate", "0"),
    ("generate", "4", "--alg", "9"),
    ("tree", "50", "--kind", "partition"),
    ("tree", "6"),
    ("bench", "--n", "ten"),
    ("nonsense",),
])
def test_usage_errors_exit_two(argv):
    with pytest.raises(SystemExit) as err:
        main(list(argv))
    assert err.value.code == 2
