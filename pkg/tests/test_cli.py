import csv
import io
import os
import subprocess
import sys

import pytest

from topdict.cli import BENCH_HEADER, main


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("TOPDICT_SEED", None)
    if env:
        e.update(env)
    return subprocess.run([sys.executable, "-m", "topdict", *map(str, args)],
                          capture_output=True, env=e)


@pytest.fixture()
def abac(tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_bytes(b"ab\nac\n")
    out = tmp_path / "c.tdx"
    assert run("build", corpus, out).returncode == 0
    return out


def test_query_count(abac):
    r = run("query", abac, "a", "--count")
    assert r.returncode == 0
    assert r.stdout == b"matched=1 prefix=true count=2\n"


def test_query_report_and_miss(abac):
    r = run("query", abac, "a", "--report", "--engine", "msigma")
    assert r.stdout.splitlines() == [b"matched=1 prefix=true", b"ab", b"ac"]
    r = run("query", abac, "ad", "--count")
    assert r.stdout == b"matched=1 prefix=false count=0\n"


def test_auto_equals_logn(abac):
    for p in ("", "a", "ab", "ac", "ad", "abc", "b"):
        a = run("query", abac, p, "--engine", "auto", "--count")
        b = run("query", abac, p, "--engine", "logn", "--count")
        assert a.stdout == b.stdout


def test_verbose_counters(abac):
    out = run("query", abac, "ab", "--verbose").stdout.decode()
    assert "char_comparisons=" in out and "clusters_visited=" in out


def test_batch(abac, tmp_path):
    pats = tmp_path / "p.txt"
    pats.write_bytes(b"a\nab\nx\n")
    r = run("query", abac, "--batch", pats, "--count", "--jobs", "3")
    assert r.stdout.splitlines() == [
        b"matched=1 prefix=true count=2",
        b"matched=2 prefix=true count=1",
        b"matched=0 prefix=false count=0",
    ]


def test_missing_file(tmp_path):
    r = run("query", tmp_path / "none.tdx", "a")
    assert r.returncode == 2
    assert r.stderr


def test_corrupt_file(tmp_path):
    f = tmp_path / "bad.tdx"
    f.write_bytes(b"nope")
    r = run("stats", f)
    assert r.returncode == 2 and b"magic" in r.stderr


def test_usage_error():
    assert run("frobnicate").returncode == 1
    with pytest.raises(SystemExit) as e:
        main(["build"])
    assert e.value.code == 1


def test_stats(abac):
    out = run("stats", abac).stdout.decode().splitlines()
    keys = [line.split("=")[0] for line in out]
    assert keys == ["strings", "n", "sigma", "n_T", "top_tree_clusters", "n_TD", "height", "seed"]
    assert "n=4" in out and "strings=2" in out and "n_T=4" in out


def test_build_deterministic_and_seed_env(tmp_path):
    corpus = tmp_path / "c.txt"
    assert run("gen", "repetitive", "--n", "3000", "-o", corpus).returncode == 0
    a, b, c = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    run("build", corpus, a, "--seed", "5")
    run("build", corpus, b, "--seed", "5")
    run("build", corpus, c, "--seed", "1", env={"TOPDICT_SEED": "5"})
    assert a.read_bytes() == b.read_bytes() == c.read_bytes()
    assert run("build", corpus, c, env={"TOPDICT_SEED": "x"}).returncode == 2


def test_empty_corpus(tmp_path):
    corpus = tmp_path / "e.txt"
    corpus.write_bytes(b"")
    out = tmp_path / "e.tdx"
    assert run("build", corpus, out).returncode == 0
    assert run("query", out, "", "--count").stdout == b"matched=0 prefix=true count=0\n"
    assert run("query", out, "a").stdout == b"matched=0 prefix=false\n"


def test_bench_csv(abac, tmp_path):
    pats = tmp_path / "p.txt"
    pats.write_bytes(b"a\nac\nzz\n")
    r1 = run("bench", abac, pats)
    r2 = run("bench", abac, pats)
    rows = list(csv.reader(io.StringIO(r1.stdout.decode())))
    assert tuple(rows[0]) == BENCH_HEADER
    assert len(rows) == 1 + 3 * 4
    assert r1.stdout == r2.stdout  # no timing requested, so fully deterministic
    timed = list(csv.DictReader(io.StringIO(run("bench", abac, pats, "--measure", "--engine", "logn").stdout.decode())))
    assert len(timed) == 3 and all(int(r["nanoseconds"]) > 0 for r in timed)


def test_gen_families(tmp_path):
    r = run("gen", "parity", "--sigma", "2", "--m", "2")
    assert r.stdout == b"aa\nbb\n"
    r = run("gen", "unary", "--n", "8")
    assert r.stdout == b"aaaaaaaa\n"
    r = run("gen", "padded-parity", "--sigma", "2", "--m", "4", "--n", "64")
    assert len(r.stdout.splitlines()) == 4
    r = run("gen", "random", "--n", "2000", "--k", "5", "--sigma", "255")
    assert r.returncode == 0
    body = r.stdout.split(b"\n")[:-1]
    assert len(body) == 5 and sum(map(len, body)) == 2000
    # 255 symbols fit in bytes once the line feed is skipped
    assert run("gen", "random", "--n", "10", "--sigma", "256").returncode == 2
    assert run("gen", "parity", "--sigma", "4", "--m", "12").returncode == 2
