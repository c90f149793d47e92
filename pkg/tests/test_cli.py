from __future__ import annotations

import io
import subprocess
import sys

import pytest

from wedgraphs import families as fam
from wedgraphs.canon import canonical_str
from wedgraphs.cli import (
    EXIT_COUNTEREXAMPLE,
    EXIT_OK,
    EXIT_USAGE,
    format_edge_list,
    looks_like_graph6,
    main,
    parse_graph,
)
from wedgraphs.graph6 import decode


def run(argv, stdin: str = "", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def records(text: str) -> dict[str, str]:
    out = {}
    for line in text.splitlines():
        for field in line.split():
            key, _, value = field.partition("=")
            out[key] = value
    return out


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_analyze_edge_list(cli):
    doc = "# five cycle\nn 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
    code, out, _ = cli(["analyze"], doc)
    rec = records(out)
    assert code == EXIT_OK
    assert rec["wed"] == "true" and rec["gamma_prime"] == "2" and rec["status"] == "ok"


def test_analyze_graph6_and_forced_format(cli):
    code, out, _ = cli(["analyze"], canonical_str(fam.biclique(2, 3)) + "\n")
    assert code == EXIT_OK and records(out)["wed"] == "false"
    code, _, err = cli(["analyze", "--format", "graph6"], "n 2\n")
    assert code == EXIT_USAGE and "line 1" in err
    code, _, err = cli(["analyze", "--format", "graph6"], "A_\nA_\n")
    assert code == EXIT_USAGE and "one line" in err


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ("n 5\n0 1\n5 x\n", "line 3"),
        ("n 3\n0 3\n", "line 2"),
        ("n 3\n0 1\n1 0\n", "duplicate"),
        ("n 3\n1 1\n", "self-loop"),
        ("0 1\n", "line 1"),
        ("# only a comment\n", "missing"),
    ],
)
def test_analyze_parse_errors(cli, doc, fragment):
    code, out, err = cli(["analyze"], doc)
    assert code == EXIT_USAGE and fragment in err and out == ""


def test_analyze_reads_files(cli, tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(format_edge_list(fam.complete(4)))
    code, out, _ = cli(["analyze", str(path)])
    assert code == EXIT_OK and records(out)["wed"] == "true"
    code, _, err = cli(["analyze", str(tmp_path / "missing.txt")])
    assert code == EXIT_USAGE


def test_gen_examples(cli):
    code, out, _ = cli(["gen", "hstar"])
    G = parse_graph(out)
    assert code == EXIT_OK and (G.order, G.size) == (7, 8)
    code, out, _ = cli(["gen", "f11", "n=2"])
    assert parse_graph(out).order == 9
    code, _, err = cli(["gen", "h2", "leaves=0"])
    assert code == EXIT_USAGE and "leaves >= 1" in err
    code, _, err = cli(["gen", "f21", "n=1", "r=1", "s=1"])
    assert code == EXIT_USAGE and "n - 1 >= r >= 1" in err
    code, _, err = cli(["gen", "f11", "n"])
    assert code == EXIT_USAGE
    code, _, err = cli(["gen", "nothing"])
    assert code == EXIT_USAGE


def test_gen_is_deterministic(cli):
    a = cli(["gen", "g21", "m=1", "n=2", "r=1", "s=1"])
    b = cli(["gen", "g21", "m=1", "n=2", "r=1", "s=1"])
    assert a == b


@pytest.mark.parametrize(
    "argv, wed",
    [
        (["hstar"], "true"),
        (["h3"], "true"),
        (["h1", "leaves=2"], "true"),
        (["h2", "leaves=3"], "true"),
        (["complete", "n=5"], "false"),
        (["biclique", "r=3", "s=4"], "false"),
        (["cycle", "n=6"], "false"),
        (["path", "n=4"], "false"),
        (["f12", "n=1"], "false"),
        (["star", "n=6"], "true"),
    ],
)
def test_gen_piped_into_analyze(cli, argv, wed):
    _, doc, _ = cli(["gen", *argv])
    code, out, _ = cli(["analyze"], doc)
    assert code == EXIT_OK and records(out)["wed"] == wed


def test_verify_examples(cli):
    code, out, _ = cli(["verify", "triangle-free", "--max-n", "8"])
    rec = records(out)
    assert code == EXIT_OK and rec["holds"] == "true" and rec["witnesses"] == "3"
    code, out, _ = cli(["verify", "cartesian", "--factor-max", "4"])
    rec = records(out)
    assert code == EXIT_OK and rec["witness"] == canonical_str(fam.cycle(4))
    code, _, err = cli(["verify", "bogus"])
    assert code == EXIT_USAGE and "unknown theorem" in err


def test_verify_counterexample_exit_code(cli, monkeypatch):
    import wedgraphs.census as census

    monkeypatch.setattr(census, "_wed_of", lambda g6: False)
    code, out, _ = cli(["verify", "kn", "--max-n", "3"])
    assert code == EXIT_COUNTEREXAMPLE
    assert "counterexample=" in out and records(out)["holds"] == "false"


def test_verify_reads_a_graph6_stream(cli, tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("\n".join(canonical_str(G) for G in (fam.cycle(5), fam.cycle(7), fam.cycle(6))) + "\n")
    code, out, _ = cli(["verify", "triangle-free", "--max-n", "9", "--source", str(path)])
    rec = records(out)
    assert code == EXIT_OK and rec["graphs_checked"] == "2" and rec["witnesses"] == "2"
    code, _, err = cli(["verify", "triangle-free", "--source", "-"], "D??\nnot graph6\n")
    assert code == EXIT_USAGE and "line 2" in err


def test_census_examples(cli):
    code, out, err = cli(["census", "--max-n", "6", "--predicate", "wed", "--connected"])
    lines = out.split()
    assert code == EXIT_OK and lines == sorted(lines)
    for G in (fam.cycle(4), fam.cycle(5), fam.complete(4), fam.star(3), fam.star(5)):
        assert canonical_str(G) in lines
    assert f"count={len(lines)}" in err
    code, out, _ = cli(["census", "--max-n", "3", "--nonbipartite", "--triangle-free"])
    assert code == EXIT_OK and out == ""
    code, out, _ = cli(
        ["census", "--max-n", "8", "--bipartite", "--girth-min", "4", "--predicate", "wed"]
    )
    lines = out.split()
    for n in (2, 3, 4):
        assert canonical_str(fam.biclique(n, n)) in lines
    for line in lines:
        G = decode(line)
        assert G.order <= 8


def test_census_bound_and_usage_errors(cli):
    code, _, err = cli(["census", "--max-n", "11"])
    assert code == EXIT_USAGE and "order <= 10" in err
    with pytest.raises(SystemExit) as exc:
        main(["census"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["census", "--max-n", "4", "--predicate", "nope"])
    assert exc.value.code == EXIT_USAGE


def test_output_file(cli, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = cli(["gen", "hstar", "--output", str(target)])
    assert code == EXIT_OK and out == ""
    assert target.read_text().startswith("# HSTAR\nn 7\n")


def test_format_detection():
    assert looks_like_graph6("DLo\n")
    assert looks_like_graph6(">>graph6<<DLo")
    assert not looks_like_graph6("n 5\n0 1\n")
    assert not looks_like_graph6("n 1")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wedgraphs", "gen", "h3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "n 5" in proc.stdout


@pytest.mark.parametrize(
    "flags",
    [
        ["--triangle-free", "--connected"],
        ["--bipartite"],
        ["--girth-min", "5", "--connected"],
        ["--girth-min", "4", "--girth-max", "4", "--nonbipartite"],
        ["--split", "--connected"],
    ],
)
def test_census_lines_pass_their_filter(cli, flags):
    from wedgraphs.census import CensusFilter

    code, out, _ = cli(["census", "--max-n", "6", *flags])
    assert code == EXIT_OK
    flt = CensusFilter(
        6,
        connected="--connected" in flags,
        triangle_free="--triangle-free" in flags,
        bipartite="--bipartite" in flags,
        nonbipartite="--nonbipartite" in flags,
        min_girth=int(flags[flags.index("--girth-min") + 1]) if "--girth-min" in flags else None,
        max_girth=int(flags[flags.index("--girth-max") + 1]) if "--girth-max" in flags else None,
        split_only="--split" in flags,
    )
    lines = out.split()
    assert lines
    assert all(flt.accepts(decode(line)) for line in lines)
