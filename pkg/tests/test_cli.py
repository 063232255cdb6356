import json
import subprocess
import sys

import pytest

from primercodes.cli import run


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_code_build_bch(capsys):
    assert run(["code", "build", "bch", "--m", "3", "--d", "3", "--verify"]) == 0
    d = _json(capsys)
    assert d["schema_version"] == 1
    assert "run_config" in d
    assert d["code"]["n"] == 7 and d["code"]["k"] == 4


def test_code_build_from_generator_file(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert run(["code", "build", "from-generator", "--q", "4", "--n", "15",
                "--generator", "1,1,3,1,3,1,1", "-o", str(out)]) == 0
    d = json.loads(out.read_text())
    assert d["code"]["k"] == 9


def test_bad_generator_exit_code(capsys):
    assert run(["code", "build", "from-generator", "--n", "7", "--generator", "1,0,1"]) == 2
    assert "error" in capsys.readouterr().err


def test_construct_encode_decode_bin_balanced(tmp_path, capsys):
    book = tmp_path / "b.json"
    assert run(["construct", "bin-balanced", "-o", str(book)]) == 0
    d = json.loads(book.read_text())
    assert d["metadata"]["n"] == 8
    word = d["words"][0]
    assert run(["decode", "bin-balanced", "--codebook", str(book), "--word", word]) == 0
    msg = capsys.readouterr().out.strip()
    assert run(["encode", "bin-balanced", "--codebook", str(book), "--message", msg]) == 0
    assert capsys.readouterr().out.strip() == word


def test_construct_primer_rc_round_trip(tmp_path, capsys):
    book = tmp_path / "rc.json"
    assert run(["construct", "primer-rc", "--max-m-degree", "2", "-o", str(book)]) == 0
    d = json.loads(book.read_text())
    assert len(d["words"]) == 272
    assert run(["encode", "primer-rc", "--codebook", str(book), "--message", "13", "--index", "5"]) == 0
    w = capsys.readouterr().out.strip()
    assert run(["decode", "primer-rc", "--codebook", str(book), "--word", w]) == 0
    assert capsys.readouterr().out.split() == ["13", "5"]
    assert run(["encode", "primer-rc", "--codebook", str(book), "--message", "13"]) == 2


def test_verify_on_codebook(tmp_path, capsys):
    book = tmp_path / "rc.json"
    run(["construct", "primer-rc", "--max-m-degree", "2", "-o", str(book)])
    assert run(["verify", "wmu", "--input", str(book), "--kappa", "9"]) == 0
    assert _json(capsys)["report"]["verdict"] == "pass"
    assert run(["verify", "distance", "--input", str(book), "--d", "6"]) == 1
    rep = _json(capsys)["report"]
    assert rep["verdict"] == "fail" and rep["witness"] is not None
    assert run(["verify", "apd", "--input", str(book), "--f", "9", "--mode", "sampled", "--seed", "3"]) == 0
    rep = _json(capsys)["report"]
    assert rep["verdict"] == "sampled-pass" and rep["seed"] == 3


def test_verify_word_list_and_export(tmp_path, capsys):
    book = tmp_path / "a.json"
    run(["construct", "primer-almost", "-o", str(book)])
    assert run(["export", "--input", str(book), "--format", "fasta"]) == 0
    fasta = capsys.readouterr().out
    assert fasta.startswith(">primer_0\n")
    path = tmp_path / "w.fa"
    path.write_text(fasta)
    assert run(["verify", "balance", "--input", str(path), "--balance-mode", "almost"]) == 0
    capsys.readouterr()
    assert run(["verify", "census", "--input", str(path)]) == 0
    assert _json(capsys)["report"]["detail"]["classes"] == 4


def test_rcgen(capsys):
    assert run(["rcgen", "validate"]) == 0
    assert _json(capsys)["report"]["ok"] is True
    assert run(["rcgen", "validate", "--flavor", "rc2"]) == 1
    capsys.readouterr()
    assert run(["rcgen", "search", "--flavor", "rc2"]) == 0
    assert _json(capsys)["rcset"]["p"] == [[2, 1, 1]]


def test_max_words_guard(capsys):
    assert run(["construct", "primer-rc", "--max-words", "100"]) == 2


def test_demo(capsys):
    assert run(["demo", "example1"]) == 0
    out = capsys.readouterr().out
    assert "[15,9,5]_4" in out
    assert "17408" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "primercodes", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "0.1.0"
