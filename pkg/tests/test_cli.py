import io
import json

import pytest

from salemrel import cli

DEG8 = "x^8-2x^7+x^6-2x^5+x^4-2x^3+x^2-2x+1"
DEG12 = "x^12-4x^10-6x^9-2x^8+4x^7+7x^6+4x^5-2x^4-6x^3-4x^2+1"


def _run_json(capsys, argv):
    code = cli.run(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


# -- exit codes ---------------------------------------------------------------------------


def test_exit_code_success(capsys):
    assert cli.run(["salem-check", "x^4+1"]) == 0
    capsys.readouterr()


def test_exit_code_input_errors(capsys):
    assert cli.run(["parse", "x^-1"]) == 1
    assert "error:" in capsys.readouterr().err
    assert cli.run(["no-such-command"]) == 1
    capsys.readouterr()
    assert cli.run([]) == 1
    capsys.readouterr()
    assert cli.run(["salem-check", ""]) == 1
    assert "error:" in capsys.readouterr().err
    assert cli.run(["relations", "x^4+1", "--max-length", "4"]) == 1
    err = capsys.readouterr().err
    assert "not a Salem minimal polynomial: RootWindowViolation" in err
    assert cli.run(["enum", "--lemma4", "9"]) == 1
    capsys.readouterr()
    assert cli.run(["seq", "--family", "4", "--n", "3"]) == 1
    capsys.readouterr()


def test_exit_code_verification_failure(capsys, monkeypatch):
    original = cli._HANDLERS["parse"]

    def broken(args):
        input_doc, result, certs, reports, lines, _ = original(args)
        return input_doc, result, certs, reports, lines, lambda: ["forced failure"]

    monkeypatch.setitem(cli._HANDLERS, "parse", broken)
    assert cli.run(["parse", "x+1", "--verify"]) == 2
    captured = capsys.readouterr()
    assert "verification failed: forced failure" in captured.err
    # without --verify the same handler exits clean
    assert cli.run(["parse", "x+1"]) == 0
    capsys.readouterr()


# -- document schema ----------------------------------------------------------------------


def test_json_document_schema(capsys):
    code, doc = _run_json(capsys, ["salem-check", DEG8])
    assert code == 0
    assert sorted(doc.keys()) == ["certificates", "command", "input",
                                  "reports", "result", "verified"]
    assert doc["command"] == "salem-check"
    assert doc["result"] == {"is_salem": True, "rejection": None}
    assert doc["verified"] is False

    cert = doc["certificates"][0]
    assert cert["minpoly"]["coeffs"] == ["1", "-2", "1", "-2", "1", "-2",
                                         "1", "-2", "1"]
    assert cert["degree"] == 8 and cert["trace"] == 2

    alpha = cert["alpha"]
    for key in ("lo", "hi"):
        num, _, den = alpha[key].partition("/")
        assert num.lstrip("-").isdigit() and den.isdigit()
    assert alpha["approx"]["lo"] == "1.99400419919"
    assert alpha["approx"]["note"] == "approximate (12 significant digits)"
    assert len(cert["beta_boxes"]) == 4


def test_json_rejection_document(capsys):
    code, doc = _run_json(capsys, ["salem-check", "x^4+1"])
    assert code == 0
    assert doc["result"]["is_salem"] is False
    assert doc["result"]["rejection"]["kind"] == "RootWindowViolation"
    assert doc["certificates"] == []


def test_verified_flag_set(capsys):
    code = cli.run(["salem-check", DEG8, "--json", "--verify"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0 and doc["verified"] is True


# -- subcommand goldens ---------------------------------------------------------------------


def test_trace_poly_and_lift(capsys):
    code, doc = _run_json(capsys, ["trace-poly", DEG12])
    assert code == 0
    assert doc["result"]["trace_poly"]["display"] == "x^6-10x^4-6x^3+23x^2+22x+1"

    code, doc = _run_json(capsys, ["trace-lift", "x^3-5x-3"])
    assert code == 0
    assert doc["result"]["lift"]["display"] == "x^6-2x^4-3x^3-2x^2+1"


def test_lemma4_lift_golden(capsys):
    code, doc = _run_json(capsys, ["lemma4-lift", "x^2+4x+1"])
    assert code == 0
    assert doc["result"]["lift"]["coeffs"] == ["1", "-2", "1", "-2", "1",
                                               "-2", "1", "-2", "1"]
    assert len(doc["certificates"]) == 1

    code, doc = _run_json(capsys, ["lemma4-lift", "x^2+4x+2"])
    assert code == 0
    assert doc["certificates"] == []  # reducible lift: no certificate


def test_factor_golden(capsys):
    code, doc = _run_json(capsys, ["factor", "x^6-10x^4-6x^3+22x^2+18x-3"])
    assert code == 0
    displays = [f["poly"]["display"] for f in doc["result"]["factors"]]
    assert "x^2-3" in displays and "x^4-7x^2-6x+1" in displays


def test_cyclotomic_factors_golden(capsys):
    code, doc = _run_json(capsys, ["cyclotomic-factors", "x^5-x^3-x^2+1"])
    assert code == 0
    hits = [(h["order"], h["multiplicity"]) for h in doc["result"]["hits"]]
    assert hits == [(1, 2), (2, 1), (3, 1)]


def test_seq_and_bad_degrees(capsys):
    code, doc = _run_json(capsys, ["seq", "--family", "2", "--n", "4"])
    assert code == 0
    assert doc["result"]["poly"]["display"] == "x^5-x^3-x^2+1"

    code, doc = _run_json(capsys, ["bad-degrees", "--family", "1",
                                   "--max-degree", "40"])
    assert code == 0
    r = doc["result"]
    assert r["degree_shift"] == 3
    assert r["d_progressions"] == [
        {"order": 2, "residues": [1]},
        {"order": 8, "residues": [2]},
        {"order": 12, "residues": [1]},
        {"order": 18, "residues": [17]},
        {"order": 30, "residues": [24]},
    ]
    even_bad = [d for d in r["bad_degrees"] if d % 2 == 0]
    assert even_bad == [10, 18, 24, 26, 34]


def test_trace0_command(capsys):
    code, doc = _run_json(capsys, ["trace0", "--degree", "10"])
    assert code == 0
    assert doc["result"]["family"] == 2 and doc["result"]["n"] == 9
    assert doc["certificates"][0]["trace"] == 0

    assert cli.run(["trace0", "--degree", "26", "--verify"]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("verified: all cross-checks passed")

    assert cli.run(["trace0", "--degree", "7"]) == 1
    capsys.readouterr()


def test_enum_deg6(capsys):
    code, doc = _run_json(capsys, ["enum", "--deg6-trace0"])
    assert code == 0
    r = doc["result"]
    assert r["mode"] == "deg6-trace0" and r["count"] == 4
    assert r["pairs"] == [[4, -1], [4, -2], [4, -3], [5, -3], [5, -4],
                          [6, -5], [7, -7]]
    assert [c["display"] for c in r["discarded_cubics"]] == [
        "x^3-4x-3", "x^3-5x-4", "x^3-6x-5"
    ]
    assert [c["minpoly"]["display"] for c in doc["certificates"]] == [
        "x^6-x^4-x^3-x^2+1",
        "x^6-x^4-2x^3-x^2+1",
        "x^6-2x^4-3x^3-2x^2+1",
        "x^6-4x^4-7x^3-4x^2+1",
    ]


def test_enum_lemma4_k2(capsys):
    code, doc = _run_json(capsys, ["enum", "--lemma4", "2"])
    assert code == 0
    assert doc["result"]["salem_count"] == 15
    assert doc["result"]["satisfying_count"] == 24
    assert len(doc["certificates"]) == 15


def test_enum_modes_mutually_exclusive(capsys):
    assert cli.run(["enum"]) == 1
    capsys.readouterr()
    assert cli.run(["enum", "--deg6-trace0", "--lemma4", "2"]) == 1
    capsys.readouterr()


def test_relations_command(capsys):
    code, doc = _run_json(capsys, ["relations", DEG8, "--max-length", "8"])
    assert code == 0
    assert len(doc["reports"]) == 1
    rep = doc["reports"][0]
    assert rep["vector"] == ["1", "1", "-1", "-1", "-1", "-1", "1", "1"]
    assert rep["reduced"] == ["1", "-1", "-1", "1"]
    assert rep["status"] == "certified_pairsum"
    assert rep["nontrivial"] is True
    assert rep["precision_bits"] == 64

    code, doc = _run_json(capsys, ["relations", DEG12, "--max-length", "6",
                                   "--precision", "96"])
    assert code == 0
    assert {r["status"] for r in doc["reports"]} == {"certified_quadsplit"}
    assert all(r["precision_bits"] == 96 for r in doc["reports"])

    assert cli.run(["relations", DEG8, "--max-length", "8", "--verify"]) == 0
    capsys.readouterr()


def test_parse_command(capsys):
    code, doc = _run_json(capsys, ["parse", "[1,0,1]"])
    assert code == 0
    assert doc["result"]["poly"]["display"] == "x^2+1"


# -- input plumbing ---------------------------------------------------------------------


def test_stdin_dash(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("x^2-3x+1\n"))
    code, doc = _run_json(capsys, ["salem-check", "-"])
    assert code == 0
    assert doc["result"]["rejection"]["kind"] == "DegreeTooSmall"


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("SALEMREL_THREADS", "2")
    assert cli.run(["parse", "x+1"]) == 0
    capsys.readouterr()
    for bad in ("0", "-1", "lots"):
        monkeypatch.setenv("SALEMREL_THREADS", bad)
        assert cli.run(["parse", "x+1"]) == 1
        assert "SALEMREL_THREADS" in capsys.readouterr().err


def test_output_deterministic(capsys):
    cli.run(["enum", "--deg6-trace0", "--json"])
    first = capsys.readouterr().out
    cli.run(["enum", "--deg6-trace0", "--json"])
    second = capsys.readouterr().out
    assert first == second


def test_text_mode_lists_certificates(capsys):
    assert cli.run(["salem-check", DEG8]) == 0
    out = capsys.readouterr().out
    assert "Salem" in out
    assert "1.99400419919" in out
