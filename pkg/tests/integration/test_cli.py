"""Command-line tests: output and exit codes of ``zeta``."""

import json
from dataclasses import replace

import pytest

import curve_zeta.cli.corpus as corpus_module
import curve_zeta.cli.report as report_module
from curve_zeta.cli.main import main


def flip_predictions(original):
    """Wrap verify_criterion so every prediction is wrong."""

    def flipped(*args, **kwargs):
        verdict = original(*args, **kwargs)
        entries = tuple(replace(e, predicted_pole=not e.predicted_pole) for e in verdict.entries)
        return replace(verdict, entries=entries)

    return flipped


class TestReportCommand:
    def test_cusp_text(self, capsys):
        assert main(["report", "x^2 + y^3"]) == 0
        out = capsys.readouterr().out
        assert "f = y^3 + x^2" in out
        assert "nondegenerate: yes" in out
        assert "Z_top(s) = (4s + 5) / ((s + 1)(6s + 5))" in out
        assert "  -5/6: pole (facets 1)" in out
        assert "criterion: agree" in out

    def test_residues(self, capsys):
        assert main(["report", "--residues", "x^2 + y^3"]) == 0
        out = capsys.readouterr().out
        assert "  -5/6: order 1, residue 5/3 (closed form 5/3)" in out
        assert "  -1: order 1, residue -1" in out

    def test_json(self, capsys):
        assert main(["report", "--json", "x + y"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["zeta"]["display"] == "1 / (s + 1)"
        statuses = {c["value"]: c["status"] for c in data["candidates"]}
        assert statuses == {"-2": "cancelled (B1)", "-1": "pole"}
        assert data["criterion"]["agree"] is True

    def test_ascii_polygon(self, capsys):
        assert main(["report", "--ascii-polygon", "x^2 + y^3"]) == 0
        assert "  0 . #--" in capsys.readouterr().out

    def test_degenerate(self, capsys):
        assert main(["report", "x^2 + 2*x*y + y^2"]) == 2
        out = capsys.readouterr().out
        assert "nondegenerate: no (segment (0, 2)-(2, 0))" in out
        assert "formal value: nondegeneracy failed" in out

    def test_disagreement(self, capsys, monkeypatch):
        monkeypatch.setattr(
            report_module, "verify_criterion", flip_predictions(report_module.verify_criterion)
        )
        assert main(["report", "x^2 + y^3"]) == 3
        assert "criterion: DISAGREE" in capsys.readouterr().out


class TestVerifyCommand:
    def test_agree(self, capsys):
        assert main(["verify", "x^5 + x^2*y^2 + y^5"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("criterion: agree")
        assert "-1/2: predicted pole, found pole of order 2 (agree)" in out

    @pytest.mark.parametrize("text", ["1 + x", "x^", "x + + y", "x ? y"])
    def test_parse_errors(self, capsys, text):
        assert main(["verify", text]) == 1
        assert capsys.readouterr().err.startswith("error: ")

    def test_constant_term_message(self, capsys):
        assert main(["verify", "1 + x"]) == 1
        assert "error: f(0) ≠ 0 required (at position 0)" in capsys.readouterr().err


class TestCorpusCommand:
    def test_small_run(self, capsys):
        assert main(["corpus", "--seed", "3", "--count", "5"]) == 0
        out = capsys.readouterr().out
        assert "criterion agreement: 5/5" in out
        assert out.rstrip().endswith("OK")

    def test_json(self, capsys):
        assert main(["corpus", "--seed", "4", "--count", "3", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["count"] == 3
        assert data["agreements"] == 3
        assert data["counterexamples"] == []

    def test_count_must_be_positive(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["corpus", "--count", "0"])
        assert excinfo.value.code == 2
        assert "must be at least 1" in capsys.readouterr().err

    def test_failures_exit_three(self, capsys, monkeypatch):
        monkeypatch.setattr(
            corpus_module, "verify_criterion", flip_predictions(corpus_module.verify_criterion)
        )
        # every draw with a candidate other than -1 now disagrees
        code = main(["corpus", "--seed", "1", "--count", "20"])
        out = capsys.readouterr().out
        assert code == 3
        assert "counterexample #" in out
        assert out.rstrip().endswith("FAILED")
