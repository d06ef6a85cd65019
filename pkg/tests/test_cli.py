import json
import subprocess
import sys

import pytest

from circhad import report
from circhad.cli import main
from circhad.known import KNOWN_MATRICES, known_by_name
from circhad.search import SearchConfig, enumerate_rows
from circhad.sequences import make_row


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestVerify:
    def test_h3(self, capsys):
        code, out, _ = cli(capsys, "verify", "+---", "--format", "json")
        rep = json.loads(out)
        assert code == 0
        assert rep["hadamard"] is True
        assert rep["identities"]["condition1_holds"] is True
        assert rep["identities"]["product_lambda"] == 0
        assert rep["identities"]["remark2_residuals"] == {"2": 0}
        assert set(rep) >= {"input", "order", "hadamard", "regularity", "identities", "spectrum"}

    def test_not_hadamard(self, capsys):
        code, out, _ = cli(capsys, "verify", "++++", "--format", "json")
        assert code == 1 and json.loads(out)["hadamard"] is False

    def test_parse_error(self, capsys):
        code, out, err = cli(capsys, "verify", "+0-")
        assert code == 2 and out == "" and "cannot parse" in err

    def test_odd_length(self, capsys):
        code, out, err = cli(capsys, "verify", "+", "--format", "json")
        rep = json.loads(out)
        assert code == 0 and "identities" not in rep
        assert rep["notes"] == [report.ODD_ORDER_NOTE]
        assert "odd order" in err

    def test_comma_literal(self, capsys):
        code, out, _ = cli(capsys, "verify", "-1,-1,1,-1", "--format", "json")
        assert code == 0 and json.loads(out)["input"] == "--+-"

    @pytest.mark.parametrize("argv", [
        ["verify", "---+"], ["verify", "--format", "json", "-+--"], ["verify", "-1,1,-1,-1", "--tol", "1e-6"],
        ["verify", "--", "--+-"], ["spectrum", "---+"],
    ])
    def test_literals_starting_with_minus(self, capsys, argv):
        code, _, err = cli(capsys, *argv)
        assert code == 0, err

    def test_text_format(self, capsys):
        code, out, _ = cli(capsys, "verify", "+---")
        assert "hadamard: true" in out and "identities.condition1_holds: true" in out


class TestSearch:
    def test_order4(self, capsys):
        code, out, _ = cli(capsys, "search", "4", "--format", "json")
        assert code == 0 and json.loads(out)["search"]["raw_count"] == 8

    def test_order12_unconditional(self, capsys):
        code, out, _ = cli(capsys, "search", "12", "--no-lemma2", "--format", "json")
        s = json.loads(out)["search"]
        assert code == 0 and s["raw_count"] == 0 and s["complete"]

    def test_order16_short_circuit(self, capsys):
        code, out, _ = cli(capsys, "search", "16", "--format", "json")
        s = json.loads(out)["search"]
        assert code == 0
        assert s["order_verdict"] == {"admissible": False, "h": 2, "n": 16, "reason": "h-even"}
        assert s["nodes_explored"] == 0

    def test_node_limit_exit(self, capsys):
        code, out, _ = cli(capsys, "search", "24", "--no-lemma2", "--node-limit", "100", "--format", "json")
        assert code == 3 and json.loads(out)["search"]["complete"] is False

    @pytest.mark.parametrize("argv", [
        ["search", "0"], ["search", "65"], ["search", "4", "--threads", "0"],
        ["search", "4", "--symmetry", "mirror"], ["search", "4", "--node-limit", "-5"],
        ["search", "4", "--format", "xml"], ["verify", "+-", "--tol", "0"], ["bogus"],
    ])
    def test_usage_errors(self, capsys, argv):
        code, out, _ = cli(capsys, *argv)
        assert code == 2 and out == ""

    def test_symmetry_none(self, capsys):
        code, out, _ = cli(capsys, "search", "4", "--symmetry", "none", "--format", "json")
        s = json.loads(out)["search"]
        assert s["canonical_count"] == 8 and len(s["solutions"]) == 8

    def test_byte_identical_without_timing(self, capsys):
        outs = set()
        for threads in ("1", "2"):
            _, out, _ = cli(capsys, "search", "14", "--no-lemma2", "--threads", threads, "--no-timing",
                            "--format", "json")
            outs.add(out)
        assert len(outs) == 1
        assert "timing" not in json.loads(outs.pop())

    def test_timing_block_is_separate(self, capsys):
        _, out, _ = cli(capsys, "search", "4", "--format", "json")
        rep = json.loads(out)
        assert set(rep["timing"]) == {"elapsed_s", "worker_count"}
        assert "elapsed" not in json.dumps(rep["search"])


class TestKnown:
    def test_all_ten_verify(self, capsys):
        code, out, _ = cli(capsys, "known", "--format", "json")
        rep = json.loads(out)
        assert code == 0 and rep["count"] == 10 and rep["all_verified"]
        assert [r["name"] for r in rep["known"]] == [f"H{i}" for i in range(1, 11)]
        assert all(r["hadamard"] for r in rep["known"])

    def test_negation_pairs(self):
        assert known_by_name("H4").first_row == -known_by_name("H3").first_row
        assert known_by_name("H2").first_row == make_row([-1])
        assert known_by_name("H9").first_row == make_row([-1, -1, -1, 1])
        assert [r.order for r in KNOWN_MATRICES] == [1, 1] + [4] * 8

    def test_text(self, capsys):
        code, out, _ = cli(capsys, "known")
        assert code == 0 and out.count("name: H") == 10


class TestSpectrumCommand:
    def test_h3(self, capsys):
        code, out, _ = cli(capsys, "spectrum", "+---", "--format", "json")
        sp = json.loads(out)["spectrum"]
        assert code == 0
        assert sp["modulus_check"] and sp["wk_residual"] <= 4e-9
        assert sp["power"] == pytest.approx([4.0] * 4, abs=1e-12)
        assert sp["real"][0] == pytest.approx(-2.0, abs=1e-12)

    def test_flat(self, capsys):
        code, out, _ = cli(capsys, "spectrum", "++++", "--format", "json")
        assert code == 1 and json.loads(out)["spectrum"]["modulus_check"] is False


class TestEncodings:
    @pytest.mark.parametrize("rep", [
        report.row_report(make_row([1, -1, -1, -1])),
        report.row_report(make_row([1, 1, -1])),
        report.spectrum_report(make_row([1, 1, -1, 1, -1, -1])),
        report.known_report(),
        report.search_report(enumerate_rows(SearchConfig(4, emit_all=True))),
        report.search_report(enumerate_rows(SearchConfig(16))),
    ])
    def test_csv_round_trip(self, rep):
        assert report.from_csv(report.to_csv(rep)) == json.loads(report.to_json(rep))

    def test_csv_from_cli_matches_json(self, capsys):
        _, js, _ = cli(capsys, "search", "4", "--emit-all", "--no-timing", "--format", "json")
        _, cs, _ = cli(capsys, "search", "4", "--emit-all", "--no-timing", "--format", "csv")
        assert report.from_csv(cs) == json.loads(js)

    def test_json_keys_sorted(self):
        text = report.to_json(report.row_report(make_row([1, -1, -1, -1])))
        assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"

    def test_bad_csv_header(self):
        with pytest.raises(ValueError):
            report.from_csv("a,b\n")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "circhad.cli", "verify", "+---", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["hadamard"] is True
