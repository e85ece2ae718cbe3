import json

import pytest

from mucrit import cli


def run_cli(capsys, *args):
    code = cli.run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_verify_f41_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify-f41")
        assert code == 0
        assert "PASS" in out

    def test_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "search", "sumset", "--p", "999", "--d", "2")
        assert code == 2

    def test_unknown_lemma(self, capsys):
        code, _, _ = run_cli(capsys, "check", "lemma99")
        assert code == 2

    def test_malformed_flags(self, capsys):
        code = cli.run(["search", "sumset", "--p", "not-a-number", "--d", "2"])
        capsys.readouterr()
        assert code == 2

    def test_failing_check_exits_one(self, capsys, monkeypatch):
        monkeypatch.setitem(cli.LEMMA_CHECKS, 1, lambda rng: (False, {"forced": True}))
        code, out, _ = run_cli(capsys, "check", "lemma1")
        assert code == 1
        assert "FAIL" in out


class TestJsonOutput:
    def test_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "verify-f41", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == "mucrit/1"
        assert doc["ok"] is True
        assert json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n" == out

    def test_field_elements_as_decimal_strings(self, capsys):
        _, out, _ = run_cli(capsys, "verify-f41", "--format", "json")
        doc = json.loads(out)
        c = doc["report"]["C"]
        assert c == {"value": "7", "mod": "41"}

    def test_search_report_shape(self, capsys):
        _, out, _ = run_cli(
            capsys, "search", "sumset", "--p", "13", "--d", "4", "--format", "json"
        )
        doc = json.loads(out)
        assert doc["report"]["kind"] == "sumset"
        assert doc["report"]["witnesses"]
        assert "elapsed" not in json.dumps(doc)

    def test_levson_json(self, capsys):
        _, out, _ = run_cli(
            capsys, "search", "levson", "--alpha-max", "100", "--format", "json"
        )
        doc = json.loads(out)
        assert doc["report"]["counts"]["primes_scanned"] == 35
        assert doc["report"]["witnesses"] == [[13, 3, 3], [41, 5, 4]]


class TestDeterminism:
    @pytest.mark.parametrize(
        "args",
        [
            ("verify-f41",),
            ("verify-identities",),
            ("search", "sumset", "--p", "29", "--d", "4"),
            ("search", "diffset", "--p", "41", "--d", "20"),
            ("search", "levson", "--alpha-max", "200"),
            ("check", "lemma10",),
        ],
    )
    def test_byte_identical_across_threads(self, capsys, args):
        outputs = []
        for threads in ("1", "4", "16"):
            _, out, _ = run_cli(
                capsys, *args, "--format", "json", "--threads", threads, "--seed", "0"
            )
            outputs.append(out)
        assert outputs[0] == outputs[1] == outputs[2]

    def test_seeded_residue_run_reproducible(self, capsys):
        a = run_cli(
            capsys, "verify-residues", "--primes", "41", "--instances", "20",
            "--form-instances", "3", "--format", "json", "--seed", "7",
        )
        b = run_cli(
            capsys, "verify-residues", "--primes", "41", "--instances", "20",
            "--form-instances", "3", "--format", "json", "--seed", "7",
        )
        assert a == b


class TestOutputModes:
    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "verify-f41", "--format", "json", "--out", str(dest)
        )
        assert code == 0
        assert out == ""
        doc = json.loads(dest.read_text())
        assert doc["ok"] is True

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "verify-f41", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "key,value"
        assert any("checks.factorization_exact" in line for line in out.splitlines())

    def test_text_lists_checks(self, capsys):
        _, out, _ = run_cli(capsys, "check", "lemma13")
        assert "PASS" in out


class TestLemmaRegistry:
    @pytest.mark.parametrize("n", list(range(1, 18)))
    def test_every_lemma_check_passes(self, capsys, n):
        code, out, _ = run_cli(capsys, "check", f"lemma{n}")
        assert code == 0, out
