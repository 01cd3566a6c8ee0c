import json

import pytest

from qtknots.cli import build_parser, main
from qtknots.errors import EXIT_INVALID_INPUT, EXIT_OK, EXIT_VERIFICATION_FAILED
from qtknots.output import decode_superpoly, parse_superpoly_text


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


@pytest.fixture(autouse=True)
def isolated_cache(cache_dir):
    return cache_dir


class TestGoldenOutputs:
    def test_superpoly_text(self, capsys):
        code, out, _ = run(capsys, "superpoly", "-k", "3", "-n", "2", "--format", "monomial")
        assert (code, out) == (EXIT_OK, "A^0: q + t ; A^1: 1")

    def test_triangular_count(self, capsys):
        code, out, _ = run(capsys, "triangular", "--count", "--max", "6")
        assert (code, out) == (EXIT_OK, "1 1 2 3 4 6 7")

    def test_dtau_schur(self, capsys):
        code, out, _ = run(capsys, "dtau", "--tau", "2,1", "--schur")
        assert (code, out) == (EXIT_OK, "s[3] + s[1,1]")


class TestComputations:
    def test_macdonald(self, capsys):
        assert run(capsys, "macdonald", "--mu", "2")[:2] == (EXIT_OK, "s[2] + q*s[1,1]")

    def test_kostka(self, capsys):
        assert run(capsys, "macdonald", "--kostka", "2")[:2] == (EXIT_OK, "2: 1 | q\n1,1: 1 | t")

    def test_nabla_and_inverse(self, capsys):
        assert run(capsys, "nabla", "--f", "e[2]")[:2] == (EXIT_OK, "s[2] + (q + t)*s[1,1]")
        assert run(capsys, "nabla", "--f", "s[2] + (q + t)*s[1,1]", "--inverse")[:2] == (EXIT_OK, "s[1,1]")

    def test_hall_operator(self, capsys):
        assert run(capsys, "hall", "--ray", "0,1", "--f", "s[1]")[:2] == (EXIT_OK, "s[2] + s[1,1]")

    def test_hall_creation_and_family(self, capsys):
        created = run(capsys, "hall", "--ray", "1,1", "--seed", "e:2")
        family = run(capsys, "hall", "--family", "2,2")
        assert created[0] == family[0] == EXIT_OK
        assert created[1] == family[1] == "s[2] + (q + t)*s[1,1]"

    def test_triangular_test(self, capsys):
        assert run(capsys, "triangular", "--test", "2,1")[:2] == (EXIT_OK, "triangular (1/3, 2/3)")
        assert run(capsys, "triangular", "--test", "2,2")[:2] == (EXIT_OK, "not triangular")

    def test_triangular_list(self, capsys):
        assert run(capsys, "triangular", "--list", "--max", "2")[:2] == (EXIT_OK, "0: 0\n1: 1\n2: 2 1,1")

    def test_dtau_super(self, capsys):
        assert run(capsys, "dtau", "--tau", "1", "--super")[:2] == (EXIT_OK, "A^0: q + t ; A^1: 1")


class TestJson:
    def test_superpoly_json_matches_text(self, capsys):
        _, text, _ = run(capsys, "superpoly", "-k", "4", "-n", "3")
        code, out, _ = run(capsys, "superpoly", "-k", "4", "-n", "3", "--json")
        assert code == EXIT_OK
        assert decode_superpoly(json.loads(out)) == parse_superpoly_text(text)

    def test_triangular_json(self, capsys):
        code, out, _ = run(capsys, "triangular", "--max", "3", "--json")
        assert json.loads(out) == {"counts": [1, 1, 2, 3]}


class TestErrors:
    def test_non_triangular_tau(self, capsys):
        code, out, err = run(capsys, "dtau", "--tau", "2,2")
        assert code == EXIT_INVALID_INPUT
        assert out == ""
        assert "not triangular" in err

    def test_degree_guard(self, capsys):
        code, _, err = run(capsys, "macdonald", "--mu", "5", "--max-degree", "3")
        assert code == EXIT_INVALID_INPUT
        assert "--max-degree" in err

    def test_bad_partition(self, capsys):
        assert run(capsys, "macdonald", "--mu", "1,2")[0] == EXIT_INVALID_INPUT

    def test_bad_seed(self, capsys):
        assert run(capsys, "hall", "--ray", "1,1", "--seed", "e2")[0] == EXIT_INVALID_INPUT

    def test_bad_jobs(self, capsys):
        assert run(capsys, "triangular", "--jobs", "0")[0] == EXIT_INVALID_INPUT

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args(["--version"])
        assert excinfo.value.code == 0
        assert "qtknots" in capsys.readouterr().out


class TestCheckA:
    def test_passing_candidate(self, capsys):
        code, out, _ = run(capsys, "check-a", "--candidate", "s[1]", "-k", "3", "-n", "2", "--hook")
        assert code == EXIT_OK
        assert out.splitlines() == ["PASS candidate reproduces 𝒫_3,2", "PASS hook polynomial with δ = 0"]

    def test_failing_candidate(self, capsys, cache_dir):
        code, out, err = run(capsys, "check-a", "--candidate", "s[2]", "-k", "3", "-n", "2")
        assert code == EXIT_VERIFICATION_FAILED
        assert out.startswith("FAIL at A^0")
        assert "candidate does not reproduce 𝒫_3,2" in err
        assert [path for path in cache_dir.rglob("*") if path.is_file()]

    def test_two_strand_candidate(self, capsys):
        code, out, _ = run(capsys, "check-a", "--candidate", "s[2]", "-k", "5", "-n", "2")
        assert (code, out) == (EXIT_OK, "PASS candidate reproduces 𝒫_5,2")


class TestVerify:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "verify", "--list")
        assert code == EXIT_OK
        assert "kostka4" in out and "skew-positivity" in out

    def test_passing_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "table1")
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0].startswith("PASS table1/counts gating=yes")
        assert lines[-1].startswith("TOTAL gating=2 passed=2 failed=0")

    def test_parallel_runs_keep_order(self, capsys):
        code, out, _ = run(capsys, "verify", "table1", "small-macH", "--jobs", "2")
        suites = [line.split()[1].split("/")[0] for line in out.splitlines() if not line.startswith("TOTAL")]
        assert code == EXIT_OK
        assert suites[:2] == ["table1", "table1"]
        assert set(suites[2:]) == {"small-macH"}

    def test_failing_check_exits_three(self, capsys, tmp_path):
        config = tmp_path / "suites.yaml"
        config.write_text("table1:\n  max_size: 7\n", encoding="utf-8")
        code, out, err = run(capsys, "verify", "table1", "--config", str(config))
        assert code == EXIT_VERIFICATION_FAILED
        assert "FAIL table1/counts" in out
        assert "1 gating check(s) failed" in err

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "no-such-suite")[0] == EXIT_INVALID_INPUT

    def test_unknown_suite_in_config(self, capsys, tmp_path):
        config = tmp_path / "suites.yaml"
        config.write_text("nope: {}\n", encoding="utf-8")
        assert run(capsys, "verify", "table1", "--config", str(config))[0] == EXIT_INVALID_INPUT

    def test_json_and_report(self, capsys, tmp_path):
        report = tmp_path / "reports" / "run.md"
        code, out, _ = run(capsys, "verify", "table1", "--json", "--report", str(report))
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["passed"] is True
        assert [r["check"] for r in payload["results"]] == ["counts", "shapes"]
        text = report.read_text(encoding="utf-8")
        assert "# qtknots Verification Report" in text
        assert "**Overall Status:** PASS" in text


class TestCacheCommand:
    def test_warm_info_clear(self, capsys, cache_dir):
        assert run(capsys, "cache", "warm", "--max-n", "2")[0] == EXIT_OK
        code, out, _ = run(capsys, "cache", "info")
        assert code == EXIT_OK
        assert "macH n=2" in out
        code, out, _ = run(capsys, "cache", "clear")
        assert code == EXIT_OK
        assert out.startswith("removed ")
        assert not (cache_dir / "macH").exists()

    def test_results_do_not_depend_on_cache(self, capsys):
        first = run(capsys, "macdonald", "--mu", "2,1")
        second = run(capsys, "macdonald", "--mu", "2,1", "--no-cache")
        assert first[:2] == second[:2]

    def test_warm_needs_cache(self, capsys):
        assert run(capsys, "cache", "warm", "--no-cache")[0] == EXIT_INVALID_INPUT
