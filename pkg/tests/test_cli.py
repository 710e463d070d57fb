import json
import subprocess
import sys

import pytest

from stretchfactor import cli
from stretchfactor.errors import InconclusiveError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def leaves(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from leaves(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from leaves(v)
    elif obj is not None:
        yield obj


@pytest.fixture
def cache(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path / "cache"))
    return tmp_path / "cache"


class TestCommands:
    def test_construct(self, capsys, cache):
        code, out, _ = run(capsys, "construct", "--g", "2", "--k", "4", "--decimals", "3", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["salem_poly"] == [1, -2, -2, -2, 1]
        assert data["stretch"]["value"] == "2.890"

    def test_construct_word(self, capsys, cache):
        code, out, _ = run(capsys, "construct", "--standard", "2,4", "--word", "AAB", "--json")
        assert code == 0
        assert json.loads(out)["word"]["tag"] == "PseudoAnosov"

    def test_construct_matrix_file(self, capsys, cache, tmp_path):
        f = tmp_path / "n.txt"
        f.write_text("3\n")
        code, out, _ = run(capsys, "construct", "--matrix", str(f), "--json")
        assert code == 0
        assert json.loads(out)["salem_poly"] == [1, -7, 1]

    def test_classify(self, capsys, cache):
        code, out, _ = run(capsys, "classify", "--poly", "1,-3,1", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["class"] == "Pisot" and data["degree"] == 2
        assert data["largest_real_root"]["value"].startswith("2.618")

    def test_tree(self, capsys, cache):
        code, out, _ = run(capsys, "tree", "--arms", "T:2,1,1,1,1", "--json")
        data = json.loads(out)
        assert code == 0 and data["salem_poly"] == [1, -2, -2, -2, 1]

    def test_homology(self, capsys, cache):
        code, out, _ = run(capsys, "homology", "--g", "2", "--word", "a0a0d0C0D1C0", "--table", "xtrain", "--json")
        assert code == 0
        assert json.loads(out)["lambda_H"]["value"].startswith("2.618")

    def test_power(self, capsys, cache):
        code, out, _ = run(capsys, "power", "--poly", "1,-3,1", "--k", "2", "--json")
        assert code == 0 and json.loads(out)["power_poly"] == [1, -7, 1]

    def test_verify_theorem_b(self, capsys, cache):
        code, out, _ = run(capsys, "verify", "theorem-b", "--gmax", "10", "--json")
        assert code == 0
        assert json.loads(out)["verdict"] == "Pass"

    def test_verify_limit_scientific_delta(self, capsys, cache):
        code, _, _ = run(capsys, "verify", "limit", "--k", "4", "--delta", "1e-3", "--g", "10")
        assert code == 0

    def test_verify_tables_fails_on_printed_rows(self, capsys, cache):
        code, out, _ = run(capsys, "verify", "tables", "--json")
        assert code == 1
        assert json.loads(out)["verdict"] == "Fail"

    def test_parallel_jobs_match_serial(self, capsys, cache):
        _, serial, _ = run(capsys, "verify", "theorem-a", "--g", "2..3", "--k", "3..4", "--json", "--no-cache")
        _, parallel, _ = run(capsys, "verify", "theorem-a", "--g", "2..3", "--k", "3..4", "--json", "--no-cache", "--jobs", "2")
        strip = lambda d: [{k: v for k, v in r.items() if k != "wall_time"} for r in json.loads(d)["reports"]]
        assert strip(serial) == strip(parallel)


class TestExitCodes:
    def test_bad_poly(self, capsys, cache):
        with pytest.raises(SystemExit) as exc:
            cli.main(["classify", "--poly", "1,x"])
        assert exc.value.code == 2

    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["classify", "--poly", "1,-3,1", "--frobnicate"])
        assert exc.value.code == 2
        assert "usage" in capsys.readouterr().err

    def test_domain_error(self, capsys, cache):
        code, _, err = run(capsys, "homology", "--g", "2", "--word", "q0")
        assert code == 2 and "error" in err

    def test_missing_file(self, capsys, cache, tmp_path):
        code, _, _ = run(capsys, "construct", "--matrix", str(tmp_path / "absent"))
        assert code == 2

    def test_bad_table_file(self, capsys, cache, tmp_path):
        f = tmp_path / "t.jsonl"
        f.write_text("{broken\n")
        code, _, err = run(capsys, "verify", "tables", "--file", str(f))
        assert code == 2 and "row 0" in err

    def test_inconclusive(self, capsys, monkeypatch):
        def boom(args):
            raise InconclusiveError("undecided")

        monkeypatch.setattr(cli, "cmd_classify", boom)
        code, _, err = run(capsys, "classify", "--poly", "1,-3,1", "--no-cache")
        assert code == 3 and "inconclusive" in err


class TestOutput:
    @pytest.mark.parametrize(
        "argv",
        [
            ["construct", "--g", "3", "--k", "5"],
            ["classify", "--poly", "1,-1,-1,-1,1"],
            ["tree", "--arms", "4,1,1,1"],
            ["verify", "covers", "--g", "4"],
        ],
    )
    def test_json_and_human_carry_same_numbers(self, capsys, cache, argv):
        _, human, _ = run(capsys, *argv)
        _, js, _ = run(capsys, *argv, "--json")
        for value in leaves(json.loads(js)):
            if isinstance(value, bool):
                continue
            assert str(value) in human

    def test_warm_cache_is_byte_identical(self, capsys, cache):
        argv = ["verify", "theorem-a", "--g", "2", "--k", "4", "--json"]
        _, cold, _ = run(capsys, *argv)
        assert any(cache.iterdir())
        _, warm, _ = run(capsys, *argv)
        assert cold == warm

    def test_cache_key_tracks_file_content(self, capsys, cache, tmp_path):
        f = tmp_path / "n.txt"
        f.write_text("3\n")
        _, first, _ = run(capsys, "construct", "--matrix", str(f), "--json")
        f.write_text("4\n")
        _, second, _ = run(capsys, "construct", "--matrix", str(f), "--json")
        assert first != second

    def test_no_cache_writes_nothing(self, capsys, cache):
        run(capsys, "classify", "--poly", "1,-3,1", "--no-cache")
        assert not cache.exists() or not any(cache.iterdir())

    def test_output_file(self, capsys, cache, tmp_path):
        target = tmp_path / "report.json"
        _, out, _ = run(capsys, "classify", "--poly", "1,-3,1", "--json", "-o", str(target))
        assert target.read_text() == out

    def test_entry_point(self):
        res = subprocess.run(
            [sys.executable, "-m", "stretchfactor.cli", "classify", "--poly", "1,-3,1", "--no-cache", "--json"],
            capture_output=True,
            text=True,
        )
        assert res.returncode == 0 and json.loads(res.stdout)["class"] == "Pisot"
