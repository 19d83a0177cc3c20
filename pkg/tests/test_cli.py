import json

import pytest

from evoalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out) if out else None


@pytest.fixture
def k4_file(tmp_path, capsys):
    path = tmp_path / "k4.json"
    code, _ = run_json(capsys, "make", "--family", "complete:n=4", "--out", str(path))
    assert code == 0
    return str(path)


class TestMake:
    def test_complete(self, tmp_path, capsys):
        path = tmp_path / "m.json"
        code, report = run_json(
            capsys, "make", "--family", "complete:n=4", "--out", str(path)
        )
        assert code == 0 and report["determinant"] == "-3"
        data = json.loads(path.read_text())
        assert data["n"] == 4 and data["entries"][0][1] == "1"

    def test_singular_twoparam_exits_2(self, tmp_path, capsys):
        code, _, err = run(
            capsys,
            "make", "--family", "twoparam:n=3,a=1,b=1", "--out", str(tmp_path / "x.json"),
        )
        assert code == 2

    def test_frucht_records_shift(self, tmp_path, capsys):
        graph = tmp_path / "g.json"
        graph.write_text(
            json.dumps({"n": 3, "adjacency": [[0, 1, 0], [1, 0, 0], [0, 0, 0]]})
        )
        out = tmp_path / "lift.json"
        code, report = run_json(
            capsys, "make", "--family", f"frucht:{graph}", "--out", str(out)
        )
        assert code == 0 and report["m"] == 2

    def test_bad_family_exits_1(self, tmp_path, capsys):
        code, _, _ = run(
            capsys, "make", "--family", "nope:n=1", "--out", str(tmp_path / "x.json")
        )
        assert code == 1


class TestAut:
    def test_k4(self, k4_file, capsys):
        code, report = run_json(capsys, "aut", "--in", k4_file)
        assert code == 0
        assert report["order"] == 24
        assert "S4" in report["recognized"]
        assert report["diagonal_order"] == 1
        assert report["t_A"] == 2
        assert report["graph_automorphism_count"] == 24

    def test_field_override(self, tmp_path, capsys):
        path = tmp_path / "k2.json"
        run_json(capsys, "make", "--family", "complete:n=2", "--out", str(path))
        code, report = run_json(
            capsys, "aut", "--in", str(path), "--field", "Q(zeta_3)"
        )
        assert code == 0 and report["order"] == 6
        assert "S3" in report["recognized"]

    def test_cycle_over_zeta7(self, tmp_path, capsys):
        path = tmp_path / "c3.json"
        run_json(capsys, "make", "--family", "cycle:n=3", "--out", str(path))
        code, report = run_json(
            capsys, "aut", "--in", str(path), "--field", "Q(zeta_7)"
        )
        assert code == 0 and report["order"] == 21
        assert "C7:C3" in report["recognized"]

    def test_singular_input_exits_2(self, tmp_path, capsys):
        path = tmp_path / "s.json"
        path.write_text(
            json.dumps({"field": "Q", "n": 2, "entries": [["1", "1"], ["1", "1"]]})
        )
        code, _, _ = run(capsys, "aut", "--in", str(path))
        assert code == 2

    def test_indeterminate_exits_3(self, tmp_path, capsys):
        path = tmp_path / "i.json"
        path.write_text(
            json.dumps(
                {"field": "Q(zeta_5)", "n": 2, "entries": [["0", "1"], ["1 + z", "0"]]}
            )
        )
        code, report = run_json(capsys, "aut", "--in", str(path))
        assert code == 3 and report["status"] == "indeterminate"

    def test_parse_error_exits_1(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, _ = run(capsys, "aut", "--in", str(path))
        assert code == 1

    def test_threads_do_not_change_report(self, k4_file, capsys):
        _, out1, _ = run(capsys, "aut", "--in", k4_file, "--threads", "1")
        _, out8, _ = run(capsys, "aut", "--in", k4_file, "--threads", "8")
        assert out1 == out8


class TestDiag:
    def test_k2_over_zeta3(self, tmp_path, capsys):
        path = tmp_path / "k2.json"
        run_json(capsys, "make", "--family", "complete:n=2", "--out", str(path))
        code, report = run_json(
            capsys, "diag", "--in", str(path), "--field", "Q(zeta_3)"
        )
        assert code == 0
        assert report["order"] == 3
        assert report["modulus"] == 6
        assert len(report["elements"]) == 3
        assert report["conductor_sufficient"]


class TestGraphAut:
    def test_k4_pattern(self, k4_file, capsys):
        code, report = run_json(capsys, "graph-aut", "--in", k4_file)
        assert code == 0 and report["count"] == 24
        assert report["automorphisms"][0] == [1, 2, 3, 4]


class TestIso:
    def make(self, capsys, tmp_path, name, family):
        path = tmp_path / name
        run_json(capsys, "make", "--family", family, "--out", str(path))
        return str(path)

    def test_scaled_cycle_certificate(self, tmp_path, capsys):
        ones = self.make(capsys, tmp_path, "ones.json", "cycle:n=3")
        scaled = self.make(capsys, tmp_path, "scaled.json", "cycle:n=3,b=128;1;1")
        code, report = run_json(capsys, "iso", "--in", ones, "--b", scaled)
        assert code == 0
        cert = report["certificate"]
        assert cert["sigma"] == [1, 2, 3]
        assert cert["d"] == ["1/16", "1/2", "1/4"]
        assert cert["checked"] == {"BP2_eq_PA": True, "B_PstarP_zero": True}

    def test_non_isomorphic_exits_4(self, tmp_path, capsys):
        a = self.make(capsys, tmp_path, "a.json", "twoparam:n=4,a=1,b=2")
        b = self.make(capsys, tmp_path, "b.json", "twoparam:n=4,a=1,b=3")
        code, report = run_json(capsys, "iso", "--in", a, "--b", b)
        assert code == 4
        assert report["status"] == "non-isomorphic"
        assert report["sigma_candidates_exhausted"] == 24

    def test_self_isomorphism(self, k4_file, capsys):
        code, report = run_json(capsys, "iso", "--in", k4_file, "--b", k4_file)
        assert code == 0 and report["certificate"]["sigma"] == [1, 2, 3, 4]


class TestCensus:
    def test_gf2_exhaustive(self, capsys):
        code, report = run_json(
            capsys, "census", "--field", "GF(2)", "--n", "2", "--mode", "exhaustive"
        )
        assert code == 0
        assert report["nonsingular"] == 6
        assert sum(report["aut_histogram"].values()) == 6

    def test_random_mode_conserves_count(self, capsys):
        code, report = run_json(
            capsys,
            "census", "--field", "GF(3)", "--n", "2",
            "--mode", "random:200", "--seed", "42",
        )
        assert code == 0
        assert report["seed"] == 42
        assert sum(report["aut_histogram"].values()) == 200
        assert sum(report["diag_histogram"].values()) == 200

    def test_diagonal_orders_all_odd(self, capsys):
        _, report = run_json(
            capsys, "census", "--field", "GF(7)", "--n", "2", "--mode", "exhaustive"
        )
        assert all(int(k) % 2 == 1 for k in report["diag_histogram"])

    def test_byte_identical_across_threads(self, tmp_path, capsys):
        args = ["census", "--field", "GF(3)", "--n", "2", "--mode", "exhaustive"]
        _, out1, _ = run(capsys, *args, "--threads", "1")
        _, out8, _ = run(capsys, *args, "--threads", "8")
        assert out1 == out8

    def test_seed_changes_random_output(self, capsys):
        base = ["census", "--field", "GF(3)", "--n", "2", "--mode", "random:50"]
        _, a, _ = run(capsys, *base, "--seed", "1")
        _, b, _ = run(capsys, *base, "--seed", "1")
        _, c, _ = run(capsys, *base, "--seed", "2")
        assert a == b
        assert json.loads(a)["seed"] != json.loads(c)["seed"]

    def test_non_prime_field_rejected(self, capsys):
        code, _, _ = run(
            capsys, "census", "--field", "Q", "--n", "2", "--mode", "exhaustive"
        )
        assert code == 1

    def test_cap(self, capsys):
        code, _, _ = run(
            capsys, "census", "--field", "GF(13)", "--n", "3", "--mode", "exhaustive"
        )
        assert code == 5


class TestVerifyCommand:
    def test_fast_suites_pass(self, capsys):
        for suite in ("example31", "thm23", "thm31"):
            code, report = run_json(capsys, "verify", "--suite", suite)
            assert code == 0
            assert report["failed"] == 0

    def test_out_file_matches_stdout(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "census", "--field", "GF(2)", "--n", "2",
            "--mode", "exhaustive", "--out", str(path),
        )
        assert code == 0
        assert path.read_text() == out
