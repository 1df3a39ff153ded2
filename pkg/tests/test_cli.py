"""CLI subcommands: JSON schema, exit codes, round trips, engine agreement."""

import json


from weakdim import cli
from weakdim.graph import parse_edgelist


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestKappaCommand:
    def test_even_cycle(self, capsys):
        report = run_json(capsys, "kappa", "--family", "cycle:8")
        row = report["results"][0]
        assert row["kappa"] == 8
        assert report["input"]["source"] == "cycle:8"

    def test_complete(self, capsys):
        row = run_json(capsys, "kappa", "--family", "complete:5")["results"][0]
        assert row["kappa"] == 2
        assert row["classification"] == "Weak2TrueTwins"

    def test_file_input(self, capsys, tmp_path):
        f = tmp_path / "p2.txt"
        f.write_text("2 1\n0 1\n")
        row = run_json(capsys, "kappa", "--file", str(f))["results"][0]
        assert row["kappa"] == 2

    def test_schema_keys(self, capsys):
        report = run_json(capsys, "kappa", "--family", "star:6")
        assert list(report) == ["input", "operation", "results", "warnings", "stats"]
        assert report["operation"] == "kappa"


class TestWdimCommand:
    def test_path_sweep(self, capsys):
        report = run_json(capsys, "wdim", "--family", "path:9", "--k", "1..9")
        assert [r["value"] for r in report["results"]] == list(range(1, 10))

    def test_grid_sweep_formula(self, capsys):
        report = run_json(capsys, "wdim", "--family", "grid:6x4", "--k", "1..16")
        values = [r["value"] for r in report["results"]]
        assert values == [k + 1 if k % 2 else k for k in range(1, 17)]
        assert {r["provenance"] for r in report["results"]} == {"formula"}

    def test_engines_agree(self, capsys):
        for family in ["cycle:7", "star:6", "kqr:2,3", "grid:2x3", "spider:1,1,2"]:
            values = {}
            for engine in ["formula", "brute", "bnb"]:
                report = run_json(
                    capsys, "wdim", "--family", family, "--k", "2..4",
                    "--engine", engine,
                )
                values[engine] = [r["value"] for r in report["results"]]
            assert values["formula"] == values["brute"] == values["bnb"]

    def test_file_engine_brute_cross_check(self, capsys, tmp_path):
        _, text, _ = run_cli(capsys, "gen", "--family", "spider:1,2,5")
        f = tmp_path / "spider_1_2_5.txt"
        f.write_text(text)
        report = run_json(
            capsys, "wdim", "--file", str(f), "--k", "6", "--engine", "brute"
        )
        row = report["results"][0]
        assert row["value"] == 6 and row["provenance"] == "brute"

    def test_range_clipped_with_warning(self, capsys):
        report = run_json(capsys, "wdim", "--family", "cycle:5", "--k", "1..9")
        assert len(report["results"]) == 4  # kappa(C5) = 4
        assert any("clipped" in w for w in report["warnings"])

    def test_single_infeasible_k_exit_3(self, capsys):
        code, _, err = run_cli(capsys, "wdim", "--family", "complete:4", "--k", "3")
        assert code == 3
        assert "kappa=2" in err

    def test_edge_variant(self, capsys):
        report = run_json(
            capsys, "wdim", "--family", "path:5", "--k", "2", "--variant", "edge"
        )
        row = report["results"][0]
        assert row["variant"] == "edge" and row["provenance"] == "bnb"
        assert row["certificate"]["delta"] >= 2
        assert any("extends" in w for w in report["warnings"])
        assert report["stats"]["variant_kappa"] >= 2

    def test_formula_engine_on_tree_file(self, capsys, tmp_path):
        _, text, _ = run_cli(capsys, "gen", "--family", "spider:2,2,3,3")
        f = tmp_path / "tree.txt"
        f.write_text(text)
        report = run_json(
            capsys, "wdim", "--file", str(f), "--k", "1..8", "--engine", "formula"
        )
        brute = run_json(
            capsys, "wdim", "--file", str(f), "--k", "1..8", "--engine", "brute"
        )
        assert [r["value"] for r in report["results"]] == [
            r["value"] for r in brute["results"]
        ]
        assert {r["provenance"] for r in report["results"]} == {"formula"}

    def test_basis_passes_verify_round_trip(self, capsys, tmp_path):
        report = run_json(capsys, "wdim", "--family", "grid:3x4", "--k", "5")
        basis = report["results"][0]["basis"]
        set_file = tmp_path / "basis.txt"
        set_file.write_text(" ".join(str(v) for v in basis))
        code, _, _ = run_cli(
            capsys, "verify", "--family", "grid:3x4",
            "--set-file", str(set_file), "--k", "5",
        )
        assert code == 0

    def test_byte_deterministic(self, capsys):
        _, first, _ = run_cli(capsys, "wdim", "--family", "grid:4x4", "--k", "1..6")
        _, second, _ = run_cli(capsys, "wdim", "--family", "grid:4x4", "--k", "1..6")
        assert first == second

    def test_workers_env(self, capsys, monkeypatch):
        monkeypatch.setenv("WKDIM_WORKERS", "3")
        report = run_json(capsys, "kappa", "--family", "grid:4x4")
        assert report["stats"]["workers"] == 3


class TestVerifyCommand:
    def test_full_set_at_kappa(self, capsys, tmp_path):
        set_file = tmp_path / "all.txt"
        set_file.write_text(" ".join(str(v) for v in range(8)))
        code, out, _ = run_cli(
            capsys, "verify", "--family", "cycle:8",
            "--set-file", str(set_file), "--k", "8",
        )
        assert code == 0
        assert json.loads(out)["results"][0]["ok"] is True

    def test_missing_false_twin_pair_fails(self, capsys, tmp_path):
        # both leaves 4 and 5 of the 6-star are outside the set
        set_file = tmp_path / "s.txt"
        set_file.write_text("0 1 2 3")
        code, out, _ = run_cli(
            capsys, "verify", "--family", "star:6",
            "--set-file", str(set_file), "--k", "1",
        )
        assert code == 1
        failing = json.loads(out)["results"][0]["failing"]
        assert failing == {"a": 4, "b": 5, "delta": 0}

    def test_malformed_set_file(self, capsys, tmp_path):
        set_file = tmp_path / "bad.txt"
        set_file.write_text("0 nine")
        code, _, err = run_cli(
            capsys, "verify", "--family", "path:4",
            "--set-file", str(set_file), "--k", "1",
        )
        assert code == 2 and "error" in err


class TestExportLp:
    def test_path_model(self, capsys, tmp_path):
        out_path = tmp_path / "p3.lp"
        report = run_json(
            capsys, "export-lp", "--family", "path:3", "--k", "1",
            "--out", str(out_path),
        )
        assert report["results"][0]["binaries"] == 3
        assert report["results"][0]["rows"] == 3
        text = out_path.read_text()
        assert "Minimize" in text and "Binaries" in text and text.strip().endswith("End")

    def test_edge_variant_stdout(self, capsys):
        code, out, _ = run_cli(
            capsys, "export-lp", "--family", "path:3", "--k", "1",
            "--variant", "edge", "--out", "-",
        )
        assert code == 0
        rows = [ln for ln in out.splitlines() if ln.lstrip().startswith("p")]
        assert len(rows) == 1


class TestGenCommand:
    def test_round_trip_through_file(self, capsys, tmp_path):
        _, text, _ = run_cli(capsys, "gen", "--family", "grid:3x3")
        g = parse_edgelist(text)
        assert g.n == 9 and g.edge_count == 12
        f = tmp_path / "g.txt"
        f.write_text(text)
        report = run_json(capsys, "kappa", "--file", str(f))
        assert report["results"][0]["kappa"] == 8

    def test_gen_to_file(self, capsys, tmp_path):
        out_path = tmp_path / "c5.txt"
        code, _, _ = run_cli(capsys, "gen", "--family", "cycle:5", "--out", str(out_path))
        assert code == 0
        assert parse_edgelist(out_path.read_text()).edge_count == 5


class TestErrors:
    def test_bad_family_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "kappa", "--family", "blob:7")
        assert code == 2 and "error" in err

    def test_missing_file_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "kappa", "--file", "/nonexistent/g.txt")
        assert code == 2

    def test_disconnected_file_exit_2(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("4 2\n0 1\n2 3\n")
        code, _, err = run_cli(capsys, "kappa", "--file", str(f))
        assert code == 2 and "connected" in err

    def test_bad_k_spec_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "wdim", "--family", "path:5", "--k", "2..x")
        assert code == 2

    def test_formula_engine_on_non_vertex_variant(self, capsys):
        code, _, _ = run_cli(
            capsys, "wdim", "--family", "path:5", "--k", "2",
            "--variant", "edge", "--engine", "formula",
        )
        assert code == 2
