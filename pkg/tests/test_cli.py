"""Command-line interface: subcommands, exit codes, determinism."""

import json

import pytest

from rcorona import parse_edge_list, parse_graph_json
from rcorona.cli import main


@pytest.fixture()
def files(tmp_path):
    def write(name, args):
        path = tmp_path / name
        assert main(["generate", *args, "--out", str(path)]) == 0
        return str(path)

    return {
        "K3": write("K3.el", ["complete", "3"]),
        "K2": write("K2.el", ["complete", "2"]),
        "P2": write("P2.el", ["path", "2"]),
        "K1": write("K1.el", ["complete", "1"]),
        "SH": write("SH.el", ["shrikhande"]),
        "RK": write("RK.el", ["rook4x4"]),
        "dir": tmp_path,
    }


class TestGenerate:
    def test_writes_edge_list(self, files):
        g = parse_edge_list(open(files["K3"]).read())
        assert (g.vertex_count, g.edge_count) == (3, 3)

    def test_json_format(self, tmp_path):
        out = tmp_path / "p.json"
        assert main(["generate", "petersen", "--out", str(out), "--format", "json"]) == 0
        assert parse_graph_json(out.read_text()).vertex_count == 10

    def test_stdout(self, capsys):
        assert main(["generate", "path", "3"]) == 0
        assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"

    def test_bad_params_exit_2(self, capsys):
        assert main(["generate", "cycle", "2"]) == 2
        assert main(["generate", "nosuchfamily"]) == 2

    def test_deterministic(self, capsys):
        main(["generate", "petersen"])
        first = capsys.readouterr().out
        main(["generate", "petersen"])
        assert capsys.readouterr().out == first


class TestCorona:
    def test_double(self, files, tmp_path, capsys):
        out = tmp_path / "c.el"
        layout = tmp_path / "c.layout.json"
        code = main(["corona", "double", files["K3"], files["P2"], files["P2"],
                     "--out", str(out), "--emit-layout", str(layout)])
        assert code == 0
        g = parse_edge_list(out.read_text())
        assert g.vertex_count == 18
        ranges = json.loads(layout.read_text())
        assert ranges["old"] == [0, 3] and ranges["new"] == [3, 6]
        assert len(ranges["g1_copies"]) == 3 and len(ranges["g2_copies"]) == 3

    def test_vertex_and_edge_kinds(self, files, tmp_path):
        for kind in ("vertex", "edge"):
            out = tmp_path / f"{kind}.el"
            assert main(["corona", kind, files["K3"], files["P2"], "--out", str(out)]) == 0
            assert parse_edge_list(out.read_text()).vertex_count == 12

    def test_null_placeholder(self, files, tmp_path):
        out = tmp_path / "rg.el"
        assert main(["corona", "double", files["K3"], "null", "null", "--out", str(out)]) == 0
        assert parse_edge_list(out.read_text()).vertex_count == 6

    def test_wrong_arity_exit_2(self, files):
        assert main(["corona", "vertex", files["K3"]]) == 2

    def test_disconnected_exit_3(self, tmp_path, files):
        bad = tmp_path / "bad.el"
        bad.write_text("4 2\n0 1\n2 3\n")
        assert main(["corona", "double", str(bad), "null", "null"]) == 3

    def test_allow_disconnected(self, tmp_path, files):
        bad = tmp_path / "bad.el"
        bad.write_text("4 2\n0 1\n2 3\n")
        out = tmp_path / "ok.el"
        assert main(["corona", "double", str(bad), "null", "null",
                     "--allow-disconnected", "--out", str(out)]) == 0


class TestSpectrum:
    def test_numeric_single_graph(self, files, capsys):
        assert main(["spectrum", files["K3"], "--method", "numeric"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        values = [float(v) for v in lines]
        assert values == pytest.approx([0.0, 1.5, 1.5], abs=1e-12)

    def test_both_match_exit_0(self, files, capsys):
        code = main(["spectrum", "--corona", "double", files["K3"], files["P2"], files["P2"],
                     "--method", "both"])
        out = capsys.readouterr().out
        assert code == 0
        assert "MATCH" in out

    def test_mismatch_exit_1(self, files, capsys):
        # the numeric-vs-closed-form deviation is tiny but nonzero, so an
        # unreachable tolerance yields a negative comparison verdict
        code = main(["spectrum", "--corona", "double", files["K3"], files["P2"], files["P2"],
                     "--method", "both", "--tol", "1e-300"])
        assert code == 1
        assert "MISMATCH" in capsys.readouterr().out

    def test_both_json(self, files, capsys):
        code = main(["spectrum", "--corona", "double", files["K3"], files["P2"], files["P2"],
                     "--method", "both", "--json"])
        assert code == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["match"] is True
        assert obj["vertices"] == 18
        assert len(obj["numeric"]) == 18 and len(obj["closed_form"]) == 18
        assert obj["max_deviation"] <= 1e-8

    def test_closed_form_refusal_on_k2_exit_3(self, files, capsys):
        code = main(["spectrum", "--corona", "double", files["K2"], files["P2"], files["P2"],
                     "--method", "closed-form"])
        assert code == 3
        assert "m<n unsupported" in capsys.readouterr().err

    def test_numeric_handles_k2_corona(self, files, capsys):
        code = main(["spectrum", "--corona", "double", files["K2"], files["P2"], files["P2"],
                     "--method", "numeric"])
        assert code == 0
        values = [float(v) for v in capsys.readouterr().out.split()]
        assert len(values) == 9  # 2 + 1 + 2*2 + 1*2

    def test_closed_form_without_corona_exit_3(self, files, capsys):
        assert main(["spectrum", files["K3"], "--method", "closed-form"]) == 3

    def test_byte_identical_reruns(self, files, capsys):
        argv = ["spectrum", "--corona", "double", files["K3"], files["P2"], files["P2"],
                "--method", "both", "--json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_17_digit_output(self, files, capsys):
        main(["spectrum", files["P2"], "--method", "numeric"])
        out = capsys.readouterr().out
        assert "2.2204460492503131e-16" in out or "0\n" in out  # tiny zero noise printed fully
        assert any(len(tok.replace("-", "").replace(".", "").replace("e", "")) >= 17
                   for tok in out.split())


class TestCospectral:
    def test_srg_pair_exit_0(self, files, tmp_path, capsys):
        cert = tmp_path / "cert.json"
        code = main(["cospectral", files["SH"], files["RK"],
                     files["K1"], files["K1"], files["K1"], files["K1"],
                     "--out", str(cert)])
        assert code == 0
        obj = json.loads(cert.read_text())
        assert obj["verdict"] == "cospectral"
        assert obj["graph_a"]["n"] == 128
        assert obj["non_regular"] == [True, True]

    def test_identical_inputs_cospectral(self, files, capsys):
        code = main(["cospectral", files["K3"], files["K3"],
                     files["P2"], files["P2"], "null", "null"])
        assert code == 0

    def test_non_cospectral_seeds_exit_3(self, files, tmp_path, capsys):
        c4 = tmp_path / "C4.el"
        main(["generate", "cycle", "4", "--out", str(c4)])
        code = main(["cospectral", files["K3"], str(c4),
                     "null", "null", "null", "null"])
        assert code == 3

    def test_seed_verification_uses_requested_tolerance(self, files, capsys):
        # an unreachable tolerance already fails the seed check
        code = main(["cospectral", files["SH"], files["RK"],
                     files["K1"], files["K1"], "null", "null", "--tol", "1e-300"])
        assert code == 3


class TestInvariants:
    def test_k3(self, files, capsys):
        assert main(["invariants", files["K3"]]) == 0
        obj = json.loads(capsys.readouterr().out)
        assert obj["spanning_trees"] == 3
        assert obj["spanning_trees_spectral"] == pytest.approx(3.0, rel=1e-6)
        assert obj["degree_kirchhoff"] == pytest.approx(8.0, rel=1e-9)

    def test_petersen_tree_count(self, tmp_path, capsys):
        p = tmp_path / "pet.el"
        main(["generate", "petersen", "--out", str(p)])
        main(["invariants", str(p)])
        assert json.loads(capsys.readouterr().out)["spanning_trees"] == 2000

    def test_disconnected_exit_3(self, tmp_path):
        bad = tmp_path / "bad.el"
        bad.write_text("4 2\n0 1\n2 3\n")
        assert main(["invariants", str(bad)]) == 3

    def test_missing_file_exit_2(self):
        assert main(["invariants", "/nonexistent/file.el"]) == 2
