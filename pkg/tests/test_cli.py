import json
import subprocess
import sys

import pytest

from graphdim import parse_edge_list
from graphdim.cli import EXIT_BUDGET, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path, capsys):
    def make(spec, name):
        p = tmp_path / name
        assert main(["generate", spec, "-o", str(p)]) == EXIT_OK
        capsys.readouterr()
        return str(p)

    return make


class TestCompute:
    def test_adim_p7(self, files, capsys):
        code, out, _ = run(["compute", "--variant", "adim", "--input", files("path:7", "p7.txt")], capsys)
        assert code == EXIT_OK and json.loads(out)["value"] == 3

    def test_ladim_star(self, files, capsys):
        code, out, _ = run(["compute", "--variant", "ladim", "-i", files("star:3", "s.txt")], capsys)
        assert json.loads(out)["value"] == 1

    def test_disconnected_is_input_error(self, files, capsys):
        code, _, err = run(["compute", "--variant", "dim", "-i", files("union(path:2,path:2)", "d.txt")], capsys)
        assert code == EXIT_INPUT and "disconnected" in err

    def test_truncated_with_k(self, files, capsys):
        p = files("path:7", "p.txt")
        code, out, _ = run(["compute", "--variant", "trunc", "--k", "2", "-i", p], capsys)
        assert json.loads(out)["variant"] == "truncated:2" and json.loads(out)["value"] == 3
        assert run(["compute", "--variant", "dim", "--k", "2", "-i", p], capsys)[0] == EXIT_INPUT

    def test_budget_exit(self, files, capsys):
        code, _, err = run(["compute", "--variant", "adim", "-i", files("cycle:30", "c.txt"), "--budget", "1"],
                           capsys)
        assert code == EXIT_BUDGET and "budget" in err

    def test_several_inputs_in_order(self, files, capsys):
        a, b = files("path:7", "a.txt"), files("complete:4", "b.txt")
        code, out, _ = run(["compute", "--variant", "adim", "-i", a, "-i", b, "--threads", "2"], capsys)
        assert [json.loads(line)["value"] for line in out.splitlines()] == [3, 3]

    def test_auxiliary_variant(self, files, capsys):
        code, out, _ = run(["compute", "--variant", "domination", "-i", files("path:7", "p.txt")], capsys)
        assert json.loads(out)["value"] == 3

    def test_missing_file_and_bad_variant(self, tmp_path, files, capsys):
        assert run(["compute", "--variant", "adim", "-i", str(tmp_path / "none")], capsys)[0] == EXIT_INPUT
        assert run(["compute", "--variant", "xdim", "-i", files("path:3", "p.txt")], capsys)[0] == EXIT_INPUT


class TestGenerate:
    def test_corona(self, tmp_path, capsys):
        p = tmp_path / "c.txt"
        assert main(["generate", "corona(path:4,path:5)", "-o", str(p)]) == EXIT_OK
        assert parse_edge_list(p.read_text()).n == 24

    def test_wheel_stdout(self, capsys):
        code, out, _ = run(["generate", "wheel:8"], capsys)
        g = parse_edge_list(out)
        assert (g.n, g.m) == (8, 14)

    def test_below_minimum(self, capsys):
        assert run(["generate", "cycle:2"], capsys)[0] == EXIT_INPUT

    def test_dot(self, capsys):
        _, out, _ = run(["generate", "path:3", "--dot"], capsys)
        assert out.startswith("graph")

    def test_deterministic_bytes(self, tmp_path, capsys):
        paths = [tmp_path / "a", tmp_path / "b"]
        for p in paths:
            main(["generate", "strong(complete:3,corona(path:2,star:2))", "-o", str(p)])
        assert paths[0].read_bytes() == paths[1].read_bytes()


class TestVerify:
    def test_corona_adim(self, capsys):
        code, out, _ = run(["verify", "corona-adim", "path:4", "path:5"], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and (doc["expected"], doc["actual"], doc["case"]) == (9, 9, "D")

    def test_corona_dim(self, capsys):
        code, out, _ = run(["verify", "corona-dim", "complete:2", "path:3"], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and doc["expected"] == doc["actual"] == 2

    def test_twin(self, capsys):
        code, out, _ = run(["verify", "twin", "complete_bipartite:2:3"], capsys)
        assert code == EXIT_OK and json.loads(out)["actual"] == 3

    def test_graph_file_argument(self, files, capsys):
        code, out, _ = run(["verify", "strong-twin", files("complete:2", "k2.txt"), "path:3"], capsys)
        assert code == EXIT_OK and json.loads(out)["expected"] == 3

    def test_bad_id_and_arity(self, capsys):
        assert run(["verify", "nope", "path:3"], capsys)[0] == EXIT_INPUT
        assert run(["verify", "twin", "path:3", "path:3"], capsys)[0] == EXIT_INPUT

    def test_local_edgeless_is_input_error(self, capsys):
        assert run(["verify", "corona-local", "path:2", "null:3"], capsys)[0] == EXIT_INPUT


CNF_21 = "p cnf 3 1\n1 2 3 0\n"
CNF_32 = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"


class TestReduce:
    def write(self, tmp_path, text):
        p = tmp_path / "f.cnf"
        p.write_text(text)
        return str(p)

    def test_ladim_gadget_writes_files(self, tmp_path, capsys):
        out_path = tmp_path / "inst.txt"
        code, out, _ = run(["reduce", "ladim-gadget", self.write(tmp_path, CNF_32), "-o", str(out_path)], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and (doc["order"], doc["budget"]) == (30, 7) and doc["counts_match"]
        assert parse_edge_list(out_path.read_text()).n == 30
        side = json.loads((tmp_path / "inst.txt.json").read_text())
        assert set(side) == {"budget", "order", "size", "roles", "provenance"}

    def test_locdom_counts(self, tmp_path, capsys):
        code, out, _ = run(["reduce", "locdom", "--input", self.write(tmp_path, CNF_32)], capsys)
        assert (json.loads(out)["order"], json.loads(out)["budget"]) == (27, 7)

    def test_vc_check(self, tmp_path, capsys):
        code, out, _ = run(["reduce", "vc", self.write(tmp_path, CNF_32), "--check"], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and doc["equivalent"] is True

    def test_check_mismatch_exit(self, tmp_path, capsys):
        code, out, _ = run(["reduce", "locdom", self.write(tmp_path, CNF_32), "--check"], capsys)
        assert code == EXIT_MISMATCH and json.loads(out)["equivalent"] is False

    def test_polarity_violation(self, tmp_path, capsys):
        code, _, err = run(["reduce", "vc", self.write(tmp_path, CNF_21)], capsys)
        assert code == EXIT_INPUT and "never occurs negatively" in err

    def test_graph_input(self, tmp_path, files, capsys):
        g = files("path:4", "p4.txt")
        code, out, _ = run(["reduce", "ladim-corona", g, "--k", "2", "--check"], capsys)
        doc = json.loads(out)
        assert code == EXIT_OK and doc["value"] == 6 and doc["equivalent"]
        assert run(["reduce", "ladim-corona", g], capsys)[0] == EXIT_INPUT
        assert run(["reduce", "vc", g, "--k", "2"], capsys)[0] == EXIT_INPUT

    def test_deterministic(self, tmp_path, capsys):
        f = self.write(tmp_path, CNF_32)
        outs = []
        for name in ("a", "b"):
            main(["reduce", "dim-corona", f, "-o", str(tmp_path / name)])
            capsys.readouterr()
            outs.append(((tmp_path / name).read_bytes(), (tmp_path / f"{name}.json").read_bytes()))
        assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphdim.cli", "generate", "path:3"], capture_output=True,
                          text=True, check=True)
    assert proc.stdout.startswith("3 2")
