import json

from circarc.cli import main
from conftest import BICLAW_EDGES, NEAR_BICLAW_EDGES


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


class TestRecognizeCommand:
    def test_positive_exit(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", NEAR_BICLAW_EDGES)
        assert main(["recognize", f]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["verdict"] == "CircularArc"

    def test_negative_exit(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", BICLAW_EDGES)
        assert main(["recognize", f]) == 10
        doc = json.loads(capsys.readouterr().out)
        assert doc["verdict"] == "NotCircularArc"

    def test_graph6_input(self, tmp_path, capsys):
        f = write(tmp_path, "g.g6", "Cl\n")
        assert main(["recognize", f, "--format", "graph6"]) == 0
        capsys.readouterr()

    def test_out_file(self, tmp_path):
        f = write(tmp_path, "g.txt", NEAR_BICLAW_EDGES)
        out = str(tmp_path / "cert.json")
        assert main(["recognize", f, "--out", out]) == 0
        assert json.loads(open(out).read())["verdict"] == "CircularArc"

    def test_missing_file(self, capsys):
        assert main(["recognize", "/no/such/file"]) == 2
        capsys.readouterr()


class TestVerifyCommand:
    def test_round_trip(self, tmp_path, capsys):
        g = write(tmp_path, "g.txt", BICLAW_EDGES)
        out = str(tmp_path / "cert.json")
        main(["recognize", g, "--out", out])
        assert main(["verify", g, out]) == 0
        assert "certificate OK" in capsys.readouterr().out

    def test_wrong_graph(self, tmp_path, capsys):
        g = write(tmp_path, "g.txt", BICLAW_EDGES)
        other = write(tmp_path, "h.txt", NEAR_BICLAW_EDGES)
        out = str(tmp_path / "cert.json")
        main(["recognize", g, "--out", out])
        assert main(["verify", other, out]) == 1
        capsys.readouterr()

    def test_tampered(self, tmp_path, capsys):
        g = write(tmp_path, "g.txt", NEAR_BICLAW_EDGES)
        out = tmp_path / "cert.json"
        main(["recognize", g, "--out", str(out)])
        doc = json.loads(out.read_text())
        doc["positive"]["arcs"]["d"] = [0, 1]
        out.write_text(json.dumps(doc))
        assert main(["verify", g, str(out)]) == 1
        capsys.readouterr()


class TestOracleCommand:
    def test_positive(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", NEAR_BICLAW_EDGES)
        assert main(["oracle", f]) == 0
        assert "not" not in capsys.readouterr().out

    def test_negative(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", BICLAW_EDGES)
        assert main(["oracle", f]) == 10
        capsys.readouterr()

    def test_too_big(self, tmp_path, capsys):
        lines = "\n".join(f"v{i} v{i + 1}" for i in range(9))
        f = write(tmp_path, "g.txt", lines)
        assert main(["oracle", f]) == 2
        capsys.readouterr()


class TestCrossCheckCommand:
    def test_small(self, capsys):
        assert main(["crosscheck", "--max-n", "3"]) == 0
        summary = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
        assert summary == {"checked": 11, "disagreements": 0}

    def test_bad_random_spec(self, capsys):
        assert main(["crosscheck", "--random", "nope"]) == 2
        capsys.readouterr()


class TestCompleteCommand:
    def test_biclaw(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", BICLAW_EDGES)
        assert main(["complete", f]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["n"] == 14
        assert ["a", "~a"] in doc["pairs"]

    def test_trivial_rejected(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", "a b")
        assert main(["complete", f]) == 2
        capsys.readouterr()


class TestKnottingCommand:
    def test_biclaw_anchor_f(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", BICLAW_EDGES)
        assert main(["knotting", f, "--anchor", "f"]) == 10
        assert "NOT bipartite" in capsys.readouterr().out

    def test_near_biclaw_anchor_f_with_dot(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", NEAR_BICLAW_EDGES)
        dot = tmp_path / "k.dot"
        assert main(["knotting", f, "--anchor", "f", "--dot", str(dot)]) == 0
        assert "bipartite" in capsys.readouterr().out
        text = dot.read_text()
        assert text.startswith("graph knotting {")
        assert '"~f/2"' in text

    def test_unknown_anchor(self, tmp_path, capsys):
        f = write(tmp_path, "g.txt", BICLAW_EDGES)
        assert main(["knotting", f, "--anchor", "zz"]) == 2
        capsys.readouterr()


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_help_is_ok(self, capsys):
        assert main(["--help"]) == 0
        capsys.readouterr()
