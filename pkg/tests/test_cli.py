import json
import subprocess
import sys

import pytest

from monres.cli import main
from monres import commands
from monres.commands import EXIT_INPUT, EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK, Options, run_subcommand
from monres.corpus import generate_corpus
from monres.documents import IdealDocument, parse_ideal
from monres.errors import InvariantViolation

M2 = '{"n":2,"generators":[[2,0],[1,1],[0,2]],"name":"m2"}'
XY2 = '{"n":2,"generators":[[2,0],[0,2]]}'
M4D = '{"n":4,"generators":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}'


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


class TestRunSubcommand:
    def test_certify_m2(self):
        report, code = run_subcommand("certify", parse_ideal(M2))
        assert code == EXIT_OK
        assert report["result"]["closed"] is True and report["result"]["certificates"] == 2

    def test_certify_witness(self):
        report, code = run_subcommand("certify", parse_ideal(XY2))
        assert code == EXIT_NEGATIVE
        (w,) = [c for c in report["result"]["components"] if "witness" in c]
        assert w["alpha"] == [2, 2]
        assert w["witness"] == [{"rho": [1, 1], "r": 2, "ord_alpha_minus_one": 2}]

    def test_fan_in_four_variables(self):
        report, code = run_subcommand("fan", parse_ideal(M4D))
        assert code == EXIT_INPUT
        assert report["result"]["error"] == "UnsupportedDimension"

    def test_non_artinian(self):
        _, code = run_subcommand("closure", parse_ideal('{"n":2,"generators":[[2,0],[1,1]]}'))
        assert code == EXIT_INPUT

    def test_unknown_subcommand(self):
        _, code = run_subcommand("blowup", parse_ideal(M2))
        assert code == EXIT_INPUT

    @pytest.mark.parametrize("name,doc,code", [
        ("closure", XY2, EXIT_OK),
        ("rees", XY2, EXIT_OK),
        ("resolve", XY2, EXIT_OK),
        ("residue", XY2, EXIT_OK),
        ("bs", XY2, EXIT_OK),
        ("smallness", XY2, EXIT_NEGATIVE),
        ("smallness", M2, EXIT_OK),
        ("fan", M2, EXIT_OK),
    ])
    def test_exit_codes(self, name, doc, code):
        assert run_subcommand(name, parse_ideal(doc))[1] == code

    def test_scarf_not_resolution(self):
        doc = IdealDocument(3, ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)))
        report, code = run_subcommand("resolve", doc, Options("scarf"))
        assert code == EXIT_NEGATIVE and report["result"]["is_resolution"] is False

    def test_internal_error(self, monkeypatch):
        def boom(I, opts):
            raise InvariantViolation("broken")

        monkeypatch.setitem(commands.SUBCOMMANDS, "closure", boom)
        report, code = run_subcommand("closure", parse_ideal(M2))
        assert code == EXIT_INTERNAL and report["result"]["message"] == "broken"

    def test_notice_is_reported(self):
        report, _ = run_subcommand("closure", parse_ideal('{"n":2,"generators":[[2,0],[2,2],[0,1]]}'))
        assert report["notice"] == "removed 1 redundant generator"


class TestMain:
    def test_inline(self, capsys):
        code, out = run(capsys, "certify", "--inline", M2)
        assert code == 0
        assert json.loads(out.out)["result"]["closed"] is True

    def test_file_and_text(self, capsys, tmp_path):
        path = tmp_path / "cusp.json"
        path.write_text('{"n":2,"generators":[[3,0],[0,2]]}', encoding="utf-8")
        code, out = run(capsys, "rees", "--ideal", str(path), "--format", "text")
        assert code == 0 and "ray: (2, 3)" in out.out

    def test_missing_file(self, capsys, tmp_path):
        code, out = run(capsys, "rees", "--ideal", str(tmp_path / "nope.json"))
        assert code == EXIT_INPUT

    def test_parse_error(self, capsys):
        code, out = run(capsys, "rees", "--inline", '{"n":2,"generators":[[2,0],[1]]}')
        assert code == EXIT_INPUT and "dimension mismatch" in out.out

    def test_fan_four_variables(self, capsys):
        assert run(capsys, "fan", "--inline", M4D)[0] == EXIT_INPUT

    def test_byte_identical_and_timing(self, capsys):
        _, a = run(capsys, "certify", "--inline", M2)
        _, b = run(capsys, "certify", "--inline", M2)
        assert a.out == b.out and "timing" not in a.out
        _, c = run(capsys, "certify", "--inline", M2, "--timing")
        timed = json.loads(c.out)
        assert "seconds" in timed["timing"]
        del timed["timing"]
        assert timed == json.loads(a.out)

    def test_scarf_option(self, capsys):
        code, out = run(capsys, "residue", "--inline", M2, "--complex", "scarf")
        assert code == 0 and json.loads(out.out)["result"]["complex"] == "scarf"

    def test_corpus(self, capsys):
        code, out = run(capsys, "corpus", "--bound", "3", "--check", "bs")
        result = json.loads(out.out)["result"]
        assert code == 0 and result["passed"] and result["count"] == len(generate_corpus(2, 3))

    def test_corpus_range(self, capsys):
        assert run(capsys, "corpus", "--bound", "9")[0] == EXIT_INPUT

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "monres.cli", "certify", "--inline", XY2],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == EXIT_NEGATIVE
        assert json.loads(proc.stdout)["result"]["closed"] is False
