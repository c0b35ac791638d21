import json
import subprocess
import sys

import pytest

from apgsets.cli import main

OMEGA = "apg v1\npoint x\nx: x\n"
CYCLE2 = "apg v1\npoint a\na: b\nb: a\n"
EMPTYPIC = "apg v1\npoint p\np:\n"
DAG = "apg v1\npoint p\np: a b\na:\nb: a\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in {"omega": OMEGA, "cycle2": CYCLE2, "empty": EMPTYPIC, "dag": DAG,
                       "bad": "apg v1\npoint p\np: q\n"}.items():
        f = tmp_path / f"{name}.apg"
        f.write_text(text)
        out[name] = str(f)
    sys_file = tmp_path / "sys.txt"
    sys_file.write_text("# two variables\nx = {y, {}}\ny = {x}\nroot x\n")
    out["system"] = str(sys_file)
    bad_sys = tmp_path / "undef.txt"
    bad_sys.write_text("x = {y}\nroot x\n")
    out["undef"] = str(bad_sys)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_omega(capsys, files):
    code, out, _ = run(capsys, "check", files["omega"])
    assert code == 0
    assert all(line.endswith(": yes") for line in out.splitlines())
    assert len(out.splitlines()) == 6


def test_check_cycle(capsys, files):
    code, out, _ = run(capsys, "check", files["cycle2"])
    assert code == 0
    assert "extensional: yes" in out.splitlines()
    assert "iso-extensional: no [a,b]" in out.splitlines()


def test_check_json(capsys, files):
    code, out, _ = run(capsys, "--json", "check", files["cycle2"])
    d = json.loads(out)
    assert set(d) == {"extensional", "iso_ext", "finsler_ext", "scott_ext", "strongly_ext",
                      "mutual_dhom_ext", "witnesses"}
    assert d["witnesses"]["iso_ext"] == ["a", "b"]
    code2, out2, _ = run(capsys, "check", "--json", files["cycle2"])
    assert out2 == out


def test_check_malformed(capsys, files):
    code, _, err = run(capsys, "check", files["bad"])
    assert code == 2
    assert "UndeclaredNode" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "nope.apg"))[0] == 2


def test_compare_omega(capsys, files):
    code, out, _ = run(capsys, "compare", files["omega"], files["cycle2"])
    assert code == 0
    assert out == ("iso: no\nfinsler: no\nscott: yes\nbisim: yes\n"
                   "dhom->: no\ndhom<-: yes\nmutual-dhom: no\n")


def test_compare_self_and_disjoint(capsys, files):
    _, out, _ = run(capsys, "compare", files["dag"], files["dag"])
    assert all(line.endswith("yes") for line in out.splitlines())
    _, out, _ = run(capsys, "--json", "compare", files["omega"], files["empty"])
    d = json.loads(out)
    assert set(d) == {"iso", "finsler", "scott", "bisim", "dhom_forward", "dhom_backward",
                      "mutual_dhom"}
    assert not any(d.values())


@pytest.mark.parametrize("axiom", ["afa", "fafa", "safa"])
def test_collapse_cycle_to_omega(capsys, files, axiom):
    code, out, _ = run(capsys, "collapse", "--axiom", axiom, files["cycle2"])
    assert code == 0
    assert out == "apg v1\npoint a\na: a\n"


def test_collapse_fixpoint(capsys, files):
    for axiom in ("afa", "fafa", "safa"):
        _, out, _ = run(capsys, "collapse", "--axiom", axiom, files["dag"])
        assert out == DAG


def test_collapse_needs_axiom(capsys, files):
    assert run(capsys, "collapse", files["dag"])[0] == 2
    assert run(capsys, "collapse", "--axiom", "zfc", files["dag"])[0] == 2


def test_decorate(capsys, files):
    code, out, _ = run(capsys, "decorate", files["dag"])
    assert code == 0
    assert out == "a: {}\nb: {{}}\np: {{{}},{}}\n"
    assert run(capsys, "decorate", files["omega"])[0] == 3


def test_solve(capsys, files):
    code, out, _ = run(capsys, "solve", files["system"])
    assert code == 0
    assert out.startswith("apg v1\npoint x\n")
    assert run(capsys, "solve", files["undef"])[0] == 3


def test_gallery(capsys):
    code, out, _ = run(capsys, "gallery", "Q2")
    assert code == 0
    assert out == "apg v1\npoint b\nb: a b\na: a\n"
    _, out, _ = run(capsys, "gallery", "omega-J")
    assert out.startswith("omega-presentation v1\n")
    code, out, _ = run(capsys, "gallery", "omega-J", "--verify-witnesses")
    assert code == 0
    assert out == "a->ap: verified\nap->a: verified\n"
    _, out, _ = run(capsys, "gallery", "omega-J", "--truncate", "1")
    assert out == "apg v1\npoint r\nr: a ap\na: b0 b1\nap: b0\nb0: b0\nb1: b0 b1\n"


def test_gallery_errors(capsys):
    assert run(capsys, "gallery", "nosuch")[0] == 2
    assert run(capsys, "gallery", "Q2", "--truncate", "2")[0] == 2
    assert run(capsys, "gallery", "omega-J", "--truncate", "-1")[0] == 2


def test_export_dot(capsys, files):
    code, out, _ = run(capsys, "export-dot", files["omega"])
    assert code == 0
    assert out == 'digraph apg {\n  "x" [shape=doublecircle];\n  "x" -> "x";\n}\n'


def test_stdin_and_module_entry(files):
    proc = subprocess.run([sys.executable, "-m", "apgsets", "collapse", "--axiom", "afa", "-"],
                          input=CYCLE2, capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "apg v1\npoint a\na: a\n"


def test_output_is_deterministic(capsys, files):
    outs = {run(capsys, "--json", "check", files["dag"])[1] for _ in range(3)}
    assert len(outs) == 1
