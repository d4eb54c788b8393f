import io
import json
import subprocess
import sys

import jsonschema
import pytest

from qforms.cli import output_schema, run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue().strip(), err.getvalue().strip()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, output_schema())
    return code, doc


def test_round_true_over_f3():
    assert run("predicate", "round", "<1,-1,1,1>", "--field", "F3")[:2] == (0, "true")


def test_round_false_over_laurent():
    code, out, _ = run("predicate", "round", "<1,-1,1,1>", "--field", "F3((x))")
    assert code == 1
    assert out == "false (witness: x in H \\ G)"


def test_sets_unsupported_over_q():
    code, out, err = run("sets", "<1,1>", "--field", "Q")
    assert code == 3 and out == "" and "unsupported" in err


@pytest.mark.parametrize(
    "argv, code",
    [
        (("eval", "pfister(2,x)", "--field", "F3((x))"), 0),
        (("isotropic", "<1,1>", "--field", "F3"), 1),
        (("isotropic", "<1,2>", "--field", "F3"), 0),
        (("witt", "<1,-1,1,1>", "--field", "F3((x))"), 0),
        (("witt", "<1,1,-2,5>", "--field", "Q"), 0),
        (("hyperbolic", "hyp(2)", "--field", "Q((x))"), 0),
        (("anisotropic-part", "<1,-1,1,1>", "--field", "F3((x))"), 0),
        (("anisotropic-part", "<1,1,-2,5>", "--field", "Q"), 0),
        (("anisotropic-part", "hyp(1)", "--field", "R"), 0),
        (("invariants", "<1,1,-2,5>", "--field", "Q"), 0),
        (("invariants", "<1,x>", "--field", "R((x))"), 0),
        (("isometric", "<1,1>", "<2,2>", "--field", "Q"), 0),
        (("isometric", "<1,1>", "<3,3>", "--field", "Q"), 1),
        (("similar", "<1,1>", "<2,2>", "--field", "F3"), 0),
        (("sets", "<1,1>", "--field", "F3((x))"), 0),
        (("member", "D", "7x<1>", "2", "--field", "Q"), 0),
        (("member", "G", "7x<1>", "2", "--field", "Q"), 1),
        (("member", "H", "7x<1>", "2", "--field", "Q"), 0),
        (("predicate", "group", "<2>", "--field", "F3"), 1),
        (("predicate", "pfister", "<1,2,x,2x>", "--field", "F3((x))"), 0),
        (("predicate", "similar-pfister", "<2,2>", "--field", "F5"), 0),
        (("sets", "<1,1>", "--field", "Q"), 3),
        (("eval", "<0>", "--field", "Q"), 2),
        (("eval", "<1,3>", "--field", "F3"), 2),
        (("eval", "<1>", "--field", "F4"), 2),
        (("eval", "<y>", "--field", "F3((x))"), 2),
        (("similar", "<1>", "<2>", "--field", "Q"), 3),
        (("predicate", "pfister", "<1,1,1,1>", "--field", "Q"), 3),
    ],
)
def test_exit_codes_and_schema(argv, code):
    assert run(*argv)[0] == code
    got, doc = run_json(*argv)
    assert got == code
    assert doc["command"] == argv[0]
    assert ("error" in doc) == (code >= 2)


def test_witt_json_fields():
    _, doc = run_json("witt", "<1,-1,1,1>", "--field", "F3((x))")
    assert doc["result"] == {"dim": 4, "witt_index": 1, "hyperbolic": False, "anisotropic_dim": 2, "anisotropic_part": "<1, 1>"}
    assert doc["field"] == "F3((x))" and doc["input"] == ["<1,-1,1,1>"]


def test_witnesses_in_json():
    code, doc = run_json("predicate", "round", "<1,-1,1,1>", "--field", "F3((x))")
    assert code == 1 and doc["result"] is False
    assert doc["witnesses"] == [{"kind": "in H \\ G", "value": "x"}]


def test_sets_text_and_json():
    code, out, _ = run("sets", "<2>", "--field", "F3")
    assert out.splitlines() == ["D = {2}", "G = {1}", "H = {1}"]
    _, doc = run_json("sets", "<1,1>", "--field", "F3((x))")
    assert doc["result"]["D"] == ["1", "2"]


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("eval", "<1>")[0] == 2  # no field
    assert run("predicate", "squarefree", "<1>", "--field", "F3")[0] == 2
    assert run("verify", "--checks", "nonsense", "--max-dim", "1")[0] == 2


def test_verify_subcommand():
    code, out, _ = run("verify", "--suite", "paper", "--field", "F3((x))", "--max-dim", "3", "--checks", "1,11,17")
    assert code == 0
    assert "springer_additivity" in out and "laurent_going_up" in out and "anisround_F3" in out
    assert "round over F3: true; round over F3((x)): false" in out
    code, doc = run_json("verify", "--field", "F3", "--max-dim", "2", "--checks", "anisround_F3,pfister_round")
    assert code == 0 and doc["result"]["ok"] is True
    assert [c["name"] for c in doc["result"]["checks"]] == ["anisround_F3", "pfister_round"]


def test_verify_budget_exit_code():
    assert run("verify", "--field", "F3((x))((y))", "--max-dim", "8", "--budget", "1000")[0] == 4


def test_entry_point_module():
    p = subprocess.run(
        [sys.executable, "-m", "qforms.cli", "predicate", "round", "<1,-1,1,1>", "--field", "F3((x))"],
        capture_output=True, text=True,
    )
    assert p.returncode == 1 and p.stdout.strip() == "false (witness: x in H \\ G)"
