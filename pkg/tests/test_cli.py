import io
import json

import pytest

from expcrit.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_text():
    code, text = run("analyze", "dihedral 24")
    assert code == EXIT_OK
    assert "exponent   12" in text and "exponent-critical  false" in text


def test_analyze_json_fields():
    code, text = run("analyze", "dihedral 16", "--json", "--stable")
    doc = json.loads(text)
    assert code == EXIT_OK
    assert doc["exponent"] == 8 and doc["critical"] is True and doc["type"] == "typeA"
    assert "elapsed_seconds" not in doc
    code, text = run("analyze", "UmodD p=2 m=3", "--json")
    doc = json.loads(text)
    assert doc["order"] == 64 and doc["exponent"] == 8 and doc["type"] == "typeA"
    assert "elapsed_seconds" in doc


@pytest.mark.parametrize("spec", ["dihedral 24", "quaternion 8", "familyC2 p=2 m=2 k=2 q=3", "abelian 4 2"])
def test_report_round_trip(spec):
    _, text = run("analyze", spec, "--json", "--stable")
    doc = json.loads(text)
    again = json.loads(json.dumps(doc))
    for key in ("order", "exponent", "primes", "witnesses", "critical", "type"):
        assert again[key] == doc[key]
    assert json.dumps(doc, sort_keys=True, indent=2) == text.rstrip("\n")


def test_construct():
    code, text = run("construct", "cyclic 6")
    assert code == EXIT_OK and "order      6" in text and "generators 1" in text
    code, text = run("construct", "familyC3 p=3 m=2 k=1 q=2 n=1")
    assert "order      54" in text
    code, text = run("construct", "typeB p=2 alpha=1 beta=1 rho=0 sigma=0", "--orders")
    # quaternion: one involution, six elements of order 4
    assert "order      8" in text and "     2: 1" in text and "     4: 6" in text


def test_audit():
    code, text = run("audit", "thmE", "p=2", "m=2")
    assert code == EXIT_OK and "0 failed" in text
    code, text = run("audit", "lem45", "spec=dihedral 16", "--json", "--stable")
    doc = json.loads(text)
    assert code == EXIT_OK and doc["summary"]["fail"] == 0 and doc["summary"]["pass"] == 4


def test_strict_audit_with_skips():
    code, _ = run("audit", "lem46", "p=2", "m=4", "--strict")
    assert code == EXIT_CAP


def test_exit_codes():
    assert run("analyze", "dihedral")[0] == EXIT_USAGE
    assert run("bogus")[0] == EXIT_USAGE
    assert run("audit", "thmE", "p2")[0] == EXIT_USAGE
    assert run("construct", "familyC3 p=3 m=1 k=1 q=2")[0] == EXIT_FAIL
    assert run("analyze", "sym 8")[0] == EXIT_CAP


def test_list_families():
    code, text = run("list-families")
    assert code == EXIT_OK and "familyC4" in text and "typeB" in text
