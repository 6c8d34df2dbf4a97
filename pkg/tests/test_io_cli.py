import io as _io
import json
import math
import subprocess
import sys
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import PAIR_A1, PAIR_A2
from hypermatrix import Hypermatrix, bm_product3, generate_labeled, generate_sym3
from hypermatrix import io as hio
from hypermatrix.cli import main
from hypermatrix.io import DocumentError


def run(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, H):
    path = tmp_path / name
    hio.save(H, path)
    return str(path)


# -- documents ------------------------------------------------------------


def test_document_fields():
    doc = hio.to_document(Hypermatrix([[1, Fraction(1, 2)], [0, -3]]))
    assert doc == {"order": 2, "dims": [2, 2], "scalar_kind": "rational",
                   "entries": [["1", "1/2"], ["0", "-3"]]}


def test_complex_and_expression_encoding():
    doc = hio.to_document(Hypermatrix([1 + 2j, -0.5j]))
    assert doc["entries"] == [{"re": 1.0, "im": 2.0}, {"re": 0.0, "im": -0.5}]
    doc = hio.to_document(generate_labeled([2], "x"))
    assert doc["scalar_kind"] == "expression" and doc["entries"] == ["x0", "x1"]


@pytest.mark.parametrize("H", [
    generate_labeled([2, 3, 2], "a"),
    generate_sym3(3, "s"),
    bm_product3(*(generate_labeled([2, 2, 2], p) for p in "abc")),
    Hypermatrix([[Fraction(-7, 3), 2], [0, Fraction(1, 9)]]),
])
def test_exact_round_trip(H):
    assert hio.loads(hio.dumps(H)) == H


@settings(max_examples=60, deadline=None)
@given(st.lists(st.floats(allow_nan=False, allow_infinity=False), min_size=1, max_size=8))
def test_float_round_trip_bit_exact(values):
    H = Hypermatrix(np.array(values, dtype=np.float64))
    assert hio.loads(hio.dumps(H)).array.tobytes() == H.array.tobytes()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.complex_numbers(allow_nan=False, allow_infinity=False), min_size=1, max_size=8))
def test_complex_round_trip_bit_exact(values):
    H = Hypermatrix(np.array(values, dtype=np.complex128))
    assert hio.loads(hio.dumps(H)).array.tobytes() == H.array.tobytes()


@pytest.mark.parametrize("doc, fragment", [
    ([], "JSON object"),
    ({"order": 1, "dims": [1]}, "missing"),
    ({"order": 1, "dims": [1], "scalar_kind": "quaternion", "entries": ["1"]}, "scalar_kind"),
    ({"order": 2, "dims": [1], "scalar_kind": "rational", "entries": ["1"]}, "order"),
    ({"order": 1, "dims": [0], "scalar_kind": "rational", "entries": []}, "dims"),
    ({"order": 1, "dims": [2], "scalar_kind": "rational", "entries": ["1"]}, "length 2"),
    ({"order": 2, "dims": [1, 1], "scalar_kind": "rational", "entries": ["1"]}, "length 1"),
    ({"order": 1, "dims": [1], "scalar_kind": "rational", "entries": [1]}, "p/q"),
    ({"order": 1, "dims": [1], "scalar_kind": "rational", "entries": ["1/0"]}, "bad rational"),
    ({"order": 1, "dims": [1], "scalar_kind": "real", "entries": ["x"]}, "number"),
    ({"order": 1, "dims": [1], "scalar_kind": "complex", "entries": [1.0]}, "re"),
    ({"order": 1, "dims": [1], "scalar_kind": "expression", "entries": ["a +"]}, "entry"),
])
def test_malformed_documents(doc, fragment):
    with pytest.raises(DocumentError, match=fragment):
        hio.from_document(doc)


def test_invalid_json():
    with pytest.raises(DocumentError, match="invalid JSON"):
        hio.loads("{")


# -- command line ---------------------------------------------------------


def test_gen_delta():
    code, out, _ = run("gen", "delta", "--n", "2")
    assert code == 0
    assert hio.loads(out).tolist() == [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]


def test_gen_variants(tmp_path):
    for argv in (["labeled", "--dims", "2", "3"], ["sym3", "--n", "3"], ["ones", "--dims", "2", "2"],
                 ["zeros", "--dims", "2"], ["perm", "--sigma", "1", "0", "2"], ["diag", "--n", "2"],
                 ["ortho22", "--theta", "0.5"], ["ortho333", "--t1", "0.5", "--t2", "0.9"]):
        code, out, err = run("gen", *argv)
        assert code == 0, (argv, err)
        hio.loads(out)
    m = write(tmp_path, "m.json", Hypermatrix([[1, 2], [2, 3]]))
    code, out, _ = run("gen", "diag", "--matrix", m)
    assert code == 0 and hio.loads(out)[1, 1, 1] == 3


def test_gen_missing_parameter():
    code, out, err = run("gen", "delta")
    assert code == 2 and out == "" and "--n" in err


def test_verify_orthogonality_pipeline(tmp_path):
    path = str(tmp_path / "q.json")
    assert run("gen", "ortho22", "--theta", "0.7853981633974483", "--out", path)[0] == 0
    code, out, _ = run("verify", "orthogonality", path)
    assert code == 0
    assert out.splitlines()[0] == "PASS max-deviation ≤ 1e-9"


def test_verify_orthogonality_fails_for_non_orthogonal(tmp_path):
    path = write(tmp_path, "u.json", Hypermatrix(np.ones((2, 2, 2))))
    code, out, _ = run("verify", "orthogonality", path)
    assert code == 1 and out.startswith("FAIL")


@pytest.mark.parametrize("check", ["delta-identity", "diagonal-identity", "slice-action"])
def test_verify_identities(check):
    code, out, _ = run("verify", check)
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_ch_count():
    assert run("ch-count", "--order", "7")[:2] == (0, "12\n")
    code, _, err = run("ch-count", "--order", "4")
    assert code == 1 and err.count("\n") == 1


def test_ch_rank(tmp_path):
    rng = np.random.default_rng(0)
    path = write(tmp_path, "a.json", Hypermatrix(rng.uniform(0.1, 1, size=(2, 2, 2))))
    assert run("ch-rank", path, "--max-order", "7")[:2] == (0, "8\n")


def test_arithmetic_commands(tmp_path):
    a = write(tmp_path, "a.json", generate_labeled([2, 2, 2], "a"))
    b = write(tmp_path, "b.json", generate_labeled([2, 2, 2], "b"))
    c = write(tmp_path, "c.json", generate_labeled([2, 2, 2], "c"))
    _, out, _ = run("product", a, b, c)
    assert str(hio.loads(out)[0, 0, 0]) == "a000*b000*c000 + a010*b001*c100"
    _, out, _ = run("gproduct", a, b, c)
    assert str(hio.loads(out)[0, 0, 0]) == "a000*b000*c000 + a010*b001*c100"
    _, out, _ = run("add", a, b)
    assert str(hio.loads(out)[1, 0, 1]) == "a101 + b101"
    _, out, _ = run("hadamard", a, b)
    assert str(hio.loads(out)[1, 0, 1]) == "a101*b101"
    _, out, _ = run("scale", a, "--by", "1/2")
    assert str(hio.loads(out)[0, 1, 1]) == "1/2*a011"
    _, out, _ = run("transpose", a, "--times", "1")
    assert str(hio.loads(out)[0, 0, 1]) == "a100"
    _, out, _ = run("vectorize", a)
    assert hio.loads(out).shape == (8,)
    d = str(tmp_path / "d.json")
    run("gen", "delta", "--n", "2", "--out", d)
    _, out, _ = run("product-bg", a, b, c, d)
    assert str(hio.loads(out)[0, 0, 0]) == "a000*b000*c000 + a010*b001*c100"


def test_dimension_error_leaves_no_output(tmp_path):
    a = write(tmp_path, "a.json", Hypermatrix(np.ones((2, 2, 2))))
    b = write(tmp_path, "b.json", Hypermatrix(np.ones((3, 3, 3))))
    target = tmp_path / "sum.json"
    code, out, err = run("add", a, b, "--out", str(target))
    assert code == 1 and out == ""
    assert err.startswith("error:") and err.count("\n") == 1
    assert not target.exists()
    assert sorted(p.name for p in tmp_path.iterdir()) == ["a.json", "b.json"]


def test_malformed_input_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"order": 1, "dims": [2], "scalar_kind": "real", "entries": [1.0]}))
    code, _, err = run("transpose", str(bad))
    assert code == 2 and "malformed" in err
    code, _, _ = run("transpose", str(tmp_path / "missing.json"))
    assert code == 2


def test_usage_error_exit_two():
    assert run("frobnicate")[0] == 2


def test_pinv_pairs(tmp_path):
    a = write(tmp_path, "a1.json", Hypermatrix(PAIR_A1))
    b = write(tmp_path, "a2.json", Hypermatrix(PAIR_A2))
    r1, r2 = str(tmp_path / "r1.json"), str(tmp_path / "r2.json")
    code, out, _ = run("pinv-pairs", a, b, "--out", r1, r2)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("residual ") and lines[1].startswith("reconstruction-error ")
    assert float(lines[1].split()[1]) > 0
    assert hio.load(r1).shape == hio.load(r2).shape == (2, 2, 2)
    again = run("pinv-pairs", a, b)[1]
    assert again.splitlines()[:2] == lines[:2]


def test_output_is_deterministic():
    assert run("gen", "ortho333", "--t1", str(math.e / math.pi), "--t2", str(math.pi / math.e)) == \
        run("gen", "ortho333", "--t1", str(math.e / math.pi), "--t2", str(math.pi / math.e))


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypermatrix", "ch-count", "--order", "9"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "55\n"
