import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from nevkit import serialize as ser
from nevkit.cli import main
from nevkit.corpus import random_gennev, random_nevfun, random_symmetric_ratfun
from nevkit.errors import SchemaMismatch
from nevkit.nevfun import NevFun
from nevkit.qmath import INF
from nevkit.realize import minimal_model


def test_ratfun_roundtrip_random():
    rng = random.Random(2)
    for _ in range(20):
        r = random_symmetric_ratfun(rng)
        assert ser.ratfun_from_json(ser.ratfun_to_json(r)) == r


def test_nevfun_roundtrip_random():
    rng = random.Random(4)
    for _ in range(20):
        q = random_nevfun(rng)
        assert ser.nevfun_from_json(ser.nevfun_to_json(q)) == q


def test_gennev_roundtrip_random():
    rng = random.Random(6)
    for _ in range(10):
        g = random_gennev(rng)
        back = ser.gennev_from_json(ser.gennev_to_json(g))
        assert back.phi == g.phi and back.q0 == g.q0


def test_model_roundtrip():
    q = NevFun.of(Fraction(-3, 5), 0, [(2, 1)])
    m = minimal_model(q, 0)
    assert ser.model_from_json(ser.model_to_json(m)) == m
    m_inf = minimal_model(NevFun.of(0, 0, [(0, 1)]), INF)
    assert ser.model_from_json(ser.model_to_json(m_inf)) == m_inf


def test_dumps_byte_stable():
    q = NevFun.of(Fraction(1, 3), 2, [(1, 1), (Fraction(5, 2), 3)])
    a = ser.dumps(ser.nevfun_to_json(q))
    b = ser.dumps(ser.nevfun_to_json(
        ser.nevfun_from_json(json.loads(a))))
    assert a == b


def test_schema_mismatch():
    with pytest.raises(SchemaMismatch):
        ser.parse_function({"zzz": 1})
    with pytest.raises(SchemaMismatch):
        ser.gennev_from_json({"phi": {"num": ["1"], "den": ["1"]},
                              "q0": {"alpha": "0", "beta": "0", "atoms": []},
                              "kappa": 7})


WORKED_Q = {"alpha": "-3/5", "beta": "0", "atoms": [{"t": "2", "w": "1"}]}
WORKED_R = {"num": ["0", "4", "-4", "1"], "den": ["-3", "7", "-5", "1"]}
SHIFT_INV = {"alpha": "-1/2", "beta": "0", "atoms": [{"t": "-1", "w": "1"}]}
LINE_R = {"num": ["0", "1"], "den": ["1"]}


def _run(tmp_path, verb, payloads, extra=None):
    args = [verb]
    for flag, payload in payloads.items():
        p = tmp_path / f"{flag}.json"
        p.write_text(json.dumps(payload))
        args += [f"--{flag}", str(p)]
    out = tmp_path / "out.json"
    args += ["--out", str(out)] + (extra or [])
    code = main(args)
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_cli_factor(tmp_path):
    code, rep = _run(tmp_path, "factor", {"in": WORKED_R})
    assert code == 0
    assert rep["kappa"] == 2
    assert rep["s0"] == {"num": ["-3", "1"], "den": ["0", "1"]}
    points = {rec["point"] for rec in rep["input_records"]["zeros"]}
    assert points == {"0", "2"}


def test_cli_classify_and_product(tmp_path):
    code, rep = _run(tmp_path, "classify",
                     {"in": SHIFT_INV, "r": LINE_R})
    assert code == 0
    assert rep["member"] is True and rep["kappa_tilde"] == 1
    assert rep["exceptional_atoms"] == ["-1"]

    code2, rep2 = _run(tmp_path, "product", {"in": WORKED_Q, "r": WORKED_R})
    assert code2 == 0
    assert rep2["kappa_tilde"] == 0
    assert rep2["witness"]["phi"] == {"num": ["1"], "den": ["1"]}


def test_cli_chain(tmp_path):
    code, rep = _run(tmp_path, "chain", {"in": WORKED_Q, "r": WORKED_R})
    assert code == 0
    assert len(rep["factors"]) == 3
    assert rep["factors"][0] == rep["factors"][2]
    # classification-negative outcome uses exit status 2
    code2, rep2 = _run(tmp_path, "chain", {"in": SHIFT_INV, "r": LINE_R})
    assert code2 == 2 and rep2["ok"] is False and rep2["kappa_tilde"] == 1


def test_cli_realize(tmp_path):
    code, rep = _run(tmp_path, "realize", {"in": WORKED_Q, "r": WORKED_R})
    assert code == 0
    assert rep["spectral_check"] is True
    assert dict(map(tuple, rep["zetas"])) == {"1": "1/2", "3": "3/2"}
    assert rep["output_model"]["xi"] == "0"


def test_cli_kappa_and_invert(tmp_path):
    code, rep = _run(tmp_path, "kappa", {"in": WORKED_R},
                     extra=["--seed", "1"])
    assert code == 0
    assert rep["kappa_numeric"] == 2

    minus_inv = {"alpha": "0", "beta": "0", "atoms": [{"t": "0", "w": "1"}]}
    code2, rep2 = _run(tmp_path, "invert", {"in": minus_inv},
                       extra=["--interval=-1/2,1/2"])
    assert code2 == 0
    assert abs(rep2["mass"] - 1.0) < 1e-3


def test_cli_determinism(tmp_path):
    import nevkit.serialize as s
    p = tmp_path / "f.json"
    p.write_text(json.dumps(WORKED_R))
    out1 = tmp_path / "o1.json"
    out2 = tmp_path / "o2.json"
    assert main(["kappa", "--in", str(p), "--out", str(out1),
                 "--seed", "7"]) == 0
    assert main(["kappa", "--in", str(p), "--out", str(out2),
                 "--seed", "7"]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_cli_parse_error(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    assert main(["factor", "--in", str(p)]) == 1


def test_cli_selftest_runs():
    assert main(["selftest", "--seed", "0"]) == 0


def test_cli_entrypoint_subprocess(tmp_path):
    p = tmp_path / "r.json"
    p.write_text(json.dumps(WORKED_R))
    proc = subprocess.run(
        [sys.executable, "-m", "nevkit.cli", "factor", "--in", str(p)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kappa"] == 2


def test_cli_invert_dump_samples(tmp_path):
    minus_inv = {"alpha": "0", "beta": "0", "atoms": [{"t": "0", "w": "1"}]}
    p = tmp_path / "f.json"
    p.write_text(json.dumps(minus_inv))
    csv = tmp_path / "samples.csv"
    code = main(["invert", "--in", str(p), "--interval=-1,1",
                 "--out", str(tmp_path / "o.json"),
                 "--dump-samples", str(csv)])
    assert code == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "lambda,re,im"
    assert len(lines) > 1000


def test_precision_env_override(monkeypatch):
    from nevkit.poly import isolation_width
    monkeypatch.setenv("NEVKIT_PRECISION", "1/1024")
    assert isolation_width() == Fraction(1, 1024)
    monkeypatch.delenv("NEVKIT_PRECISION")
    assert isolation_width() == Fraction(1, 2**64)
