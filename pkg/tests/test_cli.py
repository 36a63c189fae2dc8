#
# Copyright The NOMAD Authors.
#
# This file is part of NOMAD. See https://nomad-lab.eu for further info.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Exit codes and JSON output of the command line front end."""

import json
from pathlib import Path

import pytest

from augmented_frames.cli.cli import run

DATA = Path(__file__).parent / "data"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    document = json.loads(captured.out) if captured.out else None
    return code, document, captured.err


def test_ring_info(capsys):
    code, document, _ = invoke(capsys, "ring", "info", "-d", "-7")
    assert code == 0
    assert document["ring"]["ring"] == "d=-7"
    assert document["ring"]["mode"] == "REM1"
    code, document, _ = invoke(capsys, "ring", "info", "-d", "d=7")
    assert document["units"]["fundamental"] == {"x": "8", "y": "3"}
    assert document["units"]["span_modulus"] == "3"


def test_usage_errors(capsys):
    code, document, err = invoke(capsys, "ring", "info", "-d", "12")
    assert code == 2 and document is None
    assert err.startswith("error:")
    assert invoke(capsys, "frobnicate")[0] == 2
    assert invoke(capsys, "certify", "noninj")[0] == 2
    assert invoke(capsys, "homology", "--in", str(DATA / "missing.json"))[0] == 2


def test_classify(capsys):
    code, document, _ = invoke(capsys, "classify", "--from", "-11", "--to", "11")
    assert code == 0
    rows = {row["d"]: row for row in document["rows"]}
    assert rows[7]["generated_by_units"] is False
    assert rows[7]["span_modulus"] == "3"
    assert rows[-5]["span_modulus"] is None
    assert 9 not in rows


def test_verify(capsys):
    code, document, _ = invoke(capsys, "verify", "lem1", "-d", "-1", "--grid", "4")
    assert code == 0
    assert document["tested"] == 81
    assert document["failures"] == []


def test_complex_build_and_homology(capsys, tmp_path):
    out = tmp_path / "ba2.json"
    code, summary, _ = invoke(capsys, "complex", "build", "-d", "-3", "-n", "2",
                              "--bound", "1", "--out", str(out))
    assert code == 0
    assert summary["vertices"] == 8
    assert summary["verified"] is True
    code, profile, _ = invoke(capsys, "homology", "--in", str(out))
    assert code == 0
    assert profile["degrees"]["2"]["betti"] == 6
    assert profile["degrees"]["1"]["betti"] == 0


def test_detour(capsys, tmp_path):
    code, document, _ = invoke(capsys, "detour", "builtin", "-d", "-2")
    assert code == 0 and document["valid"] is True
    path = tmp_path / "detour.json"
    path.write_text(json.dumps(document), encoding="utf-8")
    assert invoke(capsys, "detour", "verify", "-d", "-2", "--path", str(path))[0] == 0
    document["r2"] = document["r1"]
    path.write_text(json.dumps(document), encoding="utf-8")
    assert invoke(capsys, "detour", "verify", "-d", "-2", "--path", str(path))[0] == 1
    assert invoke(capsys, "detour", "construct", "-d", "-1")[0] == 2
    assert invoke(capsys, "detour", "verify", "-d", "-2")[0] == 2


def test_byk_check(capsys, tmp_path):
    code, document, _ = invoke(capsys, "byk", "check", "--in", str(DATA / "sqrt7_relation.json"))
    assert code == 0
    assert document["in_kernel"] is True
    stored = json.loads((DATA / "sqrt7_relation.json").read_text(encoding="utf-8"))
    bare = tmp_path / "terms.json"
    bare.write_text(json.dumps(stored["terms"][:3]), encoding="utf-8")
    code, document, _ = invoke(capsys, "byk", "check", "--in", str(bare), "-d", "7")
    assert code == 1
    assert document["in_kernel"] is False
    assert invoke(capsys, "byk", "check", "--in", str(bare))[0] == 2


@pytest.mark.parametrize("d,kind", [("-3", "none"), ("-2", "noninjectivity"),
                                    ("7", "noninjectivity")])
def test_certify_noninj(capsys, tmp_path, d, kind):
    code, document, _ = invoke(capsys, "certify", "noninj", "-d", d)
    assert code == 0
    assert document["type"] == kind
    stored = tmp_path / "certificate.json"
    stored.write_text(json.dumps(document), encoding="utf-8")
    code, verdict, _ = invoke(capsys, "certify", "check", "--in", str(stored))
    assert code == 0 and verdict == {"valid": True}


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == 0
    assert "augmented_frames" in capsys.readouterr().out
