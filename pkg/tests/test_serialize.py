import json

import pytest

from amecode import catalog
from amecode import serialize as ser
from amecode.groups import weyl_generators
from amecode.qecc import CodeSubspace


def test_shipped_files_ingest_and_match_catalog():
    assert ser.load_shipped("phi.state") == catalog.ame_state(normalized=True)
    assert ser.load_shipped("c332.code").span_equal(catalog.code_332())
    assert ser.load_shipped("weyl-generators.ops") == list(weyl_generators())
    assert ser.load_shipped("fig1-generators.ops") == list(
        catalog.local_symmetry_generators())
    assert ser.load_shipped("coset-reps.ops") == list(
        catalog.coset_representatives())


def test_roundtrip_through_files(tmp_path):
    objs = [
        catalog.ame_state(),
        catalog.code_332(),
        list(catalog.coset_representatives()),
        list(weyl_generators()),
        catalog.pauli_x(3, 12),
    ]
    for i, obj in enumerate(objs):
        path = tmp_path / f"obj{i}.json"
        ser.dump(obj, path)
        back = ser.ingest(path)
        if isinstance(obj, CodeSubspace):
            assert back.span_equal(obj)
            assert back.basis == obj.basis
        else:
            assert back == obj
        # a second round-trip is byte-identical
        path2 = tmp_path / f"obj{i}b.json"
        ser.dump(back, path2)
        assert path.read_text() == path2.read_text()


def test_ingest_rejects_non_orthonormal_code(tmp_path):
    data = catalog.code_332().to_dict()
    data["basis"][1] = data["basis"][0]  # duplicate basis vector
    p = tmp_path / "bad.code"
    p.write_text(json.dumps(data))
    with pytest.raises(ser.IngestError, match="orthonormal"):
        ser.ingest(p)


def test_ingest_rejects_noncanonical_operator(tmp_path):
    data = catalog.coset_representatives()[0].to_dict()
    # scale one factor entry so the leading entry is no longer 1
    w = data["factors"][0][0][0]
    data["factors"][0][0][0] = data["factors"][0][2][2]
    p = tmp_path / "bad.ops"
    p.write_text(json.dumps(data))
    with pytest.raises(ser.IngestError):
        ser.ingest(p)


def test_ingest_rejects_garbage(tmp_path):
    p = tmp_path / "junk.json"
    p.write_text("{not json")
    with pytest.raises(ser.IngestError):
        ser.ingest(p)
    p2 = tmp_path / "unknown.json"
    p2.write_text(json.dumps({"format": "mystery"}))
    with pytest.raises(ser.IngestError, match="format"):
        ser.ingest(p2)
    with pytest.raises(ser.IngestError):
        ser.ingest(tmp_path / "missing.json")


def test_ingest_rejects_conductor_mismatch(tmp_path):
    data = catalog.ame_state().to_dict()
    data["conductor"] = 24
    p = tmp_path / "mixed.state"
    p.write_text(json.dumps(data))
    with pytest.raises(ser.IngestError, match="conductor"):
        ser.ingest(p)


def test_shipped_files_roundtrip(tmp_path):
    # ingest -> serialize -> ingest yields equal objects
    for name in ser.SHIPPED:
        obj = ser.load_shipped(name)
        p = tmp_path / name
        ser.dump(obj, p)
        again = ser.ingest(p)
        if isinstance(obj, CodeSubspace):
            assert again.basis == obj.basis
        else:
            assert again == obj


def test_describe():
    assert "norm^2 = 1" in ser.describe(catalog.ame_state())
    assert "K=3" in ser.describe(catalog.code_332())
    assert "list of 3" in ser.describe(list(weyl_generators()))


def test_shipped_path_unknown():
    with pytest.raises(KeyError):
        ser.shipped_path("nope.state")
