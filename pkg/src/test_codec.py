"""Tests for codec.py and samples.py"""

import json

import numpy as np
import pytest

import cli
import codec
from base import Kind, lookup_pair
from construct import phi_precover
from errors import InputError
from quiver import fork_quiver
from samples import all_representations, random_object, random_representations, square_zero_matrices


def test_load_data_files(data_dir):
    fork = codec.load_quiver(data_dir / "fork_quiver.json")
    assert fork == fork_quiver()
    x = codec.load_representation(data_dir / "fork_identity.json")
    assert x.dims() == (1, 1, 1, 1)
    assert x.maps["c"].matrix.tolist() == [[1]]
    s = codec.load_representation(data_dir / "dual_stalk_k2_a2.json")
    assert s.category.kind is Kind.DUAL and s.dims() == (0, 1)
    assert s.maps["a"].matrix.shape == (1, 0), "Omitted maps default to zero"


def test_malformed_documents(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        codec.load_quiver(bad)
    with pytest.raises(InputError):
        codec.quiver_from_json({"arrows": []})
    with pytest.raises(InputError):
        codec.object_from_json({"kind": "dual", "p": 2, "dim": 2, "nil": [[1, 0], [0, 0]]})
    with pytest.raises(InputError):
        codec.object_from_json({"kind": "matrix", "dim": 1})
    with pytest.raises(InputError):
        codec.load_representation(tmp_path / "missing.json")


def test_object_json_shape(dual, vect):
    assert codec.object_to_json(vect.space(3)) == {"kind": "finvect", "p": 2, "dim": 3}
    assert codec.object_to_json(dual.lam()) == {"kind": "dual", "p": 2, "dim": 2, "nil": [[0, 0], [1, 0]]}
    assert codec.object_from_json({"kind": "dual", "dim": 4, "rank": 2}) == dual.free(2)


def test_trace_json_is_canonical(vect, data_dir):
    x = codec.load_representation(data_dir / "fork_identity.json")
    trace = phi_precover(x, lookup_pair(vect, "all_all")).trace
    first = codec.dumps(codec.trace_to_json(trace))
    second = codec.dumps(codec.trace_to_json(phi_precover(x, lookup_pair(vect, "all_all")).trace))
    assert first == second
    doc = json.loads(first)
    assert doc["kind"] == "phi"
    assert doc["filtration"]["levels"] == [[], ["1", "2"], ["1", "2", "3"], ["1", "2", "3", "4"]]
    assert [level["changed"] for level in doc["levels"]] == [["1", "2"], ["3"], ["4"]]
    assert doc["levels"][0]["middle_map"] is None


def test_seeded_samples_are_reproducible(dual, fork):
    first = random_representations(fork, dual, 2, 5, seed=42)
    second = random_representations(fork, dual, 2, 5, seed=42)
    assert first == second
    rng = np.random.default_rng(0)
    for _ in range(20):
        m = random_object(dual, 3, rng)
        assert m.dim <= 3 and 2 * m.nil_rank <= m.dim


def test_exhaustive_enumeration_counts(vect, a2):
    assert len(list(square_zero_matrices(2, 2))) == 4, "Zero plus the three rank-one nilpotents"
    assert len(list(all_representations(a2, vect, 2))) == 31


def rep_with_map(entries) -> dict:
    return {
        "quiver": {"vertices": ["1", "2"], "arrows": [{"id": "a", "src": "1", "tgt": "2"}]},
        "base": {"kind": "finvect", "p": 2},
        "objects": {"1": {"dim": 1}, "2": {"dim": 1}},
        "maps": {"a": entries},
    }


@pytest.mark.parametrize("entries", [[[1.7]], [[True]], [["1"]], [[1, 0]], [[1], [0]], [], [1]])
def test_malformed_matrices_are_rejected(entries, tmp_path, capsys):
    with pytest.raises(InputError):
        codec.representation_from_json(rep_with_map(entries))
    path = tmp_path / "rep.json"
    codec.write_json(path, rep_with_map(entries))
    code = cli.run(cli.CommandRequest("precover", rep=path, pair="all_all"))
    report = json.loads(capsys.readouterr().out)
    assert code == 2, f"{entries!r} should be a parse error"
    assert report["error"]["type"] == "InputError"


def test_malformed_structure_matrix_is_rejected():
    with pytest.raises(InputError):
        codec.object_from_json({"kind": "dual", "p": 2, "dim": 2, "nil": [[0, 0], [1.0, 0]]})
    with pytest.raises(InputError):
        codec.object_from_json({"kind": "dual", "p": 2, "dim": 2, "nil": [[0, 0, 0], [1, 0, 0]]})


def test_empty_matrices_still_load():
    doc = rep_with_map([[]])
    doc["objects"]["1"] = {"dim": 0}
    x = codec.representation_from_json(doc)
    assert x.maps["a"].matrix.shape == (1, 0)
