import io
import json

import pytest

from tameblocks.datasets import (
    BUNDLED,
    BlockRecord,
    Dataset,
    DatasetError,
    bundled_checksum,
    dumps_dataset,
    load_blockdata,
    load_bundled,
    load_dataset,
    run_batch,
)

CHECKSUMS = {
    "sporadic-dihedral": "7164bbe5e2027da39acb5ad2909b3df7326ceb27ddc8024021363db4b1254d67",
    "sporadic-semidihedral": "6a363f46eaf0ee8a9861775d8cc4f25f1a356bed30e0dc4ee3827c0580ff6d88",
}

EXPECTED = {
    "He": ("3B",), "Suz": ("3B",), "Co1": ("3B",), "O'N": ("3K",), "Fi23": ("2B",), "B": ("2B",),
    "Fi24'": ("3A",), "3.Fi24'": ("2A",), "M11": ("3B1", "3D"), "HN": ("3B1", "3D"), "M": ("3B2", "3C2,1"),
}

GOOD = '{"group": "kD8", "n": 3, "characters": [["1", 4], ["2", 1]]}\n'


def test_checksums_pinned():
    for name in BUNDLED:
        assert bundled_checksum(name) == CHECKSUMS[name]


def test_bundled_contents():
    groups = [r.block.group for name in BUNDLED for r in load_bundled(name).records]
    assert sorted(groups) == sorted(EXPECTED)
    for name in BUNDLED:
        for rec in load_bundled(name).records:
            assert rec.provenance
            assert rec.expected


@pytest.mark.parametrize("name", BUNDLED)
def test_round_trip_byte_identical(name):
    text = load_bundled(name)
    from tameblocks.datasets import _bundled_text
    raw = _bundled_text(name)
    assert dumps_dataset(text) == raw
    assert dumps_dataset(load_dataset(raw.encode())) == raw


def test_sources():
    for src in (GOOD, GOOD.encode(), io.StringIO(GOOD), io.BytesIO(GOOD.encode()), GOOD.splitlines()):
        (b,) = load_blockdata(src)
        assert b.degree_counts() == {1: 4, 2: 1}
    assert load_dataset("# only a comment\n\n").records == ()


def test_integer_degrees_accepted_and_written_as_strings():
    ds = load_dataset('{"group": "g", "n": 3, "characters": [[3, 1]]}')
    assert json.loads(dumps_dataset(ds))["characters"] == [["3", 1]]


def test_huge_degrees_exact():
    d = "258823477531055064045234375"
    (b,) = load_blockdata('{"group": "g", "n": 3, "characters": [["%s", 1]]}' % d)
    assert b.degrees == [int(d)]


@pytest.mark.parametrize("text, line, field", [
    ("{bad json", 1, None),
    ('\n\n[1, 2]', 3, None),
    ('{"n": 3, "characters": [["1", 1]]}', 1, "group"),
    ('{"group": "g", "characters": [["1", 1]]}', 1, "n"),
    ('{"group": "g", "n": 3}', 1, "characters"),
    ('{"group": "", "n": 3, "characters": [["1", 1]]}', 1, "group"),
    ('{"group": "g", "n": 1, "characters": [["1", 1]]}', 1, "n"),
    ('{"group": "g", "n": 3, "characters": []}', 1, "characters"),
    ('{"group": "g", "n": 3, "characters": [["1", 1], ["-4", 1]]}', 1, "characters[1]"),
    ('{"group": "g", "n": 3, "characters": [["1.5", 1]]}', 1, "characters[0]"),
    ('{"group": "g", "n": 3, "characters": [["1", 0]]}', 1, "characters[0]"),
    ('{"group": "g", "n": 3, "characters": [["1"]]}', 1, "characters[0]"),
    ('{"group": "g", "n": 3, "characters": [[true, 1]]}', 1, "characters[0]"),
    ('{"group": "g", "n": 3, "family": "cyclic", "characters": [["1", 1]]}', 1, "family"),
    ('{"group": "g", "n": 3, "v2_order": -1, "characters": [["1", 1]]}', 1, "v2_order"),
    ('{"group": "g", "n": 3, "characters": [["1", 1]], "expected": ["9Z"]}', 1, "expected"),
    ('{"group": "g", "n": 3, "characters": [["1", 1]], "expected": "3A"}', 1, "expected"),
    ('{"group": "g", "n": 3, "characters": [["1", 1]], "brauer": {"3A": "1"}}', 1, "brauer"),
    ('{"group": "g", "n": 3, "characters": [["1", 1]], "brauer": {"3A": ["x"]}}', 1, "brauer[3A]"),
    ('{"group": "g", "n": 3, "characters": [["1", 1]], "colour": 1}', 1, None),
])
def test_parse_errors_locate_problem(text, line, field):
    with pytest.raises(DatasetError) as info:
        load_dataset(text)
    assert (info.value.line, info.value.field) == (line, field)
    rec = info.value.to_record()
    assert rec["line"] == line and rec["field"] == field
    assert f"line {line}" in rec["error"]


def test_error_after_good_lines():
    with pytest.raises(DatasetError) as info:
        load_dataset(GOOD + "# note\n" + GOOD + '{"group": 5, "n": 3, "characters": [["1", 1]]}\n')
    assert info.value.line == 4


def test_unknown_bundled_name():
    with pytest.raises(DatasetError):
        load_bundled("sporadic-quaternion")


def test_batch_on_bundled():
    for name in BUNDLED:
        for res in run_batch(load_bundled(name)):
            assert res.ok, (res.record.block.group, res.notes)
            assert tuple(sorted(res.matched)) == tuple(sorted(EXPECTED[res.record.block.group]))


def test_batch_notes_twin_for_m11():
    (m11,) = [r for r in run_batch(load_bundled("sporadic-semidihedral")) if r.record.block.group == "M11"]
    assert m11.record.expected == ("3B1",)
    assert any("3D" in note for note in m11.notes)


def test_monster_brauer_degrees_recovered():
    (m,) = [r for r in run_batch(load_bundled("sporadic-semidihedral")) if r.record.block.group == "M"]
    for s in m.solutions:
        assert sorted(s.brauer) == sorted(m.record.brauer[s.tag])


def rec(line):
    return load_dataset(line).records[0]


def test_batch_failures():
    fi23 = load_bundled("sporadic-dihedral").records[0]
    wrong = BlockRecord(fi23.block, ("3A",), {}, None)
    (res,) = run_batch(Dataset("x", (wrong,)))
    assert not res.ok and "not matched" in " ".join(res.notes)

    bad_brauer = BlockRecord(fi23.block, ("2B",), {"2B": (1, 2)}, None)
    (res,) = run_batch(Dataset("x", (bad_brauer,)))
    assert not res.ok

    junk = rec('{"group": "g", "n": 3, "characters": [["1", 1], ["3", 1], ["5", 1], ["7", 1], ["9", 1]]}')
    (res,) = run_batch(Dataset("x", (junk,)))
    assert not res.ok and res.notes == ("no template fits",)


def test_batch_flags_unique_eliminated_match():
    # dihedral (3B) at n = 4 with phi = (1, 2, 4)
    r = rec('{"group": "g", "family": "dihedral", "n": 4, "characters": '
            '[["1", 1], ["3", 1], ["5", 1], ["7", 1], ["2", 3]]}')
    (res,) = run_batch(Dataset("x", (r,)))
    assert res.matched == ("3B",)
    assert not res.ok and "eliminated" in " ".join(res.notes)
