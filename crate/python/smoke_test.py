"""Smoke test for the charval Python module.

Build and install first:
    pip install maturin
    maturin develop -m crates/python/Cargo.toml
then run:
    python python/smoke_test.py
"""

import json
import pathlib
import sys

import charval

ROOT = pathlib.Path(__file__).resolve().parent.parent


def main():
    s3 = charval.Group.from_spec("family:sym(3)")
    assert s3.order == 6 and not s3.is_abelian()
    t = s3.character_table()
    assert t.degrees == [1, 1, 2]
    assert sorted(map(tuple, t.values())) == [("1", "-1", "1"), ("1", "1", "1"), ("2", "0", "-1")]
    assert t.verify_orthogonality()
    assert t.value_profile()["cv_size"] == 4

    for spec, n in [("sym(4)", 5), ("cyclic(5)", 5), ("quaternion8", 5), ("alt(5)", 8)]:
        got = charval.Group.from_spec(spec).character_table().value_profile()["cv_size"]
        assert got == n, (spec, got)

    a = charval.Group.from_spec("elem(3^2)")
    closed = a.dihedral_table()
    general = charval.Group.from_spec("gendihedral(3^2)").character_table()
    assert closed.equivalent(general)
    assert closed.num_classes == 6

    c3 = charval.Group.from_permutations(3, [[1, 2, 0]], name="c3")
    assert c3.order == 3 and len(c3) == 3

    record = json.loads(t.to_json())
    assert charval.verify_table_json(t.to_json())
    record["characters"][2][2] = 1
    assert not charval.verify_table_json(json.dumps(record))

    report = s3.analyze()
    assert report["flags"]["is_gendihedral_elem_abelian_3"]

    fleet = charval.scan([str(ROOT / "data/catalog/named_groups.grp")], predicates="theorem,orthogonality")
    assert fleet["summary"]["failures"] == 0
    assert fleet["summary"]["four_value_groups"] == fleet["summary"]["structural_matches"]

    try:
        charval.Group.from_spec("sym(6)", cap=100)
    except charval.CapExceededError:
        pass
    else:
        raise AssertionError("cap not enforced")
    try:
        charval.Group.from_spec("nonsense")
    except charval.CharvalError:
        pass
    else:
        raise AssertionError("bad spec accepted")

    print("smoke test passed:", t, "four-value groups:", fleet["summary"]["four_value_groups"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
