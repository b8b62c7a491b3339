"""Smoke test for the kostka_kit extension module.

Build and install first, e.g.  maturin build -m crates/python/Cargo.toml
and  pip install target/wheels/kostka_kit-*.whl , then run this file.
"""

import kostka_kit as kk


def main():
    assert kk.kostka([4, 1], [2, 2, 1]) == 2
    assert kk.kostka_oracle([4, 1], [2, 2, 1]) == 2
    assert kk.kostka([3], [3]) == 1

    ts = kk.enumerate_ssyt([4, 1], [2, 2, 1])
    assert [t.rows for t in ts] == [[[1, 1, 2, 3], [2]], [[1, 1, 2, 2], [3]]]
    assert ts[0].shape == [4, 1] and ts[0].content(3) == [2, 2, 1]

    t = kk.Tableau([[1, 1, 2, 2], [3]])
    s, cell, path = kk.row_insert(t, 1)
    assert s == kk.Tableau([[1, 1, 1, 2], [2], [3]])
    assert cell == (3, 1) and path[-1] == cell
    back, x = kk.reverse_insert(s, cell)
    assert back == t and x == 1
    assert len({t, kk.Tableau([[1, 1, 2, 2], [3]])}) == 1

    try:
        kk.Tableau([[2, 1]])
    except ValueError:
        pass
    else:
        raise AssertionError("non-semistandard rows accepted")

    pairs = kk.vershik_bijection([4, 3], [3, 3, 2])
    assert len(pairs) == 6
    for (src, x), image in pairs:
        assert kk.row_insert(src, x)[0] == image

    rec = kk.verify_identity([4, 1], [3, 2, 1])
    assert rec["ok"] and rec["lhs"] == rec["rhs"] == 5

    records = kk.sweep_identity(6, jobs=2)
    assert len(records) == 136 and all(r["ok"] for r in records)

    report = kk.removal_map_analysis([4, 3], [3, 3, 2])
    assert not report["is_bijective"]
    assert report["witness"]["images"] == [{"rows": [[1, 1, 1, 3], [2, 2, 2]]}]
    assert kk.removal_map_analysis([4, 1], [3, 2, 1])["is_bijective"]

    print("smoke test passed")


if __name__ == "__main__":
    main()
