import pytest

import overpath


def test_counts():
    assert overpath.count_overpartitions("B", 2, 1, 3) == 3
    assert overpath.count_paths("E", 2, 1, 3) == 3
    assert overpath.count_paths("E", 2, 1, 0) == 1


def test_series():
    s = overpath.gf_sum("AB", 2, 1, 5)
    p = overpath.gf_prod("AB", 2, 1, 5)
    assert s == p
    assert s[0] == 1
    assert s[3] == 3


def test_verify():
    rep = overpath.verify("1.3", kmax=2, nmax=6)
    assert rep["all_pass"] is True
    assert rep["failed"] == 0
    assert rep["cells"][0]["params"] == {"k": 2, "a": 1, "n": 0}


def test_render():
    art = overpath.render_ascii("k=2,a=1:dud")
    assert "major=2" in art
    assert "NESE" in art
    svg = overpath.render_svg("k=2,a=1:dud")
    assert svg.startswith("<?xml")
    assert "<polyline" in svg
    assert overpath.major_index("k=2,a=1:dud") == 2


def test_budget():
    overpath.set_node_budget(5)
    try:
        with pytest.raises(RuntimeError):
            overpath.count_paths("E", 3, 3, 10)
    finally:
        overpath.set_node_budget(0)
