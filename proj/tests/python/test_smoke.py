import pytest

import bvorb


def test_catalog_sizes():
    sizes = [len(bvorb.catalog(p)) for p in bvorb.supported_primes()]
    assert sizes == [64, 24, 7, 5, 3, 1, 1, 1]
    c = bvorb.catalog(2)[0]
    assert (c.p, c.r, c.a) == (2, 1, 1)


def test_threefold():
    x = bvorb.threefold(2, 0)
    assert (x.h(1, 1), x.h(2, 1), x.euler) == (15, 39, -48)
    assert x.fundamental_group == "trivial"


def test_fourfold_p13():
    x = bvorb.fourfold(13, 10, 1, 10, 1)
    assert x.diamond[1, 1] == 404
    assert x.diamond[2, 2] == 1372
    assert x.euler == 2184
    g = bvorb.fourfold(13, 10, 1, 10, 1, geometric=True)
    assert g.euler == 1608


def test_summands_add_up():
    x = bvorb.fourfold(5, 2, 1, 10, 3)
    parts = list(x.summands.values())
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    assert total == x.diamond
    assert set(x.summands) == {"invariant", "codim2", "codim3", "codim4"}


def test_diamond_algebra():
    k3 = bvorb.HodgeDiamond([[1, 0, 1], [0, 20, 0], [1, 0, 1]])
    x = k3 * k3
    assert x.dim == 4
    assert x[2, 2] == 404
    assert x.euler() == 576
    assert x.mirror().mirror() == x


def test_enumerate_and_mirror():
    t = bvorb.enumerate(11)
    assert t["distinct_count"] == 6
    assert (t["chi_min"], t["chi_max"]) == (96, 1896)
    assert bvorb.mirror_check()["ok"]
    assert bvorb.mirror_search(7)["involution"] is None


def test_ages():
    assert bvorb.p2_matrix(5) == [[4, 2], [2, 4]]
    n1, n2, n3 = bvorb.shift_counts(5, 2, 1, 2, 1)
    assert n1 == n3 and n1 + n2 + n3 == 4


def test_errors():
    with pytest.raises(ValueError):
        bvorb.fourfold(3, 2, 9, 2, 0)
    with pytest.raises(ValueError):
        bvorb.enumerate(23)


def test_verify_shape():
    report = bvorb.verify()
    assert len(report["checks"]) == 23
    assert {c["id"] for c in report["checks"]} >= {"1", "5c", "10e"}
