import pytest

from esnlab.errors import NotASemigroupError, OrderTooLargeError
from esnlab.search import (
    canonical_pair,
    enumerate_semigroups,
    iter_semigroup_tables,
    naive_enumerate,
    search_double,
    second_table_search,
    tables_matching,
)
from esnlab.tables import (
    CayleyTable,
    cyclic_group,
    is_associative,
    left_projection,
    right_projection,
)
from esnlab.inverse import analyze_inverse


def test_enumeration_matches_naive_oracle():
    for n in (1, 2, 3):
        for filt in ("all", "inverse", "commutative-inverse"):
            rep = enumerate_semigroups(n, filt)
            count, canon = naive_enumerate(n, filt)
            assert rep.labeled_count == count, (n, filt)
            assert frozenset(t.rows for t in rep.representatives) == canon, (n, filt)


def test_known_counts():
    assert enumerate_semigroups(1, "all").labeled_count == 1
    assert enumerate_semigroups(2, "all").labeled_count == 8
    assert enumerate_semigroups(3, "all").labeled_count == 113
    rep4 = enumerate_semigroups(4, "all")
    assert (rep4.labeled_count, rep4.class_count) == (3492, 188)
    inv = [enumerate_semigroups(n, "inverse") for n in (1, 2, 3, 4)]
    assert [r.labeled_count for r in inv] == [1, 4, 24, 272]
    assert [r.class_count for r in inv] == [1, 2, 5, 16]


def test_every_emitted_table_is_associative():
    for n in (1, 2, 3):
        for t in iter_semigroup_tables(n):
            assert is_associative(t)


def test_inverse_filter_tables_analyze():
    for t in tables_matching(3, "inverse"):
        analyze_inverse(t)  # must not raise


def test_no_noncommutative_inverse_below_order_5():
    for n in (1, 2, 3, 4):
        assert enumerate_semigroups(n, "noncommutative-inverse").labeled_count == 0


def test_order_caps():
    with pytest.raises(OrderTooLargeError):
        enumerate_semigroups(6)
    with pytest.raises(OrderTooLargeError):
        search_double(5, "inverse")
    with pytest.raises(OrderTooLargeError):
        naive_enumerate(4)
    with pytest.raises(ValueError):
        enumerate_semigroups(3, "weird")


def test_jobs_do_not_change_reports():
    a = enumerate_semigroups(3, "inverse", jobs=1)
    b = enumerate_semigroups(3, "inverse", jobs=4)
    assert a.as_json() == b.as_json()
    pa = search_double(3, "inverse", jobs=1)
    pb = search_double(3, "inverse", jobs=4)
    assert pa.as_json() == pb.as_json()


def test_second_table_search_brandt_empty(b2):
    assert second_table_search(b2, "inverse") == []


def test_second_table_search_group():
    z2 = cyclic_group(2)
    completions = second_table_search(z2, "inverse")
    assert [t.rows for t in completions] == [z2.rows]


def test_second_table_search_projections():
    lp, rp = left_projection(2), right_projection(2)
    completions = second_table_search(lp, "semigroup")
    assert any(t.rows == rp.rows for t in completions)
    # every completion really satisfies interchange with the left projection
    from esnlab.double import check_interchange

    for vop in completions:
        assert is_associative(vop)
        assert check_interchange(lp, vop)


def test_second_table_search_rejects_non_semigroup():
    with pytest.raises(NotASemigroupError):
        second_table_search(CayleyTable(((2, 1), (1, 1))), "semigroup")


def test_pair_search_order2_semigroup():
    rep = search_double(2, "semigroup")
    assert rep.pair_count == 46
    assert rep.proper_pair_count == 38
    assert rep.claims["swap_closed"]
    proj = canonical_pair(left_projection(2), right_projection(2))
    assert proj in {(h.rows, v.rows) for h, v in rep.proper_representatives}


def test_pair_search_inverse_small_orders():
    expected_counts = {1: 1, 2: 4, 3: 24}
    for n, expected in expected_counts.items():
        rep = search_double(n, "inverse")
        assert rep.pair_count == expected
        assert rep.proper_pair_count == 0
        assert rep.claims["all_improper"]
        assert rep.claims["all_commutative"]
        assert rep.claims["all_clifford"]


def test_pair_search_matches_commutative_inverse_diagonal():
    # the double inverse pairs are exactly the commutative inverse tables
    # paired with themselves
    for n in (1, 2, 3):
        diag = {t.rows for t in tables_matching(n, "commutative-inverse")}
        rep = search_double(n, "inverse")
        assert rep.pair_count == len(diag)


def test_canonical_pair_invariance():
    lp, rp = left_projection(2), right_projection(2)
    from esnlab.tables import relabel

    base = canonical_pair(lp, rp)
    for perm in ((1, 2), (2, 1)):
        assert canonical_pair(relabel(lp, perm), relabel(rp, perm)) == base


def test_enumeration_report_json_shape():
    doc = enumerate_semigroups(2, "inverse").as_json()
    assert doc["kind"] == "enumeration"
    assert doc["labeled_count"] == 4
    assert all(body.startswith("2\n") for body in doc["representatives"])
    pdoc = search_double(2, "inverse").as_json()
    assert pdoc["kind"] == "pair-search"
    assert pdoc["pair_count"] == 4
