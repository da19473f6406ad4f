import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oracles import form_set_counts, rotate_min
from ucycles.errors import BadForm, InvalidDrop
from ucycles.forms import (
    Form,
    Subset,
    all_forms,
    choose_rep,
    form_of,
    pattern_of,
    set_count,
    sets_of_form,
    unique_values,
)


def F(n, *entries):
    return Form(n, entries)


def test_form_of_examples():
    assert form_of(Subset(8, (1, 3, 5))) == F(8, 2, 2, 4)
    assert form_of(Subset(9, (1, 4, 7))) == F(9, 3, 3, 3)
    for n, k in [(6, 2), (10, 4), (13, 5)]:
        assert form_of(Subset(n, tuple(range(1, k + 1)))) == Form(n, (1,) * (k - 1) + (n - k + 1,))


def test_form_rotation_equality():
    assert F(8, 4, 2, 2) == F(8, 2, 4, 2) == F(8, 2, 2, 4)
    assert F(8, 4, 2, 2).entries == (2, 2, 4)


@pytest.mark.parametrize("bad", [(0, 8), (3, 3, 3)])
def test_form_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Form(8, bad)


def test_crossing_forms_rejected():
    # {5,3,1} read as (6,6,4) sums to 2n
    with pytest.raises(ValueError):
        Form(8, (6, 6, 4))


@pytest.mark.parametrize("elems", [(1,), (1, 2, 3, 4, 5, 6, 7), (1, 1, 2), (0, 2, 3), (1, 2, 9)])
def test_subset_rejects_invalid(elems):
    with pytest.raises(ValueError):
        Subset(8, elems)


def test_sets_of_form_examples():
    assert len(sets_of_form(F(8, 2, 2, 4))) == 8
    assert [s.elements for s in sets_of_form(F(9, 3, 3, 3))] == [(1, 4, 7), (2, 5, 8), (3, 6, 9)]
    # frozen from the brute-force oracle: translates of {1,2,5,6}
    assert len(sets_of_form(F(8, 1, 3, 1, 3))) == 4


def test_pattern_of_examples():
    assert pattern_of(F(8, 1, 2, 2, 3)) == (2, 1, 1)
    assert pattern_of(F(8, 2, 2, 2, 2)) == (4,)
    assert pattern_of(F(8, 4, 2, 2)) == (2, 1)


def test_unique_values_examples():
    assert unique_values(F(8, 2, 2, 4)) == [4]
    assert unique_values(F(10, 1, 1, 4, 4)) == []
    assert unique_values(F(8, 1, 2, 2, 3)) == [1, 3]


def test_choose_rep_examples():
    rep = choose_rep(F(8, 2, 2, 4))
    assert (rep.entries, rep.dropped) == ((2, 2), 4)
    rep = choose_rep(F(8, 1, 2, 2, 3))
    assert (rep.entries, rep.dropped) == ((1, 2, 2), 3)
    with pytest.raises(BadForm):
        choose_rep(F(10, 1, 1, 4, 4))
    with pytest.raises(InvalidDrop):
        choose_rep(F(8, 1, 2, 2, 3), drop_value=2)
    rep = choose_rep(F(8, 1, 2, 2, 3), drop_value=1)
    assert (rep.entries, rep.dropped) == ((2, 2, 3), 1)


def test_rep_prefix_suffix():
    rep = choose_rep(F(10, 1, 2, 2, 5))
    assert rep.prefix == (1, 2) and rep.suffix == (2, 2) and rep.last == 2
    assert rep.n == 10 and rep.k == 4


def test_k2_reps_have_empty_vertices():
    rep = choose_rep(F(5, 1, 4))
    assert rep.entries == (1,) and rep.prefix == () and rep.suffix == ()


@pytest.mark.parametrize("n,k", [(n, k) for k in (2, 3, 4, 5) for n in range(k + 2, 15)])
def test_all_forms_match_bruteforce(n, k):
    oracle = form_set_counts(n, k)
    forms = all_forms(n, k)
    assert {f.entries for f in forms} == set(oracle)
    for f in forms:
        assert len(sets_of_form(f)) == oracle[f.entries] == set_count(f)
    assert sum(oracle.values()) == math.comb(n, k)


@st.composite
def subsets(draw):
    n = draw(st.integers(min_value=4, max_value=16))
    k = draw(st.integers(min_value=2, max_value=n - 2))
    elems = draw(st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True))
    return Subset(n, tuple(elems))


@given(subsets())
def test_round_trip(s):
    assert s in sets_of_form(form_of(s))
    assert sum(form_of(s).entries) == s.n


@given(subsets())
def test_good_forms_have_n_sets(s):
    f = form_of(s)
    count = len(sets_of_form(f))
    assert s.n % count == 0
    if unique_values(f):
        assert count == s.n


@given(subsets(), st.data())
def test_choose_rep_reinsertion(s, data):
    f = form_of(s)
    singles = unique_values(f)
    if not singles:
        return
    d = data.draw(st.sampled_from(singles))
    rep = choose_rep(f, d)
    assert rotate_min(rep.entries + (rep.dropped,)) == f.entries
    assert sum(rep.entries) == s.n - d
    assert rep.form() == f
