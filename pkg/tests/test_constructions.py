from __future__ import annotations

import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergestab.constructions import (
    CompositionVector,
    ConstructionParams,
    ParamsError,
    canonical_c,
    canonical_params,
    enumerate_compositions,
    f_value,
    h_f_values,
    h_value,
    make_extremal,
    make_H,
    make_K,
    validate_params,
)
from bergestab.core import Graph, binomial, count_cliques
from bergestab.lab.oracles import brute_clique_count
from bergestab.matching import matching_number


def test_alpha_beta():
    assert (CompositionVector.of(5, 3, 1, 1).alpha, CompositionVector.of(5, 3, 1, 1).beta) == (10, 3)
    assert (CompositionVector((1,) * 6).alpha, CompositionVector((1,) * 6).beta) == (6, 0)
    assert (CompositionVector((9,)).alpha, CompositionVector((9,)).beta) == (9, 4)


def test_validate_params_examples():
    # n = 2k+1 here, so the standing n >= 2k+2 rule must be relaxed
    fig1 = ConstructionParams.of(13, 6, 3, (5, 3, 1, 1))
    assert validate_params(fig1, relaxed=True) == []
    assert any("2k+2" in v for v in validate_params(fig1))
    bad = validate_params(ConstructionParams.of(13, 6, 3, (5, 3, 1)), relaxed=True)
    assert any("alpha" in v for v in bad)
    assert validate_params(ConstructionParams.of(10, 4, 4, (1,) * 6)) == []


def test_params_error_lists_every_violation():
    with pytest.raises(ParamsError) as info:
        make_H(ConstructionParams.of(9, 6, 7, (1,)))
    assert len(info.value.violations) >= 3


def test_make_K_examples():
    k31 = make_K(CompositionVector.of(3, 1))
    assert k31.n == 4 and k31.edges == ((0, 1), (0, 2), (1, 2))
    assert make_K(CompositionVector.of(5, 3, 1, 1)).m == 13
    assert make_K(CompositionVector((1, 1, 1))).m == 0


def test_make_H_examples():
    assert make_H(ConstructionParams.of(13, 6, 3, (5, 3, 1, 1)), relaxed=True).m == 46
    h = make_H(canonical_params(12, 4, 0))
    assert h.m == binomial(9, 2) and all(h.degree(v) == 0 for v in range(9, 12))
    assert make_H(ConstructionParams.of(9, 4, 4, (1,) * 5), relaxed=True).m == 26


def test_canonical_c_examples():
    assert canonical_c(13, 6, 3).parts == (7, 1, 1, 1)
    assert canonical_c(10, 4, 4).parts == (1,) * 6
    assert canonical_c(11, 5, 0).parts == (11,)


def test_h_f_examples():
    assert h_value(7, 2, 2, 2) == 11 == binomial(3, 2) + 4 * 2
    assert h_value(10, 4, 0, 3) == binomial(9, 3)
    assert h_f_values(10, 4, 4, 3) == (40, 30)
    with pytest.raises(ParamsError):
        h_f_values(10, 4, 5, 3)


def test_make_extremal_examples():
    assert make_extremal(10, 4, 0, 3).m == 84
    assert make_extremal(10, 4, 4, 3).m == 40
    h = make_extremal(9, 3, 3, 2)
    assert h.edges == make_H(canonical_params(9, 3, 3)).edges


def test_make_extremal_warns_outside_regime():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        make_extremal(10, 3, 3, 3)
    assert caught


@given(st.integers(1, 5), st.data())
def test_h_is_the_clique_count_of_the_canonical_construction(k, data):
    n = data.draw(st.integers(2 * k + 1, 12))
    t = data.draw(st.integers(0, k))
    r = data.draw(st.integers(2, 5))
    g = make_H(canonical_params(n, k, t), relaxed=True)
    assert count_cliques(g, r) == h_value(n, k, t, r)
    if n <= 9:
        assert brute_clique_count(g, r) == h_value(n, k, t, r)


@given(st.integers(1, 4), st.data())
def test_every_construction_has_matching_number_k(k, data):
    n = data.draw(st.integers(2 * k + 1, 11))
    t = data.draw(st.integers(0, k))
    comps = list(enumerate_compositions(n - t, k - t, n - t))
    c = data.draw(st.sampled_from(comps))
    g = make_H(ConstructionParams.of(n, k, t, c), relaxed=True)
    assert matching_number(g) == k


def test_enumerate_compositions_is_complete_and_valid():
    found = set(enumerate_compositions(7, 2))
    assert found == {(5, 1, 1), (3, 3, 1)}
    for c in enumerate_compositions(11, 3):
        cv = CompositionVector(c)
        assert cv.alpha == 11 and cv.beta == 3


def test_f_never_below_h_for_r_at_least_three_and_small_t():
    # f_r counts t per outside vertex, h_r counts C(t, r-1); for t <= r-1 this is f >= h
    for n in range(8, 14):
        for k in range(1, (n - 2) // 2 + 1):
            for t in range(0, k + 1):
                for r in range(max(3, t + 1), 7):
                    assert f_value(n, k, t, r) >= h_value(n, k, t, r)


def test_graph_equality_is_structural():
    assert make_H(canonical_params(8, 3, 3)) == Graph(8, make_H(canonical_params(8, 3, 3)).edges)
