import itertools

import pytest
import sympy
from sympy.matrices.normalforms import invariant_factors
from hypothesis import given, settings, strategies as st

from csym_order import fixtures
from csym_order.errors import CapExceeded, ZeroColumn
from csym_order.lattice import (IntMatrix, centrally_symmetric, det, is_unimodular, lattice_spans,
                                order_matrix, smith_normal_form)
from csym_order.poset import antichain, chain, enumerate_all_posets, has_three_antichain

int_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def test_example_order_matrix_matches_printed(example_poset):
    assert order_matrix(example_poset).entries == fixtures.EXAMPLE_POSET_MATRIX


def test_chain_order_matrix_is_triangular():
    a = order_matrix(chain(4))
    assert a.entries == tuple(tuple(int(i <= j) for j in range(4)) for i in range(4))


def test_antichain2_order_matrix():
    assert order_matrix(antichain(2)).columns() == [(1, 0), (0, 1), (1, 1)]


def test_centrally_symmetric_smallest():
    assert centrally_symmetric(IntMatrix.from_rows([[1]])).entries == ((0, 1, -1), (1, 1, 1))


def test_centrally_symmetric_example_shape(example_poset):
    apm = centrally_symmetric(order_matrix(example_poset))
    assert apm.shape == (6, 21)
    assert set(apm.entries[-1]) == {1}


def test_centrally_symmetric_rejects_zero_column():
    with pytest.raises(ZeroColumn):
        centrally_symmetric(IntMatrix.from_rows([[1, 0], [0, 0]]))


@settings(max_examples=50, deadline=None)
@given(int_matrices)
def test_centrally_symmetric_round_trip(rows):
    a = IntMatrix.from_rows(rows)
    if any(not any(c) for c in a.columns()):
        return
    apm = centrally_symmetric(a)
    assert apm.cols == 2 * a.cols + 1
    body = [row[1:] for row in apm.entries[:-1]]
    left = [r[: a.cols] for r in body]
    right = [tuple(-x for x in r[a.cols:]) for r in body]
    assert tuple(map(tuple, left)) == a.entries == tuple(right)


@settings(max_examples=80, deadline=None)
@given(int_matrices)
def test_smith_form_back_multiplies(rows):
    a = IntMatrix.from_rows(rows)
    snf = smith_normal_form(a)
    assert snf.U @ a @ snf.V == snf.D
    assert abs(det(snf.U.entries)) == 1 and abs(det(snf.V.entries)) == 1
    divs = snf.divisors
    assert all(x > 0 for x in divs)
    assert all(divs[i + 1] % divs[i] == 0 for i in range(len(divs) - 1))
    # independent oracle: sympy's invariant factors
    ref = [abs(x) for x in invariant_factors(sympy.Matrix(rows), domain=sympy.ZZ)]
    assert [x for x in ref if x] == divs


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(
    st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(rows):
    assert det(rows) == sympy.Matrix(rows).det()


def test_negative_configuration_spans():
    assert lattice_spans(fixtures.negative_configuration()).spans_full_lattice


def test_identity_spans():
    r = lattice_spans(IntMatrix.identity(4))
    assert r.spans_full_lattice and r.elementary_divisors == [1, 1, 1, 1]


def test_index_two_lattice():
    r = lattice_spans(IntMatrix.from_rows([[2, 0], [0, 1]]))
    assert r.rank == 2 and not r.spans_full_lattice and r.elementary_divisors == [1, 2]


def test_order_matrices_span_full_lattice():
    for d in range(1, 5):
        for p in enumerate_all_posets(d):
            assert lattice_spans(order_matrix(p)).spans_full_lattice


def test_antichain3_fixture_not_unimodular():
    a = fixtures.antichain3_matrix()
    assert a == order_matrix(antichain(3))
    r = is_unimodular(a)
    assert not r.unimodular
    cols, value = r.witness_minor
    assert [c + 1 for c in cols] == [4, 5, 6] and abs(value) == 2


def test_antichain3_minor_values_brute_force():
    a = fixtures.antichain3_matrix()
    values = {abs(sympy.Matrix([[a.entries[i][j] for j in cols] for i in range(3)]).det())
              for cols in itertools.combinations(range(7), 3)}
    assert values - {0} == {1, 2}
    assert is_unimodular(a).minor_values == frozenset({1, 2})


def test_chain_unimodular():
    assert is_unimodular(order_matrix(chain(4))).unimodular


def test_negative_configuration_not_unimodular():
    r = is_unimodular(fixtures.negative_configuration())
    assert not r.unimodular and not r.all_plus_minus_one


def test_rank_deficient_is_not_unimodular():
    r = is_unimodular(IntMatrix.from_rows([[1, 1], [1, 1]]))
    assert not r.unimodular and r.rank == 1


def test_minor_budget():
    with pytest.raises(CapExceeded):
        is_unimodular(order_matrix(antichain(4)), budget=10)


def test_unimodular_iff_no_three_antichain():
    for d in range(1, 5):
        for p in enumerate_all_posets(d):
            assert is_unimodular(order_matrix(p)).unimodular == (not has_three_antichain(p))


def test_order_matrix_columns_distinct_01():
    for p in enumerate_all_posets(4):
        cols = order_matrix(p).columns()
        assert len(set(cols)) == len(cols)
        assert all(x in (0, 1) for c in cols for x in c)


def test_matrix_json_round_trip():
    a = fixtures.negative_configuration()
    assert IntMatrix.from_json(a.to_json()) == a
    assert a.to_dict()["rows"] == 7 and a.to_dict()["cols"] == 11
