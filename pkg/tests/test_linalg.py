from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from coverreg.linalg import normalize_field, rank


def fraction_rank(rows, ncols):
    m = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rank_, col = 0, 0
    while rank_ < len(m) and col < ncols:
        piv = next((i for i in range(rank_, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank_], m[piv] = m[piv], m[rank_]
        for i in range(len(m)):
            if i != rank_ and m[i][col]:
                f = m[i][col] / m[rank_][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank_])]
        rank_ += 1
        col += 1
    return rank_


matrices = st.integers(1, 7).flatmap(lambda c: st.tuples(
    st.just(c),
    st.lists(st.dictionaries(st.integers(0, c - 1), st.integers(-4, 4), max_size=c), max_size=8),
))


@given(matrices)
def test_rank_q_matches_fraction_elimination(data):
    ncols, rows = data
    assert rank(rows, "Q") == fraction_rank(rows, ncols)


@given(matrices)
def test_rank_f2_matches_span_size(data):
    ncols, rows = data
    packed = [sum(1 << c for c, v in r.items() if v % 2) for r in rows]
    span = set()
    for pick in range(1 << len(packed)):
        acc = 0
        for t, r in enumerate(packed):
            if pick >> t & 1:
                acc ^= r
        span.add(acc)
    assert 2 ** rank(rows, "F2") == len(span)


def test_field_dependent_rank():
    # determinant 2: full rank over Q, rank 2 over GF(2)
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}]
    assert rank(rows, "Q") == 3
    assert rank(rows, "F2") == 2


def test_normalize_field():
    assert normalize_field("gf(2)") == "F2"
    assert normalize_field("QQ") == "Q"
    with pytest.raises(ValueError):
        normalize_field("F3")
