from fractions import Fraction
from itertools import product

import pytest

from invconn.catalog import load_example, su3_zero_one_display
from invconn.compact import (
    InvalidMetric,
    NotPositiveDefinite,
    make_metric,
    metric_from_killing,
    ricci_natural_compact,
    ricci_zero_one_compact,
    w_operator,
    w_parallel_defect,
    w_property_report,
)
from invconn.conn import d_endo, natural_product, ricci, zero_one_product
from invconn.exactla import Mat, inverse, trace, unit
from invconn.liealg import LieAlgebra
from invconn.redspace import SymplecticSpace


@pytest.fixture(scope="module")
def entry():
    return load_example("su3-t2")


@pytest.fixture(scope="module")
def su3(entry):
    return entry.space


@pytest.fixture(scope="module")
def metric(su3):
    return metric_from_killing(su3, Fraction(-1, 6))


def toy_space():
    return SymplecticSpace(LieAlgebra.abelian(2), [], [0, 1], [[0, 1], [-1, 0]])


def test_killing_metric(su3, metric, entry):
    assert metric.G == Mat.identity(6) * 2 == entry.metric
    assert metric.positive_definite
    assert metric.scope == "m-block conditions only"


def test_killing_metric_errors(su3):
    with pytest.raises(NotPositiveDefinite):
        metric_from_killing(su3, 0)
    with pytest.raises(NotPositiveDefinite):
        metric_from_killing(su3, Fraction(1, 6))
    with pytest.raises(NotPositiveDefinite):
        metric_from_killing(toy_space(), 1)
    with pytest.raises(NotPositiveDefinite):
        metric_from_killing(load_example("r6").space, 1)


def test_bad_metric_rejected(su3):
    G = Mat.identity(6).tolist()
    G[0][0] = 3
    with pytest.raises(InvalidMetric):
        make_metric(su3, Mat(G))


def test_w_matches_golden(su3, metric, entry):
    W = w_operator(su3, metric)
    assert W == entry.golden["W"]
    assert W == su3.ad_m(entry.golden["X0"])
    for x, y in product(range(6), repeat=2):
        assert su3.w(unit(6, x), unit(6, y)) == metric.inner(W @ unit(6, x), unit(6, y))


def test_w_toy():
    space = toy_space()
    W = w_operator(space, make_metric(space, Mat.identity(2)))
    # <W e1, e2> = omega(e1, e2) = 1
    assert W == Mat([[0, -1], [1, 0]])


def test_w_properties(su3, metric):
    report = w_property_report(su3, metric)
    assert report.ok
    assert set(report.as_dict()) == {
        "skew", "commutes_with_isotropy", "bracket_derivation", "conjugates_zero_one", "conjugates_d_adjoint",
    }
    W = w_operator(su3, metric)
    e3 = unit(6, 2)
    assert inverse(W) @ su3.L10(e3) @ W == Mat(su3_zero_one_display(e3)) == zero_one_product(su3).op(e3)
    space = toy_space()
    assert w_property_report(space, make_metric(space, Mat.identity(2))).ok


def test_u_vanishes(su3):
    assert not any(su3.u_vector())


def test_trace_identities(su3, metric):
    W = w_operator(su3, metric)
    Winv = inverse(W)
    for i, j in product(range(6), repeat=2):
        x, y = unit(6, i), unit(6, j)
        s = 1 if i == j else 0
        assert trace(su3.L10(x) @ su3.L10(y)) == -trace(d_endo(su3, x, y)) == -4 * s
        expected = -8 * s if i < 2 else s
        assert trace(su3.L10(x) @ Winv @ su3.L10(W @ y)) == expected


def test_compact_riccis(su3, metric, entry):
    r01 = ricci_zero_one_compact(su3, metric)
    assert r01 == ricci(su3, zero_one_product(su3))
    assert r01.is_symmetric()
    assert r01[0, 0] == -20
    rs = ricci_natural_compact(su3, metric)
    assert rs[0, 0] == -8 and rs[2, 2] == -4
    assert rs == entry.golden["ricci_natural"] == ricci(su3, natural_product(su3))


def test_w_not_parallel(su3, metric):
    defect = w_parallel_defect(su3, metric)
    assert not defect.is_parallel
    assert defect.witness == 2


def test_w_parallel_when_locally_symmetric():
    alg = LieAlgebra(["f", "x", "y"], {(0, 1): [0, 0, 1], (0, 2): [0, -1, 0], (1, 2): [1, 0, 0]})
    space = SymplecticSpace(alg, [0], [1, 2], [[0, 1], [-1, 0]])
    metric = metric_from_killing(space, Fraction(-1, 2))
    assert w_parallel_defect(space, metric).is_parallel
    assert w_property_report(space, metric).ok
    # L^{1,0} vanishes, so only the isotropy term is left
    r01 = ricci_zero_one_compact(space, metric)
    for i, j in product(range(2), repeat=2):
        assert r01[i, j] == -trace(d_endo(space, unit(2, i), unit(2, j)))
    assert r01 == ricci(space, zero_one_product(space))
    assert ricci_natural_compact(space, metric) == ricci(space, natural_product(space))
