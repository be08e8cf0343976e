import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fracwave import special_fn as sf
from fracwave.errors import DomainError, SeriesDomainExceeded

from conftest import rel_err
from oracles import ml_series_mp


def test_zero_argument_is_one():
    for a in (0.3, 1.0, 1.5, 1.99):
        assert sf.mittag_leffler_neg(a, 0.0) == 1.0
        assert sf.ml_series(a, 0.0, 7) == 1.0


def test_series_alpha_one_is_exponential():
    assert sf.ml_series(1.0, 1.0, 60) == pytest.approx(0.3678794411714423, rel=4 * 2.2e-16)


def test_series_partial_sum_matches_oracle(oracles):
    a, x, n, ref = oracles["ml_partial"][0]
    assert rel_err(sf.ml_series(a, x, n), ref) <= 1e-12


def test_series_partial_sum_is_exact_partial_sum():
    # n terms, not the full function: compare with the same truncation in mpmath
    for a, x, n in [(1.5, 2.0, 5), (1.2, 3.0, 12), (1.9, 0.7, 3)]:
        ref = ml_series_mp(a, x, n_terms=n)
        assert rel_err(sf.ml_series(a, x, n), ref) <= 8 * 2.2e-16


def test_series_overflow_signals_domain_exceeded():
    with pytest.raises(SeriesDomainExceeded) as info:
        sf.ml_series(1.5, 1e6, 400)
    assert info.value.code == "series-domain-exceeded"


@pytest.mark.parametrize("alpha", [0.0, -1.0, 2.0, 2.5, math.nan])
def test_order_validation(alpha):
    with pytest.raises(DomainError):
        sf.mittag_leffler_neg(alpha, 1.0)


def test_negative_x_rejected():
    with pytest.raises(DomainError):
        sf.mittag_leffler_neg(1.5, -1.0)
    with pytest.raises(DomainError):
        sf.ml_series(1.5, -1.0, 3)


def test_asymptotic_pole_term_vanishes():
    x = 1e6
    val, bound = sf.ml_asymptotic(1.5, x, m=2)
    # 1/Gamma(-2) = 0, so only the k = 1 term survives
    assert val == pytest.approx(-1.0 / (2.0 * math.sqrt(math.pi) * x), rel=1e-15)
    assert bound >= 0.0


def test_asymptotic_single_term_within_bound():
    x = 1e10
    val, bound = sf.ml_asymptotic(1.9, x, m=1)
    lead = 1.0 / (x * math.gamma(1.0 - 1.9))
    assert val == pytest.approx(lead, rel=1e-14)
    assert abs(sf.mittag_leffler_neg(1.9, x) - val) <= bound


def test_asymptotic_three_terms_matches_oracle(oracles):
    (x, ref), = oracles["ml"]["1.2-extra"]
    val, _ = sf.ml_asymptotic(1.2, float(x), m=3)
    assert rel_err(val, ref) <= 1e-10


def test_rgamma_zero_at_poles():
    for k in range(0, 6):
        assert sf.rgamma(-k) == 0.0
    assert sf.rgamma(-0.5) == pytest.approx(-1.0 / (2.0 * math.sqrt(math.pi)), rel=1e-15)


def test_examples():
    assert sf.mittag_leffler_neg(1.5, 0.0) == 1.0
    assert sf.mittag_leffler_neg(1.0, 3.0) == pytest.approx(0.049787068367863944, rel=1e-15)


def test_mid_range_example(oracles):
    x, ref = oracles["ml"]["1.5-extra"][0]
    assert rel_err(sf.mittag_leffler_neg(1.5, float(x)), ref) <= 1e-8


@pytest.mark.parametrize("key", ["1.2", "1.9", "0.5", "1.5-extra"])
def test_against_oracle_grid(oracles, key):
    alpha = float(key.split("-")[0])
    worst = max(rel_err(sf.mittag_leffler_neg(alpha, float(x)), ref)
                for x, ref in oracles["ml"][key])
    assert worst <= 1e-10


@pytest.mark.parametrize("x", [0.1, 1.0, 5.0, 20.0])
def test_alpha_one(x):
    assert rel_err(sf.mittag_leffler_neg(1.0, x), math.exp(-x)) <= 1e-10


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
def test_series_and_asymptotic_overlap(alpha):
    # high-precision series vs the large-x expansion (algebraic + exponential part)
    agree = []
    for x in np.logspace(1, 3, 25):
        series = sf._ml_decimal(alpha, x)
        asym = sf.ml_asymptotic(alpha, x)[0] + sf.ml_exponential_part(alpha, x)
        agree.append(abs(series - asym) <= 1e-8 * abs(series))
    assert any(agree)


@pytest.mark.parametrize("alpha", [1.1, 1.5, 1.9])
def test_leading_term_at_large_x(alpha):
    x = 1e10
    ratio = sf.mittag_leffler_neg(alpha, x) / (1.0 / (x * math.gamma(1.0 - alpha)))
    assert abs(ratio - 1.0) <= 1e-3


def test_bounded_on_negative_axis():
    for a in (1.05, 1.5, 1.95):
        vals = sf.mittag_leffler_neg_array(a, np.logspace(-3, 8, 120))
        assert np.all(vals <= 1.0) and np.all(vals >= -1.0)


def test_monotone_for_alpha_at_most_one():
    for a in (0.5, 0.8, 1.0):
        vals = sf.mittag_leffler_neg_array(a, np.linspace(0.0, 1.0, 41))
        assert np.all(np.diff(vals) < 0)


def test_every_regime_is_exercised():
    seen = {sf.ml_regime(1.5, x) for x in (0.0, 1.0, 30.0, 1e6)}
    assert seen == {"zero", "series", "decimal", "asymptotic"}
    assert sf.ml_regime(1.0, 3.0) == "exponential"


def test_thread_safety():
    xs = list(np.logspace(-2, 6, 64))
    serial = [sf.mittag_leffler_neg(1.37, x) for x in xs]
    with ThreadPoolExecutor(max_workers=4) as pool:
        threaded = list(pool.map(lambda x: sf.mittag_leffler_neg(1.37, x), xs))
    assert threaded == serial


@settings(max_examples=30, deadline=None)
@given(alpha=st.floats(1.01, 1.99), x=st.floats(1e-3, 40.0))
def test_random_points_match_mpmath(alpha, x):
    ref = float(ml_series_mp(alpha, x))
    # E crosses zero for some orders; near a crossing only an absolute bound makes sense
    assert abs(sf.mittag_leffler_neg(alpha, x) - ref) <= 1e-10 * abs(ref) + 1e-15
