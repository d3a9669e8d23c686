import math

import pytest

import smoothwords as sw


def test_derivative_and_height():
    assert sw.derivative("2112") == "2"
    assert sw.derivative("111") is None
    assert sw.derivative_k("12212212", 4) == ""
    assert sw.height("12212212") == 4
    assert sw.height("111") is None


def test_primitives_and_classes():
    assert set(sw.primitives("2")) == {"11", "22", "211", "112", "221", "122", "2112", "1221"}
    assert set(sw.height_class(1)) == {"1", "2", "12", "21"}
    assert len(sw.height_class(2)) == 18


def test_chains():
    assert sw.chains_of_height(1) == ["1<12", "2<21"]
    assert len(sw.chains_of_height(4)) == sw.mrse_chain_count(4) == 54
    assert sw.verify_partition(5)["passed"]
    assert len(sw.chain_primitives("212<2122<21221")) == 4


def test_enumeration():
    assert sw.gamma(4) == 10
    assert sw.gamma(16, "oracle") == sw.gamma(16)
    stats = sw.compute_stats(10)
    assert stats[3]["gamma"] == 10 and stats[3]["freq_min"] == "1/4"
    assert sw.stats_csv(3).startswith("n,gamma,gamma_prime")
    assert sw.bounds_passed(64)


def test_kolakoski():
    assert sw.kolakoski_prefix(19) == "1221121221221121122"
    assert sw.shallit_iterate(4) == "12211"
    assert abs(sw.alpha_estimate(4) - 80 / 81) < 1e-12


def test_general_and_growth():
    assert sw.gen_derivative("333", "1,3") == "3"
    assert sw.gen_gamma(10, "1,2") == sw.gamma(10)
    lo, hi = sw.theorem6_exponents(0.5)
    assert abs(lo - sw.reference_q()) < 1e-12 and abs(hi - math.log(3) / math.log(1.5)) < 1e-12
    assert sw.sing_exponents("2,3")[0] == pytest.approx(sw.sing_exponents("2,3")[1])


def test_errors():
    with pytest.raises(ValueError):
        sw.height("12x")
    with pytest.raises(RuntimeError):
        sw.height_class(40)
    with pytest.raises(ValueError):
        sw.theorem6_exponents(0.9)
