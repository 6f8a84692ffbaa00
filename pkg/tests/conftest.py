"""Shared parameter configurations for the test suite.

The four "interesting" configurations exercise the main regimes: one
fully formal orbit at a root of unity, one integral at e = infinity,
two integral at even finite e with mirrored alpha markers, and one
integral at odd e (hyperplanes on odd positions).  The generic
configuration keeps every special point on its own orbit so that
nothing ever collides.
"""

import pytest

from blobalg.params import Formal, Integral, Paired, make_config


def _cfg_e5_formal():
    return make_config(
        5,
        {"alpha1": Formal("A", 0), "alpha2": Formal("A", 4), "theta": Formal("A", 6)},
        {"A": Paired("A*")},
    )


def _cfg_einf_integral():
    return make_config(
        None,
        {"alpha1": Integral(4), "alpha2": Integral(8), "theta": Formal("C", 0)},
        {"C": Paired("C*")},
    )


def _cfg_e14_mirror():
    # alpha markers swapped relative to cfg_e14_fig
    return make_config(
        14,
        {"alpha1": Integral(8), "alpha2": Integral(4), "theta": Formal("C", 0)},
        {"C": Paired("C*")},
    )


def _cfg_e14_fig():
    return make_config(
        14,
        {"alpha1": Integral(4), "alpha2": Integral(8), "theta": Formal("C", 0)},
        {"C": Paired("C*")},
    )


def _cfg_e7():
    return make_config(
        7,
        {"alpha1": Integral(4), "alpha2": Integral(3), "theta": Formal("C", 0)},
        {"C": Paired("C*")},
    )


def _cfg_generic():
    return make_config(
        None,
        {"alpha1": Formal("A", 0), "alpha2": Formal("B", 0), "theta": Formal("C", 0)},
        {"A": Paired("A*"), "B": Paired("B*"), "C": Paired("C*")},
    )


CONFIG_FACTORIES = {
    "e5_formal": _cfg_e5_formal,
    "einf_integral": _cfg_einf_integral,
    "e14_mirror": _cfg_e14_mirror,
    "e14_fig": _cfg_e14_fig,
    "e7": _cfg_e7,
    "generic": _cfg_generic,
}


@pytest.fixture
def cfg_e5_formal():
    return _cfg_e5_formal()


@pytest.fixture
def cfg_einf_integral():
    return _cfg_einf_integral()


@pytest.fixture
def cfg_e14_mirror():
    return _cfg_e14_mirror()


@pytest.fixture
def cfg_e14_fig():
    return _cfg_e14_fig()


@pytest.fixture
def cfg_e7():
    return _cfg_e7()


@pytest.fixture
def cfg_generic():
    return _cfg_generic()


@pytest.fixture(params=sorted(CONFIG_FACTORIES))
def any_cfg(request):
    return CONFIG_FACTORIES[request.param]()
