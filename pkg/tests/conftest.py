from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from yangbraid.cartan import all_types, cartan_data
from yangbraid.exact import Poly, RootMultiset
from yangbraid.qfield import QFrac
from yangbraid.qloop import QRootMultiset

settings.register_profile(
    "exact",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

SMALL_TYPES = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2")

types = st.sampled_from(SMALL_TYPES).map(cartan_data)

rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4))

# roots on a half-integer grid collide often, which is where the formulas get interesting
grid_roots = st.integers(-6, 6).map(lambda k: Fraction(k, 2))

hbars = st.sampled_from((Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(1, 3)))


def multisets(roots=grid_roots, positive=False, max_size=4):
    mult = st.integers(1, 2) if positive else st.integers(-2, 2).filter(bool)
    return st.lists(st.tuples(roots, mult), max_size=max_size).map(RootMultiset)


@st.composite
def typed_tuples(draw, positive=False, type_strategy=types):
    cd = draw(type_strategy)
    mu = tuple(draw(multisets(positive=positive)) for _ in cd.nodes)
    return cd, mu


def words(cd, max_size=8):
    return st.lists(st.integers(1, cd.n), max_size=max_size).map(tuple)


RANK3 = [cartan_data(t) for t in all_types(3)]

qfracs = st.tuples(
    st.lists(st.integers(-3, 3), max_size=3),
    st.lists(st.integers(-3, 3), min_size=1, max_size=3).filter(any),
).map(lambda nd: QFrac(Poly(nd[0]), Poly(nd[1])))

q_roots = st.tuples(st.sampled_from((1, 2, -1, Fraction(1, 2))), st.integers(-4, 4))


@st.composite
def drinfeld(draw, cd_strategy=st.sampled_from(RANK3)):
    cd = draw(cd_strategy)
    P = tuple(
        QRootMultiset(draw(st.lists(st.tuples(q_roots, st.integers(1, 2)), max_size=2)))
        for _ in cd.nodes
    )
    return cd, P


# -- acceptance reporting ----------------------------------------------------

_ACCEPTANCE: dict = {}
_TITLES: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title = marker.args
    ok, seconds = _ACCEPTANCE.get(number, (True, 0.0))
    _ACCEPTANCE[number] = (ok and report.passed, seconds + report.duration)
    _TITLES[number] = title


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, seconds = _ACCEPTANCE[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {_TITLES[number]} ({seconds:.1f}s)")
