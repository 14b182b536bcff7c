import pytest
from hypothesis import HealthCheck, settings

from gst import corpus_path
from gst.surface import parse
from gst.syntax import BAIRE, NAT, Arrow, term_has_sum

settings.register_profile(
    "gst", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("gst")

FN = Arrow(BAIRE, NAT)


def load(name="paper.gst"):
    return parse(corpus_path(name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def corpus():
    return load()


@pytest.fixture(scope="session")
def max_file():
    return load("max.gst")


@pytest.fixture(scope="session")
def fn_decls(corpus):
    """Corpus functionals of type (N -> N) -> N."""
    return [d for d in corpus if d.ty == FN]


@pytest.fixture(scope="session")
def simple_fn_decls(fn_decls):
    """Functionals without sums, usable with the simple nuclei."""
    return [d for d in fn_decls if not term_has_sum(d.body)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
