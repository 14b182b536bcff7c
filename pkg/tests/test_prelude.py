import pytest

from gst.errors import UnknownPreludeName
from gst.evaluator import deep
from gst.prelude import FIXED_NAMES, check_registry, prelude_term, psi_term, seq_term, theta_term
from gst.syntax import BAIRE, NAT, Arrow, typecheck

from prelude_checks import CHECKS


def test_registry_typechecks():
    check_registry()
    for name in FIXED_NAMES:
        ty, tm = prelude_term(name)
        assert typecheck((), tm) == ty


def test_parametric_entries():
    for sigma in (NAT, BAIRE, Arrow(BAIRE, NAT)):
        ty, tm = psi_term(sigma)
        assert typecheck((), tm) == ty
        ty, tm = prelude_term("ifz", sigma)
        assert ty == Arrow(NAT, Arrow(sigma, Arrow(sigma, sigma)))


def test_lookup_errors():
    with pytest.raises(UnknownPreludeName):
        prelude_term("nope")
    with pytest.raises(UnknownPreludeName):
        prelude_term("ifz")
    with pytest.raises(UnknownPreludeName):
        prelude_term("max", NAT)


def test_aliases():
    assert seq_term("hat") == prelude_term("seq_hat")
    assert theta_term() == prelude_term("theta")


@pytest.mark.parametrize("name", sorted(CHECKS))
def test_defining_equations(name):
    assert deep(CHECKS[name])() == []
