import itertools
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetareps import intreps
from zetareps.cli import in_region, reference_value
from zetareps.core import ConfigError, EvalOptions, RegionError, SigmaBetween, SigmaGreaterThan, UnknownIdError
from zetareps.reference import PartialSumSpec, eta_reference, partial_sum, zeta_reference

from oracles import ETA, ZETA, rel

GRID = [2, 2.5, 3, 2 + 5j, -0.5, -2.5, 0.5 + 1j, 0.3 + 2j]
LOOSE = EvalOptions(enforce_region=False)


def _in_region_outcomes(s):
    out = {}
    for rep in intreps.catalog():
        if in_region(rep.id, s):
            out[rep.id] = (rep.target, intreps.evaluate(rep.id, s))
    return out


def test_catalog_shape():
    cat = intreps.catalog()
    ids = [r.id for r in cat]
    assert len(cat) >= 33
    assert len(set(ids)) == len(ids)
    assert all(r.formula for r in cat)
    assert all(r.target in intreps.TARGETS for r in cat)


def test_lookup_regions():
    assert intreps.lookup("ZETA_JENSEN_HALF").region == SigmaGreaterThan(1)
    assert intreps.lookup("ZETA_SINH2_SUB_A").region == SigmaBetween(0, 2)
    with pytest.raises(UnknownIdError):
        intreps.lookup("NOT_AN_ENTRY")


def test_evaluate_examples():
    assert abs(intreps.evaluate("ZETA_JENSEN_HALF", 2).value - math.pi**2 / 6) < 1e-10
    assert abs(intreps.evaluate("ZETA_C0", -2).value) < 1e-10
    s = 0.5 + 3j
    assert abs(intreps.evaluate("ETA_HALF", s).value - ETA[s]) < 1e-9
    rem = intreps.evaluate("ZETA_REM_N", 2.5, params_override={"N": 10}).value
    assert abs(rem + partial_sum(2.5, PartialSumSpec(10)) - ZETA[2.5]) < 1e-10


def test_region_enforced():
    with pytest.raises(RegionError):
        intreps.evaluate("ZETA_JENSEN_HALF", 0.5 + 1j)
    out = intreps.evaluate("ZETA_JENSEN_HALF", 0.5 + 1j, LOOSE)
    assert out.in_region is False


def test_parameter_validation():
    with pytest.raises(ConfigError):
        intreps.evaluate("ZETA_FOLDED_C", 2, params_override={"c": 1.5})
    with pytest.raises(ConfigError):
        intreps.evaluate("ZETA_REM_N", 2, params_override={"N": 0})
    with pytest.raises(ConfigError):
        intreps.evaluate("ZETA_JENSEN_HALF", 2, params_override={"c": 0.3})
    with pytest.raises(ConfigError):
        intreps.remainder("ZETA_JENSEN_HALF", 2, 3)


@pytest.mark.parametrize("s", GRID)
def test_cross_representation_agreement(s):
    s = complex(s)
    outs = _in_region_outcomes(s)
    assert len(outs) >= 20
    for rep_id, (target, out) in outs.items():
        ref = reference_value(rep_id, s, out.value)
        assert ref is not None
        assert rel(out.value, ref) < 1e-8, rep_id
    for (a, (ta, oa)), (b, (tb, ob)) in itertools.combinations(outs.items(), 2):
        if ta != tb:
            continue
        d = abs(oa.value - ob.value)
        assert d < 1e-8, (a, b)
        assert d < 10 * (oa.err_estimate + ob.err_estimate), (a, b)


@settings(max_examples=10, deadline=None)
@given(st.floats(0.05, 0.95), st.floats(-40, 40))
def test_sinh2_forms_agree_in_strip(sig, rho):
    s = complex(sig, rho)
    a = intreps.evaluate("ZETA_SINH2_SUB_A", s).value
    b = intreps.evaluate("ZETA_SINH2_SUB_B", s).value
    assert abs(a - b) < 1e-9


@pytest.mark.parametrize("s", [0.5 + 1j, 0.3 + 2j, 0.7 - 4j, 0.5 + 5j])
def test_eta_line_contour_shift(s):
    vals = [intreps.evaluate("ETA_CSC_LINE", s, params_override={"c": c}).value for c in (0.5, 0.3, 0.7, "s")]
    for v in vals:
        assert abs(v - ETA[s]) < 1e-9
    assert intreps.lookup("ETA_CSC_LINE").region_for(s, {"c": "s"}) == SigmaBetween(0.0, 1.0)


def test_eta_line_reciprocal_height():
    s = 0.5 + 5j
    v = intreps.evaluate("ETA_CSC_LINE", s, params_override={"c": "1/rho"}).value
    assert abs(v - ETA[s]) < 1e-8
    with pytest.raises(ConfigError):
        intreps.evaluate("ETA_CSC_LINE", 0.5 + 0.5j, params_override={"c": "1/rho"})


def test_eta_line_complex_c_out_of_strip():
    with pytest.raises(RegionError):
        intreps.evaluate("ETA_CSC_LINE", 2 + 1j, params_override={"c": "s"})


@pytest.mark.parametrize("r", [0.5, 1 / math.pi])
def test_theta_forms_differ_by_residue(r):
    s = 2
    _, cl, tl = intreps.eta_c1_parts(s, r, "L")
    _, cr, tr = intreps.eta_c1_parts(s, r, "R")
    assert abs(tl.value - tr.value) == 0
    assert abs(cl.value - cr.value - 1) < 1e-9
    full_l = intreps.evaluate("ETA_C1_THETA_L", s, params_override={"r": r}).value
    full_r = intreps.evaluate("ETA_C1_THETA_R", s, params_override={"r": r}).value
    assert abs(full_l - full_r) < 1e-9
    assert abs(full_l - ETA[3]) < 1e-9


def test_theta_radius_validation():
    with pytest.raises(ConfigError):
        intreps.eta_c1_parts(2, 1.5, "L")


@pytest.mark.parametrize("s", [1.5, 2, 3 + 1j])
def test_shifted_argument_entries(s):
    s = complex(s)
    ref = complex(mpmath.zeta(s + 1))
    assert abs(intreps.evaluate("ZETA_DCSC", s).value - ref) < 1e-10
    assert abs(intreps.evaluate("ZETA_DERIV_HALF", s).value - ref) < 1e-10


@pytest.mark.parametrize("s", [1.5, 2.5])
def test_next_argument_recursions(s):
    eta_next = intreps.eta_next_via_eta(s, ETA[s]) if s in ETA else None
    e_s = eta_reference(s).value
    assert abs(intreps.eta_next_via_eta(s, e_s) - eta_reference(s + 1).value) < 1e-9
    z_s = zeta_reference(s).value
    assert abs(intreps.zeta_next_via_zeta(s, z_s) - zeta_reference(s + 1).value) < 1e-9
    if eta_next is not None:
        assert abs(eta_next - eta_reference(s + 1).value) < 1e-9


def test_remainder_examples():
    assert abs(intreps.remainder("ZETA_REM_N", 3, 1).value - (ZETA[3] - 1)) < 1e-10
    rem = intreps.remainder("ZETA_REM_HALF_N", 2, 5).value
    assert abs(rem - (ZETA[2] - partial_sum(2, PartialSumSpec(5)))) < 1e-10


@pytest.mark.parametrize("rep_id", intreps.REMAINDER_IDS)
@pytest.mark.parametrize("N", [1, 4, 25])
def test_remainders_against_oracle(rep_id, N):
    s = 2.5 + 1j
    out = intreps.remainder(rep_id, s, N)
    ref = reference_value(rep_id, s, out.value, {"N": N})
    assert abs(out.value - ref) < 1e-10


def test_remainder_cost_flat_in_N():
    small = intreps.remainder("ZETA_REM_N", 2.5, 5).nodes_used
    large = intreps.remainder("ZETA_REM_N", 2.5, 500).nodes_used
    assert large <= 2 * small


@pytest.mark.parametrize("s", [-3.5, -1.5 + 2j, -6 + 0.5j])
def test_left_half_plane_entries(s):
    s = complex(s)
    ref = complex(mpmath.zeta(s))
    for rep_id in ("ZETA_C0", "ZETA_SINH2_NEG", "ZETA_F12", "ZETA_MIXED"):
        assert rel(intreps.evaluate(rep_id, s).value, ref) < 1e-9, rep_id


def test_trivial_zeros():
    for n in (1, 2, 3, 4):
        assert abs(intreps.evaluate("ZETA_C0", -2 * n).value) < 1e-10
