# Standard Library
import math

# PIP3 modules
import pytest

# local repo modules
import spectral
import evolution
import validate_suite

CHEAP_CHECKS = [
	validate_suite.check_bessel_wronskian,
	validate_suite.check_bessel_closed_forms,
	validate_suite.check_regime_overlap,
	validate_suite.check_envelope_bound,
	validate_suite.check_solution_wronskian,
	validate_suite.check_weyl_alignment,
	validate_suite.check_boundary_functionals,
	validate_suite.check_image_method,
	validate_suite.check_eigenvalues,
	validate_suite.check_density_limit,
]


#============================================
@pytest.mark.parametrize("check", CHEAP_CHECKS, ids=lambda check: check.__name__)
def test_cheap_check_passes(check) -> None:
	result = check()
	assert result.passed, result
	assert result.measured <= result.tolerance


#============================================
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_herglotz_check(seed: int) -> None:
	result = validate_suite.check_herglotz(seed)
	assert result.passed
	assert result.detail == f"seed {seed}"


#============================================
def test_decay_bound_checks_pass() -> None:
	results = validate_suite.check_decay_bounds()
	assert [result.name for result in results] == ["upper_bound", "upper_bound_slices", "sharpness_drift"]
	assert all(result.passed for result in results)


#============================================
def test_fresnel_checks_pass() -> None:
	results = validate_suite.check_fresnel()
	assert [result.name for result in results] == ["fresnel_damped", "fresnel_limit"]
	assert all(result.passed for result in results)


#============================================
def test_damped_checks_pass() -> None:
	assert validate_suite.check_spectral_function().passed
	assert validate_suite.check_damped_quadrature().passed


#============================================
def test_perturbed_normalization_fails_boundary_check(monkeypatch) -> None:
	original = spectral.normalization_constant
	monkeypatch.setattr(spectral, "normalization_constant", lambda l: original(l) * (1.0 + 1e-3))
	result = validate_suite.check_boundary_functionals()
	assert not result.passed
	assert result.measured > 5e-4


#============================================
def test_perturbed_branch_fails_image_check(monkeypatch) -> None:
	original = evolution.quarter_turn_power
	monkeypatch.setattr(evolution, "quarter_turn_power", lambda s: original(s + 0.01))
	result = validate_suite.check_image_method()
	assert not result.passed


#============================================
def test_guarded_check_reports_exception() -> None:
	def broken() -> validate_suite.CheckResult:
		raise spectral.RootFindError("no sign change")

	results = validate_suite._guarded("broken", broken)
	assert len(results) == 1
	assert not results[0].passed
	assert math.isnan(results[0].measured)
	assert "RootFindError" in results[0].detail


#============================================
def test_check_result_row() -> None:
	result = validate_suite._result("demo", 0.5, 1.0, "note")
	assert result.as_row() == ("demo", True, 0.5, 1.0, "note")
	assert not validate_suite._result("nan", math.nan, 1.0).passed


#============================================
def test_suite_without_quadrature() -> None:
	names = []
	results = validate_suite.run_suite(seed=3, include_quadrature=False, progress=names.append)
	assert "fresnel" not in names
	assert names[0] == "bessel_wronskian"
	assert all(result.passed for result in results), [result for result in results if not result.passed]


#============================================
@pytest.mark.slow
def test_full_suite_passes() -> None:
	results = validate_suite.run_suite(seed=0)
	failed = [result for result in results if not result.passed]
	assert not failed, failed
	names = {result.name for result in results}
	assert {"split_recombination", "van_der_corput", "quadrature_vs_closed"} <= names
