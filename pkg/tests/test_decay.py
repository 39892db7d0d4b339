# Standard Library
import math

# PIP3 modules
import numpy
import pytest

# local repo modules
import decay
import specfun
import spectral
import evolution

DEFAULT_SPEC = evolution.QuadratureSpec()
DEFAULT_GRID = decay.make_log_grid(decay.DEFAULT_X_MIN, decay.DEFAULT_X_MAX, decay.DEFAULT_X_COUNT)
DEFAULT_TIMES = decay.make_time_grid(decay.DEFAULT_T_MIN, decay.DEFAULT_T_MAX, decay.DEFAULT_T_COUNT)


#============================================
def test_fit_recovers_power_law() -> None:
	times = numpy.geomspace(1.0, 1000.0, 8)
	slope, residual = decay.fit_decay_exponent(list(zip(times, 0.7 * times ** -0.5)))
	assert abs(slope + 0.5) < 1e-12
	assert residual < 1e-12


#============================================
@pytest.mark.parametrize(
	"points",
	[
		[(10.0, 1.0), (100.0, 0.5), (1000.0, 0.2)],
		[(10.0, 1.0), (20.0, 0.9), (40.0, 0.8), (80.0, 0.7)],
		[(10.0, 1.0), (100.0, 0.0), (1000.0, 0.2), (10000.0, 0.1)],
	],
)
def test_fit_rejects_ill_conditioned_scans(points: list) -> None:
	with pytest.raises(decay.FitError):
		decay.fit_decay_exponent(points)


#============================================
def test_weight_spec_rejects_unknown_kind() -> None:
	with pytest.raises(ValueError):
		decay.WeightSpec("l2", 0.1)


#============================================
def test_friedrichs_weights() -> None:
	w = decay.WeightSpec(decay.WEIGHT_FRIEDRICHS, 0.25)
	source, target = decay.weight_values(w, numpy.array([0.25, 4.0]))
	assert numpy.allclose(source, [math.sqrt(2.0), 1.0])
	assert numpy.allclose(target, [1.0 / math.sqrt(2.0), 1.0])
	flat_source, flat_target = decay.weight_values(decay.WeightSpec(decay.WEIGHT_UNWEIGHTED, 0.25), [0.25, 4.0])
	assert numpy.all(flat_source == 1.0)
	assert numpy.all(flat_target == 1.0)


#============================================
def test_grids() -> None:
	grid = decay.make_log_grid(0.1, 10.0, 3)
	assert len(grid) == 9
	assert grid[0] == pytest.approx((0.1, 0.1))
	assert grid[4] == pytest.approx((1.0, 1.0))
	assert numpy.allclose(decay.make_time_grid(1.0, 3.0, 3, log_spaced=False), [1.0, 2.0, 3.0])
	with pytest.raises(ValueError):
		decay.make_log_grid(0.0, 1.0, 3)
	with pytest.raises(ValueError):
		decay.make_time_grid(5.0, 1.0, 3)


#============================================
def test_weighted_sup_l_zero_neumann() -> None:
	params = spectral.make_params(0.0, math.pi / 2.0)
	w = decay.WeightSpec(decay.WEIGHT_UNWEIGHTED, 0.0)
	t = 50.0
	value = decay.weighted_sup(params, DEFAULT_SPEC, t, ((0.05, 0.05), (1.0, 2.0)), w)
	assert value == pytest.approx((math.pi * t) ** -0.5, rel=1e-3)


#============================================
def test_refined_grid_never_lowers_sup() -> None:
	params = spectral.make_params(0.2, math.pi / 2.0)
	w = decay.WeightSpec(decay.WEIGHT_FRIEDRICHS, 0.2)
	coarse = decay.make_log_grid(0.1, 10.0, 5)
	refined = coarse + decay.make_log_grid(0.07, 13.0, 8)
	for t in (1.0, 30.0):
		assert decay.weighted_sup(params, DEFAULT_SPEC, t, refined, w) >= decay.weighted_sup(params, DEFAULT_SPEC, t, coarse, w)


#============================================
def test_weighted_scan_exponent_at_quarter_turn() -> None:
	params = spectral.make_params(0.25, math.pi / 2.0)
	w = decay.WeightSpec(decay.WEIGHT_FRIEDRICHS, 0.25)
	scan = decay.scan_decay(params, DEFAULT_SPEC, DEFAULT_TIMES, DEFAULT_GRID, w)
	assert abs(scan.fitted_exponent - decay.expected_exponent(params, w)) < 0.05
	assert abs(scan.fitted_exponent + 0.25) < 0.05
	assert len(scan.norms) == decay.DEFAULT_T_COUNT
	assert all(norm > 0 for norm in scan.norms)


#============================================
def test_unweighted_scan_negative_l() -> None:
	params = spectral.make_params(-0.25, math.pi / 2.0)
	w = decay.WeightSpec(decay.WEIGHT_UNWEIGHTED, -0.25)
	scan = decay.scan_decay(params, DEFAULT_SPEC, DEFAULT_TIMES, DEFAULT_GRID, w)
	assert abs(scan.fitted_exponent + 0.5) < 0.05
	assert decay.expected_exponent(params, w) == -0.5


#============================================
def test_dirichlet_scan_reaches_half_power() -> None:
	params = spectral.make_params(0.0, 0.0)
	w = decay.WeightSpec(decay.WEIGHT_UNWEIGHTED, 0.0)
	times = decay.make_time_grid(0.5, 20.0, 8)
	scan = decay.scan_decay(params, DEFAULT_SPEC, times, DEFAULT_GRID, w)
	assert abs(scan.fitted_exponent + 0.5) < 0.02


#============================================
def test_scan_rejects_unsorted_times() -> None:
	params = spectral.make_params(0.0, math.pi / 2.0)
	w = decay.WeightSpec(decay.WEIGHT_UNWEIGHTED, 0.0)
	with pytest.raises(ValueError):
		decay.scan_decay(params, DEFAULT_SPEC, [10.0, 5.0, 100.0, 1000.0], DEFAULT_GRID, w)


#============================================
@pytest.mark.slow
def test_quadrature_scan_and_bound_state_control() -> None:
	params = spectral.make_params(0.1, 2.0)
	w = decay.WeightSpec(decay.WEIGHT_UNWEIGHTED, 0.1)
	grid = decay.make_log_grid(0.5, 4.0, 3)
	times = decay.make_time_grid(10.0, 1000.0, 4)
	continuous = decay.scan_decay(params, DEFAULT_SPEC, times, grid, w, workers=2)
	assert continuous.fitted_exponent <= -0.45
	with_bound_state = decay.scan_decay(params, DEFAULT_SPEC, times, grid, w, continuous_only=False)
	assert abs(with_bound_state.fitted_exponent) < 0.15
	assert not with_bound_state.continuous_only


#============================================
@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.5, 2.0, 2.8])
def test_friedrichs_weighted_scan_off_quarter_turn(alpha: float) -> None:
	# the grid must reach x y of order t for the late-time slope to show
	params = spectral.make_params(0.25, alpha)
	w = decay.WeightSpec(decay.WEIGHT_FRIEDRICHS, 0.25)
	grid = decay.make_log_grid(decay.DEFAULT_X_MIN, 60.0, decay.DEFAULT_X_COUNT)
	scan = decay.scan_decay(params, DEFAULT_SPEC, DEFAULT_TIMES, grid, w, workers=4)
	assert decay.expected_exponent(params, w) == -0.5
	assert abs(scan.fitted_exponent + 0.5) < 0.07


#============================================
def test_quarter_turn_keeps_slower_exponent() -> None:
	w = decay.WeightSpec(decay.WEIGHT_FRIEDRICHS, 0.25)
	assert decay.expected_exponent(spectral.make_params(0.25, math.pi / 2.0), w) == -0.25
	assert decay.expected_exponent(spectral.make_params(-0.25, math.pi / 2.0), w) == -0.5
	assert decay.expected_exponent(spectral.make_params(0.25, 2.0), w) == -0.5


#============================================
def test_kernel_on_scattered_pairs() -> None:
	params = spectral.make_params(0.3, math.pi / 2.0)
	pairs = ((0.2, 3.0), (1.5, 0.4), (0.2, 0.4), (2.5, 2.5))
	magnitudes = decay.kernel_on_pairs(params, DEFAULT_SPEC, 4.0, pairs)
	for (x, y), magnitude in zip(pairs, magnitudes):
		expected = abs(evolution.continuous_kernel(params, DEFAULT_SPEC, 4.0, x, y).value)
		assert magnitude == pytest.approx(expected, rel=1e-12)


#============================================
@pytest.mark.parametrize("l", [-0.4, 0.0, 0.4])
def test_upper_bound_holds(l: float) -> None:
	params = spectral.make_params(l, math.pi / 2.0)
	report = decay.check_upper_bound(params, [1.0, 10.0, 100.0], DEFAULT_GRID)
	assert report.passed
	assert report.constant <= specfun.ENVELOPE_CONSTANT
	assert len(report.slice_constants) == 3


#============================================
def test_upper_bound_l_zero_constant_is_stable() -> None:
	params = spectral.make_params(0.0, math.pi / 2.0)
	report = decay.check_upper_bound(params, [1.0, 10.0, 100.0], DEFAULT_GRID)
	assert report.stable
	assert report.slice_ratio < 1.05
	assert report.constant == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-3)


#============================================
@pytest.mark.parametrize("l", [0.25, 0.4])
def test_sharpness_constant(l: float) -> None:
	params = spectral.make_params(l, math.pi / 2.0)
	report = decay.check_sharpness(params, [10.0, 100.0, 1000.0])
	assert report.passed
	assert report.max_drift_per_decade < decay.SHARPNESS_DRIFT_LIMIT
	assert report.constant == pytest.approx(decay.small_argument_constant(l), rel=1e-2)


#============================================
def test_sharpness_constant_is_continuous_in_l() -> None:
	times = [10.0, 100.0, 1000.0]
	low = decay.check_sharpness(spectral.make_params(0.05, math.pi / 2.0), times)
	high = decay.check_sharpness(spectral.make_params(0.1, math.pi / 2.0), times)
	assert abs(low.constant - high.constant) < 0.1


#============================================
def test_sharpness_needs_positive_l() -> None:
	with pytest.raises(spectral.ParameterError):
		decay.check_sharpness(spectral.make_params(0.0, math.pi / 2.0), [10.0, 100.0])


#============================================
def test_sharpness_needs_points_below_diagonal() -> None:
	with pytest.raises(ValueError):
		decay.check_sharpness(spectral.make_params(0.2, math.pi / 2.0), [1.0, 2.0], points=((5.0, 5.0),))
