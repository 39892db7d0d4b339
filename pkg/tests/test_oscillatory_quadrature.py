# Standard Library
import math

# PIP3 modules
import numpy
import pytest
import scipy.special

# local repo modules
import oscillatory_quadrature


#============================================
def constant_amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
	return numpy.ones_like(k_values)


#============================================
def test_default_first_rung() -> None:
	assert oscillatory_quadrature.default_first_rung(2.0, 0.0) == 0.5
	assert oscillatory_quadrature.default_first_rung(1.0, 8.0) == pytest.approx(0.0625)


#============================================
def test_geometric_ladder_halves() -> None:
	ladder = oscillatory_quadrature.geometric_ladder(0.4, 4)
	assert numpy.allclose(ladder, [0.4, 0.2, 0.1, 0.05])


#============================================
def test_damping_cutoff_reaches_exponent() -> None:
	cutoff = oscillatory_quadrature.damping_cutoff(0.01)
	assert 0.01 * cutoff ** 2 == pytest.approx(oscillatory_quadrature.DAMPING_EXPONENT_CUT)


#============================================
@pytest.mark.parametrize("t, spread", [(1.0, 0.0), (0.3, 5.0), (20.0, 1.0)])
def test_panel_grid_covers_interval(t: float, spread: float) -> None:
	grid = oscillatory_quadrature.build_panel_grid(t, spread, 30.0, 8)
	assert numpy.all(grid.nodes > grid.inner_edge)
	assert numpy.all(grid.nodes < grid.cutoff)
	assert numpy.sum(grid.weights) == pytest.approx(grid.cutoff - grid.inner_edge, rel=1e-12)
	assert grid.panel_count * oscillatory_quadrature.GAUSS_NODES == len(grid.nodes)


#============================================
def test_extrapolation_weights_reproduce_polynomials() -> None:
	ladder = oscillatory_quadrature.geometric_ladder(0.5, 6)
	weights = oscillatory_quadrature.extrapolation_weights(ladder, 5)
	assert numpy.sum(weights) == pytest.approx(1.0, abs=1e-10)
	assert abs(weights @ ladder) < 1e-10


#============================================
def test_extrapolation_needs_enough_rungs() -> None:
	with pytest.raises(oscillatory_quadrature.QuadratureError):
		oscillatory_quadrature.extrapolation_weights(numpy.array([1.0, 0.5, 0.25]), 5)


#============================================
@pytest.mark.parametrize("eps", [0.1, 0.5, 2.0])
def test_damped_gaussian_integral(eps: float) -> None:
	t = 1.0
	values, bounds, _ = oscillatory_quadrature.damped_integrals(constant_amplitude, t, 0.0, [eps], 8)
	expected = 0.5 * numpy.sqrt(math.pi / complex(eps, t))
	assert abs(values[0, 0] - expected) < 1e-10
	assert bounds[0, 0] < 1e-8


#============================================
@pytest.mark.parametrize("power", [-0.5, 0.8])
def test_damped_power_amplitude(power: float) -> None:
	p = complex(0.5, 1.0)

	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		return k_values ** power

	values, _, _ = oscillatory_quadrature.damped_integrals(amplitude, 1.0, 0.0, [0.5], 8)
	expected = scipy.special.gamma((power + 1.0) / 2.0) / (2.0 * p ** ((power + 1.0) / 2.0))
	assert abs(values[0, 0] - expected) < 1e-9 * abs(expected)


#============================================
@pytest.mark.parametrize("t, spread", [(1000.0, 0.1), (20.0, 1.0), (0.3, 5.0)])
def test_first_phase_panel_is_graded(t: float, spread: float) -> None:
	head = oscillatory_quadrature.head_position(t, spread, 50.0, 8)
	phase = t * head * head + spread * head + 2.0 * math.pi / 8
	next_edge = 2.0 * phase / (spread + math.sqrt(spread * spread + 4.0 * t * phase))
	assert next_edge - head <= 0.6 * head
	assert head <= 2.0 * oscillatory_quadrature.MAX_PANEL_WIDTH


#============================================
def test_late_time_singular_amplitude() -> None:
	t = 1000.0

	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		return k_values ** -0.5

	eps_values = [t / 4.0, t / 128.0]
	values, _, _ = oscillatory_quadrature.damped_integrals(amplitude, t, 0.1, eps_values, 8)
	for index, eps in enumerate(eps_values):
		p = complex(eps, t)
		expected = scipy.special.gamma(0.25) / (2.0 * p ** 0.25)
		assert abs(values[index, 0] - expected) < 1e-9 * abs(expected)


#============================================
def test_error_estimate_sees_every_lower_fit() -> None:
	ladder = oscillatory_quadrature.geometric_ladder(1.0, 6)
	# degree 5 fits exactly, each lower fit leaves part of the eps^5 term
	values = 1.0 + ladder ** 5
	limit, error = oscillatory_quadrature.extrapolate_to_zero(ladder, values, 5)
	assert abs(limit - 1.0) < 1e-10
	low_full = oscillatory_quadrature.extrapolation_weights(ladder, 4) @ values
	assert error >= abs(low_full - limit) - 1e-15


#============================================
def test_undamped_limit_of_gaussian() -> None:
	t = 1.0
	ladder = oscillatory_quadrature.geometric_ladder(0.25, 6)
	result = oscillatory_quadrature.oscillatory_integral(constant_amplitude, t, 0.0, ladder, 5, 8)
	expected = 0.5 * math.sqrt(math.pi / t) * numpy.exp(-0.25j * math.pi)
	assert abs(result.values[0] - expected) < 1e-7
	assert result.est_errors[0] < 1e-5
	assert result.damped.shape == (6, 1)


#============================================
def test_ladder_must_decrease() -> None:
	with pytest.raises(oscillatory_quadrature.QuadratureError):
		oscillatory_quadrature.oscillatory_integral(
			constant_amplitude, 1.0, 0.0, numpy.array([0.1, 0.2, 0.3, 0.4]), 2, 8,
		)


#============================================
def test_damped_integrals_reject_bad_arguments() -> None:
	with pytest.raises(oscillatory_quadrature.QuadratureError):
		oscillatory_quadrature.damped_integrals(constant_amplitude, 0.0, 0.0, [0.1], 8)
	with pytest.raises(oscillatory_quadrature.QuadratureError):
		oscillatory_quadrature.damped_integrals(constant_amplitude, 1.0, 0.0, [0.0], 8)


#============================================
def test_non_integrable_amplitude_raises() -> None:
	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		return 1.0 / k_values

	with pytest.raises(oscillatory_quadrature.QuadratureError):
		oscillatory_quadrature.damped_integrals(amplitude, 1.0, 0.0, [0.5], 8)


#============================================
def test_k_max_caps_cutoff() -> None:
	_, _, grid = oscillatory_quadrature.damped_integrals(constant_amplitude, 1.0, 0.0, [0.01], 8, k_max=12.0)
	assert grid.cutoff == 12.0


#============================================
def test_wiener_proxy_bounds_samples() -> None:
	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		return numpy.vstack([numpy.ones_like(k_values), 3.0 * numpy.cos(2.0 * k_values)])

	proxy = oscillatory_quadrature.wiener_norm_proxy(amplitude, 10.0)
	assert proxy[0] == pytest.approx(1.0, abs=1e-12)
	assert proxy[1] >= 3.0 * numpy.max(numpy.abs(numpy.cos(2.0 * numpy.linspace(0.0, 10.0, 50)))) - 1e-3
