"""
Complex-argument Bessel functions J_nu and I_nu for orders in (-2, 1).

Small arguments use the power series, large arguments the Hankel
expansion. Every evaluation carries an error estimate and the regime
that produced it.
"""

# Standard Library
import math
import dataclasses

# PIP3 modules
import numpy
import scipy.special

# radius where evaluation moves from the power series to the Hankel expansion;
# series rounding grows like e^|z|, at |z| = 25 it already exceeds ACCURACY_TOLERANCE
SWITCH_RADIUS = 14.0

# minimum number of power series terms
SERIES_TERMS = 64

# cap on Hankel expansion terms, the expansion is divergent
ASYMPTOTIC_MAX_TERMS = 40

# error estimate allowed relative to the local oscillation scale
ACCURACY_TOLERANCE = 1e-8

# constant C in sqrt(r)|J_{-l-1/2}(r)| <= C ((1+r)/r)^l, valid for all |l| < 1/2
ENVELOPE_CONSTANT = 1.25

REGIME_SERIES = "series"
REGIME_ASYMPTOTIC = "asymptotic"

MACHINE_EPS = float(numpy.finfo(float).eps)


#============================================
class BesselDomainError(ValueError):
	"""
	Raised when an argument or order is outside the supported domain.
	"""


#============================================
class BesselAccuracyError(ArithmeticError):
	"""
	Raised when neither regime meets the accuracy tolerance.
	"""


#============================================
@dataclasses.dataclass(frozen=True)
class EvalResult:
	"""
	Value of a special function with its error estimate.

	For array input all three fields are arrays of the input shape.
	"""
	value: complex
	est_error: float
	regime: str


#============================================
def _check_order(nu: float) -> float:
	"""
	Validate a Bessel order and return it as float.
	"""
	nu = float(nu)
	if not math.isfinite(nu):
		raise BesselDomainError(f"Bessel order must be finite, got {nu}")
	if nu < 0 and nu == math.floor(nu):
		raise BesselDomainError(f"negative integer order {nu} is not supported")
	return nu


#============================================
def _prepare_argument(z) -> tuple:
	"""
	Convert an argument to a flat complex array.

	Returns:
		Tuple (z_array, shape, is_scalar).
	"""
	is_scalar = numpy.ndim(z) == 0
	z_input = numpy.asarray(z, dtype=complex)
	z_array = z_input.reshape(-1)
	result_tuple = (z_array, z_input.shape, is_scalar)
	return result_tuple


#============================================
def _package_result(values, errors, regimes, shape, is_scalar) -> EvalResult:
	"""
	Wrap flat arrays into an EvalResult matching the input shape.
	"""
	if is_scalar:
		result = EvalResult(complex(values[0]), float(errors[0]), str(regimes[0]))
		return result
	result = EvalResult(
		values.reshape(shape),
		errors.reshape(shape),
		regimes.reshape(shape),
	)
	return result


#============================================
def _power_series(nu: float, z_array: numpy.ndarray, sign: float, term_count: int) -> tuple:
	"""
	Sum (z/2)^nu * sum_n (sign z^2/4)^n / (n! Gamma(nu+n+1)).

	sign = -1 gives J_nu, sign = +1 gives I_nu. Terms follow the
	ratio recurrence so no factorial is ever formed.

	Args:
		nu: Bessel order.
		z_array: Nonzero complex arguments.
		sign: -1.0 or +1.0.
		term_count: Number of terms to sum.

	Returns:
		Tuple (values, error_estimates).
	"""
	ratio = sign * (z_array / 2.0) ** 2
	term = numpy.full(z_array.shape, scipy.special.rgamma(nu + 1.0), dtype=complex)
	total = term.copy()
	abs_total = numpy.abs(term)
	for n in range(1, term_count):
		term = term * ratio / (n * (nu + n))
		total += term
		abs_total += numpy.abs(term)
	prefactor = numpy.exp(nu * numpy.log(z_array / 2.0))
	values = prefactor * total
	# rounding in the partial sums plus the first dropped term
	errors = numpy.abs(prefactor) * (4.0 * MACHINE_EPS * abs_total + numpy.abs(term))
	result_tuple = (values, errors)
	return result_tuple


#============================================
def hankel_coefficients(nu: float, count: int) -> numpy.ndarray:
	"""
	Coefficients a_k(nu) of the large-argument Hankel expansion.

	a_0 = 1 and a_k = a_{k-1} (4 nu^2 - (2k-1)^2) / (8k).

	Args:
		nu: Bessel order.
		count: Number of coefficients.

	Returns:
		Real array of length count.
	"""
	mu = 4.0 * nu * nu
	coefficients = numpy.ones(count)
	for k in range(1, count):
		coefficients[k] = coefficients[k - 1] * (mu - (2 * k - 1) ** 2) / (8.0 * k)
	return coefficients

# Simple assertion test for hankel_coefficients
assert abs(hankel_coefficients(0.0, 2)[1] + 0.125) < 1e-15

#============================================
def _hankel_expansion(nu: float, z_array: numpy.ndarray) -> tuple:
	"""
	Evaluate J_nu(z) = sqrt(2/(pi z)) (P cos chi - Q sin chi).

	Terms a_k / z^k are added per element until they stop shrinking
	or drop below working precision.

	Returns:
		Tuple (values, error_estimates).
	"""
	coefficients = hankel_coefficients(nu, ASYMPTOTIC_MAX_TERMS)
	z_inverse = 1.0 / z_array
	p_sum = numpy.zeros(z_array.shape, dtype=complex)
	q_sum = numpy.zeros(z_array.shape, dtype=complex)
	active = numpy.ones(z_array.shape, dtype=bool)
	omitted = numpy.zeros(z_array.shape)
	previous = numpy.full(z_array.shape, numpy.inf)
	power = numpy.ones(z_array.shape, dtype=complex)
	for k in range(ASYMPTOTIC_MAX_TERMS):
		term = coefficients[k] * power
		magnitude = numpy.abs(term)
		stopping = active & ((magnitude > previous) | (previous < 1e-17))
		omitted[stopping] = numpy.minimum(magnitude[stopping], previous[stopping])
		active &= ~stopping
		# the sign pattern is + - for P on even k and for Q on odd k
		sign = -1.0 if (k // 2) % 2 else 1.0
		if k % 2 == 0:
			p_sum[active] += sign * term[active]
		else:
			q_sum[active] += sign * term[active]
		previous = numpy.where(active, magnitude, previous)
		power = power * z_inverse
	omitted[active] = previous[active]
	chi = z_array - nu * math.pi / 2.0 - math.pi / 4.0
	amplitude = numpy.sqrt(2.0 / (math.pi * z_array))
	cos_chi = numpy.cos(chi)
	sin_chi = numpy.sin(chi)
	values = amplitude * (p_sum * cos_chi - q_sum * sin_chi)
	trig_scale = numpy.abs(cos_chi) + numpy.abs(sin_chi)
	errors = numpy.abs(amplitude) * trig_scale * (omitted + 4.0 * MACHINE_EPS)
	result_tuple = (values, errors)
	return result_tuple


#============================================
def _check_accuracy(name: str, nu: float, z_array, values, errors, scale) -> None:
	"""
	Raise BesselAccuracyError where the error estimate exceeds tolerance.
	"""
	bad = ~numpy.isfinite(values) | ~numpy.isfinite(errors)
	bad |= errors > ACCURACY_TOLERANCE * scale
	if numpy.any(bad):
		worst = z_array[numpy.argmax(bad)]
		raise BesselAccuracyError(
			f"{name}_{nu:g}({worst}) misses tolerance {ACCURACY_TOLERANCE:g}"
		)


#============================================
def _oscillation_scale(z_array: numpy.ndarray) -> numpy.ndarray:
	"""
	Local size sqrt(2/(pi|z|)) e^{|Im z|} of J_nu away from the origin.
	"""
	modulus = numpy.maximum(numpy.abs(z_array), 1e-300)
	scale = numpy.sqrt(2.0 / (math.pi * modulus)) * numpy.exp(numpy.abs(z_array.imag))
	return scale


#============================================
def bessel_j(nu: float, z, regime: str | None = None) -> EvalResult:
	"""
	Bessel function of the first kind J_nu(z).

	Uses the power series for |z| <= SWITCH_RADIUS and the Hankel
	expansion beyond. Works elementwise on arrays.

	Args:
		nu: Order, finite and not a negative integer.
		z: Complex scalar or array.
		regime: Force REGIME_SERIES or REGIME_ASYMPTOTIC, None selects by |z|.

	Returns:
		EvalResult with value, est_error and regime.
	"""
	nu = _check_order(nu)
	z_array, shape, is_scalar = _prepare_argument(z)
	values = numpy.zeros(z_array.shape, dtype=complex)
	errors = numpy.zeros(z_array.shape)
	regimes = numpy.full(z_array.shape, REGIME_SERIES, dtype=object)

	zero_mask = z_array == 0
	if numpy.any(zero_mask):
		if nu < 0:
			raise BesselDomainError(f"J_{nu:g}(0) is singular for negative order")
		values[zero_mask] = 1.0 if nu == 0 else 0.0

	if regime is None:
		series_mask = numpy.abs(z_array) <= SWITCH_RADIUS
	elif regime == REGIME_SERIES:
		series_mask = numpy.ones(z_array.shape, dtype=bool)
	elif regime == REGIME_ASYMPTOTIC:
		series_mask = numpy.zeros(z_array.shape, dtype=bool)
	else:
		raise ValueError(f"unknown regime {regime!r}")
	series_mask &= ~zero_mask
	asymptotic_mask = ~series_mask & ~zero_mask

	if numpy.any(series_mask):
		series_values, series_errors = _power_series(nu, z_array[series_mask], -1.0, SERIES_TERMS)
		values[series_mask] = series_values
		errors[series_mask] = series_errors

	if numpy.any(asymptotic_mask):
		z_far = z_array[asymptotic_mask]
		if numpy.any((z_far.imag == 0) & (z_far.real < 0)):
			raise BesselDomainError("Hankel expansion needs |arg z| < pi")
		far_values, far_errors = _hankel_expansion(nu, z_far)
		values[asymptotic_mask] = far_values
		errors[asymptotic_mask] = far_errors
		regimes[asymptotic_mask] = REGIME_ASYMPTOTIC

	scale = numpy.maximum(numpy.abs(values), _oscillation_scale(z_array))
	_check_accuracy("J", nu, z_array, values, errors, scale)
	result = _package_result(values, errors, regimes, shape, is_scalar)
	return result

# Simple assertion test for bessel_j: J_{1/2}(pi/2) = 2/pi
assert abs(bessel_j(0.5, math.pi / 2).value - 2.0 / math.pi) < 1e-13

#============================================
def bessel_j_deriv(nu: float, z, regime: str | None = None) -> EvalResult:
	"""
	Derivative J'_nu(z) = J_{nu-1}(z) - (nu/z) J_nu(z).

	Args:
		nu: Order.
		z: Complex scalar or array, nonzero.
		regime: Passed through to bessel_j.

	Returns:
		EvalResult for the derivative.
	"""
	nu = _check_order(nu)
	z_array, shape, is_scalar = _prepare_argument(z)
	if numpy.any(z_array == 0):
		raise BesselDomainError(f"J'_{nu:g}(0) is singular for |nu| < 1")
	lower = bessel_j(nu - 1.0, z_array, regime)
	center = bessel_j(nu, z_array, regime)
	values = lower.value - (nu / z_array) * center.value
	errors = lower.est_error + numpy.abs(nu / z_array) * center.est_error
	result = _package_result(values, errors, center.regime, shape, is_scalar)
	return result


#============================================
def _bessel_i_by_rotation(nu: float, z_array: numpy.ndarray) -> tuple:
	"""
	I_nu(z) from J_nu on the rotated argument.

	I_nu(z) = e^{-i nu pi/2} J_nu(iz) for -pi < arg z <= pi/2 and
	I_nu(z) = e^{i nu pi/2} J_nu(-iz) for -pi/2 < arg z <= pi. The
	upper half plane and the negative axis take the second form so
	J never sees a negative real argument.

	Returns:
		Tuple (values, error_estimates, regimes).
	"""
	upper = (z_array.imag > 0) | ((z_array.imag == 0) & (z_array.real < 0))
	rotation = numpy.where(upper, -1j, 1j)
	phase = numpy.exp(numpy.where(upper, 1j, -1j) * nu * math.pi / 2.0)
	evaluation = bessel_j(nu, rotation * z_array)
	result_tuple = (phase * evaluation.value, evaluation.est_error, evaluation.regime)
	return result_tuple


#============================================
def bessel_i(nu: float, z) -> EvalResult:
	"""
	Modified Bessel function I_nu(z).

	The power series is tried first, with a term count growing with |z|
	so it is always truncated past its peak. Arguments with large
	imaginary part lose digits to cancellation there and are evaluated
	through J_nu on the rotated argument instead, which reaches the
	Hankel expansion.

	Args:
		nu: Order.
		z: Complex scalar or array.

	Returns:
		EvalResult; regime is the J regime for rotated arguments.
	"""
	nu = _check_order(nu)
	z_array, shape, is_scalar = _prepare_argument(z)
	values = numpy.zeros(z_array.shape, dtype=complex)
	errors = numpy.zeros(z_array.shape)
	regimes = numpy.full(z_array.shape, REGIME_SERIES, dtype=object)

	zero_mask = z_array == 0
	if numpy.any(zero_mask):
		if nu < 0:
			raise BesselDomainError(f"I_{nu:g}(0) is singular for negative order")
		values[zero_mask] = 1.0 if nu == 0 else 0.0

	nonzero = ~zero_mask
	if numpy.any(nonzero):
		largest = float(numpy.max(numpy.abs(z_array[nonzero])))
		term_count = max(SERIES_TERMS, int(2.0 * largest) + 30)
		series_values, series_errors = _power_series(nu, z_array[nonzero], 1.0, term_count)
		values[nonzero] = series_values
		errors[nonzero] = series_errors

	modulus = numpy.maximum(numpy.abs(z_array), 1.0)
	growth = numpy.exp(numpy.abs(z_array.real)) / numpy.sqrt(2.0 * math.pi * modulus)
	scale = numpy.maximum(numpy.abs(values), growth)
	missed = nonzero & (~numpy.isfinite(values) | (errors > ACCURACY_TOLERANCE * scale))
	if numpy.any(missed):
		rotated_values, rotated_errors, rotated_regimes = _bessel_i_by_rotation(nu, z_array[missed])
		values[missed] = rotated_values
		errors[missed] = rotated_errors
		regimes[missed] = rotated_regimes
		scale = numpy.maximum(numpy.abs(values), growth)
	_check_accuracy("I", nu, z_array, values, errors, scale)
	result = _package_result(values, errors, regimes, shape, is_scalar)
	return result

# Simple assertion test for bessel_i: I_{1/2}(1) = sqrt(2/pi) sinh(1)
assert abs(bessel_i(0.5, 1.0).value - math.sqrt(2.0 / math.pi) * math.sinh(1.0)) < 1e-13

#============================================
def envelope(nu: float, r):
	"""
	Return sqrt(r) |J_nu(r)| for r > 0.

	Args:
		nu: Order.
		r: Positive real scalar or array.

	Returns:
		Real scalar or array.
	"""
	r_array = numpy.asarray(r, dtype=float)
	if numpy.any(r_array <= 0):
		raise BesselDomainError("envelope needs r > 0")
	evaluation = bessel_j(nu, r_array)
	values = numpy.sqrt(r_array) * numpy.abs(evaluation.value)
	if numpy.ndim(r) == 0:
		return float(values)
	return values


#============================================
def envelope_bound(l: float, r):
	"""
	Upper bound ENVELOPE_CONSTANT ((1+r)/r)^l for envelope(-l-1/2, r).
	"""
	r_array = numpy.asarray(r, dtype=float)
	bound = ENVELOPE_CONSTANT * ((1.0 + r_array) / r_array) ** l
	if numpy.ndim(r) == 0:
		return float(bound)
	return bound
