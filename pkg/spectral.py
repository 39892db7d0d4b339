"""
Stationary spectral data of H_alpha = -d^2/dx^2 + l(l+1)/x^2 on (0, inf).

Branch convention: sqrt(z) and (-z)^{l+1/2} use the principal logarithm,
so the cut of the Weyl function lies on [0, inf). Values on the cut are
only available through an explicit plus_i0 flag, meaning z = lambda + i0.
"""

# Standard Library
import math
import dataclasses

# PIP3 modules
import numpy
import scipy.special
import scipy.optimize
import scipy.integrate

# local repo modules
import specfun

# distance to the eigenvalue treated as a pole of m_alpha
POLE_TOLERANCE = 1e-12

# x ladder for the boundary functionals, x_n = BOUNDARY_DELTA 2^-n
BOUNDARY_DELTA = 0.1
BOUNDARY_LADDER_SIZE = 12

# largest correction exponent kept in the boundary extrapolation
BOUNDARY_MAX_EXPONENT = 6.0

# bound state norm integrates to NORM_CUT_SCALE / kappa, then adds the tail
NORM_CUT_SCALE = 15.0


#============================================
class ParameterError(ValueError):
	"""
	Raised for l outside (-1/2, 1/2), alpha outside [0, pi) or x <= 0.
	"""


#============================================
class BranchCutError(ValueError):
	"""
	Raised when z lies on [0, inf) without an explicit +i0 side.
	"""


#============================================
class PoleError(ZeroDivisionError):
	"""
	Raised when m_alpha is evaluated at its pole E_alpha.
	"""


#============================================
class RootFindError(RuntimeError):
	"""
	Raised when the eigenvalue root search fails or disagrees with the formula.
	"""


#============================================
class ExtrapolationError(RuntimeError):
	"""
	Raised when the boundary functional extrapolation does not settle.
	"""


#============================================
def normalization_constant(l: float) -> float:
	"""
	C_l = sqrt(pi) / (Gamma(l + 3/2) 2^{l+1}).

	Args:
		l: Angular momentum in (-1/2, 1/2).

	Returns:
		Positive constant, equal to 1 at l = 0.
	"""
	c_l = math.sqrt(math.pi) / (scipy.special.gamma(l + 1.5) * 2.0 ** (l + 1.0))
	return float(c_l)

# Simple assertion test for normalization_constant
assert abs(normalization_constant(0.0) - 1.0) < 1e-14

#============================================
@dataclasses.dataclass(frozen=True)
class ProblemParams:
	"""
	Angular momentum l, boundary parameter alpha and the derived C_l.
	"""
	l: float
	alpha: float
	c_l: float = dataclasses.field(init=False)

	def __post_init__(self):
		if not (-0.5 < self.l < 0.5):
			raise ParameterError(f"l must satisfy -1/2 < l < 1/2, got {self.l}")
		if not (0.0 <= self.alpha < math.pi):
			raise ParameterError(f"alpha must satisfy 0 <= alpha < pi, got {self.alpha}")
		object.__setattr__(self, "c_l", normalization_constant(self.l))

	@property
	def nu(self) -> float:
		"""Bessel order l + 1/2."""
		return self.l + 0.5

	@property
	def cos_alpha(self) -> float:
		"""cos(alpha), exactly 0 at the quarter turn."""
		return boundary_trig(self.alpha)[0]

	@property
	def sin_alpha(self) -> float:
		"""sin(alpha), exactly 1 at the quarter turn."""
		return boundary_trig(self.alpha)[1]


#============================================
def boundary_trig(alpha: float) -> tuple:
	"""
	(cos alpha, sin alpha) with exact values at alpha = 0 and pi/2.

	Im m_alpha near k = 0 depends on cos(alpha) itself, so the rounding
	residue of cos(pi/2) would change its small-k power law.
	"""
	if abs(alpha - math.pi / 2.0) < 1e-14:
		return (0.0, 1.0)
	if alpha == 0.0:
		return (1.0, 0.0)
	result_tuple = (math.cos(alpha), math.sin(alpha))
	return result_tuple


#============================================
def make_params(l: float, alpha: float) -> ProblemParams:
	"""
	Build validated ProblemParams.

	Args:
		l: Angular momentum.
		alpha: Boundary parameter in radians.

	Returns:
		ProblemParams instance.
	"""
	params = ProblemParams(float(l), float(alpha))
	return params


#============================================
@dataclasses.dataclass(frozen=True)
class EigenvalueInfo:
	"""
	The negative eigenvalue of H_alpha, present iff pi/2 < alpha < pi.
	"""
	exists: bool
	energy: float | None = None
	norm_sq: float | None = None


#============================================
@dataclasses.dataclass(frozen=True)
class SpectralData:
	"""
	Spectral density samples plus the eigenvalue record.
	"""
	params: ProblemParams
	lambdas: numpy.ndarray
	density: numpy.ndarray
	eigen: EigenvalueInfo


#============================================
def _check_positions(x) -> numpy.ndarray:
	"""
	Return x as a float array, raising ParameterError unless all x > 0.
	"""
	x_array = numpy.asarray(x, dtype=float)
	if numpy.any(~(x_array > 0)):
		raise ParameterError("positions must satisfy x > 0")
	return x_array


#============================================
def _restore(values: numpy.ndarray, x):
	"""
	Return a complex scalar for scalar x, else the array.
	"""
	if numpy.ndim(x) == 0:
		return complex(values)
	return values


#============================================
def _root_power(z: complex, power: float) -> complex:
	"""
	sqrt(z)^power with the principal branch, for z != 0.
	"""
	root = numpy.sqrt(complex(z))
	value = complex(numpy.exp(power * numpy.log(root)))
	return value


#============================================
def phi(params: ProblemParams, z: complex, x):
	"""
	Solution phi(z, x) = x^{l+1}(1 + o(1)) at the origin.

	phi = C_l^{-1} sqrt(pi x/2) z^{-(2l+1)/4} J_{l+1/2}(sqrt(z) x),
	entire in z and real for real z.

	Args:
		params: Problem parameters.
		z: Spectral parameter.
		x: Position(s) > 0.

	Returns:
		Complex scalar or array.
	"""
	x_array = _check_positions(x)
	z = complex(z)
	if z == 0:
		values = (x_array ** (params.l + 1.0)).astype(complex)
		return _restore(values, x)
	root = numpy.sqrt(z)
	scale = _root_power(z, -params.nu) / params.c_l
	bessel = specfun.bessel_j(params.nu, root * x_array).value
	values = scale * numpy.sqrt(math.pi * x_array / 2.0) * bessel
	return _restore(values, x)


#============================================
def theta(params: ProblemParams, z: complex, x):
	"""
	Solution theta(z, x) = x^{-l}/(2l+1) (1 + o(1)) at the origin.

	theta = C_l sqrt(pi x/2) z^{(2l+1)/4} J_{-l-1/2}(sqrt(z) x) / cos(l pi).
	"""
	x_array = _check_positions(x)
	z = complex(z)
	if z == 0:
		values = (x_array ** (-params.l) / (2.0 * params.l + 1.0)).astype(complex)
		return _restore(values, x)
	root = numpy.sqrt(z)
	scale = params.c_l * _root_power(z, params.nu) / math.cos(params.l * math.pi)
	bessel = specfun.bessel_j(-params.nu, root * x_array).value
	values = scale * numpy.sqrt(math.pi * x_array / 2.0) * bessel
	return _restore(values, x)


#============================================
def _sqrt_x_bessel_deriv(order: float, root: complex, x_array: numpy.ndarray) -> numpy.ndarray:
	"""
	d/dx [sqrt(x) J_order(root x)].
	"""
	argument = root * x_array
	j_value = specfun.bessel_j(order, argument).value
	j_deriv = specfun.bessel_j_deriv(order, argument).value
	values = 0.5 * j_value / numpy.sqrt(x_array) + numpy.sqrt(x_array) * root * j_deriv
	return values


#============================================
def phi_deriv(params: ProblemParams, z: complex, x):
	"""
	x-derivative of phi(z, x) from the Bessel derivative recurrence.
	"""
	x_array = _check_positions(x)
	z = complex(z)
	if z == 0:
		values = ((params.l + 1.0) * x_array ** params.l).astype(complex)
		return _restore(values, x)
	root = numpy.sqrt(z)
	scale = _root_power(z, -params.nu) / params.c_l * math.sqrt(math.pi / 2.0)
	values = scale * _sqrt_x_bessel_deriv(params.nu, root, x_array)
	return _restore(values, x)


#============================================
def theta_deriv(params: ProblemParams, z: complex, x):
	"""
	x-derivative of theta(z, x).
	"""
	x_array = _check_positions(x)
	z = complex(z)
	if z == 0:
		values = (-params.l * x_array ** (-params.l - 1.0) / (2.0 * params.l + 1.0)).astype(complex)
		return _restore(values, x)
	root = numpy.sqrt(z)
	scale = params.c_l * _root_power(z, params.nu) / math.cos(params.l * math.pi)
	scale *= math.sqrt(math.pi / 2.0)
	values = scale * _sqrt_x_bessel_deriv(-params.nu, root, x_array)
	return _restore(values, x)


#============================================
def rotated_system(params: ProblemParams, z: complex, x) -> tuple:
	"""
	Rotated fundamental system with W(theta_alpha, phi_alpha) = 1.

	Args:
		params: Problem parameters.
		z: Spectral parameter.
		x: Position(s) > 0.

	Returns:
		Tuple (phi_alpha, theta_alpha) where
		phi_alpha = cos(alpha) phi + sin(alpha) theta and
		theta_alpha = cos(alpha) theta - sin(alpha) phi.
	"""
	phi_value = phi(params, z, x)
	theta_value = theta(params, z, x)
	cos_a = params.cos_alpha
	sin_a = params.sin_alpha
	phi_alpha = cos_a * phi_value + sin_a * theta_value
	theta_alpha = cos_a * theta_value - sin_a * phi_value
	result_tuple = (phi_alpha, theta_alpha)
	return result_tuple


#============================================
def rotated_system_deriv(params: ProblemParams, z: complex, x) -> tuple:
	"""
	x-derivatives (phi_alpha', theta_alpha') of the rotated system.
	"""
	phi_value = phi_deriv(params, z, x)
	theta_value = theta_deriv(params, z, x)
	cos_a = params.cos_alpha
	sin_a = params.sin_alpha
	result_tuple = (
		cos_a * phi_value + sin_a * theta_value,
		cos_a * theta_value - sin_a * phi_value,
	)
	return result_tuple


#============================================
def phi_alpha_on_spectrum(params: ProblemParams, k, x: float) -> numpy.ndarray:
	"""
	phi_alpha(k^2, x) for an array of momenta k > 0 at one position x.
	"""
	k_array = numpy.asarray(k, dtype=float)
	x_value = float(_check_positions(x))
	nu = params.nu
	root_factor = numpy.sqrt(math.pi * x_value / 2.0)
	regular = specfun.bessel_j(nu, k_array * x_value).value * k_array ** (-nu) / params.c_l
	singular = specfun.bessel_j(-nu, k_array * x_value).value * k_array ** nu
	singular *= params.c_l / math.cos(params.l * math.pi)
	values = root_factor * (params.cos_alpha * regular + params.sin_alpha * singular)
	return values.real


#============================================
def weyl_m(params: ProblemParams, z, plus_i0: bool = False):
	"""
	Weyl function m(z) = -C_l^2 (-z)^{l+1/2} / cos(l pi) of the Friedrichs extension.

	Args:
		params: Problem parameters.
		z: Complex scalar or array.
		plus_i0: Read real z >= 0 as the boundary value lambda + i0.

	Returns:
		Complex scalar or array.
	"""
	z_array = numpy.asarray(z, dtype=complex)
	on_cut = (z_array.imag == 0) & (z_array.real >= 0)
	if numpy.any(on_cut) and not plus_i0:
		raise BranchCutError("weyl_m needs z off [0, inf) or plus_i0=True")
	prefactor = -params.c_l ** 2 / math.cos(params.l * math.pi)
	# -(lambda + i0) has argument -pi
	upper_side = numpy.abs(z_array.real) ** params.nu * numpy.exp(-1j * math.pi * params.nu)
	with numpy.errstate(divide="ignore", invalid="ignore"):
		off_cut = numpy.exp(params.nu * numpy.log(-z_array))
	power = numpy.where(on_cut, upper_side, off_cut)
	values = prefactor * power
	if numpy.ndim(z) == 0:
		return complex(values)
	return values

# Simple assertion test for weyl_m: l = 0 gives m(-4) = -2
assert abs(weyl_m(make_params(0.0, 0.0), -4.0) + 2.0) < 1e-14

#============================================
def _pole_guard(params: ProblemParams, z) -> None:
	"""
	Raise PoleError when z sits within POLE_TOLERANCE of E_alpha.
	"""
	if not has_eigenvalue(params):
		return
	energy = eigenvalue_energy(params)
	distance = numpy.abs(numpy.asarray(z, dtype=complex) - energy)
	if numpy.any(distance <= POLE_TOLERANCE):
		raise PoleError(f"m_alpha has a pole at E_alpha = {energy!r}")


#============================================
def weyl_m_alpha(params: ProblemParams, z, plus_i0: bool = False):
	"""
	Weyl function of H_alpha, m_alpha = (m cos a + sin a) / (cos a - m sin a).

	Args:
		params: Problem parameters.
		z: Complex scalar or array off the spectrum.
		plus_i0: Read real z >= 0 as lambda + i0.

	Returns:
		Complex scalar or array.
	"""
	_pole_guard(params, z)
	m_value = numpy.asarray(weyl_m(params, z, plus_i0))
	cos_a = params.cos_alpha
	sin_a = params.sin_alpha
	denominator = cos_a - m_value * sin_a
	if numpy.any(denominator == 0):
		raise PoleError("m_alpha denominator vanishes")
	values = (m_value * cos_a + sin_a) / denominator
	if numpy.ndim(z) == 0:
		return complex(values)
	return values


#============================================
def im_weyl_m_alpha_boundary(params: ProblemParams, k):
	"""
	Im m_alpha(k^2 + i0) for real k >= 0, written as an explicit formula.

	With s = k^{2l+1}:
	C^2 s / ((cos a - C^2 tan(pi l) sin a s)^2 + C^4 sin^2 a s^2).

	Args:
		params: Problem parameters.
		k: Nonnegative real scalar or array.

	Returns:
		Real scalar or array, zero at k = 0 unless alpha = pi/2.
	"""
	k_array = numpy.abs(numpy.asarray(k, dtype=float))
	c_sq = params.c_l ** 2
	cos_a = params.cos_alpha
	sin_a = params.sin_alpha
	s_power = k_array ** (2.0 * params.l + 1.0)
	real_part = cos_a - c_sq * math.tan(math.pi * params.l) * sin_a * s_power
	imag_part = c_sq * sin_a * s_power
	values = c_sq * s_power / (real_part ** 2 + imag_part ** 2)
	if numpy.ndim(k) == 0:
		return float(values)
	return values


#============================================
def spectral_density(params: ProblemParams, lam):
	"""
	Density rho'_alpha(lambda) = Im m_alpha(lambda + i0) / pi, zero for lambda <= 0.

	Args:
		params: Problem parameters.
		lam: Real scalar or array.

	Returns:
		Real scalar or array.
	"""
	lam_array = numpy.asarray(lam, dtype=float)
	positive = lam_array > 0
	k_array = numpy.sqrt(numpy.where(positive, lam_array, 1.0))
	density = im_weyl_m_alpha_boundary(params, k_array) / math.pi
	density = numpy.where(positive, density, 0.0)
	if numpy.ndim(lam) == 0:
		return float(density)
	return density

# Simple assertion test for spectral_density: alpha = 0, l = 0 gives sqrt(lambda)/pi
assert abs(spectral_density(make_params(0.0, 0.0), 4.0) - 2.0 / math.pi) < 1e-14

#============================================
def has_eigenvalue(params: ProblemParams) -> bool:
	"""
	True iff pi/2 < alpha < pi, read off the snapped cos(alpha).
	"""
	return params.cos_alpha < 0.0


#============================================
def eigenvalue_energy(params: ProblemParams) -> float:
	"""
	E_alpha = -|cot(alpha) cos(l pi) / C_l^2|^{2/(2l+1)}.
	"""
	if not has_eigenvalue(params):
		raise RootFindError(f"no eigenvalue for alpha = {params.alpha}")
	base = abs(params.cos_alpha / params.sin_alpha * math.cos(params.l * math.pi))
	base /= params.c_l ** 2
	energy = -(base ** (2.0 / (2.0 * params.l + 1.0)))
	return energy


#============================================
def eigenvalue_by_root(params: ProblemParams) -> float:
	"""
	Locate E_alpha as the root of cos(alpha) - m(E) sin(alpha) on (-inf, 0).

	The function is monotone in |E|, so the bracket grows by doubling
	before brentq refines it.

	Args:
		params: Problem parameters with pi/2 < alpha < pi.

	Returns:
		Negative energy.
	"""
	if not has_eigenvalue(params):
		raise RootFindError(f"no eigenvalue for alpha = {params.alpha}")
	cos_a = params.cos_alpha
	sin_a = params.sin_alpha

	def secular(magnitude: float) -> float:
		m_value = weyl_m(params, -magnitude)
		return cos_a - m_value.real * sin_a

	upper = 1.0
	for _ in range(2000):
		if secular(upper) > 0:
			break
		upper *= 2.0
	lower = upper / 2.0
	for _ in range(2000):
		if secular(lower) < 0:
			break
		lower /= 2.0
	if not (secular(lower) < 0 < secular(upper)):
		raise RootFindError(f"could not bracket eigenvalue for {params}")
	magnitude, report = scipy.optimize.brentq(
		secular, lower, upper, xtol=1e-300, rtol=1e-15, maxiter=500, full_output=True,
	)
	if not report.converged:
		raise RootFindError(f"brentq did not converge: {report.flag}")
	return -magnitude


#============================================
def _profile_coefficient(params: ProblemParams, kappa: float) -> float:
	"""
	Coefficient c with phi_alpha(E, x) = c sqrt(x) K_nu(kappa x).
	"""
	nu = params.nu
	coefficient = params.sin_alpha / (
		(2.0 * params.l + 1.0) * scipy.special.gamma(nu) * 2.0 ** (nu - 1.0) * kappa ** (-nu)
	)
	return coefficient


#============================================
def bound_state_profile(params: ProblemParams, x):
	"""
	phi_alpha(E_alpha, x) through the modified Bessel function K_nu.

	Args:
		params: Problem parameters with an eigenvalue.
		x: Position(s) > 0.

	Returns:
		Real scalar or array.
	"""
	x_array = _check_positions(x)
	kappa = math.sqrt(-eigenvalue_energy(params))
	coefficient = _profile_coefficient(params, kappa)
	values = coefficient * numpy.sqrt(x_array) * scipy.special.kv(params.nu, kappa * x_array)
	if numpy.ndim(x) == 0:
		return float(values)
	return values


#============================================
def bound_state_norm_sq(params: ProblemParams) -> float:
	"""
	Squared L^2 norm of phi_alpha(E_alpha, .) by adaptive quadrature.

	Integrates on (0, NORM_CUT_SCALE / kappa) and adds the tail from the
	large-argument form K_nu(u) ~ sqrt(pi/(2u)) e^{-u}.
	"""
	kappa = math.sqrt(-eigenvalue_energy(params))
	coefficient = _profile_coefficient(params, kappa)
	cutoff = NORM_CUT_SCALE / kappa

	def integrand(x_value: float) -> float:
		return bound_state_profile(params, x_value) ** 2

	body, _ = scipy.integrate.quad(integrand, 0.0, cutoff, limit=200, epsabs=0.0, epsrel=1e-12)
	tail = coefficient ** 2 * math.pi * math.exp(-2.0 * kappa * cutoff) / (4.0 * kappa ** 2)
	return body + tail


#============================================
def eigenvalue(params: ProblemParams) -> EigenvalueInfo:
	"""
	Eigenvalue record of H_alpha.

	The closed formula is checked against the root of the secular
	function; a mismatch points at a branch convention bug.

	Args:
		params: Problem parameters.

	Returns:
		EigenvalueInfo.
	"""
	if not has_eigenvalue(params):
		return EigenvalueInfo(False)
	energy = eigenvalue_energy(params)
	root = eigenvalue_by_root(params)
	if abs(root - energy) > 1e-9 * abs(energy):
		raise RootFindError(f"eigenvalue formula {energy!r} disagrees with root {root!r}")
	info = EigenvalueInfo(True, energy, bound_state_norm_sq(params))
	return info


#============================================
def weyl_solution(params: ProblemParams, z: complex, x):
	"""
	Weyl solution psi_alpha = theta_alpha + m_alpha phi_alpha, square integrable at infinity.
	"""
	m_alpha = weyl_m_alpha(params, z)
	phi_alpha, theta_alpha = rotated_system(params, z, x)
	values = theta_alpha + m_alpha * phi_alpha
	return values


#============================================
def green(params: ProblemParams, z: complex, x: float, y: float) -> complex:
	"""
	Green's function G_alpha(z, x, y) = phi_alpha(z, min) psi_alpha(z, max).

	Args:
		params: Problem parameters.
		z: Spectral parameter off the spectrum.
		x: First position > 0.
		y: Second position > 0.

	Returns:
		Complex value, symmetric in (x, y).
	"""
	near = min(x, y)
	far = max(x, y)
	phi_alpha, _ = rotated_system(params, z, near)
	value = phi_alpha * weyl_solution(params, z, far)
	return complex(value)


#============================================
def _boundary_exponents(l: float) -> list:
	"""
	Correction exponents of the boundary Wronskians for solutions of the equation.
	"""
	candidates = []
	for i in range(4):
		candidates.append(2.0 + 2.0 * i)
		candidates.append(1.0 - 2.0 * l + 2.0 * i)
		candidates.append(2.0 * l + 3.0 + 2.0 * i)
	exponents = []
	for exponent in sorted(candidates):
		if exponent <= 0 or exponent > BOUNDARY_MAX_EXPONENT:
			continue
		if exponents and exponent - exponents[-1] < 0.05:
			continue
		exponents.append(exponent)
	return exponents


#============================================
def _extrapolate_to_zero(ladder: numpy.ndarray, samples: numpy.ndarray, exponents: list) -> tuple:
	"""
	Least-squares fit samples = L + sum_j c_j x^{p_j}; return (L, spread).

	spread compares the fit on the full ladder with the fit that drops
	the largest x.
	"""
	def fit(x_values, y_values):
		columns = [numpy.ones_like(x_values)]
		for exponent in exponents:
			columns.append((x_values / x_values[0]) ** exponent)
		matrix = numpy.column_stack(columns)
		solution = numpy.linalg.lstsq(matrix, y_values, rcond=None)[0]
		return solution[0]

	full = fit(ladder, samples)
	trimmed = fit(ladder[1:], samples[1:])
	result_tuple = (full, abs(full - trimmed))
	return result_tuple


#============================================
def boundary_functionals(params: ProblemParams, f, f_deriv=None) -> tuple:
	"""
	Extrapolated boundary values (Gamma_0 f, Gamma_1 f) at the origin.

	Gamma_0 f = lim W(f, x^{l+1}) and Gamma_1 f = -lim W(f, x^{-l}) / (2l+1)
	with W(f, g) = f g' - f' g, sampled on x_n = BOUNDARY_DELTA 2^-n.

	Args:
		params: Problem parameters.
		f: Callable x -> complex, defined on (0, BOUNDARY_DELTA].
		f_deriv: Optional derivative of f; a five-point difference otherwise.

	Returns:
		Tuple (gamma_0, gamma_1).
	"""
	l = params.l
	ladder = BOUNDARY_DELTA * 2.0 ** (-numpy.arange(BOUNDARY_LADDER_SIZE, dtype=float))
	w_regular = numpy.zeros(ladder.shape, dtype=complex)
	w_singular = numpy.zeros(ladder.shape, dtype=complex)
	for index, x_value in enumerate(ladder):
		x_value = float(x_value)
		f_value = complex(f(x_value))
		if f_deriv is not None:
			f_prime = complex(f_deriv(x_value))
		else:
			h = 1e-3 * x_value
			f_prime = (
				complex(f(x_value - 2 * h)) - 8 * complex(f(x_value - h))
				+ 8 * complex(f(x_value + h)) - complex(f(x_value + 2 * h))
			) / (12 * h)
		regular = x_value ** (l + 1.0)
		regular_prime = (l + 1.0) * x_value ** l
		singular = x_value ** (-l)
		singular_prime = -l * x_value ** (-l - 1.0)
		w_regular[index] = f_value * regular_prime - f_prime * regular
		w_singular[index] = f_value * singular_prime - f_prime * singular

	exponents = _boundary_exponents(l)
	gamma_0, spread_0 = _extrapolate_to_zero(ladder, w_regular, exponents)
	limit_1, spread_1 = _extrapolate_to_zero(ladder, w_singular, exponents)
	gamma_1 = -limit_1 / (2.0 * l + 1.0)
	tolerance = 1e-6 * max(1.0, abs(gamma_0), abs(limit_1))
	if not (spread_0 <= tolerance and spread_1 <= tolerance):
		raise ExtrapolationError(
			f"boundary functionals did not settle (spread {max(spread_0, spread_1):.3g})"
		)
	result_tuple = (complex(gamma_0), complex(gamma_1))
	return result_tuple


#============================================
def spectral_data(params: ProblemParams, lambdas) -> SpectralData:
	"""
	Density samples on lambdas plus the eigenvalue record.
	"""
	lambda_array = numpy.asarray(lambdas, dtype=float)
	data = SpectralData(
		params,
		lambda_array,
		spectral_density(params, lambda_array),
		eigenvalue(params),
	)
	return data
