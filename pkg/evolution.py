"""
Integral kernels of e^{-itH_alpha}.

Closed forms exist at alpha = 0 and alpha = pi/2. Every alpha is
covered by the damped oscillatory quadrature of the spectral
representation, and the bound state adds one rank-one term.
"""

# Standard Library
import math
import functools
import dataclasses

# PIP3 modules
import numpy

# local repo modules
import specfun
import spectral
import oscillatory_quadrature

METHOD_CLOSED_FORM = "closed_form"
METHOD_QUADRATURE = "quadrature"

# sqrt(pi/tau) from the Gaussian integral over 1/sqrt(4 pi tau) of a 2 pi normalized measure
FOURIER_MEASURE_NORMALIZATION = 2.0 * math.pi

# oscillations of e^{-itk^2} a user supplied k_max must resolve
MIN_RESOLVED_OSCILLATIONS = 10.0

# k grid of spectral_function_kernel
SPECTRAL_K_MAX = 40.0
SPECTRAL_MIN_PANELS = 200
SPECTRAL_HEAD_START = 1e-10
SPECTRAL_HEAD_PANELS = 34


#============================================
class KernelDomainError(ValueError):
	"""
	Raised for t = 0 or positions outside (0, inf).
	"""


#============================================
class QuadratureSpecError(ValueError):
	"""
	Raised for an inconsistent QuadratureSpec.
	"""


#============================================
@dataclasses.dataclass(frozen=True)
class KernelValue:
	"""
	Kernel amplitude with its method and error estimate.

	Closed forms evaluated on arrays carry arrays in value and est_error.
	"""
	value: complex
	method: str
	est_error: float


#============================================
@dataclasses.dataclass(frozen=True)
class QuadratureSpec:
	"""
	Damping ladder, panel density and cutoff of the oscillatory integrator.

	eps_ladder fixes the ladder outright. Otherwise the ladder is
	eps0 2^{-m} over `rungs` rungs, with eps0 chosen from (t, x + y)
	when unset. k_max caps the grid, which otherwise runs to where the
	smallest rung damps the integrand below e^{-36}.
	"""
	eps0: float | None = None
	rungs: int = oscillatory_quadrature.DEFAULT_RUNGS
	k_max: float | None = None
	panels_per_period: int = oscillatory_quadrature.DEFAULT_PANELS_PER_PERIOD
	extrapolation_order: int = oscillatory_quadrature.DEFAULT_EXTRAPOLATION_ORDER
	eps_ladder: tuple | None = None

	def __post_init__(self):
		if self.panels_per_period < 4:
			raise QuadratureSpecError("panels_per_period must be >= 4")
		if self.extrapolation_order < 2:
			raise QuadratureSpecError("extrapolation_order must be >= 2")
		if self.eps0 is not None and not self.eps0 > 0:
			raise QuadratureSpecError("eps0 must be > 0")
		if self.k_max is not None and not self.k_max > 0:
			raise QuadratureSpecError("k_max must be > 0")
		rung_count = self.rungs if self.eps_ladder is None else len(self.eps_ladder)
		if rung_count < self.extrapolation_order + 1:
			raise QuadratureSpecError(
				f"extrapolation_order {self.extrapolation_order} needs {self.extrapolation_order + 1} rungs"
			)
		if self.eps_ladder is not None:
			ladder = numpy.asarray(self.eps_ladder, dtype=float)
			if numpy.any(ladder <= 0) or numpy.any(numpy.diff(ladder) >= 0):
				raise QuadratureSpecError("eps_ladder must be positive and strictly decreasing")

	def ladder(self, t: float, spread: float) -> numpy.ndarray:
		"""
		Concrete damping ladder for time t and frequency sum spread.
		"""
		if self.eps_ladder is not None:
			return numpy.asarray(self.eps_ladder, dtype=float)
		eps0 = self.eps0
		if eps0 is None:
			eps0 = oscillatory_quadrature.default_first_rung(t, spread)
		return oscillatory_quadrature.geometric_ladder(eps0, self.rungs)

	def check_resolution(self, t: float) -> None:
		"""
		Require t k_max^2 / (2 pi) >= MIN_RESOLVED_OSCILLATIONS for a user k_max.
		"""
		if self.k_max is None:
			return
		oscillations = abs(t) * self.k_max ** 2 / (2.0 * math.pi)
		if oscillations < MIN_RESOLVED_OSCILLATIONS:
			raise QuadratureSpecError(
				f"k_max = {self.k_max} resolves only {oscillations:.1f} oscillations at t = {t}"
			)


#============================================
@dataclasses.dataclass(frozen=True)
class IntegralSplit:
	"""
	The four oscillatory integrals whose weighted sum is the continuous kernel.

	kernel = w1 i1 + w2 (i2 + i2_sym) + w3 i3.
	"""
	i1: complex
	i2: complex
	i2_sym: complex
	i3: complex
	weights: tuple
	est_errors: tuple
	eps_ladder: numpy.ndarray
	cutoff: float

	def recombine(self) -> complex:
		"""Weighted sum of the four integrals."""
		w1, w2, w3 = self.weights
		value = w1 * self.i1 + w2 * (self.i2 + self.i2_sym) + w3 * self.i3
		return complex(value)

	def recombined_error(self) -> float:
		"""Weighted sum of the four error estimates."""
		w1, w2, w3 = self.weights
		e1, e2, e2_sym, e3 = self.est_errors
		error = abs(w1) * e1 + abs(w2) * (e2 + e2_sym) + abs(w3) * e3
		return float(error)


#============================================
@dataclasses.dataclass(frozen=True)
class FiniteMeasure:
	"""
	Finite measure on the line: point atoms plus optional density samples.

	Atoms are (weight, point) pairs. Density samples are integrated with
	trapezoid weights over density_points.
	"""
	atoms: tuple = ()
	density_points: tuple = ()
	density_values: tuple = ()

	def as_atoms(self) -> tuple:
		"""
		Return (weights, points) arrays with the density folded into atoms.
		"""
		weights = [float(weight) for weight, _ in self.atoms]
		points = [float(point) for _, point in self.atoms]
		if len(self.density_points) > 1:
			grid = numpy.asarray(self.density_points, dtype=float)
			samples = numpy.asarray(self.density_values, dtype=float)
			weights.extend((trapezoid_weights(grid) * samples).tolist())
			points.extend(grid.tolist())
		result_tuple = (numpy.asarray(weights), numpy.asarray(points))
		return result_tuple


#============================================
@dataclasses.dataclass(frozen=True)
class VanDerCorputEntry:
	"""
	One integral against its van der Corput bound.
	"""
	name: str
	scaled_value: float
	bound: float
	passed: bool


#============================================
def quarter_turn_power(s: float) -> complex:
	"""
	i^s on the principal branch, e^{i pi s / 2}.
	"""
	return complex(numpy.exp(0.5j * math.pi * s))

# Simple assertion test for quarter_turn_power
assert abs(quarter_turn_power(1.0) - 1j) < 1e-15

#============================================
def _check_time(t: float) -> float:
	"""
	Reject t = 0, where the kernel is not a function.
	"""
	t = float(t)
	if t == 0 or not math.isfinite(t):
		raise KernelDomainError(f"time must be finite and nonzero, got {t}")
	return t


#============================================
def _closed_form(t: float, x, y, order: float, turn: float) -> KernelValue:
	"""
	quarter_turn_power(turn) / (2t) e^{i(x^2+y^2)/4t} sqrt(xy) J_order(xy/2t) for t > 0.
	"""
	x_array = numpy.asarray(x, dtype=float)
	y_array = numpy.asarray(y, dtype=float)
	if numpy.any(x_array <= 0) or numpy.any(y_array <= 0):
		raise KernelDomainError("positions must satisfy x, y > 0")
	product = x_array * y_array
	bessel = specfun.bessel_j(order, product / (2.0 * t))
	prefactor = quarter_turn_power(turn) / (2.0 * t)
	prefactor = prefactor * numpy.exp(1j * (x_array ** 2 + y_array ** 2) / (4.0 * t))
	root = numpy.sqrt(product)
	value = prefactor * root * bessel.value
	error = numpy.abs(prefactor) * root * bessel.est_error
	if numpy.ndim(value) == 0:
		return KernelValue(complex(value), METHOD_CLOSED_FORM, float(error))
	return KernelValue(value, METHOD_CLOSED_FORM, error)


#============================================
def _conjugate(kernel: KernelValue) -> KernelValue:
	"""
	Kernel at -t from the kernel at t.
	"""
	value = numpy.conj(kernel.value)
	if numpy.ndim(value) == 0:
		value = complex(value)
	return KernelValue(value, kernel.method, kernel.est_error)


#============================================
def kernel_pi2_closed(params: spectral.ProblemParams, t: float, x, y) -> KernelValue:
	"""
	Closed kernel of e^{-itH_{pi/2}}.

	i^{l-1/2}/(2t) e^{i(x^2+y^2)/(4t)} sqrt(xy) J_{-l-1/2}(xy/(2t)).
	params.alpha is not used. Negative t goes through conjugation.

	Args:
		params: Problem parameters (only l is read).
		t: Nonzero time.
		x: Position(s) > 0.
		y: Position(s) > 0, broadcast against x.

	Returns:
		KernelValue with method closed_form.
	"""
	t = _check_time(t)
	if t < 0:
		return _conjugate(kernel_pi2_closed(params, -t, x, y))
	kernel = _closed_form(t, x, y, -params.nu, params.l - 0.5)
	return kernel


#============================================
def kernel_friedrichs_closed(params: spectral.ProblemParams, t: float, x, y) -> KernelValue:
	"""
	Closed kernel of e^{-itH_0} for the Friedrichs extension.

	i^{-l-3/2}/(2t) e^{i(x^2+y^2)/(4t)} sqrt(xy) J_{l+1/2}(xy/(2t)).
	"""
	t = _check_time(t)
	if t < 0:
		return _conjugate(kernel_friedrichs_closed(params, -t, x, y))
	kernel = _closed_form(t, x, y, params.nu, -params.l - 1.5)
	return kernel


#============================================
def damped_kernel_pi2(params: spectral.ProblemParams, t: float, eps: float, x: float, y: float) -> KernelValue:
	"""
	Kernel of e^{-(eps + it) H_{pi/2}} P_c from Weber's exponential integral.

	With p = eps + it the kernel is
	p^{-1} e^{-(x^2+y^2)/(4p)} (sqrt(xy)/2) I_{-l-1/2}(xy/(2p)).
	"""
	if eps < 0:
		raise KernelDomainError(f"damping must satisfy eps >= 0, got {eps}")
	p = complex(eps, t)
	if p == 0:
		raise KernelDomainError("eps + it must be nonzero")
	if x <= 0 or y <= 0:
		raise KernelDomainError("positions must satisfy x, y > 0")
	bessel = specfun.bessel_i(-params.nu, x * y / (2.0 * p))
	prefactor = numpy.exp(-(x * x + y * y) / (4.0 * p)) / p * math.sqrt(x * y) / 2.0
	kernel = KernelValue(
		complex(prefactor * bessel.value),
		METHOD_CLOSED_FORM,
		float(abs(prefactor) * bessel.est_error),
	)
	return kernel


#============================================
def split_weights(params: spectral.ProblemParams) -> tuple:
	"""
	(cos^2 a / C^2, sin 2a / (2 cos pi l), C^2 sin^2 a / cos^2 pi l).
	"""
	cos_a = params.cos_alpha
	sin_a = params.sin_alpha
	c_sq = params.c_l ** 2
	cos_pl = math.cos(math.pi * params.l)
	result_tuple = (
		cos_a * cos_a / c_sq,
		sin_a * cos_a / cos_pl,
		c_sq * sin_a * sin_a / (cos_pl * cos_pl),
	)
	return result_tuple


#============================================
def _split_amplitude(params: spectral.ProblemParams, x: float, y: float):
	"""
	Amplitudes of the four split integrals as one callable k -> (4, n).
	"""
	nu = params.nu
	l = params.l
	root = math.sqrt(x * y)

	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		jx_regular = specfun.bessel_j(nu, k_values * x).value.real
		jx_singular = specfun.bessel_j(-nu, k_values * x).value.real
		jy_regular = specfun.bessel_j(nu, k_values * y).value.real
		jy_singular = specfun.bessel_j(-nu, k_values * y).value.real
		weight = root * spectral.im_weyl_m_alpha_boundary(params, k_values)
		rows = numpy.vstack([
			weight * jx_regular * jy_regular * k_values ** (-2.0 * l),
			weight * jx_regular * jy_singular * k_values,
			weight * jx_singular * jy_regular * k_values,
			weight * jx_singular * jy_singular * k_values ** (2.0 * l + 2.0),
		])
		return rows

	return amplitude


#============================================
def _direct_amplitude(params: spectral.ProblemParams, x: float, y: float):
	"""
	(2/pi) phi_alpha(k^2, x) phi_alpha(k^2, y) Im m_alpha(k^2 + i0) k as a callable.
	"""
	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		product = spectral.phi_alpha_on_spectrum(params, k_values, x)
		product = product * spectral.phi_alpha_on_spectrum(params, k_values, y)
		weight = spectral.im_weyl_m_alpha_boundary(params, k_values) * k_values
		return (2.0 / math.pi) * product * weight

	return amplitude


#============================================
def _check_positions(x: float, y: float) -> None:
	"""
	Raise KernelDomainError unless x, y > 0.
	"""
	if not (x > 0 and y > 0):
		raise KernelDomainError(f"positions must satisfy x, y > 0, got ({x}, {y})")


#============================================
def split_integrals(params: spectral.ProblemParams, spec: QuadratureSpec, t: float,
	x: float, y: float) -> IntegralSplit:
	"""
	Compute I1, I2, I2_sym and I3 as eps -> 0 limits of damped quadrature.

	I1 = int e^{-itk^2} sqrt(xy) J_nu(kx) J_nu(ky) Im m_alpha k^{-2l} dk,
	I2 = int e^{-itk^2} sqrt(xy) J_nu(kx) J_{-nu}(ky) Im m_alpha k dk,
	I3 = int e^{-itk^2} sqrt(xy) J_{-nu}(kx) J_{-nu}(ky) Im m_alpha k^{2l+2} dk,
	with nu = l + 1/2 and I2_sym the x <-> y mirror of I2.

	Args:
		params: Problem parameters.
		spec: Quadrature configuration.
		t: Time, > 0.
		x: Position > 0.
		y: Position > 0.

	Returns:
		IntegralSplit.
	"""
	t = _check_time(t)
	if t < 0:
		raise KernelDomainError("split_integrals needs t > 0")
	_check_positions(x, y)
	spec.check_resolution(t)
	spread = x + y
	result = oscillatory_quadrature.oscillatory_integral(
		_split_amplitude(params, x, y),
		t,
		spread,
		spec.ladder(t, spread),
		spec.extrapolation_order,
		spec.panels_per_period,
		spec.k_max,
	)
	values = [complex(value) for value in result.values]
	errors = tuple(float(error) for error in result.est_errors)
	split = IntegralSplit(
		values[0], values[1], values[2], values[3],
		split_weights(params), errors, result.eps_ladder, result.cutoff,
	)
	return split


#============================================
def kernel_quadrature(params: spectral.ProblemParams, spec: QuadratureSpec, t: float,
	x: float, y: float) -> KernelValue:
	"""
	Continuous-part kernel [e^{-itH_alpha} P_c](x, y) by quadrature.

	The spectral integral (2/pi) int e^{-itk^2} phi_alpha phi_alpha Im m_alpha k dk
	is assembled from split_integrals. Negative t goes through conjugation.

	Args:
		params: Problem parameters.
		spec: Quadrature configuration.
		t: Nonzero time.
		x: Position > 0.
		y: Position > 0.

	Returns:
		KernelValue with method quadrature.
	"""
	t = _check_time(t)
	if t < 0:
		return _conjugate(kernel_quadrature(params, spec, -t, x, y))
	split = split_integrals(params, spec, t, x, y)
	kernel = KernelValue(split.recombine(), METHOD_QUADRATURE, split.recombined_error())
	return kernel


#============================================
def direct_kernel_quadrature(params: spectral.ProblemParams, spec: QuadratureSpec, t: float,
	x: float, y: float) -> KernelValue:
	"""
	Same kernel as kernel_quadrature, integrating the unsplit amplitude on the same grid.
	"""
	t = _check_time(t)
	if t < 0:
		return _conjugate(direct_kernel_quadrature(params, spec, -t, x, y))
	_check_positions(x, y)
	spec.check_resolution(t)
	spread = x + y
	result = oscillatory_quadrature.oscillatory_integral(
		_direct_amplitude(params, x, y),
		t,
		spread,
		spec.ladder(t, spread),
		spec.extrapolation_order,
		spec.panels_per_period,
		spec.k_max,
	)
	kernel = KernelValue(complex(result.values[0]), METHOD_QUADRATURE, float(result.est_errors[0]))
	return kernel


#============================================
def damped_kernel_quadrature(params: spectral.ProblemParams, spec: QuadratureSpec, t: float,
	eps: float, x: float, y: float) -> KernelValue:
	"""
	Kernel of e^{-(eps + it) H_alpha} P_c by quadrature at one fixed eps > 0.
	"""
	if not t > 0:
		raise KernelDomainError("damped_kernel_quadrature needs t > 0")
	_check_positions(x, y)
	values, bounds, _ = oscillatory_quadrature.damped_integrals(
		_direct_amplitude(params, x, y),
		t,
		x + y,
		[eps],
		spec.panels_per_period,
		spec.k_max,
	)
	kernel = KernelValue(complex(values[0, 0]), METHOD_QUADRATURE, float(bounds[0, 0]))
	return kernel


#============================================
def fresnel_gaussian(t: float, eps: float, measure: FiniteMeasure) -> complex:
	"""
	F(eps) = int_R e^{-(eps + it) k^2} f(k) dk with f(k) = int e^{ipk} d mu(p).

	Each atom contributes its Gaussian image
	FOURIER_MEASURE_NORMALIZATION / sqrt(4 pi tau) e^{-p^2/(4 tau)} = sqrt(pi/tau) e^{-p^2/(4 tau)},
	tau = eps + it on the principal branch.

	Args:
		t: Nonzero time.
		eps: Damping, >= 0.
		measure: The finite measure mu.

	Returns:
		Complex value.
	"""
	t = _check_time(t)
	if eps < 0:
		raise KernelDomainError(f"damping must satisfy eps >= 0, got {eps}")
	tau = complex(eps, t)
	weights, points = measure.as_atoms()
	prefactor = FOURIER_MEASURE_NORMALIZATION / numpy.sqrt(4.0 * math.pi * tau)
	images = prefactor * numpy.exp(-points ** 2 / (4.0 * tau))
	value = complex(numpy.sum(weights * images))
	return value

# Simple assertion test for fresnel_gaussian: int e^{-ik^2} dk = sqrt(pi) e^{-i pi/4}
assert abs(
	fresnel_gaussian(1.0, 0.0, FiniteMeasure(atoms=((1.0, 0.0),)))
	- math.sqrt(math.pi) * numpy.exp(-0.25j * math.pi)
) < 1e-14

#============================================
def measure_amplitude(measure: FiniteMeasure):
	"""
	Callable k -> 2 sum_j w_j cos(p_j k), the even part of f doubled.

	Its half-line integral against e^{-tau k^2} equals the full-line one.
	"""
	weights, points = measure.as_atoms()

	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		phases = numpy.cos(numpy.outer(k_values, points))
		return 2.0 * (phases @ weights)

	return amplitude


#============================================
def fresnel_quadrature(t: float, eps_values, measure: FiniteMeasure, spec: QuadratureSpec) -> numpy.ndarray:
	"""
	Damped quadrature of the same integral fresnel_gaussian evaluates in closed form.
	"""
	_, points = measure.as_atoms()
	spread = float(numpy.max(numpy.abs(points))) if len(points) else 0.0
	values, _, _ = oscillatory_quadrature.damped_integrals(
		measure_amplitude(measure), t, spread, eps_values, spec.panels_per_period,
	)
	return values[:, 0]


#============================================
@functools.lru_cache(maxsize=64)
def _bound_state_record(params: spectral.ProblemParams) -> spectral.EigenvalueInfo:
	"""
	Eigenvalue record, cached per params since the norm needs quadrature.
	"""
	return spectral.eigenvalue(params)


#============================================
def bound_state_term(params: spectral.ProblemParams, t: float, x, y):
	"""
	Point-spectrum part e^{-itE} phi_alpha(E, x) phi_alpha(E, y) / ||phi_alpha(E)||^2.

	Args:
		params: Problem parameters.
		t: Time.
		x: Position(s) > 0.
		y: Position(s) > 0.

	Returns:
		Complex scalar or array, zero when there is no eigenvalue.
	"""
	if not spectral.has_eigenvalue(params):
		if numpy.ndim(x) == 0 and numpy.ndim(y) == 0:
			return 0j
		return numpy.zeros(numpy.broadcast(x, y).shape, dtype=complex)
	info = _bound_state_record(params)
	profile_x = spectral.bound_state_profile(params, x)
	profile_y = spectral.bound_state_profile(params, y)
	value = numpy.exp(-1j * t * info.energy) * profile_x * profile_y / info.norm_sq
	if numpy.ndim(value) == 0:
		return complex(value)
	return value


#============================================
def _spectral_panel_sum(amplitude, k_max: float, panel_count: int) -> complex:
	"""
	Gauss-Legendre sum of amplitude over (0, k_max).

	Panels are dyadic toward k = 0, where the amplitude may carry an
	integrable power singularity, and uniform above k = 1.
	"""
	nodes, weights = oscillatory_quadrature.gauss_legendre(oscillatory_quadrature.GAUSS_NODES)
	head = numpy.concatenate([[0.0], numpy.geomspace(SPECTRAL_HEAD_START, 1.0, SPECTRAL_HEAD_PANELS)])
	body = numpy.linspace(1.0, k_max, panel_count + 1)[1:]
	edges = numpy.concatenate([head, body])
	lower = edges[:-1, None]
	width = numpy.diff(edges)[:, None]
	k_values = (lower + 0.5 * width * (nodes[None, :] + 1.0)).ravel()
	k_weights = (0.5 * width * weights[None, :]).ravel()
	total = complex(numpy.sum(k_weights * amplitude(k_values)))
	return total


#============================================
def spectral_function_kernel(params: spectral.ProblemParams, func, x: float, y: float,
	k_max: float = SPECTRAL_K_MAX, panel_count: int | None = None) -> KernelValue:
	"""
	Kernel of func(H_alpha) from its spectral representation.

	The continuous part is int func(lambda) phi_alpha(lambda, x) phi_alpha(lambda, y)
	d rho_alpha(lambda) over lambda = k^2 < k_max^2, and the bound state
	adds func(E) phi_alpha(E, x) phi_alpha(E, y) / ||phi_alpha(E)||^2.
	func must decay fast enough that the integral past k_max is negligible.

	Args:
		params: Problem parameters.
		func: Vectorized callable of lambda, real or complex.
		x: Position > 0.
		y: Position > 0.
		k_max: Upper limit in k = sqrt(lambda).
		panel_count: Uniform panels on (1, k_max); sized from x, y when None.

	Returns:
		KernelValue with method quadrature; est_error compares against a
		grid with half the panels.
	"""
	_check_positions(x, y)
	if panel_count is None:
		panel_count = max(SPECTRAL_MIN_PANELS, int(math.ceil(k_max * max(x, y, 1.0))))
	direct = _direct_amplitude(params, x, y)

	def amplitude(k_values: numpy.ndarray) -> numpy.ndarray:
		return func(k_values ** 2) * direct(k_values)

	fine = _spectral_panel_sum(amplitude, k_max, panel_count)
	coarse = _spectral_panel_sum(amplitude, k_max, max(1, panel_count // 2))
	value = fine
	if spectral.has_eigenvalue(params):
		info = _bound_state_record(params)
		profiles = spectral.bound_state_profile(params, x) * spectral.bound_state_profile(params, y)
		value = value + complex(func(info.energy)) * profiles / info.norm_sq
	kernel = KernelValue(complex(value), METHOD_QUADRATURE, abs(fine - coarse))
	return kernel


#============================================
def has_closed_form(params: spectral.ProblemParams) -> bool:
	"""
	True for alpha = 0 and alpha = pi/2.
	"""
	return params.sin_alpha == 0.0 or params.cos_alpha == 0.0


#============================================
def continuous_kernel(params: spectral.ProblemParams, spec: QuadratureSpec, t: float, x, y) -> KernelValue:
	"""
	Kernel of e^{-itH_alpha} P_c: closed form when one exists, quadrature otherwise.

	Arrays of positions are accepted on the closed-form path only.
	"""
	if params.sin_alpha == 0.0:
		return kernel_friedrichs_closed(params, t, x, y)
	if params.cos_alpha == 0.0:
		return kernel_pi2_closed(params, t, x, y)
	return kernel_quadrature(params, spec, t, x, y)


#============================================
def full_kernel(params: spectral.ProblemParams, spec: QuadratureSpec, t: float, x, y) -> KernelValue:
	"""
	Kernel of e^{-itH_alpha}: continuous part plus the bound state term.

	Args:
		params: Problem parameters.
		spec: Quadrature configuration.
		t: Nonzero time.
		x: Position(s) > 0.
		y: Position(s) > 0.

	Returns:
		KernelValue; equals continuous_kernel for alpha in [0, pi/2].
	"""
	continuous = continuous_kernel(params, spec, t, x, y)
	if not spectral.has_eigenvalue(params):
		return continuous
	value = continuous.value + bound_state_term(params, t, x, y)
	return KernelValue(value, continuous.method, continuous.est_error)


#============================================
def kernel_matrix(params: spectral.ProblemParams, spec: QuadratureSpec, t: float,
	x_values, y_values, continuous_only: bool = False) -> tuple:
	"""
	Kernel on the tensor grid x_values x y_values.

	Closed forms are evaluated in one vectorized call. Quadrature runs
	point by point and reuses K(x, y) = K(y, x).

	Returns:
		Tuple (values, est_errors, method) with arrays of shape (len(x), len(y)).
	"""
	x_array = numpy.asarray(x_values, dtype=float)
	y_array = numpy.asarray(y_values, dtype=float)
	if has_closed_form(params):
		grid_x, grid_y = numpy.meshgrid(x_array, y_array, indexing="ij")
		kernel = continuous_kernel(params, spec, t, grid_x, grid_y)
		values = numpy.asarray(kernel.value, dtype=complex)
		errors = numpy.asarray(kernel.est_error, dtype=float)
		method = kernel.method
	else:
		values = numpy.zeros((len(x_array), len(y_array)), dtype=complex)
		errors = numpy.zeros(values.shape)
		cache = {}
		for i_index, x_value in enumerate(x_array):
			for j_index, y_value in enumerate(y_array):
				key = (min(x_value, y_value), max(x_value, y_value))
				if key not in cache:
					cache[key] = kernel_quadrature(params, spec, t, key[0], key[1])
				values[i_index, j_index] = cache[key].value
				errors[i_index, j_index] = cache[key].est_error
		method = METHOD_QUADRATURE
	if not continuous_only:
		grid_x, grid_y = numpy.meshgrid(x_array, y_array, indexing="ij")
		values = values + bound_state_term(params, t, grid_x, grid_y)
	result_tuple = (values, errors, method)
	return result_tuple


#============================================
def trapezoid_weights(grid) -> numpy.ndarray:
	"""
	Trapezoid weights for a sorted, possibly nonuniform grid.
	"""
	grid = numpy.asarray(grid, dtype=float)
	steps = numpy.diff(grid)
	weights = numpy.zeros(grid.shape)
	weights[:-1] += steps / 2.0
	weights[1:] += steps / 2.0
	return weights


#============================================
def evolve_state(params: spectral.ProblemParams, spec: QuadratureSpec, t: float,
	x_grid, values) -> numpy.ndarray:
	"""
	Apply e^{-itH_alpha} to samples of an initial state on x_grid.

	The kernel integral over y is a trapezoid sum on the same grid.

	Args:
		params: Problem parameters.
		spec: Quadrature configuration.
		t: Nonzero time.
		x_grid: Sorted positions > 0.
		values: Initial state samples.

	Returns:
		Complex array of evolved samples on x_grid.
	"""
	x_grid = numpy.asarray(x_grid, dtype=float)
	weighted = trapezoid_weights(x_grid) * numpy.asarray(values, dtype=complex)
	matrix, _, _ = kernel_matrix(params, spec, t, x_grid, x_grid)
	evolved = matrix @ weighted
	return evolved


#============================================
def van_der_corput_check(params: spectral.ProblemParams, spec: QuadratureSpec, t: float,
	x: float, y: float, split: IntegralSplit | None = None) -> list:
	"""
	Compare |I_j| sqrt(t) with VAN_DER_CORPUT_CONSTANT times a Wiener norm proxy.

	This is a diagnostic inequality and says nothing about tightness.

	Args:
		params: Problem parameters.
		spec: Quadrature configuration.
		t: Time, > 0.
		x: Position > 0.
		y: Position > 0.
		split: Precomputed split, recomputed when None.

	Returns:
		List of VanDerCorputEntry for i1, i2, i2_sym, i3.
	"""
	if split is None:
		split = split_integrals(params, spec, t, x, y)
	proxies = oscillatory_quadrature.wiener_norm_proxy(_split_amplitude(params, x, y), split.cutoff)
	names = ("i1", "i2", "i2_sym", "i3")
	values = (split.i1, split.i2, split.i2_sym, split.i3)
	entries = []
	for name, value, proxy in zip(names, values, proxies):
		scaled = abs(value) * math.sqrt(t)
		bound = oscillatory_quadrature.VAN_DER_CORPUT_CONSTANT * float(proxy)
		entries.append(VanDerCorputEntry(name, scaled, bound, scaled <= bound))
	return entries
