"""
Oracle and property checks run by the validate subcommand.

Every check returns a CheckResult; a check that raises one of the
numerical error types is reported as failed instead of aborting the run.
"""

# Standard Library
import math
import dataclasses

# PIP3 modules
import numpy

# local repo modules
import decay
import specfun
import spectral
import evolution
import oscillatory_quadrature

# point used by the quadrature checks
QUADRATURE_POINT = (1.0, 0.7, 1.3)

HERGLOTZ_SAMPLES = 50


#============================================
@dataclasses.dataclass(frozen=True)
class CheckResult:
	"""
	Outcome of one check: measured deviation against its tolerance.
	"""
	name: str
	passed: bool
	measured: float
	tolerance: float
	detail: str = ""

	def as_row(self) -> tuple:
		"""Row for output_writer.VALIDATE_COLUMNS."""
		return (self.name, self.passed, self.measured, self.tolerance, self.detail)


#============================================
def _result(name: str, measured: float, tolerance: float, detail: str = "") -> CheckResult:
	"""
	Pass when measured <= tolerance.
	"""
	measured = float(measured)
	passed = math.isfinite(measured) and measured <= tolerance
	return CheckResult(name, passed, measured, tolerance, detail)


#============================================
def check_bessel_wronskian() -> CheckResult:
	"""
	J_nu J'_{-nu} - J'_nu J_{-nu} = -2 sin(nu pi) / (pi z) across both regimes.
	"""
	z_values = numpy.array([0.5, 5.0, 13.9, 14.1, 30.0])
	worst = 0.0
	for nu in (0.1, 0.25, 0.4):
		j_plus = specfun.bessel_j(nu, z_values).value
		j_minus = specfun.bessel_j(-nu, z_values).value
		d_plus = specfun.bessel_j_deriv(nu, z_values).value
		d_minus = specfun.bessel_j_deriv(-nu, z_values).value
		wronskian = j_plus * d_minus - d_plus * j_minus
		expected = -2.0 * math.sin(nu * math.pi) / (math.pi * z_values)
		scale = 2.0 / (math.pi * z_values)
		worst = max(worst, float(numpy.max(numpy.abs(wronskian - expected) / scale)))
	return _result("bessel_wronskian", worst, 1e-8)


#============================================
def check_bessel_closed_forms() -> CheckResult:
	"""
	J_{1/2} and J_{-1/2} against sqrt(2/(pi z)) sin z and cos z.
	"""
	z_values = numpy.linspace(0.1, 40.0, 200)
	amplitude = numpy.sqrt(2.0 / (math.pi * z_values))
	error_sin = numpy.abs(specfun.bessel_j(0.5, z_values).value - amplitude * numpy.sin(z_values))
	error_cos = numpy.abs(specfun.bessel_j(-0.5, z_values).value - amplitude * numpy.cos(z_values))
	worst = float(numpy.max(numpy.maximum(error_sin, error_cos) / amplitude))
	return _result("bessel_closed_forms", worst, 1e-9)


#============================================
def check_regime_overlap() -> CheckResult:
	"""
	Series and Hankel expansion agree around the switch radius.
	"""
	z_values = numpy.array([12.0, specfun.SWITCH_RADIUS, 16.0])
	worst = 0.0
	for nu in (-0.3, 0.3):
		series = specfun.bessel_j(nu, z_values, specfun.REGIME_SERIES).value
		far = specfun.bessel_j(nu, z_values, specfun.REGIME_ASYMPTOTIC).value
		scale = numpy.sqrt(2.0 / (math.pi * z_values))
		worst = max(worst, float(numpy.max(numpy.abs(series - far) / scale)))
	return _result("regime_overlap", worst, 1e-8)


#============================================
def check_envelope_bound() -> CheckResult:
	"""
	sqrt(r) |J_{-l-1/2}(r)| <= ENVELOPE_CONSTANT ((1+r)/r)^l on a wide r grid.
	"""
	r_values = numpy.geomspace(1e-3, 1e3, 400)
	worst = 0.0
	for l in (-0.45, -0.25, 0.0, 0.25, 0.45):
		ratio = specfun.envelope(-l - 0.5, r_values) / specfun.envelope_bound(l, r_values)
		worst = max(worst, float(numpy.max(ratio)))
	return _result("envelope_bound", worst, 1.0, "max of envelope / bound")


#============================================
def check_solution_wronskian() -> CheckResult:
	"""
	W(theta_alpha, phi_alpha) = 1 off and on the real axis.
	"""
	worst = 0.0
	for l in (-0.3, 0.2):
		for alpha in (0.4, 2.3):
			params = spectral.make_params(l, alpha)
			for z in (2.0, complex(-1.5, 0.7)):
				x_values = numpy.array([0.3, 2.0])
				phi_a, theta_a = spectral.rotated_system(params, z, x_values)
				phi_d, theta_d = spectral.rotated_system_deriv(params, z, x_values)
				wronskian = theta_a * phi_d - theta_d * phi_a
				worst = max(worst, float(numpy.max(numpy.abs(wronskian - 1.0))))
	return _result("solution_wronskian", worst, 1e-9)


#============================================
def check_weyl_alignment() -> CheckResult:
	"""
	psi_alpha is a multiple of the Friedrichs Weyl solution: both decay at infinity.
	"""
	z = complex(-2.0, 1.0)
	worst = 0.0
	for l in (-0.3, 0.25):
		reference = spectral.make_params(l, 0.0)
		for alpha in (0.7, math.pi / 2.0, 2.5):
			params = spectral.make_params(l, alpha)
			ratios = []
			for x_value in (0.7, 2.1):
				psi = spectral.weyl_solution(params, z, x_value)
				ratios.append(psi / spectral.weyl_solution(reference, z, x_value))
			worst = max(worst, abs(ratios[0] - ratios[1]) / abs(ratios[0]))
	return _result("weyl_alignment", worst, 1e-9)


#============================================
def check_boundary_functionals() -> CheckResult:
	"""
	Gamma_0 theta = Gamma_1 phi = 1, Gamma_0 phi = Gamma_1 theta = 0,
	and phi_alpha satisfies the boundary condition.
	"""
	z = 1.3
	worst = 0.0
	for l in (-0.3, 0.0, 0.3):
		params = spectral.make_params(l, 1.1)
		theta_values = spectral.boundary_functionals(
			params,
			lambda x: spectral.theta(params, z, x),
			lambda x: spectral.theta_deriv(params, z, x),
		)
		phi_values = spectral.boundary_functionals(
			params,
			lambda x: spectral.phi(params, z, x),
			lambda x: spectral.phi_deriv(params, z, x),
		)
		worst = max(
			worst,
			abs(theta_values[0] - 1.0), abs(theta_values[1]),
			abs(phi_values[0]), abs(phi_values[1] - 1.0),
		)
		gamma_0, gamma_1 = spectral.boundary_functionals(
			params,
			lambda x: spectral.rotated_system(params, z, x)[0],
			lambda x: spectral.rotated_system_deriv(params, z, x)[0],
		)
		condition = params.sin_alpha * gamma_1 - params.cos_alpha * gamma_0
		worst = max(worst, abs(condition))
	return _result("boundary_functionals", worst, 1e-6)


#============================================
def _neumann_dirichlet(t: float, x, y) -> tuple:
	"""
	Half-line free propagators from even and odd reflection of the whole-line kernel.
	"""
	prefactor = 1.0 / numpy.sqrt(4j * math.pi * t)
	direct = numpy.exp(1j * (x - y) ** 2 / (4.0 * t))
	mirror = numpy.exp(1j * (x + y) ** 2 / (4.0 * t))
	result_tuple = (prefactor * (direct + mirror), prefactor * (direct - mirror))
	return result_tuple


#============================================
def check_image_method() -> CheckResult:
	"""
	At l = 0 the closed kernels are the Neumann and Dirichlet propagators.
	"""
	params = spectral.make_params(0.0, math.pi / 2.0)
	axis = numpy.linspace(0.2, 5.0, 10)
	grid_x, grid_y = numpy.meshgrid(axis, axis, indexing="ij")
	worst = 0.0
	for t in (0.5, 1.0, 2.0, 5.0, 10.0):
		neumann, dirichlet = _neumann_dirichlet(t, grid_x, grid_y)
		pi2 = evolution.kernel_pi2_closed(params, t, grid_x, grid_y).value
		friedrichs = evolution.kernel_friedrichs_closed(params, t, grid_x, grid_y).value
		worst = max(
			worst,
			float(numpy.max(numpy.abs(pi2 - neumann)) / numpy.max(numpy.abs(neumann))),
			float(numpy.max(numpy.abs(friedrichs - dirichlet)) / numpy.max(numpy.abs(dirichlet))),
		)
	return _result("image_method", worst, 1e-10)


#============================================
def check_eigenvalues() -> CheckResult:
	"""
	Closed eigenvalue formula against the secular root, plus E = -1 at l = 0, alpha = 3 pi/4.
	"""
	worst = 0.0
	for l in (-0.3, -0.1, 0.1, 0.3):
		for alpha in (1.8, 2.2, 2.6, 3.0):
			params = spectral.make_params(l, alpha)
			formula = spectral.eigenvalue_energy(params)
			root = spectral.eigenvalue_by_root(params)
			worst = max(worst, abs(formula - root) / abs(formula))
	special = spectral.eigenvalue_energy(spectral.make_params(0.0, 0.75 * math.pi))
	worst = max(worst, abs(special + 1.0))
	return _result("eigenvalues", worst, 1e-10)


#============================================
def check_density_limit() -> CheckResult:
	"""
	rho'_alpha(lambda) against Im m_alpha(lambda + i eps) / pi extrapolated to eps = 0.
	"""
	ladder = oscillatory_quadrature.geometric_ladder(1e-3, 4)
	worst = 0.0
	for l in (-0.4, -0.2, 0.0, 0.2, 0.4):
		for alpha in (0.0, 0.7, math.pi / 2.0, 2.0, 2.8):
			params = spectral.make_params(l, alpha)
			for lam in (0.1, 0.5, 1.0, 3.0, 10.0):
				samples = spectral.weyl_m_alpha(params, lam + 1j * ladder).imag / math.pi
				limit, _ = oscillatory_quadrature.extrapolate_to_zero(ladder, samples, 3)
				density = spectral.spectral_density(params, lam)
				worst = max(worst, abs(float(limit) - density) / density)
	return _result("density_limit", worst, 1e-6)


#============================================
def check_herglotz(seed: int) -> CheckResult:
	"""
	Im m_alpha(z) > 0 for random z in the upper half plane.
	"""
	generator = numpy.random.default_rng(seed)
	smallest = math.inf
	for _ in range(HERGLOTZ_SAMPLES):
		l = generator.uniform(-0.45, 0.45)
		alpha = generator.uniform(0.0, math.pi)
		z = complex(generator.normal(scale=5.0), generator.uniform(1e-3, 5.0))
		value = spectral.weyl_m_alpha(spectral.make_params(l, alpha), z)
		smallest = min(smallest, value.imag)
	passed = smallest > 0
	return CheckResult("herglotz", passed, -smallest, 0.0, f"seed {seed}")


#============================================
def check_fresnel() -> list:
	"""
	Damped quadrature of a Fourier image against the closed Gaussian form,
	at fixed eps and in the eps -> 0 limit.
	"""
	measure = evolution.FiniteMeasure(atoms=((1.0, 0.0), (0.5, 1.5), (-0.3, 3.0)))
	spec = evolution.QuadratureSpec()
	t = 1.0
	eps_values = numpy.array([0.2, 0.1, 0.05])
	quadrature = evolution.fresnel_quadrature(t, eps_values, measure, spec)
	closed = numpy.array([evolution.fresnel_gaussian(t, eps, measure) for eps in eps_values])
	fixed_error = float(numpy.max(numpy.abs(quadrature - closed)))
	ladder = oscillatory_quadrature.geometric_ladder(0.05, 6)
	damped = evolution.fresnel_quadrature(t, ladder, measure, spec)
	limit, _ = oscillatory_quadrature.extrapolate_to_zero(ladder, damped, 5)
	limit_error = abs(complex(limit) - evolution.fresnel_gaussian(t, 0.0, measure))
	results = [
		_result("fresnel_damped", fixed_error, 1e-8, "eps in {0.2, 0.1, 0.05}"),
		_result("fresnel_limit", limit_error, 1e-6, "eps -> 0"),
	]
	return results


#============================================
def check_spectral_function() -> CheckResult:
	"""
	Kernel of e^{-H} from the spectral integral against the damped closed form.
	"""
	worst = 0.0
	for l in (-0.25, 0.25):
		params = spectral.make_params(l, math.pi / 2.0)
		spectral_kernel = evolution.spectral_function_kernel(params, lambda lam: numpy.exp(-lam), 0.7, 1.3)
		closed = evolution.damped_kernel_pi2(params, 0.0, 1.0, 0.7, 1.3)
		worst = max(worst, abs(spectral_kernel.value - closed.value))
	return _result("spectral_function", worst, 1e-6)


#============================================
def check_damped_quadrature() -> CheckResult:
	"""
	Fixed-eps quadrature of the quarter-turn kernel against Weber's closed form.
	"""
	spec = evolution.QuadratureSpec()
	worst = 0.0
	for l in (-0.25, 0.25):
		params = spectral.make_params(l, math.pi / 2.0)
		quadrature = evolution.damped_kernel_quadrature(params, spec, 1.0, 0.5, 0.7, 1.3)
		closed = evolution.damped_kernel_pi2(params, 1.0, 0.5, 0.7, 1.3)
		worst = max(worst, abs(quadrature.value - closed.value))
	return _result("damped_quadrature", worst, 1e-7)


#============================================
def check_quadrature_vs_closed() -> CheckResult:
	"""
	eps -> 0 quadrature against the closed kernels at alpha = 0 and pi/2.
	"""
	spec = evolution.QuadratureSpec()
	t, x, y = (2.0, 0.5, 1.0)
	worst = 0.0
	for l in (-0.25, 0.25):
		for alpha in (0.0, math.pi / 2.0):
			params = spectral.make_params(l, alpha)
			quadrature = evolution.kernel_quadrature(params, spec, t, x, y)
			closed = evolution.continuous_kernel(params, spec, t, x, y)
			worst = max(worst, abs(quadrature.value - closed.value))
	return _result("quadrature_vs_closed", worst, 1e-6)


#============================================
def check_split_and_corput() -> list:
	"""
	Split recombination against the unsplit integrand, and the van der Corput diagnostic.
	"""
	spec = evolution.QuadratureSpec()
	t, x, y = QUADRATURE_POINT
	params = spectral.make_params(0.25, 1.0)
	split = evolution.split_integrals(params, spec, t, x, y)
	direct = evolution.direct_kernel_quadrature(params, spec, t, x, y)
	recombined = _result("split_recombination", abs(split.recombine() - direct.value), 1e-6)
	entries = evolution.van_der_corput_check(params, spec, t, x, y, split)
	margin = max(entry.scaled_value / entry.bound for entry in entries)
	failed = [entry.name for entry in entries if not entry.passed]
	detail = "all within bound" if not failed else "over bound: " + ", ".join(failed)
	corput = CheckResult("van_der_corput", not failed, margin, 1.0, detail)
	return [recombined, corput]


#============================================
def check_decay_bounds() -> list:
	"""
	Upper bound at l in {-0.4, 0, 0.4} on the default grid and sharpness at l = 0.25.
	"""
	params_list = [spectral.make_params(l, math.pi / 2.0) for l in (-0.4, 0.0, 0.4)]
	times = decay.make_time_grid(decay.DEFAULT_T_MIN, decay.DEFAULT_T_MAX, decay.DEFAULT_T_COUNT)
	grid = decay.make_log_grid(decay.DEFAULT_X_MIN, decay.DEFAULT_X_MAX, decay.DEFAULT_X_COUNT)
	results = []
	constants = []
	for params in params_list:
		report = decay.check_upper_bound(params, times, grid)
		constants.append(report.constant)
		# slice stability is only expected where the envelope is flat
		if params.l == 0.0:
			results.append(_result("upper_bound_slices", report.slice_ratio, decay.SLICE_RATIO_LIMIT, "l = 0"))
	results.insert(0, _result("upper_bound", max(constants), specfun.ENVELOPE_CONSTANT, "fitted C"))
	sharpness = decay.check_sharpness(spectral.make_params(0.25, math.pi / 2.0), (10.0, 100.0, 1000.0))
	results.append(_result("sharpness_drift", sharpness.max_drift_per_decade, decay.SHARPNESS_DRIFT_LIMIT,
		f"c = {sharpness.constant:.4g}"))
	return results


#============================================
def _guarded(name: str, check, *args) -> list:
	"""
	Run one check, turning numerical failures into a failed CheckResult.
	"""
	try:
		outcome = check(*args)
	except (ValueError, ArithmeticError, RuntimeError) as error:
		return [CheckResult(name, False, math.nan, math.nan, f"{type(error).__name__}: {error}")]
	if isinstance(outcome, CheckResult):
		return [outcome]
	return list(outcome)


#============================================
def run_suite(seed: int = 0, include_quadrature: bool = True, progress=None) -> list:
	"""
	Run every check in order.

	Args:
		seed: Seed of the randomized Herglotz check.
		include_quadrature: Also run the slower quadrature-backed checks.
		progress: Optional callable taking the check name before it runs.

	Returns:
		List of CheckResult.
	"""
	checks = [
		("bessel_wronskian", check_bessel_wronskian, ()),
		("bessel_closed_forms", check_bessel_closed_forms, ()),
		("regime_overlap", check_regime_overlap, ()),
		("envelope_bound", check_envelope_bound, ()),
		("solution_wronskian", check_solution_wronskian, ()),
		("weyl_alignment", check_weyl_alignment, ()),
		("boundary_functionals", check_boundary_functionals, ()),
		("image_method", check_image_method, ()),
		("eigenvalues", check_eigenvalues, ()),
		("density_limit", check_density_limit, ()),
		("herglotz", check_herglotz, (seed,)),
		("decay_bounds", check_decay_bounds, ()),
	]
	if include_quadrature:
		checks += [
			("fresnel", check_fresnel, ()),
			("spectral_function", check_spectral_function, ()),
			("damped_quadrature", check_damped_quadrature, ()),
			("quadrature_vs_closed", check_quadrature_vs_closed, ()),
			("split_and_corput", check_split_and_corput, ()),
		]
	results = []
	for name, check, args in checks:
		if progress is not None:
			progress(name)
		results.extend(_guarded(name, check, *args))
	return results
