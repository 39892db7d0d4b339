"""
Gaussian-damped panel quadrature for integrals of e^{-itk^2} A(k) over (0, inf).

The amplitude is sampled once on a panel grid. Each damping rung
eps_m multiplies the same samples by e^{-eps_m k^2}, and the rung values
are extrapolated polynomially to eps = 0.
"""

# Standard Library
import math
import dataclasses

# PIP3 modules
import numpy
import scipy.special

# Gauss-Legendre nodes per panel
GAUSS_NODES = 6

DEFAULT_PANELS_PER_PERIOD = 8
DEFAULT_RUNGS = 6
DEFAULT_EXTRAPOLATION_ORDER = 5

# the grid reaches k with eps_min k^2 = DAMPING_EXPONENT_CUT
DAMPING_EXPONENT_CUT = 36.0

# dyadic panels between the first oscillatory panel and the origin
GRADING_LEVELS = 60

# widest panel allowed regardless of phase
MAX_PANEL_WIDTH = 0.25

# universal constant of the van der Corput lemma for the quadratic phase
VAN_DER_CORPUT_CONSTANT = 2.0 ** (8.0 / 3.0)

WIENER_SAMPLES = 4096

MACHINE_EPS = float(numpy.finfo(float).eps)

_GAUSS_CACHE = {}


#============================================
class QuadratureError(RuntimeError):
	"""
	Raised when the damped quadrature or its extrapolation breaks down.
	"""


#============================================
@dataclasses.dataclass(frozen=True)
class PanelGrid:
	"""
	Quadrature nodes and weights on (inner_edge, cutoff).
	"""
	nodes: numpy.ndarray
	weights: numpy.ndarray
	inner_edge: float
	cutoff: float
	panel_count: int


#============================================
@dataclasses.dataclass(frozen=True)
class OscillatoryResult:
	"""
	Extrapolated integrals, one per amplitude component.

	damped holds the rung values with shape (rungs, components).
	"""
	values: numpy.ndarray
	est_errors: numpy.ndarray
	damped: numpy.ndarray
	eps_ladder: numpy.ndarray
	cutoff: float


#============================================
def gauss_legendre(count: int) -> tuple:
	"""
	Cached Gauss-Legendre nodes and weights on [-1, 1].
	"""
	if count not in _GAUSS_CACHE:
		_GAUSS_CACHE[count] = scipy.special.roots_legendre(count)
	return _GAUSS_CACHE[count]


#============================================
def default_first_rung(t: float, spread: float) -> float:
	"""
	Largest damping eps_0 = min(t/4, 4 t^2 / spread^2).

	Keeps eps_0 small against |eps + it| and against the Gaussian
	image width of a Fourier atom at distance spread.
	"""
	# every rung stays inside |eps| < t, where the damped integral is analytic in eps;
	# a fixed 1/(4t) start would leave that disk for t < 1/2
	first = t / 4.0
	if spread > 0:
		first = min(first, 4.0 * t * t / (spread * spread))
	return first

# Simple assertion test for default_first_rung
assert default_first_rung(1.0, 0.0) == 0.25

#============================================
def geometric_ladder(eps0: float, rungs: int) -> numpy.ndarray:
	"""
	Damping ladder eps0 2^{-m}, m = 0 .. rungs-1.
	"""
	ladder = eps0 * 2.0 ** (-numpy.arange(rungs, dtype=float))
	return ladder


#============================================
def damping_cutoff(eps_min: float) -> float:
	"""
	k where e^{-eps_min k^2} reaches e^{-DAMPING_EXPONENT_CUT}.
	"""
	return math.sqrt(DAMPING_EXPONENT_CUT / eps_min)


#============================================
def _phase_to_k(phase: numpy.ndarray, t: float, spread: float) -> numpy.ndarray:
	"""
	Invert t k^2 + spread k = phase for k >= 0.
	"""
	k_values = 2.0 * phase / (spread + numpy.sqrt(spread * spread + 4.0 * t * phase))
	return k_values


#============================================
def head_position(t: float, spread: float, cutoff: float, panels_per_period: int) -> float:
	"""
	Start h of the phase-uniform panels.

	The first phase panel is at most about h/2 wide, so it sits as far
	from an algebraic singularity at k = 0 as the dyadic panels below it.
	"""
	span = 2.0 * math.pi / panels_per_period
	# width span / (2 t k + spread) equals k / 2
	balanced = (math.sqrt(spread * spread + 16.0 * t * span) - spread) / (4.0 * t)
	head = max(0.25 / max(1.0, spread, math.sqrt(t)), balanced)
	head = min(head, 2.0 * MAX_PANEL_WIDTH, cutoff / 2.0)
	return head


#============================================
def build_panel_grid(t: float, spread: float, cutoff: float, panels_per_period: int) -> PanelGrid:
	"""
	Panel grid resolving the phase t k^2 + spread k up to cutoff.

	Above the head h (see head_position) panels have equal phase span
	2 pi / panels_per_period. Below h the panels halve in width down to
	h 2^{-GRADING_LEVELS}, which resolves algebraic behavior k^beta at
	the origin.

	Args:
		t: Time, > 0.
		spread: Sum of the frequencies x + y carried by the amplitude.
		cutoff: Upper end of the grid.
		panels_per_period: Panels per 2 pi of phase.

	Returns:
		PanelGrid.
	"""
	head = head_position(t, spread, cutoff, panels_per_period)

	# dyadic panels toward the origin
	graded = head * 2.0 ** (-numpy.arange(GRADING_LEVELS + 1, dtype=float))
	graded_edges = graded[::-1]

	def phase(k_value: float) -> float:
		return t * k_value * k_value + spread * k_value

	phase_span = phase(cutoff) - phase(head)
	phase_count = math.ceil(phase_span * panels_per_period / (2.0 * math.pi))
	rate_at_head = 2.0 * t * head + spread
	width_count = math.ceil(phase_span / (rate_at_head * MAX_PANEL_WIDTH))
	count = max(phase_count, width_count, 4)
	phase_edges = numpy.linspace(phase(head), phase(cutoff), count + 1)
	oscillatory_edges = _phase_to_k(phase_edges, t, spread)
	oscillatory_edges[0] = head
	oscillatory_edges[-1] = cutoff

	edges = numpy.concatenate([graded_edges, oscillatory_edges[1:]])
	left = edges[:-1]
	right = edges[1:]
	reference_nodes, reference_weights = gauss_legendre(GAUSS_NODES)
	half_width = 0.5 * (right - left)
	middle = 0.5 * (right + left)
	nodes = (middle[:, None] + half_width[:, None] * reference_nodes[None, :]).reshape(-1)
	weights = (half_width[:, None] * reference_weights[None, :]).reshape(-1)
	grid = PanelGrid(nodes, weights, float(edges[0]), float(cutoff), len(left))
	return grid


#============================================
def _inner_correction(amplitude, inner_edge: float, t: float) -> numpy.ndarray:
	"""
	Integral over (0, inner_edge) for amplitudes behaving like k^beta.

	beta is read off the ratio of the amplitude at inner_edge and
	inner_edge / 2.
	"""
	edge_points = numpy.array([inner_edge, inner_edge / 2.0])
	samples = numpy.atleast_2d(amplitude(edge_points))
	outer = numpy.abs(samples[:, 0])
	inner = numpy.abs(samples[:, 1])
	corrections = numpy.zeros(samples.shape[0], dtype=complex)
	for index in range(samples.shape[0]):
		if outer[index] == 0 or inner[index] == 0:
			continue
		beta = math.log2(outer[index] / inner[index])
		if beta <= -1.0 + 1e-3:
			raise QuadratureError(f"amplitude ~ k^{beta:.3f} is not integrable at the origin")
		phase = numpy.exp(-1j * t * inner_edge * inner_edge)
		corrections[index] = samples[index, 0] * phase * inner_edge / (beta + 1.0)
	return corrections


#============================================
def extrapolation_weights(eps_ladder: numpy.ndarray, order: int) -> numpy.ndarray:
	"""
	Weights w_m with P(0) = sum_m w_m F(eps_m) for the degree-order least-squares polynomial.
	"""
	rungs = len(eps_ladder)
	if order < 1 or rungs < order + 1:
		raise QuadratureError(f"need at least {order + 1} rungs for order {order}, got {rungs}")
	scaled = numpy.asarray(eps_ladder, dtype=float) / float(numpy.max(eps_ladder))
	vandermonde = numpy.vander(scaled, order + 1, increasing=True)
	weights = numpy.linalg.pinv(vandermonde)[0]
	return weights


#============================================
def extrapolate_to_zero(eps_ladder, damped: numpy.ndarray, order: int) -> tuple:
	"""
	Polynomial extrapolation of rung values to eps = 0.

	The error estimate is the largest change against degree order - 1
	fitted to the smallest rungs, to the whole ladder and to the ladder
	without its last step.

	Args:
		eps_ladder: Strictly decreasing damping values.
		damped: Values with shape (rungs,) or (rungs, components).
		order: Polynomial degree.

	Returns:
		Tuple (values, est_errors).
	"""
	eps_ladder = numpy.asarray(eps_ladder, dtype=float)
	damped = numpy.asarray(damped)
	high = extrapolation_weights(eps_ladder, order) @ damped
	lower_fits = (
		extrapolation_weights(eps_ladder[-order:], order - 1) @ damped[-order:],
		extrapolation_weights(eps_ladder, order - 1) @ damped,
		extrapolation_weights(eps_ladder[:-1], order - 1) @ damped[:-1],
	)
	errors = numpy.max([numpy.abs(high - low) for low in lower_fits], axis=0)
	result_tuple = (high, errors)
	return result_tuple

# Simple assertion test for extrapolate_to_zero: exact for a cubic
_test_ladder = geometric_ladder(1.0, 6)
_test_values, _ = extrapolate_to_zero(_test_ladder, 2.0 + _test_ladder ** 3, 5)
assert abs(_test_values - 2.0) < 1e-10

#============================================
def damped_integrals(amplitude, t: float, spread: float, eps_values, panels_per_period: int,
	k_max: float | None = None) -> tuple:
	"""
	Damped integrals of e^{-(it + eps) k^2} A_j(k) over (0, inf) for every eps.

	Args:
		amplitude: Callable k_array -> array (components, len(k)).
		t: Time, > 0.
		spread: Frequency sum x + y of the amplitude.
		eps_values: Damping values, all > 0.
		panels_per_period: Panels per 2 pi of phase.
		k_max: Optional hard cap on the grid cutoff.

	Returns:
		Tuple (values (rungs, components), error_bounds (rungs, components), grid).
	"""
	if not t > 0:
		raise QuadratureError(f"damped integrals need t > 0, got {t}")
	eps_values = numpy.asarray(eps_values, dtype=float)
	if numpy.any(eps_values <= 0):
		raise QuadratureError("damping values must be positive")
	eps_min = float(numpy.min(eps_values))
	cutoff = damping_cutoff(eps_min)
	if k_max is not None:
		cutoff = min(cutoff, float(k_max))
	grid = build_panel_grid(t, spread, cutoff, panels_per_period)

	samples = numpy.atleast_2d(amplitude(grid.nodes))
	oscillation = grid.weights * numpy.exp(-1j * t * grid.nodes ** 2)
	inner = _inner_correction(amplitude, grid.inner_edge, t)

	# amplitude bound near the cutoff for the Gaussian tail
	tail_start = grid.nodes >= grid.inner_edge + 0.95 * (cutoff - grid.inner_edge)
	if numpy.any(tail_start):
		amplitude_sup = 2.0 * numpy.max(numpy.abs(samples[:, tail_start]), axis=1)
	else:
		amplitude_sup = 2.0 * numpy.max(numpy.abs(samples), axis=1)

	values = numpy.zeros((len(eps_values), samples.shape[0]), dtype=complex)
	bounds = numpy.zeros((len(eps_values), samples.shape[0]))
	for index, eps in enumerate(eps_values):
		damping = numpy.exp(-eps * grid.nodes ** 2)
		values[index] = samples @ (oscillation * damping) + inner
		rounding = MACHINE_EPS * (numpy.abs(samples) @ (grid.weights * damping))
		tail = amplitude_sup * math.exp(-eps * cutoff * cutoff) / (2.0 * eps * cutoff)
		bounds[index] = 8.0 * rounding + tail
	result_tuple = (values, bounds, grid)
	return result_tuple


#============================================
def oscillatory_integral(amplitude, t: float, spread: float, eps_ladder, order: int,
	panels_per_period: int, k_max: float | None = None) -> OscillatoryResult:
	"""
	Improper integral of e^{-itk^2} A_j(k) over (0, inf) as the eps -> 0 limit.

	Args:
		amplitude: Callable k_array -> array (components, len(k)).
		t: Time, > 0.
		spread: Frequency sum x + y of the amplitude.
		eps_ladder: Strictly decreasing damping ladder.
		order: Extrapolation degree.
		panels_per_period: Panels per 2 pi of phase.
		k_max: Optional hard cap on the grid cutoff.

	Returns:
		OscillatoryResult.
	"""
	eps_ladder = numpy.asarray(eps_ladder, dtype=float)
	if numpy.any(numpy.diff(eps_ladder) >= 0):
		raise QuadratureError("damping ladder must be strictly decreasing")
	damped, bounds, grid = damped_integrals(
		amplitude, t, spread, eps_ladder, panels_per_period, k_max,
	)
	values, spread_errors = extrapolate_to_zero(eps_ladder, damped, order)
	propagated = numpy.abs(extrapolation_weights(eps_ladder, order)) @ bounds
	est_errors = spread_errors + propagated
	if not numpy.all(numpy.isfinite(values)):
		raise QuadratureError("extrapolated integral is not finite")
	result = OscillatoryResult(values, est_errors, damped, eps_ladder, grid.cutoff)
	return result


#============================================
def wiener_norm_proxy(amplitude, cutoff: float, samples: int = WIENER_SAMPLES) -> numpy.ndarray:
	"""
	Total mass of the discrete Fourier transform of each amplitude.

	The amplitude is sampled at midpoints of (0, cutoff), extended evenly
	and transformed. The result bounds every sample from above and
	stands in for the Wiener algebra norm.

	Args:
		amplitude: Callable k_array -> array (components, len(k)).
		cutoff: Sampling window end.
		samples: Number of midpoint samples.

	Returns:
		Real array, one proxy per component.
	"""
	step = cutoff / samples
	k_values = step * (numpy.arange(samples) + 0.5)
	values = numpy.atleast_2d(amplitude(k_values))
	extended = numpy.concatenate([values[:, ::-1], values], axis=1)
	spectrum = numpy.fft.fft(extended, axis=1)
	proxy = numpy.sum(numpy.abs(spectrum), axis=1) / extended.shape[1]
	return proxy
