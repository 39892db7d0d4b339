"""
Weighted sup-norm scans of the evolution kernel over time, power-law
fits of their decay, and the upper bound and sharpness checks at the
quarter-turn boundary condition.
"""

# Standard Library
import math
import functools
import dataclasses
import concurrent.futures

# PIP3 modules
import numpy

# local repo modules
import specfun
import spectral
import evolution

WEIGHT_UNWEIGHTED = "unweighted"
WEIGHT_FRIEDRICHS = "friedrichs_weight"
WEIGHT_KINDS = (WEIGHT_UNWEIGHTED, WEIGHT_FRIEDRICHS)

# default x and y grid, log spaced
DEFAULT_X_MIN = 0.05
DEFAULT_X_MAX = 20.0
DEFAULT_X_COUNT = 25

# default time grid, log spaced
DEFAULT_T_MIN = 10.0
DEFAULT_T_MAX = 1000.0
DEFAULT_T_COUNT = 12

MIN_FIT_POINTS = 4
MIN_FIT_DECADES = 1.5

# max/min of the per-slice constants in the upper bound check
SLICE_RATIO_LIMIT = 1.2

# relative change per decade allowed in the sharpness constant
SHARPNESS_DRIFT_LIMIT = 0.10


#============================================
class FitError(ValueError):
	"""
	Raised when a decay fit has too few points or too short a time span.
	"""


#============================================
@dataclasses.dataclass(frozen=True)
class WeightSpec:
	"""
	Weights of the L^1 -> L^inf norm.

	friedrichs_weight uses source weight max(x^-l, 1) and target weight
	min(x^l, 1); unweighted uses 1 for both.
	"""
	kind: str
	l: float

	def __post_init__(self):
		if self.kind not in WEIGHT_KINDS:
			raise ValueError(f"weight kind must be one of {WEIGHT_KINDS}, got {self.kind!r}")


#============================================
@dataclasses.dataclass(frozen=True)
class DecayScan:
	"""
	Weighted kernel sup norms over time with the fitted power law.
	"""
	times: tuple
	norms: tuple
	fitted_exponent: float
	fit_residual: float
	grid: tuple
	weight: WeightSpec
	continuous_only: bool = True


#============================================
@dataclasses.dataclass(frozen=True)
class BoundReport:
	"""
	Result of the upper bound check.

	constant is the fitted C (the max ratio over the grid); slice_constants
	holds the max ratio per time slice.
	"""
	l: float
	constant: float
	slice_constants: tuple
	slice_ratio: float
	passed: bool
	stable: bool


#============================================
@dataclasses.dataclass(frozen=True)
class SharpnessReport:
	"""
	Result of the lower bound check for xy < t.
	"""
	l: float
	constant: float
	slice_constants: tuple
	max_drift_per_decade: float
	passed: bool


#============================================
def weight_values(w: WeightSpec, x) -> tuple:
	"""
	Source and target weights at x.

	Returns:
		Tuple (source, target) of arrays shaped like x.
	"""
	x_array = numpy.asarray(x, dtype=float)
	if w.kind == WEIGHT_UNWEIGHTED:
		ones = numpy.ones(x_array.shape)
		result_tuple = (ones, ones)
		return result_tuple
	source = numpy.maximum(x_array ** (-w.l), 1.0)
	target = numpy.minimum(x_array ** w.l, 1.0)
	result_tuple = (source, target)
	return result_tuple


#============================================
def make_log_grid(minimum: float, maximum: float, count: int) -> tuple:
	"""
	Tensor-product (x, y) pairs on a log-spaced axis.

	Args:
		minimum: Smallest coordinate, > 0.
		maximum: Largest coordinate.
		count: Points per axis, >= 1.

	Returns:
		Tuple of (x, y) pairs.
	"""
	if not (0 < minimum <= maximum) or count < 1:
		raise ValueError(f"invalid grid range ({minimum}, {maximum}, {count})")
	axis = numpy.geomspace(minimum, maximum, count)
	pairs = tuple((float(x), float(y)) for x in axis for y in axis)
	return pairs


#============================================
def make_time_grid(minimum: float, maximum: float, count: int, log_spaced: bool = True) -> numpy.ndarray:
	"""
	Strictly increasing times in [minimum, maximum].
	"""
	if not (0 < minimum <= maximum) or count < 1:
		raise ValueError(f"invalid time range ({minimum}, {maximum}, {count})")
	if log_spaced:
		return numpy.geomspace(minimum, maximum, count)
	return numpy.linspace(minimum, maximum, count)


#============================================
def _grid_arrays(grid) -> tuple:
	"""
	Split (x, y) pairs into two float arrays.
	"""
	if len(grid) == 0:
		raise ValueError("grid must be nonempty")
	pairs = numpy.asarray(grid, dtype=float)
	if numpy.any(pairs <= 0):
		raise ValueError("grid points must be > 0")
	result_tuple = (pairs[:, 0], pairs[:, 1])
	return result_tuple


#============================================
def kernel_on_pairs(params: spectral.ProblemParams, spec: evolution.QuadratureSpec, t: float,
	grid, continuous_only: bool = True) -> numpy.ndarray:
	"""
	|kernel(t, x, y)| at every (x, y) pair of the grid.

	The kernel is evaluated on the tensor grid of the distinct x and y
	values, which is the grid itself for make_log_grid pairs.
	"""
	x_array, y_array = _grid_arrays(grid)
	x_axis, x_index = numpy.unique(x_array, return_inverse=True)
	y_axis, y_index = numpy.unique(y_array, return_inverse=True)
	values, _, _ = evolution.kernel_matrix(params, spec, t, x_axis, y_axis, continuous_only)
	return numpy.abs(values[x_index, y_index])


#============================================
def weighted_sup(params: spectral.ProblemParams, spec: evolution.QuadratureSpec, t: float,
	grid, w: WeightSpec, continuous_only: bool = True) -> float:
	"""
	Max over the grid of w_target(x) |kernel(t, x, y)| w_target(y).

	Args:
		params: Problem parameters.
		spec: Quadrature configuration.
		t: Time.
		grid: Nonempty sequence of (x, y) pairs, all > 0.
		w: Weight specification.
		continuous_only: Drop the bound state term.

	Returns:
		Positive float.
	"""
	x_array, y_array = _grid_arrays(grid)
	magnitudes = kernel_on_pairs(params, spec, t, grid, continuous_only)
	_, target_x = weight_values(w, x_array)
	_, target_y = weight_values(w, y_array)
	value = float(numpy.max(target_x * magnitudes * target_y))
	return value


#============================================
def fit_decay_exponent(scan_points) -> tuple:
	"""
	Least-squares slope of log norm against log t.

	Args:
		scan_points: Sequence of (t, norm) pairs, t and norm > 0.

	Returns:
		Tuple (slope, rms_residual).
	"""
	points = numpy.asarray(scan_points, dtype=float)
	if points.ndim != 2 or len(points) < MIN_FIT_POINTS:
		raise FitError(f"need at least {MIN_FIT_POINTS} scan points")
	if numpy.any(points <= 0):
		raise FitError("times and norms must be positive")
	log_t = numpy.log10(points[:, 0])
	log_norm = numpy.log10(points[:, 1])
	span = float(numpy.max(log_t) - numpy.min(log_t))
	if span < MIN_FIT_DECADES:
		raise FitError(f"time span of {span:.2f} decades is below {MIN_FIT_DECADES}")
	slope, intercept = numpy.polyfit(log_t, log_norm, 1)
	residuals = log_norm - (slope * log_t + intercept)
	rms = float(numpy.sqrt(numpy.mean(residuals ** 2)))
	result_tuple = (float(slope), rms)
	return result_tuple

# Simple assertion test for fit_decay_exponent
_test_times = numpy.geomspace(10.0, 1000.0, 5)
assert abs(fit_decay_exponent(list(zip(_test_times, 3.0 * _test_times ** -0.5)))[0] + 0.5) < 1e-12

#============================================
def scan_decay(params: spectral.ProblemParams, spec: evolution.QuadratureSpec, times, grid,
	w: WeightSpec, continuous_only: bool = True, workers: int = 1) -> DecayScan:
	"""
	Weighted sup norm at every time plus the fitted decay exponent.

	Quadrature-backed scans fan out over a process pool when workers > 1.
	Results keep the order of times.

	Args:
		params: Problem parameters.
		spec: Quadrature configuration.
		times: Strictly increasing positive times.
		grid: (x, y) pairs.
		w: Weight specification.
		continuous_only: Drop the bound state term.
		workers: Process count for quadrature scans.

	Returns:
		DecayScan.
	"""
	times = [float(t) for t in times]
	if any(later <= earlier for earlier, later in zip(times, times[1:])):
		raise ValueError("times must be strictly increasing")
	task = functools.partial(
		weighted_sup, params, spec, grid=grid, w=w, continuous_only=continuous_only,
	)
	if workers > 1 and not evolution.has_closed_form(params):
		with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
			norms = list(executor.map(task, times))
	else:
		norms = [task(t) for t in times]
	exponent, residual = fit_decay_exponent(list(zip(times, norms)))
	scan = DecayScan(tuple(times), tuple(norms), exponent, residual, tuple(grid), w, continuous_only)
	return scan


#============================================
def expected_exponent(params: spectral.ProblemParams, w: WeightSpec) -> float:
	"""
	Decay exponent of the L^1 -> L^inf norm asserted by the dispersive estimates.

	-1/2 + l for the quarter-turn condition with l > 0, -1/2 otherwise.
	The weighted norm is needed for l > 0 to make the sup finite.
	"""
	if params.cos_alpha == 0.0 and params.l > 0:
		return -0.5 + params.l
	return -0.5


#============================================
def check_upper_bound(params: spectral.ProblemParams, t_grid, xy_grid) -> BoundReport:
	"""
	Check |K_{pi/2}| sqrt(2t) (xy/(2t+xy))^l <= C over the whole grid.

	C is fitted as the max ratio and must not exceed
	specfun.ENVELOPE_CONSTANT. Per-slice constants are reported with
	their max/min ratio; stable means that ratio is <= SLICE_RATIO_LIMIT.

	Args:
		params: Problem parameters (only l is read).
		t_grid: Positive times.
		xy_grid: (x, y) pairs.

	Returns:
		BoundReport.
	"""
	x_array, y_array = _grid_arrays(xy_grid)
	product = x_array * y_array
	slice_constants = []
	for t in t_grid:
		kernel = evolution.kernel_pi2_closed(params, t, x_array, y_array)
		ratio = numpy.abs(kernel.value) * math.sqrt(2.0 * t) * (product / (2.0 * t + product)) ** params.l
		slice_constants.append(float(numpy.max(ratio)))
	constant = max(slice_constants)
	slice_ratio = constant / min(slice_constants)
	report = BoundReport(
		params.l,
		constant,
		tuple(slice_constants),
		slice_ratio,
		constant <= specfun.ENVELOPE_CONSTANT,
		slice_ratio <= SLICE_RATIO_LIMIT,
	)
	return report


#============================================
def check_sharpness(params: spectral.ProblemParams, t_grid, points=((0.5, 0.5),)) -> SharpnessReport:
	"""
	Check |K_{pi/2}(t, x, y)| >= c t^{l-1/2} (xy/2)^{-l} on points with xy < t.

	c is fitted as the smallest ratio. The ratio must also settle: its
	relative change per decade of t stays below SHARPNESS_DRIFT_LIMIT.

	Args:
		params: Problem parameters with 0 < l < 1/2.
		t_grid: Increasing positive times.
		points: (x, y) pairs.

	Returns:
		SharpnessReport.
	"""
	if not 0 < params.l < 0.5:
		raise spectral.ParameterError(f"sharpness needs 0 < l < 1/2, got {params.l}")
	slice_constants = []
	history = {}
	for t in t_grid:
		ratios = []
		for x_value, y_value in points:
			if x_value * y_value >= t:
				continue
			kernel = evolution.kernel_pi2_closed(params, t, x_value, y_value)
			scale = t ** (params.l - 0.5) * (x_value * y_value / 2.0) ** (-params.l)
			ratio = abs(kernel.value) / scale
			ratios.append(ratio)
			history.setdefault((x_value, y_value), []).append((t, ratio))
		if ratios:
			slice_constants.append(min(ratios))
	if not slice_constants:
		raise ValueError("no grid point satisfies xy < t")
	drift = 0.0
	for samples in history.values():
		for (t_early, early), (t_late, late) in zip(samples, samples[1:]):
			decades = math.log10(t_late / t_early)
			drift = max(drift, abs(late / early - 1.0) / decades)
	constant = min(slice_constants)
	report = SharpnessReport(
		params.l,
		constant,
		tuple(slice_constants),
		drift,
		constant > 0 and drift <= SHARPNESS_DRIFT_LIMIT,
	)
	return report


#============================================
def small_argument_constant(l: float) -> float:
	"""
	Limit of |K_{pi/2}| t^{1/2-l} (xy/2)^l as xy/t -> 0, equal to 2^l / Gamma(1/2 - l).
	"""
	return 2.0 ** l / math.gamma(0.5 - l)
