"""
Run configuration: defaults, YAML config files and command-line overrides.
"""

# Standard Library
import os
import math
import dataclasses

# PIP3 modules
import yaml
import numpy

# local repo modules
import decay
import spectral
import evolution
import oscillatory_quadrature

THREADS_ENV = "RADIAL_DISPERSE_THREADS"

FORMAT_CSV = "csv"
FORMAT_JSON = "json"
OUTPUT_FORMATS = (FORMAT_CSV, FORMAT_JSON)

# pick unweighted for l <= 0 and Friedrichs weights for l > 0
WEIGHT_AUTO = "auto"


#============================================
class ConfigError(ValueError):
	"""
	Raised for an invalid configuration value or file.
	"""


#============================================
@dataclasses.dataclass(frozen=True)
class RunConfig:
	"""
	Everything one CLI run needs.

	Quadrature fields left at None fall back to the integrator defaults.
	"""
	l: float = 0.0
	alpha: float = math.pi / 2.0
	t_min: float = decay.DEFAULT_T_MIN
	t_max: float = decay.DEFAULT_T_MAX
	t_count: int = decay.DEFAULT_T_COUNT
	t_log: bool = True
	x_min: float = decay.DEFAULT_X_MIN
	x_max: float = decay.DEFAULT_X_MAX
	x_count: int = decay.DEFAULT_X_COUNT
	lambda_min: float = 0.01
	lambda_max: float = 10.0
	lambda_count: int = 50
	eps0: float | None = None
	k_max: float | None = None
	panels_per_period: int = oscillatory_quadrature.DEFAULT_PANELS_PER_PERIOD
	extrapolation_order: int = oscillatory_quadrature.DEFAULT_EXTRAPOLATION_ORDER
	weight: str = WEIGHT_AUTO
	include_bound_state: bool = False
	output: str | None = None
	output_format: str = FORMAT_CSV
	seed: int = 0

	def __post_init__(self):
		if not 0 < self.t_min <= self.t_max:
			raise ConfigError(f"need 0 < t_min <= t_max, got ({self.t_min}, {self.t_max})")
		if not 0 < self.x_min <= self.x_max:
			raise ConfigError(f"need 0 < x_min <= x_max, got ({self.x_min}, {self.x_max})")
		if not self.lambda_min <= self.lambda_max:
			raise ConfigError(f"need lambda_min <= lambda_max, got ({self.lambda_min}, {self.lambda_max})")
		for name in ("t_count", "x_count", "lambda_count"):
			if getattr(self, name) < 1:
				raise ConfigError(f"{name} must be >= 1")
		if self.output_format not in OUTPUT_FORMATS:
			raise ConfigError(f"format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
		if self.weight not in (WEIGHT_AUTO,) + decay.WEIGHT_KINDS:
			raise ConfigError(f"unknown weight {self.weight!r}")

	def params(self) -> spectral.ProblemParams:
		"""Validated problem parameters."""
		return spectral.make_params(self.l, self.alpha)

	def quadrature_spec(self) -> evolution.QuadratureSpec:
		"""QuadratureSpec from the quadrature fields."""
		spec = evolution.QuadratureSpec(
			eps0=self.eps0,
			k_max=self.k_max,
			panels_per_period=self.panels_per_period,
			extrapolation_order=self.extrapolation_order,
			rungs=max(oscillatory_quadrature.DEFAULT_RUNGS, self.extrapolation_order + 1),
		)
		return spec

	def times(self) -> numpy.ndarray:
		"""Time grid."""
		return decay.make_time_grid(self.t_min, self.t_max, self.t_count, self.t_log)

	def x_axis(self) -> numpy.ndarray:
		"""Log-spaced axis shared by x and y."""
		return numpy.geomspace(self.x_min, self.x_max, self.x_count)

	def xy_grid(self) -> tuple:
		"""Tensor-product (x, y) pairs."""
		return decay.make_log_grid(self.x_min, self.x_max, self.x_count)

	def lambdas(self) -> numpy.ndarray:
		"""Energy grid of the spectrum table."""
		return numpy.linspace(self.lambda_min, self.lambda_max, self.lambda_count)

	def weight_spec(self) -> decay.WeightSpec:
		"""Resolve the auto weight against the sign of l."""
		kind = self.weight
		if kind == WEIGHT_AUTO:
			kind = decay.WEIGHT_FRIEDRICHS if self.l > 0 else decay.WEIGHT_UNWEIGHTED
		return decay.WeightSpec(kind, self.l)

FIELD_NAMES = tuple(field.name for field in dataclasses.fields(RunConfig))


#============================================
def load_config(path: str) -> dict:
	"""
	Load configuration values from a YAML file.

	Args:
		path: Path to a YAML mapping whose keys are RunConfig field names.

	Returns:
		Dictionary with configuration values.
	"""
	with open(path, "r", encoding="ascii") as config_file:
		try:
			config = yaml.safe_load(config_file)
		except yaml.YAMLError as error:
			raise ConfigError(f"config file {path} is not valid YAML: {error}") from error
	if config is None:
		return {}
	if not isinstance(config, dict):
		raise ConfigError(f"config file {path} must hold a mapping")
	unknown = sorted(set(config) - set(FIELD_NAMES))
	if unknown:
		raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
	return config


#============================================
def build_config(flag_values: dict, file_values: dict | None = None) -> RunConfig:
	"""
	Merge flags over config-file values over defaults.

	Args:
		flag_values: Values from the command line; None means not given.
		file_values: Values from load_config.

	Returns:
		Validated RunConfig.
	"""
	merged = {}
	if file_values:
		merged.update(file_values)
	for name, value in flag_values.items():
		if name in FIELD_NAMES and value is not None:
			merged[name] = value
	try:
		config = RunConfig(**merged)
	except TypeError as error:
		raise ConfigError(str(error)) from error
	return config

# Simple assertion test for build_config: flags win over file values
assert build_config({"l": 0.25}, {"l": -0.25, "seed": 3}).l == 0.25

#============================================
def worker_count() -> int:
	"""
	Worker processes allowed: CPU count, capped by RADIAL_DISPERSE_THREADS.
	"""
	count = os.cpu_count() or 1
	raw = os.environ.get(THREADS_ENV)
	if raw is None or raw == "":
		return count
	try:
		cap = int(raw)
	except ValueError as error:
		raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from error
	if cap < 1:
		raise ConfigError(f"{THREADS_ENV} must be >= 1, got {cap}")
	return min(count, cap)
