#!/usr/bin/env python3

# Standard Library
import sys
import argparse
import functools
import concurrent.futures

# local repo modules
import decay
import specfun
import spectral
import evolution
import run_config
import output_writer
import validate_suite

# simple ANSI color codes for terminal output
COLOR_RESET = "\033[0m"
COLOR_BOLD = "\033[1m"
COLOR_RED = "\033[31m"
COLOR_GREEN = "\033[32m"
COLOR_CYAN = "\033[36m"
COLOR_YELLOW = "\033[33m"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_CHECK_FAILED = 4

# rows shown in console tables; files always get every row
CONSOLE_ROWS = 20

#============================================
def _add_run_options(parser: argparse.ArgumentParser) -> None:
	"""
	Options shared by every subcommand. Defaults are None so that
	config-file values survive when a flag is not given.
	"""
	parser.add_argument("-c", "--config", dest="config_file", help="YAML file with run settings")
	parser.add_argument("--l", dest="l", type=float, help="Angular momentum, -1/2 < l < 1/2")
	parser.add_argument("--alpha", dest="alpha", type=float, help="Boundary parameter in [0, pi)")
	parser.add_argument("--t-min", dest="t_min", type=float, help="Smallest time")
	parser.add_argument("--t-max", dest="t_max", type=float, help="Largest time")
	parser.add_argument("--t-count", dest="t_count", type=int, help="Number of times")
	parser.add_argument("--t-log", dest="t_log", action="store_true", default=None,
		help="Log-spaced times (default)")
	parser.add_argument("--t-linear", dest="t_log", action="store_false", default=None,
		help="Linearly spaced times")
	parser.add_argument("--x-min", dest="x_min", type=float, help="Smallest x and y")
	parser.add_argument("--x-max", dest="x_max", type=float, help="Largest x and y")
	parser.add_argument("--x-count", dest="x_count", type=int, help="Points per axis")
	parser.add_argument("--lambda-min", dest="lambda_min", type=float, help="Smallest energy of the spectrum table")
	parser.add_argument("--lambda-max", dest="lambda_max", type=float, help="Largest energy of the spectrum table")
	parser.add_argument("--lambda-count", dest="lambda_count", type=int, help="Energies in the spectrum table")
	parser.add_argument("--eps0", dest="eps0", type=float, help="Largest damping of the eps ladder")
	parser.add_argument("--kmax", dest="k_max", type=float, help="Hard cap on the momentum grid")
	parser.add_argument("--panels-per-period", dest="panels_per_period", type=int,
		help="Quadrature panels per 2 pi of phase")
	parser.add_argument("--extrapolation-order", dest="extrapolation_order", type=int,
		help="Polynomial degree of the eps -> 0 extrapolation")
	parser.add_argument("--weight", dest="weight", choices=("auto",) + decay.WEIGHT_KINDS,
		help="Norm weights of the decay scan")
	parser.add_argument("--include-bound-state", dest="include_bound_state", action="store_true",
		default=None, help="Add the bound state term to kernels and scans")
	parser.add_argument("-o", "--out", dest="output", help="Output file path")
	parser.add_argument("--format", dest="output_format", choices=run_config.OUTPUT_FORMATS,
		help="Output file format")
	parser.add_argument("--seed", dest="seed", type=int, help="Seed for randomized checks")
	parser.add_argument("-q", "--quiet", dest="quiet", action="store_true", help="Hide progress lines")


#============================================
def parse_args(argv: list | None = None) -> argparse.Namespace:
	"""
	Parse command-line arguments.

	Returns:
		Parsed arguments namespace.
	"""
	parser = argparse.ArgumentParser(
		description="Spectral data, evolution kernels and dispersive decay of the radial inverse-square operator",
	)
	subparsers = parser.add_subparsers(dest="command", required=True)
	spectrum_parser = subparsers.add_parser("spectrum", help="Spectral density table and eigenvalue")
	kernel_parser = subparsers.add_parser("kernel", help="Evolution kernel on a (t, x, y) grid")
	decay_parser = subparsers.add_parser("decay", help="Weighted sup-norm decay scan")
	validate_parser = subparsers.add_parser("validate", help="Run the oracle and property checks")
	for sub_parser in (spectrum_parser, kernel_parser, decay_parser, validate_parser):
		_add_run_options(sub_parser)
	validate_parser.add_argument(
		"--skip-quadrature",
		dest="skip_quadrature",
		action="store_true",
		help="Skip the slower quadrature-backed checks",
	)
	args = parser.parse_args(argv)
	return args


#============================================
def load_run_config(args: argparse.Namespace) -> run_config.RunConfig:
	"""
	Merge flags, the optional config file and defaults.
	"""
	file_values = {}
	if args.config_file:
		file_values = run_config.load_config(args.config_file)
	config = run_config.build_config(vars(args), file_values)
	return config


#============================================
def _progress(quiet: bool, tag: str, message: str) -> None:
	"""
	Print one tagged progress line unless quiet.
	"""
	if not quiet:
		print(f"[{tag}] {message}")


#============================================
def _emit(config: run_config.RunConfig, kind: str, metadata: dict, rows: list, quiet: bool) -> None:
	"""
	Write the result file when an output path is set.
	"""
	if not config.output:
		return
	output_writer.write_result(config.output, config.output_format, kind, metadata, rows)
	_progress(quiet, kind, f"wrote {len(rows)} rows to {config.output}")


#============================================
def _base_metadata(params: spectral.ProblemParams) -> dict:
	"""
	Metadata lines common to every result file.
	"""
	metadata = {
		"l": params.l,
		"alpha": params.alpha,
		"c_l": params.c_l,
	}
	return metadata


#============================================
def cmd_spectrum(config: run_config.RunConfig, quiet: bool = False) -> int:
	"""
	Tabulate rho'_alpha on the lambda grid and report the eigenvalue.
	"""
	params = config.params()
	_progress(quiet, "spectrum", f"l = {params.l:g}, alpha = {params.alpha:g}, {config.lambda_count} energies")
	data = spectral.spectral_data(params, config.lambdas())
	rows = [(float(lam), float(rho)) for lam, rho in zip(data.lambdas, data.density)]
	metadata = _base_metadata(params)
	metadata["eigenvalue_exists"] = data.eigen.exists
	metadata["eigenvalue"] = data.eigen.energy
	metadata["eigenvalue_norm_sq"] = data.eigen.norm_sq

	print(f"{COLOR_BOLD}{COLOR_CYAN}Spectral density:{COLOR_RESET}")
	print(output_writer.format_table("spectrum", rows, max_rows=CONSOLE_ROWS))
	if data.eigen.exists:
		print(f"{COLOR_YELLOW}Eigenvalue E_alpha = {data.eigen.energy:.15g}{COLOR_RESET}")
	else:
		print(f"{COLOR_YELLOW}No eigenvalue for alpha in [0, pi/2]{COLOR_RESET}")
	_emit(config, "spectrum", metadata, rows, quiet)
	return EXIT_OK


#============================================
def cmd_kernel(config: run_config.RunConfig, quiet: bool = False) -> int:
	"""
	Kernel on the times x axis x axis grid, one row per point.
	"""
	params = config.params()
	spec = config.quadrature_spec()
	times = config.times()
	axis = config.x_axis()
	continuous_only = not config.include_bound_state
	task = functools.partial(
		evolution.kernel_matrix, params, spec,
		x_values=axis, y_values=axis, continuous_only=continuous_only,
	)
	workers = run_config.worker_count()
	method_name = "closed form" if evolution.has_closed_form(params) else "quadrature"
	_progress(quiet, "kernel", f"{len(times)} times x {len(axis)}^2 points by {method_name}")
	if workers > 1 and not evolution.has_closed_form(params):
		_progress(quiet, "kernel", f"using {workers} worker processes")
		with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
			matrices = list(executor.map(task, times))
	else:
		matrices = [task(t) for t in times]

	rows = []
	for t, (values, errors, method) in zip(times, matrices):
		for i_index, x_value in enumerate(axis):
			for j_index, y_value in enumerate(axis):
				value = complex(values[i_index, j_index])
				rows.append((
					float(t), float(x_value), float(y_value),
					value.real, value.imag, float(errors[i_index, j_index]), method,
				))
	metadata = _base_metadata(params)
	metadata["continuous_only"] = continuous_only

	print(f"{COLOR_BOLD}{COLOR_CYAN}Kernel values:{COLOR_RESET}")
	print(output_writer.format_table("kernel", rows, max_rows=CONSOLE_ROWS))
	_emit(config, "kernel", metadata, rows, quiet)
	return EXIT_OK


#============================================
def cmd_decay(config: run_config.RunConfig, quiet: bool = False) -> int:
	"""
	Weighted sup-norm scan over the time grid with its fitted exponent.
	"""
	params = config.params()
	spec = config.quadrature_spec()
	weight = config.weight_spec()
	times = config.times()
	grid = config.xy_grid()
	_progress(quiet, "decay", f"{len(times)} times, {len(grid)} grid points, weight {weight.kind}")
	scan = decay.scan_decay(
		params, spec, times, grid, weight,
		continuous_only=not config.include_bound_state,
		workers=run_config.worker_count(),
	)
	rows = list(zip(scan.times, scan.norms))
	expected = decay.expected_exponent(params, weight)
	metadata = _base_metadata(params)
	metadata["weight"] = weight.kind
	metadata["continuous_only"] = scan.continuous_only
	metadata["grid"] = f"log {config.x_min:g}..{config.x_max:g} x {config.x_count}"
	metadata["fitted_exponent"] = scan.fitted_exponent
	metadata["fit_residual"] = scan.fit_residual
	metadata["expected_exponent"] = expected

	print(f"{COLOR_BOLD}{COLOR_CYAN}Decay scan:{COLOR_RESET}")
	print(output_writer.format_table("decay", rows, max_rows=CONSOLE_ROWS))
	print(
		f"{COLOR_GREEN}Fitted exponent {scan.fitted_exponent:.4f} "
		f"(residual {scan.fit_residual:.2e}, expected {expected:.4f}){COLOR_RESET}",
	)
	_emit(config, "decay", metadata, rows, quiet)
	return EXIT_OK


#============================================
def cmd_validate(config: run_config.RunConfig, quiet: bool = False, skip_quadrature: bool = False) -> int:
	"""
	Run the oracle suite; exit code 4 when any check fails.
	"""
	results = validate_suite.run_suite(
		seed=config.seed,
		include_quadrature=not skip_quadrature,
		progress=lambda name: _progress(quiet, "validate", name),
	)
	rows = [result.as_row() for result in results]
	print(f"{COLOR_BOLD}{COLOR_CYAN}Validation checks:{COLOR_RESET}")
	print(output_writer.format_table("validate", rows, floatfmt=".3g"))
	failed = [result.name for result in results if not result.passed]
	metadata = {"seed": config.seed, "failed": len(failed)}
	_emit(config, "validate", metadata, rows, quiet)
	if failed:
		print(f"{COLOR_BOLD}{COLOR_RED}{len(failed)} check(s) failed: {', '.join(failed)}{COLOR_RESET}")
		return EXIT_CHECK_FAILED
	print(f"{COLOR_BOLD}{COLOR_GREEN}All {len(results)} checks passed{COLOR_RESET}")
	return EXIT_OK


#============================================
def main(argv: list | None = None) -> int:
	"""
	Main entry point.

	Returns:
		Exit code: 0 success, 2 argument or domain error, 3 I/O error,
		4 failed validation or numerical breakdown.
	"""
	args = parse_args(argv)
	try:
		config = load_run_config(args)
		if args.command == "spectrum":
			return cmd_spectrum(config, args.quiet)
		if args.command == "kernel":
			return cmd_kernel(config, args.quiet)
		if args.command == "decay":
			return cmd_decay(config, args.quiet)
		return cmd_validate(config, args.quiet, args.skip_quadrature)
	except (specfun.BesselDomainError, spectral.BranchCutError) as error:
		# raised on internally generated arguments, user input is checked before
		print(f"{COLOR_RED}numerical failure: {error}{COLOR_RESET}", file=sys.stderr)
		return EXIT_CHECK_FAILED
	except ValueError as error:
		print(f"{COLOR_RED}error: {error}{COLOR_RESET}", file=sys.stderr)
		return EXIT_USAGE
	except OSError as error:
		print(f"{COLOR_RED}I/O error: {error}{COLOR_RESET}", file=sys.stderr)
		return EXIT_IO
	except (ArithmeticError, RuntimeError) as error:
		# accuracy or convergence breakdown inside the numerics
		print(f"{COLOR_RED}numerical failure: {error}{COLOR_RESET}", file=sys.stderr)
		return EXIT_CHECK_FAILED

#============================================
if __name__ == "__main__":
	sys.exit(main())
