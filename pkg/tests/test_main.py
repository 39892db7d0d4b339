# Standard Library
import json
import math

# PIP3 modules
import pytest

# local repo modules
import main
import specfun
import spectral
import evolution
import output_writer

SMALL_KERNEL = [
	"--t-min", "1", "--t-max", "2", "--t-count", "2",
	"--x-min", "0.5", "--x-max", "1", "--x-count", "2", "-q",
]


#============================================
@pytest.fixture(autouse=True)
def single_worker(monkeypatch) -> None:
	monkeypatch.setenv("RADIAL_DISPERSE_THREADS", "1")


#============================================
def test_spectrum_with_eigenvalue(tmp_path) -> None:
	path = tmp_path / "spectrum.csv"
	code = main.main([
		"spectrum", "--l", "0", "--alpha", repr(0.75 * math.pi),
		"--lambda-count", "5", "-o", str(path), "-q",
	])
	assert code == main.EXIT_OK
	metadata, columns, rows = output_writer.read_csv(str(path))
	assert columns == output_writer.SPECTRUM_COLUMNS
	assert len(rows) == 5
	assert metadata["eigenvalue_exists"] == "true"
	assert float(metadata["eigenvalue"]) == pytest.approx(-1.0, abs=1e-12)


#============================================
def test_kernel_output_is_deterministic(tmp_path) -> None:
	first = tmp_path / "first.csv"
	second = tmp_path / "second.csv"
	assert main.main(["kernel", "--l", "0.2"] + SMALL_KERNEL + ["-o", str(first)]) == main.EXIT_OK
	assert main.main(["kernel", "--l", "0.2"] + SMALL_KERNEL + ["-o", str(second)]) == main.EXIT_OK
	assert first.read_bytes() == second.read_bytes()
	_, columns, rows = output_writer.read_csv(str(first))
	assert columns == output_writer.KERNEL_COLUMNS
	assert len(rows) == 8
	assert {row[-1] for row in rows} == {evolution.METHOD_CLOSED_FORM}


#============================================
def test_decay_json(tmp_path) -> None:
	path = tmp_path / "decay.json"
	code = main.main([
		"decay", "--l", "0.25", "--t-count", "6", "--x-count", "15",
		"--format", "json", "-o", str(path), "-q",
	])
	assert code == main.EXIT_OK
	document = json.loads(path.read_text(encoding="ascii"))
	output_writer.check_json_document(document)
	assert document["metadata"]["weight"] == "friedrichs_weight"
	assert document["metadata"]["fitted_exponent"] == pytest.approx(-0.25, abs=0.05)
	assert len(document["rows"]) == 6


#============================================
def test_config_file_values_and_flag_override(tmp_path) -> None:
	config_path = tmp_path / "run.yml"
	config_path.write_text("l: 0.1\nalpha: 5.0\nlambda_count: 3\n", encoding="ascii")
	assert main.main(["spectrum", "-c", str(config_path), "-q"]) == main.EXIT_USAGE
	path = tmp_path / "spectrum.csv"
	code = main.main(["spectrum", "-c", str(config_path), "--alpha", "1.0", "-o", str(path), "-q"])
	assert code == main.EXIT_OK
	metadata, _, rows = output_writer.read_csv(str(path))
	assert metadata["l"] == "0.10000000000000001"
	assert len(rows) == 3


#============================================
def test_domain_error_exit_code(capsys) -> None:
	assert main.main(["spectrum", "--alpha", "-0.1", "-q"]) == main.EXIT_USAGE
	assert "error" in capsys.readouterr().err


#============================================
def test_unknown_config_key_exit_code(tmp_path) -> None:
	config_path = tmp_path / "run.yml"
	config_path.write_text("angle: 1.0\n", encoding="ascii")
	assert main.main(["spectrum", "-c", str(config_path), "-q"]) == main.EXIT_USAGE


#============================================
def test_io_error_exit_codes(tmp_path) -> None:
	assert main.main(["spectrum", "-c", str(tmp_path / "absent.yml"), "-q"]) == main.EXIT_IO
	target = tmp_path / "missing_dir" / "out.csv"
	assert main.main(["spectrum", "--lambda-count", "2", "-o", str(target), "-q"]) == main.EXIT_IO


#============================================
def test_bad_format_choice_exits_with_usage() -> None:
	with pytest.raises(SystemExit) as error:
		main.main(["decay", "--format", "xml"])
	assert error.value.code == main.EXIT_USAGE


#============================================
def test_validate_passes(tmp_path) -> None:
	path = tmp_path / "validate.csv"
	code = main.main(["validate", "--skip-quadrature", "-o", str(path), "-q"])
	assert code == main.EXIT_OK
	metadata, columns, rows = output_writer.read_csv(str(path))
	assert metadata["failed"] == "0"
	assert columns == output_writer.VALIDATE_COLUMNS
	assert all(row[1] == "true" for row in rows)


#============================================
def test_validate_fault_injection_exit_code(monkeypatch) -> None:
	original = evolution.quarter_turn_power
	monkeypatch.setattr(evolution, "quarter_turn_power", lambda s: original(s + 0.01))
	assert main.main(["validate", "--skip-quadrature", "-q"]) == main.EXIT_CHECK_FAILED


#============================================
@pytest.mark.parametrize(
	"error_type", [specfun.BesselDomainError, specfun.BesselAccuracyError, spectral.BranchCutError],
)
def test_numerical_breakdown_exit_code(monkeypatch, error_type: type) -> None:
	def breakdown(params, lambdas):
		raise error_type("internal argument out of range")

	monkeypatch.setattr(spectral, "spectral_data", breakdown)
	assert main.main(["spectrum", "-q"]) == main.EXIT_CHECK_FAILED
