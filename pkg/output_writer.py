"""
CSV and JSON result files plus tabulate console tables.
"""

# Standard Library
import csv
import json
import math

# PIP3 modules
import numpy
import tabulate

SCHEMA_VERSION = "radial-disperse v1"
CSV_HEADER = f"# {SCHEMA_VERSION}"

SPECTRUM_COLUMNS = ("lambda", "density")
KERNEL_COLUMNS = ("t", "x", "y", "re_k", "im_k", "est_error", "method")
DECAY_COLUMNS = ("t", "norm")
VALIDATE_COLUMNS = ("check", "passed", "measured", "tolerance", "detail")

TABLE_KINDS = {
	"spectrum": SPECTRUM_COLUMNS,
	"kernel": KERNEL_COLUMNS,
	"decay": DECAY_COLUMNS,
	"validate": VALIDATE_COLUMNS,
}

# shape every JSON result file follows
JSON_SCHEMA = {
	"type": "object",
	"required": ["schema", "kind", "metadata", "columns", "rows"],
	"properties": {
		"schema": {"const": SCHEMA_VERSION},
		"kind": {"enum": sorted(TABLE_KINDS)},
		"metadata": {"type": "object"},
		"columns": {"type": "array", "items": {"type": "string"}},
		"rows": {"type": "array", "items": {"type": "array"}},
	},
}


#============================================
def format_value(value) -> str:
	"""
	Text form of one cell: floats with 17 significant digits.
	"""
	if value is None:
		return "none"
	if isinstance(value, (bool, numpy.bool_)):
		return "true" if value else "false"
	if isinstance(value, (int, numpy.integer)):
		return str(int(value))
	if isinstance(value, (float, numpy.floating)):
		return f"{float(value):.17g}"
	return str(value)

# Simple assertion test for format_value
assert format_value(0.1) == "0.10000000000000001"

#============================================
def _json_value(value):
	"""
	JSON-safe cell; non-finite floats become strings.
	"""
	if isinstance(value, (bool, numpy.bool_)):
		return bool(value)
	if isinstance(value, (int, numpy.integer)):
		return int(value)
	if isinstance(value, (float, numpy.floating)):
		value = float(value)
		if not math.isfinite(value):
			return format_value(value)
		return value
	if value is None:
		return None
	return str(value)


#============================================
def write_csv(path: str, kind: str, metadata: dict, rows: list) -> None:
	"""
	Write a result table as CSV with a version line and key=value comments.

	Args:
		path: Output path.
		kind: Table kind, a key of TABLE_KINDS.
		metadata: Run values written as comment lines, in insertion order.
		rows: Sequence of rows matching the kind's columns.
	"""
	columns = TABLE_KINDS[kind]
	with open(path, "w", newline="", encoding="ascii") as csv_file:
		csv_file.write(CSV_HEADER + "\n")
		csv_file.write(f"# kind={kind}\n")
		for key, value in metadata.items():
			csv_file.write(f"# {key}={format_value(value)}\n")
		writer = csv.writer(csv_file, lineterminator="\n")
		writer.writerow(columns)
		for row in rows:
			writer.writerow([format_value(value) for value in row])


#============================================
def read_csv(path: str) -> tuple:
	"""
	Read a file written by write_csv.

	Returns:
		Tuple (metadata, columns, rows) with all values as strings.
	"""
	metadata = {}
	with open(path, "r", encoding="ascii") as csv_file:
		lines = csv_file.read().splitlines()
	if not lines or lines[0] != CSV_HEADER:
		raise ValueError(f"{path} does not start with {CSV_HEADER!r}")
	body = []
	for line in lines[1:]:
		if line.startswith("# "):
			key, _, value = line[2:].partition("=")
			metadata[key] = value
		else:
			body.append(line)
	table = list(csv.reader(body))
	result_tuple = (metadata, tuple(table[0]), table[1:])
	return result_tuple


#============================================
def build_json_document(kind: str, metadata: dict, rows: list) -> dict:
	"""
	Result table as a JSON-ready dict following JSON_SCHEMA.
	"""
	document = {
		"schema": SCHEMA_VERSION,
		"kind": kind,
		"metadata": {key: _json_value(value) for key, value in metadata.items()},
		"columns": list(TABLE_KINDS[kind]),
		"rows": [[_json_value(value) for value in row] for row in rows],
	}
	return document


#============================================
def check_json_document(document: dict) -> None:
	"""
	Raise ValueError unless document follows JSON_SCHEMA.
	"""
	for key in JSON_SCHEMA["required"]:
		if key not in document:
			raise ValueError(f"JSON document lacks {key!r}")
	if document["schema"] != SCHEMA_VERSION:
		raise ValueError(f"unknown schema {document['schema']!r}")
	if document["kind"] not in TABLE_KINDS:
		raise ValueError(f"unknown kind {document['kind']!r}")
	if not isinstance(document["metadata"], dict):
		raise ValueError("metadata must be an object")
	columns = list(TABLE_KINDS[document["kind"]])
	if document["columns"] != columns:
		raise ValueError(f"columns must be {columns}")
	for row in document["rows"]:
		if not isinstance(row, list) or len(row) != len(columns):
			raise ValueError(f"row {row!r} does not match {len(columns)} columns")


#============================================
def write_json(path: str, kind: str, metadata: dict, rows: list) -> None:
	"""
	Write a result table as JSON.
	"""
	document = build_json_document(kind, metadata, rows)
	check_json_document(document)
	with open(path, "w", encoding="ascii") as json_file:
		json.dump(document, json_file, indent=1)
		json_file.write("\n")


#============================================
def write_result(path: str, output_format: str, kind: str, metadata: dict, rows: list) -> None:
	"""
	Dispatch to write_csv or write_json.
	"""
	if output_format == "csv":
		write_csv(path, kind, metadata, rows)
	elif output_format == "json":
		write_json(path, kind, metadata, rows)
	else:
		raise ValueError(f"unsupported format {output_format!r}")


#============================================
def format_table(kind: str, rows: list, floatfmt: str = ".6g", max_rows: int | None = None) -> str:
	"""
	Console table of a result using tabulate.

	Args:
		kind: Table kind, a key of TABLE_KINDS.
		rows: Rows matching the kind's columns.
		floatfmt: Float format passed to tabulate.
		max_rows: Show only the first max_rows rows when set.

	Returns:
		Table text in psql format.
	"""
	shown = rows if max_rows is None else rows[:max_rows]
	text = tabulate.tabulate(
		shown,
		headers=list(TABLE_KINDS[kind]),
		tablefmt="psql",
		floatfmt=floatfmt,
	)
	if max_rows is not None and len(rows) > max_rows:
		text += f"\n... {len(rows) - max_rows} more rows"
	return text
