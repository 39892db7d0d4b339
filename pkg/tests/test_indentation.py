# Standard Library
import os
import tokenize

# PIP3 modules
import pytest

# local repo modules
import git_file_utils

REPO_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
PYTHON_FILES = sorted(git_file_utils.list_tracked_files(REPO_ROOT, patterns=["*.py"]))


#============================================
def multiline_string_lines(path: str) -> set[int]:
	"""
	Line numbers covered by multiline string tokens.
	"""
	covered: set[int] = set()
	with tokenize.open(path) as handle:
		for token in tokenize.generate_tokens(handle.readline):
			if token.type == tokenize.STRING and token.end[0] > token.start[0]:
				covered.update(range(token.start[0], token.end[0] + 1))
	return covered


#============================================
def space_indented_lines(path: str) -> list[int]:
	"""
	Lines whose leading whitespace contains a space.
	"""
	ignored = multiline_string_lines(path)
	with tokenize.open(path) as handle:
		lines = handle.read().splitlines()
	bad_lines = []
	for line_number, line in enumerate(lines, 1):
		if line_number in ignored or not line.strip():
			continue
		prefix = line[:len(line) - len(line.lstrip(" \t"))]
		if " " in prefix:
			bad_lines.append(line_number)
	return bad_lines


#============================================
@pytest.mark.parametrize("rel_path", PYTHON_FILES)
def test_tab_indentation(rel_path: str, skip_repo_hygiene: bool) -> None:
	"""
	Python files indent with tabs only.
	"""
	if skip_repo_hygiene:
		pytest.skip("repo hygiene disabled")
	bad_lines = space_indented_lines(os.path.join(REPO_ROOT, rel_path))
	assert not bad_lines, f"{rel_path}: space indentation on lines {bad_lines[:5]}"
