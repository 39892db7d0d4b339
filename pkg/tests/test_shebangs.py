# Standard Library
import os
import stat

# PIP3 modules
import pytest

# local repo modules
import git_file_utils

REPO_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
PYTHON_SHEBANG = "#!/usr/bin/env python3"

# the only executable script; library modules are imported
ENTRY_POINTS = {"main.py"}


#============================================
def read_shebang(path: str) -> str:
	"""
	First line if it is a shebang, else an empty string.
	"""
	with open(path, "rb") as handle:
		line = handle.readline(200)
	if not line.startswith(b"#!"):
		return ""
	return line.decode("ascii", errors="replace").rstrip("\n")


#============================================
def is_executable(path: str) -> bool:
	"""
	True if any executable bit is set.
	"""
	mode = os.stat(path).st_mode
	return bool(mode & (stat.S_IXUSR | stat.S_IXGRP | stat.S_IXOTH))


#============================================
@pytest.mark.parametrize("rel_path", sorted(git_file_utils.list_tracked_files(REPO_ROOT, patterns=["*.py"])))
def test_shebang_executable_alignment(rel_path: str, skip_repo_hygiene: bool) -> None:
	"""
	Entry points carry the python3 shebang and the executable bit; nothing else does.
	"""
	if skip_repo_hygiene:
		pytest.skip("repo hygiene disabled")
	path = os.path.join(REPO_ROOT, rel_path)
	shebang = read_shebang(path)
	if rel_path in ENTRY_POINTS:
		assert shebang == PYTHON_SHEBANG
		assert is_executable(path)
	else:
		assert shebang == "", f"{rel_path} has a shebang but is not an entry point"
		assert not is_executable(path), f"{rel_path} is executable without a shebang"
