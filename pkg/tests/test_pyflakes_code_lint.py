# Standard Library
import io
import os

# PIP3 modules
import pytest
import pyflakes.api
import pyflakes.reporter

# local repo modules
import git_file_utils

REPO_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
PYTHON_FILES = sorted(git_file_utils.list_tracked_files(REPO_ROOT, patterns=["*.py"]))


#============================================
@pytest.mark.parametrize("rel_path", PYTHON_FILES)
def test_pyflakes_clean(rel_path: str, skip_repo_hygiene: bool) -> None:
	"""
	No unused imports, undefined names or syntax errors.
	"""
	if skip_repo_hygiene:
		pytest.skip("repo hygiene disabled")
	warnings = io.StringIO()
	errors = io.StringIO()
	reporter = pyflakes.reporter.Reporter(warnings, errors)
	count = pyflakes.api.checkPath(os.path.join(REPO_ROOT, rel_path), reporter)
	assert count == 0, warnings.getvalue() + errors.getvalue()
