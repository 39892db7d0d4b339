# Standard Library
import os
import sys

# PIP3 modules
import pytest

REPO_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))

# library modules live at the repo root; pytest.ini adds it too
if REPO_ROOT not in sys.path:
	sys.path.insert(0, REPO_ROOT)


#============================================
@pytest.fixture
def skip_repo_hygiene() -> bool:
	"""
	True when SKIP_REPO_HYGIENE=1 turns off the lint and layout tests.
	"""
	return os.environ.get("SKIP_REPO_HYGIENE") == "1"
