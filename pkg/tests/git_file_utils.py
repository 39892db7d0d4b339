import os
import fnmatch
import subprocess

# never scanned by the hygiene tests
SKIP_DIRS = {
	".git",
	".venv",
	"__pycache__",
	".pytest_cache",
	"examples",
	"output",
}


#============================================
def _split_null(output: str) -> list[str]:
	"""
	Split a NUL-separated stdout string into paths.
	"""
	paths = []
	for path in output.split("\0"):
		if not path:
			continue
		paths.append(path)
	return paths


#============================================
def _walk_files(repo_root: str, patterns: list[str] | None) -> list[str]:
	"""
	Relative paths of working-tree files, for checkouts without git metadata.
	"""
	paths = []
	for directory, dir_names, file_names in os.walk(repo_root):
		dir_names[:] = sorted(name for name in dir_names if name not in SKIP_DIRS)
		for file_name in sorted(file_names):
			rel_path = os.path.relpath(os.path.join(directory, file_name), repo_root)
			if patterns and not any(fnmatch.fnmatch(file_name, pattern) for pattern in patterns):
				continue
			paths.append(rel_path)
	return paths


#============================================
def list_tracked_files(
	repo_root: str,
	patterns: list[str] | None = None,
	error_message: str | None = None,
) -> list[str]:
	"""
	List tracked files using git ls-files, or walk the tree outside git.

	Args:
		repo_root: Repo root used as the working directory.
		patterns: Optional filename globs such as "*.py".
		error_message: Fallback error message for git failures.

	Returns:
		list[str]: Paths relative to repo_root.
	"""
	if not os.path.isdir(os.path.join(repo_root, ".git")):
		return _walk_files(repo_root, patterns)
	if error_message is None:
		error_message = "Failed to list tracked files."
	command = ["git", "ls-files", "-z"]
	if patterns:
		command += ["--"] + patterns
	result = subprocess.run(command, capture_output=True, text=True, cwd=repo_root)
	if result.returncode != 0:
		raise AssertionError(result.stderr.strip() or error_message)
	paths = []
	for rel_path in _split_null(result.stdout):
		if rel_path.split("/", 1)[0] in SKIP_DIRS:
			continue
		paths.append(rel_path)
	return paths
