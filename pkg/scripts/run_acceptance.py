#!/usr/bin/env python3
"""Run only the acceptance gate and surface its per-criterion lines.

Exit status is pytest's.  Equivalent to:
    python3 -m pytest tests/test_acceptance.py -v
"""

import pathlib
import subprocess
import sys


def main():
    root = pathlib.Path(__file__).resolve().parent.parent
    cmd = [
        sys.executable,
        "-m",
        "pytest",
        str(root / "tests" / "test_acceptance.py"),
        "-v",
    ]
    return subprocess.call(cmd, cwd=root)


if __name__ == "__main__":
    sys.exit(main())
