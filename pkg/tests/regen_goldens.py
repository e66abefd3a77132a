#!/usr/bin/env python3
"""Regenerate the CLI golden files.

Run from the repository root after an intentional output-format change:

    python tests/regen_goldens.py

and review the diff before committing.  The values inside the goldens are
pinned independently by the unit suites; these files only freeze byte-level
formatting.
"""

import pathlib
import sys

from click.testing import CliRunner

sys.path.insert(0, str(pathlib.Path(__file__).parent))
from cli_cases import CASES  # noqa: E402

from pinchcert.cli import main  # noqa: E402


def regenerate() -> None:
    golden_dir = pathlib.Path(__file__).parent / "golden"
    golden_dir.mkdir(exist_ok=True)
    for name, argv, expected_exit, channel in CASES:
        result = CliRunner().invoke(main, argv)
        if result.exit_code != expected_exit:
            raise SystemExit(
                f"{name}: exit {result.exit_code}, expected {expected_exit}\n"
                f"{result.output}{result.stderr}"
            )
        payload = result.stdout_bytes if channel == "stdout" else result.stderr_bytes
        (golden_dir / f"{name}.golden").write_bytes(payload)
        print(f"wrote {name}.golden ({len(payload)} bytes)")


if __name__ == "__main__":
    regenerate()
