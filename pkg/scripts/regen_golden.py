"""Regenerate tests/golden/*.txt from tests/golden/commands.txt.

    python scripts/regen_golden.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from golden_cases import GOLDEN, cases, run  # noqa: E402


def main():
    for name, code, args in cases():
        got, out = run(args)
        if got != code:
            print(f"{name}: exit {got}, expected {code}", file=sys.stderr)
        (GOLDEN / f"{name}.txt").write_text(out, encoding="utf-8")
        print(f"wrote {name}.txt ({got})")


if __name__ == "__main__":
    main()
