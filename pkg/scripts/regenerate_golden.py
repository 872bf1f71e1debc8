#!/usr/bin/env python3
"""Rebuild the golden export vectors under tests/golden/.

Run only after an intentional format change, then review the diff.
"""

from pathlib import Path

from ss3 import make_context
from ss3.export import export_csv_text, export_json_text

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for d in (1, 2):
        ctx = make_context(d)
        (GOLDEN / f"export_d{d}.csv").write_text(export_csv_text(ctx))
        (GOLDEN / f"export_d{d}.json").write_text(export_json_text(ctx))
        print(f"wrote export_d{d}.csv and export_d{d}.json")


if __name__ == "__main__":
    main()
