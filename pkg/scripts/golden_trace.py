#!/usr/bin/env python3
"""Print the full criterion trace, stats, and certificates of the worked
three-generator ideal, matching ``siggb tests/data/golden.ideal
--trace-criteria --stats --certify --improved-scan``."""

import sys

from siggb.cli import build_parser, run


def main() -> int:
    args = build_parser().parse_args(
        [
            "tests/data/golden.ideal",
            "--engine",
            "both",
            "--trace-criteria",
            "--stats",
            "--certify",
            "--improved-scan",
        ]
    )
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
