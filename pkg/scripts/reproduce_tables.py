#!/usr/bin/env python3
"""Regenerate the two built-in tables into an output directory.

Writes the configuration type catalog (types.tsv, byte-identical to the
packaged data file) and the uniform multiplicity report (uniform_cases.txt),
and prints a short summary.
"""

import argparse
import io
from pathlib import Path

from sixpoints import table1_text
from sixpoints.cli import main as cli_main


def run(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "types.tsv").write_text(table1_text(), encoding="utf-8")
    buf = io.StringIO()
    cli_main(["tables", "--which", "2"], out=buf)
    (outdir / "uniform_cases.txt").write_text(buf.getvalue(), encoding="utf-8")
    print(f"wrote {outdir / 'types.tsv'} and {outdir / 'uniform_cases.txt'}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=Path, default=Path("build"))
    run(parser.parse_args().outdir)
