"""Regenerate golden CLI outputs for the corpus.

Run from the repository root after an intentional output change::

    python3 tests/fixtures/make_golden.py
"""

import io
from pathlib import Path

from monoring.cli import run

HERE = Path(__file__).parent
OUTPUTS = {
    "denominator.txt": ["denominator"],
    "denominator.json": ["denominator", "--json"],
    "betti.txt": ["betti"],
    "golod.txt": ["golod"],
}


def main():
    out_dir = HERE / "golden"
    out_dir.mkdir(exist_ok=True)
    for ideal in sorted((HERE / "corpus").glob("*.ideal")):
        for suffix, argv in OUTPUTS.items():
            buf = io.StringIO()
            code = run([argv[0], str(ideal), *argv[1:]], stdout=buf)
            assert code == 0, (ideal, argv)
            (out_dir / f"{ideal.stem}.{suffix}").write_text(buf.getvalue())


if __name__ == "__main__":
    main()
