"""
Regenerate the golden clause program of the fromJust fixture.

    python scripts/emit_golden.py            # rewrite tests/fixtures/fromjust_program.pl
    python scripts/emit_golden.py --check    # exit 1 when the file is stale
"""

import argparse
import sys
from pathlib import Path

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from lf_refine.codegen import program_of_signature  # noqa: E402
from lf_refine.config import FIXTURES_DIR  # noqa: E402
from lf_refine.frontend.elaborate import elaborate_source  # noqa: E402
from lf_refine.frontend.emit import emit_program, write_text  # noqa: E402
from utils.logger import get_logger  # noqa: E402

log = get_logger(__name__)

SOURCE = FIXTURES_DIR / "fromjust.slf"
GOLDEN = FIXTURES_DIR / "fromjust_program.pl"


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--check", action="store_true", help="Compare instead of writing.")
    args = parser.parse_args(argv)

    elaborated = elaborate_source(SOURCE.read_text(encoding="utf-8"))
    text = emit_program(program_of_signature(elaborated.signature))
    if args.check:
        current = GOLDEN.read_text(encoding="utf-8") if GOLDEN.exists() else ""
        if current != text:
            log.error("%s is stale", GOLDEN)
            return 1
        log.info("%s is up to date", GOLDEN)
        return 0
    write_text(GOLDEN, text)
    log.info("Wrote %s", GOLDEN)
    return 0


if __name__ == "__main__":
    sys.exit(main())
