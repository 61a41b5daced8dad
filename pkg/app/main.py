#!/usr/bin/env python3
"""
LF REFINE - COMMAND LINE ENTRY POINT

Runs the ``lf-refine`` command line from a source checkout:

    python app/main.py refine tests/fixtures/fromjust.slf
    python app/main.py emit tests/fixtures/fromjust.slf --program out.pl --goal out.goal
    python app/main.py check tests/fixtures/ill.slf
"""

import sys
from pathlib import Path

# Add project to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from lf_refine.frontend.cli import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
