"""Results persistence and console summaries for acceptance runs.

Each criterion run produces one row (name, cases, passed, failed,
seconds, detail); rows are saved as a timestamped CSV and printed as a
short table.
"""

from dataclasses import asdict, dataclass
from datetime import datetime
from pathlib import Path
from typing import Iterable, List

import pandas as pd

from ..config import RESULTS_DIR

SUMMARY_COLUMNS = ["criterion", "cases", "passed", "failed", "seconds", "detail"]


@dataclass(frozen=True)
class CriterionResult:
    criterion: str
    cases: int
    passed: int
    failed: int
    seconds: float
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.failed == 0


def summary_frame(results: Iterable[CriterionResult]) -> pd.DataFrame:
    """One row per criterion, columns in ``SUMMARY_COLUMNS`` order."""
    rows = [asdict(result) for result in results]
    frame = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
    frame["seconds"] = frame["seconds"].astype(float).round(3)
    return frame


def save_run_summary(results: List[CriterionResult], results_path: Path = RESULTS_DIR) -> Path:
    """Persist a run summary as ``acceptance_<timestamp>.csv``.

    Parameters
    ----------
    results : list of CriterionResult
        Outcome of each criterion, in run order.
    results_path : Path, default ``RESULTS_DIR``
        Destination directory (created if missing).

    Returns
    -------
    Path
        Location of the saved CSV.
    """
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    filepath = results_path / f"acceptance_{timestamp}.csv"
    results_path.mkdir(parents=True, exist_ok=True)
    summary_frame(results).to_csv(filepath, index=False, encoding="utf-8")
    return filepath


def display_run_summary(results: List[CriterionResult]) -> None:
    """Print one line per criterion and an overall verdict."""
    print(f"\n{'=' * 80}")
    print("ACCEPTANCE RUN")
    print(f"{'=' * 80}\n")
    for result in results:
        verdict = "ok" if result.ok else "FAILED"
        print(f"   {result.criterion:32s} {result.passed:5d}/{result.cases:<5d} "
              f"{result.seconds:8.2f}s  {verdict}")
        if result.detail:
            print(f"      {result.detail}")
    failed = [r.criterion for r in results if not r.ok]
    print()
    print("All criteria passed" if not failed else f"Failed: {', '.join(failed)}")
