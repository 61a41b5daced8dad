"""Utilities module for the lf_refine package."""

from .results import CriterionResult, display_run_summary, save_run_summary, summary_frame

__all__ = [
    'CriterionResult',
    'display_run_summary',
    'save_run_summary',
    'summary_frame',
]
