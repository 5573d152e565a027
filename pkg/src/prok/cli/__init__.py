"""Session language, runner and the ``prok`` command-line entry point."""

from .runner import Options, Report, run, report_document
from .session import Session, SessionError, parse_session
from .syntax import format_program, parse_program

__all__ = [
    "Options",
    "Report",
    "Session",
    "SessionError",
    "format_program",
    "parse_program",
    "parse_session",
    "report_document",
    "run",
]
