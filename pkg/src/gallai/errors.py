"""Exception types shared across the package."""


class CapacityError(Exception):
    """Raised when an operation would exceed a hard size cap.

    Covers the brute-force edge cap and graph sizes whose pair count cannot
    be indexed. Soft caps (the exact-count node budget) are reported in-band
    via CountReport.capped instead.
    """


class EdgeListParseError(ValueError):
    """Malformed edge-list input. The message names the offending line."""

    def __init__(self, source: str, lineno: int, problem: str):
        self.source = source
        self.lineno = lineno
        self.problem = problem
        super().__init__(f"{source}:{lineno}: {problem}")
