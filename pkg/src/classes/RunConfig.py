import os
from typing import List, Mapping, Optional

from .Errors import JetlawError
from .FunctionTable import FunctionTable

JOBS_ENV = "JETLAW_JOBS"


class RunConfig:
    def __init__(
        self,
        jobs: Optional[int] = None,
        json: bool = False,
        timing: bool = True,
        verbose: bool = False,
        quiet: bool = False,
        functions: Optional[List[str]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ):
        self.jobs = RunConfig.resolve_jobs(jobs, os.environ if environ is None else environ)
        self.json = json
        self.timing = timing
        self.verbose = verbose
        self.quiet = quiet
        self.functions = functions or []

    @staticmethod
    def resolve_jobs(flag: Optional[int], environ: Mapping[str, str]) -> int:
        """--jobs wins over JETLAW_JOBS, which wins over 1."""
        if flag is not None:
            jobs = flag
        else:
            raw = environ.get(JOBS_ENV, "").strip()
            if not raw:
                return 1
            try:
                jobs = int(raw)
            except ValueError:
                raise JetlawError(f"{JOBS_ENV} must be a positive integer, got {raw!r}")
        if jobs < 1:
            raise JetlawError(f"jobs must be a positive integer, got {jobs}")
        return jobs

    def function_table(self) -> FunctionTable:
        table = FunctionTable()
        table.declare_all(self.functions)
        return table
