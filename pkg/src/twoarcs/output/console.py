"""
Human-readable summaries on stderr (``--verbose``); stdout stays machine output.
"""

from typing import List, Optional, Sequence

from rich.console import Console as RichConsole
from rich.table import Table

from twoarcs.algebra.parsing import format_scalar
from twoarcs.tuples.models import EndpointCandidates, TnTupleSolution
from twoarcs.zolotarev.models import ZolotarevSolution


class Console:
    """Rich console on stderr that stays silent unless enabled."""

    def __init__(self, enabled: bool = False, console: Optional[RichConsole] = None):
        self.enabled = enabled
        self.console = console or RichConsole(stderr=True)

    def print(self, text: str, style: Optional[str] = None) -> None:
        if self.enabled:
            self.console.print(text, style=style)

    def table(self, title: str, headers: Sequence[str], rows: List[Sequence[object]]) -> None:
        if not self.enabled:
            return
        table = Table(title=title, show_header=True, header_style="bold cyan")
        for header in headers:
            table.add_column(header)
        for row in rows:
            table.add_row(*[str(cell) for cell in row])
        self.console.print(table)

    def candidates(self, result: EndpointCandidates) -> None:
        rows = [
            (
                c.unknown,
                format_scalar(c.value),
                c.multiplicity,
                c.classification.value,
                "yes" if c.solution is not None else "no",
            )
            for c in result
        ]
        self.table("Endpoint candidates", ["unknown", "value", "mult", "class", "validated"], rows)
        if result.skipped_irrational:
            self.print(f"{result.skipped_irrational} irrational roots skipped", style="yellow")

    def solution(self, solution: TnTupleSolution) -> None:
        rows = [
            ("n", solution.n),
            ("mode", solution.mode.value),
            ("x_j", ", ".join(format_scalar(x) for x in solution.xs) or "-"),
            ("y_j", ", ".join(format_scalar(y) for y in solution.ys) or "-"),
            ("Pell residual", f"{solution.pell_residual_norm:.3g}"),
            ("system residual", f"{solution.system_residual:.3g}"),
        ]
        if solution.composed_from is not None:
            rows.append(("composed from degree", solution.composed_from))
        self.table("T_n-tuple", ["field", "value"], rows)

    def zolotarev(self, solution: ZolotarevSolution) -> None:
        rows = [
            ("n", solution.n),
            ("sigma", f"{solution.sigma:.12g}"),
            ("regime", solution.regime.value),
            ("alpha", "-" if solution.alpha is None else f"{solution.alpha:.15g}"),
            ("beta", "-" if solution.beta is None else f"{solution.beta:.15g}"),
            ("L_n", f"{solution.L:.15g}"),
            ("P1, P2", f"{solution.residuals[0]:.3g}, {solution.residuals[1]:.3g}"),
            ("Pell", f"{solution.pell_residual_norm:.3g}"),
            ("Vieta", f"{solution.vieta_residual:.3g}"),
        ]
        self.table("Zolotarev polynomial", ["field", "value"], rows)
