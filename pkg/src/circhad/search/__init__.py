from circhad.search.engine import (
    SearchConfig,
    SearchOutcome,
    Symmetry,
    canonical_form,
    enumerate_rows,
    orbit,
    verify_solutions,
)

__all__ = [
    "SearchConfig",
    "SearchOutcome",
    "Symmetry",
    "canonical_form",
    "enumerate_rows",
    "orbit",
    "verify_solutions",
]
