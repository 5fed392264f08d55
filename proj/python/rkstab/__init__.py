"""Stability step-size analysis of explicit Runge-Kutta methods on 1D
conservation laws."""

from ._core import (
    ButcherTableau,
    NonPhysicalState,
    SspAnalysis,
    TableauParseError,
    UnsupportedBoundary,
    builtin_scheme,
    builtin_scheme_ids,
    check_assumption1,
    cli_main,
    consistency_issues,
    experiment_ids,
    godunov_flux_burgers,
    limits_table,
    minmod,
    quadratic_energy,
    read_tableau,
    rhs_dissipative_burgers,
    rhs_muscl_burgers,
    rhs_upwind_burgers,
    simulate,
    ssp_coefficient,
    total_variation,
    write_tableau,
)

__version__ = "0.1.0"


def main() -> int:
    """Console entry point mirroring the `rkstab` executable."""
    import sys

    return cli_main(sys.argv[1:])
