"""The evolution laws, derived exactly, and the one surprising zero.

Each modal coefficient a_m of the semi-discrete scheme obeys its own
modified PDE. The tables below are computed over Q(sqrt(3), sqrt(5)),
so every printed number is exact: no fitting, no tolerance.

Two things to notice. First, every law leads with -1: each moment is
transported like the spatial derivative it shadows. Second, the k=1
slope under the upwind flux loses its u_xx term *identically*; the
cancellation is algebraic, which is why the slope stays a faithful
u_x shadow even though the flux only sees cell boundary data.
"""
from dgmodeq import (
    EXACT_POINT,
    UPWIND_TRACE,
    StencilSpec,
    correction_series,
    moment_evolution_laws,
)


def main():
    for degree in (1, 2):
        for mode in (UPWIND_TRACE, EXACT_POINT):
            print(f"degree {degree}, {mode} interface data:")
            for law in moment_evolution_laws(StencilSpec(degree, mode)):
                print(f"  a{law.moment}:  {law.statement(3)}")
            print()

    law = moment_evolution_laws(StencilSpec(1, UPWIND_TRACE))[1]
    print("the degenerate slope law, four terms deep:")
    print(" ", law.statement(4))
    print()
    series = correction_series()
    terms = [f"({c.rational_value()}) h^{series.h_power(p)} u^({p})"
             for p, c in enumerate(series.coeffs) if not c.is_zero()]
    print("second-moment curvature defect:", " + ".join(terms))
    print("leading coefficient 1/96: small, positive, and O(h^2), so the")
    print("finite-volume rewrite of the slope update is consistent as-is.")


if __name__ == "__main__":
    main()
