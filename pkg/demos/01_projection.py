"""What the modal coefficients of a projected profile actually carry.

Projecting u(x) = sin(2 pi x) onto each cell's polynomial space gives
coefficients a0, a1, a2. The claim worth internalizing: these are not
point samples but spatial-derivative shadows,

    a0 = u + u'' dx^2/24 + ...
    a1 = u' dx * c1 + u''' dx^3 * c3 + ...   (c1 = 1 or sqrt(3)/6)
    a2 = u'' dx^2 / (12 sqrt(5)) + ...

Removing the predicted terms one by one should leave residuals that
shrink by 16x and 32x under grid doubling. Run it and watch.
"""
import numpy as np

from dgmodeq import Mesh1D, basis_moments, project

u = lambda x: np.sin(2 * np.pi * x)


def deriv(x, n):
    return (2 * np.pi) ** n * np.sin(2 * np.pi * x + n * np.pi / 2)


def predicted(series, x, dx, n_terms):
    active = [(p, c) for p, c in enumerate(series.coeffs) if not c.is_zero()]
    total = np.zeros_like(x)
    for p, c in active[:n_terms]:
        total += float(c) * deriv(x, p) * dx**p
    return total


def main():
    moments = basis_moments(2)
    print("exact moment series (degree 2 basis):")
    for m, series in enumerate(moments):
        terms = [f"({c}) u^({p}) h^{p}" for p, c in enumerate(series.coeffs) if not c.is_zero()]
        print(f"  a{m} =", " + ".join(terms[:3]), "+ ...")
    print()

    previous = None
    for n in (16, 32, 64):
        mesh = Mesh1D(n)
        field = project(u, mesh, 2)
        residuals = []
        for m in range(3):
            for n_terms in (1, 2):
                guess = predicted(moments[m], mesh.centers, mesh.dx, n_terms)
                residuals.append(np.max(np.abs(field.data[:, m] - guess)))
        label = " ".join(f"{r:.2e}" for r in residuals)
        print(f"N = {n:3d}: residuals (a0/1t a0/2t a1/1t a1/2t a2/1t a2/2t) = {label}")
        if previous is not None:
            ratios = " ".join(f"{p / r:5.1f}" for p, r in zip(previous, residuals))
            print(f"         shrink factors vs previous grid:          {ratios}")
        previous = residuals
    print()
    print("every residual shrinks by 2^p per doubling, where h^p is the first")
    print("series term dropped: 4/16 for a0, 8/32 for a1, 16/64 for a2. The")
    print("coefficients really do track derivatives to the order printed above.")


if __name__ == "__main__":
    main()
