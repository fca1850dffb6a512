"""Chern coefficients by sympy series expansion; lattice volumes by scipy hulls."""
import json
import math
import sys

import numpy as np
import sympy
from scipy.spatial import ConvexHull


def chern(n, d, e):
    h = sympy.symbols("h")
    big_e = sum(a * b for a, b in zip(d, e))
    expr = (1 + h) ** (n + 1) / ((1 + big_e * h) * sympy.prod([1 + di * h for di in d]))
    coeff = sympy.series(expr, h, 0, n + 1).removeO().coeff(h, n)
    return int((-1) ** n * coeff)


def newton(n, support):
    pts = np.array([list(s) for s in support] + [[0] * n], dtype=float)
    if n == 1:
        return int(round(pts.max() - pts.min()))
    return int(round(ConvexHull(pts).volume * math.factorial(n)))


def fermat_support(n):
    out = [[-1] * n]
    for i in range(n):
        v = [-1] * n
        v[i] += n + 1
        out.append(v)
    return out


def main():
    out = {
        "chern": {
            "n1_d11_e11": chern(1, [1, 1], [1, 1]),
            "n2_d111_e111": chern(2, [1, 1, 1], [1, 1, 1]),
            "n1_d1_e2": chern(1, [1], [2]),
        },
        "fermat_chern": [chern(n, [1] * (n + 1), [1] * (n + 1)) for n in range(1, 5)],
        "fermat_newton": [newton(n, fermat_support(n)) for n in range(1, 5)],
        "newton": {
            "interval": newton(1, [[1], [-1]]),
            "square": newton(1, [[2]]),
            "triangle": newton(2, [[-1, -1], [2, -1], [-1, 2]]),
            "box3": newton(3, [[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]),
            "cross4": newton(4, [[(1 if i == j else 0) * s for j in range(4)] for i in range(4) for s in (1, -1)]),
        },
    }
    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
