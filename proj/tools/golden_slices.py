#!/usr/bin/env python3
"""Reference statistics for the 2D slice regression.

Recomputes both networks with numpy, independently of the C++ evaluators, on
the 101 x 101 grid over [-6, 6]^2 (other coordinates 0, n = 10) and prints,
per time, the minimum, maximum and the histogram of 1-based argmin indices.
Also reports how many grid points have a branch gap below 1e-9, where the
argmin could depend on rounding.

    python3 tools/golden_slices.py > tests/golden/slices_numpy.txt
"""

import sys

import numpy as np

N = 10
STEPS = 101



def shortest(v):
    """Shortest round-trip form without a trailing .0, as the CLI writes it."""
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s

def grid():
    k = np.arange(STEPS, dtype=np.float64)
    axis = -6.0 + 12.0 * k / (STEPS - 1)
    axis[-1] = 6.0
    x1, x2 = np.meshgrid(axis, axis, indexing="ij")  # first axis slowest
    pts = np.zeros((STEPS * STEPS, N))
    pts[:, 0] = x1.ravel()
    pts[:, 1] = x2.ravel()
    return pts


def anchors():
    a = np.zeros((3, N))
    a[0, 0] = -2.0
    a[1, :3] = [2.0, -2.0, -1.0]
    a[2, 1] = 2.0
    return a


def lagrangian_branches(pts, t):
    u = anchors()
    a = np.array([-0.5, 0.0, -1.0])
    w = (pts[:, None, :] - u[None, :, :]) / t
    return t * np.maximum(np.linalg.norm(w, axis=2) - 1.0, 0.0) + a


def initial_branches(pts, t):
    v = anchors()
    b = np.array([0.5, -5.0, 1.0])
    y = pts[:, None, :] - t * v[None, :, :]
    return -0.5 * np.sum(y * y, axis=2) + t * b


def row(name, t, branches):
    order = np.sort(branches, axis=1)
    value = order[:, 0]
    arg = np.argmin(branches, axis=1)  # first minimum, as the evaluator
    gap = order[:, 1] - order[:, 0]
    hist = np.bincount(arg, minlength=3)
    ties = int(np.sum(gap < 1e-9))
    sys.stderr.write(f"{name} t={shortest(t)}: near ties {ties}\n")
    return (f"{name} t={shortest(t)} min={shortest(value.min())} max={shortest(value.max())} "
            f"hist={','.join(str(int(h)) for h in hist)} ties={ties}")


def main():
    pts = grid()
    lines = []
    for t in (1e-6, 1.0, 3.0, 5.0):
        lines.append(row("norm10d", t, lagrangian_branches(pts, t)))
    for t in (0.0, 1.0, 3.0, 5.0):
        lines.append(row("quad10d", t, initial_branches(pts, t)))
    print("\n".join(lines))


if __name__ == "__main__":
    main()
