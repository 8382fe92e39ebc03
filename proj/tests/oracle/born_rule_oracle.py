#!/usr/bin/env python3
"""Independent numpy oracle for the frozen expected values in the C++ tests.

Builds every measurement basis from scratch, evaluates Born-rule joint
distributions with dense Kronecker products and brute-forces the pi/32 grid.
Run it to regenerate the constants quoted in tests/*.cpp.
"""
import numpy as np

N = 64
GRID = np.arange(N) * np.pi / 32
OMEGA = np.exp(2j * np.pi / 3)


def alice(d, x):
    if d == 2:
        if x == 0:
            return [np.array([1, 0]), np.array([0, 1])]
        return [np.array([1, 1]) / np.sqrt(2), np.array([1, -1]) / np.sqrt(2)]
    if x == 0:
        return list(np.eye(3))
    return [np.array([1, 1, 1]) / np.sqrt(3),
            np.array([1, OMEGA, OMEGA**2]) / np.sqrt(3),
            np.array([1, OMEGA**2, OMEGA]) / np.sqrt(3)]


def bob(d, y, t0, t1):
    if d == 2:
        t = t0 if y == 0 else t1
        return [np.array([np.cos(t), np.sin(t)]), np.array([np.sin(t), -np.cos(t)])]
    a, b = (t0, t1) if y == 0 else (t1, t0)
    return [np.array([np.cos(a), np.sin(a) * np.cos(b), np.sin(a) * np.sin(b)]),
            np.array([np.sin(a), -np.cos(a) * np.cos(b), -np.cos(a) * np.sin(b)]),
            np.array([0, np.sin(b), -np.cos(b)])]


def state(d):
    s = np.zeros(d * d, complex)
    for j in range(d):
        s[j * d + j] = 1 / np.sqrt(d)
    return s


def joint(d, A, B):
    psi = state(d)
    return np.array([[abs(np.vdot(np.kron(A[u], B[v]), psi))**2 for v in range(d)] for u in range(d)])


def bits(n, k):
    return [(n >> (k - 1 - i)) & 1 for i in range(k)]


def win(d, f, g, t0, t1):
    G = np.array(g).reshape(d, d)
    total = 0.0
    for x in range(2):
        for y in range(2):
            p = joint(d, alice(d, x), bob(d, y, t0, t1))
            total += p[G == f[2 * x + y]].sum()
    return total / 4


def surface(d, f, g):
    return np.array([[win(d, f, g, GRID[i], GRID[j]) for j in range(N)] for i in range(N)])


if __name__ == "__main__":
    AND, XOR = [0, 0, 0, 1], [0, 1, 1, 0]
    EMB = [0, 1, 1, 1, 0, 1, 1, 1, 0]
    print("AND/XOR at (0,0):", repr(win(2, AND, XOR, 0, 0)))
    s = surface(3, AND, EMB)
    print("AND/EmbXOR max:", repr(s.max()), "argmax:", np.argwhere(s == s.max()).tolist())
    print("AND/EmbXOR at (4,60):", repr(s[4, 60]))
    print("AND/EmbXOR at (33,1),(33,2),(34,1):", repr(s[33, 1]), repr(s[33, 2]), repr(s[34, 1]))
    F = [bits(i, 4) for i in range(1, 15)]
    maxima = sorted({round(surface(2, f, g).max(), 12) for f in F for g in F})
    print("Game-1 distinct maxima:", maxima)
    f, g3 = [0, 0, 0, 1], [1, 0, 0, 1, 1, 0, 0, 0, 0]
    s3 = surface(3, f, g3)
    am = tuple(np.argwhere(s3 == s3.max())[0])
    print("D3 example: max3", repr(s3.max()), "at", am, "game1 there", repr(win(2, f, [1, 0, 1, 1], *GRID[list(am)])))
    f, g3 = [0, 1, 0, 0], [0, 1, 0, 1, 0, 0, 0, 0, 1]
    print("D2 row 1: game1 at (33,19):", repr(win(2, f, [0, 1, 1, 0], GRID[33], GRID[19])))
    print("D2 row 1: game2 at (33,19):", repr(win(3, f, g3, GRID[33], GRID[19])))
