"""Scalar reference transcriptions of the catalog formulas.

Plain ``math`` and Python loops, written out term by term so the
vectorised package implementations can be checked against something
with no shared code. Inputs are sequences of floats.
"""

import math

PI = math.pi


def f1(x):
    a, b = x
    return -200 * math.exp(-0.02 * math.sqrt(a * a + b * b)) - 5 * math.exp(math.cos(3 * a) + math.sin(3 * b))


def f2(x):
    a, b = x
    return (1.5 - a + a * b) ** 2 + (2.25 - a + a * b * b) ** 2 + (2.625 - a + a * b * b * b) ** 2


def f3(x):
    a, b = x
    return (a + 2 * b - 7) ** 2 + (2 * a + b - 5) ** 2


def f4(x):
    a, b = x
    return 100 * (b - 0.01 * a * a + 1) ** 2 + 0.01 * (a + 10) ** 2


def f5(x):
    a, b = x
    return 2 * a**2 - 1.05 * a**4 + a**6 / 6 + a * b + b**2


def f6(x):
    a, b = x
    bb = 0.001
    r = a * a + b * b
    return -bb / (bb * bb + (r - 1) ** 2) - bb / (bb * bb + (r - 0.5) ** 2) - bb / (bb * bb + (a - b) ** 2)


def f7(x):
    a, b = x
    return 100 * (b - a**3) ** 2 + (1 - a) ** 2


def _sinc(t):
    if abs(t) < 1e-12:
        return 1.0
    return math.sin(PI * t) / (PI * t)


def f8(x):
    a, b = x
    q = abs(_sinc(a - 2) * _sinc(b - 2)) ** 5
    return (1 - q) * (2 + (a - 7) ** 2 + 2 * (b - 7) ** 2)


def f9(x):
    a, b = x
    return sum((2 + 2 * i - (math.exp(i * a) + math.exp(i * b))) ** 2 for i in range(1, 11))


def f10(x):
    a, b = x
    return 100 * (b - a * a) ** 2 + (1 - a) ** 2


def f11(x):
    a, b = x
    return 0.26 * (a * a + b * b) - 0.48 * a * b


def f12(x):
    a, b = x
    return math.sqrt(abs(math.cos(math.sqrt(abs(a * a + b))))) + 0.01 * (a + b)


def f13(x):
    a, b = x
    return (a + b - a * b) ** 2


def f14(x):
    a, b = x
    return 1 + math.sin(a) ** 2 + math.sin(b) ** 2 - 0.1 * math.exp(-a * a - b * b)


def f15(x):
    a, b = x
    r2 = a * a + b * b
    return 0.5 + (math.sin(r2 * r2) ** 2 - 0.5) / (1 + 0.001 * r2) ** 2


def f16(x):
    a, b = x
    return max(abs(a + 2 * b - 7), abs(2 * a + b - 5))


def f17(x):
    a, b = x
    return -4 * abs(math.sin(a) * math.cos(b) * math.exp(abs(math.cos((a * a + b * b) / 200))))


def f18(x):
    a, b = x
    return (
        math.exp(math.sin(50 * a))
        + math.sin(60 * math.exp(b))
        + math.sin(70 * math.sin(a))
        + math.sin(math.sin(80 * b))
        - math.sin(10 * (a + b))
        + (a * a + b * b) / 4
    )


def f19(x):
    a, b = x
    p1 = 1.0 if a >= 0 else 0.0
    p2 = 1.0 if b >= 0 else 0.0
    return p2 * (1 + p1) + abs(a + 50 * p2 * (1 - 2 * p1)) + abs(b + 50 * (1 - 2 * p2))


def f20(x):
    a, b = x
    return (1.613 - 4 * (a - 0.3125) ** 2 - 4 * (b - 1.625) ** 2) ** 2 + (b - 1) ** 2


def f21(x):
    x1, x2, x3, x4 = x
    total = 0.0
    for i in range(1, 11):
        t = 0.1 * i
        total += (x3 * math.exp(-t * x1) - x4 * math.exp(-t * x2) - math.exp(-t) + 5 * math.exp(-10 * t)) ** 2
    return total


def f22(x):
    x1, x2, x3, x4 = x
    return (
        100 * (x1 - x2 * x2) ** 2
        + (1 - x1) ** 2
        + 90 * (x4 - x3 * x3) ** 2
        + (1 - x3) ** 2
        + 10.1 * ((x2 - 1) ** 2 + (x4 - 1) ** 2)
        + 19.8 * (x2 - 1) * (x4 - 1)
    )


def _sign(v):
    return (v > 0) - (v < 0)


def f23(x):
    d = (1.0, 1000.0, 10.0, 100.0)
    total = 0.0
    for xi, di in zip(x, d):
        zi = 0.2 * math.floor(abs(xi / 0.2) + 0.49999) * _sign(xi)
        if abs(xi - zi) < 0.05:
            total += 0.15 * di * (zi - 0.05 * _sign(zi)) ** 2
        else:
            total += di * xi * xi
    return total


def f24(x):
    x1, x2, x3, x4 = x
    a, b, c, d = 60.137, 1.371, 3.112, 1.761
    total = 0.0
    for i in range(1, 25):
        t = 0.1 * (i - 1)
        total += (x1 * x2**t * math.sin(x3 * t + x4) - a * b**t * math.sin(c * t + d)) ** 2
    return total


def f25(x):
    f = [math.floor(v) for v in x]
    return (1 / 6.931 - f[0] * f[1] / (f[2] * f[3])) ** 2


def f26(x):
    x1, x2, x3, x4 = x
    return (math.exp(-x1) - x2) ** 4 + 100 * (x2 - x3) ** 6 + math.tan(x3 - x4) ** 4 + x1**8


def f27(x):
    x1, x2, x3, x4 = x
    return (x1 + 10 * x2) ** 2 + 5 * (x3 - x4) ** 2 + (x2 - x3) ** 4 + 10 * (x1 - x4) ** 4


SHEKEL_ROWS = [
    (4, 4, 4, 4), (1, 1, 1, 1), (8, 8, 8, 8), (6, 6, 6, 6), (3, 7, 3, 7),
    (2, 9, 2, 9), (5, 3, 5, 3), (8, 1, 8, 1), (6, 2, 6, 2), (7, 3.6, 7, 3.6),
]
SHEKEL_C = (0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5)


def _shekel(x, m):
    total = 0.0
    for i in range(m):
        total += 1.0 / (sum((x[j] - SHEKEL_ROWS[i][j]) ** 2 for j in range(4)) + SHEKEL_C[i])
    return -total


def f28(x):
    return _shekel(x, 5)


def f29(x):
    return _shekel(x, 7)


def f30(x):
    return _shekel(x, 10)


def f31(x):
    d = len(x)
    s2 = sum(v * v for v in x) / d
    sc = sum(math.cos(2 * PI * v) for v in x) / d
    return -20 * math.exp(-0.02 * math.sqrt(s2)) - math.exp(sc) + 20 + math.e


def f32(x):
    return -0.1 * sum(math.cos(5 * PI * v) for v in x) + sum(v * v for v in x)


def f33(x):
    return sum(0.0 if v**6 == 0 else v**6 * (2 + math.sin(1 / v)) for v in x)


def f34(x):
    return -sum(math.sin(5 * PI * v) ** 6 for v in x) / len(x)


def f35(x):
    return (x[0] - 1) ** 2 + sum(i * (2 * x[i - 1] ** 2 - x[i - 2]) ** 2 for i in range(2, len(x) + 1))


def f36(x):
    return -math.exp(-0.5 * sum(v * v for v in x))


def f37(x):
    prod = 1.0
    for i, v in enumerate(x, start=1):
        prod *= math.cos(v / math.sqrt(i))
    return sum(v * v for v in x) / 4000 - prod + 1


def f38(x):
    g = 1 + len(x) - sum(x)
    return (1 + g) ** g


def f39(x):
    return sum(abs(v) ** (i + 1) for i, v in enumerate(x, start=1))


def f40(x):
    return sum((v * v - i) ** 2 for i, v in enumerate(x, start=1))


def f41(x):
    return sum(abs(v**5 - 3 * v**4 + 4 * v**3 + 2 * v**2 - 10 * v - 4) for v in x)


def f42(x):
    return sum(100 * (x[i + 1] - x[i] ** 2) ** 2 + (x[i] - 1) ** 2 for i in range(len(x) - 1))


def f43(x):
    r = math.sqrt(sum(v * v for v in x))
    return 1 - math.cos(2 * PI * r) + 0.1 * r


def f44(x):
    return sum(v * v for v in x) ** 0.1


def f45(x):
    return 25 + sum(math.floor(v) for v in x)


def f46(x):
    total = 0.0
    for i in range(len(x) - 1):
        s = x[i + 1] ** 2 + x[i] ** 2
        total += s**0.25 * (math.sin(50 * s**0.1) ** 2 + 0.1)
    return total


def f47(x):
    return 1 - sum(math.cos(10 * v) * math.exp(-v * v / 2) for v in x) / len(x)


def f48(x):
    total = 0.0
    for v in x:
        for k in range(21):
            total += 0.5**k * (math.cos(2 * PI * 3**k * (v + 0.5)) - math.cos(PI * 3**k))
    return total


def f49(x):
    total = 0.0
    for xi in x:
        for xj in x:
            g = 100 * (xi * xi - xj) ** 2 + (1 - xj) ** 2
            total += g * g / 4000 - math.cos(g) + 1
    return total


def f50(x):
    s = 0.5 * sum(i * v for i, v in enumerate(x, start=1))
    return sum(v * v for v in x) + s**2 + s**4


REFERENCE = {f"f{k}": globals()[f"f{k}"] for k in range(1, 51)}
