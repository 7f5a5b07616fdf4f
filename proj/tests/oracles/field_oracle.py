"""Independent reference values for the C++ tests.

Plain-Python polynomial arithmetic over F_p; shares no code with the library.
Run: python3 tests/oracles/field_oracle.py
"""
import cmath
import itertools
import math


def digits(v, p, r):
    return [(v // p**i) % p for i in range(r)]


def encode(ds, p):
    return sum(d * p**i for i, d in enumerate(ds))


def mul(a, b, p, mod):
    r = len(mod) - 1
    da, db = digits(a, p, r), digits(b, p, r)
    prod = [0] * (2 * r)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(2 * r - 1, r - 1, -1):
        c = prod[k]
        if c:
            for j in range(r + 1):
                prod[k - r + j] = (prod[k - r + j] - c * mod[j]) % p
    return encode(prod[:r], p)


def add(a, b, p, r):
    return encode([(x + y) % p for x, y in zip(digits(a, p, r), digits(b, p, r))], p)


def power(a, k, p, mod):
    out = 1
    for _ in range(k):
        out = mul(out, a, p, mod)
    return out


def trace(a, p, mod):
    r = len(mod) - 1
    acc, fr = 0, a
    for _ in range(r):
        acc = add(acc, fr, p, r)
        fr = power(fr, p, p, mod)
    return acc


def inv(a, p, mod):
    q = p ** (len(mod) - 1)
    return next(b for b in range(1, q) if mul(a, b, p, mod) == 1)


FIELDS = {4: (2, [1, 1, 1]), 8: (2, [1, 1, 0, 1]), 9: (3, [1, 0, 1]), 27: (3, [1, 2, 0, 1])}

if __name__ == "__main__":
    p, mod = FIELDS[4]
    print("F4 2+3 =", add(2, 3, 2, 2))
    print("F4 2*2 =", mul(2, 2, p, mod))
    print("F4 inv(2) =", inv(2, p, mod))
    for q, (p, mod) in FIELDS.items():
        print(f"F{q} trace table:", [trace(x, p, mod) for x in range(q)])
        print(f"F{q} inverse table:", [0] + [inv(x, p, mod) for x in range(1, q)])
    p, mod = FIELDS[9]
    print("F9 mul row 5:", [mul(5, b, p, mod) for b in range(9)])
    # QFT over F_4: entry (y, x) = (-1)^{Tr(xy)} / 2
    p, mod = FIELDS[4]
    print("F4 QFT sign matrix:", [[(-1) ** trace(mul(x, y, p, mod), p, mod) for x in range(4)] for y in range(4)])
    # Fano bound q=2 n=10 d=2
    N = 1 + 10 + 45
    for r in range(4):
        print("bound r=%d" % r, 1 - (2 * r * 11 + 1 / math.log2(2)) / N)
    # F_5 evaluate 2x1 + 4x1x2 + x1x2x3 at (1,1,1)
    print("F5 eval", (2 + 4 + 1) % 5)
    # One-query affine learning on F_5 for g = 2x1 + 4x2 + 3: probability of each outcome y
    q = 5
    w = cmath.exp(2j * math.pi / 5)
    amps = {}
    for y in itertools.product(range(5), repeat=2):
        s = sum(w ** ((2 * x1 + 4 * x2 + 3) % 5) * w ** (-(x1 * y[0] + x2 * y[1]) % 5)
                for x1 in range(5) for x2 in range(5)) / 25
        amps[y] = abs(s) ** 2
    print("F5 affine argmax", max(amps, key=amps.get), round(max(amps.values()), 12))
