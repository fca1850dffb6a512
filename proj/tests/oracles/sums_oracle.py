"""Brute-force exponential sums with a self-contained finite field model.

Elements of F_{p^k} are integers whose base-p digits are polynomial-basis
coordinates. The modulus is any irreducible found by trial division; sums of
functions with F_p coefficients do not depend on that choice.
"""
import itertools
import json
import sys


def poly_rem(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        off = len(a) - len(b)
        for i, x in enumerate(b):
            a[off + i] = (a[off + i] - c * x) % p
        a.pop()
    return a


def find_modulus(p, k):
    for tail in itertools.product(range(p), repeat=k):
        mod = list(tail) + [1]
        reducible = False
        for d in range(1, k // 2 + 1):
            for t in itertools.product(range(p), repeat=d):
                if not any(poly_rem(mod, list(t) + [1], p)):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return mod
    raise ValueError("no irreducible polynomial")


class Field:
    def __init__(self, p, k):
        self.p, self.k, self.q = p, k, p ** k
        self.mod = find_modulus(p, k)
        self.digits = [self._digits(x) for x in range(self.q)]
        self._tables()
        self.tr = [self._trace(x) for x in range(self.q)]

    def _digits(self, x):
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return out

    def _int(self, d):
        v = 0
        for c in reversed(d):
            v = v * self.p + c
        return v

    def add(self, a, b):
        return self._int([(x + y) % self.p for x, y in zip(self.digits[a], self.digits[b])])

    def neg(self, a):
        return self._int([(-x) % self.p for x in self.digits[a]])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _slow_mul(self, a, b):
        p, k = self.p, self.k
        r = [0] * (2 * k)
        for i, x in enumerate(self.digits[a]):
            for j, y in enumerate(self.digits[b]):
                r[i + j] = (r[i + j] + x * y) % p
        return self._int((poly_rem(r, self.mod, p) + [0] * k)[:k])

    def _tables(self):
        order = self.q - 1
        for g in range(1, self.q):
            exp, x = [], 1
            for _ in range(order):
                exp.append(x)
                x = self._slow_mul(x, g)
            if len(set(exp)) == order:
                break
        self.exp = exp
        self.log = {x: i for i, x in enumerate(exp)}

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def frob(self, a, i):
        if a == 0:
            return 0
        return self.exp[(self.log[a] * self.p ** i) % (self.q - 1)]

    def _trace(self, a):
        s = 0
        for i in range(self.k):
            s = self.add(s, self.frob(a, i))
        return self.digits[s][0]

    def const(self, c):
        return c % self.p


def canonical(counts, p):
    if p == 2:
        return [counts[0] - counts[1]]
    return [counts[i] - counts[p - 1] for i in range(p - 1)]


def char_sum(F, values):
    counts = [0] * F.p
    for v in values:
        counts[F.tr[v]] += 1
    return canonical(counts, F.p)


def kloosterman(p, m):
    F = Field(p, m)
    return char_sum(F, (F.add(x, F.inv(x)) for x in range(1, F.q)))


def torus_linear(p, m):
    F = Field(p, m)
    return char_sum(F, range(1, F.q))


def newton_degenerate(p, m):
    F = Field(p, m)
    vals = []
    for x in range(F.q):
        x2 = F.mul(x, x)
        for y in range(F.q):
            vals.append(F.sub(F.mul(x2, y), x))
    return char_sum(F, vals)


def product(F, factors):
    r = 1
    for f in factors:
        r = F.mul(r, f)
    return r


def a3(F, x, y, z):
    return product(F, [x, y, z, F.sub(x, y), F.sub(y, z), F.sub(z, x)])


def b3(F, x, y, z):
    return product(F, [x, y, z, F.add(x, y), F.sub(x, y), F.add(x, z), F.sub(x, z), F.add(y, z), F.sub(y, z)])


def arrangement(poly, p, m):
    F = Field(p, m)
    rng = range(F.q)
    return char_sum(F, (poly(F, x, y, z) for x in rng for y in rng for z in rng))


def sl2_brute(m):
    F = Field(2, m)
    vals = []
    for a, b, c, d in itertools.product(range(F.q), repeat=4):
        if F.sub(F.mul(a, d), F.mul(b, c)) == 1:
            vals.append(F.add(a, d))
    return char_sum(F, vals)


def sl2_by_trace(m):
    """#{A in SL2(F_q) : tr A = t} = q^2 + q*eta(t), where eta(t) is +1, -1, 0
    according as X^2 - tX + 1 has two, zero or one roots in F_q."""
    F = Field(2, m)
    q = F.q
    counts = [0, 0]
    for t in range(q):
        roots = sum(1 for x in range(q) if F.add(F.add(F.mul(x, x), F.mul(t, x)), 1) == 0)
        eta = {2: 1, 0: -1, 1: 0}[roots]
        counts[F.tr[t]] += q * q + q * eta
    return canonical(counts, 2)


def main():
    out = {}
    out["torus_linear_p5"] = [torus_linear(5, m) for m in range(1, 7)]
    out["kloosterman_p5"] = [kloosterman(5, m) for m in range(1, 7)]
    out["newton_degenerate_p3"] = [newton_degenerate(3, m) for m in range(1, 4)]
    brute = [sl2_brute(m) for m in range(1, 4)]
    formula = [sl2_by_trace(m) for m in range(1, 9)]
    if brute != formula[:3]:
        sys.exit("SL2 trace-count formula disagrees with brute force")
    out["sl2_p2"] = formula
    out["a3_p5"] = [arrangement(a3, 5, m) for m in (1, 2)]
    out["b3_p5"] = [arrangement(b3, 5, m) for m in (1, 2)]
    json.dump(out, sys.stdout, indent=1)
    print()


if __name__ == "__main__":
    main()
