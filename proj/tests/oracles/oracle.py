#!/usr/bin/env python3
"""Independent reference values for the frozen fixtures in the C++ tests.

Nothing here shares code with the library: descendants come from brute-force
sign flips, polynomials from sympy, the field from a direct search.  Run it and
compare against the constants in tests/test_*.cpp.
"""
import itertools
import json
import math

from sympy import GF, Poly, symbols, div, gcd

x = symbols("x")


def power(p, ell, k):
    return 1 if k == 0 else ell * p ** (k - 1)


def digits(p, ell, v):
    out = [v % ell]
    v //= ell
    while v:
        out.append(v % p)
        v //= p
    return out


def value(p, ell, ds):
    return sum(d * power(p, ell, i) for i, d in enumerate(ds))


def descendants_by_sign_flips(p, ell, v):
    ds = digits(p, ell, v)
    k = len(ds) - 1
    out = set()
    for signs in itertools.product((1, -1), repeat=k):
        w = value(p, ell, [s * d for s, d in zip(signs, ds)] + [ds[k]])
        if w >= 0:
            out.add(w)
    return sorted(out)


def quantum(m):
    # dict exponent -> coeff
    return {e: 1 for e in range(-(m - 1), m, 2)} if m > 0 else {}


def add(a, b, c=1):
    r = dict(a)
    for e, v in b.items():
        r[e] = r.get(e, 0) + c * v
        if r[e] == 0:
            del r[e]
    return r


def mul(a, b):
    r = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            r[e1 + e2] = r.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in r.items() if c}


def tilting(p, ell, v):
    ch = {}
    for u in descendants_by_sign_flips(p, ell, v + 1):
        ch = add(ch, quantum(u))
    return ch


def peel(p, ell, ch):
    out = {}
    while ch:
        top = max(ch)
        c = ch[top]
        assert c > 0
        out[top] = c
        ch = add(ch, tilting(p, ell, top), -c)
    return out


def cheb(k):
    a, b = Poly(0, x), Poly(1, x)
    for _ in range(1, k):
        a, b = b, Poly(x, x) * b - a
    return b


def modulus(p, ell, n):
    q, r = div(cheb(power(p, ell, n)), cheb(power(p, ell, n - 1)))
    assert r.is_zero
    return [int(c) for c in reversed(q.all_coeffs())]


def stable_dim(p, ell, n):
    m = Poly(list(reversed(modulus(p, ell, n))), x, domain=GF(p))
    q = Poly(cheb(power(p, ell, n - 1)).as_expr(), x, domain=GF(p))
    return gcd(m, q).degree()


def smallest_irreducible(p, d):
    for code in range(p ** d):
        cs = [(code // p ** i) % p for i in range(d)] + [1]
        if Poly(list(reversed(cs)), x, domain=GF(p)).is_irreducible:
            return cs
    raise RuntimeError


def blocks_by_graph(p, ell, n):
    lo, hi = power(p, ell, n - 1) - 1, power(p, ell, n) - 2
    desc = {i: set(descendants_by_sign_flips(p, ell, i + 1)) for i in range(lo, hi + 1)}
    seen, sizes = set(), {}
    for i in range(lo, hi + 1):
        if i in seen:
            continue
        stack, comp = [i], 0
        seen.add(i)
        while stack:
            a = stack.pop()
            comp += 1
            for b in range(lo, hi + 1):
                if b not in seen and desc[a] & desc[b]:
                    seen.add(b)
                    stack.append(b)
        sizes[comp] = sizes.get(comp, 0) + 1
    return dict(sorted(sizes.items()))


def main():
    out = {}
    out["modulus_3_5_2"] = modulus(3, 5, 2)
    out["modulus_2_2_2"] = modulus(2, 2, 2)
    out["modulus_3_2_2"] = modulus(3, 2, 2)
    out["stable_dims"] = {f"{p},{l},{n}": stable_dim(p, l, n) for p, l, n in [(3, 5, 2), (3, 5, 3), (2, 3, 2), (2, 3, 3), (5, 3, 3), (7, 5, 2)]}
    out["field_3_4"] = smallest_irreducible(3, 4)
    out["field_3_2"] = smallest_irreducible(3, 2)
    out["field_5_2"] = smallest_irreducible(5, 2)
    out["desc_3_5"] = {v: descendants_by_sign_flips(3, 5, v) for v in [5, 6, 14, 15, 21, 44, 75]}
    out["t1_fixture_3_5"] = {v: peel(3, 5, mul(tilting(3, 5, 1), tilting(3, 5, v))) for v in range(0, 16)}
    out["t1_fixture_2_3"] = {v: peel(2, 3, mul(tilting(2, 3, 1), tilting(2, 3, v))) for v in range(0, 16)}
    out["census"] = {f"{p},{l},{n}": blocks_by_graph(p, l, n) for p, l, n in [(3, 5, 2), (3, 5, 3), (2, 3, 2), (2, 3, 3), (5, 3, 2)]}
    P = 15
    out["fpdim_category_3_5_2"] = P / (2 * math.sin(math.pi / P) ** 2)
    out["fpdim_category_3_5_1"] = 5 / (2 * math.sin(math.pi / 5) ** 2)
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
