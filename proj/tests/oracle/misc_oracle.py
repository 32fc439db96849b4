#!/usr/bin/env python3
"""Independent checks for frozen constants (sympy/mpmath only)."""
import math
from fractions import Fraction
from sympy import factorint, n_order
import mpmath

mpmath.mp.dps = 80


def rad(n):
    r = 1
    for p in factorint(abs(n)):
        r *= p
    return r


print("factor 6436341", factorint(6436341), "6436343", factorint(6436343))
r = rad(2 * 6436341 * 6436343)
print("rad", r, "quality", math.log(6436343) / math.log(r))
print("quality 1,8,-9", math.log(9) / math.log(6))
print("quality 1,80,-81", math.log(81) / math.log(30))
print("quality 1,16,64,-81", math.log(81) / math.log(6))
print("family k=3", factorint(6560), rad(6560 * 6561))
print("orders", n_order(7, 11), n_order(7, 13), n_order(7, 17), n_order(7, 11) and math.lcm(10, 12, 16))
print("ord 3 mod 5", n_order(3, 5), "ord 5 mod 3", n_order(5, 3), "ord 7 mod 11", n_order(7, 11))
beta = mpmath.log(25) / mpmath.log(9)
cf = []
x = beta
for _ in range(12):
    a = int(mpmath.floor(x))
    cf.append(a)
    x = 1 / (x - a)
print("cf log25/log9", cf)


def sols(q1, q2, eps, odd, count, emax=5000):
    out = []
    for e1 in range(1, emax):
        if odd and e1 % 2 == 0:
            continue
        A = q1 ** e1
        e2 = 1
        cand = []
        while q2 ** e2 < A:
            g = A - q2 ** e2
            if g < eps * A:
                cand.append((e1, e2, Fraction(g, A)))
            e2 += 1
        out.extend(cand)
        if len(out) >= count:
            return out[:count]
    return out


print("eps 15/100", sols(9, 25, Fraction(15, 100), True, 1))
print("eps 1", [(a, b) for a, b, _ in sols(9, 25, Fraction(1), False, 3)])
s10 = sols(9, 25, Fraction(1, 10), True, 14)
print("eps 1/10", [(a, b) for a, b, _ in s10])
for e1, e2, _ in s10[:5]:
    x0 = 9 ** e1 - 25 ** e2 - 1
    print(" x0 digits", len(str(x0)), x0 % 3, x0 % 5)
mx = max(e1 for e1, _, _ in s10)
print("max e1 among 14", mx)
for k in range(1, 11):
    m = 3 ** (2 ** k) - 1
    v = 0
    while m % 2 == 0:
        m //= 2
        v += 1
    assert v == k + 2
print("valuations ok")
