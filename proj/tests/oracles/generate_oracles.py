#!/usr/bin/env python3
"""Independent reference values for the C++ test suites.

Regenerate with:  python3 tests/oracles/generate_oracles.py > tests/oracles/oracles.json
The algorithms here deliberately differ from the library's: sequences come
from the mixed-state ladder iteration, Miles numbers from a composition
count, chains from literal string rewriting, rule counts from brute-force
permutations, roots from mpmath at 40 digits.
"""
import itertools
import json
import random
import sys
from fractions import Fraction

import mpmath
import sympy

mpmath.mp.dps = 40


def s(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ladder(lams, vacuum, n_max):
    """alpha^(1..k)_n for linear f_i = lambda_i x via the mixed-state step
    alpha^(1)' = l1 a1 + a2 + ... + ak, alpha^(2)' = l2 a1,
    alpha^(i)' = (l_i / l_{i-1}) alpha^(i-1) for i >= 3."""
    k = len(lams)
    state = [Fraction(v) for v in vacuum]
    rows = [state[:]]
    for _ in range(n_max):
        nxt = [lams[0] * state[0] + sum(state[1:])]
        if k >= 2:
            nxt.append(Fraction(lams[1]) * state[0])
        for i in range(2, k):
            nxt.append(Fraction(lams[i]) / Fraction(lams[i - 1]) * state[i - 1])
        state = nxt
        rows.append(state[:])
    return rows


def norms_sq(f1, rows):
    """N_n^2 = N_{n-1}^2 + f1(alpha_n) - alpha_n + sum_{i>=2} alpha^(i)_n, N_{-1}^2 = 0."""
    out, acc = [], Fraction(0)
    for r in rows:
        acc += f1(r[0]) - r[0] + sum(r[1:])
        out.append(acc)
    return out


def sequences():
    cases = []
    for k in range(2, 6):
        for lams in itertools.product([1, 2], repeat=k):
            vac = [1] + [0] * (k - 1)
            rows = ladder([Fraction(l) for l in lams], vac, 100)
            cases.append({"lambdas": [s(l) for l in lams], "vacuum": [s(v) for v in vac],
                          "values": [s(r[0]) for r in rows]})
    rng = random.Random(20240601)
    for _ in range(12):
        k = rng.randint(1, 5)
        lams = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3, 5]), rng.choice([1, 1, 2, 3])) for _ in range(k)]
        vac = [Fraction(rng.randint(-4, 4), rng.choice([1, 2, 5])) for _ in range(k)]
        rows = ladder(lams, vac, 30)
        cases.append({"lambdas": [s(l) for l in lams], "vacuum": [s(v) for v in vac],
                      "values": [s(r[0]) for r in rows]})
    return cases


def miles():
    out = []
    for k in range(1, 7):
        for m in range(k - 1, 41):
            total = m - k + 1
            c = [1] + [0] * total
            for t in range(1, total + 1):
                c[t] = sum(c[t - j] for j in range(1, k + 1) if t - j >= 0)
            out.append({"k": k, "m": m, "value": str(c[total])})
    return out


def roots():
    out = []
    for lams in [(1, 1), (1, 2), (2, 1), (3, 2), (1, 1, 1), (2, 1, 2), (1, 1, 1, 1), (1, 2, 1, 2, 1),
                 (Fraction(1, 2), Fraction(1, 2))]:
        k = len(lams)
        coeffs = [1] + [-mpmath.mpf(Fraction(l).numerator) / Fraction(l).denominator for l in lams]
        rs = mpmath.polyroots(coeffs, maxsteps=200, extraprec=200)
        rs = sorted(rs, key=lambda z: (-abs(z), -mpmath.re(z), -mpmath.im(z)))
        out.append({"lambdas": [s(l) for l in lams],
                    "roots": [[float(mpmath.re(z)), float(mpmath.im(z))] for z in rs],
                    "dominant": float(mpmath.re(rs[0])),
                    "subdominant_modulus": float(abs(rs[1])) if k > 1 else 0.0})
    return out


def spectra():
    out = []
    specs = [
        ("k3_linear_212", [2, 1, 2], [1, 0, 0], 6),
        ("k2_fibonacci", [1, 1], [1, 0], 6),
        ("k4_linear_1212", [1, 2, 1, 2], [2, 1, 0, 3], 6),
        ("k2_negative", [-1, 1], [1, 0], 3),
    ]
    for name, lams, vac, n_max in specs:
        lf = [Fraction(l) for l in lams]
        rows = ladder(lf, vac, n_max)
        out.append({"name": name, "linear": [s(l) for l in lams], "vacuum": [s(v) for v in vac],
                    "alphas": [[s(a) for a in r] for r in rows],
                    "norm_sq": [s(x) for x in norms_sq(lambda x: lf[0] * x, rows)]})
    # affine k=2: f1 = x + 1, f2 = 2x, ladder relations applied literally
    f1 = lambda x: x + 1
    f2 = lambda x: 2 * x
    a = [Fraction(1)]
    a2 = [Fraction(3)]
    for n in range(6):
        a.append(f1(a[n]) + a2[n])
        a2.append(f2(a[n]))
    rows = [[a[n], a2[n]] for n in range(7)]
    out.append({"name": "k2_affine", "functions": ["x + 1", "2*x"], "vacuum": ["1", "3"],
                "alphas": [[s(v) for v in r] for r in rows], "norm_sq": [s(x) for x in norms_sq(f1, rows)]})
    return out


def chains():
    out = []
    for text, steps in [("A:ABAC,B:A,C:BB", 9), ("A:AB,B:A", 8), ("A:AAB,B:AA", 7)]:
        rule = dict(item.split(":") for item in text.split(","))
        word, words = "A", ["A"]
        for _ in range(steps):
            word = "".join(rule[c] for c in word)
            words.append(word)
        letters = sorted(rule)
        out.append({"rule": text,
                    "words": [w for w in words if len(w) <= 200],
                    "lengths": [len(w) for w in words],
                    "counts": [[w.count(c) for c in letters] for w in words]})
    return out


def enumeration():
    out = []
    for k in range(1, 5):
        for l1 in range(1, 4):
            for rest in itertools.product([1, 2, 3], repeat=max(0, k - 1)):
                lams = [l1]
                if k >= 2:
                    lams.append(rest[0])
                for q in rest[1:]:
                    lams.append(lams[-1] * q)
                letters = "ABCD"[:k]
                a_images = {"".join(p) for p in itertools.permutations("A" * l1 + letters[1:])}
                rules = sorted(
                    ",".join([f"A:{img}"] + ([f"B:{'A' * lams[1]}"] if k >= 2 else [])
                             + [f"{letters[i]}:{letters[i - 1] * (lams[i] // lams[i - 1])}" for i in range(2, k)])
                    for img in a_images)
                entry = {"lambdas": [str(l) for l in lams], "count": len(rules)}
                if len(rules) <= 24:
                    entry["rules"] = rules
                out.append(entry)
    return out


def charpolys():
    x = sympy.symbols("x")
    out = []
    rng = random.Random(77)
    for _ in range(20):
        k = rng.randint(1, 6)
        lams = [sympy.Rational(rng.choice([-2, -1, 1, 2, 3]), rng.choice([1, 2, 3])) for _ in range(k)]
        m = sympy.zeros(k, k)
        for i in range(k - 1):
            m[i, i + 1] = 1
        for j in range(k):
            m[k - 1, j] = lams[k - 1 - j]
        p = sympy.Poly(m.charpoly(x).as_expr(), x)
        coeffs = [str(c) for c in reversed(p.all_coeffs())]
        out.append({"lambdas": [str(l) for l in lams], "ascending": coeffs})
    return out


def stationary():
    out = []
    for lams in [(sympy.Rational(1, 2), sympy.Rational(1, 2)),
                 (sympy.Rational(1, 3), sympy.Rational(1, 3), sympy.Rational(1, 3)),
                 (sympy.Rational(1, 4), sympy.Rational(1, 2), sympy.Rational(1, 4))]:
        k = len(lams)
        m = sympy.zeros(k, k)
        for i in range(k - 1):
            m[i, i + 1] = 1
        for j in range(k):
            m[k - 1, j] = lams[k - 1 - j]
        ns = (m.T - sympy.eye(k)).nullspace()[0]
        pi = ns / sum(ns)
        out.append({"lambdas": [str(l) for l in lams], "stationary": [str(v) for v in pi]})
    return out


json.dump({"sequences": sequences(), "miles": miles(), "roots": roots(), "spectra": spectra(),
           "chains": chains(), "enumeration": enumeration(), "charpolys": charpolys(),
           "stationary": stationary()}, sys.stdout, indent=1)
sys.stdout.write("\n")
