#!/usr/bin/env python3
"""Independent oracle for the problem suite.

Re-implements every registered problem in plain Python/NumPy, evaluates a
fixed set of repaired probe points per problem, and emits a frozen C++ header
(tests/pinned_vectors.hpp) with the resulting (x, f, violation) triples.

This script is the second, independent transcription of the formulas; the C++
registry must agree with it to 1e-9 relative. Rerun only after a deliberate
formula audit and review the header diff by hand.
"""

import math
import sys
import zlib
from bisect import bisect_left

import numpy as np


# ---------------------------------------------------------------- variables

class Cont:
    def __init__(self, lo, hi):
        self.lo, self.hi = float(lo), float(hi)

    def repair(self, v):
        return min(max(v, self.lo), self.hi)


class Integer:
    def __init__(self, lo, hi):
        self.lo, self.hi = float(lo), float(hi)

    def repair(self, v):
        v = min(max(v, self.lo), self.hi)
        return float(math.ceil(v - 0.5))  # nearest, tie toward lower


class Discrete:
    def __init__(self, values):
        self.values = [float(v) for v in values]
        assert all(b > a for a, b in zip(self.values, self.values[1:]))

    def repair(self, v):
        vs = self.values
        i = bisect_left(vs, v)
        if i == 0:
            return vs[0]
        if i == len(vs):
            return vs[-1]
        lo, hi = vs[i - 1], vs[i]
        return lo if (v - lo) <= (hi - v) else hi


def repair(x, specs):
    return [s.repair(v) for s, v in zip(specs, x)]


def viol(g):
    # reference-lineage semantics: negative g contributes -g, anything else 0
    return [(-gi if gi < 0 else 0.0) for gi in g]


# ---------------------------------------------------------------- base formulations
# Each base returns (f_list, g_list) with constraints in g >= 0 form.

def base_re21(x):
    x1, x2, x3, x4 = x
    F, E, L = 10.0, 2.0e6, 200.0
    f1 = L * ((2.0 * x1) + math.sqrt(2.0) * x2 + math.sqrt(x3) + x4)
    f2 = ((F * L) / E) * ((2.0 / x1) + (2.0 * math.sqrt(2.0) / x2)
                          - (2.0 * math.sqrt(2.0) / x3) + (2.0 / x4))
    return [f1, f2], []


def base_re22(x):
    x1, x2, x3 = x
    f1 = (29.4 * x1) + (0.6 * x2 * x3)
    g1 = (x1 * x3) - 7.735 * ((x1 * x1) / x2) - 180.0
    g2 = 4.0 - (x3 / x2)
    return [f1], [g1, g2]


def base_re23(x):
    x1, x2, x3, x4 = x
    d1 = 0.0625 * x1
    d2 = 0.0625 * x2
    f1 = (0.6224 * d1 * x3 * x4) + (1.7781 * d2 * x3 * x3) \
        + (3.1661 * d1 * d1 * x4) + (19.84 * d1 * d1 * x3)
    g1 = d1 - (0.0193 * x3)
    g2 = d2 - (0.00954 * x3)
    g3 = (math.pi * x3 * x3 * x4) + ((4.0 / 3.0) * math.pi * x3 ** 3) - 1296000.0
    return [f1], [g1, g2, g3]


def base_re24(x):
    x1, x2 = x
    f1 = x1 + (120.0 * x2)
    E = 700000.0
    sigma_b_max = 700.0
    tau_max = 450.0
    delta_max = 1.5
    sigma_k = (E * x1 * x1) / 100.0
    sigma_b = 4500.0 / (x1 * x2)
    tau = 1800.0 / x2
    delta = (56.2 * 10000.0) / (E * x1 * x2 * x2)
    g1 = 1.0 - (sigma_b / sigma_b_max)
    g2 = 1.0 - (tau / tau_max)
    g3 = 1.0 - (delta / delta_max)
    g4 = 1.0 - (sigma_b / sigma_k)
    return [f1], [g1, g2, g3, g4]


def base_re25(x):
    x1, x2, x3 = x
    f1 = (math.pi * math.pi * x2 * x3 * x3 * (x1 + 2.0)) / 4.0
    Cf = ((4.0 * (x2 / x3) - 1.0) / (4.0 * (x2 / x3) - 4.0)) + (0.615 * x3 / x2)
    Fmax = 1000.0
    S = 189000.0
    G = 11.5e6
    K = (G * x3 ** 4) / (8.0 * x1 * x2 ** 3)
    lmax = 14.0
    lf = (Fmax / K) + 1.05 * (x1 + 2.0) * x3
    Fp = 300.0
    sigma_p = Fp / K
    sigma_pm = 6.0
    sigma_w = 1.25
    g1 = -((8.0 * Cf * Fmax * x2) / (math.pi * x3 ** 3)) + S
    g2 = -lf + lmax
    g3 = -3.0 + (x2 / x3)
    g4 = -sigma_p + sigma_pm
    g5 = -sigma_p - ((Fmax - Fp) / K) - ((1.05 * (x1 + 2.0) * x3)) + lf
    g6 = sigma_w - ((Fmax - Fp) / K)
    return [f1], [g1, g2, g3, g4, g5, g6]


def base_re31(x):
    x1, x2, x3 = x
    f1 = x1 * math.sqrt(16.0 + (x3 * x3)) + x2 * math.sqrt(1.0 + x3 * x3)
    f2 = (20.0 * math.sqrt(16.0 + (x3 * x3))) / (x1 * x3)
    g1 = 0.1 - f1
    g2 = 100000.0 - f2
    g3 = 100000.0 - ((80.0 * math.sqrt(1.0 + x3 * x3)) / (x3 * x2))
    return [f1, f2], [g1, g2, g3]


def base_re32(x):
    x1, x2, x3, x4 = x
    P, L, E, G = 6000.0, 14.0, 30.0e6, 12.0e6
    tau_max, sigma_max = 13600.0, 30000.0
    f1 = (1.10471 * x1 * x1 * x2) + (0.04811 * x3 * x4) * (14.0 + x2)
    f2 = (4.0 * P * L ** 3) / (E * x4 * x3 ** 3)
    M = P * (L + (x2 / 2.0))
    R = math.sqrt(((x2 * x2) / 4.0) + ((x1 + x3) / 2.0) ** 2)
    J = 2.0 * math.sqrt(2.0) * x1 * x2 * ((x2 * x2) / 12.0 + ((x1 + x3) / 2.0) ** 2)
    tau1 = P / (math.sqrt(2.0) * x1 * x2)
    tau2 = (M * R) / J
    tau = math.sqrt(tau1 ** 2 + ((2.0 * tau1 * tau2 * x2) / (2.0 * R)) + tau2 ** 2)
    sigma = (6.0 * P * L) / (x4 * x3 * x3)
    PC = ((4.013 * E * math.sqrt((x3 * x3 * x4 ** 6) / 36.0)) / (L * L)) \
        * (1.0 - (x3 / (2.0 * L)) * math.sqrt(E / (4.0 * G)))
    g1 = tau_max - tau
    g2 = sigma_max - sigma
    g3 = x4 - x1
    g4 = PC - P
    return [f1, f2], [g1, g2, g3, g4]


def base_re33(x):
    x1, x2, x3, x4 = x
    f1 = 4.9e-5 * (x2 * x2 - x1 * x1) * (x4 - 1.0)
    f2 = (9.82e6 * (x2 * x2 - x1 * x1)) / (x3 * x4 * (x2 ** 3 - x1 ** 3))
    g1 = (x2 - x1) - 20.0
    g2 = 0.4 - (x3 / (3.14 * (x2 * x2 - x1 * x1)))
    g3 = 1.0 - (2.22e-3 * x3 * (x2 ** 3 - x1 ** 3)) / ((x2 * x2 - x1 * x1) ** 2)
    g4 = (2.66e-2 * x3 * x4 * (x2 ** 3 - x1 ** 3)) / (x2 * x2 - x1 * x1) - 900.0
    return [f1, f2], [g1, g2, g3, g4]


def base_re34(x):
    x1, x2, x3, x4, x5 = x
    f1 = 1640.2823 + (2.3573285 * x1) + (2.3220035 * x2) + (4.5688768 * x3) \
        + (7.7213633 * x4) + (4.4559504 * x5)
    f2 = 6.5856 + (1.15 * x1) - (1.0427 * x2) + (0.9738 * x3) + (0.8364 * x4) \
        - (0.3695 * x1 * x4) + (0.0861 * x1 * x5) + (0.3628 * x2 * x4) \
        - (0.1106 * x1 * x1) - (0.3437 * x3 * x3) + (0.1764 * x4 * x4)
    f3 = -0.0551 + (0.0181 * x1) + (0.1024 * x2) + (0.0421 * x3) \
        - (0.0073 * x1 * x2) + (0.024 * x2 * x3) - (0.0118 * x2 * x4) \
        - (0.0204 * x3 * x4) - (0.008 * x3 * x5) - (0.0241 * x2 * x2) \
        + (0.0109 * x4 * x4)
    return [f1, f2, f3], []


def base_re35(x):
    x1, x2, x3, x4, x5, x6, x7 = x
    f1 = 0.7854 * x1 * (x2 * x2) * (((10.0 * x3 * x3) / 3.0) + (14.933 * x3) - 43.0934) \
        - 1.508 * x1 * (x6 * x6 + x7 * x7) \
        + 7.477 * (x6 ** 3 + x7 ** 3) \
        + 0.7854 * (x4 * x6 * x6 + x5 * x7 * x7)
    tmp = math.sqrt(((745.0 * x4) / (x2 * x3)) ** 2 + 1.69e7)
    f2 = tmp / (0.1 * x6 ** 3)
    g1 = -(1.0 / (x1 * x2 * x2 * x3)) + (1.0 / 27.0)
    g2 = -(1.0 / (x1 * x2 * x2 * x3 * x3)) + (1.0 / 397.5)
    g3 = -(x4 ** 3) / (x2 * x3 * x6 ** 4) + (1.0 / 1.93)
    g4 = -(x5 ** 3) / (x2 * x3 * x7 ** 4) + (1.0 / 1.93)
    g5 = -(x2 * x3) + 40.0
    g6 = -(x1 / x2) + 12.0
    g7 = -5.0 + (x1 / x2)
    g8 = -1.9 + x4 - (1.5 * x6)
    g9 = -1.9 + x5 - (1.1 * x7)
    g10 = -f2 + 1300.0
    g11 = -(math.sqrt(((745.0 * x5) / (x2 * x3)) ** 2 + 1.575e8) / (0.1 * x7 ** 3)) + 1100.0
    return [f1, f2], [g1, g2, g3, g4, g5, g6, g7, g8, g9, g10, g11]


def base_re36(x):
    x1, x2, x3, x4 = x
    f1 = abs(6.931 - ((x3 / x1) * (x4 / x2)))
    f2 = max(x1, x2, x3, x4)
    g1 = 0.5 - (f1 / 6.931)
    return [f1, f2], [g1]


def base_re37(x):
    xa, xh, xo, xp = x
    f1 = 0.692 + (0.477 * xa) - (0.687 * xh) - (0.080 * xo) - (0.0650 * xp) \
        - (0.167 * xa * xa) - (0.0129 * xh * xa) + (0.0796 * xh * xh) \
        - (0.0634 * xo * xa) - (0.0257 * xo * xh) + (0.0877 * xo * xo) \
        - (0.0521 * xp * xa) + (0.00156 * xp * xh) + (0.00198 * xp * xo) \
        + (0.0184 * xp * xp)
    f2 = 0.153 - (0.322 * xa) + (0.396 * xh) + (0.424 * xo) + (0.0226 * xp) \
        + (0.175 * xa * xa) + (0.0185 * xh * xa) - (0.0701 * xh * xh) \
        - (0.251 * xo * xa) + (0.179 * xo * xh) + (0.0150 * xo * xo) \
        + (0.0134 * xp * xa) + (0.0296 * xp * xh) + (0.0752 * xp * xo) \
        + (0.0192 * xp * xp)
    f3 = 0.370 - (0.205 * xa) + (0.0307 * xh) + (0.108 * xo) + (1.019 * xp) \
        - (0.135 * xa * xa) + (0.0141 * xh * xa) + (0.0998 * xh * xh) \
        + (0.208 * xo * xa) - (0.0301 * xo * xh) - (0.226 * xo * xo) \
        + (0.353 * xp * xa) - (0.0497 * xp * xo) - (0.423 * xp * xp) \
        + (0.202 * xh * xa * xa) - (0.281 * xo * xa * xa) \
        - (0.342 * xh * xh * xa) - (0.245 * xh * xh * xo) \
        + (0.281 * xo * xo * xh) - (0.184 * xp * xp * xa) \
        - (0.281 * xh * xa * xo)
    return [f1, f2, f3], []


def base_re41(x):
    x1, x2, x3, x4, x5, x6, x7 = x
    f1 = 1.98 + (4.9 * x1) + (6.67 * x2) + (6.98 * x3) + (4.01 * x4) \
        + (1.78 * x5) + (0.00001 * x6) + (2.73 * x7)
    f2 = 4.72 - (0.5 * x4) - (0.19 * x2 * x3)
    v_mbp = 10.58 - (0.674 * x1 * x2) - (0.67275 * x2)
    v_fd = 16.45 - (0.489 * x3 * x7) - (0.843 * x5 * x6)
    f3 = 0.5 * (v_mbp + v_fd)
    g1 = 1.0 - (1.16 - (0.3717 * x2 * x4) - (0.0092928 * x3))
    g2 = 0.32 - (0.261 - (0.0159 * x1 * x2) - (0.06486 * x1)
                 - (0.019 * x2 * x7) + (0.0144 * x3 * x5) + (0.0154464 * x6))
    g3 = 0.32 - (0.214 + (0.00817 * x5) - (0.045195 * x1) - (0.0135168 * x1)
                 + (0.03099 * x2 * x6) - (0.018 * x2 * x7) + (0.007176 * x3)
                 + (0.023232 * x3) - (0.00364 * x5 * x6) - (0.018 * x2 * x2))
    g4 = 0.32 - (0.74 - (0.61 * x2) - (0.031296 * x3) - (0.031872 * x7)
                 + (0.227 * x2 * x2))
    g5 = 32.0 - (28.98 + (3.818 * x3) - (4.2 * x1 * x2) + (1.27296 * x6)
                 - (2.68065 * x7))
    g6 = 32.0 - (33.86 + (2.95 * x3) - (5.057 * x1 * x2) - (3.795 * x2)
                 - (3.4431 * x7) + 1.45728)
    g7 = 32.0 - (46.36 - (9.9 * x2) - (4.4505 * x1))
    g8 = 4.0 - f2
    g9 = 9.9 - v_mbp
    g10 = 15.7 - v_fd
    return [f1, f2, f3], [g1, g2, g3, g4, g5, g6, g7, g8, g9, g10]


def base_re42(x):
    L, B, D, T, Vk, CB = x
    displacement = 1.025 * L * B * T * CB
    V = 0.5144 * Vk
    Fn = V / math.sqrt(9.8065 * L)
    a = (4977.06 * CB * CB) - (8105.61 * CB) + 4456.51
    b = (-10847.2 * CB * CB) + (12817.0 * CB) - 6960.32
    power = (displacement ** (2.0 / 3.0)) * (V ** 3) / (a + b * Fn)
    outfit_weight = 1.0 * (L ** 0.8) * (B ** 0.6) * (D ** 0.3) * (CB ** 0.1)
    steel_weight = 0.034 * (L ** 1.7) * (B ** 0.7) * (D ** 0.4) * (CB ** 0.5)
    machinery_weight = 0.17 * (power ** 0.9)
    light_ship_weight = steel_weight + outfit_weight + machinery_weight
    ship_cost = 1.3 * ((2000.0 * (steel_weight ** 0.85))
                       + (3500.0 * outfit_weight)
                       + (2400.0 * (power ** 0.8)))
    capital_costs = 0.2 * ship_cost
    DWT = displacement - light_ship_weight
    running_costs = 40000.0 * (DWT ** 0.3)
    round_trip_miles = 5000.0
    sea_days = (round_trip_miles / 24.0) * Vk
    handling_rate = 8000.0
    daily_consumption = ((0.19 * power * 24.0) / 1000.0) + 0.2
    fuel_price = 100.0
    fuel_carried = daily_consumption * (sea_days + 5.0)
    miscellaneous_DWT = 2.0 * (DWT ** 0.5)
    cargo_DWT = DWT - fuel_carried - miscellaneous_DWT
    port_days = 2.0 * ((cargo_DWT / handling_rate) + 0.5)
    RTPA = 350.0 / (sea_days + port_days)
    voyage_costs = (fuel_price * daily_consumption * sea_days) * RTPA
    annual_costs = capital_costs + running_costs + voyage_costs
    annual_cargo = cargo_DWT * RTPA
    f1 = annual_costs / annual_cargo
    f2 = light_ship_weight
    f3 = -annual_cargo
    g1 = (L / B) - 6.0
    g2 = -(L / D) + 15.0
    g3 = -(L / T) + 19.0
    g4 = 0.45 * (DWT ** 0.31) - T
    g5 = 0.7 * D + 0.7 - T
    g6 = 500000.0 - DWT
    g7 = DWT - 3000.0
    g8 = 0.32 - Fn
    KB = 0.53 * T
    BMT = ((0.085 * CB - 0.002) * B * B) / (T * CB)
    KG = 1.0 + 0.52 * D
    g9 = (KB + BMT - KG) - (0.07 * B)
    return [f1, f2, f3], [g1, g2, g3, g4, g5, g6, g7, g8, g9]


def base_re61(x):
    x1, x2, x3 = x
    f1 = 106780.37 * (x2 + x3) + 61704.67
    f2 = 3000.0 * x1
    f3 = 305700.0 * 2289.0 * x2 / ((0.06 * 2289.0) ** 0.65)
    f4 = 250.0 * 2289.0 * math.exp(-39.75 * x2 + 9.9 * x3 + 2.74)
    f5 = 25.0 * ((1.39 / (x1 * x2)) + (4940.0 * x3) - 80.0)
    g1 = 1.0 - ((0.00139 / (x1 * x2)) + (4.94 * x3) - 0.08)
    g2 = 1.0 - ((0.000306 / (x1 * x2)) + (1.082 * x3) - 0.0986)
    g3 = 50000.0 - ((12.307 / (x1 * x2)) + (49408.24 * x3) + 4051.02)
    g4 = 16000.0 - ((2.098 / (x1 * x2)) + (8046.33 * x3) - 696.71)
    g5 = 10000.0 - ((2.138 / (x1 * x2)) + (7883.39 * x3) - 705.04)
    g6 = 2000.0 - ((0.417 * x1 * x2) + (1721.26 * x3) - 136.54)
    g7 = 550.0 - ((0.164 / (x1 * x2)) + (631.13 * x3) - 54.48)
    return [f1, f2, f3, f4, f5], [g1, g2, g3, g4, g5, g6, g7]


def base_re91(x):
    x1, x2, x3, x4, x5, x6, x7 = x
    x8 = 0.345
    x9 = 0.192
    x10 = 0.0
    x11 = 0.0
    f = [0.0] * 9
    f[0] = 1.98 + (4.9 * x1) + (6.67 * x2) + (6.98 * x3) + (4.01 * x4) \
        + (1.75 * x5) + (0.00001 * x6) + (2.73 * x7)
    f[1] = max(0.0, (1.16 - (0.3717 * x2 * x4) - (0.00931 * x2 * x10)
                     - (0.484 * x3 * x9) + (0.01343 * x6 * x10)) / 1.0)
    f[2] = max(0.0, (0.261 - (0.0159 * x1 * x2) - (0.188 * x1 * x8)
                     - (0.019 * x2 * x7) + (0.0144 * x3 * x5)
                     + (0.87570001 * x5 * x10) + (0.08045 * x6 * x9)
                     + (0.00139 * x8 * x11) + (0.00001575 * x10 * x11)) / 0.32)
    f[3] = max(0.0, (0.214 + (0.00817 * x5) - (0.131 * x1 * x8)
                     - (0.0704 * x1 * x9) + (0.03099 * x2 * x6)
                     - (0.018 * x2 * x7) + (0.0208 * x3 * x8)
                     + (0.121 * x3 * x9) - (0.00364 * x5 * x6)
                     + (0.0007715 * x5 * x10) - (0.0005354 * x6 * x10)
                     + (0.00121 * x8 * x11) + (0.00184 * x9 * x10)
                     - (0.018 * x2 * x2)) / 0.32)
    f[4] = max(0.0, (0.74 - (0.61 * x2) - (0.163 * x3 * x8)
                     + (0.001232 * x3 * x10) - (0.166 * x7 * x9)
                     + (0.227 * x2 * x2)) / 0.32)
    temp = ((28.98 + (3.818 * x3) - (4.2 * x1 * x2) + (0.0207 * x5 * x10)
             + (6.63 * x6 * x9) - (7.77 * x7 * x8) + (0.32 * x9 * x10))
            + (33.86 + (2.95 * x3) + (0.1792 * x10) - (5.057 * x1 * x2)
               - (11.0 * x2 * x8) - (0.0215 * x5 * x10) - (9.98 * x7 * x8)
               + (22.0 * x8 * x9))
            + (46.36 - (9.9 * x2) - (12.9 * x1 * x8) + (0.1107 * x3 * x10))) / 3.0
    f[5] = max(0.0, temp / 32.0)
    f[6] = max(0.0, (4.72 - (0.5 * x4) - (0.19 * x2 * x3)
                     - (0.0122 * x4 * x10) + (0.009325 * x6 * x10)
                     + (0.000191 * x11 * x11)) / 4.0)
    f[7] = max(0.0, (10.58 - (0.674 * x1 * x2) - (1.95 * x2 * x8)
                     + (0.02054 * x3 * x10) - (0.0198 * x4 * x10)
                     + (0.028 * x6 * x10)) / 9.9)
    f[8] = max(0.0, (16.45 - (0.489 * x3 * x7) - (0.843 * x5 * x6)
                     + (0.0432 * x9 * x10) - (0.0556 * x9 * x11)
                     - (0.000786 * x11 * x11)) / 15.7)
    return f, []


# ---------------------------------------------------------------- registry

SQ2 = math.sqrt(2.0)

RE22_X1 = [0.20, 0.31, 0.40, 0.44, 0.60, 0.62, 0.79, 0.80, 0.88, 0.93,
           1.0, 1.20, 1.24, 1.32, 1.40, 1.55, 1.58, 1.60, 1.76, 1.80,
           1.86, 2.0, 2.17, 2.20, 2.37, 2.40, 2.48, 2.60, 2.64, 2.79,
           2.80, 3.0, 3.08, 3.10, 3.16, 3.41, 3.52, 3.60, 3.72, 3.95,
           3.96, 4.0, 4.03, 4.20, 4.34, 4.40, 4.65, 4.74, 4.80, 4.84,
           5.0, 5.28, 5.40, 5.53, 5.72, 6.0, 6.16, 6.32, 6.60, 7.11,
           7.20, 7.80, 7.90, 8.0, 8.40, 8.69, 9.0, 9.48, 10.27, 11.0,
           11.06, 11.85, 12.0, 13.0, 14.0, 15.0]

RE25_X3 = [0.009, 0.0095, 0.0104, 0.0118, 0.0128, 0.0132, 0.014, 0.015,
           0.0162, 0.0173, 0.018, 0.02, 0.023, 0.025, 0.028, 0.032, 0.035,
           0.041, 0.047, 0.054, 0.063, 0.072, 0.08, 0.092, 0.105, 0.12,
           0.135, 0.148, 0.162, 0.177, 0.192, 0.207, 0.225, 0.244, 0.263,
           0.283, 0.307, 0.331, 0.362, 0.394, 0.4375, 0.5]


def fold(base, keep, total_m):
    """RE construction: keep 'keep' base objectives, append summed violation."""
    def ev(x):
        f, g = base(x)
        out = f[:keep] + [float(sum(viol(g)))]
        assert len(out) == total_m
        return out
    return ev


def plain(base, m):
    def ev(x):
        f, g = base(x)
        assert not g and len(f) == m
        return f
    return ev


def cre(base, m):
    def ev(x):
        f, g = base(x)
        return f[:m], viol(g)
    return ev


SPECS = {
    "RE21": [Cont(1.0, 3.0), Cont(SQ2, 3.0), Cont(SQ2, 3.0), Cont(1.0, 3.0)],
    "RE22": [Discrete(RE22_X1), Cont(0.0, 20.0), Cont(0.0, 40.0)],
    "RE23": [Integer(1, 100), Integer(1, 100), Cont(10.0, 200.0), Cont(10.0, 240.0)],
    "RE24": [Cont(0.5, 4.0), Cont(4.0, 50.0)],
    "RE25": [Integer(1, 70), Cont(0.6, 30.0), Discrete(RE25_X3)],
    "RE31": [Cont(0.00001, 100.0), Cont(0.00001, 100.0), Cont(1.0, 3.0)],
    "RE32": [Cont(0.125, 5.0), Cont(0.1, 10.0), Cont(0.1, 10.0), Cont(0.125, 5.0)],
    "RE33": [Cont(55.0, 80.0), Cont(75.0, 110.0), Cont(1000.0, 3000.0), Cont(11.0, 20.0)],
    "RE34": [Cont(1.0, 3.0)] * 5,
    "RE35": [Cont(2.6, 3.6), Cont(0.7, 0.8), Integer(17, 28),
             Cont(7.3, 8.3), Cont(7.3, 8.3), Cont(2.9, 3.9), Cont(5.0, 5.5)],
    "RE36": [Integer(12, 60)] * 4,
    "RE37": [Cont(0.0, 1.0)] * 4,
    "RE41": [Cont(0.5, 1.5), Cont(0.45, 1.35), Cont(0.5, 1.5), Cont(0.5, 1.5),
             Cont(0.875, 2.625), Cont(0.4, 1.2), Cont(0.4, 1.2)],
    "RE42": [Cont(150.0, 274.32), Cont(20.0, 32.31), Cont(13.0, 25.0),
             Cont(10.0, 11.71), Cont(14.0, 18.0), Cont(0.63, 0.75)],
    "RE61": [Cont(0.01, 0.45), Cont(0.01, 0.10), Cont(0.01, 0.10)],
    "RE91": [Cont(0.5, 1.5), Cont(0.45, 1.35), Cont(0.5, 1.5), Cont(0.5, 1.5),
             Cont(0.875, 2.625), Cont(0.4, 1.2), Cont(0.4, 1.2)],
}

# id -> (long_name, specs_key, evaluator, M, N)
PROBLEMS = {
    "RE2-4-1": ("RE21", plain(base_re21, 2), 2, 0),
    "RE2-3-2": ("RE22", fold(base_re22, 1, 2), 2, 0),
    "RE2-4-3": ("RE23", fold(base_re23, 1, 2), 2, 0),
    "RE2-2-4": ("RE24", fold(base_re24, 1, 2), 2, 0),
    "RE2-3-5": ("RE25", fold(base_re25, 1, 2), 2, 0),
    "RE3-3-1": ("RE31", fold(base_re31, 2, 3), 3, 0),
    "RE3-4-2": ("RE32", fold(base_re32, 2, 3), 3, 0),
    "RE3-4-3": ("RE33", fold(base_re33, 2, 3), 3, 0),
    "RE3-5-4": ("RE34", plain(base_re34, 3), 3, 0),
    "RE3-7-5": ("RE35", fold(base_re35, 2, 3), 3, 0),
    "RE3-4-6": ("RE36", fold(base_re36, 2, 3), 3, 0),
    "RE3-4-7": ("RE37", plain(base_re37, 3), 3, 0),
    "RE4-7-1": ("RE41", fold(base_re41, 3, 4), 4, 0),
    "RE4-6-2": ("RE42", fold(base_re42, 3, 4), 4, 0),
    "RE6-3-1": ("RE61", fold(base_re61, 5, 6), 6, 0),
    "RE9-7-1": ("RE91", plain(base_re91, 9), 9, 0),
    "CRE2-3-1": ("RE31", cre(base_re31, 2), 2, 3),
    "CRE2-4-2": ("RE32", cre(base_re32, 2), 2, 4),
    "CRE2-4-3": ("RE33", cre(base_re33, 2), 2, 4),
    "CRE2-7-4": ("RE35", cre(base_re35, 2), 2, 11),
    "CRE2-4-5": ("RE36", cre(base_re36, 2), 2, 1),
    "CRE3-7-1": ("RE41", cre(base_re41, 3), 3, 10),
    "CRE3-6-2": ("RE42", cre(base_re42, 3), 3, 9),
    "CRE5-3-1": ("RE61", cre(base_re61, 5), 5, 7),
}

ORDER = list(PROBLEMS.keys())


def evaluate(pid, x):
    _, ev, m, n = PROBLEMS[pid]
    out = ev(x)
    if n > 0:
        f, v = out
        assert len(f) == m and len(v) == n
        return f, v
    assert len(out) == m
    return out, []


def probe_points(pid):
    key = PROBLEMS[pid][0]
    specs = SPECS[key]
    lo = np.array([s.lo if not isinstance(s, Discrete) else s.values[0] for s in specs])
    hi = np.array([s.hi if not isinstance(s, Discrete) else s.values[-1] for s in specs])
    pts = [lo + 0.5 * (hi - lo), lo + 0.25 * (hi - lo), lo + 0.75 * (hi - lo)]
    rng = np.random.default_rng(zlib.crc32(pid.encode()) + 7)
    for _ in range(2):
        pts.append(lo + rng.random(len(specs)) * (hi - lo))
    return [repair(list(p), specs) for p in pts]


# ---------------------------------------------------------------- self checks

def check():
    # worked two-objective example: x=(0.2, 10, 20)
    f, _ = evaluate("RE2-3-2", [0.2, 10.0, 20.0])
    assert abs(f[0] - 125.88) < 1e-9, f
    assert abs(f[1] - 176.03094) < 1e-9, f

    # RE/CRE consistency at shared probe points
    pairs = [("CRE2-3-1", "RE3-3-1"), ("CRE2-4-2", "RE3-4-2"),
             ("CRE2-4-3", "RE3-4-3"), ("CRE2-7-4", "RE3-7-5"),
             ("CRE2-4-5", "RE3-4-6"), ("CRE3-7-1", "RE4-7-1"),
             ("CRE3-6-2", "RE4-6-2"), ("CRE5-3-1", "RE6-3-1")]
    for cid, rid in pairs:
        for x in probe_points(rid):
            fr, _ = evaluate(rid, x)
            fc, v = evaluate(cid, x)
            for a, b in zip(fc, fr):
                assert a == b, (cid, rid, x)
            assert abs(fr[-1] - sum(v)) <= 1e-12 * max(1.0, abs(fr[-1])), (cid, rid, x)

    # violation-fold objectives are nonnegative
    for pid in ORDER:
        if pid.startswith("RE") and pid not in ("RE2-4-1", "RE3-5-4", "RE3-4-7", "RE9-7-1"):
            for x in probe_points(pid):
                f, _ = evaluate(pid, x)
                assert f[-1] >= 0.0, (pid, x, f)

    # midpoint totality
    for pid in ORDER:
        x = probe_points(pid)[0]
        f, v = evaluate(pid, x)
        assert all(math.isfinite(c) for c in f), (pid, x, f)
        assert all(c >= 0.0 for c in v), (pid, x, v)

    assert len(RE22_X1) == 76 and len(RE25_X3) == 42


# ---------------------------------------------------------------- emit

def fmt(v):
    return "%.17g" % v


def main(out_path):
    check()
    rows = []
    for pid in ORDER:
        for x in probe_points(pid):
            f, v = evaluate(pid, x)
            rows.append((pid, x, f, float(sum(v))))
    with open(out_path, "w") as fh:
        fh.write("// Pinned problem-evaluation vectors."
                 " Generated by tests/oracles/gen_problem_vectors.py; do not edit.\n")
        fh.write("#pragma once\n\n#include <vector>\n\n")
        fh.write("namespace rebench::testvectors {\n\n")
        fh.write("struct PinnedVector {\n  const char* problem;\n"
                 "  std::vector<double> x;\n  std::vector<double> f;\n"
                 "  double violation;\n};\n\n")
        fh.write("inline const std::vector<PinnedVector>& pinned_vectors() {\n")
        fh.write("  static const std::vector<PinnedVector> v = {\n")
        for pid, x, f, cv in rows:
            xs = ", ".join(fmt(c) for c in x)
            fs = ", ".join(fmt(c) for c in f)
            fh.write('      {"%s", {%s}, {%s}, %s},\n' % (pid, xs, fs, fmt(cv)))
        fh.write("  };\n  return v;\n}\n\n}  // namespace rebench::testvectors\n")
    print("wrote %s (%d vectors, %d problems)" % (out_path, len(rows), len(ORDER)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/pinned_vectors.hpp")
