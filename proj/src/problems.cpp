#include "rebench/problems.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace rebench {
namespace {

using std::abs;
using std::exp;
using std::pow;
using std::sqrt;

constexpr double PI = 3.14159265358979323846;

struct BaseEval {
  std::vector<double> f;
  std::vector<double> g;
};

// Violation of one constraint stated as g >= 0. Written as a conditional so
// that a NaN constraint value contributes zero, matching the behavioral
// reference for these formulations.
double viol(double g) { return g < 0.0 ? -g : 0.0; }

// ---------------------------------------------------------------------------
// Base formulations. Each returns the original objectives plus the raw
// constraint values in g >= 0 form.
// ---------------------------------------------------------------------------

// Four bar truss. The f2 scale uses F*L/E = 1e-3, consistent with the
// published front range [2.8e-4, 3.4e-3].
BaseEval four_bar_truss(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  const double F = 10.0, E = 2.0e6, L = 200.0;
  const double f1 = L * ((2.0 * x1) + sqrt(2.0) * x2 + sqrt(x3) + x4);
  const double f2 = ((F * L) / E) * ((2.0 / x1) + (2.0 * sqrt(2.0) / x2) -
                                     (2.0 * sqrt(2.0) / x3) + (2.0 / x4));
  return {{f1, f2}, {}};
}

// Reinforced concrete beam.
BaseEval concrete_beam(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double f1 = (29.4 * x1) + (0.6 * x2 * x3);
  const double g1 = (x1 * x3) - 7.735 * ((x1 * x1) / x2) - 180.0;
  const double g2 = 4.0 - (x3 / x2);
  return {{f1}, {g1, g2}};
}

// Pressure vessel. x1, x2 are integer multipliers of 0.0625 inch.
BaseEval pressure_vessel(const Vec& x) {
  const double d1 = 0.0625 * x[0];
  const double d2 = 0.0625 * x[1];
  const double x3 = x[2], x4 = x[3];
  const double f1 = (0.6224 * d1 * x3 * x4) + (1.7781 * d2 * x3 * x3) +
                    (3.1661 * d1 * d1 * x4) + (19.84 * d1 * d1 * x3);
  const double g1 = d1 - (0.0193 * x3);
  const double g2 = d2 - (0.00954 * x3);
  const double g3 = (PI * x3 * x3 * x4) + ((4.0 / 3.0) * PI * x3 * x3 * x3) - 1296000.0;
  return {{f1}, {g1, g2, g3}};
}

// Hatch cover.
BaseEval hatch_cover(const Vec& x) {
  const double x1 = x[0], x2 = x[1];
  const double f1 = x1 + (120.0 * x2);
  const double E = 700000.0;
  const double sigma_b_max = 700.0;
  const double tau_max = 450.0;
  const double delta_max = 1.5;
  const double sigma_k = (E * x1 * x1) / 100.0;
  const double sigma_b = 4500.0 / (x1 * x2);
  const double tau = 1800.0 / x2;
  const double delta = (56.2 * 10000.0) / (E * x1 * x2 * x2);
  const double g1 = 1.0 - (sigma_b / sigma_b_max);
  const double g2 = 1.0 - (tau / tau_max);
  const double g3 = 1.0 - (delta / delta_max);
  const double g4 = 1.0 - (sigma_b / sigma_k);
  return {{f1}, {g1, g2, g3, g4}};
}

// Coil compression spring. x1 integer, x3 on the standard wire-gauge grid.
BaseEval coil_spring(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double f1 = (PI * PI * x2 * x3 * x3 * (x1 + 2.0)) / 4.0;
  const double Cf = ((4.0 * (x2 / x3) - 1.0) / (4.0 * (x2 / x3) - 4.0)) + (0.615 * x3 / x2);
  const double Fmax = 1000.0;
  const double S = 189000.0;
  const double G = 11.5e6;
  const double K = (G * pow(x3, 4.0)) / (8.0 * x1 * x2 * x2 * x2);
  const double lmax = 14.0;
  const double lf = (Fmax / K) + 1.05 * (x1 + 2.0) * x3;
  const double Fp = 300.0;
  const double sigma_p = Fp / K;
  const double sigma_pm = 6.0;
  const double sigma_w = 1.25;
  const double g1 = -((8.0 * Cf * Fmax * x2) / (PI * x3 * x3 * x3)) + S;
  const double g2 = -lf + lmax;
  const double g3 = -3.0 + (x2 / x3);
  const double g4 = -sigma_p + sigma_pm;
  const double g5 = -sigma_p - ((Fmax - Fp) / K) - (1.05 * (x1 + 2.0) * x3) + lf;
  const double g6 = sigma_w - ((Fmax - Fp) / K);
  return {{f1}, {g1, g2, g3, g4, g5, g6}};
}

// Two bar truss.
BaseEval two_bar_truss(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double f1 = x1 * sqrt(16.0 + (x3 * x3)) + x2 * sqrt(1.0 + x3 * x3);
  const double f2 = (20.0 * sqrt(16.0 + (x3 * x3))) / (x1 * x3);
  const double g1 = 0.1 - f1;
  const double g2 = 100000.0 - f2;
  const double g3 = 100000.0 - ((80.0 * sqrt(1.0 + x3 * x3)) / (x3 * x2));
  return {{f1, f2}, {g1, g2, g3}};
}

// Welded beam.
BaseEval welded_beam(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  const double P = 6000.0, L = 14.0, E = 30.0e6, G = 12.0e6;
  const double tau_max = 13600.0, sigma_max = 30000.0;
  const double f1 = (1.10471 * x1 * x1 * x2) + (0.04811 * x3 * x4) * (14.0 + x2);
  const double f2 = (4.0 * P * L * L * L) / (E * x4 * x3 * x3 * x3);
  const double M = P * (L + (x2 / 2.0));
  const double R = sqrt(((x2 * x2) / 4.0) + pow((x1 + x3) / 2.0, 2.0));
  const double J = 2.0 * sqrt(2.0) * x1 * x2 * ((x2 * x2) / 12.0 + pow((x1 + x3) / 2.0, 2.0));
  const double tau1 = P / (sqrt(2.0) * x1 * x2);
  const double tau2 = (M * R) / J;
  const double tau = sqrt(tau1 * tau1 + ((2.0 * tau1 * tau2 * x2) / (2.0 * R)) + tau2 * tau2);
  const double sigma = (6.0 * P * L) / (x4 * x3 * x3);
  const double PC = ((4.013 * E * sqrt((x3 * x3 * pow(x4, 6.0)) / 36.0)) / (L * L)) *
                    (1.0 - (x3 / (2.0 * L)) * sqrt(E / (4.0 * G)));
  const double g1 = tau_max - tau;
  const double g2 = sigma_max - sigma;
  const double g3 = x4 - x1;
  const double g4 = PC - P;
  return {{f1, f2}, {g1, g2, g3, g4}};
}

// Disc brake.
BaseEval disc_brake(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  const double f1 = 4.9e-5 * (x2 * x2 - x1 * x1) * (x4 - 1.0);
  const double f2 = (9.82e6 * (x2 * x2 - x1 * x1)) /
                    (x3 * x4 * (x2 * x2 * x2 - x1 * x1 * x1));
  const double g1 = (x2 - x1) - 20.0;
  const double g2 = 0.4 - (x3 / (3.14 * (x2 * x2 - x1 * x1)));
  const double g3 = 1.0 - (2.22e-3 * x3 * (x2 * x2 * x2 - x1 * x1 * x1)) /
                              pow(x2 * x2 - x1 * x1, 2.0);
  const double g4 = (2.66e-2 * x3 * x4 * (x2 * x2 * x2 - x1 * x1 * x1)) /
                        (x2 * x2 - x1 * x1) - 900.0;
  return {{f1, f2}, {g1, g2, g3, g4}};
}

// Vehicle crashworthiness; response-surface coefficients from the origin study.
BaseEval crashworthiness(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4];
  const double f1 = 1640.2823 + (2.3573285 * x1) + (2.3220035 * x2) + (4.5688768 * x3) +
                    (7.7213633 * x4) + (4.4559504 * x5);
  const double f2 = 6.5856 + (1.15 * x1) - (1.0427 * x2) + (0.9738 * x3) + (0.8364 * x4) -
                    (0.3695 * x1 * x4) + (0.0861 * x1 * x5) + (0.3628 * x2 * x4) -
                    (0.1106 * x1 * x1) - (0.3437 * x3 * x3) + (0.1764 * x4 * x4);
  const double f3 = -0.0551 + (0.0181 * x1) + (0.1024 * x2) + (0.0421 * x3) -
                    (0.0073 * x1 * x2) + (0.024 * x2 * x3) - (0.0118 * x2 * x4) -
                    (0.0204 * x3 * x4) - (0.008 * x3 * x5) - (0.0241 * x2 * x2) +
                    (0.0109 * x4 * x4);
  return {{f1, f2, f3}, {}};
}

// Speed reducer.
BaseEval speed_reducer(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
  const double f1 = 0.7854 * x1 * (x2 * x2) * (((10.0 * x3 * x3) / 3.0) + (14.933 * x3) - 43.0934)
                    - 1.508 * x1 * (x6 * x6 + x7 * x7)
                    + 7.477 * (x6 * x6 * x6 + x7 * x7 * x7)
                    + 0.7854 * (x4 * x6 * x6 + x5 * x7 * x7);
  const double f2 = sqrt(pow((745.0 * x4) / (x2 * x3), 2.0) + 1.69e7) / (0.1 * x6 * x6 * x6);
  const double g1 = -(1.0 / (x1 * x2 * x2 * x3)) + (1.0 / 27.0);
  const double g2 = -(1.0 / (x1 * x2 * x2 * x3 * x3)) + (1.0 / 397.5);
  const double g3 = -(x4 * x4 * x4) / (x2 * x3 * pow(x6, 4.0)) + (1.0 / 1.93);
  const double g4 = -(x5 * x5 * x5) / (x2 * x3 * pow(x7, 4.0)) + (1.0 / 1.93);
  const double g5 = -(x2 * x3) + 40.0;
  const double g6 = -(x1 / x2) + 12.0;
  const double g7 = -5.0 + (x1 / x2);
  const double g8 = -1.9 + x4 - (1.5 * x6);
  const double g9 = -1.9 + x5 - (1.1 * x7);
  const double g10 = -f2 + 1300.0;
  const double g11 = -(sqrt(pow((745.0 * x5) / (x2 * x3), 2.0) + 1.575e8) /
                       (0.1 * x7 * x7 * x7)) + 1100.0;
  return {{f1, f2}, {g1, g2, g3, g4, g5, g6, g7, g8, g9, g10, g11}};
}

// Gear train; all four variables are tooth counts.
BaseEval gear_train(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3];
  const double f1 = abs(6.931 - ((x3 / x1) * (x4 / x2)));
  const double f2 = std::max(std::max(x1, x2), std::max(x3, x4));
  const double g1 = 0.5 - (f1 / 6.931);
  return {{f1, f2}, {g1}};
}

// Rocket injector; response-surface coefficients from the origin study.
BaseEval rocket_injector(const Vec& x) {
  const double xa = x[0], xh = x[1], xo = x[2], xp = x[3];
  const double f1 = 0.692 + (0.477 * xa) - (0.687 * xh) - (0.080 * xo) - (0.0650 * xp) -
                    (0.167 * xa * xa) - (0.0129 * xh * xa) + (0.0796 * xh * xh) -
                    (0.0634 * xo * xa) - (0.0257 * xo * xh) + (0.0877 * xo * xo) -
                    (0.0521 * xp * xa) + (0.00156 * xp * xh) + (0.00198 * xp * xo) +
                    (0.0184 * xp * xp);
  const double f2 = 0.153 - (0.322 * xa) + (0.396 * xh) + (0.424 * xo) + (0.0226 * xp) +
                    (0.175 * xa * xa) + (0.0185 * xh * xa) - (0.0701 * xh * xh) -
                    (0.251 * xo * xa) + (0.179 * xo * xh) + (0.0150 * xo * xo) +
                    (0.0134 * xp * xa) + (0.0296 * xp * xh) + (0.0752 * xp * xo) +
                    (0.0192 * xp * xp);
  const double f3 = 0.370 - (0.205 * xa) + (0.0307 * xh) + (0.108 * xo) + (1.019 * xp) -
                    (0.135 * xa * xa) + (0.0141 * xh * xa) + (0.0998 * xh * xh) +
                    (0.208 * xo * xa) - (0.0301 * xo * xh) - (0.226 * xo * xo) +
                    (0.353 * xp * xa) - (0.0497 * xp * xo) - (0.423 * xp * xp) +
                    (0.202 * xh * xa * xa) - (0.281 * xo * xa * xa) -
                    (0.342 * xh * xh * xa) - (0.245 * xh * xh * xo) +
                    (0.281 * xo * xo * xh) - (0.184 * xp * xp * xa) -
                    (0.281 * xh * xa * xo);
  return {{f1, f2, f3}, {}};
}

// Car side impact.
BaseEval car_side_impact(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
  const double f1 = 1.98 + (4.9 * x1) + (6.67 * x2) + (6.98 * x3) + (4.01 * x4) +
                    (1.78 * x5) + (0.00001 * x6) + (2.73 * x7);
  const double f2 = 4.72 - (0.5 * x4) - (0.19 * x2 * x3);
  const double v_mbp = 10.58 - (0.674 * x1 * x2) - (0.67275 * x2);
  const double v_fd = 16.45 - (0.489 * x3 * x7) - (0.843 * x5 * x6);
  const double f3 = 0.5 * (v_mbp + v_fd);
  const double g1 = 1.0 - (1.16 - (0.3717 * x2 * x4) - (0.0092928 * x3));
  const double g2 = 0.32 - (0.261 - (0.0159 * x1 * x2) - (0.06486 * x1) - (0.019 * x2 * x7) +
                            (0.0144 * x3 * x5) + (0.0154464 * x6));
  const double g3 = 0.32 - (0.214 + (0.00817 * x5) - (0.045195 * x1) - (0.0135168 * x1) +
                            (0.03099 * x2 * x6) - (0.018 * x2 * x7) + (0.007176 * x3) +
                            (0.023232 * x3) - (0.00364 * x5 * x6) - (0.018 * x2 * x2));
  const double g4 = 0.32 - (0.74 - (0.61 * x2) - (0.031296 * x3) - (0.031872 * x7) +
                            (0.227 * x2 * x2));
  const double g5 = 32.0 - (28.98 + (3.818 * x3) - (4.2 * x1 * x2) + (1.27296 * x6) -
                            (2.68065 * x7));
  const double g6 = 32.0 - (33.86 + (2.95 * x3) - (5.057 * x1 * x2) - (3.795 * x2) -
                            (3.4431 * x7) + 1.45728);
  const double g7 = 32.0 - (46.36 - (9.9 * x2) - (4.4505 * x1));
  const double g8 = 4.0 - f2;
  const double g9 = 9.9 - v_mbp;
  const double g10 = 15.7 - v_fd;
  return {{f1, f2, f3}, {g1, g2, g3, g4, g5, g6, g7, g8, g9, g10}};
}

// Conceptual marine design. Variable order: L, B, D, T, Vk, CB.
BaseEval marine_design(const Vec& x) {
  const double L = x[0], B = x[1], D = x[2], T = x[3], Vk = x[4], CB = x[5];
  const double displacement = 1.025 * L * B * T * CB;
  const double V = 0.5144 * Vk;
  const double Fn = V / sqrt(9.8065 * L);
  const double a = (4977.06 * CB * CB) - (8105.61 * CB) + 4456.51;
  const double b = (-10847.2 * CB * CB) + (12817.0 * CB) - 6960.32;
  const double power = pow(displacement, 2.0 / 3.0) * (V * V * V) / (a + b * Fn);
  const double outfit_weight = 1.0 * pow(L, 0.8) * pow(B, 0.6) * pow(D, 0.3) * pow(CB, 0.1);
  const double steel_weight = 0.034 * pow(L, 1.7) * pow(B, 0.7) * pow(D, 0.4) * pow(CB, 0.5);
  const double machinery_weight = 0.17 * pow(power, 0.9);
  const double light_ship_weight = steel_weight + outfit_weight + machinery_weight;
  const double ship_cost = 1.3 * ((2000.0 * pow(steel_weight, 0.85)) +
                                  (3500.0 * outfit_weight) + (2400.0 * pow(power, 0.8)));
  const double capital_costs = 0.2 * ship_cost;
  const double DWT = displacement - light_ship_weight;
  const double running_costs = 40000.0 * pow(DWT, 0.3);
  const double round_trip_miles = 5000.0;
  const double sea_days = (round_trip_miles / 24.0) * Vk;
  const double handling_rate = 8000.0;
  const double daily_consumption = ((0.19 * power * 24.0) / 1000.0) + 0.2;
  const double fuel_price = 100.0;
  const double fuel_carried = daily_consumption * (sea_days + 5.0);
  const double miscellaneous_DWT = 2.0 * pow(DWT, 0.5);
  const double cargo_DWT = DWT - fuel_carried - miscellaneous_DWT;
  const double port_days = 2.0 * ((cargo_DWT / handling_rate) + 0.5);
  const double RTPA = 350.0 / (sea_days + port_days);
  const double voyage_costs = (fuel_price * daily_consumption * sea_days) * RTPA;
  const double annual_costs = capital_costs + running_costs + voyage_costs;
  const double annual_cargo = cargo_DWT * RTPA;
  const double f1 = annual_costs / annual_cargo;
  const double f2 = light_ship_weight;
  const double f3 = -annual_cargo;  // maximized in the original formulation
  const double g1 = (L / B) - 6.0;
  const double g2 = -(L / D) + 15.0;
  const double g3 = -(L / T) + 19.0;
  const double g4 = 0.45 * pow(DWT, 0.31) - T;
  const double g5 = 0.7 * D + 0.7 - T;
  const double g6 = 500000.0 - DWT;
  const double g7 = DWT - 3000.0;
  const double g8 = 0.32 - Fn;
  const double KB = 0.53 * T;
  const double BMT = ((0.085 * CB - 0.002) * B * B) / (T * CB);
  const double KG = 1.0 + 0.52 * D;
  const double g9 = (KB + BMT - KG) - (0.07 * B);
  return {{f1, f2, f3}, {g1, g2, g3, g4, g5, g6, g7, g8, g9}};
}

// Water resource planning.
BaseEval water_planning(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double f1 = 106780.37 * (x2 + x3) + 61704.67;
  const double f2 = 3000.0 * x1;
  const double f3 = 305700.0 * 2289.0 * x2 / pow(0.06 * 2289.0, 0.65);
  const double f4 = 250.0 * 2289.0 * exp(-39.75 * x2 + 9.9 * x3 + 2.74);
  const double f5 = 25.0 * ((1.39 / (x1 * x2)) + (4940.0 * x3) - 80.0);
  const double g1 = 1.0 - ((0.00139 / (x1 * x2)) + (4.94 * x3) - 0.08);
  const double g2 = 1.0 - ((0.000306 / (x1 * x2)) + (1.082 * x3) - 0.0986);
  const double g3 = 50000.0 - ((12.307 / (x1 * x2)) + (49408.24 * x3) + 4051.02);
  const double g4 = 16000.0 - ((2.098 / (x1 * x2)) + (8046.33 * x3) - 696.71);
  const double g5 = 10000.0 - ((2.138 / (x1 * x2)) + (7883.39 * x3) - 705.04);
  const double g6 = 2000.0 - ((0.417 * x1 * x2) + (1721.26 * x3) - 136.54);
  const double g7 = 550.0 - ((0.164 / (x1 * x2)) + (631.13 * x3) - 54.48);
  return {{f1, f2, f3, f4, f5}, {g1, g2, g3, g4, g5, g6, g7}};
}

// Car cab design: nine objectives, seven free variables, four fixed.
BaseEval car_cab(const Vec& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5], x7 = x[6];
  const double x8 = 0.345;
  const double x9 = 0.192;
  const double x10 = 0.0;
  const double x11 = 0.0;
  std::vector<double> f(9);
  f[0] = 1.98 + (4.9 * x1) + (6.67 * x2) + (6.98 * x3) + (4.01 * x4) + (1.75 * x5) +
         (0.00001 * x6) + (2.73 * x7);
  f[1] = std::max(0.0, (1.16 - (0.3717 * x2 * x4) - (0.00931 * x2 * x10) -
                        (0.484 * x3 * x9) + (0.01343 * x6 * x10)) / 1.0);
  f[2] = std::max(0.0, (0.261 - (0.0159 * x1 * x2) - (0.188 * x1 * x8) - (0.019 * x2 * x7) +
                        (0.0144 * x3 * x5) + (0.87570001 * x5 * x10) + (0.08045 * x6 * x9) +
                        (0.00139 * x8 * x11) + (0.00001575 * x10 * x11)) / 0.32);
  f[3] = std::max(0.0, (0.214 + (0.00817 * x5) - (0.131 * x1 * x8) - (0.0704 * x1 * x9) +
                        (0.03099 * x2 * x6) - (0.018 * x2 * x7) + (0.0208 * x3 * x8) +
                        (0.121 * x3 * x9) - (0.00364 * x5 * x6) + (0.0007715 * x5 * x10) -
                        (0.0005354 * x6 * x10) + (0.00121 * x8 * x11) +
                        (0.00184 * x9 * x10) - (0.018 * x2 * x2)) / 0.32);
  f[4] = std::max(0.0, (0.74 - (0.61 * x2) - (0.163 * x3 * x8) + (0.001232 * x3 * x10) -
                        (0.166 * x7 * x9) + (0.227 * x2 * x2)) / 0.32);
  const double temp =
      ((28.98 + (3.818 * x3) - (4.2 * x1 * x2) + (0.0207 * x5 * x10) + (6.63 * x6 * x9) -
        (7.77 * x7 * x8) + (0.32 * x9 * x10)) +
       (33.86 + (2.95 * x3) + (0.1792 * x10) - (5.057 * x1 * x2) - (11.0 * x2 * x8) -
        (0.0215 * x5 * x10) - (9.98 * x7 * x8) + (22.0 * x8 * x9)) +
       (46.36 - (9.9 * x2) - (12.9 * x1 * x8) + (0.1107 * x3 * x10))) / 3.0;
  f[5] = std::max(0.0, temp / 32.0);
  f[6] = std::max(0.0, (4.72 - (0.5 * x4) - (0.19 * x2 * x3) - (0.0122 * x4 * x10) +
                        (0.009325 * x6 * x10) + (0.000191 * x11 * x11)) / 4.0);
  f[7] = std::max(0.0, (10.58 - (0.674 * x1 * x2) - (1.95 * x2 * x8) + (0.02054 * x3 * x10) -
                        (0.0198 * x4 * x10) + (0.028 * x6 * x10)) / 9.9);
  f[8] = std::max(0.0, (16.45 - (0.489 * x3 * x7) - (0.843 * x5 * x6) + (0.0432 * x9 * x10) -
                        (0.0556 * x9 * x11) - (0.000786 * x11 * x11)) / 15.7);
  return {f, {}};
}

// ---------------------------------------------------------------------------
// Registry assembly
// ---------------------------------------------------------------------------

const std::vector<double>& concrete_beam_x1_set() {
  static const std::vector<double> v = {
      0.20, 0.31, 0.40, 0.44, 0.60, 0.62, 0.79, 0.80, 0.88, 0.93,
      1.0,  1.20, 1.24, 1.32, 1.40, 1.55, 1.58, 1.60, 1.76, 1.80,
      1.86, 2.0,  2.17, 2.20, 2.37, 2.40, 2.48, 2.60, 2.64, 2.79,
      2.80, 3.0,  3.08, 3.10, 3.16, 3.41, 3.52, 3.60, 3.72, 3.95,
      3.96, 4.0,  4.03, 4.20, 4.34, 4.40, 4.65, 4.74, 4.80, 4.84,
      5.0,  5.28, 5.40, 5.53, 5.72, 6.0,  6.16, 6.32, 6.60, 7.11,
      7.20, 7.80, 7.90, 8.0,  8.40, 8.69, 9.0,  9.48, 10.27, 11.0,
      11.06, 11.85, 12.0, 13.0, 14.0, 15.0};
  return v;
}

const std::vector<double>& coil_spring_wire_set() {
  static const std::vector<double> v = {
      0.009, 0.0095, 0.0104, 0.0118, 0.0128, 0.0132, 0.014,  0.015,
      0.0162, 0.0173, 0.018, 0.02,   0.023,  0.025,  0.028,  0.032,
      0.035, 0.041,  0.047,  0.054,  0.063,  0.072,  0.08,   0.092,
      0.105, 0.12,   0.135,  0.148,  0.162,  0.177,  0.192,  0.207,
      0.225, 0.244,  0.263,  0.283,  0.307,  0.331,  0.362,  0.394,
      0.4375, 0.5};
  return v;
}

using BaseFn = BaseEval (*)(const Vec&);

enum class Mode { plain, fold, constrained };

struct Entry {
  ProblemDescriptor desc;
  BaseFn base = nullptr;
  Mode mode = Mode::plain;
  int keep = 0;  // base objectives kept when folding or slicing
};

std::vector<VariableSpec> vars_re21() {
  const double s2 = std::sqrt(2.0);
  return {VariableSpec::cont(1.0, 3.0), VariableSpec::cont(s2, 3.0),
          VariableSpec::cont(s2, 3.0), VariableSpec::cont(1.0, 3.0)};
}

std::vector<VariableSpec> vars_re22() {
  return {VariableSpec::discrete(concrete_beam_x1_set()),
          VariableSpec::cont(0.0, 20.0), VariableSpec::cont(0.0, 40.0)};
}

std::vector<VariableSpec> vars_re23() {
  return {VariableSpec::integer(1, 100), VariableSpec::integer(1, 100),
          VariableSpec::cont(10.0, 200.0), VariableSpec::cont(10.0, 240.0)};
}

std::vector<VariableSpec> vars_re24() {
  return {VariableSpec::cont(0.5, 4.0), VariableSpec::cont(4.0, 50.0)};
}

std::vector<VariableSpec> vars_re25() {
  return {VariableSpec::integer(1, 70), VariableSpec::cont(0.6, 30.0),
          VariableSpec::discrete(coil_spring_wire_set())};
}

std::vector<VariableSpec> vars_re31() {
  return {VariableSpec::cont(0.00001, 100.0), VariableSpec::cont(0.00001, 100.0),
          VariableSpec::cont(1.0, 3.0)};
}

std::vector<VariableSpec> vars_re32() {
  return {VariableSpec::cont(0.125, 5.0), VariableSpec::cont(0.1, 10.0),
          VariableSpec::cont(0.1, 10.0), VariableSpec::cont(0.125, 5.0)};
}

std::vector<VariableSpec> vars_re33() {
  return {VariableSpec::cont(55.0, 80.0), VariableSpec::cont(75.0, 110.0),
          VariableSpec::cont(1000.0, 3000.0), VariableSpec::cont(11.0, 20.0)};
}

std::vector<VariableSpec> vars_re34() {
  return std::vector<VariableSpec>(5, VariableSpec::cont(1.0, 3.0));
}

std::vector<VariableSpec> vars_re35() {
  return {VariableSpec::cont(2.6, 3.6), VariableSpec::cont(0.7, 0.8),
          VariableSpec::integer(17, 28), VariableSpec::cont(7.3, 8.3),
          VariableSpec::cont(7.3, 8.3), VariableSpec::cont(2.9, 3.9),
          VariableSpec::cont(5.0, 5.5)};
}

std::vector<VariableSpec> vars_re36() {
  return std::vector<VariableSpec>(4, VariableSpec::integer(12, 60));
}

std::vector<VariableSpec> vars_re37() {
  return std::vector<VariableSpec>(4, VariableSpec::cont(0.0, 1.0));
}

std::vector<VariableSpec> vars_re41() {
  return {VariableSpec::cont(0.5, 1.5), VariableSpec::cont(0.45, 1.35),
          VariableSpec::cont(0.5, 1.5), VariableSpec::cont(0.5, 1.5),
          VariableSpec::cont(0.875, 2.625), VariableSpec::cont(0.4, 1.2),
          VariableSpec::cont(0.4, 1.2)};
}

std::vector<VariableSpec> vars_re42() {
  return {VariableSpec::cont(150.0, 274.32), VariableSpec::cont(20.0, 32.31),
          VariableSpec::cont(13.0, 25.0), VariableSpec::cont(10.0, 11.71),
          VariableSpec::cont(14.0, 18.0), VariableSpec::cont(0.63, 0.75)};
}

std::vector<VariableSpec> vars_re61() {
  return {VariableSpec::cont(0.01, 0.45), VariableSpec::cont(0.01, 0.10),
          VariableSpec::cont(0.01, 0.10)};
}

Entry make_entry(std::string id, int m, std::vector<VariableSpec> vars, int n_constraints,
                 FrontShape shape, BaseFn base, Mode mode, int keep) {
  Entry e;
  e.desc.id = std::move(id);
  e.desc.m_objectives = m;
  e.desc.n_variables = static_cast<int>(vars.size());
  e.desc.variables = std::move(vars);
  e.desc.n_constraints = n_constraints;
  e.desc.front_shape = shape;
  e.base = base;
  e.mode = mode;
  e.keep = keep;
  return e;
}

}  // namespace

struct ProblemRegistry::Impl {
  std::vector<std::string> order;
  std::map<std::string, Entry> table;

  Impl() {
    auto add = [&](Entry e) {
      order.push_back(e.desc.id);
      table.emplace(e.desc.id, std::move(e));
    };
    using FS = FrontShape;
    add(make_entry("RE2-4-1", 2, vars_re21(), 0, FS::convex, four_bar_truss, Mode::plain, 2));
    add(make_entry("RE2-3-2", 2, vars_re22(), 0, FS::mixed, concrete_beam, Mode::fold, 1));
    add(make_entry("RE2-4-3", 2, vars_re23(), 0, FS::mixed_disconnected, pressure_vessel,
                   Mode::fold, 1));
    add(make_entry("RE2-2-4", 2, vars_re24(), 0, FS::convex, hatch_cover, Mode::fold, 1));
    add(make_entry("RE2-3-5", 2, vars_re25(), 0, FS::mixed_disconnected, coil_spring,
                   Mode::fold, 1));
    add(make_entry("RE3-3-1", 3, vars_re31(), 0, FS::unknown, two_bar_truss, Mode::fold, 2));
    add(make_entry("RE3-4-2", 3, vars_re32(), 0, FS::unknown, welded_beam, Mode::fold, 2));
    add(make_entry("RE3-4-3", 3, vars_re33(), 0, FS::unknown, disc_brake, Mode::fold, 2));
    add(make_entry("RE3-5-4", 3, vars_re34(), 0, FS::unknown, crashworthiness, Mode::plain, 3));
    add(make_entry("RE3-7-5", 3, vars_re35(), 0, FS::unknown, speed_reducer, Mode::fold, 2));
    add(make_entry("RE3-4-6", 3, vars_re36(), 0, FS::concave_disconnected, gear_train,
                   Mode::fold, 2));
    add(make_entry("RE3-4-7", 3, vars_re37(), 0, FS::unknown, rocket_injector, Mode::plain, 3));
    add(make_entry("RE4-7-1", 4, vars_re41(), 0, FS::unknown, car_side_impact, Mode::fold, 3));
    add(make_entry("RE4-6-2", 4, vars_re42(), 0, FS::unknown, marine_design, Mode::fold, 3));
    add(make_entry("RE6-3-1", 6, vars_re61(), 0, FS::unknown, water_planning, Mode::fold, 5));
    add(make_entry("RE9-7-1", 9, vars_re41(), 0, FS::unknown, car_cab, Mode::plain, 9));
    add(make_entry("CRE2-3-1", 2, vars_re31(), 3, FS::unknown, two_bar_truss,
                   Mode::constrained, 2));
    add(make_entry("CRE2-4-2", 2, vars_re32(), 4, FS::unknown, welded_beam,
                   Mode::constrained, 2));
    add(make_entry("CRE2-4-3", 2, vars_re33(), 4, FS::unknown, disc_brake,
                   Mode::constrained, 2));
    add(make_entry("CRE2-7-4", 2, vars_re35(), 11, FS::unknown, speed_reducer,
                   Mode::constrained, 2));
    add(make_entry("CRE2-4-5", 2, vars_re36(), 1, FS::unknown, gear_train,
                   Mode::constrained, 2));
    add(make_entry("CRE3-7-1", 3, vars_re41(), 10, FS::unknown, car_side_impact,
                   Mode::constrained, 3));
    add(make_entry("CRE3-6-2", 3, vars_re42(), 9, FS::unknown, marine_design,
                   Mode::constrained, 3));
    add(make_entry("CRE5-3-1", 5, vars_re61(), 7, FS::unknown, water_planning,
                   Mode::constrained, 5));
  }
};

namespace {

const ProblemRegistry::Impl& impl_instance() {
  static const ProblemRegistry::Impl impl;
  return impl;
}

const Entry& entry_for(const ProblemRegistry::Impl& impl, const std::string& id) {
  auto it = impl.table.find(id);
  if (it == impl.table.end()) throw std::out_of_range("unknown problem id: " + id);
  return it->second;
}

void check_input(const Entry& e, const Vec& x) {
  if (x.size() != e.desc.n_variables)
    throw std::domain_error(e.desc.id + ": expected " +
                            std::to_string(e.desc.n_variables) + " variables, got " +
                            std::to_string(x.size()));
  if (!solution_valid(x, e.desc.variables))
    throw std::domain_error(e.desc.id + ": decision vector out of bounds or off grid");
}

const char* shape_name(FrontShape s) {
  switch (s) {
    case FrontShape::convex: return "convex";
    case FrontShape::mixed: return "mixed";
    case FrontShape::mixed_disconnected: return "mixed_disconnected";
    case FrontShape::concave_disconnected: return "concave_disconnected";
    case FrontShape::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

ProblemRegistry::ProblemRegistry() : impl_(&impl_instance()) {}

const std::vector<std::string>& ProblemRegistry::ids() const { return impl_->order; }

bool ProblemRegistry::contains(const std::string& id) const {
  return impl_->table.count(id) != 0;
}

const ProblemDescriptor& ProblemRegistry::descriptor(const std::string& id) const {
  return entry_for(*impl_, id).desc;
}

Vec ProblemRegistry::evaluate(const std::string& id, const Vec& x) const {
  const Entry& e = entry_for(*impl_, id);
  check_input(e, x);
  const BaseEval be = e.base(x);
  const int m = e.desc.m_objectives;
  Vec f(m);
  if (e.mode == Mode::plain || e.mode == Mode::constrained) {
    for (int i = 0; i < m; ++i) f[i] = be.f[static_cast<std::size_t>(i)];
  } else {
    double total = 0.0;
    for (double g : be.g) total += viol(g);
    for (int i = 0; i < e.keep; ++i) f[i] = be.f[static_cast<std::size_t>(i)];
    f[m - 1] = total;
  }
  return f;
}

std::pair<Vec, Vec> ProblemRegistry::evaluate_constrained(const std::string& id,
                                                          const Vec& x) const {
  const Entry& e = entry_for(*impl_, id);
  if (e.mode != Mode::constrained)
    throw std::invalid_argument(id + " is not a constrained problem");
  check_input(e, x);
  const BaseEval be = e.base(x);
  Vec f(e.desc.m_objectives);
  for (int i = 0; i < e.desc.m_objectives; ++i) f[i] = be.f[static_cast<std::size_t>(i)];
  Vec v(e.desc.n_constraints);
  for (int i = 0; i < e.desc.n_constraints; ++i) v[i] = viol(be.g[static_cast<std::size_t>(i)]);
  return {std::move(f), std::move(v)};
}

std::string ProblemRegistry::catalog_json() const {
  nlohmann::ordered_json cat = nlohmann::ordered_json::array();
  for (const auto& id : impl_->order) {
    const Entry& e = impl_->table.at(id);
    nlohmann::ordered_json row;
    row["id"] = e.desc.id;
    row["m_objectives"] = e.desc.m_objectives;
    row["n_variables"] = e.desc.n_variables;
    row["n_constraints"] = e.desc.n_constraints;
    row["front_shape"] = shape_name(e.desc.front_shape);
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (const auto& s : e.desc.variables) {
      nlohmann::ordered_json v;
      if (s.kind == VarKind::continuous) {
        v["kind"] = "continuous";
        v["lo"] = s.lo;
        v["hi"] = s.hi;
      } else if (s.kind == VarKind::integer) {
        v["kind"] = "integer";
        v["lo"] = s.lo;
        v["hi"] = s.hi;
      } else {
        v["kind"] = "discrete";
        v["values"] = s.values;
      }
      vars.push_back(std::move(v));
    }
    row["variables"] = std::move(vars);
    cat.push_back(std::move(row));
  }
  return cat.dump(2);
}

const ProblemRegistry& registry() {
  static const ProblemRegistry reg;
  return reg;
}

double aggregate_violation(const Vec& g) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < g.size(); ++i) total += viol(g[i]);
  return total;
}

Vec repair(const Vec& x, const std::vector<VariableSpec>& specs) {
  if (static_cast<std::size_t>(x.size()) != specs.size())
    throw std::invalid_argument("repair: length mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const VariableSpec& s = specs[i];
    double v = x[static_cast<Eigen::Index>(i)];
    switch (s.kind) {
      case VarKind::continuous:
        out[static_cast<Eigen::Index>(i)] = std::min(std::max(v, s.lo), s.hi);
        break;
      case VarKind::integer: {
        v = std::min(std::max(v, s.lo), s.hi);
        out[static_cast<Eigen::Index>(i)] = std::ceil(v - 0.5);  // ties toward lower
        break;
      }
      case VarKind::discrete: {
        const auto& vs = s.values;
        auto it = std::lower_bound(vs.begin(), vs.end(), v);
        double best;
        if (it == vs.begin()) {
          best = vs.front();
        } else if (it == vs.end()) {
          best = vs.back();
        } else {
          const double hi = *it, lo = *(it - 1);
          best = (v - lo) <= (hi - v) ? lo : hi;
        }
        out[static_cast<Eigen::Index>(i)] = best;
        break;
      }
    }
  }
  return out;
}

Vec random_solution(const std::vector<VariableSpec>& specs, Rng& rng) {
  Vec x(static_cast<Eigen::Index>(specs.size()));
  for (std::size_t i = 0; i < specs.size(); ++i)
    x[static_cast<Eigen::Index>(i)] = uniform_real(rng, specs[i].lower(), specs[i].upper());
  return repair(x, specs);
}

}  // namespace rebench
