#pragma once

#include <vector>

namespace sincbound::verify {

// sqrt(x^2 + pi^2) >= (1 + e^-x) log(1 + e^x), all real x.
bool check_sqrt_vs_softplus(double x);

// arcsinh(e^x)/(1 + arcsinh(e^x)) <= e^x/(1 + e^x)  and
// 1/(e^x + sqrt(1 + e^(2x))) <= 1/(1 + e^x), |x| <= 700.
bool check_asinh_ratio_bounds(double x);

// |log(1 + e^(pi sinh(x+iy)))|
//   <= pi cosh x / ((1 + e^(-pi sinh(x) cos y)) cos((pi/2) sin y) cos y),
// |y| < pi/2, |x| <= 5.
bool check_softplus_strip_bound(double x, double y);

// |1/(1 + e^(+/- pi sinh(x+iy)))|
//   <= 1 / ((1 + e^(+/- pi sinh(x) cos y)) cos((pi/2) sin y)),
// both signs, |y| < pi/2, |x| <= 5.
bool check_de_kernel_bounds(double x, double y);

struct InequalityReport {
    const char* name;
    long passed;
    long total;
};

// Runs every check on `random_samples` admissible random inputs plus the
// deterministic edge sets.  Deterministic for a fixed seed.
std::vector<InequalityReport> run_suite(long random_samples, unsigned long long seed = 11u);

}  // namespace sincbound::verify
