#pragma once

#include <span>
#include <vector>

namespace sincbound {

// Shifted, scaled cardinal function
//
//   S(k,h)(x) = sin(pi (x/h - k)) / (pi (x/h - k)),
//
// equal to 1 at x = kh and 0 at the other integer multiples of h.
double sinc_basis(int k, double h, double x);

// Samples F(kh) for k = lo..hi of a function on the transformed axis.
struct CardinalSum {
    double h;
    int lo;
    int hi;
    std::vector<double> values;  // values[i] = F((lo + i) h)

    CardinalSum(double h, int lo, int hi, std::vector<double> values);
};

// sum_{k=lo}^{hi} values[k-lo] S(k,h)(x), compensated accumulation.
// An exact node hit (x/h integral and in range) returns the sample itself.
double cardinal_sum(double h, int lo, std::span<const double> values, double x);
double cardinal_sum(const CardinalSum& cs, double x);

}  // namespace sincbound
