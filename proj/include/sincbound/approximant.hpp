#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sincbound/theory.hpp"
#include "sincbound/transforms.hpp"

namespace sincbound {

enum class IntervalTag { whole_line, half_line };

// A built transformed approximant
//
//   f(t) ~= sum_{k=-M}^{N} f(psi(kh)) S(k,h)(psi^{-1}(t)),
//
// immutable after build.
struct Approximant {
    Transform kind;
    SincParams params;
    std::vector<double> node_values;  // f(psi(k h)), k = -M..N
    std::vector<double> node_images;  // psi(k h), ascending
    IntervalTag interval;
};

// Samples f at the transformed nodes.  f must return a finite value at
// every node; the offending k is reported otherwise.
Approximant build(const std::function<double(double)>& f, Transform kind,
                  const SincParams& params);

// Cardinal sum at x = psi^{-1}(t).  When t is exactly the image of a node,
// the stored sample is returned as-is.
double evaluate(const Approximant& a, double t);

// max over the grid of |f(t) - evaluate(a, t)|.
double max_error_on_grid(const Approximant& a, const std::function<double(double)>& f,
                         std::span<const double> grid);

}  // namespace sincbound
