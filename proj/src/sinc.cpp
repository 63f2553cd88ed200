#include "sincbound/sinc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sincbound {

double sinc_basis(int k, double h, double x)
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::domain_error("sinc_basis: mesh size h must be positive and finite");
    if (!std::isfinite(x))
        throw std::domain_error("sinc_basis: x must be finite");

    const double u = x / h - static_cast<double>(k);
    if (!std::isfinite(u)) return 0.0;

    // Reduce against the nearest integer: with u = m + r, |r| <= 1/2,
    // sin(pi u) = (-1)^m sin(pi r).  Keeps the zeros at integer u exact
    // and the value accurate next to them.
    const double m = std::nearbyint(u);
    const double r = u - m;
    if (r == 0.0) return m == 0.0 ? 1.0 : 0.0;
    if (m == 0.0 && std::fabs(u) < 1e-9) {
        const double pu = std::numbers::pi * u;
        return 1.0 - pu * pu / 6.0;  // 2-term Taylor; exact to double in this regime
    }
    const double s = std::sin(std::numbers::pi * r) / (std::numbers::pi * u);
    return (static_cast<long long>(m) & 1) ? -s : s;
}

CardinalSum::CardinalSum(double h_, int lo_, int hi_, std::vector<double> values_)
    : h(h_), lo(lo_), hi(hi_), values(std::move(values_))
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("CardinalSum: h must be positive and finite");
    if (lo > hi)
        throw std::invalid_argument("CardinalSum: lo must not exceed hi");
    if (values.size() != static_cast<std::size_t>(hi) - static_cast<std::size_t>(lo) + 1)
        throw std::invalid_argument("CardinalSum: values length must be hi - lo + 1");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("CardinalSum: all values must be finite");
}

double cardinal_sum(double h, int lo, std::span<const double> values, double x)
{
    if (!std::isfinite(x)) throw std::domain_error("cardinal_sum: x must be finite");

    const int hi = lo + static_cast<int>(values.size()) - 1;
    const double w = x / h;
    const double m = std::nearbyint(w);
    if (w == m && m >= lo && m <= hi) {
        // Exact node hit: every other basis term is exactly zero.
        return values[static_cast<std::size_t>(static_cast<int>(m) - lo)];
    }

    // Kahan accumulation; the sweeps compare errors near 1e-15.
    double sum = 0.0, c = 0.0;
    for (int k = lo; k <= hi; ++k) {
        const double term = values[static_cast<std::size_t>(k - lo)] * sinc_basis(k, h, x);
        const double y = term - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double cardinal_sum(const CardinalSum& cs, double x)
{
    return cardinal_sum(cs.h, cs.lo, cs.values, x);
}

}  // namespace sincbound
