#include "sincbound/approximant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sincbound/sinc.hpp"

namespace sincbound {

Approximant build(const std::function<double(double)>& f, Transform kind,
                  const SincParams& params)
{
    if (!(params.h > 0.0) || !std::isfinite(params.h))
        throw std::invalid_argument("build: params.h must be positive and finite");
    if (params.M < 1 || params.N < 1)
        throw std::invalid_argument("build: params.M and params.N must be >= 1");

    const int count = params.M + params.N + 1;
    std::vector<double> values, images;
    values.reserve(count);
    images.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int k = i - params.M;
        const double t = forward(kind, k * params.h);
        const double v = f(t);
        if (!std::isfinite(v))
            throw std::runtime_error("build: f returned a non-finite value at node k=" +
                                     std::to_string(k) + " (t=" + std::to_string(t) + ")");
        images.push_back(t);
        values.push_back(v);
    }
    return Approximant{kind, params, std::move(values), std::move(images),
                       is_half_line(kind) ? IntervalTag::half_line : IntervalTag::whole_line};
}

double evaluate(const Approximant& a, double t)
{
    if (!std::isfinite(t)) throw std::domain_error("evaluate: t must be finite");
    if (a.interval == IntervalTag::half_line && !(t > 0.0))
        throw std::domain_error("evaluate: t must lie in (0, inf)");

    // node-image hit: interpolation reproduces the sample bit for bit
    const auto it = std::lower_bound(a.node_images.begin(), a.node_images.end(), t);
    if (it != a.node_images.end() && *it == t)
        return a.node_values[static_cast<std::size_t>(it - a.node_images.begin())];

    const double x = inverse(a.kind, t);
    return cardinal_sum(a.params.h, -a.params.M, a.node_values, x);
}

double max_error_on_grid(const Approximant& a, const std::function<double(double)>& f,
                         std::span<const double> grid)
{
    if (grid.empty()) throw std::domain_error("max_error_on_grid: grid must not be empty");
    double worst = 0.0;
    for (double t : grid) worst = std::max(worst, std::fabs(f(t) - evaluate(a, t)));
    return worst;
}

}  // namespace sincbound
