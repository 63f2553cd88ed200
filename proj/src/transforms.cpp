#include "sincbound/transforms.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sincbound {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double half_pi = pi / 2.0;
constexpr double dbl_max = std::numeric_limits<double>::max();
constexpr double dbl_min = std::numeric_limits<double>::min();

// scale * sinh(x) without intermediate overflow; scale in (0, pi].
double de_inner(double scale, double x)
{
    if (x > 691.0) return 1e300;
    if (x < -691.0) return -1e300;
    return scale * std::sinh(x);
}

double sinh_sat(double w)
{
    if (w > 710.0) return dbl_max;
    if (w < -710.0) return -dbl_max;
    return std::sinh(w);
}

double exp_sat(double w)
{
    if (w > 709.0) return dbl_max;
    if (w < -745.0) return dbl_min;
    return std::exp(w);
}

// log(1 + e^w); positive for every finite w.
double softplus(double w)
{
    if (w > 0.0) return w + std::log1p(std::exp(-w));
    if (w < -745.0) return dbl_min;
    return std::log1p(std::exp(w));
}

// log(e^t - 1) for t > 0.
double log_expm1(double t)
{
    return t > 0.5 ? t + std::log1p(-std::exp(-t)) : std::log(std::expm1(t));
}

}  // namespace

const char* name(Transform kind)
{
    switch (kind) {
        case Transform::se1: return "se1";
        case Transform::se2: return "se2";
        case Transform::se3: return "se3";
        case Transform::de1: return "de1";
        case Transform::de2: return "de2";
        case Transform::de3_old: return "de3_old";
        case Transform::de3_ddagger: return "de3_ddagger";
    }
    return "?";
}

bool is_half_line(Transform kind)
{
    return kind != Transform::se1 && kind != Transform::de1;
}

double forward(Transform kind, double x)
{
    if (!std::isfinite(x)) throw std::domain_error("forward: x must be finite");
    switch (kind) {
        case Transform::se1:
            return sinh_sat(x);
        case Transform::se2:
            return exp_sat(x);
        case Transform::se3:
            // arcsinh(e^x) = x + log 2 once e^x leaves the double range
            if (x > 700.0) return x + std::numbers::ln2;
            if (x < -745.0) return dbl_min;
            return std::asinh(std::exp(x));
        case Transform::de1:
            return sinh_sat(de_inner(half_pi, x));
        case Transform::de2:
            return exp_sat(de_inner(half_pi, x));
        case Transform::de3_old:
            return softplus(de_inner(half_pi, x));
        case Transform::de3_ddagger:
            return softplus(de_inner(pi, x));
    }
    throw std::domain_error("forward: unknown transform");
}

double inverse(Transform kind, double t)
{
    if (!std::isfinite(t)) throw std::domain_error("inverse: t must be finite");
    if (is_half_line(kind) && !(t > 0.0))
        throw std::domain_error("inverse: t must lie in (0, inf) for half-line transforms");
    switch (kind) {
        case Transform::se1:
            return std::asinh(t);
        case Transform::se2:
            return std::log(t);
        case Transform::se3:
            // log(sinh t); sinh overflows past t ~ 710
            return t >= 1.0 ? t + std::log1p(-std::exp(-2.0 * t)) - std::numbers::ln2
                            : std::log(std::sinh(t));
        case Transform::de1:
            return std::asinh((2.0 / pi) * std::asinh(t));
        case Transform::de2:
            return std::asinh((2.0 / pi) * std::log(t));
        case Transform::de3_old:
            return std::asinh((2.0 / pi) * log_expm1(t));
        case Transform::de3_ddagger:
            return std::asinh((1.0 / pi) * log_expm1(t));
    }
    throw std::domain_error("inverse: unknown transform");
}

}  // namespace sincbound
