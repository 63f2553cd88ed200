#include "sincbound/theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sincbound {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double e_const = std::numbers::e;
constexpr long double pi_l = std::numbers::pi_v<long double>;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string("FunctionClass: ") + what +
                                    " must be positive and finite");
}

bool is_se(CaseTag t)
{
    return t == CaseTag::se_case1 || t == CaseTag::se_case2 || t == CaseTag::se_case3;
}

void require_n(int n)
{
    if (n < 1) throw std::domain_error("n must be a positive integer");
}

// log(e^a + e^b), for the log-space fallback of the constants
double logaddexp(double a, double b)
{
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

}  // namespace

FunctionClass::FunctionClass(CaseTag case_tag_, double K_, double alpha_, double beta_, double d_)
    : case_tag(case_tag_), K(K_), alpha(alpha_), beta(beta_), d(d_)
{
    require_positive(K, "K");
    require_positive(alpha, "alpha");
    require_positive(beta, "beta");
    require_positive(d, "d");
    if (case_tag == CaseTag::de_case3) {
        if (alpha != beta)
            throw std::invalid_argument(
                "FunctionClass: the third DE case requires alpha == beta "
                "(use rescale_case3 to reduce an unequal certificate)");
        if (alpha > 1.0)
            throw std::invalid_argument("FunctionClass: the third DE case requires mu <= 1");
    }
}

ErrorBound::ErrorBound(double constant_, RateTag rate_, double d_, double mu_)
    : constant(constant_), rate(rate_), d(d_), mu(mu_)
{
    if (!(constant > 0.0) || !std::isfinite(constant))
        throw std::invalid_argument("ErrorBound: constant must be positive and finite");
    if (!(d > 0.0) || !std::isfinite(d) || !(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("ErrorBound: d and mu must be positive and finite");
}

SincParams select_params_se(const FunctionClass& cls, int n)
{
    if (!is_se(cls.case_tag))
        throw std::domain_error("select_params_se: not an SE certificate");
    require_n(n);

    const long double hl =
        sqrtl(pi_l * static_cast<long double>(cls.d) /
              (static_cast<long double>(cls.mu()) * static_cast<long double>(n)));
    const double h = static_cast<double>(hl);

    int M, N;
    if (cls.alpha <= cls.beta) {
        // mu == alpha (the canonical branch when alpha == beta)
        M = n;
        N = static_cast<int>(ceill(static_cast<long double>(cls.alpha) * n /
                                   static_cast<long double>(cls.beta)));
        // pin the ceiling: smallest N with beta N >= alpha n
        while (N > 1 && static_cast<long double>(cls.beta) * (N - 1) >=
                            static_cast<long double>(cls.alpha) * n)
            --N;
        while (static_cast<long double>(cls.beta) * N < static_cast<long double>(cls.alpha) * n)
            ++N;
    } else {
        N = n;
        M = static_cast<int>(ceill(static_cast<long double>(cls.beta) * n /
                                   static_cast<long double>(cls.alpha)));
        while (M > 1 && static_cast<long double>(cls.alpha) * (M - 1) >=
                            static_cast<long double>(cls.beta) * n)
            --M;
        while (static_cast<long double>(cls.alpha) * M < static_cast<long double>(cls.beta) * n)
            ++M;
    }
    return SincParams{h, M, N, n};
}

SincParams select_params_de(const FunctionClass& cls, int n)
{
    if (cls.case_tag != CaseTag::de_case1 && cls.case_tag != CaseTag::de_case2)
        throw std::domain_error("select_params_de: not a first/second-case DE certificate");
    require_n(n);

    const double threshold = cls.nu() * e_const / (4.0 * cls.d);
    if (static_cast<double>(n) < threshold)
        throw std::domain_error(
            "select_params_de: n=" + std::to_string(n) +
            " is below the admissible threshold nu*e/(4d); smallest admissible n is " +
            std::to_string(static_cast<long long>(std::ceil(threshold))));

    const long double hl = logl(4.0L * cls.d * n / cls.mu()) / n;
    const double h = static_cast<double>(hl);

    int M, N;
    if (cls.alpha <= cls.beta) {
        M = n;
        const long double q =
            logl(static_cast<long double>(cls.beta) / static_cast<long double>(cls.alpha)) / hl;
        N = n - static_cast<int>(floorl(q));
    } else {
        N = n;
        const long double q =
            logl(static_cast<long double>(cls.alpha) / static_cast<long double>(cls.beta)) / hl;
        M = n - static_cast<int>(floorl(q));
    }
    return SincParams{h, M, N, n};
}

SincParams select_params_de3(const FunctionClass& cls, int n)
{
    if (cls.case_tag != CaseTag::de_case3)
        throw std::domain_error("select_params_de3: not a third-case DE certificate");
    require_n(n);

    const double mu = cls.mu();
    const double threshold = mu * e_const / (2.0 * cls.d);
    if (static_cast<double>(n) < threshold)
        throw std::domain_error(
            "select_params_de3: n=" + std::to_string(n) +
            " is below the admissible threshold mu*e/(2d); smallest admissible n is " +
            std::to_string(static_cast<long long>(std::ceil(threshold))));

    const long double hl = logl(2.0L * cls.d * n / mu) / n;
    return SincParams{static_cast<double>(hl), n, n, n};
}

ErrorBound constant_se(const FunctionClass& cls)
{
    const double K = cls.K, a = cls.alpha, b = cls.beta, d = cls.d;
    const double mu = cls.mu(), nu = cls.nu();
    const double s = std::sqrt(pi * d * mu);
    const double decay = 1.0 - std::exp(-2.0 * s);

    double C;
    switch (cls.case_tag) {
        case CaseTag::se_case1: {
            const double cd = std::cos(d);
            if (!(cd > 0.0))
                throw std::domain_error("constant_se: case 1 requires d < pi/2 (cos d > 0)");
            C = (std::pow(2.0, nu + 1.0) * K / s) *
                (2.0 / (s * decay * std::pow(cd, nu)) + 1.0);
            if (!std::isfinite(C))
                C = std::exp((nu + 1.0) * std::numbers::ln2 + std::log(K) - std::log(s) +
                             logaddexp(std::numbers::ln2 - std::log(s) - std::log(decay) -
                                           nu * std::log(cd),
                                       0.0));
            break;
        }
        case CaseTag::se_case2: {
            const double cd = std::cos(d);
            if (!(cd > 0.0))
                throw std::domain_error("constant_se: case 2 requires d < pi/2 (cos d > 0)");
            C = (2.0 * K / s) *
                (2.0 / (s * decay * std::pow(cd, (a + b) / 2.0)) + 1.0);
            break;
        }
        case CaseTag::se_case3: {
            const double cd2 = std::cos(d / 2.0);
            if (!(cd2 > 0.0))
                throw std::domain_error("constant_se: case 3 requires d < pi (cos(d/2) > 0)");
            C = (2.0 * K / s) *
                (std::pow(2.0, 1.0 + (a + b) / 2.0) / (s * decay * std::pow(cd2, a + b)) + 1.0);
            break;
        }
        default:
            throw std::domain_error("constant_se: not an SE certificate");
    }
    return ErrorBound(C, RateTag::se_rate, d, mu);
}

ErrorBound constant_de(const FunctionClass& cls)
{
    const double K = cls.K, a = cls.alpha, b = cls.beta, d = cls.d;
    const double mu = cls.mu(), nu = cls.nu();
    if (!(d < pi / 2.0))
        throw std::domain_error("constant_de: requires d < pi/2");
    const double cps = std::cos(pi / 2.0 * std::sin(d));
    const double cd = std::cos(d);
    if (!(cps > 0.0) || !(cd > 0.0))
        throw std::domain_error("constant_de: requires d < pi/2");

    double C;
    switch (cls.case_tag) {
        case CaseTag::de_case1: {
            const double decay = 1.0 - std::exp(-pi * mu * e_const / 2.0);
            C = (std::pow(2.0, nu + 1.0) * K / (pi * d * mu)) *
                (4.0 / (pi * decay * std::pow(cps, nu) * cd) + mu * std::exp(pi * nu / 4.0));
            if (!std::isfinite(C))
                C = std::exp((nu + 1.0) * std::numbers::ln2 + std::log(K) - std::log(pi * d * mu) +
                             logaddexp(std::log(4.0) - std::log(pi * decay) - nu * std::log(cps) -
                                           std::log(cd),
                                       std::log(mu) + pi * nu / 4.0));
            break;
        }
        case CaseTag::de_case2: {
            const double decay = 1.0 - std::exp(-pi * mu * e_const / 2.0);
            C = (2.0 * K / (pi * d * mu)) *
                (4.0 / (pi * decay * std::pow(cps, (a + b) / 2.0) * cd) +
                 mu * std::exp(pi * nu / 4.0));
            break;
        }
        case CaseTag::de_case3: {
            const double decay = 1.0 - std::exp(-pi * mu * e_const);
            C = (K / (std::pow(pi, 1.0 - mu) * d * mu)) *
                (4.0 / (pi * decay * std::pow(cps, 2.0 * mu) * std::pow(cd, mu + 1.0)) +
                 mu * std::pow(2.0, 1.0 - mu) * std::exp(mu * (pi + 2.0) / 2.0));
            break;
        }
        default:
            throw std::domain_error("constant_de: not a DE certificate");
    }
    return ErrorBound(C, cls.case_tag == CaseTag::de_case3 ? RateTag::de3_rate : RateTag::de_rate,
                      d, mu);
}

double bound_value(const ErrorBound& b, int n)
{
    require_n(n);
    switch (b.rate) {
        case RateTag::se_rate:
            return b.constant * std::sqrt(static_cast<double>(n)) *
                   std::exp(-std::sqrt(pi * b.d * b.mu * n));
        case RateTag::de_rate: {
            const double arg = 4.0 * b.d * n / b.mu;
            if (!(arg > 1.0))
                throw std::domain_error("bound_value: requires 4 d n / mu > 1");
            return b.constant * std::exp(-pi * b.d * n / std::log(arg));
        }
        case RateTag::de3_rate: {
            const double arg = 2.0 * b.d * n / b.mu;
            if (!(arg > 1.0))
                throw std::domain_error("bound_value: requires 2 d n / mu > 1");
            return b.constant * std::exp(-pi * b.d * n / std::log(arg));
        }
    }
    throw std::domain_error("bound_value: unknown rate");
}

double envelope(CaseTag tag, std::complex<double> z, double alpha, double beta)
{
    switch (tag) {
        case CaseTag::se_case1:
        case CaseTag::de_case1: {
            const double gamma = z.real() < 0.0 ? alpha : beta;
            const double w = std::abs(1.0 + z * z);
            if (w == 0.0) throw std::domain_error("envelope: pole at z = +/- i");
            return std::pow(w, -gamma / 2.0);
        }
        case CaseTag::se_case2:
        case CaseTag::de_case2: {
            const double w = std::abs(1.0 + z * z);
            if (w == 0.0) throw std::domain_error("envelope: pole at z = +/- i");
            return std::pow(std::abs(z), alpha) * std::pow(w, -(alpha + beta) / 2.0);
        }
        case CaseTag::se_case3: {
            const double w = std::abs(1.0 + z);
            if (w == 0.0) throw std::domain_error("envelope: pole at z = -1");
            return std::pow(std::abs(z) / w, alpha) * std::exp(-beta * z.real());
        }
        case CaseTag::de_case3:
            return std::pow(std::abs(z), alpha) * std::exp(-alpha * z.real());
    }
    throw std::domain_error("envelope: unknown case");
}

Case3Rescale rescale_case3(double K_tilde, double alpha, double beta)
{
    if (!(K_tilde > 0.0) || !(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("rescale_case3: K, alpha, beta must be positive");
    const double scale = alpha / beta;
    return Case3Rescale{K_tilde * std::pow(scale, alpha), alpha, scale};
}

}  // namespace sincbound
