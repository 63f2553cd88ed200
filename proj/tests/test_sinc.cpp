#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracle/oracle_values.hpp"
#include "sincbound/experiments.hpp"
#include "sincbound/sinc.hpp"

using namespace sincbound;

namespace {

// plain left-to-right sum, the summation-order oracle
double naive_sum(const CardinalSum& cs, double x)
{
    double sum = 0.0;
    for (int k = cs.lo; k <= cs.hi; ++k)
        sum += cs.values[static_cast<std::size_t>(k - cs.lo)] * sinc_basis(k, cs.h, x);
    return sum;
}

}  // namespace

TEST_CASE("sinc basis at its own node is exactly one")
{
    CHECK(sinc_basis(0, 1.0, 0.0) == 1.0);
    CHECK(sinc_basis(5, 0.25, 1.25) == 1.0);
    CHECK(sinc_basis(-3, 2.0, -6.0) == 1.0);
}

TEST_CASE("sinc basis at other nodes is exactly zero")
{
    // x/h = 5 exactly, k = 3
    CHECK(sinc_basis(3, 0.5, 2.5) == 0.0);
    CHECK(sinc_basis(0, 1.0, 7.0) == 0.0);
    CHECK(sinc_basis(-2, 0.25, 0.75) == 0.0);
}

TEST_CASE("sinc basis midpoint value")
{
    CHECK(sinc_basis(0, 1.0, 0.5) ==
          doctest::Approx(oracle::two_over_pi).epsilon(3e-16));
}

TEST_CASE("sinc basis near-zero guard")
{
    // |u| < 1e-9: the 2-term Taylor value rounds to 1 in double
    CHECK(sinc_basis(0, 1.0, 1e-10) == 1.0);
    CHECK(sinc_basis(0, 1.0, -1e-10) == 1.0);
    // continuity across the guard boundary
    const double inside = sinc_basis(0, 1.0, 0.99e-9);
    const double outside = sinc_basis(0, 1.0, 1.01e-9);
    CHECK(std::fabs(inside - outside) < 1e-15);
}

TEST_CASE("sinc basis domain errors")
{
    CHECK_THROWS_AS(sinc_basis(0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(sinc_basis(0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(sinc_basis(0, 1.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_THROWS_AS(sinc_basis(0, std::numeric_limits<double>::quiet_NaN(), 1.0),
                    std::domain_error);
}

TEST_CASE("sinc basis stays within [-1, 1]")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xs(-50.0, 50.0);
    std::uniform_real_distribution<double> hs(0.01, 3.0);
    std::uniform_int_distribution<int> ks(-100, 100);
    for (int i = 0; i < 20000; ++i) {
        const double v = sinc_basis(ks(rng), hs(rng), xs(rng));
        CHECK(v <= 1.0);
        CHECK(v >= -1.0);
    }
}

TEST_CASE("cardinal sum interpolates at nodes")
{
    const CardinalSum peak{1.0, -1, 1, {0.0, 1.0, 0.0}};
    CHECK(cardinal_sum(peak, 0.0) == 1.0);

    const CardinalSum flat{1.0, -1, 1, {1.0, 1.0, 1.0}};
    CHECK(cardinal_sum(flat, 1.0) == 1.0);
}

TEST_CASE("cardinal sum midpoint value")
{
    const CardinalSum peak{1.0, -1, 1, {0.0, 1.0, 0.0}};
    const double v = cardinal_sum(peak, 0.5);
    CHECK(v == doctest::Approx(oracle::two_over_pi).epsilon(1e-15));
    CHECK(v == doctest::Approx(naive_sum(peak, 0.5)).epsilon(1e-15));
}

TEST_CASE("cardinal sum validation and domain errors")
{
    CHECK_THROWS_AS(CardinalSum(0.0, -1, 1, {0.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(CardinalSum(1.0, 1, -1, {0.0, 1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(CardinalSum(1.0, -1, 1, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(CardinalSum(1.0, -1, 1, {0.0, std::nan(""), 0.0}), std::invalid_argument);
    const CardinalSum cs{1.0, -1, 1, {0.0, 1.0, 0.0}};
    CHECK_THROWS_AS(cardinal_sum(cs, std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("node exactness is bit-exact when x/h is integral")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> vals(-2.0, 2.0);
    // h values for which j*h/h round-trips exactly
    for (double h : {1.0, 0.5, 0.25, 0.0078125, 3.0}) {
        std::vector<double> v(21);
        for (double& x : v) x = vals(rng);
        const CardinalSum cs{h, -10, 10, v};
        for (int j = -10; j <= 10; ++j)
            CHECK(cardinal_sum(cs, j * h) == v[static_cast<std::size_t>(j + 10)]);
    }
}

TEST_CASE("cardinal sum is bounded by the l1 norm of the samples")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> vals(-1.0, 1.0);
    std::uniform_real_distribution<double> xs(-20.0, 20.0);
    std::vector<double> v(41);
    double l1 = 0.0;
    for (double& x : v) {
        x = vals(rng);
        l1 += std::fabs(x);
    }
    const CardinalSum cs{0.3, -20, 20, v};
    for (int i = 0; i < 5000; ++i)
        CHECK(std::fabs(cardinal_sum(cs, xs(rng))) <= l1 * (1.0 + 1e-12));
}

TEST_CASE("compensated and naive summation agree on experiment-scale data")
{
    // f1 samples through the sinh map at n = 30
    const BenchmarkExample ex = example(ExampleId::f1);
    const SincParams p = select_params_se(*ex.se_class, 30);
    std::vector<double> v;
    for (int k = -p.M; k <= p.N; ++k) v.push_back(ex.f(std::sinh(k * p.h)));
    const CardinalSum cs{p.h, -p.M, p.N, v};
    for (double t : whole_line_grid()) {
        const double x = std::asinh(t);
        const double a = cardinal_sum(cs, x);
        const double b = naive_sum(cs, x);
        CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
    }
}
