#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracle/oracle_values.hpp"
#include "sincbound/experiments.hpp"

using namespace sincbound;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("whole-line grid")
{
    const auto g = whole_line_grid();
    REQUIRE(g.size() == 403);
    CHECK(g.front() == -std::ldexp(1.0, 50));
    CHECK(g.back() == std::ldexp(1.0, 50));
    CHECK(g[201] == 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == -g[402 - i]);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("half-line grid")
{
    const auto g = half_line_grid();
    REQUIRE(g.size() == 201);
    CHECK(g.front() == std::ldexp(1.0, -50));
    CHECK(g.back() == std::ldexp(1.0, 50));
    for (double t : g) CHECK(t > 0.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("example function values")
{
    CHECK(example(ExampleId::f1).f(0.0) == 1.0);
    CHECK(example(ExampleId::f2).f(1.0) == 0.5);
    CHECK(example(ExampleId::f3).f(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    // f4(0) = sqrt(1 + cosh pi)
    CHECK(example(ExampleId::f4).f(0.0) ==
          doctest::Approx(std::sqrt(1.0 + std::cosh(pi))).epsilon(1e-15));
}

TEST_CASE("example certificates carry the published parameters")
{
    const BenchmarkExample f1 = example(ExampleId::f1);
    CHECK(f1.se_class->K == 1.5);
    CHECK(f1.se_class->alpha == 2.0);
    CHECK(f1.se_class->d == pi / 4.0);
    CHECK(f1.de_class->d == pi / 6.0);
    CHECK(f1.se_kind == Transform::se1);
    CHECK(!f1.rescale.has_value());

    const BenchmarkExample f2 = example(ExampleId::f2);
    CHECK(f2.se_class->alpha == 0.5);
    CHECK(f2.se_class->beta == 1.5);
    CHECK(f2.de_kind == Transform::de2);

    const BenchmarkExample f3 = example(ExampleId::f3);
    CHECK(f3.se_class->K == doctest::Approx(oracle::k_f3_se).epsilon(1e-15));
    CHECK(f3.se_class->d == 1.57);
    CHECK(f3.de_class->K == doctest::Approx(oracle::k_f3_de).epsilon(1e-15));
    CHECK(f3.de_class->alpha == pi / 4.0);
    CHECK(f3.de_class->d == 1.5);
    CHECK(*f3.rescale == pi / 4.0);
    CHECK(f3.de_kind == Transform::de3_ddagger);

    const BenchmarkExample f4 = example(ExampleId::f4);
    CHECK(f4.se_class->K == doctest::Approx(oracle::k_f4).epsilon(1e-15));
    CHECK(f4.se_class->d == pi / 3.0);
    CHECK(!f4.de_class.has_value());
}

TEST_CASE("envelope certificates hold on the grids")
{
    const double slack = 1.0 + 1e-12;

    for (ExampleId id : {ExampleId::f1, ExampleId::f4}) {
        const BenchmarkExample ex = example(id);
        const FunctionClass& cls = *ex.se_class;
        for (double t : whole_line_grid())
            CHECK(std::fabs(ex.f(t)) <=
                  cls.K * envelope(cls.case_tag, t, cls.alpha, cls.beta) * slack);
    }

    const BenchmarkExample f2 = example(ExampleId::f2);
    for (double t : half_line_grid()) {
        const FunctionClass& se = *f2.se_class;
        const FunctionClass& de = *f2.de_class;
        CHECK(std::fabs(f2.f(t)) <= se.K * envelope(se.case_tag, t, se.alpha, se.beta) * slack);
        CHECK(std::fabs(f2.f(t)) <= de.K * envelope(de.case_tag, t, de.alpha, de.beta) * slack);
    }

    const BenchmarkExample f3 = example(ExampleId::f3);
    const FunctionClass& se3cls = *f3.se_class;
    const FunctionClass& de3cls = *f3.de_class;
    const double scale = *f3.rescale;
    for (double t : half_line_grid()) {
        CHECK(std::fabs(f3.f(t)) <=
              se3cls.K * envelope(se3cls.case_tag, t, se3cls.alpha, se3cls.beta) * slack);
        // the rescaled g(u) = f3(scale u) against z^mu e^{-mu z}; equality
        // holds identically here, the slack covers rounding
        CHECK(std::fabs(f3.f(scale * t)) <=
              de3cls.K * envelope(de3cls.case_tag, t, de3cls.alpha, de3cls.beta) * slack);
    }
}

TEST_CASE("f1 sweeps carry dominant bounds in both variants")
{
    const int ns[] = {4, 8, 12};
    for (Variant v : {Variant::se, Variant::de}) {
        const auto records = sweep(ExampleId::f1, v, ns);
        REQUIRE(records.size() == 3);
        int expect = 4;
        for (const auto& r : records) {
            CHECK(r.n == expect);
            expect += 4;
            CHECK(r.M == r.n);
            CHECK(r.N == r.n);
            REQUIRE(r.bound.has_value());
            CHECK(r.max_error <= *r.bound * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("f2 DE sweep truncates the fast-decay side")
{
    const int ns[] = {4, 10};
    const auto records = sweep(ExampleId::f2, Variant::de, ns);
    for (const auto& r : records) {
        CHECK(r.M == r.n);
        CHECK(r.N < r.n);
        REQUIRE(r.bound.has_value());
        CHECK(r.max_error <= *r.bound * (1.0 + 1e-12));
    }
}

TEST_CASE("f3 DE sweep produces the two transform groups")
{
    const int ns[] = {6, 10};
    const auto records = sweep(ExampleId::f3, Variant::de, ns);
    REQUIRE(records.size() == 4);
    CHECK(records[0].transform == Transform::de3_ddagger);
    CHECK(records[1].transform == Transform::de3_ddagger);
    CHECK(records[2].transform == Transform::de3_old);
    CHECK(records[3].transform == Transform::de3_old);
    CHECK(records[0].bound.has_value());
    CHECK(records[1].bound.has_value());
    CHECK(!records[2].bound.has_value());
    CHECK(!records[3].bound.has_value());
    for (const auto& r : records)
        if (r.bound) CHECK(r.max_error <= *r.bound * (1.0 + 1e-12));
    // the old group keeps M = N = n
    CHECK(records[2].M == records[2].n);
    CHECK(records[2].N == records[2].n);
}

TEST_CASE("f4 sweeps: bounded SE, unbounded DE")
{
    const int ns[] = {4, 10};
    for (const auto& r : sweep(ExampleId::f4, Variant::se, ns)) {
        REQUIRE(r.bound.has_value());
        CHECK(r.max_error <= *r.bound * (1.0 + 1e-12));
    }
    for (const auto& r : sweep(ExampleId::f4, Variant::de, ns)) {
        CHECK(!r.bound.has_value());
        CHECK(r.max_error > 0.0);
    }
}

TEST_CASE("errors shrink along the sweep")
{
    const int ns[] = {6, 30};
    for (ExampleId id : {ExampleId::f1, ExampleId::f2}) {
        for (Variant v : {Variant::se, Variant::de}) {
            const auto records = sweep(id, v, ns);
            CHECK(records[1].max_error < records[0].max_error);
        }
    }
}

TEST_CASE("max error at n=100 is below max error at n=10 everywhere")
{
    const int ns[] = {10, 100};
    for (ExampleId id : {ExampleId::f1, ExampleId::f2, ExampleId::f3, ExampleId::f4}) {
        for (Variant v : {Variant::se, Variant::de}) {
            const auto records = sweep(id, v, ns);
            REQUIRE(records.size() >= 2);
            // per transform group (f3 DE has two)
            for (std::size_t i = 0; i + 1 < records.size(); i += 2) {
                CHECK(records[i].n == 10);
                CHECK(records[i + 1].n == 100);
                CHECK(records[i + 1].max_error < records[i].max_error);
            }
        }
    }
}

TEST_CASE("default n ranges")
{
    CHECK(default_n_values(ExampleId::f1, Variant::se).front() == 2);
    CHECK(default_n_values(ExampleId::f1, Variant::de).front() == 4);
    CHECK(default_n_values(ExampleId::f2, Variant::de).front() == 2);
    CHECK(default_n_values(ExampleId::f3, Variant::de).front() == 2);
    CHECK(default_n_values(ExampleId::f4, Variant::de).front() == 4);
    CHECK(default_n_values(ExampleId::f1, Variant::se).back() == 100);
}

TEST_CASE("sweeps are deterministic and thread-count independent")
{
    const int ns[] = {4, 8, 12, 16};
    const auto serial = sweep(ExampleId::f1, Variant::de, ns, 1);
    const auto parallel = sweep(ExampleId::f1, Variant::de, ns, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].n == parallel[i].n);
        CHECK(serial[i].h == parallel[i].h);
        CHECK(serial[i].max_error == parallel[i].max_error);
        CHECK(*serial[i].bound == *parallel[i].bound);
    }
}

TEST_CASE("CSV output is deterministic with round-trip fields")
{
    const int ns[] = {4, 8};
    const auto records = sweep(ExampleId::f1, Variant::se, ns);
    std::ostringstream a, b;
    write_csv(a, ExampleId::f1, Variant::se, records);
    write_csv(b, ExampleId::f1, Variant::se, records);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, a.str().find('\n')) == "n,h,M,N,max_error,bound");

    // h round-trips through the text exactly
    std::istringstream in(a.str());
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    const auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
    CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) == records[0].h);

    // f3 DE adds the transform column; the old rows leave the bound empty
    const auto f3records = sweep(ExampleId::f3, Variant::de, ns);
    std::ostringstream c;
    write_csv(c, ExampleId::f3, Variant::de, f3records);
    CHECK(c.str().substr(0, c.str().find('\n')) == "n,h,M,N,max_error,bound,transform");
    CHECK(c.str().find(",de3_ddagger") != std::string::npos);
    CHECK(c.str().find(",,de3_old") != std::string::npos);

    // f4 DE leaves the bound column empty
    const auto f4records = sweep(ExampleId::f4, Variant::de, ns);
    std::ostringstream d;
    write_csv(d, ExampleId::f4, Variant::de, f4records);
    std::istringstream f4in(d.str());
    std::getline(f4in, line);
    std::getline(f4in, line);
    CHECK(line.back() == ',');
}
