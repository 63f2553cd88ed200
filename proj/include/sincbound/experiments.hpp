#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sincbound/theory.hpp"
#include "sincbound/transforms.hpp"

namespace sincbound {

enum class ExampleId { f1, f2, f3, f4 };
enum class Variant { se, de };

// One of the four benchmark functions together with its certificates:
//
//   f1(t) = sqrt(1 + tanh^2(arcsinh t)) / (1 + t^2)        on (-inf, inf)
//   f2(t) = sqrt(t) sqrt(1 + tanh^2(log t)) / (1 + t^2)    on (0, inf)
//   f3(t) = t^(pi/4) e^(-t)                                on (0, inf)
//   f4(t) = sqrt(cos(3 arcsinh t) + cosh pi) / (1 + t^2)   on (-inf, inf)
//
// f4 carries an SE certificate only; no strip works for its DE branch.
// f3's DE branch approximates the rescaled g(u) = f3(rescale * u), whose
// equal-exponent certificate comes from rescale_case3.
struct BenchmarkExample {
    ExampleId id;
    std::function<double(double)> f;
    std::optional<FunctionClass> se_class;
    std::optional<FunctionClass> de_class;
    Transform se_kind;
    Transform de_kind;
    std::optional<double> rescale;
};

BenchmarkExample example(ExampleId id);

// 403 points: 0 and +/- 2^e for e = -50, -49.5, ..., 50, ascending.
std::vector<double> whole_line_grid();
// 201 points: 2^e for e = -50, -49.5, ..., 50, ascending.
std::vector<double> half_line_grid();

struct SweepRecord {
    int n = 0;
    double h = 0.0;
    int M = 0;
    int N = 0;
    double max_error = 0.0;
    std::optional<double> bound;  // absent where no computable constant applies
    Transform transform = Transform::se1;
};

// One record per n: select parameters, build, measure the maximum error on
// the example's grid, and attach the rigorous bound where one exists.  The
// f3 DE sweep produces two groups, de3_ddagger (bounded) followed by
// de3_old (comparison only); the f4 DE sweep runs without a bound, with
// nodes placed for d = arcsin(d_se/pi).  threads = 0 picks the hardware
// concurrency; records come back in ascending n per group regardless.
std::vector<SweepRecord> sweep(ExampleId id, Variant variant, std::span<const int> n_values,
                               unsigned threads = 0);

// Default sweep range: even n up to 100, starting at 2 (SE) or at the DE
// admissibility threshold rounded up to even.
std::vector<int> default_n_values(ExampleId id, Variant variant);

// CSV with header n,h,M,N,max_error,bound; floats use round-trip precision,
// the bound field is empty where absent, and the f3 DE table carries an
// extra transform column distinguishing the two groups.
void write_csv(std::ostream& os, ExampleId id, Variant variant,
               std::span<const SweepRecord> records);

const char* name(ExampleId id);
const char* name(Variant v);

}  // namespace sincbound
