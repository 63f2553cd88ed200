#include "sincbound/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sincbound/approximant.hpp"

namespace sincbound {

namespace {

constexpr double pi = std::numbers::pi;

double f1(double t)
{
    const double s = std::tanh(std::asinh(t));
    return std::sqrt(1.0 + s * s) / (1.0 + t * t);
}

double f2(double t)
{
    const double s = std::tanh(std::log(t));
    return std::sqrt(t) * std::sqrt(1.0 + s * s) / (1.0 + t * t);
}

double f3(double t)
{
    return std::pow(t, pi / 4.0) * std::exp(-t);
}

double f4(double t)
{
    return std::sqrt(std::cos(3.0 * std::asinh(t)) + std::cosh(pi)) / (1.0 + t * t);
}

// Node placement for the f3 old-DE comparison: the de3_old certificate for
// f3 only holds on strips of half-width below ~1.4045, hence d = 1.40.
// No computable constant exists for this route; it runs unbounded.
FunctionClass f3_old_placement()
{
    return FunctionClass(CaseTag::de_case1, 1.0, pi / 4.0, pi / 4.0, 1.40);
}

// Node placement for the f4 DE sweep: d = arcsin(d_se/pi) with d_se = pi/3.
FunctionClass f4_de_placement()
{
    return FunctionClass(CaseTag::de_case1, 1.0, 2.0, 2.0, std::asin(1.0 / 3.0));
}

struct SweepTask {
    std::function<double(double)> target;
    Transform kind;
    std::function<SincParams(int)> params_for;
    std::function<std::optional<double>(int)> bound_for;
    const std::vector<double>* grid;
    std::span<const int> n_values;
};

SweepRecord run_step(const SweepTask& task, int n)
{
    const SincParams p = task.params_for(n);
    const Approximant a = build(task.target, task.kind, p);
    const double err = max_error_on_grid(a, task.target, *task.grid);
    return SweepRecord{n, p.h, p.M, p.N, err, task.bound_for(n), task.kind};
}

void run_tasks(std::span<const SweepTask> tasks, std::span<SweepRecord> out, unsigned threads)
{
    std::vector<std::pair<const SweepTask*, int>> steps;
    for (const SweepTask& t : tasks)
        for (int n : t.n_values) steps.emplace_back(&t, n);

    unsigned want = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (want == 0) want = 1;
    if (want > steps.size()) want = static_cast<unsigned>(steps.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < steps.size();) {
            try {
                out[i] = run_step(*steps[i].first, steps[i].second);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };

    if (want <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(want - 1);
        for (unsigned i = 0; i + 1 < want; ++i) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
}

const std::vector<double>& cached_whole_grid()
{
    static const std::vector<double> g = whole_line_grid();
    return g;
}

const std::vector<double>& cached_half_grid()
{
    static const std::vector<double> g = half_line_grid();
    return g;
}

}  // namespace

BenchmarkExample example(ExampleId id)
{
    switch (id) {
        case ExampleId::f1:
            return BenchmarkExample{
                id, f1,
                FunctionClass(CaseTag::se_case1, 1.5, 2.0, 2.0, pi / 4.0),
                FunctionClass(CaseTag::de_case1, 1.5, 2.0, 2.0, pi / 6.0),
                Transform::se1, Transform::de1, std::nullopt};
        case ExampleId::f2:
            return BenchmarkExample{
                id, f2,
                FunctionClass(CaseTag::se_case2, 1.5, 0.5, 1.5, pi / 4.0),
                FunctionClass(CaseTag::de_case2, 1.5, 0.5, 1.5, pi / 6.0),
                Transform::se2, Transform::de2, std::nullopt};
        case ExampleId::f3: {
            // |f3(z)| <= K |z^(pi/4) e^(-z)|: unequal exponents, reduced by
            // rescaling the argument; the strip half-width is d = 3/2.
            const Case3Rescale rs = rescale_case3(1.0, pi / 4.0, 1.0);
            return BenchmarkExample{
                id, f3,
                FunctionClass(CaseTag::se_case3,
                              std::pow(1.0 + (pi / 2.0) * (pi / 2.0), pi / 8.0),
                              pi / 4.0, 0.75, 1.57),
                FunctionClass(CaseTag::de_case3, rs.K, rs.mu, rs.mu, 1.5),
                Transform::se3, Transform::de3_ddagger, rs.scale};
        }
        case ExampleId::f4:
            return BenchmarkExample{
                id, f4,
                FunctionClass(CaseTag::se_case1, 2.0 * std::cosh(pi), 2.0, 2.0, pi / 3.0),
                std::nullopt,
                Transform::se1, Transform::de1, std::nullopt};
    }
    throw std::domain_error("example: unknown id");
}

std::vector<double> half_line_grid()
{
    std::vector<double> g;
    g.reserve(201);
    for (int i = 0; i <= 200; ++i) g.push_back(std::exp2(-50.0 + 0.5 * i));
    return g;
}

std::vector<double> whole_line_grid()
{
    std::vector<double> g;
    g.reserve(403);
    for (int i = 200; i >= 0; --i) g.push_back(-std::exp2(-50.0 + 0.5 * i));
    g.push_back(0.0);
    for (int i = 0; i <= 200; ++i) g.push_back(std::exp2(-50.0 + 0.5 * i));
    return g;
}

std::vector<SweepRecord> sweep(ExampleId id, Variant variant, std::span<const int> n_values,
                               unsigned threads)
{
    const BenchmarkExample ex = example(id);
    const std::vector<double>& grid =
        is_half_line(variant == Variant::se ? ex.se_kind : ex.de_kind) ? cached_half_grid()
                                                                       : cached_whole_grid();

    std::vector<SweepTask> tasks;
    if (variant == Variant::se) {
        const FunctionClass cls = *ex.se_class;
        const ErrorBound eb = constant_se(cls);
        tasks.push_back(SweepTask{
            ex.f, ex.se_kind,
            [cls](int n) { return select_params_se(cls, n); },
            [eb](int n) { return std::optional<double>(bound_value(eb, n)); },
            &grid, n_values});
    } else if (id == ExampleId::f3) {
        const FunctionClass cls = *ex.de_class;
        const ErrorBound eb = constant_de(cls);
        const double scale = *ex.rescale;
        auto f = ex.f;
        auto g = [f, scale](double u) { return f(scale * u); };
        tasks.push_back(SweepTask{
            g, ex.de_kind,
            [cls](int n) { return select_params_de3(cls, n); },
            [eb](int n) { return std::optional<double>(bound_value(eb, n)); },
            &grid, n_values});
        const FunctionClass old_cls = f3_old_placement();
        tasks.push_back(SweepTask{
            ex.f, Transform::de3_old,
            [old_cls](int n) { return select_params_de(old_cls, n); },
            [](int) { return std::optional<double>(); },
            &grid, n_values});
    } else if (id == ExampleId::f4) {
        const FunctionClass placement = f4_de_placement();
        tasks.push_back(SweepTask{
            ex.f, ex.de_kind,
            [placement](int n) { return select_params_de(placement, n); },
            [](int) { return std::optional<double>(); },
            &grid, n_values});
    } else {
        const FunctionClass cls = *ex.de_class;
        const ErrorBound eb = constant_de(cls);
        tasks.push_back(SweepTask{
            ex.f, ex.de_kind,
            [cls](int n) { return select_params_de(cls, n); },
            [eb](int n) { return std::optional<double>(bound_value(eb, n)); },
            &grid, n_values});
    }

    std::vector<SweepRecord> records(tasks.size() * n_values.size());
    run_tasks(tasks, records, threads);
    return records;
}

std::vector<int> default_n_values(ExampleId id, Variant variant)
{
    int start = 2;
    if (variant == Variant::de) {
        double threshold = 0.0;
        if (id == ExampleId::f3) {
            const BenchmarkExample ex = example(id);
            threshold = ex.de_class->mu() * std::numbers::e / (2.0 * ex.de_class->d);
        } else if (id == ExampleId::f4) {
            const FunctionClass placement = f4_de_placement();
            threshold = placement.nu() * std::numbers::e / (4.0 * placement.d);
        } else {
            const BenchmarkExample ex = example(id);
            threshold = ex.de_class->nu() * std::numbers::e / (4.0 * ex.de_class->d);
        }
        const int first = static_cast<int>(std::ceil(threshold));
        start = first + (first % 2);
        if (start < 2) start = 2;
    }
    std::vector<int> ns;
    for (int n = start; n <= 100; n += 2) ns.push_back(n);
    return ns;
}

void write_csv(std::ostream& os, ExampleId id, Variant variant,
               std::span<const SweepRecord> records)
{
    const bool with_transform = id == ExampleId::f3 && variant == Variant::de;
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "n,h,M,N,max_error,bound";
    if (with_transform) os << ",transform";
    os << "\n";
    for (const SweepRecord& r : records) {
        os << r.n << ',' << fmt(r.h) << ',' << r.M << ',' << r.N << ',' << fmt(r.max_error)
           << ',';
        if (r.bound) os << fmt(*r.bound);
        if (with_transform) os << ',' << name(r.transform);
        os << '\n';
    }
}

const char* name(ExampleId id)
{
    switch (id) {
        case ExampleId::f1: return "f1";
        case ExampleId::f2: return "f2";
        case ExampleId::f3: return "f3";
        case ExampleId::f4: return "f4";
    }
    return "?";
}

const char* name(Variant v)
{
    return v == Variant::se ? "se" : "de";
}

}  // namespace sincbound
