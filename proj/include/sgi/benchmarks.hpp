#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sgi/domain.hpp"

namespace sgi {

/// sin(x1) + a*sin^2(x2) + b*x3^4*sin(x1) on [-pi, pi]^3.
double ishigami(std::span<const double> x, double a = 7.0, double b = 0.1);

/// prod_i (|4*x_i - 2| + a_i) / (1 + a_i) on [0, 1]^d.
double sobol_g(std::span<const double> x, std::span<const double> a);

/// Default Sobol G coefficients a_i = (i - 1) / 2, 1-based.
std::vector<double> sobol_g_default_coefficients(int dimension);

/// sum_i cos(theta_i * x_i) on [0, 1]^d.
double oscillatory(std::span<const double> x, std::span<const double> theta);

/// Default frequencies: (1.5, 3.0, 0.5, 4.5)*pi in four dimensions, otherwise
/// theta_i = (i + 1) * pi, 1-based.
std::vector<double> oscillatory_default_frequencies(int dimension);

/// Function wrapper with a monotone evaluation counter. Copies share the
/// counter; increments are atomic so concurrent evaluation stays consistent.
/// The counter is the accounting instrument for evaluation budgets and for
/// checking that candidate ranking costs zero true-function calls.
class CountingFunction {
public:
    explicit CountingFunction(std::function<double(std::span<const double>)> fn)
        : fn_(std::move(fn)), calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

    double operator()(std::span<const double> x) const {
        calls_->fetch_add(1, std::memory_order_relaxed);
        return fn_(x);
    }

    std::uint64_t call_count() const { return calls_->load(std::memory_order_relaxed); }

private:
    std::function<double(std::span<const double>)> fn_;
    std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

/// A named test function bundled with its domain and coefficients, ready to
/// run by name from the experiment harness.
struct BenchmarkSpec {
    std::string name;
    int dimension;
    Domain domain;
    std::vector<double> coefficients;
    CountingFunction function;
};

/// Benchmarks by name: "ishigami" (fixed d=3, [-pi,pi]^3, a=7, b=0.1),
/// "sobol_g" and "oscillatory" ([0,1]^d, default d=4). `dimension` <= 0 picks
/// the default; a coefficient override replaces the standard values.
BenchmarkSpec make_benchmark(const std::string& name, int dimension = 0,
                             const std::vector<double>* coefficient_override = nullptr);

} // namespace sgi
