#include "dynrel/pie.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "dynrel/error.hpp"

namespace dynrel {

std::vector<PieTerm> pie_expand(int module_count) {
    if (module_count < 1 || module_count > 20) {
        throw CapacityError("pie_expand: module count must lie in [1,20], got " +
                            std::to_string(module_count));
    }
    const std::uint32_t total = (1u << module_count) - 1u;
    std::vector<PieTerm> terms;
    terms.reserve(total);
    for (std::uint32_t mask = 1; mask <= total; ++mask) {
        terms.push_back({mask, (std::popcount(mask) % 2 == 1) ? +1 : -1});
    }
    return terms;
}

namespace {

// Neumaier variant of Kahan summation.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double result() const { return sum + comp; }
};

}  // namespace

double union_probability(std::span<const double> module_probs) {
    const int n = static_cast<int>(module_probs.size());
    for (double p : module_probs) {
        if (std::isnan(p) || p < 0.0 || p > 1.0) {
            throw DomainError("union_probability: module probability outside [0,1]");
        }
    }
    const std::vector<PieTerm> terms = pie_expand(n);

    // Per-term products are independent; the parallel fill leaves the
    // fixed-order compensated sum below deterministic.
    std::vector<double> values(terms.size());
#pragma omp parallel for schedule(static) if (terms.size() > 4096)
    for (long i = 0; i < static_cast<long>(terms.size()); ++i) {
        const PieTerm& term = terms[static_cast<std::size_t>(i)];
        double prod = 1.0;
        for (int bit = 0; bit < n; ++bit) {
            if (term.subset & (1u << bit)) prod *= module_probs[static_cast<std::size_t>(bit)];
        }
        values[static_cast<std::size_t>(i)] = term.sign > 0 ? prod : -prod;
    }

    CompensatedSum pie;
    for (double v : values) pie.add(v);
    const double via_pie = pie.result();

    double complement = 1.0;
    for (double p : module_probs) complement *= 1.0 - p;
    const double via_complement = 1.0 - complement;

    const double check_tol = n <= 10 ? 1e-12 : 1e-9;
    if (std::abs(via_pie - via_complement) > check_tol) {
        throw NumericError("union_probability: inclusion-exclusion sum and complement product "
                           "identity disagree",
                           via_pie, std::abs(via_pie - via_complement));
    }
    return via_pie;
}

}  // namespace dynrel
