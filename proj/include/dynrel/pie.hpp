#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dynrel {

/// One signed term of the probabilistic inclusion-exclusion expansion:
/// a nonempty subset of module indices (bit i = module i) and the sign
/// (-1)^(|subset|+1).
struct PieTerm {
    std::uint32_t subset;
    int sign;
};

/// All 2^n - 1 nonempty subsets, each exactly once, in increasing mask
/// order. Guarded to n <= 20 against exponential blowup.
std::vector<PieTerm> pie_expand(int module_count);

/// Probability of the union of independent module events via the signed
/// inclusion-exclusion sum (intersections reduce to products). Compensated
/// summation keeps the alternating sum accurate; the result is cross-checked
/// against the complement identity 1 - prod(1 - p_i).
double union_probability(std::span<const double> module_probs);

}  // namespace dynrel
