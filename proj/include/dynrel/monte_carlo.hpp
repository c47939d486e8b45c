#pragma once

#include <cstdint>

#include "dynrel/assignment.hpp"
#include "dynrel/model.hpp"
#include "dynrel/rng.hpp"

namespace dynrel {

/// Frequency estimate of a probability with its binomial standard error and
/// 95% confidence interval (clipped to [0,1]).
struct Estimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    long long n = 0;
    std::uint64_t seed = 0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

/// One coherent scenario: ordinary events get independent inverse-CDF
/// draws (declaration order); each spare then draws a dormant lifetime and,
/// if it outlives the failure of its main part, a fresh active lifetime
/// started at that instant — so exactly one spare coordinate is finite.
/// Spares are visited in post-order of the top expression, inner spares
/// first. Throws ModelError for a declared spare that no wsp node adopts.
Assignment sample_scenario(const Model& m, ScenarioRng& rng);

/// Fraction of n scenarios whose structure failure time is <= t.
/// Deterministic in (model, t, n, seed) and independent of the worker
/// count; workers <= 0 picks the OpenMP default.
Estimate estimate_unreliability(const Model& m, double t, long long n, std::uint64_t seed,
                                int workers = 0);

/// Strict complement on the same scenarios: p_hat values of the two
/// estimates sum to 1 exactly for equal (model, t, n, seed).
Estimate estimate_reliability(const Model& m, double t, long long n, std::uint64_t seed,
                              int workers = 0);

/// Single-threaded reference implementation; must agree bit for bit with
/// the parallel kernel at any worker count.
Estimate estimate_unreliability_serial(const Model& m, double t, long long n, std::uint64_t seed);

}  // namespace dynrel
