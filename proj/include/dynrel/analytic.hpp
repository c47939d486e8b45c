#pragma once

#include <span>
#include <string>
#include <vector>

#include "dynrel/distribution.hpp"
#include "dynrel/model.hpp"
#include "dynrel/quadrature.hpp"

namespace dynrel {

struct AnalyticOptions {
    double tol = 1e-9;        // absolute tolerance of outer integrals
    double inner_tol = 1e-10; // absolute tolerance of nested inner integrals
};

/// Probability (dft routes) or reliability (drbd route) at one time point,
/// with the method that produced it and its numeric error bound.
/// `term_count` records the work shape of the route: number of signed
/// inclusion-exclusion terms for "dft-pie", 1 structural pass for
/// "drbd-structural".
struct AnalysisResult {
    std::string model;
    ModelKind kind = ModelKind::Dft;
    std::string method;
    double time = 0.0;
    double value = 0.0;
    double error_bound = 0.0;
    long term_count = 0;
};

/// Failure probability of an AND of two independent events from their CDFs.
double prob_and(double fx, double fy);

/// Failure probability of an OR (also FDEP) of two independent events.
double prob_or(double fx, double fy);

/// Failure probability by t of a priority-AND with inputs X, Y: the chance
/// Y fails by t with X already failed.
QuadResult prob_pand(const Distribution& dx, const Distribution& dy, double t, double tol = 1e-9);

/// Failure probability by t of a warm-spare pair (main `y`, spare `sp`):
/// activated-spare failures plus dormant-loss-then-main failures, both as
/// nested adaptive quadratures.
QuadResult prob_wsp(const Distribution& y, const SpareSpec& sp, double t,
                    const AnalyticOptions& opts = {});

/// Series / parallel composition of independent block reliabilities.
double rel_series(std::span<const double> rels);
double rel_parallel(std::span<const double> rels);

/// Warm-spare reliability as the complement of prob_wsp, self-checked
/// against the direct survival-form double integral.
QuadResult rel_wsp(const Distribution& y, const SpareSpec& sp, double t,
                   const AnalyticOptions& opts = {});

/// The survival-form route on its own: 1 minus the two loss integrals with
/// the double integral evaluated in swapped order.
QuadResult rel_wsp_direct(const Distribution& y, const SpareSpec& sp, double t,
                          const AnalyticOptions& opts = {});

/// Failure probability of a fault-tree model whose top is an OR of
/// independent modules (each a basic event or one and/pand/fdep/wsp over
/// basic events), expanded by probabilistic inclusion-exclusion.
AnalysisResult analyze_dft(const Model& m, double t, const AnalyticOptions& opts = {});

/// Reliability of a block-diagram model by structural recursion over
/// series/parallel/spare composition.
AnalysisResult analyze_drbd(const Model& m, double t, const AnalyticOptions& opts = {});

}  // namespace dynrel
