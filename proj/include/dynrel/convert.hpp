#pragma once

#include "dynrel/analytic.hpp"
#include "dynrel/expr.hpp"
#include "dynrel/model.hpp"

namespace dynrel {

/// Node-by-node translation of a fault-tree expression into the
/// block-diagram algebra: and<->or swap, fdep to series, pand to
/// inclusive-after with swapped operands, spares to spares, leaves
/// unchanged. The result evaluates to the same failure instant on every
/// assignment (spare nodes: on assignments with distinct main/active/dormant
/// triples). Throws NoEquivalenceError on bare temporal operators, which
/// have no translation rule.
DrbdPtr dft_to_drbd(const DftPtr& e);

/// Inverse translation. fdep is not restored: both fdep and or map to the
/// same series operator, so a round trip canonicalizes fdep to or.
DftPtr drbd_to_dft(const DrbdPtr& e);

/// Same-events model with the top expression translated and the kind
/// flipped.
Model convert_model(const Model& m);

/// Failure probability via the fault-tree route and reliability via the
/// block-diagram route for the same model, with the complement residual
/// |1 - (sum)|. When only one route supports the structure the other value
/// is derived by complement and flagged as such (residual 0 by
/// construction).
struct ComplementReport {
    double unreliability_dft = 0.0;
    double reliability_drbd = 0.0;
    double residual = 0.0;
    bool dft_direct = false;
    bool drbd_direct = false;
    double error_bound = 0.0;
};

ComplementReport complement_report(const Model& m, double t, const AnalyticOptions& opts = {});

}  // namespace dynrel
