#include "dynrel/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "dynrel/pie.hpp"

namespace dynrel {

namespace {

void check_unit_interval(double p, const char* who) {
    if (std::isnan(p) || p < 0.0 || p > 1.0) {
        throw DomainError(std::string(who) + ": probability outside [0,1]: " + std::to_string(p));
    }
}

void check_horizon(double t) {
    if (std::isnan(t) || std::isinf(t) || t < 0.0) {
        throw DomainError("analysis horizon must be a finite nonnegative time");
    }
}

// Probabilities are asserted to land in [ -slack, 1+slack ], never clamped.
void assert_probability_range(double p, double slack, const char* who) {
    if (std::isnan(p) || p < -slack || p > 1.0 + slack) {
        throw NumericError(std::string(who) + ": computed probability " + std::to_string(p) +
                               " escapes [0,1] beyond the numeric slack",
                           p, slack);
    }
}

}  // namespace

double prob_and(double fx, double fy) {
    check_unit_interval(fx, "prob_and");
    check_unit_interval(fy, "prob_and");
    return fx * fy;
}

double prob_or(double fx, double fy) {
    check_unit_interval(fx, "prob_or");
    check_unit_interval(fy, "prob_or");
    return fx + fy - fx * fy;
}

QuadResult prob_pand(const Distribution& dx, const Distribution& dy, double t, double tol) {
    check_horizon(t);
    QuadResult r = integrate([&](double y) { return dy.pdf(y) * dx.cdf(y); }, 0.0, t, tol);
    assert_probability_range(r.value, tol + r.error_bound, "prob_pand");
    return r;
}

QuadResult prob_wsp(const Distribution& y, const SpareSpec& sp, double t,
                    const AnalyticOptions& opts) {
    check_horizon(t);

    // Activated-spare loss: main fails at v, the spare has survived dormancy
    // to v and its fresh active lifetime ends by t.
    QuadResult activated = integrate(
        [&](double v) {
            const QuadResult inner = integrate(
                [&](double u) { return sp.active_conditional_density(v, u); }, v, t,
                opts.inner_tol);
            return y.pdf(v) * inner.value;
        },
        0.0, t, opts.tol);
    // The inner estimates perturb the outer integrand by at most inner_tol,
    // and the main-part density integrates to at most one.
    activated.error_bound += opts.inner_tol;

    // Dormant loss: the spare has already failed dormant when the main fails.
    QuadResult dormant = integrate([&](double u) { return y.pdf(u) * sp.dormant_cdf(u); }, 0.0, t,
                                   opts.tol);

    QuadResult total{activated.value + dormant.value,
                     activated.error_bound + dormant.error_bound,
                     activated.evaluations + dormant.evaluations};
    assert_probability_range(total.value, opts.tol * 4 + total.error_bound, "prob_wsp");
    return total;
}

double rel_series(std::span<const double> rels) {
    double product = 1.0;
    for (double r : rels) {
        check_unit_interval(r, "rel_series");
        product *= r;
    }
    return product;
}

double rel_parallel(std::span<const double> rels) {
    double all_fail = 1.0;
    for (double r : rels) {
        check_unit_interval(r, "rel_parallel");
        all_fail *= 1.0 - r;
    }
    return 1.0 - all_fail;
}

QuadResult rel_wsp_direct(const Distribution& y, const SpareSpec& sp, double t,
                          const AnalyticOptions& opts) {
    check_horizon(t);

    // Same two loss integrals as prob_wsp, with the double integral taken in
    // swapped order (outer over the active failure instant).
    QuadResult activated = integrate(
        [&](double u) {
            const QuadResult inner = integrate(
                [&](double v) { return y.pdf(v) * sp.active_conditional_density(v, u); }, 0.0, u,
                opts.inner_tol);
            return inner.value;
        },
        0.0, t, opts.tol);
    activated.error_bound += opts.inner_tol * std::max(t, 1.0);

    QuadResult dormant = integrate([&](double u) { return y.pdf(u) * sp.dormant_cdf(u); }, 0.0, t,
                                   opts.tol);

    QuadResult total{1.0 - activated.value - dormant.value,
                     activated.error_bound + dormant.error_bound,
                     activated.evaluations + dormant.evaluations};
    assert_probability_range(total.value, opts.tol * 4 + total.error_bound, "rel_wsp_direct");
    return total;
}

QuadResult rel_wsp(const Distribution& y, const SpareSpec& sp, double t,
                   const AnalyticOptions& opts) {
    const QuadResult failure = prob_wsp(y, sp, t, opts);
    QuadResult r{1.0 - failure.value, failure.error_bound, failure.evaluations};

    const QuadResult direct = rel_wsp_direct(y, sp, t, opts);
    const double gap = std::abs(r.value - direct.value);
    if (gap > 2.0 * std::max(opts.tol, r.error_bound + direct.error_bound)) {
        throw NumericError("rel_wsp: complement route and survival-form route disagree", r.value,
                           gap);
    }
    return r;
}

namespace {

struct ModuleProbability {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    std::vector<EventId> events;
};

void flatten_or(const DftPtr& e, std::vector<DftPtr>& out) {
    if (e && e->op == DftOp::Or) {
        flatten_or(e->left, out);
        flatten_or(e->right, out);
    } else {
        out.push_back(e);
    }
}

void flatten_and(const DftPtr& e, std::vector<DftPtr>& out) {
    if (e && e->op == DftOp::And) {
        flatten_and(e->left, out);
        flatten_and(e->right, out);
    } else {
        out.push_back(e);
    }
}

const Distribution& basic_law(const Model& m, const DftPtr& e, const char* role) {
    if (!e || e->op != DftOp::Basic) {
        throw UnsupportedStructureError(std::string("analyze_dft: ") + role +
                                        " must be a basic event for the gate-formula route");
    }
    return m.distribution(e->id);
}

ModuleProbability module_probability(const Model& m, const DftPtr& e, double t,
                                     const AnalyticOptions& opts) {
    ModuleProbability mp;
    if (!e) throw ModelError("analyze_dft: null module");
    switch (e->op) {
        case DftOp::Basic:
            mp.value = m.distribution(e->id).cdf(t);
            mp.events = {e->id};
            return mp;
        case DftOp::Always:
            mp.value = 1.0;
            return mp;
        case DftOp::Never:
            mp.value = 0.0;
            return mp;
        case DftOp::And: {
            std::vector<DftPtr> leaves;
            flatten_and(e, leaves);
            mp.value = 1.0;
            for (const DftPtr& leaf : leaves) {
                if (leaf && leaf->op == DftOp::Always) continue;
                if (leaf && leaf->op == DftOp::Never) {
                    mp.value = 0.0;
                    continue;
                }
                mp.value = prob_and(mp.value, basic_law(m, leaf, "an AND operand").cdf(t));
                mp.events.push_back(leaf->id);
            }
            return mp;
        }
        case DftOp::Pand: {
            const Distribution& dx = basic_law(m, e->left, "a PAND operand");
            const Distribution& dy = basic_law(m, e->right, "a PAND operand");
            const QuadResult q = prob_pand(dx, dy, t, opts.tol);
            mp.value = q.value;
            mp.error = q.error_bound;
            mp.evaluations = q.evaluations;
            mp.events = {e->left->id, e->right->id};
            return mp;
        }
        case DftOp::Fdep: {
            const Distribution& trigger = basic_law(m, e->left, "an FDEP operand");
            const Distribution& dependent = basic_law(m, e->right, "an FDEP operand");
            mp.value = prob_or(trigger.cdf(t), dependent.cdf(t));
            mp.events = {e->left->id, e->right->id};
            return mp;
        }
        case DftOp::Wsp: {
            const Distribution& main = basic_law(m, e->left, "a WSP main part");
            const QuadResult q = prob_wsp(main, m.spare_spec(e->id), t, opts);
            mp.value = q.value;
            mp.error = q.error_bound;
            mp.evaluations = q.evaluations;
            mp.events = {e->left->id, e->id};
            return mp;
        }
        case DftOp::Or:
            throw UnsupportedStructureError(
                "analyze_dft: nested OR below a gate is not a union of independent modules");
        case DftOp::Before:
        case DftOp::Simult:
        case DftOp::InclusiveBefore:
            throw UnsupportedStructureError(
                "analyze_dft: no probability formula for a bare temporal operator node");
    }
    throw ModelError("analyze_dft: unknown node");
}

void check_disjoint(const std::vector<std::vector<EventId>>& per_module, const Model& m,
                    const char* who) {
    std::unordered_set<EventId> seen;
    for (const auto& ids : per_module) {
        for (EventId id : ids) {
            if (!seen.insert(id).second) {
                throw UnsupportedStructureError(
                    std::string(who) + ": event " + m.event(id).name +
                    " is shared between modules; the independence-based route does not apply");
            }
        }
    }
}

}  // namespace

AnalysisResult analyze_dft(const Model& m, double t, const AnalyticOptions& opts) {
    check_horizon(t);
    std::vector<DftPtr> modules;
    flatten_or(m.dft_top(), modules);

    std::vector<double> probs;
    std::vector<std::vector<EventId>> touched;
    double error = 0.0;
    for (const DftPtr& module : modules) {
        ModuleProbability mp = module_probability(m, module, t, opts);
        probs.push_back(mp.value);
        touched.push_back(std::move(mp.events));
        error += mp.error;
    }
    check_disjoint(touched, m, "analyze_dft");

    AnalysisResult result;
    result.model = m.name();
    result.kind = ModelKind::Dft;
    result.method = "dft-pie";
    result.time = t;
    result.value = union_probability(probs);
    // d(union)/d(p_i) lies in [0,1], so per-module quadrature errors add.
    result.error_bound = error + 1e-12;
    result.term_count = (1L << probs.size()) - 1;
    assert_probability_range(result.value, result.error_bound + opts.tol, "analyze_dft");
    return result;
}

namespace {

struct RelAccum {
    double error = 0.0;
    std::vector<std::vector<EventId>> touched;
};

void flatten_drbd(const DrbdPtr& e, DrbdOp op, std::vector<DrbdPtr>& out) {
    if (e && e->op == op) {
        flatten_drbd(e->left, op, out);
        flatten_drbd(e->right, op, out);
    } else {
        out.push_back(e);
    }
}

double reliability_of(const Model& m, const DrbdPtr& e, double t, const AnalyticOptions& opts,
                      RelAccum& acc) {
    if (!e) throw ModelError("analyze_drbd: null node");
    switch (e->op) {
        case DrbdOp::Block:
            acc.touched.push_back({e->id});
            return m.distribution(e->id).survival(t);
        case DrbdOp::Always:
            return 0.0;  // failed at time zero, never operational past any t
        case DrbdOp::Never:
            return 1.0;
        case DrbdOp::And:
        case DrbdOp::Or: {
            std::vector<DrbdPtr> parts;
            flatten_drbd(e, e->op, parts);
            std::vector<double> rels;
            rels.reserve(parts.size());
            for (const DrbdPtr& part : parts) rels.push_back(reliability_of(m, part, t, opts, acc));
            return e->op == DrbdOp::And ? rel_series(rels) : rel_parallel(rels);
        }
        case DrbdOp::Wsp: {
            if (!e->left || e->left->op != DrbdOp::Block) {
                throw UnsupportedStructureError(
                    "analyze_drbd: a spare construct's main part must be a block for the "
                    "reliability formula");
            }
            const QuadResult q = rel_wsp(m.distribution(e->left->id), m.spare_spec(e->id), t, opts);
            acc.error += q.error_bound;
            acc.touched.push_back({e->left->id, e->id});
            return q.value;
        }
        case DrbdOp::After:
        case DrbdOp::Simult:
        case DrbdOp::InclusiveAfter:
            throw UnsupportedStructureError(
                "analyze_drbd: no reliability formula for a bare temporal operator node outside "
                "a spare construct");
    }
    throw ModelError("analyze_drbd: unknown node");
}

}  // namespace

AnalysisResult analyze_drbd(const Model& m, double t, const AnalyticOptions& opts) {
    check_horizon(t);
    RelAccum acc;
    const double reliability = reliability_of(m, m.drbd_top(), t, opts, acc);
    check_disjoint(acc.touched, m, "analyze_drbd");

    AnalysisResult result;
    result.model = m.name();
    result.kind = ModelKind::Drbd;
    result.method = "drbd-structural";
    result.time = t;
    result.value = reliability;
    result.error_bound = acc.error + 1e-12;
    result.term_count = 1;
    assert_probability_range(result.value, result.error_bound + opts.tol, "analyze_drbd");
    return result;
}

}  // namespace dynrel
