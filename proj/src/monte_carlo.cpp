#include "dynrel/monte_carlo.hpp"

#include <cmath>
#include <unordered_set>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dynrel/eval.hpp"

namespace dynrel {

namespace {

struct DftSpareSite {
    DftPtr main;
    EventId spare;
    SpareSpec spec;
};

struct DrbdSpareSite {
    DrbdPtr main;
    EventId spare;
    SpareSpec spec;
};

// Everything the per-scenario loop needs, resolved once per run.
struct SamplingPlan {
    std::vector<std::pair<EventId, Distribution>> ordinary;
    std::vector<DftSpareSite> dft_spares;    // post-order: inner spares first
    std::vector<DrbdSpareSite> drbd_spares;
    std::uint32_t stride = 0;
};

void collect_dft_spares(const DftPtr& e, const Model& m, std::unordered_set<EventId>& seen,
                        std::vector<DftSpareSite>& out) {
    if (!e) return;
    collect_dft_spares(e->left, m, seen, out);
    collect_dft_spares(e->right, m, seen, out);
    if (e->op == DftOp::Wsp) {
        if (!seen.insert(e->id).second) {
            throw ModelError("sample_scenario: spare " + m.event(e->id).name +
                             " is adopted by more than one wsp node");
        }
        out.push_back({e->left, e->id, m.spare_spec(e->id)});
    }
}

void collect_drbd_spares(const DrbdPtr& e, const Model& m, std::unordered_set<EventId>& seen,
                         std::vector<DrbdSpareSite>& out) {
    if (!e) return;
    collect_drbd_spares(e->left, m, seen, out);
    collect_drbd_spares(e->right, m, seen, out);
    if (e->op == DrbdOp::Wsp) {
        if (!seen.insert(e->id).second) {
            throw ModelError("sample_scenario: spare " + m.event(e->id).name +
                             " is adopted by more than one wsp node");
        }
        out.push_back({e->left, e->id, m.spare_spec(e->id)});
    }
}

SamplingPlan make_plan(const Model& m) {
    SamplingPlan plan;
    std::unordered_set<EventId> adopted;
    if (m.kind() == ModelKind::Dft) {
        collect_dft_spares(m.dft_top(), m, adopted, plan.dft_spares);
    } else {
        collect_drbd_spares(m.drbd_top(), m, adopted, plan.drbd_spares);
    }
    for (EventId id = 0; id < m.event_count(); ++id) {
        const EventDecl& decl = m.event(id);
        if (decl.is_spare) {
            if (!adopted.count(id)) {
                throw ModelError("sample_scenario: spare " + decl.name +
                                 " has no associated main part (no wsp node adopts it)");
            }
        } else {
            plan.ordinary.emplace_back(id, decl.law);
        }
    }
    plan.stride = static_cast<std::uint32_t>(m.draws_per_scenario());
    return plan;
}

// Dormant draw first, then the active draw; the active draw is consumed even
// when the dormant branch wins so that every scenario reads a fixed number
// of stream positions.
template <typename Site, typename EvalMain>
void sample_spare(const Site& site, EvalMain&& eval_main, ScenarioRng& rng, Assignment& a) {
    const double u_dormant = rng.next_u01();
    const double u_active = rng.next_u01();
    const ExtTime dormant_life = site.spec.dormant_quantile(u_dormant);
    const ExtTime main_failure = eval_main(site.main, a);
    if (dormant_life <= main_failure) {
        a.set_spare(site.spare, {ExtTime::never(), dormant_life});
    } else {
        const double active_life = site.spec.active().quantile(u_active);
        a.set_spare(site.spare, {main_failure.delayed_by(active_life), ExtTime::never()});
    }
}

void sample_into(const SamplingPlan& plan, ScenarioRng& rng, Assignment& a) {
    for (const auto& [id, law] : plan.ordinary) {
        a.set(id, ExtTime::finite(law.quantile(rng.next_u01())));
    }
    for (const DftSpareSite& site : plan.dft_spares) {
        sample_spare(site, [](const DftPtr& e, const Assignment& a2) { return eval_dft(e, a2); },
                     rng, a);
    }
    for (const DrbdSpareSite& site : plan.drbd_spares) {
        sample_spare(site, [](const DrbdPtr& e, const Assignment& a2) { return eval_drbd(e, a2); },
                     rng, a);
    }
}

ExtTime top_failure_time(const Model& m, const Assignment& a) {
    return m.kind() == ModelKind::Dft ? eval_dft(m.dft_top(), a) : eval_drbd(m.drbd_top(), a);
}

void check_run_args(double t, long long n) {
    if (std::isnan(t) || std::isinf(t) || t < 0.0) {
        throw DomainError("estimate: time must be a finite nonnegative real");
    }
    if (n < 1) throw DomainError("estimate: sample count must be at least 1");
}

long long failure_count_serial(const Model& m, double t, long long n, std::uint64_t seed) {
    const SamplingPlan plan = make_plan(m);
    const ExtTime horizon = ExtTime::finite(t);
    long long failures = 0;
    Assignment a(m.event_count());
    for (long long i = 0; i < n; ++i) {
        ScenarioRng rng(seed, static_cast<std::uint64_t>(i), plan.stride);
        sample_into(plan, rng, a);
        failures += top_failure_time(m, a) <= horizon ? 1 : 0;
    }
    return failures;
}

long long failure_count_parallel(const Model& m, double t, long long n, std::uint64_t seed,
                                 int workers) {
#ifdef _OPENMP
    const SamplingPlan plan = make_plan(m);
    const ExtTime horizon = ExtTime::finite(t);
    const int thread_count = workers > 0 ? workers : omp_get_max_threads();
    long long failures = 0;

#pragma omp parallel num_threads(thread_count)
    {
        Assignment a(m.event_count());
#pragma omp for reduction(+ : failures) schedule(static)
        for (long long i = 0; i < n; ++i) {
            ScenarioRng rng(seed, static_cast<std::uint64_t>(i), plan.stride);
            sample_into(plan, rng, a);
            failures += top_failure_time(m, a) <= horizon ? 1 : 0;
        }
    }
    return failures;
#else
    (void)workers;
    return failure_count_serial(m, t, n, seed);
#endif
}

Estimate from_count(long long failures, long long n, std::uint64_t seed, bool complement) {
    Estimate e;
    e.n = n;
    e.seed = seed;
    const double p = static_cast<double>(failures) / static_cast<double>(n);
    e.p_hat = complement ? 1.0 - p : p;
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(n));
    e.ci_lo = std::max(0.0, e.p_hat - 1.96 * e.std_err);
    e.ci_hi = std::min(1.0, e.p_hat + 1.96 * e.std_err);
    return e;
}

}  // namespace

Assignment sample_scenario(const Model& m, ScenarioRng& rng) {
    const SamplingPlan plan = make_plan(m);
    Assignment a(m.event_count());
    sample_into(plan, rng, a);
    return a;
}

Estimate estimate_unreliability(const Model& m, double t, long long n, std::uint64_t seed,
                                int workers) {
    check_run_args(t, n);
    return from_count(failure_count_parallel(m, t, n, seed, workers), n, seed, false);
}

Estimate estimate_reliability(const Model& m, double t, long long n, std::uint64_t seed,
                              int workers) {
    check_run_args(t, n);
    return from_count(failure_count_parallel(m, t, n, seed, workers), n, seed, true);
}

Estimate estimate_unreliability_serial(const Model& m, double t, long long n, std::uint64_t seed) {
    check_run_args(t, n);
    return from_count(failure_count_serial(m, t, n, seed), n, seed, false);
}

}  // namespace dynrel
