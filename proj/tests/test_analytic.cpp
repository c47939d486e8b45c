#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "dynrel/analytic.hpp"
#include "dynrel/convert.hpp"
#include "dynrel/pie.hpp"

#include "corpus.hpp"

using namespace dynrel;
using doctest::Approx;

namespace {

// Closed form for a priority pair of unit exponentials by time t.
double pand_closed_form(double t) {
    return -std::expm1(-t) + 0.5 * std::expm1(-2.0 * t);
}

}  // namespace

TEST_CASE("two-event gate formulas") {
    CHECK(prob_and(0.5, 0.5) == 0.25);
    CHECK(prob_and(1.0, 0.37) == 0.37);
    const double f1 = -std::expm1(-1.0);  // unit exponential at t=1
    const double f2 = -std::expm1(-2.0);
    CHECK(prob_and(f1, f2) == Approx(0.5465767).epsilon(1e-6));
    CHECK(prob_or(0.5, 0.5) == 0.75);
    CHECK(prob_or(0.123, 0.0) == 0.123);
    CHECK(prob_or(f1, f1) == Approx(0.8646647167633873).epsilon(1e-9));  // 1 - e^-2
    CHECK_THROWS_AS(prob_and(-0.1, 0.5), DomainError);
    CHECK_THROWS_AS(prob_or(0.5, 1.1), DomainError);
}

TEST_CASE("priority-and quadrature matches the closed form") {
    const auto e1 = Distribution::exponential(1.0);
    CHECK(prob_pand(e1, e1, 0.0).value == 0.0);
    for (double t : {0.5, 1.0, 2.0}) {
        CHECK(prob_pand(e1, e1, t).value == Approx(pand_closed_form(t)).epsilon(1e-9));
    }
    CHECK(prob_pand(e1, e1, 1.0).value == Approx(0.1997882).epsilon(1e-6));
    // Long horizon: either of two iid continuous lifetimes is equally likely
    // to come first.
    CHECK(prob_pand(e1, e1, 50.0).value == Approx(0.5).epsilon(1e-4));
}

TEST_CASE("spare-pair failure probability") {
    const auto e1 = Distribution::exponential(1.0);
    const SpareSpec cold(e1, 0.0);
    const SpareSpec hot(e1, 1.0);

    CHECK(prob_wsp(e1, cold, 0.0).value == 0.0);
    // Cold standby of iid unit exponentials: 1 - e^-t - t e^-t.
    CHECK(prob_wsp(e1, cold, 1.0).value == Approx(0.26424111765711533).epsilon(1e-7));
    // Hot standby of iid unit exponentials degenerates to an AND pair:
    // (1 - e^-1)^2 = 0.3995764...
    const double and_pair = std::pow(-std::expm1(-1.0), 2.0);
    CHECK(prob_wsp(e1, hot, 1.0).value == Approx(and_pair).epsilon(1e-6));
}

TEST_CASE("series and parallel composition") {
    const double abc[] = {0.9, 0.8, 0.7};
    CHECK(rel_series(abc) == Approx(0.504).epsilon(1e-15));
    CHECK(rel_series(std::vector<double>{}) == 1.0);
    const double single[] = {0.42};
    CHECK(rel_series(single) == 0.42);
    const double ab[] = {0.9, 0.8};
    CHECK(rel_parallel(ab) == Approx(0.98).epsilon(1e-15));
    CHECK(rel_parallel(single) == 0.42);
    const double halves[] = {0.5, 0.5, 0.5};
    CHECK(rel_parallel(halves) == Approx(0.875).epsilon(1e-15));
    CHECK_THROWS_AS(rel_series(std::vector<double>{1.2}), DomainError);
}

TEST_CASE("spare reliability complements the failure probability") {
    const auto e1 = Distribution::exponential(1.0);
    const SpareSpec cold(e1, 0.0);
    const SpareSpec hot(e1, 1.0);
    CHECK(rel_wsp(e1, cold, 0.0).value == 1.0);
    CHECK(rel_wsp(e1, cold, 1.0).value == Approx(0.7357588823428847).epsilon(1e-7));
    CHECK(rel_wsp(e1, hot, 1.0).value ==
          Approx(1.0 - std::pow(-std::expm1(-1.0), 2.0)).epsilon(1e-6));
}

TEST_CASE("the two spare reliability routes agree within twice the tolerance") {
    const AnalyticOptions opts;
    const auto laws = {Distribution::exponential(1.0), Distribution::weibull(2.0, 1.5)};
    for (const Distribution& main : laws) {
        for (double alpha : {0.0, 0.3, 1.0}) {
            const SpareSpec sp(Distribution::exponential(0.8), alpha);
            for (double t : {0.5, 1.0, 3.0}) {
                const double via_complement = rel_wsp(main, sp, t, opts).value;
                const double direct = rel_wsp_direct(main, sp, t, opts).value;
                CHECK(std::abs(via_complement - direct) <= 2.0 * opts.tol);
            }
        }
    }
}

TEST_CASE("inclusion-exclusion expansion enumerates signed subsets") {
    CHECK(pie_expand(1).size() == 1);
    const auto three = pie_expand(2);
    REQUIRE(three.size() == 3);
    CHECK(three[0].subset == 0b01);
    CHECK(three[0].sign == 1);
    CHECK(three[1].subset == 0b10);
    CHECK(three[1].sign == 1);
    CHECK(three[2].subset == 0b11);
    CHECK(three[2].sign == -1);
    CHECK(pie_expand(6).size() == 63);
    CHECK(pie_expand(20).size() == (1u << 20) - 1);
    CHECK_THROWS_AS(pie_expand(0), CapacityError);
    CHECK_THROWS_AS(pie_expand(21), CapacityError);
}

TEST_CASE("union probability equals the complement-product identity") {
    const double two[] = {0.1, 0.2};
    CHECK(union_probability(two) == Approx(0.28).epsilon(1e-15));
    const double one[] = {0.77};
    CHECK(union_probability(one) == 0.77);
    const double six[] = {0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
    CHECK(union_probability(six) == Approx(0.984375).epsilon(1e-13));

    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_int_distribution<int> size(1, 10);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> ps(size(rng));
        for (double& p : ps) p = u01(rng);
        double complement = 1.0;
        for (double p : ps) complement *= 1.0 - p;
        CHECK(std::abs(union_probability(ps) - (1.0 - complement)) <= 1e-12);
    }
    CHECK_THROWS_AS(union_probability(std::vector<double>{0.5, 1.5}), DomainError);
}

TEST_CASE("fault-tree analysis of a single basic event is its cdf") {
    Model m("one", ModelKind::Dft);
    const EventId a = m.add_basic("A", Distribution::exponential(1.0));
    m.set_top(dft::basic(a));
    const AnalysisResult r = analyze_dft(m, 1.0);
    CHECK(r.value == Approx(0.6321205588285577).epsilon(1e-9));
    CHECK(r.method == "dft-pie");
    CHECK(r.term_count == 1);
}

TEST_CASE("two-module union with fixed cdf values") {
    // Rates chosen so the module cdfs at t=1 are exactly 0.1 and 0.2.
    Model m("two", ModelKind::Dft);
    const EventId a = m.add_basic("A", Distribution::exponential(-std::log(0.9)));
    const EventId b = m.add_basic("B", Distribution::exponential(-std::log(0.8)));
    m.set_top(dft::gate_or(dft::basic(a), dft::basic(b)));
    const AnalysisResult r = analyze_dft(m, 1.0);
    CHECK(r.value == Approx(0.28).epsilon(1e-12));
    CHECK(r.term_count == 3);
}

TEST_CASE("fault-tree analysis rejects sharing and bare temporal nodes") {
    Model m("shared", ModelKind::Dft);
    const EventId a = m.add_basic("A", Distribution::exponential(1.0));
    const EventId b = m.add_basic("B", Distribution::exponential(1.0));
    m.set_top(dft::gate_or(dft::basic(a), dft::gate_and(dft::basic(a), dft::basic(b))));
    CHECK_THROWS_AS(analyze_dft(m, 1.0), UnsupportedStructureError);

    Model temporal("temporal", ModelKind::Dft);
    const EventId x = temporal.add_basic("X", Distribution::exponential(1.0));
    const EventId y = temporal.add_basic("Y", Distribution::exponential(1.0));
    temporal.set_top(dft::before(dft::basic(x), dft::basic(y)));
    CHECK_THROWS_AS(analyze_dft(temporal, 1.0), UnsupportedStructureError);

    Model nested("nested", ModelKind::Dft);
    const EventId p = nested.add_basic("P", Distribution::exponential(1.0));
    const EventId q = nested.add_basic("Q", Distribution::exponential(1.0));
    const EventId s = nested.add_basic("S", Distribution::exponential(1.0));
    nested.set_top(dft::gate_and(dft::gate_or(dft::basic(p), dft::basic(q)), dft::basic(s)));
    CHECK_THROWS_AS(analyze_dft(nested, 1.0), UnsupportedStructureError);
}

TEST_CASE("block-diagram analysis by structural recursion") {
    Model m("one", ModelKind::Drbd);
    const EventId a = m.add_basic("A", Distribution::exponential(1.0));
    m.set_top(drbd::block(a));
    const AnalysisResult r = analyze_drbd(m, 1.0);
    CHECK(r.value == Approx(0.36787944117144233).epsilon(1e-9));
    CHECK(r.method == "drbd-structural");
    CHECK(r.term_count == 1);

    // Series of two blocks with survival 0.9 and 0.8 at the probed time.
    Model series("series", ModelKind::Drbd);
    const EventId x = series.add_basic("X", Distribution::exponential(-std::log(0.9)));
    const EventId y = series.add_basic("Y", Distribution::exponential(-std::log(0.8)));
    series.set_top(drbd::gate_and(drbd::block(x), drbd::block(y)));
    CHECK(analyze_drbd(series, 1.0).value == Approx(0.72).epsilon(1e-12));

    Model parallel("parallel", ModelKind::Drbd);
    const EventId p = parallel.add_basic("P", Distribution::exponential(-std::log(0.9)));
    const EventId q = parallel.add_basic("Q", Distribution::exponential(-std::log(0.8)));
    parallel.set_top(drbd::gate_or(drbd::block(p), drbd::block(q)));
    CHECK(analyze_drbd(parallel, 1.0).value == Approx(0.98).epsilon(1e-12));
}

TEST_CASE("block-diagram analysis rejects bare temporal operators") {
    Model m("temporal", ModelKind::Drbd);
    const EventId a = m.add_basic("A", Distribution::exponential(1.0));
    const EventId b = m.add_basic("B", Distribution::exponential(1.0));
    m.set_top(drbd::inclusive_after(drbd::block(a), drbd::block(b)));
    CHECK_THROWS_AS(analyze_drbd(m, 1.0), UnsupportedStructureError);

    Model after_model("after", ModelKind::Drbd);
    const EventId x = after_model.add_basic("X", Distribution::exponential(1.0));
    const EventId y = after_model.add_basic("Y", Distribution::exponential(1.0));
    after_model.set_top(drbd::after(drbd::block(x), drbd::block(y)));
    CHECK_THROWS_AS(analyze_drbd(after_model, 1.0), UnsupportedStructureError);
}

TEST_CASE("negative horizons are rejected") {
    Model m("one", ModelKind::Dft);
    const EventId a = m.add_basic("A", Distribution::exponential(1.0));
    m.set_top(dft::basic(a));
    CHECK_THROWS_AS(analyze_dft(m, -1.0), DomainError);
}

TEST_CASE("drive-by-wire model crosses routes") {
    const Model m = corpus::parse_or_die(corpus::dbw_dft_dsl());
    const Model converted = convert_model(m);
    const AnalysisResult failure = analyze_dft(m, 1000.0);
    const AnalysisResult survival = analyze_drbd(converted, 1000.0);
    CHECK(failure.term_count == 63);
    CHECK(failure.value + survival.value == Approx(1.0).epsilon(1e-9));
}
