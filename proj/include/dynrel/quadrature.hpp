#pragma once

#include <array>
#include <cmath>
#include <string>

#include "dynrel/error.hpp"

namespace dynrel {

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0;
    long evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae and weights on [-1,1] (positive half).
inline constexpr std::array<double, 8> kGkNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename F>
void gk15_panel(F&& f, double a, double b, double& value, double& err) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double lo = f(center - half * kGkNodes[i]);
        const double hi = f(center + half * kGkNodes[i]);
        kronrod += kKronrodWeights[i] * (lo + hi);
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (lo + hi);
    }
    value = kronrod * half;
    // |K15 - G7| overestimates the Kronrod error on smooth panels; the
    // overshoot just costs a few extra bisections.
    err = std::abs((kronrod - gauss) * half);
}

// Refinement stops at this many panels per integrate() call; smooth
// integrands use a few dozen.
inline constexpr long kPanelBudget = 100000;

template <typename F>
void adapt(F&& f, double a, double b, double tol, int depth, QuadResult& acc, long& panels) {
    double value = 0.0;
    double err = 0.0;
    gk15_panel(f, a, b, value, err);
    acc.evaluations += 15;
    --panels;

    if (err <= tol || depth >= 52 || panels <= 0) {
        acc.value += value;
        acc.error_bound += std::isnan(err) ? std::abs(value) : err;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1, acc, panels);
    adapt(f, mid, b, 0.5 * tol, depth + 1, acc, panels);
}

}  // namespace detail

/// Adaptive estimate of the integral of f over [a,b] with estimated absolute
/// error <= tol. Deterministic. Throws NumericError (carrying the best
/// estimate and the error actually achieved) when refinement bottoms out.
template <typename F>
QuadResult integrate(F&& f, double a, double b, double tol) {
    if (std::isnan(a) || std::isnan(b) || a > b) {
        throw DomainError("integrate: invalid interval [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
    }
    if (!(tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
    if (a == b) return {0.0, 0.0, 0};

    QuadResult acc;
    long panels = detail::kPanelBudget;
    detail::adapt(f, a, b, tol, 0, acc, panels);
    if (!(acc.error_bound <= tol) || std::isnan(acc.value)) {
        throw NumericError("integrate: failed to reach tolerance " + std::to_string(tol),
                           acc.value, acc.error_bound);
    }
    return acc;
}

}  // namespace dynrel
