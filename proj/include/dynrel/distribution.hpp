#pragma once

#include <string>

#include "dynrel/error.hpp"
#include "dynrel/ext_time.hpp"

namespace dynrel {

enum class DistKind : std::uint8_t { Exponential, Weibull };

/// Parametric lifetime law of a basic event. Immutable value type.
class Distribution {
public:
    static Distribution exponential(double rate);
    static Distribution weibull(double shape, double scale);

    DistKind kind() const { return kind_; }
    double rate() const { return rate_; }    // Exponential only
    double shape() const { return shape_; }  // Weibull only
    double scale() const { return scale_; }  // Weibull only

    /// F(t) = P(lifetime <= t). Nondecreasing, F(0) = 0.
    double cdf(double t) const;

    /// Density f(t); may be +infinity at t = 0 for Weibull shape < 1.
    double pdf(double t) const;

    /// S(t) = 1 - F(t), computed directly for accuracy in the far tail.
    double survival(double t) const;

    /// Inverse-CDF transform of a uniform(0,1) draw; deterministic in u.
    double quantile(double u) const;

    bool operator==(const Distribution&) const = default;

private:
    Distribution(DistKind k, double rate, double shape, double scale)
        : kind_(k), rate_(rate), shape_(shape), scale_(scale) {}

    DistKind kind_;
    double rate_;
    double shape_;
    double scale_;
};

/// Lifetime law of a spare: active law plus a dormancy factor in [0,1]
/// attenuating the failure rate while dormant. 0 is a cold spare (no dormant
/// failures), 1 a hot spare (dormant law equals the active law). On
/// activation the active lifetime restarts fresh.
class SpareSpec {
public:
    SpareSpec(Distribution active, double dormancy_factor);

    const Distribution& active() const { return active_; }
    double dormancy_factor() const { return alpha_; }
    bool cold() const { return alpha_ == 0.0; }

    double dormant_cdf(double t) const;
    double dormant_survival(double t) const;

    /// Dormant lifetime for a uniform draw; NEVER for a cold spare.
    ExtTime dormant_quantile(double u) const;

    /// Joint density of "spare survives dormancy until activation at v, then
    /// fails active at u": S_dormant(v) * f_active(u - v). Requires v <= u.
    double active_conditional_density(double v, double u) const;

    bool operator==(const SpareSpec&) const = default;

private:
    Distribution dormant_law() const;  // valid only for alpha > 0

    Distribution active_;
    double alpha_;
};

}  // namespace dynrel
