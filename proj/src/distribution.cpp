#include "dynrel/distribution.hpp"

#include <cmath>

namespace dynrel {

namespace {

void check_time(double t, const char* who) {
    if (std::isnan(t) || t < 0.0) {
        throw DomainError(std::string(who) + ": time must be nonnegative, got " + std::to_string(t));
    }
}

void check_draw(double u) {
    if (!(u > 0.0) || !(u < 1.0)) {
        throw DomainError("quantile: draw must lie strictly inside (0,1), got " + std::to_string(u));
    }
}

}  // namespace

Distribution Distribution::exponential(double rate) {
    if (!(rate > 0.0) || std::isinf(rate)) {
        throw DomainError("exponential: rate must be positive and finite");
    }
    return Distribution(DistKind::Exponential, rate, 0.0, 0.0);
}

Distribution Distribution::weibull(double shape, double scale) {
    if (!(shape > 0.0) || std::isinf(shape)) {
        throw DomainError("weibull: shape must be positive and finite");
    }
    if (!(scale > 0.0) || std::isinf(scale)) {
        throw DomainError("weibull: scale must be positive and finite");
    }
    return Distribution(DistKind::Weibull, 0.0, shape, scale);
}

double Distribution::cdf(double t) const {
    check_time(t, "cdf");
    switch (kind_) {
        case DistKind::Exponential:
            return -std::expm1(-rate_ * t);
        case DistKind::Weibull:
            return -std::expm1(-std::pow(t / scale_, shape_));
    }
    return 0.0;
}

double Distribution::pdf(double t) const {
    check_time(t, "pdf");
    switch (kind_) {
        case DistKind::Exponential:
            return rate_ * std::exp(-rate_ * t);
        case DistKind::Weibull: {
            if (t == 0.0) {
                if (shape_ > 1.0) return 0.0;
                if (shape_ == 1.0) return 1.0 / scale_;
                return std::numeric_limits<double>::infinity();
            }
            const double z = t / scale_;
            return (shape_ / scale_) * std::pow(z, shape_ - 1.0) * std::exp(-std::pow(z, shape_));
        }
    }
    return 0.0;
}

double Distribution::survival(double t) const {
    check_time(t, "survival");
    switch (kind_) {
        case DistKind::Exponential:
            return std::exp(-rate_ * t);
        case DistKind::Weibull:
            return std::exp(-std::pow(t / scale_, shape_));
    }
    return 1.0;
}

double Distribution::quantile(double u) const {
    check_draw(u);
    const double neg_log_survival = -std::log1p(-u);
    switch (kind_) {
        case DistKind::Exponential:
            return neg_log_survival / rate_;
        case DistKind::Weibull:
            return scale_ * std::pow(neg_log_survival, 1.0 / shape_);
    }
    return 0.0;
}

SpareSpec::SpareSpec(Distribution active, double dormancy_factor)
    : active_(active), alpha_(dormancy_factor) {
    if (std::isnan(alpha_) || alpha_ < 0.0 || alpha_ > 1.0) {
        throw DomainError("spare: dormancy factor must lie in [0,1], got " +
                          std::to_string(dormancy_factor));
    }
}

Distribution SpareSpec::dormant_law() const {
    // Rate attenuated by alpha; for Weibull that is the scale stretched by
    // alpha^(-1/shape) so the hazard integral scales linearly in alpha.
    switch (active_.kind()) {
        case DistKind::Exponential:
            return Distribution::exponential(active_.rate() * alpha_);
        case DistKind::Weibull:
            return Distribution::weibull(active_.shape(),
                                         active_.scale() * std::pow(alpha_, -1.0 / active_.shape()));
    }
    throw DomainError("spare: unknown active law");
}

double SpareSpec::dormant_cdf(double t) const {
    if (cold()) {
        check_time(t, "dormant_cdf");
        return 0.0;
    }
    return dormant_law().cdf(t);
}

double SpareSpec::dormant_survival(double t) const {
    if (cold()) {
        check_time(t, "dormant_survival");
        return 1.0;
    }
    return dormant_law().survival(t);
}

ExtTime SpareSpec::dormant_quantile(double u) const {
    check_draw(u);
    if (cold()) return ExtTime::never();
    return ExtTime::finite(dormant_law().quantile(u));
}

double SpareSpec::active_conditional_density(double v, double u) const {
    check_time(v, "active_conditional_density");
    if (std::isnan(u) || u < v) {
        throw DomainError("active_conditional_density: spare cannot fail active before activation");
    }
    return dormant_survival(v) * active_.pdf(u - v);
}

}  // namespace dynrel
